#include "stratavol/suites.hpp"

#include "stratavol/characters.hpp"
#include "stratavol/coverings.hpp"
#include "stratavol/cumulants.hpp"
#include "stratavol/npoint.hpp"
#include "stratavol/partitions.hpp"
#include "stratavol/qseries.hpp"
#include "stratavol/shifted_symmetric.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace stratavol {

bool SuiteReport::pass() const {
    return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.pass; });
}

namespace {

// Every sorted key with at most max_parts parts and total at most max_total.
std::vector<CumulantKey> cumulant_keys(int max_parts, int max_total) {
    std::vector<CumulantKey> keys;
    for (int t = 1; t <= max_total; ++t)
        for (const IntPartition& p : enum_int_partitions(t))
            if (p.length() <= max_parts) keys.emplace_back(p.parts());
    return keys;
}

PropertyResult fail(PropertyResult r, std::string detail) {
    r.pass = false;
    r.detail = std::move(detail);
    return r;
}

}  // namespace

PropertyResult check_cumulant_series_oracle(int max_parts, int max_total, const Limits& limits) {
    PropertyResult r{"cumulant closed form = series oracle (n <= " + std::to_string(max_parts) +
                         ", |m| <= " + std::to_string(max_total) + ")",
                     true, ""};
    for (const CumulantKey& key : cumulant_keys(max_parts, max_total)) {
        const PiScalar a = elementary_cumulant(key, limits);
        const PiScalar b = elementary_cumulant_series_oracle(key);
        if (a != b) return fail(r, "<<" + key.to_string() + ">>: " + to_string(a) + " vs " + to_string(b));
    }
    return r;
}

PropertyResult check_covariance_formula(int kmax, const Limits& limits) {
    PropertyResult r{"two-part covariance formula (k, l <= " + std::to_string(kmax) + ")", true, ""};
    for (int k = 1; k <= kmax; ++k) {
        for (int l = 1; l <= kmax; ++l) {
            PiSum expected = PiSum(frak_z(k + l) * Rational(factorial(k + l)));
            expected -= PiSum(frak_z(k) * frak_z(l) * Rational(factorial(k) * factorial(l)));
            const PiScalar got = elementary_cumulant(CumulantKey{k, l}, limits);
            if (!(PiSum(got) == expected))
                return fail(r, "<<" + std::to_string(k) + "," + std::to_string(l) + ">> = " + to_string(got) +
                                   ", formula gives " + to_string(expected));
        }
    }
    return r;
}

PropertyResult check_one_part_formula(int kmax, const Limits& limits) {
    PropertyResult r{"one-part formula (k <= " + std::to_string(kmax) + ")", true, ""};
    for (int k = 1; k <= kmax; ++k) {
        const PiScalar expected = frak_z(k + 1) * Rational(factorial(k));
        const PiScalar got = elementary_cumulant(CumulantKey{k}, limits);
        if (got != expected) return fail(r, "<<" + std::to_string(k) + ">> = " + to_string(got));
    }
    return r;
}

PropertyResult check_cumulant_homogeneity_parity(int max_parts, int max_total, const Limits& limits) {
    PropertyResult r{"cumulant pi-homogeneity and parity (n <= " + std::to_string(max_parts) +
                         ", |m| <= " + std::to_string(max_total) + ")",
                     true, ""};
    for (const CumulantKey& key : cumulant_keys(max_parts, max_total)) {
        const PiScalar v = elementary_cumulant(key, limits);
        const int excess = key.total() - key.count();
        if (v.is_zero()) continue;
        if (excess % 2 != 0) return fail(r, "<<" + key.to_string() + ">> nonzero with |m| - n odd");
        if (v.pi_pow() != excess + 2) return fail(r, "<<" + key.to_string() + ">> has pi power " + std::to_string(v.pi_pow()));
    }
    return r;
}

PropertyResult check_conjugation_parity(int dmax) {
    PropertyResult r{"conjugation parity of f_m and p_k (|lambda| <= " + std::to_string(dmax) + ")", true, ""};
    for (int d = 1; d <= dmax; ++d) {
        for (const IntPartition& lambda : enum_int_partitions(d)) {
            const IntPartition conj = lambda.conjugate();
            for (int m = 2; m <= d; ++m) {
                Rational f = central_char_f(m, lambda);
                if (m % 2 == 0) f = -f;
                if (central_char_f(m, conj) != f) return fail(r, "f_" + std::to_string(m) + " at " + lambda.to_string());
            }
            for (int k = 1; k <= dmax + 1; ++k) {
                Rational p = p_eval(k, lambda);
                if (k % 2 == 0) p = -p;
                if (p_eval(k, conj) != p) return fail(r, "p_" + std::to_string(k) + " at " + lambda.to_string());
            }
        }
    }
    return r;
}

PropertyResult check_character_orthogonality(int dmax) {
    PropertyResult r{"character orthogonality (d <= " + std::to_string(dmax) + ")", true, ""};
    for (int d = 1; d <= dmax; ++d) {
        const auto parts = enum_int_partitions(d);
        const BigInt dfact = factorial(d);
        BigInt dims = 0;
        for (const IntPartition& lambda : parts) dims += dimension(lambda) * dimension(lambda);
        if (dims != dfact) return fail(r, "sum of squared dimensions at d = " + std::to_string(d));
        for (const IntPartition& a : parts) {
            for (const IntPartition& b : parts) {
                BigInt rows = 0, cols = 0;
                for (const IntPartition& c : parts) {
                    rows += class_size(c) * character(a, c) * character(b, c);
                    cols += character(c, a) * character(c, b);
                }
                const BigInt row_expected = a == b ? dfact : BigInt(0);
                const BigInt col_expected = a == b ? BigInt(dfact / class_size(a)) : BigInt(0);
                if (rows != row_expected) return fail(r, "rows " + a.to_string() + ", " + b.to_string());
                if (cols != col_expected) return fail(r, "columns " + a.to_string() + ", " + b.to_string());
            }
        }
    }
    return r;
}

PropertyResult check_transversality_bound(int nmax, const Limits& limits) {
    PropertyResult r{"transversality bound over Pi_n (n <= " + std::to_string(nmax) + ")", true, ""};
    for (int n = 1; n <= nmax; ++n) {
        const auto all = enum_set_partitions(n, limits.set_partition_n);
        for (const SetPartition& a : all) {
            for (const SetPartition& b : all) {
                const int excess = a.block_count() + b.block_count() - meet(a, b).block_count();
                if (excess > n) return fail(r, a.to_string() + " and " + b.to_string());
                if ((excess == n) != is_transversal(a, b))
                    return fail(r, "is_transversal disagrees at " + a.to_string() + ", " + b.to_string());
            }
        }
    }
    return r;
}

PropertyResult check_forest_identity(int nmax) {
    PropertyResult r{"spanning-forest identity (n <= " + std::to_string(nmax) + ")", true, ""};
    for (int n = 1; n <= nmax; ++n)
        for (const SetPartition& rho : enum_set_partitions(n))
            if (!t_poly_forest_oracle(rho)) return fail(r, "rho = " + rho.to_string());
    return r;
}

PropertyResult check_volume_pi_power(const Limits& limits) {
    PropertyResult r{"volume pi power = 2g (ten strata)", true, ""};
    const std::vector<IntPartition> strata = {{2}, {1, 1}, {4}, {3, 1}, {2, 2},
                                              {2, 1, 1}, {1, 1, 1, 1}, {6}, {5, 1}, {4, 2}};
    for (const IntPartition& mu : strata) {
        const VolumeResult v = volume(StratumSpec(mu), false, limits);
        if (v.volume.is_zero() || sgn(v.volume.coeff()) < 0)
            return fail(r, mu.to_string() + " has nonpositive volume " + to_string(v.volume));
        if (v.volume.pi_pow() != 2 * v.genus)
            return fail(r, mu.to_string() + " has pi power " + std::to_string(v.volume.pi_pow()));
    }
    return r;
}

PropertyResult check_simple_closed_form(int nmax, const Limits& limits) {
    PropertyResult r{"simple closed form = general pipeline (n <= " + std::to_string(nmax) + ")", true, ""};
    for (int n = 1; n <= nmax; ++n) {
        const PiScalar closed = c_simple(n);
        const PiScalar general = c_const(std::vector<int>(n, 2), limits);
        if (closed != general)
            return fail(r, "n = " + std::to_string(n) + ": " + to_string(closed) + " vs " + to_string(general));
    }
    return r;
}

PropertyResult check_covers_brute_force(int max_points, int dmax, const Limits& limits) {
    PropertyResult r{"Burnside = brute force (points <= " + std::to_string(max_points) +
                         ", entries in {2,3,4}, d <= " + std::to_string(dmax) + ")",
                     true, ""};
    std::vector<std::vector<int>> profiles{{}};
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        if (static_cast<int>(profiles[i].size()) == max_points) continue;
        for (int m = 2; m <= 4; ++m) {
            auto next = profiles[i];
            next.push_back(m);
            profiles.push_back(std::move(next));
        }
    }
    for (const auto& cycles : profiles) {
        const CoverProfile profile(cycles);
        for (int d = 1; d <= dmax; ++d) {
            const Rational burnside = cov_d(profile, d);
            const Rational brute = brute_force_hom_count(profile, d, false, limits.brute_force_d);
            if (burnside != brute)
                return fail(r, "all, profile (" + profile.to_string() + "), d = " + std::to_string(d) + ": " +
                                   to_string(burnside) + " vs " + to_string(brute));
        }
        if (profile.empty()) continue;  // Moebius inversion needs at least one branch point
        const QSeries connected = cov_connected_series(profile, dmax);
        for (int d = 1; d <= dmax; ++d) {
            const Rational brute = brute_force_hom_count(profile, d, true, limits.brute_force_d);
            if (connected[d] != brute)
                return fail(r, "connected, profile (" + profile.to_string() + "), d = " + std::to_string(d) + ": " +
                                   to_string(connected[d]) + " vs " + to_string(brute));
        }
    }
    return r;
}

PropertyResult check_cover_series_identities(int order) {
    PropertyResult r{"covering parity vanishing and connected nonnegativity (d <= " + std::to_string(order) + ")",
                     true, ""};
    const std::vector<std::vector<int>> profiles = {{2}, {3}, {2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {4, 2}};
    for (const auto& cycles : profiles) {
        const CoverProfile profile(cycles);
        int excess = 0;
        for (int m : cycles) excess += m - 1;
        const QSeries all = cov_series(profile, order);
        if (excess % 2 != 0 && !all.is_zero()) return fail(r, "(" + profile.to_string() + ") should vanish");
        const QSeries connected = cov_connected_series(profile, order);
        for (int d = 0; d <= order; ++d)
            if (sgn(connected[d]) < 0 || sgn(all[d]) < 0)
                return fail(r, "negative count for (" + profile.to_string() + ") at d = " + std::to_string(d));
    }
    return r;
}

PropertyResult check_qseries_identities(int order) {
    PropertyResult r{"q-series identities (up to q^" + std::to_string(order) + ")", true, ""};
    QSeries g2(order);
    g2[0] = make_rational(-1, 24);
    for (int n = 1; n <= order; ++n)
        for (int k = 1; k <= n; ++k)
            if (n % k == 0) g2[n] += k;
    if (q_average(IntPartition{1}, order) != g2) return fail(r, "<p_1>_q differs from G_2");
    if (!q_average(IntPartition{2}, order).is_zero()) return fail(r, "<p_2>_q is not zero");
    if (euler_series(order) * partition_count_series(order) != QSeries::constant(1, order))
        return fail(r, "(q)_inf * sum p(d) q^d differs from 1");
    return r;
}

PropertyResult check_theorem1(int order) {
    PropertyResult r{"one-point theta identity at s in {2, 3, 5/2} (N = " + std::to_string(order) + ")", true, ""};
    for (const Rational& s : {Rational(2), Rational(3), make_rational(5, 2)})
        if (!verify_theorem1_n1(EvaluatedPoint(s), order)) return fail(r, "s = " + to_string(s));
    return r;
}

namespace {

using SuiteBody = std::function<std::vector<PropertyResult>(const Limits&)>;

const std::vector<std::pair<std::string, SuiteBody>>& suites() {
    static const std::vector<std::pair<std::string, SuiteBody>> table = {
        {"oracles",
         [](const Limits& l) {
             return std::vector{check_cumulant_series_oracle(3, 8, l), check_covariance_formula(6, l),
                                check_one_part_formula(10, l)};
         }},
        {"parity",
         [](const Limits& l) {
             return std::vector{check_cumulant_homogeneity_parity(4, 10, l), check_conjugation_parity(7)};
         }},
        {"orthogonality", [](const Limits&) { return std::vector{check_character_orthogonality(6)}; }},
        {"transversality", [](const Limits& l) { return std::vector{check_transversality_bound(6, l)}; }},
        {"forest", [](const Limits&) { return std::vector{check_forest_identity(5)}; }},
        {"volumes", [](const Limits& l) { return std::vector{check_volume_pi_power(l)}; }},
        {"simple", [](const Limits& l) { return std::vector{check_simple_closed_form(8, l)}; }},
        {"covers",
         [](const Limits& l) {
             return std::vector{check_covers_brute_force(3, std::min(4, l.brute_force_d), l),
                                check_cover_series_identities(10)};
         }},
        {"qseries", [](const Limits&) { return std::vector{check_qseries_identities(20)}; }},
        {"theorem1", [](const Limits&) { return std::vector{check_theorem1(30)}; }},
    };
    return table;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, body] : suites()) names.push_back(name);
    names.push_back("all");
    return names;
}

SuiteReport run_suite(const std::string& name, const Limits& limits) {
    SuiteReport report{name, {}};
    bool found = false;
    for (const auto& [suite, body] : suites()) {
        if (name != "all" && name != suite) continue;
        found = true;
        for (PropertyResult& p : body(limits)) report.results.push_back(std::move(p));
    }
    if (!found) throw DomainError("unknown verification suite '" + name + "'");
    return report;
}

}  // namespace stratavol
