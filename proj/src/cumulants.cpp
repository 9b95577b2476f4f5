#include "stratavol/cumulants.hpp"

#include "stratavol/shifted_symmetric.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>

namespace stratavol {

// ---- value types ----------------------------------------------------------

CumulantKey::CumulantKey(std::vector<int> m) : m_(std::move(m)) {
    if (m_.empty()) throw DomainError("cumulant key must be nonempty");
    for (int x : m_)
        if (x < 1) throw DomainError("cumulant key entries must be positive");
    std::sort(m_.begin(), m_.end(), std::greater<>());
}

int CumulantKey::total() const { return std::accumulate(m_.begin(), m_.end(), 0); }

std::string CumulantKey::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < m_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(m_[i]);
    }
    return s;
}

WickGroups::WickGroups(std::vector<IntPartition> groups) : groups_(std::move(groups)) {
    if (groups_.empty()) throw DomainError("Wick groups must be nonempty");
    std::vector<int> labels;
    for (std::size_t g = 0; g < groups_.size(); ++g) {
        if (groups_[g].empty()) throw DomainError("Wick groups must not be empty partitions");
        for (int part : groups_[g].parts()) {
            parts_.push_back(part);
            labels.push_back(static_cast<int>(g));
        }
    }
    rho_ = SetPartition::from_labels(labels);
}

int WickGroups::total_weight() const {
    int w = 0;
    for (int p : parts_) w += p + 1;
    return w;
}

StratumSpec::StratumSpec(IntPartition mu) : mu_(std::move(mu)) {
    if (mu_.empty()) throw DomainError("empty μ: a stratum needs at least one zero");
    if (mu_.size() % 2 != 0)
        throw DomainError("|μ| must be even (no such stratum: |μ| = 2g-2, got |μ| = " +
                          std::to_string(mu_.size()) + ")");
}

std::vector<int> StratumSpec::shifted_profile() const {
    std::vector<int> m = mu_.parts();
    for (int& x : m) ++x;
    return m;
}

std::string to_string(VolumeRoute r) {
    return r == VolumeRoute::general ? "general" : "simple-closed-form";
}

// ---- elementary cumulants -------------------------------------------------

namespace {

struct CumulantMemo {
    std::shared_mutex mutex;
    std::map<std::vector<int>, PiScalar> values;
};

CumulantMemo& cumulant_memo() {
    static CumulantMemo memo;
    return memo;
}

// frak_z(j) / pi^j, zero for odd or negative j
Rational frak_z_rational(int j) { return frak_z(j).coeff(); }

}  // namespace

PiScalar elementary_cumulant(const CumulantKey& key, const Limits& limits) {
    const int n = key.count();
    if (n > limits.set_partition_n)
        throw ResourceError("elementary cumulant with " + std::to_string(n) + " parts exceeds the cap " +
                            std::to_string(limits.set_partition_n));
    auto& memo = cumulant_memo();
    {
        std::shared_lock lock(memo.mutex);
        if (auto it = memo.values.find(key.parts()); it != memo.values.end()) return it->second;
    }

    const std::vector<int>& m = key.parts();
    const int total = key.total();
    const int pi_pow = total - n + 2;  // every zeta product in the sum has this degree

    // The alpha-term only depends on the multiset of (block size, block sum) pairs.
    std::map<std::vector<std::pair<int, int>>, Rational> by_signature;
    std::vector<std::pair<int, int>> sig;
    Rational sum = 0;

    for_each_set_partition(n, -1, limits.set_partition_n, [&](const std::vector<int>& labels, int l) {
        sig.assign(l, {0, 0});
        for (int i = 0; i < n; ++i) {
            ++sig[labels[i]].first;
            sig[labels[i]].second += m[i];
        }
        std::sort(sig.begin(), sig.end());
        auto it = by_signature.find(sig);
        if (it == by_signature.end()) {
            Rational term;
            if (l == 1) {
                term = Rational(factorial(total)) * frak_z_rational(total - n + 2);
            } else {
                // (l-2)! [t^{l-2}] prod_k sum_d |m_k|! z(|m_k| - |alpha_k| - d + 1) t^d / d!
                const int top = l - 2;
                std::vector<Rational> poly(top + 1, Rational(0));
                poly[0] = 1;
                for (const auto& [size, msum] : sig) {
                    std::vector<Rational> factor(top + 1);
                    const Rational mfact(factorial(msum));
                    for (int d = 0; d <= top; ++d)
                        factor[d] = mfact * frak_z_rational(msum - size - d + 1) / Rational(factorial(d));
                    std::vector<Rational> next(top + 1, Rational(0));
                    for (int a = 0; a <= top; ++a) {
                        if (sgn(poly[a]) == 0) continue;
                        for (int b = 0; a + b <= top; ++b) next[a + b] += poly[a] * factor[b];
                    }
                    poly = std::move(next);
                }
                term = Rational(factorial(top)) * poly[top];
                if ((l - 1) % 2) term = -term;
            }
            it = by_signature.emplace(sig, std::move(term)).first;
        }
        sum += it->second;
    });

    PiScalar result(sum, pi_pow);
    std::unique_lock lock(memo.mutex);
    memo.values.emplace(key.parts(), result);
    return result;
}

// ---- Wick rule ------------------------------------------------------------

WickResult wick_leading(const WickGroups& groups, const Limits& limits) {
    const auto& parts = groups.labelled_parts();
    const int n = static_cast<int>(parts.size());
    if (n > limits.set_partition_n)
        throw ResourceError("Wick sum over " + std::to_string(n) + " labelled parts exceeds the cap " +
                            std::to_string(limits.set_partition_n));
    const SetPartition& rho = groups.rho();
    const int expected_blocks = n - rho.block_count() + 1;

    WickResult r;
    r.hbar_order = groups.total_weight() - rho.block_count() + 1;
    for (const SetPartition& alpha : enum_complementary(rho, limits.set_partition_n)) {
        if (alpha.block_count() != expected_blocks)
            throw std::logic_error("complementary partition with unexpected block count");
        PiScalar prod = PiScalar::rational(1);
        for (const auto& block : alpha.blocks()) {
            std::vector<int> sub;
            for (int i : block) sub.push_back(parts[i]);
            prod *= elementary_cumulant(CumulantKey(std::move(sub)), limits);
            if (prod.is_zero()) break;
        }
        r.leading += prod;  // throws on inhomogeneous pi powers
    }
    return r;
}

// ---- leading constants and volumes ----------------------------------------

PiScalar c_const(const std::vector<int>& m_in, const Limits& limits) {
    if (m_in.empty()) throw DomainError("c_const: profile must be nonempty");
    for (int x : m_in)
        if (x < 2) throw DomainError("c_const: profile entries must be >= 2");
    std::vector<int> m = m_in;
    std::sort(m.begin(), m.end(), std::greater<>());
    const int s = static_cast<int>(m.size());
    const int total = std::accumulate(m.begin(), m.end(), 0);

    std::vector<std::vector<std::pair<IntPartition, Rational>>> expansions;
    for (int k : m) {
        const PExpansion e = f_top_expansion(k);
        expansions.emplace_back(e.terms().begin(), e.terms().end());
    }

    // Wick values are symmetric in the groups; memoize on the sorted group list.
    std::map<std::vector<IntPartition>, PiScalar> wick_memo;
    PiScalar sum;
    std::vector<std::size_t> choice(s, 0);
    while (true) {
        std::vector<IntPartition> groups;
        Rational coeff = 1;
        for (int i = 0; i < s; ++i) {
            groups.push_back(expansions[i][choice[i]].first);
            coeff *= expansions[i][choice[i]].second;
        }
        std::sort(groups.begin(), groups.end());
        auto it = wick_memo.find(groups);
        if (it == wick_memo.end()) {
            const WickResult w = wick_leading(WickGroups(groups), limits);
            if (w.hbar_order != total + 1) throw std::logic_error("c_const: hbar order mismatch");
            it = wick_memo.emplace(groups, w.leading).first;
        }
        sum += it->second * coeff;

        int i = s - 1;
        while (i >= 0 && ++choice[i] == expansions[i].size()) choice[i--] = 0;
        if (i < 0) break;
    }
    return sum / Rational(factorial(total));
}

PiScalar c_simple(int n) {
    if (n < 1) throw DomainError("c_simple: n must be >= 1");
    if ((n + 2) % 2 != 0) return {};
    PiScalar sum;
    // even partitions of n + 2 are doubles of partitions of (n + 2) / 2
    for (const IntPartition& half : enum_int_partitions((n + 2) / 2)) {
        std::vector<int> parts = half.parts();
        for (int& p : parts) p *= 2;
        const IntPartition mu(parts);
        const int l = mu.length();
        BigInt dfacts = 1;
        PiScalar z = PiScalar::rational(1);
        for (int p : parts) {
            dfacts *= double_factorial(2 * p - 3);
            z *= frak_z(p);
        }
        Rational coeff = make_rational(dfacts, mu.multiplicity_factorial() * factorial(2 * n - l + 2));
        if ((l - 1) % 2) coeff = -coeff;
        sum += z * coeff;
    }
    return sum * Rational(factorial(n));
}

VolumeResult volume(const StratumSpec& stratum, bool cross_check, const Limits& limits) {
    VolumeResult r;
    r.mu = stratum.mu();
    r.genus = stratum.genus();
    r.dim = stratum.dimension();
    const std::vector<int> m = stratum.shifted_profile();
    const bool simple = std::all_of(m.begin(), m.end(), [](int x) { return x == 2; });
    if (simple) {
        r.route = VolumeRoute::simple_closed_form;
        r.c_const = c_simple(static_cast<int>(m.size()));
        if (cross_check) {
            if (c_const(m, limits) != r.c_const)
                throw std::logic_error("volume: closed form and general pipeline disagree");
            r.cross_checked = true;
        }
    } else {
        r.route = VolumeRoute::general;
        r.c_const = c_const(m, limits);
    }
    r.volume = r.c_const / Rational(r.dim);
    return r;
}

nlohmann::ordered_json pi_scalar_json(const PiScalar& x) {
    nlohmann::ordered_json j;
    j["num"] = x.coeff().get_num().get_str();
    j["den"] = x.coeff().get_den().get_str();
    j["pi_pow"] = x.pi_pow();
    return j;
}

nlohmann::ordered_json to_json(const VolumeResult& r) {
    nlohmann::ordered_json j;
    j["mu"] = r.mu.parts();
    j["genus"] = r.genus;
    j["dim"] = r.dim;
    j["c"] = pi_scalar_json(r.c_const);
    j["volume"] = pi_scalar_json(r.volume);
    j["route"] = to_string(r.route);
    return j;
}

}  // namespace stratavol
