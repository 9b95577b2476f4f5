// Independent multivariate-series route to the elementary cumulants and the
// spanning-forest check of the connected Gaussian factor. Deliberately shares
// nothing with the closed-form evaluation except set-partition enumeration.

#include "stratavol/cumulants.hpp"

#include <map>
#include <numeric>

namespace stratavol {

namespace {

template <class C>
using Poly = std::map<std::vector<int>, C>;

template <class C>
void add_into(Poly<C>& acc, const std::vector<int>& e, const C& c) {
    auto [it, inserted] = acc.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == C{}) acc.erase(it);
    }
}

// Product truncated componentwise at `bounds` (empty bounds = no truncation).
template <class C>
Poly<C> multiply(const Poly<C>& a, const Poly<C>& b, const std::vector<int>& bounds) {
    Poly<C> r;
    std::vector<int> e;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            e.resize(ea.size());
            bool keep = true;
            for (std::size_t i = 0; i < ea.size(); ++i) {
                e[i] = ea[i] + eb[i];
                if (!bounds.empty() && e[i] > bounds[i]) {
                    keep = false;
                    break;
                }
            }
            if (keep) add_into(r, e, C(ca * cb));
        }
    }
    return r;
}

template <class C>
Poly<C> constant(int n, const C& c) {
    Poly<C> p;
    if (!(c == C{})) p.emplace(std::vector<int>(n, 0), c);
    return p;
}

template <class C>
Poly<C> linear_form(int n, unsigned mask) {
    Poly<C> p;
    for (int i = 0; i < n; ++i) {
        if (!(mask & (1u << i))) continue;
        std::vector<int> e(n, 0);
        e[i] = 1;
        p.emplace(std::move(e), C(Rational(1)));
    }
    return p;
}

template <class C>
Poly<C> power(const Poly<C>& base, int k, int n, const std::vector<int>& bounds) {
    Poly<C> r = constant<C>(n, C(Rational(1)));
    for (int i = 0; i < k; ++i) r = multiply(r, base, bounds);
    return r;
}

// Taylor coefficients R_j of t / sin(t) from the reciprocal of sin(t)/t.
std::vector<Rational> t_over_sin_t(int degree) {
    std::vector<Rational> s(degree + 1, Rational(0));
    for (int k = 0; 2 * k <= degree; ++k) {
        Rational v = make_rational(BigInt(1), factorial(2 * k + 1));
        s[2 * k] = (k % 2) ? Rational(-v) : v;
    }
    std::vector<Rational> r(degree + 1, Rational(0));
    r[0] = 1;
    for (int j = 1; j <= degree; ++j) {
        Rational acc = 0;
        for (int i = 1; i <= j; ++i) acc += s[i] * r[j - i];
        r[j] = -acc;
    }
    return r;
}

}  // namespace

PiScalar elementary_cumulant_series_oracle(const CumulantKey& key) {
    const int n = key.count();
    if (n > 4) throw ResourceError("series oracle supports at most 4 parts");
    const std::vector<int>& m = key.parts();

    // pi y / sin(pi y) has coefficient R_j pi^j at y^j; for n = 1 the one-block
    // function pi / sin(pi x) is Laurent, so look one degree higher in pi x / sin(pi x).
    std::vector<int> target = m;
    if (n == 1) ++target[0];
    const int max_degree = std::accumulate(target.begin(), target.end(), 0);
    const std::vector<Rational> r = t_over_sin_t(max_degree);

    auto z_times_power = [&](unsigned mask, int e) {
        const Poly<PiSum> y = linear_form<PiSum>(n, mask);
        Poly<PiSum> acc;
        Poly<PiSum> ypow = power(y, e, n, target);
        for (int j = 0; e + j <= max_degree; ++j) {
            if (sgn(r[j]) != 0)
                for (const auto& [ex, c] : ypow) add_into(acc, ex, PiSum(PiScalar(r[j], j)) * c);
            ypow = multiply(ypow, y, target);
            if (ypow.empty()) break;
        }
        return acc;
    };

    const unsigned all = (1u << n) - 1;
    Poly<PiSum> total;
    for (const SetPartition& alpha : enum_set_partitions(n, 4)) {
        const int l = alpha.block_count();
        Poly<PiSum> term;
        if (l == 1) {
            term = z_times_power(all, n == 1 ? 0 : n - 2);
        } else {
            term = power(linear_form<PiSum>(n, all), l - 2, n, target);
            const auto masks = alpha.block_masks();
            for (unsigned mask : masks) {
                const int size = __builtin_popcount(mask);
                term = multiply(term, z_times_power(mask, size - 1), target);
            }
            if ((l - 1) % 2)
                for (auto& [e, c] : term) c = -c;
        }
        for (const auto& [e, c] : term) add_into(total, e, c);
    }

    PiSum coeff;
    if (auto it = total.find(target); it != total.end()) coeff = it->second;
    BigInt mfact = 1;
    for (int x : m) mfact *= factorial(x);
    coeff *= PiSum(Rational(mfact));
    auto scalar = coeff.as_scalar();
    if (!scalar) throw std::logic_error("series oracle produced an inhomogeneous value");
    return *scalar;
}

bool t_poly_forest_oracle(const SetPartition& rho) {
    const int n = rho.ground_size();
    if (n > 5) throw ResourceError("forest identity check supports n <= 5");
    if (n < 1) throw DomainError("forest identity check needs a nonempty ground set");
    const int l = rho.block_count();
    const Rational sign = (l - 1) % 2 ? -1 : 1;
    const std::vector<int> no_bounds;

    Poly<Rational> closed;
    if (l == 1) {
        closed = constant<Rational>(n, Rational(1));
    } else {
        closed = power(linear_form<Rational>(n, (1u << n) - 1), l - 2, n, no_bounds);
        for (unsigned mask : rho.block_masks()) closed = multiply(closed, linear_form<Rational>(n, mask), no_bounds);
        for (auto& [e, c] : closed) c *= sign;
    }

    // edges between different blocks; choose l - 1 of them forming a spanning tree of the quotient
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rho.block_of(i) != rho.block_of(j)) edges.emplace_back(i, j);

    Poly<Rational> forests;
    const int e_count = static_cast<int>(edges.size());
    for (unsigned subset = 0; subset < (1u << e_count); ++subset) {
        if (__builtin_popcount(subset) != l - 1) continue;
        std::vector<int> parent(l);
        std::iota(parent.begin(), parent.end(), 0);
        auto root = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int components = l;
        std::vector<int> exps(n, 0);
        for (int k = 0; k < e_count; ++k) {
            if (!(subset & (1u << k))) continue;
            const auto [i, j] = edges[k];
            ++exps[i];
            ++exps[j];
            const int a = root(rho.block_of(i)), b = root(rho.block_of(j));
            if (a != b) {
                parent[a] = b;
                --components;
            }
        }
        if (components == 1) add_into(forests, exps, sign);
    }
    return closed == forests;
}

}  // namespace stratavol
