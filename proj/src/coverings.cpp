#include "stratavol/coverings.hpp"

#include "stratavol/characters.hpp"
#include "stratavol/parallel.hpp"
#include "stratavol/partitions.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>

namespace stratavol {

// ---- profile --------------------------------------------------------------

CoverProfile::CoverProfile(std::vector<int> m) : m_(std::move(m)) {
    for (int x : m_)
        if (x < 2) throw DomainError("profile entries must be cycle lengths >= 2");
    if (m_.size() > 32) throw ResourceError("at most 32 branch points are supported");
}

int CoverProfile::total() const { return std::accumulate(m_.begin(), m_.end(), 0); }

CoverProfile CoverProfile::restrict_to(unsigned mask) const {
    std::vector<int> sub;
    for (std::size_t i = 0; i < m_.size(); ++i)
        if (mask & (1u << i)) sub.push_back(m_[i]);
    return CoverProfile(std::move(sub));
}

std::string CoverProfile::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < m_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(m_[i]);
    }
    return s;
}

std::string to_string(CoverKind kind) {
    switch (kind) {
        case CoverKind::all: return "all";
        case CoverKind::no_unramified: return "no-unramified";
        case CoverKind::connected: return "connected";
    }
    return "?";
}

std::string to_csv_row(const CoverCountRecord& r) {
    return r.profile.to_string() + ";" + std::to_string(r.d) + ";" + to_string(r.kind) + ";" +
           r.count.get_num().get_str() + "/" + r.count.get_den().get_str();
}

// ---- Burnside sums --------------------------------------------------------

Rational cov_d(const CoverProfile& profile, int d) {
    if (d < 0) throw DomainError("cov_d: negative degree");
    if (d == 0) return profile.empty() ? 1 : 0;
    const auto lambdas = enum_int_partitions(d);
    std::vector<int> distinct = profile.cycles();
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (!distinct.empty() && distinct.back() > d) return 0;

    auto terms = parallel_map<Rational>(lambdas.size(), [&](std::size_t idx) {
        std::map<int, Rational> f;
        for (int m : distinct) f.emplace(m, central_char_f(m, lambdas[idx]));
        Rational t = 1;
        for (int m : profile.cycles()) t *= f.at(m);
        return t;
    });
    Rational total = 0;
    for (const auto& t : terms) total += t;
    return total;
}

QSeries cov_series(const CoverProfile& profile, int order) {
    QSeries s(order);
    for (int d = 0; d <= order; ++d) s[d] = cov_d(profile, d);
    return s;
}

QSeries cov_prime_series(const CoverProfile& profile, int order) {
    return euler_series(order) * cov_series(profile, order);
}

QSeries cov_connected_series(const CoverProfile& profile, int order) {
    if (profile.empty()) throw DomainError("cov_connected_series: profile must be nonempty");
    std::map<unsigned, QSeries> memo;
    auto prime = [&](unsigned mask) -> const QSeries& {
        auto it = memo.find(mask);
        if (it == memo.end()) it = memo.emplace(mask, cov_prime_series(profile.restrict_to(mask), order)).first;
        return it->second;
    };
    return connected_part<QSeries>(profile.points(), QSeries(order), prime);
}

// ---- brute force monodromy enumeration ------------------------------------

namespace {

constexpr int kMaxPermDegree = 12;
using Perm = std::array<std::uint8_t, kMaxPermDegree>;

Perm compose(const Perm& p, const Perm& q, int d) {  // (p*q)(x) = p(q(x))
    Perm r{};
    for (int i = 0; i < d; ++i) r[i] = p[q[i]];
    return r;
}

Perm inverse(const Perm& p, int d) {
    Perm r{};
    for (int i = 0; i < d; ++i) r[p[i]] = static_cast<std::uint8_t>(i);
    return r;
}

bool is_identity(const Perm& p, int d) {
    for (int i = 0; i < d; ++i)
        if (p[i] != i) return false;
    return true;
}

// true iff p is a single m-cycle with d-m fixed points
bool is_m_cycle(const Perm& p, int d, int m) {
    int moved = 0;
    int first = -1;
    for (int i = 0; i < d; ++i)
        if (p[i] != i) {
            ++moved;
            if (first < 0) first = i;
        }
    if (moved != m) return false;
    int len = 1;
    for (int x = p[first]; x != first; x = p[x]) ++len;
    return len == m;
}

bool transitive(const std::vector<const Perm*>& gens, int d) {
    std::uint32_t seen = 1u;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (const Perm* g : gens) {
            const int y = (*g)[x];
            if (!(seen & (1u << y))) {
                seen |= 1u << y;
                stack.push_back(y);
            }
        }
    }
    return seen == (d == 32 ? ~0u : (1u << d) - 1);
}

struct HomCounter {
    int d;
    const std::vector<int>& cycles;
    bool connected_only;
    std::vector<std::vector<Perm>> classes;
    std::vector<const Perm*> gens;
    std::uint64_t count = 0;

    // prefix = [a,b] g_1 ... g_{i-1}
    void choose(std::size_t i, const Perm& prefix) {
        const std::size_t s = cycles.size();
        if (i + 1 == s || s == 0) {
            Perm last{};
            if (s == 0) {
                if (!is_identity(prefix, d)) return;
            } else {
                last = inverse(prefix, d);
                if (!is_m_cycle(last, d, cycles[i])) return;
                gens.push_back(&last);
            }
            if (!connected_only || transitive(gens, d)) ++count;
            if (s != 0) gens.pop_back();
            return;
        }
        for (const Perm& g : classes[i]) {
            gens.push_back(&g);
            choose(i + 1, compose(prefix, g, d));
            gens.pop_back();
        }
    }
};

}  // namespace

Rational brute_force_hom_count(const CoverProfile& profile, int d, bool connected_only, int cap) {
    if (d < 1) throw DomainError("brute_force_hom_count: degree must be positive");
    if (d > cap || d > kMaxPermDegree)
        throw ResourceError("brute-force degree " + std::to_string(d) + " exceeds the cap " + std::to_string(cap));
    for (int m : profile.cycles())
        if (m > d) return 0;

    std::vector<Perm> group;
    Perm p{};
    std::iota(p.begin(), p.begin() + d, 0);
    do {
        group.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + d));

    HomCounter counter{d, profile.cycles(), connected_only, {}, {}, 0};
    for (int m : profile.cycles()) {
        std::vector<Perm> cls;
        for (const Perm& g : group)
            if (is_m_cycle(g, d, m)) cls.push_back(g);
        counter.classes.push_back(std::move(cls));
    }
    for (const Perm& a : group) {
        const Perm ainv = inverse(a, d);
        for (const Perm& b : group) {
            const Perm comm = compose(compose(a, b, d), compose(ainv, inverse(b, d), d), d);
            counter.gens = {&a, &b};
            counter.choose(0, comm);
        }
    }
    return make_rational(BigInt(static_cast<unsigned long>(counter.count)), factorial(d));
}

Rational asymptotic_ratio(const CoverProfile& profile, int max_degree) {
    if (max_degree < 1) throw DomainError("asymptotic_ratio: degree bound must be >= 1");
    const QSeries connected = cov_connected_series(profile, max_degree);
    Rational sum = 0;
    for (int d = 1; d <= max_degree; ++d) sum += connected[d];
    const int e = profile.total() + 1;
    return sum * e / Rational(pow_int(max_degree, e));
}

}  // namespace stratavol
