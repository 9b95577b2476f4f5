#pragma once

#include "stratavol/errors.hpp"
#include "stratavol/exact_arith.hpp"
#include "stratavol/qseries.hpp"

#include <string>
#include <vector>

namespace stratavol {

/// Labelled branch points, each with one nontrivial cycle of the given length (>= 2).
/// Order is preserved: marked points are not permuted by automorphisms.
class CoverProfile {
public:
    CoverProfile() = default;
    explicit CoverProfile(std::vector<int> m);
    CoverProfile(std::initializer_list<int> m) : CoverProfile(std::vector<int>(m)) {}

    const std::vector<int>& cycles() const { return m_; }
    int points() const { return static_cast<int>(m_.size()); }
    bool empty() const { return m_.empty(); }
    int total() const;  ///< |m|
    /// Sub-profile on the points selected by `mask` (bit i = point i).
    CoverProfile restrict_to(unsigned mask) const;

    std::string to_string() const;  ///< "2,2"

    friend bool operator==(const CoverProfile&, const CoverProfile&) = default;

private:
    std::vector<int> m_;
};

enum class CoverKind { all, no_unramified, connected };
std::string to_string(CoverKind kind);

struct CoverCountRecord {
    CoverProfile profile;
    int d = 0;
    Rational count;
    CoverKind kind = CoverKind::all;
};

/// "profile;d;kind;count" with count as an exact fraction "p/q".
std::string to_csv_row(const CoverCountRecord& r);
inline constexpr const char* kCoverCsvHeader = "profile;d;kind;count";

/// Burnside sum over partitions of d of prod_i f_{m_i}(lambda).
Rational cov_d(const CoverProfile& profile, int d);
/// sum_{d<=N} cov_d q^d.
QSeries cov_series(const CoverProfile& profile, int order);
/// Coverings without unramified components: (q)_inf * Cov(profile).
QSeries cov_prime_series(const CoverProfile& profile, int order);
/// Connected coverings, by Moebius inversion over set partitions of the branch points.
QSeries cov_connected_series(const CoverProfile& profile, int order);

inline constexpr int kDefaultBruteForceCap = 5;

/// Direct enumeration of (a, b, g_1..g_s) in S(d)^2 x prod C_i with [a,b] g_1 ... g_s = 1,
/// divided by d!. With connected_only, only tuples generating a transitive subgroup count.
Rational brute_force_hom_count(const CoverProfile& profile, int d, bool connected_only,
                               int cap = kDefaultBruteForceCap);

/// (|m|+1) D^{-|m|-1} sum_{d=1}^{D} (connected count at d).
Rational asymptotic_ratio(const CoverProfile& profile, int max_degree);

}  // namespace stratavol
