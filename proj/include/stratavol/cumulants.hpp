#pragma once

#include "stratavol/errors.hpp"
#include "stratavol/exact_arith.hpp"
#include "stratavol/partitions.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace stratavol {

/// Multiset of positive integers indexing an elementary cumulant <<m_1,...,m_n>>.
/// Stored sorted descending; the cumulant is symmetric in its arguments.
class CumulantKey {
public:
    explicit CumulantKey(std::vector<int> m);
    CumulantKey(std::initializer_list<int> m) : CumulantKey(std::vector<int>(m)) {}

    const std::vector<int>& parts() const { return m_; }
    int count() const { return static_cast<int>(m_.size()); }  ///< n
    int total() const;                                          ///< |m|
    std::string to_string() const;

    friend auto operator<=>(const CumulantKey&, const CumulantKey&) = default;
    friend bool operator==(const CumulantKey&, const CumulantKey&) = default;

private:
    std::vector<int> m_;
};

/// Groups mu, ..., eta of a joint cumulant <p_mu | ... | p_eta>. Parts are labelled
/// consecutively group after group; rho() has the groups as its blocks.
class WickGroups {
public:
    explicit WickGroups(std::vector<IntPartition> groups);

    const std::vector<IntPartition>& groups() const { return groups_; }
    const std::vector<int>& labelled_parts() const { return parts_; }
    const SetPartition& rho() const { return rho_; }
    /// wt(m) = sum (m_i + 1) over all labelled parts.
    int total_weight() const;

private:
    std::vector<IntPartition> groups_;
    std::vector<int> parts_;
    SetPartition rho_;
};

struct WickResult {
    PiScalar leading;  ///< coefficient of hbar^{-hbar_order}
    int hbar_order = 0;
};

/// Stratum H(mu): zero multiplicities mu_i >= 1 with |mu| even.
class StratumSpec {
public:
    explicit StratumSpec(IntPartition mu);
    const IntPartition& mu() const { return mu_; }
    int genus() const { return mu_.size() / 2 + 1; }
    int dimension() const { return 2 * genus() + mu_.length() - 1; }
    /// mu + (1,...,1)
    std::vector<int> shifted_profile() const;

private:
    IntPartition mu_;
};

enum class VolumeRoute { general, simple_closed_form };
std::string to_string(VolumeRoute r);

struct VolumeResult {
    IntPartition mu;
    int genus = 0;
    int dim = 0;
    PiScalar volume;
    PiScalar c_const;
    VolumeRoute route = VolumeRoute::general;
    bool cross_checked = false;
};

/// Closed form as a sum over set partitions alpha of {1..n} and tuples d with
/// sum d_k = l(alpha) - 2; the one-block term is |m|! frak_z(|m| - n + 2). Memoized.
PiScalar elementary_cumulant(const CumulantKey& key, const Limits& limits = {});

/// Independent route: m! [x^m] sum_alpha S_alpha(x) T_alpha(x), with pi x / sin(pi x)
/// obtained by series division. Only for n <= 4.
PiScalar elementary_cumulant_series_oracle(const CumulantKey& key);

/// Checks T_rho = (-1)^{l-1} (sum x)^{l-2} prod_k y_k against the sum over
/// rho-spanning forests as exact polynomials (n <= 5).
bool t_poly_forest_oracle(const SetPartition& rho);

/// Leading coefficient of <p_mu | ... | p_eta>: sum over alpha complementary to rho
/// of prod_k <<m_{alpha_k}>>.
WickResult wick_leading(const WickGroups& groups, const Limits& limits = {});

/// Leading constant c(m) through top-weight expansion of each f_{m_i} and the Wick rule.
PiScalar c_const(const std::vector<int>& m, const Limits& limits = {});

/// c(2,...,2) with n twos from the closed sum over even partitions of n + 2.
PiScalar c_simple(int n);

/// nu(H_1(mu)) = c(mu + 1) / dim H(mu). For mu = (1,...,1) the closed form is used;
/// with cross_check the general route also runs and must agree.
VolumeResult volume(const StratumSpec& stratum, bool cross_check = false, const Limits& limits = {});

nlohmann::ordered_json pi_scalar_json(const PiScalar& x);
nlohmann::ordered_json to_json(const VolumeResult& r);

}  // namespace stratavol
