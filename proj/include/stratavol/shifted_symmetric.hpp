#pragma once

#include "stratavol/exact_arith.hpp"
#include "stratavol/partitions.hpp"
#include "stratavol/qseries.hpp"

#include <map>
#include <string>

namespace stratavol {

/// Finite combination sum c_lambda p_lambda of power-sum monomials; no zero coefficients.
class PExpansion {
public:
    using Terms = std::map<IntPartition, Rational>;

    PExpansion() = default;

    void add(const IntPartition& lambda, const Rational& c);
    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    /// Largest weight among the terms (0 when empty).
    int top_weight() const;

    /// e.g. "1/4 p[4] - 1 p[2,1]"; terms in decreasing lexicographic order.
    std::string to_string() const;

    friend bool operator==(const PExpansion&, const PExpansion&) = default;

private:
    Terms terms_;
};

/// wt(mu) = |mu| + l(mu).
int weight(const IntPartition& mu);

/// Regularised shifted power sum
///   p_k(lambda) = sum_{i=1}^{l(lambda)} [(lambda_i - i + 1/2)^k - (-i + 1/2)^k] + (1 - 2^{-k}) zeta(-k).
Rational p_eval(int k, const IntPartition& lambda);

/// <p_mu>_q = (q)_inf sum_{|lambda| <= N} q^{|lambda|} prod_i p_{mu_i}(lambda).
QSeries q_average(const IntPartition& mu, int order);

/// Top-weight part of f_k in the p basis:
///   k^{-1} sum_{wt(lambda) = k+1} (-k)^{l(lambda)-1} / kappa! p_lambda,
/// where kappa! is the product of factorials of the part multiplicities.
PExpansion f_top_expansion(int k);

}  // namespace stratavol
