#pragma once

#include "stratavol/errors.hpp"
#include "stratavol/exact_arith.hpp"

#include <map>
#include <string>
#include <vector>

namespace stratavol {

/// Series in q^{1/8} with rational coefficients. Exponents are stored as integer
/// multiples of 1/8; only exponents below N + 1 (whole q-powers) are kept.
class GradedQSeries {
public:
    explicit GradedQSeries(int order = 0);

    int order() const { return order_; }
    /// Exclusive bound on stored exponents, in eighths.
    int eighth_bound() const { return 8 * (order_ + 1); }
    const std::map<int, Rational>& terms() const { return terms_; }
    /// Coefficient of q^{eighths/8}.
    Rational coeff(int eighths) const;
    void add(int eighths, const Rational& c);
    bool is_zero() const { return terms_.empty(); }

    GradedQSeries operator-() const;
    friend GradedQSeries operator+(const GradedQSeries& a, const GradedQSeries& b);
    friend GradedQSeries operator*(const GradedQSeries& a, const GradedQSeries& b);
    friend bool operator==(const GradedQSeries& a, const GradedQSeries& b) {
        return a.order_ == b.order_ && a.terms_ == b.terms_;
    }

    /// e.g. "3/2*q^(1/8) - 3/2*q^(9/8)"
    std::string to_string() const;

private:
    int order_;
    std::map<int, Rational> terms_;
};

/// A value s = e^{x/2} at which the one-point function is evaluated; s not in {0, 1, -1}.
class EvaluatedPoint {
public:
    explicit EvaluatedPoint(Rational s);
    const Rational& s() const { return s_; }

private:
    Rational s_;
};

/// sum_n (-1)^n (n + 1/2)^k q^{(2n+1)^2/8} s^{2n+1}, the k-th x-derivative of Theta at s = e^{x/2}.
/// Any nonzero s is accepted, so that s = 1 yields Theta^{(k)}(0).
GradedQSeries theta_series(const Rational& s, int deriv_order, int order);
GradedQSeries theta_series(const EvaluatedPoint& point, int deriv_order, int order);

/// E_lambda(s) = sum_{i>=1} s^{2(lambda_i - i) + 1}, exact: finite part plus geometric tail. Needs |s| > 1.
Rational e_lambda(const std::vector<int>& lambda, const Rational& s);

/// (q)_inf sum_{|lambda| <= N} q^{|lambda|} E_lambda(s). Needs |s| > 1.
GradedQSeries direct_one_point(const EvaluatedPoint& point, int order);

/// Theta(s) * direct_one_point(s) == Theta'(0) up to q^N.
bool verify_theorem1_n1(const EvaluatedPoint& point, int order);

}  // namespace stratavol
