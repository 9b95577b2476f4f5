#pragma once

#include "stratavol/exact_arith.hpp"

#include <string>
#include <vector>

namespace stratavol {

/// Power series in q with rational coefficients, truncated after q^N.
/// Binary operations truncate to the smaller order of the two operands.
class QSeries {
public:
    QSeries() : coeffs_(1, Rational(0)) {}
    explicit QSeries(int order) : coeffs_(checked_length(order), Rational(0)) {}
    QSeries(std::vector<Rational> coeffs);

    static QSeries constant(const Rational& c, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](int k) const { return coeffs_[k]; }
    Rational& operator[](int k) { return coeffs_[k]; }
    /// Coefficient of q^k, zero beyond the truncation order.
    Rational coeff(int k) const;

    bool is_zero() const;
    QSeries truncated(int order) const;

    QSeries& operator+=(const QSeries& rhs);
    QSeries& operator-=(const QSeries& rhs);
    QSeries& operator*=(const Rational& c);

    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(QSeries a, const Rational& c) { return a *= c; }
    friend QSeries operator*(const Rational& c, QSeries a) { return a *= c; }
    friend bool operator==(const QSeries& a, const QSeries& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const;

private:
    static std::size_t checked_length(int order);
    std::vector<Rational> coeffs_;
};

/// (q)_inf = prod_{n>=1} (1 - q^n) up to q^N, from the pentagonal number theorem.
QSeries euler_series(int order);

/// sum_d p(d) q^d computed by the pentagonal recurrence (independent of any enumeration).
QSeries partition_count_series(int order);

}  // namespace stratavol
