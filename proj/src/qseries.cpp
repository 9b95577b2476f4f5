#include "stratavol/qseries.hpp"

#include "stratavol/errors.hpp"

#include <algorithm>

namespace stratavol {

std::size_t QSeries::checked_length(int order) {
    if (order < 0) throw DomainError("series order must be nonnegative");
    return static_cast<std::size_t>(order) + 1;
}

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.emplace_back(0);
}

QSeries QSeries::constant(const Rational& c, int order) {
    QSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

Rational QSeries::coeff(int k) const {
    if (k < 0 || k > order()) return 0;
    return coeffs_[k];
}

bool QSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

QSeries QSeries::truncated(int order) const {
    std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), checked_length(order)));
    return QSeries(std::move(c));
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

QSeries& QSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    const int n = std::min(a.order(), b.order());
    QSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (sgn(b.coeffs_[j]) == 0) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

std::string QSeries::to_string() const {
    std::string s;
    for (int k = 0; k <= order(); ++k) {
        if (sgn(coeffs_[k]) == 0) continue;
        std::string c = stratavol::to_string(coeffs_[k]);
        std::string term = k == 0 ? c : c + "*q^" + std::to_string(k);
        if (s.empty()) {
            s = term;
        } else if (term[0] == '-') {
            s += " - " + term.substr(1);
        } else {
            s += " + " + term;
        }
    }
    if (s.empty()) s = "0";
    return s + " + O(q^" + std::to_string(order() + 1) + ")";
}

QSeries euler_series(int order) {
    QSeries s(order);
    // exponents k(3k-1)/2 and k(3k+1)/2 for k >= 1 with sign (-1)^k
    s[0] = 1;
    for (long k = 1;; ++k) {
        const long e1 = k * (3 * k - 1) / 2;
        if (e1 > order) break;
        const long e2 = k * (3 * k + 1) / 2;
        const int sign = k % 2 == 0 ? 1 : -1;
        s[static_cast<int>(e1)] += sign;
        if (e2 <= order) s[static_cast<int>(e2)] += sign;
    }
    return s;
}

QSeries partition_count_series(int order) {
    // p(n) = sum_{k>=1} (-1)^{k+1} [p(n - k(3k-1)/2) + p(n - k(3k+1)/2)]
    std::vector<BigInt> p(static_cast<std::size_t>(order) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= order; ++n) {
        BigInt acc = 0;
        for (long k = 1;; ++k) {
            const long g1 = k * (3 * k - 1) / 2;
            if (g1 > n) break;
            const long g2 = k * (3 * k + 1) / 2;
            BigInt t = p[n - g1];
            if (g2 <= n) t += p[n - g2];
            if (k % 2 == 1) acc += t; else acc -= t;
        }
        p[n] = acc;
    }
    std::vector<Rational> c(p.begin(), p.end());
    return QSeries(std::move(c));
}

}  // namespace stratavol
