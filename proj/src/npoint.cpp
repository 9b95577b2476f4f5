#include "stratavol/npoint.hpp"

#include "stratavol/parallel.hpp"
#include "stratavol/partitions.hpp"
#include "stratavol/qseries.hpp"

namespace stratavol {

GradedQSeries::GradedQSeries(int order) : order_(order) {
    if (order < 0) throw DomainError("graded series order must be nonnegative");
}

Rational GradedQSeries::coeff(int eighths) const {
    auto it = terms_.find(eighths);
    return it == terms_.end() ? Rational(0) : it->second;
}

void GradedQSeries::add(int eighths, const Rational& c) {
    if (eighths >= eighth_bound() || sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(eighths, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

GradedQSeries GradedQSeries::operator-() const {
    GradedQSeries r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

GradedQSeries operator+(const GradedQSeries& a, const GradedQSeries& b) {
    GradedQSeries r(std::min(a.order_, b.order_));
    for (const auto& [e, c] : a.terms_) r.add(e, c);
    for (const auto& [e, c] : b.terms_) r.add(e, c);
    return r;
}

GradedQSeries operator*(const GradedQSeries& a, const GradedQSeries& b) {
    GradedQSeries r(std::min(a.order_, b.order_));
    const int bound = r.eighth_bound();
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            if (ea + eb >= bound) break;
            r.add(ea + eb, ca * cb);
        }
    }
    return r;
}

std::string GradedQSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        const Rational mag = abs(c);
        std::string term = stratavol::to_string(mag);
        if (e != 0) term += "*q^(" + stratavol::to_string(make_rational(e, 8)) + ")";
        if (s.empty())
            s = sgn(c) < 0 ? "-" + term : term;
        else
            s += (sgn(c) < 0 ? " - " : " + ") + term;
    }
    return s;
}

EvaluatedPoint::EvaluatedPoint(Rational s) : s_(std::move(s)) {
    if (sgn(s_) == 0 || abs(s_) == 1)
        throw DomainError("evaluation point s = " + stratavol::to_string(s_) +
                          " must avoid 0 and +-1 (pole of the one-point function at x = 0)");
}

GradedQSeries theta_series(const Rational& s, int deriv_order, int order) {
    if (sgn(s) == 0) throw DomainError("theta_series: s must be nonzero");
    if (deriv_order < 0) throw DomainError("theta_series: derivative order must be nonnegative");
    GradedQSeries out(order);
    const Rational half = make_rational(1, 2);
    // n >= 0 and -n-1 share the exponent (2n+1)^2 / 8
    for (long n = 0; (2 * n + 1) * (2 * n + 1) < out.eighth_bound(); ++n) {
        const int e = static_cast<int>((2 * n + 1) * (2 * n + 1));
        for (long m : {n, -n - 1}) {
            Rational c = pow_rational(Rational(m) + half, deriv_order) * pow_rational(s, 2 * m + 1);
            if (m % 2) c = -c;
            out.add(e, c);
        }
    }
    return out;
}

GradedQSeries theta_series(const EvaluatedPoint& point, int deriv_order, int order) {
    return theta_series(point.s(), deriv_order, order);
}

Rational e_lambda(const std::vector<int>& lambda, const Rational& s) {
    if (abs(s) <= 1) throw DomainError("E_lambda(s) needs |s| > 1 for the tail to converge");
    const long l = static_cast<long>(lambda.size());
    Rational total = 0;
    for (long i = 1; i <= l; ++i) total += pow_rational(s, 2 * (lambda[i - 1] - i) + 1);
    // sum_{i > l} s^{1 - 2i} = s^{-2l-1} / (1 - s^{-2})
    total += pow_rational(s, -2 * l - 1) / (1 - pow_rational(s, -2));
    return total;
}

GradedQSeries direct_one_point(const EvaluatedPoint& point, int order) {
    if (abs(point.s()) <= 1)
        throw DomainError("direct_one_point needs |s| > 1, got s = " + stratavol::to_string(point.s()));
    if (order < 0) throw DomainError("direct_one_point: order must be nonnegative");
    auto sums = parallel_map<Rational>(static_cast<std::size_t>(order) + 1, [&](std::size_t d) {
        Rational acc = 0;
        for (const IntPartition& lambda : enum_int_partitions(static_cast<int>(d)))
            acc += e_lambda(lambda.parts(), point.s());
        return acc;
    });
    const QSeries product = euler_series(order) * QSeries(std::move(sums));
    GradedQSeries out(order);
    for (int d = 0; d <= order; ++d) out.add(8 * d, product[d]);
    return out;
}

bool verify_theorem1_n1(const EvaluatedPoint& point, int order) {
    const GradedQSeries lhs = theta_series(point, 0, order) * direct_one_point(point, order);
    const GradedQSeries rhs = theta_series(Rational(1), 1, order);
    return lhs == rhs;
}

}  // namespace stratavol
