#include "stratavol/npoint.hpp"

#include <doctest.h>

using namespace stratavol;

namespace {

Rational rpow(const Rational& s, int e) {
    Rational r = 1;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= s;
    return e < 0 ? Rational(1) / r : r;
}

// Finite sum over more rows than the partition has, then the geometric tail.
Rational e_lambda_oracle(const std::vector<int>& lambda, const Rational& s, int extra) {
    const int rows = static_cast<int>(lambda.size()) + extra;
    Rational total = 0;
    for (int i = 1; i <= rows; ++i) {
        const int part = i <= static_cast<int>(lambda.size()) ? lambda[i - 1] : 0;
        total += rpow(s, 2 * (part - i) + 1);
    }
    return total + rpow(s, -2 * rows - 1) / (1 - rpow(s, -2));
}

}  // namespace

TEST_CASE("graded series arithmetic") {
    GradedQSeries a(1), b(1);
    a.add(1, make_rational(3, 2));
    b.add(8, 2);
    CHECK(a.to_string() == "3/2*q^(1/8)");
    CHECK((a * b).coeff(9) == 3);
    a.add(20, 5);
    CHECK(a.coeff(20) == 0);
    CHECK((a + -a).is_zero());
    CHECK_THROWS_AS(GradedQSeries(-1), DomainError);
}

TEST_CASE("evaluation points") {
    CHECK_THROWS_AS(EvaluatedPoint(Rational(1)), DomainError);
    CHECK_THROWS_AS(EvaluatedPoint(Rational(-1)), DomainError);
    CHECK_THROWS_AS(EvaluatedPoint(Rational(0)), DomainError);
    CHECK(EvaluatedPoint(make_rational(5, 2)).s() == make_rational(5, 2));
}

TEST_CASE("theta series") {
    const GradedQSeries d1 = theta_series(Rational(1), 1, 10);
    CHECK(d1.coeff(1) == 1);
    CHECK(d1.coeff(9) == -3);
    CHECK(d1.coeff(25) == 5);
    CHECK(theta_series(Rational(1), 0, 10).is_zero());
    CHECK(theta_series(Rational(2), 0, 10).coeff(1) == make_rational(3, 2));
    CHECK_THROWS_AS(theta_series(Rational(0), 0, 4), DomainError);
    for (const Rational& s : {Rational(2), make_rational(5, 3), Rational(-3)}) {
        CHECK(theta_series(s, 0, 12) == -theta_series(Rational(1) / s, 0, 12));
        CHECK(theta_series(s, 1, 12) == theta_series(Rational(1) / s, 1, 12));
    }
}

TEST_CASE("E_lambda") {
    CHECK(e_lambda({}, Rational(2)) == make_rational(2, 3));
    for (const Rational& s : {Rational(2), make_rational(7, 3), Rational(-4)})
        for (const std::vector<int>& l : {std::vector<int>{}, {1}, {3, 1}, {2, 2, 1}, {5}})
            CHECK(e_lambda(l, s) == e_lambda_oracle(l, s, 6));
    CHECK_THROWS_AS(e_lambda({1}, make_rational(1, 2)), DomainError);
}

TEST_CASE("direct one-point series") {
    const EvaluatedPoint s2(Rational(2));
    const GradedQSeries f = direct_one_point(s2, 6);
    CHECK(f.coeff(0) == make_rational(2, 3));
    CHECK(f.coeff(8) == e_lambda({1}, Rational(2)) - e_lambda({}, Rational(2)));
    for (const auto& [e, c] : f.terms()) CHECK(e % 8 == 0);
    CHECK_THROWS_AS(direct_one_point(EvaluatedPoint(make_rational(1, 2)), 4), DomainError);
    CHECK_THROWS_AS(direct_one_point(EvaluatedPoint(make_rational(-1, 3)), 4), DomainError);
}

TEST_CASE("theta identity for one point") {
    const EvaluatedPoint s2(Rational(2));
    const GradedQSeries product = theta_series(s2, 0, 10) * direct_one_point(s2, 10);
    CHECK(product.coeff(1) == 1);
    CHECK(product == theta_series(Rational(1), 1, 10));
    CHECK(verify_theorem1_n1(s2, 20));
    CHECK(verify_theorem1_n1(EvaluatedPoint(Rational(3)), 40));
    CHECK(verify_theorem1_n1(EvaluatedPoint(make_rational(5, 2)), 20));
    CHECK(verify_theorem1_n1(EvaluatedPoint(Rational(-2)), 15));
}
