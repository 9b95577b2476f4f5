#include "stratavol/errors.hpp"
#include "stratavol/exact_arith.hpp"

#include <doctest.h>

#include <random>
#include <thread>
#include <vector>

using namespace stratavol;

namespace {

// Akiyama-Tanigawa; yields B_1 = +1/2, flipped below.
std::vector<Rational> bernoulli_oracle(int nmax) {
    std::vector<Rational> out;
    std::vector<Rational> a(nmax + 1);
    for (int m = 0; m <= nmax; ++m) {
        a[m] = make_rational(1, m + 1);
        for (int j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
        out.push_back(a[0]);
    }
    if (nmax >= 1) out[1] = -out[1];
    return out;
}

// Taylor coefficients of t / sin t by series division; independent of the zeta machinery.
std::vector<Rational> t_over_sin_oracle(int degree) {
    std::vector<Rational> s(degree + 2, Rational(0)), r(degree + 1, Rational(0));
    Rational fact = 1;
    for (int j = 0; j <= degree + 1; ++j) {
        if (j > 0) fact *= j;
        if (j % 2 == 0) continue;
        // sin t / t has (-1)^k / (2k+1)! at t^{2k}; j = 2k+1
        s[j - 1] = ((j - 1) / 2 % 2 ? Rational(-1) : Rational(1)) / fact;
    }
    r[0] = 1;
    for (int j = 1; j <= degree; ++j) {
        Rational acc = 0;
        for (int i = 1; i <= j; ++i) acc += s[i] * r[j - i];
        r[j] = -acc;
    }
    return r;
}

PiSum random_pisum(std::mt19937& rng) {
    std::uniform_int_distribution<int> pow(0, 4), num(-9, 9), den(1, 7), count(0, 3);
    PiSum x;
    for (int i = count(rng); i > 0; --i) x += PiSum(PiScalar(make_rational(num(rng), den(rng)), pow(rng)));
    return x;
}

}  // namespace

TEST_CASE("rational helpers") {
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(to_string(make_rational(4, 2)) == "2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(parse_rational("3/6") == make_rational(1, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
    CHECK_THROWS_AS(parse_rational("1/-2"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
}

TEST_CASE("integer helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(6, 2) == 15);
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(7) == 105);
    CHECK(pow_rational(make_rational(2, 3), -2) == make_rational(9, 4));
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == make_rational(-1, 2));
    CHECK(bernoulli(2) == make_rational(1, 6));
    CHECK(bernoulli(12) == make_rational(-691, 2730));
    const auto oracle = bernoulli_oracle(40);
    for (int n = 0; n <= 40; ++n) CHECK(bernoulli(n) == oracle[n]);
    for (int n = 3; n <= 61; n += 2) CHECK(bernoulli(n) == 0);
}

TEST_CASE("bernoulli beyond the memo cap") {
    const int old = bernoulli_memo_cap();
    const Rational b30 = bernoulli(30);
    set_bernoulli_memo_cap(10);
    CHECK(bernoulli(30) == b30);
    CHECK(bernoulli(70) == bernoulli_oracle(70)[70]);
    set_bernoulli_memo_cap(old);
}

TEST_CASE("bernoulli memo under concurrent readers") {
    const auto oracle = bernoulli_oracle(60);
    std::vector<std::jthread> pool;
    std::vector<int> bad(4, 0);
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&, t] {
            for (int n = 60 - t; n >= 0; --n)
                if (bernoulli(n) != oracle[n]) ++bad[t];
        });
    pool.clear();
    for (int b : bad) CHECK(b == 0);
}

TEST_CASE("zeta values") {
    CHECK(zeta_even_over_pi(2) == make_rational(1, 6));
    CHECK(zeta_even_over_pi(4) == make_rational(1, 90));
    CHECK(zeta_even_over_pi(6) == make_rational(1, 945));
    CHECK(zeta_even_over_pi(8) == make_rational(1, 9450));
    CHECK_THROWS_AS(zeta_even_over_pi(3), DomainError);
    CHECK_THROWS_AS(zeta_even_over_pi(0), DomainError);
    CHECK(zeta_neg(1) == make_rational(-1, 12));
    CHECK(zeta_neg(2) == 0);
    CHECK(zeta_neg(3) == make_rational(1, 120));
}

TEST_CASE("frak_z") {
    CHECK(frak_z(2) == PiScalar(make_rational(1, 6), 2));
    CHECK(frak_z(3).is_zero());
    CHECK(frak_z(4) == PiScalar(make_rational(7, 360), 4));
    CHECK(frak_z(0) == PiScalar::rational(1));
    CHECK(frak_z(-2).is_zero());
    for (int k = 2; k <= 40; k += 2) {
        CHECK(frak_z(k).pi_pow() == k);
        CHECK(sgn(frak_z(k).coeff()) > 0);
    }
}

TEST_CASE("sine series identity up to x^40") {
    const auto r = t_over_sin_oracle(40);
    for (int k = 0; k <= 20; ++k) CHECK(frak_z(2 * k).coeff() == r[2 * k]);
    for (int k = 0; k < 20; ++k) CHECK(r[2 * k + 1] == 0);
}

TEST_CASE("pi scalars") {
    CHECK(PiScalar(Rational(0), 5).pi_pow() == 0);
    CHECK(PiScalar(Rational(0), 5) == PiScalar());
    PiScalar a(make_rational(1, 6), 2);
    CHECK(to_string(a * PiScalar(make_rational(16, 45), 4)) == "8/135*pi^6");
    CHECK_THROWS_AS(a += PiScalar(Rational(1), 4), DomainError);
    PiScalar z;
    z += a;
    CHECK(z == a);
    CHECK((a - a).is_zero());
    CHECK(to_string(PiScalar(make_rational(8, 297675), 6)) == "8/297675*pi^6");
}

TEST_CASE("pi sums") {
    const PiSum a = PiScalar(make_rational(1, 6), 2);
    CHECK(pi_add(a, PiSum()) == a);
    CHECK(pi_mul(a, PiScalar(make_rational(16, 45), 4)).as_scalar() == PiScalar(make_rational(8, 135), 6));
    const PiSum two = pi_add(PiScalar(Rational(1), 2), PiScalar(Rational(1), 4));
    CHECK(two.terms().size() == 2);
    CHECK_FALSE(two.as_scalar().has_value());
    CHECK((two - two).is_zero());
}

TEST_CASE("pi sums form a commutative ring") {
    std::mt19937 rng(12345);
    const PiSum one = Rational(1);
    for (int trial = 0; trial < 200; ++trial) {
        const PiSum a = random_pisum(rng), b = random_pisum(rng), c = random_pisum(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * one == a);
        CHECK((a + PiSum()) == a);
        CHECK((a + (-a)).is_zero());
    }
}

TEST_CASE("labelled decimal approximation") {
    const std::string z2 = approx_decimal(PiScalar(make_rational(1, 6), 2));
    CHECK(z2.rfind("1.6449340668482264364724151666460251892189499012", 0) == 0);
    CHECK(approx_decimal(PiScalar()).find('0') != std::string::npos);
}
