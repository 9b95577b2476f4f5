#include "stratavol/coverings.hpp"
#include "stratavol/shifted_symmetric.hpp"

#include <doctest.h>

#include <random>

using namespace stratavol;

namespace {

IntPartition random_partition(std::mt19937& rng, int max_size) {
    std::uniform_int_distribution<int> size(0, max_size);
    const auto all = enum_int_partitions(size(rng));
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
}

// Direct evaluation with a long explicit tail instead of the cancellation shortcut.
Rational p_eval_with_tail(int k, const IntPartition& lambda, int extra_rows) {
    const Rational half = make_rational(1, 2);
    Rational total = 0;
    for (int i = 1; i <= lambda.length() + extra_rows; ++i) {
        const int part = i <= lambda.length() ? lambda[i - 1] : 0;
        total += pow_rational(part - i + half, k) - pow_rational(-i + half, k);
    }
    return total + (1 - make_rational(BigInt(1), pow_int(2, k))) * zeta_neg(k);
}

}  // namespace

TEST_CASE("weights") {
    CHECK(weight(IntPartition{3, 1}) == 6);
    CHECK(weight(IntPartition{}) == 0);
    CHECK(weight(IntPartition{2}) == 3);
}

TEST_CASE("shifted power sums") {
    CHECK(p_eval(1, IntPartition{}) == make_rational(-1, 24));
    CHECK(p_eval(1, IntPartition{1}) == make_rational(23, 24));
    CHECK(p_eval(2, IntPartition{2}) == 2);
    CHECK_THROWS_AS(p_eval(0, IntPartition{}), DomainError);

    std::mt19937 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
        const IntPartition l = random_partition(rng, 12);
        CHECK(p_eval(1, l) == l.size() - make_rational(1, 24));
        for (int k = 1; k <= 6; ++k) {
            CHECK(p_eval(k, l) == p_eval_with_tail(k, l, 5));
            const Rational sign = k % 2 ? 1 : -1;
            CHECK(p_eval(k, l.conjugate()) == sign * p_eval(k, l));
        }
    }
}

TEST_CASE("top-weight expansions") {
    PExpansion f2, f3, f4;
    f2.add(IntPartition{2}, make_rational(1, 2));
    f3.add(IntPartition{3}, make_rational(1, 3));
    f3.add(IntPartition{1, 1}, make_rational(-1, 2));
    f4.add(IntPartition{4}, make_rational(1, 4));
    f4.add(IntPartition{2, 1}, Rational(-1));
    CHECK(f_top_expansion(2) == f2);
    CHECK(f_top_expansion(3) == f3);
    CHECK(f_top_expansion(4) == f4);
    CHECK(f_top_expansion(4).to_string() == "1/4 p[4] - 1 p[2,1]");
    CHECK(f_top_expansion(3).to_string() == "1/3 p[3] - 1/2 p[1,1]");
    CHECK_THROWS_AS(f_top_expansion(1), DomainError);
    for (int k = 2; k <= 12; ++k) {
        const PExpansion e = f_top_expansion(k);
        CHECK(e.top_weight() == k + 1);
        for (const auto& [l, c] : e.terms()) CHECK(weight(l) == k + 1);
        CHECK(e.terms().at(IntPartition{k}) == make_rational(1, k));
    }
}

TEST_CASE("q-averages") {
    CHECK(q_average(IntPartition{}, 10) == QSeries::constant(1, 10));
    QSeries g2(20);
    g2[0] = make_rational(-1, 24);
    for (int n = 1; n <= 20; ++n)
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) g2[n] += d;
    CHECK(q_average(IntPartition{1}, 20) == g2);
    CHECK(q_average(IntPartition{2}, 20).is_zero());
    for (const IntPartition& mu : {IntPartition{2, 1, 1}, IntPartition{3, 2}, IntPartition{4}, IntPartition{2, 1, 1, 1}}) {
        REQUIRE(weight(mu) % 2 == 1);
        CHECK(q_average(mu, 12).is_zero());
    }
    for (const IntPartition& mu : {IntPartition{1, 1}, IntPartition{3}, IntPartition{3, 1}}) {
        Rational constant = 1;
        for (int k : mu.parts()) constant *= p_eval(k, IntPartition{});
        CHECK(q_average(mu, 8)[0] == constant);
    }
}

TEST_CASE("partition count series inverts the Euler series") {
    CHECK(euler_series(20) * partition_count_series(20) == QSeries::constant(1, 20));
    CHECK(partition_count_series(10)[10] == 42);
}
