#include "stratavol/characters.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <thread>

using namespace stratavol;

namespace {

int sign_of(const IntPartition& cycle_type) {
    int even_cycles = 0;
    for (int c : cycle_type.parts()) even_cycles += (c % 2 == 0);
    return even_cycles % 2 ? -1 : 1;
}

std::filesystem::path fresh_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("stratavol-test-" + name);
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("character examples") {
    for (const auto& rho : enum_int_partitions(5)) CHECK(character(IntPartition{5}, rho) == 1);
    CHECK(character(IntPartition{1, 1}, IntPartition{2}) == -1);
    CHECK(character(IntPartition{2, 1}, IntPartition{1, 1, 1}) == 2);
    CHECK(character(IntPartition{2, 1}, IntPartition{3}) == -1);
    CHECK(character(IntPartition{2, 2}, IntPartition{2, 2}) == 2);
    CHECK_THROWS_AS(character(IntPartition{2, 1}, IntPartition{2}), DomainError);
}

TEST_CASE("dimensions") {
    CHECK(dimension(IntPartition{4}) == 1);
    CHECK(dimension(IntPartition{1, 1, 1}) == 1);
    CHECK(dimension(IntPartition{3, 2}) == 5);
    for (int d = 1; d <= 8; ++d) {
        BigInt sum = 0;
        for (const auto& l : enum_int_partitions(d)) {
            CHECK(dimension(l) == dimension(l.conjugate()));
            CHECK(dimension(l) == character(l, IntPartition(std::vector<int>(d, 1))));
            sum += dimension(l) * dimension(l);
        }
        CHECK(sum == factorial(d));
    }
}

TEST_CASE("class sizes") {
    CHECK(m_cycle_class_size(2, 2) == 1);
    CHECK(m_cycle_class_size(4, 2) == 6);
    CHECK(m_cycle_class_size(3, 5) == 0);
    for (int d = 1; d <= 7; ++d) {
        BigInt total = 0;
        for (const auto& c : enum_int_partitions(d)) total += class_size(c);
        CHECK(total == factorial(d));
    }
}

TEST_CASE("column orthogonality and sign symmetry") {
    for (int d = 1; d <= 6; ++d) {
        const auto parts = enum_int_partitions(d);
        for (const auto& rho : parts) {
            for (const auto& sigma : parts) {
                BigInt sum = 0;
                for (const auto& l : parts) sum += character(l, rho) * character(l, sigma);
                CHECK(sum * class_size(rho) == (rho == sigma ? factorial(d) : BigInt(0)));
            }
            for (const auto& l : parts) CHECK(character(l.conjugate(), rho) == sign_of(rho) * character(l, rho));
        }
    }
}

TEST_CASE("central characters") {
    CHECK(central_char_f(2, IntPartition{2}) == 1);
    CHECK(central_char_f(2, IntPartition{1, 1}) == -1);
    CHECK(central_char_f(3, IntPartition{1, 1}) == 0);
    CHECK_THROWS_AS(central_char_f(1, IntPartition{1}), DomainError);
    for (int d = 2; d <= 6; ++d)
        for (const auto& l : enum_int_partitions(d))
            for (int m = 2; m <= d; ++m) {
                const Rational expected = (m % 2 ? 1 : -1) * central_char_f(m, l);
                CHECK(central_char_f(m, l.conjugate()) == expected);
            }
    // f_2 is the content sum
    for (const auto& l : enum_int_partitions(7)) {
        long content = 0;
        for (int i = 0; i < l.length(); ++i)
            for (int j = 0; j < l[i]; ++j) content += j - i;
        CHECK(central_char_f(2, l) == content);
    }
}

TEST_CASE("concurrent character evaluation") {
    CharTableCache::global().clear();
    const auto parts = enum_int_partitions(9);
    std::vector<BigInt> serial;
    for (const auto& l : parts) serial.push_back(character(l, IntPartition{3, 3, 2, 1}));
    CharTableCache::global().clear();
    std::vector<std::vector<BigInt>> results(4);
    {
        std::vector<std::jthread> pool;
        for (int t = 0; t < 4; ++t)
            pool.emplace_back([&, t] {
                for (const auto& l : parts) results[t].push_back(character(l, IntPartition{3, 3, 2, 1}));
            });
    }
    for (const auto& r : results) CHECK(r == serial);
}

TEST_CASE("persistent cache round trip") {
    auto& cache = CharTableCache::global();
    const auto dir = fresh_dir("roundtrip");
    cache.clear();
    cache.attach_directory(dir);
    const BigInt value = character(IntPartition{3, 2, 1}, IntPartition{3, 3});
    CHECK(cache.flush() >= 1);
    const auto file = CharTableCache::file_for_degree(dir, 6);
    REQUIRE(std::filesystem::exists(file));
    cache.detach_directory();

    cache.clear();
    cache.attach_directory(dir);
    const auto found = cache.find(CharacterKey{IntPartition{3, 2, 1}, IntPartition{3, 3}});
    REQUIRE(found.has_value());
    CHECK(*found == value);
    CHECK(cache.flush() == 0);
    cache.detach_directory();
    cache.clear();
    std::filesystem::remove_all(dir);
}

TEST_CASE("corrupt or foreign cache files are ignored and rewritten") {
    auto& cache = CharTableCache::global();
    const auto dir = fresh_dir("corrupt");
    std::filesystem::create_directories(dir);
    const auto file = CharTableCache::file_for_degree(dir, 5);
    {
        std::ofstream(file) << "{ not json";
    }
    cache.clear();
    cache.attach_directory(dir);
    CHECK(character(IntPartition{3, 2}, IntPartition{2, 2, 1}) == 1);
    CHECK(cache.flush() >= 1);
    cache.detach_directory();

    {
        std::ofstream(file) << R"({"format":"stratavol-chartable","version":999,"degree":5,"entries":[[[5],[5],"42"]]})";
    }
    cache.clear();
    cache.attach_directory(dir);
    CHECK_FALSE(cache.find(CharacterKey{IntPartition{5}, IntPartition{5}}).has_value());
    CHECK(character(IntPartition{5}, IntPartition{5}) == 1);
    cache.detach_directory();
    cache.clear();
    std::filesystem::remove_all(dir);
}

TEST_CASE("default cache directory honours STRATAVOL_CACHE") {
    setenv("STRATAVOL_CACHE", "/tmp/stratavol-env-check", 1);
    CHECK(default_cache_directory() == std::filesystem::path("/tmp/stratavol-env-check"));
    unsetenv("STRATAVOL_CACHE");
    CHECK_FALSE(default_cache_directory().empty());
}
