#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hermarc/cyclo.hpp"

#include <cmath>
#include <random>

using namespace hermarc::cyclo;

namespace {

CycloInt random_element(std::uint32_t m, std::mt19937_64& rng)
{
    std::vector<std::int64_t> counts(m, 0);
    for (auto& c : counts)
        c = static_cast<std::int64_t>(rng() % 21) - 10;
    return CycloInt::from_exponent_counts(m, counts);
}

} // namespace

TEST_CASE("cyclotomic relations")
{
    for (std::uint32_t p : {3u, 5u, 7u}) {
        CycloInt sum(p);
        for (std::uint32_t k = 0; k < p; ++k)
            sum += CycloInt::zeta_pow(p, k);
        CHECK(sum.is_zero());
    }
    CHECK(CycloInt::zeta_pow(5, 2).conj() == CycloInt::zeta_pow(5, 3));
    CHECK(CycloInt::zeta_pow(12, 3) * CycloInt::zeta_pow(12, 3) == CycloInt::integer(12, -1));
    CHECK(CycloInt::zeta_pow(2, 1) == CycloInt::integer(2, -1));
    CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
    CHECK(phi(20) == 8);
    CHECK_THROWS(phi(9));
    for (std::uint32_t m : {2u, 3u, 5u, 7u, 12u, 20u})
        for (std::int64_t k = -3; k < 2 * static_cast<std::int64_t>(m); ++k)
            CHECK(CycloInt::zeta_pow(m, k).norm_sq() == CycloInt::integer(m, 1));
}

TEST_CASE("mixed indices are rejected")
{
    CHECK_THROWS_AS(CycloInt::zeta_pow(3, 1) + CycloInt::zeta_pow(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(CycloInt::zeta_pow(3, 1) * CycloInt::zeta_pow(12, 1), std::invalid_argument);
}

TEST_CASE("ring laws")
{
    std::mt19937_64 rng(2024);
    for (std::uint32_t m : {2u, 3u, 5u, 7u, 12u, 20u}) {
        CAPTURE(m);
        for (int i = 0; i < 1000; ++i) {
            const auto x = random_element(m, rng);
            const auto y = random_element(m, rng);
            const auto z = random_element(m, rng);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            CHECK((x - x).is_zero());
            CHECK((x * y).conj() == x.conj() * y.conj());
        }
    }
}

TEST_CASE("exact norms agree with floating point")
{
    std::mt19937_64 rng(9);
    for (std::uint32_t m : {2u, 3u, 5u, 7u, 12u, 20u}) {
        for (int i = 0; i < 100; ++i) {
            const auto z = random_element(m, rng);
            const auto exact = z.norm_sq();
            const auto approx = std::norm(z.to_complex());
            const auto as_c = exact.to_complex();
            CHECK(std::abs(as_c.real() - approx) < 1e-6 * std::max(1.0, approx));
            CHECK(std::abs(as_c.imag()) < 1e-6 * std::max(1.0, approx));
        }
    }
}

TEST_CASE("lifting preserves values")
{
    std::mt19937_64 rng(1);
    for (std::uint32_t p : {3u, 5u, 7u}) {
        for (int i = 0; i < 100; ++i) {
            const auto x = random_element(p, rng);
            const auto y = random_element(p, rng);
            CHECK((x * y).lift(4 * p) == x.lift(4 * p) * y.lift(4 * p));
            CHECK(std::abs(x.lift(4 * p).to_complex() - x.to_complex()) < 1e-6);
        }
    }
    CHECK_THROWS(CycloInt::zeta_pow(3, 1).lift(20));
}

TEST_CASE("rational integers")
{
    CHECK(*CycloInt::integer(7, 42).as_rational_integer() == 42);
    CHECK_FALSE(CycloInt::zeta_pow(7, 1).as_rational_integer().has_value());
    const BigInt big = BigInt{1} << 100;
    CHECK(*(CycloInt::integer(5, big) * CycloInt::integer(5, big)).as_rational_integer() == big * big);
}
