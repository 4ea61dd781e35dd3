#include <doctest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "qgrowth/arith.hpp"
#include "qgrowth/congruence.hpp"
#include "qgrowth/errors.hpp"
#include "qgrowth/growth.hpp"
#include "support.hpp"

using namespace qgrowth;

namespace {

const auto Z = CoefficientRing::integers();

// Points of P^1(Z/N): pairs (c, d) with gcd(c, d, N) = 1 modulo units.
std::int64_t projective_line_size(std::int64_t N)
{
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    std::int64_t classes = 0;
    for (std::int64_t c = 0; c < N; ++c)
        for (std::int64_t d = 0; d < N; ++d) {
            if (std::gcd(std::gcd(c, d), N) != 1 || seen.count({c, d}))
                continue;
            ++classes;
            for (std::int64_t u = 1; u < N || u == 1; ++u)
                if (std::gcd(u, N) == 1)
                    seen.insert({(u * c) % N, (u * d) % N});
        }
    return classes;
}

std::int64_t valuation(std::int64_t n, std::int64_t p)
{
    std::int64_t e = 0;
    while (n % p == 0)
        n /= p, ++e;
    return e;
}

} // namespace

TEST_CASE("index of Gamma0(N) and Sturm bounds")
{
    for (std::int64_t N = 1; N <= 60; ++N)
        CHECK(gamma0_index(N) == projective_line_size(N));
    CHECK(sturm_bound(12, 1) == 1);
    CHECK(sturm_bound(2, 11) == 2);
    CHECK(sturm_bound(1, 576) == 96);
    CHECK_THROWS_AS(sturm_bound(0, 5), invalid_argument);
}

TEST_CASE("Ramanujan congruences hold on range")
{
    const QSeries p = partition_series(2000);
    for (auto [A, B] : {std::pair{5L, 4L}, {7L, 5L}, {11L, 6L}, {25L, 24L}, {49L, 47L}}) {
        const CongruenceClaim claim{"partition", A, B, Integer(A), (1999 - B) / A, std::nullopt};
        const auto r = verify_congruence(claim, p);
        CHECK(r.verdict == Verdict::holds_on_range);
        CHECK(r.verified_count == claim.n_max + 1);
    }
    const CongruenceClaim wrong{"partition", 5, 3, Integer(5), 10, std::nullopt};
    const auto r = verify_congruence(wrong, p);
    CHECK(r.verdict == Verdict::violated);
    CHECK(r.violations.front().n == 0);
    CHECK(r.violations.front().coefficient == 3);
    CHECK_THROWS_AS(verify_congruence({"partition", 5, 4, Integer(5), 400, std::nullopt}, p), precision_error);
}

TEST_CASE("residue filters restrict the checked n")
{
    ResidueFilter f{7, {2, 4}};
    CHECK(f.admits(9));
    CHECK_FALSE(f.admits(10));
    CHECK(f.admits(-3));
    const QSeries p = partition_series(500);
    const auto r = verify_congruence({"partition", 1, 0, Integer(2), 20, f}, p);
    CHECK(r.verified_count == 6); // n = 2, 4, 9, 11, 16, 18
}

TEST_CASE("scan finds exactly the known progressions and ignores worker count")
{
    const QSeries p = partition_series(1100);
    const auto mod5 = scan_congruences(p, Integer(5), 5, 200, 1, "partition");
    REQUIRE(mod5.size() == 1);
    CHECK(mod5[0].A == 5);
    CHECK(mod5[0].B == 4);
    const auto wide = scan_congruences(p, Integer(5), 25, 40, 1);
    for (int w : {2, 3, 7})
        CHECK(scan_congruences(p, Integer(5), 25, 40, w) == wide);
    CHECK(std::is_sorted(wide.begin(), wide.end(), [](const auto& a, const auto& b) {
        return std::pair{a.A, a.B} < std::pair{b.A, b.B};
    }));
    // (10, 9) and (25, 24) are implied by (5, 4); all must appear.
    auto has = [&](std::int64_t A, std::int64_t B) {
        return std::any_of(wide.begin(), wide.end(), [&](const auto& c) { return c.A == A && c.B == B; });
    };
    CHECK(has(10, 9));
    CHECK(has(25, 24));
    CHECK_THROWS_AS(scan_congruences(p, Integer(5), 6, 200), precision_error);
}

TEST_CASE("named series")
{
    CHECK(equal_up_to(named_series("wreath-alt:2", 40), wreath_alt_series(2, 40), 40));
    CHECK(equal_up_to(named_series("eta:eta(1)^24", 10), named_series("eta: eta(1z)^(24)", 10), 10));
    CHECK(named_series("f:2", 30).offset() == -2);
    CHECK(named_series("alt", 10, CoefficientRing::residues(Integer(3))).ring().is_residues());
    CHECK_THROWS_AS(named_series("nope", 10), invalid_argument);
    CHECK_THROWS_AS(named_series("wreath-alt", 10), invalid_argument);
    CHECK_THROWS_AS(named_series("wreath-alt:x", 10), invalid_argument);
    CHECK_THROWS_AS(named_series("eta:eta(", 10), invalid_argument);
}

TEST_CASE("wreath congruence modulo 5")
{
    const auto r = reproduce_wreath_congruence(5);
    CHECK(r.all_passed());
    CHECK_NOTHROW(r.require_all());
    CHECK_THROWS_AS(reproduce_wreath_congruence(11), invalid_argument);
}

TEST_CASE("propagation checker, integer weight")
{
    std::mt19937_64 rng(41);
    const Integer m(13);
    for (std::int64_t p : {2, 3, 5}) {
        const QSeries f = test::annihilated_integer(rng, {p}, 4, 3000, m);
        const auto r = propagation_check(f, {{p, HeckeParams::integer_weight(4)}}, m, 3000);
        CHECK(r.premise_holds);
        CHECK(r.conclusion_holds);
        REQUIRE_FALSE(r.checked_indices.empty());
        for (auto idx : r.checked_indices)
            CHECK(valuation(idx, p) % 2 == 1);
        // Every index with odd valuation below the bound is covered.
        std::int64_t expected = 0;
        for (std::int64_t n = 1; n < 3000; ++n)
            expected += valuation(n, p) % 2 == 1;
        CHECK(static_cast<std::int64_t>(r.checked_indices.size()) == expected);
    }
    // Two primes at once: indices need odd valuation at both.
    const QSeries f = test::annihilated_integer(rng, {3, 5}, 2, 4000, m);
    const auto r = propagation_check(f, {{3, HeckeParams::integer_weight(2)}, {5, HeckeParams::integer_weight(2)}},
                                       m, 4000);
    CHECK(r.premise_holds);
    CHECK(r.conclusion_holds);
    CHECK(std::binary_search(r.checked_indices.begin(), r.checked_indices.end(), 15));
    CHECK(std::binary_search(r.checked_indices.begin(), r.checked_indices.end(), 27 * 5 * 2));
    CHECK_FALSE(std::binary_search(r.checked_indices.begin(), r.checked_indices.end(), 9 * 5));
}

TEST_CASE("propagation checker, half-integral weight")
{
    std::mt19937_64 rng(42);
    const Integer m(11);
    for (std::int64_t l : {3, 5}) {
        for (std::int64_t lambda : {1, 2, 3}) {
            const QSeries f = test::annihilated_half(rng, l, lambda, 5000, m);
            const auto r = propagation_check(f, {{l, HeckeParams::half_integral(lambda)}}, m, 5000);
            CHECK(r.premise_holds);
            CHECK(r.conclusion_holds);
            REQUIRE_FALSE(r.checked_indices.empty());
            for (auto idx : r.checked_indices)
                CHECK(valuation(idx, l) % 4 == 3);
        }
    }
}

TEST_CASE("same prime with both kinds uses exponents 4t + 3")
{
    const QSeries zero_mod_m = scalar_mul(partition_series(3000), Integer(7));
    const auto r = propagation_check(zero_mod_m,
                                       {{3, HeckeParams::integer_weight(2)}, {3, HeckeParams::half_integral(1)}},
                                       Integer(7), 3000);
    CHECK(r.premise_holds);
    CHECK(r.conclusion_holds);
    for (auto idx : r.checked_indices)
        CHECK(valuation(idx, 3) % 4 == 3);
    CHECK(std::binary_search(r.checked_indices.begin(), r.checked_indices.end(), 27));
    CHECK(std::binary_search(r.checked_indices.begin(), r.checked_indices.end(), 2187));
    CHECK_FALSE(std::binary_search(r.checked_indices.begin(), r.checked_indices.end(), 243));
}

TEST_CASE("non-annihilated series fail at the premise")
{
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = QSeries(1, 0, test::random_coeffs(rng, 2000, 1000), Z);
        const auto integer = propagation_check(f, {{3, HeckeParams::integer_weight(2)}}, Integer(13), 2000);
        CHECK_FALSE(integer.premise_holds);
        CHECK(integer.premise_failures == std::vector<std::int64_t>{3});
        CHECK(integer.checked_indices.empty());
        const auto half = propagation_check(f, {{5, HeckeParams::half_integral(1)}}, Integer(13), 2000);
        CHECK_FALSE(half.premise_holds);
    }
    // Annihilated except for one perturbed coefficient.
    const Integer m(13);
    QSeries f = test::annihilated_integer(rng, {5}, 4, 3000, m);
    std::vector<Integer> coeffs(f.coeffs().begin(), f.coeffs().end());
    coeffs[5 * 7] += 1;
    const auto r = propagation_check(QSeries(1, 0, coeffs, Z), {{5, HeckeParams::integer_weight(4)}}, m, 3000);
    CHECK_FALSE(r.premise_holds);
    CHECK_FALSE(r.conclusion_holds);
}
