#include <doctest.h>

#include "qgrowth/errors.hpp"
#include "qgrowth/eta.hpp"
#include "qgrowth/growth.hpp"
#include "qgrowth/treneer.hpp"
#include "support.hpp"

using namespace qgrowth;

TEST_CASE("context validation")
{
    CHECK(TreneerContext::make(5, 1, 2).beta == 1);
    CHECK(TreneerContext::make(7, 2, 3).modulus() == 343);
    CHECK_THROWS_AS(TreneerContext::make(2, 1, 1), invalid_argument);
    CHECK_THROWS_AS(TreneerContext::make(9, 1, 1), invalid_argument);
    CHECK_THROWS_AS(TreneerContext::make(5, 0, 1), invalid_argument);
    CHECK_THROWS_AS(TreneerContext::make(5, 1, 3, 1), invalid_argument);
    CHECK_NOTHROW(TreneerContext::make(5, 1, 1, 4));
}

TEST_CASE("projection keeps a(p^r n) for p not dividing n and kills the rest")
{
    for (auto [p, r] : {std::pair{5L, 1L}, {5L, 2L}, {7L, 1L}, {3L, 3L}}) {
        const std::int64_t pr = ipow(p, static_cast<unsigned long>(r)).get_si();
        for (std::int64_t k : {0, 1}) {
            const QSeries f = f_M_k_term(1, k, 201 * pr);
            const QSeries proj = treneer_projection(f, p, r);
            CHECK(proj.prec() >= 201);
            for (std::int64_t n = proj.offset(); n <= 200; ++n) {
                if (n % p == 0)
                    CHECK(proj.coefficient_at(n) == 0);
                else
                    CHECK(proj.coefficient_at(n) == f.coefficient_at(pr * n));
            }
        }
    }
}

TEST_CASE("u_power composes U_p")
{
    const QSeries f = partition_series(1000);
    CHECK(equal_up_to(u_power(f, 3, 2), u_op(f, 9), u_op(f, 9).prec()));
    CHECK(equal_up_to(u_power(f, 3, 0), f, f.prec()));
}

TEST_CASE("cusp candidates stay congruent to the projection")
{
    struct Case {
        std::int64_t p, j, beta;
    };
    for (const Case c : {Case{5, 1, 0}, Case{5, 2, 1}, Case{7, 2, 1}, Case{3, 2, 1}, Case{5, 1, 2}}) {
        const auto ctx = TreneerContext::make(c.p, 1, c.j, c.beta);
        const QSeries proj = treneer_projection(f_M_k_term(1, 1, 151 * c.p), c.p, 1);
        const auto cand = cusp_candidate(proj, ctx, 150, std::pair{1L, 1L});
        CHECK(cand.congruent_to_projection);
        CHECK(equal_up_to(reduce_mod(cand.series, ctx.modulus()), reduce_mod(proj, ctx.modulus()), 150));
        const Integer pb = ipow(c.p, static_cast<unsigned long>(c.beta));
        CHECK(cand.weight_times_2 == Integer(1 - 2) + pb * (c.p * c.p - 1));
    }
    CHECK_THROWS_AS(cusp_candidate(partition_series(10), TreneerContext::make(5, 1, 1), 20), precision_error);
    CHECK_THROWS_AS(
        cusp_candidate(reduce_mod(partition_series(10), Integer(5)), TreneerContext::make(5, 1, 1), 5),
        invalid_argument);
}

TEST_CASE("F_5^5 is 1 mod 25")
{
    const auto ring = CoefficientRing::residues(Integer(25));
    const QSeries f5 = pow(eta_quotient_integral(f_p_quotient(5), 200, ring), 5);
    CHECK(equal_up_to(f5, QSeries::monomial(1, 0, Integer(1), 200, ring), 200));
    const QSeries once = eta_quotient_integral(f_p_quotient(5), 200, ring);
    CHECK_FALSE(equal_up_to(once, QSeries::monomial(1, 0, Integer(1), 200, ring), 200));
}

TEST_CASE("annihilation probe on the discriminant")
{
    const QSeries delta = eta_quotient_integral(EtaQuotient({{1, 24}}), 600);
    const auto k12 = HeckeParams::integer_weight(12);
    // tau(2) = -24, tau(3) = 252 = 2^2 3^2 7, tau(5) = 4830 = 2 3 5 7 23, tau(7) = -16744 = -2^3 7 13 23
    for (auto [Q, m] : {std::pair{2L, 3L}, {3L, 7L}, {5L, 23L}, {7L, 13L}}) {
        const auto probe = hecke_annihilation_probe(delta, Q, k12, Integer(m));
        CHECK(probe.annihilated);
        CHECK(probe.checked_to == 600 / Q);
        CHECK_FALSE(probe.consequence_indices.empty());
        CHECK(probe.consequence_violations.empty());
        for (auto idx : probe.consequence_indices) {
            std::int64_t e = 0, n = idx;
            while (n % Q == 0)
                n /= Q, ++e;
            CHECK(e % 2 == 1);
        }
    }
    const auto miss = hecke_annihilation_probe(delta, 7, k12, Integer(5));
    CHECK_FALSE(miss.annihilated);
    CHECK_THROWS_AS(hecke_annihilation_probe(delta, 5, k12, Integer(25)), invalid_argument);
}
