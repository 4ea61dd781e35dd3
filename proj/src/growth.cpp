#include "qgrowth/growth.hpp"

#include <functional>
#include <string>

#include "qgrowth/arith.hpp"
#include "qgrowth/errors.hpp"
#include "qgrowth/eta.hpp"
#include "qgrowth/operators.hpp"

namespace qgrowth {

namespace {

void require_prec(std::int64_t prec)
{
    if (prec < 1)
        throw invalid_argument("precision must be >= 1, got " + std::to_string(prec));
}

void require_M(std::int64_t M)
{
    if (M < 1)
        throw invalid_argument("M must be >= 1, got " + std::to_string(M));
}

// Constructions that divide by powers of two run over Z when 2 is not a unit.
QSeries in_ring(const CoefficientRing& ring, const std::function<QSeries(const CoefficientRing&)>& build)
{
    if (ring.is_residues() && mpz_even_p(ring.modulus().get_mpz_t()))
        return reduce_mod(build(CoefficientRing::integers()), ring.modulus());
    return build(ring);
}

// f(q) -> f(q^2), truncated to prec.
QSeries at_q_squared(const QSeries& f, std::int64_t prec) { return v_op(f, 2).truncated(prec); }

std::int64_t half_up(std::int64_t n) { return (n + 1) / 2; }

} // namespace

QSeries partition_series(std::int64_t prec, const CoefficientRing& ring)
{
    require_prec(prec);
    return invert(euler_product(prec, ring), prec);
}

QSeries even_parts_series(std::int64_t prec, const CoefficientRing& ring)
{
    require_prec(prec);
    return in_ring(ring, [prec](const CoefficientRing& r) {
        const QSeries p = partition_series(prec, r);
        // prod 1/(1 + q^n) = prod (1 - q^n) / prod (1 - q^{2n})
        const QSeries inv_plus = mul(euler_product(prec, r), at_q_squared(partition_series(half_up(prec), r), prec));
        return scalar_div_exact(add(p, inv_plus), Integer(2));
    });
}

QSeries alt_series(std::int64_t prec, const CoefficientRing& ring)
{
    require_prec(prec);
    return in_ring(ring, [prec](const CoefficientRing& r) {
        const QSeries p = partition_series(prec, r);
        const QSeries p_squared = mul(p, p);
        const QSeries p_q2 = at_q_squared(partition_series(half_up(prec), r), prec);
        return scalar_div_exact(add(p_squared, p_q2), Integer(2));
    });
}

QSeries alt_series_convolution(std::int64_t prec, const CoefficientRing& ring)
{
    require_prec(prec);
    return mul(partition_series(prec, ring), even_parts_series(prec, ring));
}

QSeries alt_series_eta(std::int64_t prec, const CoefficientRing& ring)
{
    require_prec(prec);
    return in_ring(ring, [prec](const CoefficientRing& r) {
        const std::int64_t prec24 = 24 * prec;
        const QSeries a = eta_quotient_expansion(EtaQuotient({{1, -2}}), prec24, r);
        const QSeries b = eta_quotient_expansion(EtaQuotient({{2, -1}}), prec24, r);
        // times q^(1/12) = q^(2/24)
        const QSeries sum = add(a, b).shifted(2).on_grain(1).truncated(prec);
        return scalar_div_exact(sum, Integer(2));
    });
}

QSeries wreath_alt_series(std::int64_t M, std::int64_t prec, const CoefficientRing& ring)
{
    require_M(M);
    return pow(alt_series(prec, ring), M);
}

QSeries f_M_series(std::int64_t M, std::int64_t prec, const CoefficientRing& ring)
{
    require_M(M);
    if (prec <= -M)
        throw invalid_argument("F_M starts at q^-M; precision must exceed " + std::to_string(-M));
    // wreath coefficients nu with 12 nu - M < prec
    const std::int64_t count = (prec + M + 11) / 12;
    return v_op(wreath_alt_series(M, count, ring), 12).shifted(-M).truncated(prec);
}

QSeries f_M_k_term(std::int64_t M, std::int64_t k, std::int64_t prec, const CoefficientRing& ring)
{
    require_M(M);
    if (k < 0 || k > M)
        throw invalid_argument("F_{M,k} needs 0 <= k <= M, got k = " + std::to_string(k));
    if (prec <= -M)
        throw invalid_argument("F_{M,k} starts at q^-M; precision must exceed " + std::to_string(-M));
    const EtaQuotient eq({{12, -2 * (M - k)}, {24, -k}}, 576);
    return eta_quotient_integral(eq, prec, ring);
}

QSeries f_M_from_terms(std::int64_t M, std::int64_t prec, const CoefficientRing& ring)
{
    require_M(M);
    return in_ring(ring, [M, prec](const CoefficientRing& r) {
        QSeries sum = scalar_mul(f_M_k_term(M, 0, prec, r), Integer(1));
        for (std::int64_t k = 1; k <= M; ++k)
            sum = add(sum, scalar_mul(f_M_k_term(M, k, prec, r),
                                      binomial(static_cast<unsigned long>(M), static_cast<unsigned long>(k))));
        return scalar_div_exact(sum, ipow(2, static_cast<unsigned long>(M)));
    });
}

QSeries growth_series(const GrowthSeriesSpec& spec, const CoefficientRing& ring)
{
    switch (spec.family) {
    case GrowthFamily::sym:
        return partition_series(spec.prec, ring);
    case GrowthFamily::alt:
        return alt_series(spec.prec, ring);
    case GrowthFamily::wreath_alt:
        return wreath_alt_series(spec.M, spec.prec, ring);
    }
    throw invalid_argument("unknown growth family");
}

} // namespace qgrowth
