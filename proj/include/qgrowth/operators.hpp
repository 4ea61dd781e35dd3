#ifndef QGROWTH_OPERATORS_HPP
#define QGROWTH_OPERATORS_HPP

#include <cstdint>

#include "qgrowth/series.hpp"

namespace qgrowth {

enum class HeckeKind { integer_weight, half_integral };

/// Weight data for a Hecke operator with a real character (D / .).
///
/// `weight` is k for integer weight and lambda for weight lambda + 1/2.
struct HeckeParams {
    HeckeKind kind = HeckeKind::integer_weight;
    std::int64_t weight = 0;
    std::int64_t character_top = 1;
    std::int64_t level = 1;

    static HeckeParams integer_weight(std::int64_t k, std::int64_t D = 1, std::int64_t level = 1)
    {
        return {HeckeKind::integer_weight, k, D, level};
    }
    static HeckeParams half_integral(std::int64_t lambda, std::int64_t D = 1, std::int64_t level = 1)
    {
        return {HeckeKind::half_integral, lambda, D, level};
    }
};

/// Kronecker symbol (a / n) for all integers a, n.
int kronecker(std::int64_t a, std::int64_t n);

/// f | U_t: coefficient n of the result is coefficient t*n of f (any grain).
QSeries u_op(const QSeries& f, std::int64_t t);

/// f | V_t: q^(n/d) -> q^(tn/d); prec becomes t*N.
QSeries v_op(const QSeries& f, std::int64_t t);

/// a(pn) + (D/p) p^(k-1) a(n/p). Needs grain 1, offset >= 0, p prime, p not dividing level.
QSeries hecke_integer(const QSeries& f, std::int64_t p, const HeckeParams& params);

/// b(l^2 m) + chi*(l) (m/l) l^(lambda-1) b(m) + chi*(l^2) l^(2 lambda-1) b(m/l^2),
/// chi*(x) = ((-1)^lambda / x) (D / x). Needs l odd prime not dividing 4*level.
QSeries hecke_half_integral(const QSeries& f, std::int64_t ell, const HeckeParams& params);

/// Applies hecke_integer or hecke_half_integral according to params.kind.
QSeries hecke(const QSeries& f, std::int64_t prime, const HeckeParams& params);

/// Coefficient n of the result is coefficient A*n + B of f (grain 1).
QSeries progression_extract(const QSeries& f, std::int64_t A, std::int64_t B);

} // namespace qgrowth

#endif
