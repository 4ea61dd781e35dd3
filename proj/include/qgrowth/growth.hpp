#ifndef QGROWTH_GROWTH_HPP
#define QGROWTH_GROWTH_HPP

#include <cstdint>

#include "qgrowth/series.hpp"

namespace qgrowth {

// Conjugacy growth series of finitary permutation groups and of the
// alternating wreath products H wr Alt(N), where H has M conjugacy classes.
// Every `prec` below is an exclusive bound on integral exponents.

/// sum p(n) q^n = prod 1/(1 - q^n).
QSeries partition_series(std::int64_t prec, const CoefficientRing& ring = CoefficientRing::integers());

/// sum p_e(m) q^m (partitions with an even number of parts), via
/// (1/2)[prod 1/(1 - q^n) + prod 1/(1 + q^n)].
QSeries even_parts_series(std::int64_t prec, const CoefficientRing& ring = CoefficientRing::integers());

/// Growth series of Alt(N): (1/2) prod 1/(1-q^n)^2 + (1/2) prod 1/(1-q^{2n}).
QSeries alt_series(std::int64_t prec, const CoefficientRing& ring = CoefficientRing::integers());

/// The same series as the product partition_series * even_parts_series.
QSeries alt_series_convolution(std::int64_t prec, const CoefficientRing& ring = CoefficientRing::integers());

/// The same series from eta expansions: (1/2) q^(1/12)/eta(z)^2 + (1/2) q^(1/12)/eta(2z).
QSeries alt_series_eta(std::int64_t prec, const CoefficientRing& ring = CoefficientRing::integers());

/// alt_series^M: coefficient n is the number of conjugacy classes of length n in W'_M.
QSeries wreath_alt_series(std::int64_t M, std::int64_t prec, const CoefficientRing& ring = CoefficientRing::integers());

/// F_M(z) = ((1/2) eta(12z)^-2 + (1/2) eta(24z)^-1)^M on grain 1, offset -M.
/// Coefficient 12 nu - M equals wreath coefficient nu; all others vanish.
QSeries f_M_series(std::int64_t M, std::int64_t prec, const CoefficientRing& ring = CoefficientRing::integers());

/// F_{M,k} = eta(12z)^{-2(M-k)} eta(24z)^{-k}, 0 <= k <= M.
QSeries f_M_k_term(std::int64_t M, std::int64_t k, std::int64_t prec,
                   const CoefficientRing& ring = CoefficientRing::integers());

/// 2^-M sum_k C(M, k) F_{M,k}; equals f_M_series.
QSeries f_M_from_terms(std::int64_t M, std::int64_t prec, const CoefficientRing& ring = CoefficientRing::integers());

enum class GrowthFamily { sym, alt, wreath_alt };

struct GrowthSeriesSpec {
    GrowthFamily family = GrowthFamily::sym;
    std::int64_t M = 1;
    std::int64_t prec = 1;
};

QSeries growth_series(const GrowthSeriesSpec& spec, const CoefficientRing& ring = CoefficientRing::integers());

} // namespace qgrowth

#endif
