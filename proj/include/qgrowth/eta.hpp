#ifndef QGROWTH_ETA_HPP
#define QGROWTH_ETA_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgrowth/series.hpp"

namespace qgrowth {

/// eta(delta z)^exponent
struct EtaFactor {
    std::int64_t delta;
    std::int64_t exponent;

    friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

/// Formal product of eta(delta z)^r_delta with level metadata. Factors are
/// kept sorted by delta with duplicates merged and zero exponents dropped.
class EtaQuotient {
public:
    /// Level defaults to the lcm of the deltas; every delta must divide it.
    explicit EtaQuotient(std::vector<EtaFactor> factors, std::optional<std::int64_t> level = std::nullopt);

    /// Parses text like "eta(1)^24 * eta(25)^-1" (whitespace-insensitive;
    /// "^1" may be omitted, "eta(24z)" is accepted).
    static EtaQuotient parse(std::string_view text, std::optional<std::int64_t> level = std::nullopt);

    const std::vector<EtaFactor>& factors() const noexcept { return factors_; }
    std::int64_t level() const noexcept { return level_; }

    /// Sum of r_delta, i.e. twice the weight.
    std::int64_t weight_times_2() const;

    /// Sum of delta * r_delta: the leading exponent in units of 1/24.
    std::int64_t order_at_infinity_24() const;

    std::string to_string() const;

    /// Concatenation of factor lists; level is the lcm of both levels.
    friend EtaQuotient operator*(const EtaQuotient& a, const EtaQuotient& b);

    friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

private:
    std::vector<EtaFactor> factors_;
    std::int64_t level_;
};

struct ModularityVerdict {
    std::int64_t weight_times_2 = 0;
    bool cond_A = false; ///< sum delta r_delta = 0 mod 24
    bool cond_B = false; ///< sum (N/delta) r_delta = 0 mod 24
    bool weight_is_integral = false;
    /// Reduced s = prod delta^r_delta as numerator / denominator (den > 0).
    Integer s_num;
    Integer s_den;
    /// Top argument D of the Kronecker character (D / d): (-1)^k * num * den
    /// for integral weight k, num * den otherwise.
    Integer character_top;

    bool holds() const noexcept { return cond_A && cond_B; }
};

/// prod_{n>=1} (1 - q^n) on grain 1 with prec `terms`, by the pentagonal theorem.
QSeries euler_product(std::int64_t terms, const CoefficientRing& ring = CoefficientRing::integers());

/// eta(z) = q^(1/24) prod (1 - q^n) on grain 24, known below q^(prec24/24).
QSeries eta_expansion(std::int64_t prec24, const CoefficientRing& ring = CoefficientRing::integers());

/// Expansion on grain 24 with offset order_at_infinity_24(), known below prec24.
QSeries eta_quotient_expansion(const EtaQuotient& eq, std::int64_t prec24,
                               const CoefficientRing& ring = CoefficientRing::integers());

/// Same expansion moved to grain 1; prec is in integer exponents. Throws if
/// the quotient's support is not integral.
QSeries eta_quotient_integral(const EtaQuotient& eq, std::int64_t prec,
                              const CoefficientRing& ring = CoefficientRing::integers());

ModularityVerdict modularity_check(const EtaQuotient& eq);

/// F_p: eta^(p^2)(z)/eta(p^2 z) for p >= 5, eta^27(z)/eta^3(9z) for p = 3.
EtaQuotient f_p_quotient(std::int64_t p);

} // namespace qgrowth

#endif
