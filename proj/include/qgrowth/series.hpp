#ifndef QGROWTH_SERIES_HPP
#define QGROWTH_SERIES_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qgrowth/integer.hpp"
#include "qgrowth/ring.hpp"

namespace qgrowth {

/// Truncated Laurent series in q^(1/grain) over an exact coefficient ring.
///
/// Exponents are measured in grain units: entry i of coeffs() is the
/// coefficient of q^((offset + i) / grain). Coefficients of exponents below
/// offset are known zeros; those at or above prec are unknown. Values are
/// immutable after construction.
class QSeries {
public:
    /// Validates and canonicalizes; prec = offset + coeffs.size().
    /// Throws invalid_argument on grain < 1 or an empty coefficient list.
    QSeries(std::int64_t grain, std::int64_t offset, std::vector<Integer> coeffs, CoefficientRing ring);

    /// All-zero series known on [offset, prec).
    static QSeries zero(std::int64_t grain, std::int64_t offset, std::int64_t prec, CoefficientRing ring);

    /// c * q^(exponent/grain), known up to prec.
    static QSeries monomial(std::int64_t grain, std::int64_t exponent, const Integer& c, std::int64_t prec,
                            CoefficientRing ring);

    std::int64_t grain() const noexcept { return grain_; }
    std::int64_t offset() const noexcept { return offset_; }
    std::int64_t prec() const noexcept { return offset_ + static_cast<std::int64_t>(coeffs_.size()); }
    const CoefficientRing& ring() const noexcept { return ring_; }
    std::span<const Integer> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of q^(n/grain). Zero below offset; precision_error at n >= prec.
    Integer coefficient_at(std::int64_t n) const;

    /// True iff every known coefficient is zero.
    bool is_zero() const;

    /// Same series written on grain * factor (exponents n -> factor * n).
    QSeries rescaled(std::int64_t factor) const;

    /// Re-expresses the series on a coarser grain g (g | grain). Throws
    /// invalid_argument if a nonzero coefficient sits off the coarser lattice.
    QSeries on_grain(std::int64_t g) const;

    /// Drops everything at or above new_prec (new_prec <= prec, > offset).
    QSeries truncated(std::int64_t new_prec) const;

    /// Multiplies by q^(shift/grain).
    QSeries shifted(std::int64_t shift) const;

private:
    std::int64_t grain_;
    std::int64_t offset_;
    std::vector<Integer> coeffs_;
    CoefficientRing ring_;
};

QSeries make_series(std::int64_t grain, std::int64_t offset, std::vector<Integer> coeffs, CoefficientRing ring);

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries negate(const QSeries& a);
QSeries mul(const QSeries& a, const QSeries& b);

/// Reciprocal with prec min(out_prec, N - 2v); the leading coefficient (at
/// offset) must be a unit.
QSeries invert(const QSeries& a, std::int64_t out_prec);

/// Binary exponentiation; negative exponents go through invert.
QSeries pow(const QSeries& a, std::int64_t e);

QSeries scalar_mul(const QSeries& a, const Integer& c);

/// Over Z every coefficient must be divisible by c; over Z/m, c must be a unit.
QSeries scalar_div_exact(const QSeries& a, const Integer& c);

/// Z -> Z/mZ, same grain, offset and precision.
QSeries reduce_mod(const QSeries& a, const Integer& m);

/// Coefficientwise agreement for every exponent below n_max (in units of the
/// common grain). An integer side is reduced when the other is residues.
bool equal_up_to(const QSeries& a, const QSeries& b, std::int64_t n_max);

/// Both series rewritten on the lcm of their grains.
std::pair<QSeries, QSeries> unify_grains(const QSeries& a, const QSeries& b);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }

} // namespace qgrowth

#endif
