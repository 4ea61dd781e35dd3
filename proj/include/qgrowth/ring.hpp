#ifndef QGROWTH_RING_HPP
#define QGROWTH_RING_HPP

#include <optional>
#include <string>

#include "qgrowth/integer.hpp"

namespace qgrowth {

/// Coefficient ring of a series: the exact integers, or Z/mZ with m >= 2.
class CoefficientRing {
public:
    enum class Kind { integers, residues };

    static CoefficientRing integers() { return CoefficientRing{}; }

    /// Throws invalid_argument when m < 2.
    static CoefficientRing residues(const Integer& m);

    Kind kind() const noexcept { return modulus_ ? Kind::residues : Kind::integers; }
    bool is_residues() const noexcept { return modulus_.has_value(); }

    /// Only meaningful for residues; throws otherwise.
    const Integer& modulus() const;

    /// Canonical representative: identity over Z, least non-negative residue otherwise.
    Integer canonical(const Integer& z) const { return modulus_ ? mod_floor(z, *modulus_) : z; }
    void canonicalize(Integer& z) const
    {
        if (modulus_)
            mpz_fdiv_r(z.get_mpz_t(), z.get_mpz_t(), modulus_->get_mpz_t());
    }

    /// Modulus fits the 32-bit residue kernels.
    bool has_small_modulus() const { return modulus_ && fits_u32(*modulus_); }

    std::string describe() const;

    friend bool operator==(const CoefficientRing& a, const CoefficientRing& b)
    {
        return a.modulus_ == b.modulus_;
    }

private:
    CoefficientRing() = default;
    std::optional<Integer> modulus_;
};

} // namespace qgrowth

#endif
