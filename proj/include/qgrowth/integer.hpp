#ifndef QGROWTH_INTEGER_HPP
#define QGROWTH_INTEGER_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qgrowth {

using Integer = mpz_class;

inline std::string to_string(const Integer& z) { return z.get_str(10); }

/// Parses a base-10 integer with optional sign; throws invalid_argument.
Integer parse_integer(std::string_view text);

/// Least non-negative residue of z modulo m (m > 0).
inline Integer mod_floor(const Integer& z, const Integer& m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool fits_u32(const Integer& z) { return sgn(z) >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 32; }

inline bool fits_i64(const Integer& z) { return mpz_sizeinbase(z.get_mpz_t(), 2) <= 62; }

inline std::int64_t to_i64(const Integer& z)
{
    // mpz_get_si is long; long is 64-bit on every supported target.
    return static_cast<std::int64_t>(mpz_get_si(z.get_mpz_t()));
}

inline std::uint64_t to_u64(const Integer& z) { return static_cast<std::uint64_t>(mpz_get_ui(z.get_mpz_t())); }

inline Integer from_i64(std::int64_t v) { return Integer(static_cast<long>(v)); }

inline Integer from_u64(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }

inline Integer ipow(const Integer& base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

} // namespace qgrowth

#endif
