#ifndef QGROWTH_KERNELS_HPP
#define QGROWTH_KERNELS_HPP

// Coefficient-array kernels behind QSeries arithmetic.
//
// Residue kernels take values already reduced into [0, m) with 2 <= m < 2^32.
// Every kernel in namespace `kernels` has a plain reference twin in
// `kernels::serial`; the two must agree bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qgrowth/integer.hpp"

namespace qgrowth::kernels {

using residue = std::uint32_t;

/// Number of OpenMP threads the parallel kernels use (1 without OpenMP).
int max_threads();

/// Caps the parallel kernels at n threads; n <= 0 restores the runtime default.
void set_threads(int n);

/// out[k] = sum_i a[i] * b[k - i] mod m for k < out_len.
std::vector<residue> convolve_mod(std::span<const residue> a, std::span<const residue> b, residue m,
                                  std::size_t out_len);

/// convolve_mod(a, a, m, out_len) using the symmetry of the square.
std::vector<residue> square_mod(std::span<const residue> a, residue m, std::size_t out_len);

std::vector<Integer> convolve(std::span<const Integer> a, std::span<const Integer> b, std::size_t out_len);

/// Power-series reciprocal to out_len terms. a[0] must be invertible mod m.
/// The recurrence is sequential; zero entries of a are skipped.
std::vector<residue> invert_mod(std::span<const residue> a, residue m, std::size_t out_len);

/// Power-series reciprocal over Z; a[0] must be +1 or -1.
std::vector<Integer> invert(std::span<const Integer> a, std::size_t out_len);

/// Inverse of a modulo m; precondition gcd(a, m) = 1.
residue inverse_mod(residue a, residue m);

namespace serial {

std::vector<residue> convolve_mod(std::span<const residue> a, std::span<const residue> b, residue m,
                                  std::size_t out_len);
std::vector<Integer> convolve(std::span<const Integer> a, std::span<const Integer> b, std::size_t out_len);
std::vector<residue> invert_mod(std::span<const residue> a, residue m, std::size_t out_len);
std::vector<Integer> invert(std::span<const Integer> a, std::size_t out_len);

} // namespace serial

} // namespace qgrowth::kernels

#endif
