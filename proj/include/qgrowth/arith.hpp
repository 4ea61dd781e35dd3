#ifndef QGROWTH_ARITH_HPP
#define QGROWTH_ARITH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "qgrowth/integer.hpp"

namespace qgrowth {

/// Deterministic trial division; fine for the small primes used here.
bool is_prime(std::int64_t n);

/// Prime factorization of |n| (n != 0) as ascending (prime, exponent) pairs.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

Integer binomial(unsigned long n, unsigned long k);

/// base^e for e >= 0 as an Integer.
Integer ipow(std::int64_t base, unsigned long e);

} // namespace qgrowth

#endif
