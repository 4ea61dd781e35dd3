#ifndef QGROWTH_TESTS_SUPPORT_HPP
#define QGROWTH_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "qgrowth/arith.hpp"
#include "qgrowth/operators.hpp"
#include "qgrowth/series.hpp"

namespace qgrowth::test {

inline std::vector<Integer> to_integers(std::initializer_list<long> values)
{
    std::vector<Integer> out;
    for (long v : values)
        out.emplace_back(v);
    return out;
}

/// Uniform coefficients in [-bound, bound], zero with probability `sparsity`.
inline std::vector<Integer> random_coeffs(std::mt19937_64& rng, std::size_t len, long bound, double sparsity = 0.0)
{
    std::uniform_int_distribution<long> value(-bound, bound);
    std::bernoulli_distribution drop(sparsity);
    std::vector<Integer> out(len);
    for (auto& c : out)
        c = drop(rng) ? 0 : value(rng);
    return out;
}

inline QSeries random_series(std::mt19937_64& rng, std::int64_t grain, std::int64_t offset, std::size_t len,
                             const CoefficientRing& ring = CoefficientRing::integers(), long bound = 1000)
{
    return QSeries(grain, offset, random_coeffs(rng, len, bound), ring);
}

/// Schoolbook product of coefficient lists, truncated to out_len.
inline std::vector<Integer> naive_product(const std::vector<Integer>& a, const std::vector<Integer>& b,
                                          std::size_t out_len)
{
    std::vector<Integer> out(out_len, 0);
    for (std::size_t i = 0; i < a.size() && i < out_len; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < out_len; ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

/// prod_{n=1}^{len-1} (1 - q^n)^e by repeated multiplication by binomials.
inline std::vector<Integer> naive_euler_power(std::size_t len, unsigned e)
{
    std::vector<Integer> out(len, 0);
    out[0] = 1;
    for (std::size_t n = 1; n < len; ++n)
        for (unsigned rep = 0; rep < e; ++rep)
            for (std::size_t i = len; i-- > n;)
                out[i] -= out[i - n];
    return out;
}

// Integer-weight synthetic series killed by T_p exactly: a(p^e u) = g(e) r(u)
// with g(odd) = 0, g(2s) = (-c)^s, c = chi(p) p^(k-1), r random on p-free u.
inline QSeries annihilated_integer(std::mt19937_64& rng, const std::vector<std::int64_t>& primes, std::int64_t k,
                                   std::int64_t prec, const Integer& m)
{
    std::vector<Integer> coeffs(static_cast<std::size_t>(prec), 0);
    std::uniform_int_distribution<long> value(-1000, 1000);
    for (std::int64_t n = 1; n < prec; ++n) {
        std::int64_t u = n;
        Integer factor(1);
        for (auto p : primes) {
            std::int64_t e = 0;
            while (u % p == 0)
                u /= p, ++e;
            if (e % 2 == 1)
                factor = 0;
            else
                factor *= ipow(-ipow(p, static_cast<unsigned long>(k - 1)), static_cast<unsigned long>(e / 2));
        }
        // r(u) must depend on u alone.
        std::mt19937_64 local(static_cast<std::uint64_t>(u) * 7919u);
        coeffs[static_cast<std::size_t>(n)] = factor * Integer(value(local)) + m * Integer(value(rng));
    }
    return QSeries(1, 0, std::move(coeffs), CoefficientRing::integers());
}

// Half-integral synthetic series killed by T(l^2) exactly, D = 1.
inline QSeries annihilated_half(std::mt19937_64& rng, std::int64_t l, std::int64_t lambda, std::int64_t prec,
                                const Integer& m)
{
    std::vector<Integer> b(static_cast<std::size_t>(prec), 0);
    std::uniform_int_distribution<long> value(-1000, 1000);
    const int sign = lambda % 2 ? -1 : 1;
    const int chi_l = kronecker(sign, l);
    const Integer c1 = ipow(l, static_cast<unsigned long>(lambda - 1));
    const Integer c2 = ipow(l, static_cast<unsigned long>(2 * lambda - 1));
    for (std::int64_t n = 1; n < prec; ++n) {
        if (n % (l * l) != 0) {
            b[static_cast<std::size_t>(n)] = Integer(value(rng));
            continue;
        }
        const std::int64_t q = n / (l * l);
        Integer v = chi_l * kronecker(q, l) * c1 * b[static_cast<std::size_t>(q)];
        if (q % (l * l) == 0)
            v += c2 * b[static_cast<std::size_t>(q / (l * l))];
        b[static_cast<std::size_t>(n)] = -v;
    }
    for (auto& x : b)
        x += m * Integer(value(rng));
    return QSeries(1, 0, std::move(b), CoefficientRing::integers());
}

} // namespace qgrowth::test

#endif
