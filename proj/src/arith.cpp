#include "qgrowth/arith.hpp"

#include "qgrowth/errors.hpp"

namespace qgrowth {

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n)
{
    if (n == 0)
        throw invalid_argument("cannot factor 0");
    if (n < 0)
        n = -n;
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0)
            out.emplace_back(d, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer ipow(std::int64_t base, unsigned long e) { return ipow(from_i64(base), e); }

} // namespace qgrowth
