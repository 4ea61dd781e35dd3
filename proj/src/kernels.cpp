#include "qgrowth/kernels.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace qgrowth::kernels {

namespace {

int thread_cap = 0;

// Outputs below this size are not worth a parallel region.
constexpr std::size_t parallel_threshold = 256;

// Longest run of products that can be summed in a uint64 without overflow.
std::size_t safe_run(residue m)
{
    const std::uint64_t top = static_cast<std::uint64_t>(m - 1);
    if (top == 0)
        return std::numeric_limits<std::size_t>::max();
    const std::uint64_t sq = top * top;
    const std::uint64_t run = std::numeric_limits<std::uint64_t>::max() / sq;
    return static_cast<std::size_t>(std::max<std::uint64_t>(run - 1, 1));
}

// sum_{t < len} x[t] * y[t] mod m, y read forwards.
residue dot_mod(const residue* x, const residue* y, std::size_t len, residue m, std::size_t run)
{
    std::uint64_t total = 0;
    std::size_t t = 0;
    while (t < len) {
        const std::size_t stop = std::min(len, t + run);
        std::uint64_t acc = 0;
        for (std::size_t s = t; s < stop; ++s)
            acc += static_cast<std::uint64_t>(x[s]) * y[s];
        total = (total + acc % m) % m;
        t = stop;
    }
    return static_cast<residue>(total);
}

std::vector<std::size_t> nonzero_indices(std::span<const residue> a)
{
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            nz.push_back(i);
    return nz;
}

std::vector<std::size_t> nonzero_indices(std::span<const Integer> a)
{
    std::vector<std::size_t> nz;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0)
            nz.push_back(i);
    return nz;
}

int threads_for(std::size_t work)
{
    return work < parallel_threshold ? 1 : max_threads();
}

} // namespace

int max_threads()
{
#if defined(_OPENMP)
    return thread_cap > 0 ? thread_cap : omp_get_max_threads();
#else
    return 1;
#endif
}

void set_threads(int n) { thread_cap = n > 0 ? n : 0; }

residue inverse_mod(residue a, residue m)
{
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = m, new_r = a % m;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0)
        t += m;
    return static_cast<residue>(t);
}

std::vector<residue> convolve_mod(std::span<const residue> a, std::span<const residue> b, residue m,
                                  std::size_t out_len)
{
    if (a.size() > b.size())
        std::swap(a, b);
    out_len = std::min(out_len, a.empty() || b.empty() ? 0 : a.size() + b.size() - 1);
    std::vector<residue> out(out_len, 0);
    if (out_len == 0)
        return out;
    const std::size_t run = safe_run(m);
    const std::vector<std::size_t> nz = nonzero_indices(a);

    if (nz.size() * 4 < a.size()) {
        // Sparse left operand: gather over its support.
        const auto nthreads = threads_for(out_len);
#pragma omp parallel for schedule(dynamic, 64) num_threads(nthreads)
        for (std::size_t k = 0; k < out_len; ++k) {
            std::uint64_t total = 0;
            std::size_t since = 0;
            for (std::size_t i : nz) {
                if (i > k)
                    break;
                if (k - i >= b.size())
                    continue;
                total += static_cast<std::uint64_t>(a[i]) * b[k - i];
                if (++since == run) {
                    total %= m;
                    since = 0;
                }
            }
            out[k] = static_cast<residue>(total % m);
        }
        return out;
    }

    // Dense: dot a against b reversed, so both run forwards.
    std::vector<residue> rb(b.rbegin(), b.rend());
    const std::size_t nb = b.size();
    const auto nthreads = threads_for(out_len);
#pragma omp parallel for schedule(dynamic, 64) num_threads(nthreads)
    for (std::size_t k = 0; k < out_len; ++k) {
        const std::size_t lo = k + 1 > nb ? k + 1 - nb : 0;
        const std::size_t hi = std::min(k, a.size() - 1);
        if (lo > hi)
            continue;
        // b[k - i] == rb[nb - 1 - k + i]
        out[k] = dot_mod(a.data() + lo, rb.data() + (nb - 1 - k + lo), hi - lo + 1, m, run);
    }
    return out;
}

std::vector<residue> square_mod(std::span<const residue> a, residue m, std::size_t out_len)
{
    out_len = std::min(out_len, a.empty() ? 0 : 2 * a.size() - 1);
    std::vector<residue> out(out_len, 0);
    if (out_len == 0)
        return out;
    if (nonzero_indices(a).size() * 4 < a.size())
        return convolve_mod(a, a, m, out_len);
    const std::size_t run = safe_run(m);
    std::vector<residue> ra(a.rbegin(), a.rend());
    const std::size_t na = a.size();
    const auto nthreads = threads_for(out_len);
#pragma omp parallel for schedule(dynamic, 64) num_threads(nthreads)
    for (std::size_t k = 0; k < out_len; ++k) {
        // Pairs (i, k - i) with i < k - i, doubled, plus the diagonal.
        const std::size_t lo = k + 1 > na ? k + 1 - na : 0;
        const std::size_t half = (k + 1) / 2; // i < half  <=>  i < k - i
        std::uint64_t v = 0;
        if (lo < half)
            v = 2 * static_cast<std::uint64_t>(dot_mod(a.data() + lo, ra.data() + (na - 1 - k + lo), half - lo, m, run));
        if (k % 2 == 0 && k / 2 < na)
            v += static_cast<std::uint64_t>(a[k / 2]) * a[k / 2] % m;
        out[k] = static_cast<residue>(v % m);
    }
    return out;
}

std::vector<Integer> convolve(std::span<const Integer> a, std::span<const Integer> b, std::size_t out_len)
{
    out_len = std::min(out_len, a.empty() || b.empty() ? 0 : a.size() + b.size() - 1);
    std::vector<Integer> out(out_len);
    if (out_len == 0)
        return out;
    const std::vector<std::size_t> nza = nonzero_indices(a);
    const std::vector<std::size_t> nzb = nonzero_indices(b);
    // Gather over the sparser support.
    const bool left = nza.size() <= nzb.size();
    const auto& nz = left ? nza : nzb;
    const auto& x = left ? a : b;
    const auto& y = left ? b : a;
    const auto nthreads = threads_for(out_len);
#pragma omp parallel for schedule(dynamic, 16) num_threads(nthreads)
    for (std::size_t k = 0; k < out_len; ++k) {
        Integer acc;
        for (std::size_t i : nz) {
            if (i > k)
                break;
            if (k - i >= y.size())
                continue;
            mpz_addmul(acc.get_mpz_t(), x[i].get_mpz_t(), y[k - i].get_mpz_t());
        }
        out[k] = std::move(acc);
    }
    return out;
}

std::vector<residue> invert_mod(std::span<const residue> a, residue m, std::size_t out_len)
{
    std::vector<residue> c(out_len, 0);
    if (out_len == 0)
        return c;
    const residue lead_inv = inverse_mod(a[0], m);
    std::vector<std::size_t> nz = nonzero_indices(a);
    if (!nz.empty() && nz.front() == 0)
        nz.erase(nz.begin());
    const std::size_t run = safe_run(m);
    c[0] = lead_inv;
    for (std::size_t n = 1; n < out_len; ++n) {
        std::uint64_t total = 0;
        std::size_t since = 0;
        for (std::size_t i : nz) {
            if (i > n)
                break;
            total += static_cast<std::uint64_t>(a[i]) * c[n - i];
            if (++since == run) {
                total %= m;
                since = 0;
            }
        }
        const std::uint64_t s = total % m;
        c[n] = static_cast<residue>((m - s) % m * static_cast<std::uint64_t>(lead_inv) % m);
    }
    return c;
}

std::vector<Integer> invert(std::span<const Integer> a, std::size_t out_len)
{
    std::vector<Integer> c(out_len);
    if (out_len == 0)
        return c;
    const Integer& lead = a[0]; // +1 or -1, its own inverse
    std::vector<std::size_t> nz = nonzero_indices(a);
    if (!nz.empty() && nz.front() == 0)
        nz.erase(nz.begin());
    c[0] = lead;
    Integer acc;
    for (std::size_t n = 1; n < out_len; ++n) {
        acc = 0;
        for (std::size_t i : nz) {
            if (i > n)
                break;
            mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), c[n - i].get_mpz_t());
        }
        if (lead > 0)
            c[n] = -acc;
        else
            c[n] = acc;
    }
    return c;
}

namespace serial {

std::vector<residue> convolve_mod(std::span<const residue> a, std::span<const residue> b, residue m,
                                  std::size_t out_len)
{
    out_len = std::min(out_len, a.empty() || b.empty() ? 0 : a.size() + b.size() - 1);
    std::vector<residue> out(out_len, 0);
    for (std::size_t i = 0; i < a.size() && i < out_len; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < out_len; ++j)
            out[i + j] = static_cast<residue>((out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % m);
    return out;
}

std::vector<Integer> convolve(std::span<const Integer> a, std::span<const Integer> b, std::size_t out_len)
{
    out_len = std::min(out_len, a.empty() || b.empty() ? 0 : a.size() + b.size() - 1);
    std::vector<Integer> out(out_len);
    for (std::size_t i = 0; i < a.size() && i < out_len; ++i)
        for (std::size_t j = 0; j < b.size() && i + j < out_len; ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

std::vector<residue> invert_mod(std::span<const residue> a, residue m, std::size_t out_len)
{
    std::vector<residue> c(out_len, 0);
    if (out_len == 0)
        return c;
    const residue lead_inv = kernels::inverse_mod(a[0], m);
    c[0] = lead_inv;
    for (std::size_t n = 1; n < out_len; ++n) {
        std::uint64_t s = 0;
        for (std::size_t i = 1; i <= n && i < a.size(); ++i)
            s = (s + static_cast<std::uint64_t>(a[i]) * c[n - i]) % m;
        c[n] = static_cast<residue>((m - s) % m * static_cast<std::uint64_t>(lead_inv) % m);
    }
    return c;
}

std::vector<Integer> invert(std::span<const Integer> a, std::size_t out_len)
{
    std::vector<Integer> c(out_len);
    if (out_len == 0)
        return c;
    c[0] = a[0];
    for (std::size_t n = 1; n < out_len; ++n) {
        Integer s;
        for (std::size_t i = 1; i <= n && i < a.size(); ++i)
            s += a[i] * c[n - i];
        c[n] = -a[0] * s;
    }
    return c;
}

} // namespace serial

} // namespace qgrowth::kernels
