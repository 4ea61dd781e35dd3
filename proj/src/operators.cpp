#include "qgrowth/operators.hpp"

#include <string>

#include "qgrowth/arith.hpp"
#include "qgrowth/errors.hpp"

namespace qgrowth {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::int64_t mod_nonneg(std::int64_t a, std::int64_t m)
{
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

int jacobi_odd(std::int64_t a, std::int64_t n)
{
    // n odd and positive
    a = mod_nonneg(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t r = n % 8;
            if (r == 3 || r == 5)
                result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

int kronecker_two(std::int64_t a)
{
    const std::int64_t r = mod_nonneg(a, 8);
    if (r % 2 == 0)
        return 0;
    return (r == 1 || r == 7) ? 1 : -1;
}

void require_integral(const QSeries& f, const char* op)
{
    if (f.grain() != 1)
        throw invalid_argument(std::string(op) + " needs integral exponents (grain 1); convert with on_grain(1)");
    if (f.offset() < 0)
        throw invalid_argument(std::string(op) + " needs a series without negative exponents");
}

// p^e as a ring element; negative e needs p invertible in the ring.
Integer ring_power(std::int64_t p, std::int64_t e, const CoefficientRing& ring)
{
    if (e >= 0)
        return ipow(p, static_cast<unsigned long>(e));
    if (!ring.is_residues())
        throw arithmetic_error("p^" + std::to_string(e) + " is not an integer; use a residue ring");
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), from_i64(p).get_mpz_t(), ring.modulus().get_mpz_t()) == 0)
        throw arithmetic_error(std::to_string(p) + " is not invertible in " + ring.describe());
    return ipow(inv, static_cast<unsigned long>(-e));
}

} // namespace

int kronecker(std::int64_t a, std::int64_t n)
{
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0)
            sign = -1;
    }
    int two_part = 1;
    while (n % 2 == 0) {
        n /= 2;
        two_part *= kronecker_two(a);
        if (two_part == 0)
            return 0;
    }
    return sign * two_part * jacobi_odd(a, n);
}

QSeries u_op(const QSeries& f, std::int64_t t)
{
    if (t < 1)
        throw invalid_argument("U_t needs t >= 1, got " + std::to_string(t));
    const std::int64_t prec = ceil_div(f.prec(), t);
    const std::int64_t offset = std::min(ceil_div(f.offset(), t), prec - 1);
    std::vector<Integer> out(static_cast<std::size_t>(prec - offset));
    for (std::int64_t n = offset; n < prec; ++n)
        out[static_cast<std::size_t>(n - offset)] = f.coefficient_at(t * n);
    return QSeries(f.grain(), offset, std::move(out), f.ring());
}

QSeries v_op(const QSeries& f, std::int64_t t)
{
    if (t < 1)
        throw invalid_argument("V_t needs t >= 1, got " + std::to_string(t));
    const auto coeffs = f.coeffs();
    std::vector<Integer> out(coeffs.size() * static_cast<std::size_t>(t));
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out[i * static_cast<std::size_t>(t)] = coeffs[i];
    return QSeries(f.grain(), f.offset() * t, std::move(out), f.ring());
}

QSeries hecke_integer(const QSeries& f, std::int64_t p, const HeckeParams& params)
{
    if (params.kind != HeckeKind::integer_weight)
        throw invalid_argument("hecke_integer needs integer-weight parameters");
    if (!is_prime(p))
        throw invalid_argument("T_p needs a prime, got " + std::to_string(p));
    if (params.level % p == 0)
        throw invalid_argument("T_p needs p not dividing the level: p = " + std::to_string(p) + ", level " +
                               std::to_string(params.level));
    require_integral(f, "hecke_integer");
    const std::int64_t prec = f.prec() / p;
    if (prec < 1)
        throw precision_error("T_" + std::to_string(p) + " needs precision > " + std::to_string(p));
    const Integer scale = kronecker(params.character_top, p) * ring_power(p, params.weight - 1, f.ring());
    std::vector<Integer> out(static_cast<std::size_t>(prec));
    for (std::int64_t n = 0; n < prec; ++n) {
        Integer c = f.coefficient_at(p * n);
        if (n % p == 0)
            c += scale * f.coefficient_at(n / p);
        out[static_cast<std::size_t>(n)] = std::move(c);
    }
    return QSeries(1, 0, std::move(out), f.ring());
}

QSeries hecke_half_integral(const QSeries& f, std::int64_t ell, const HeckeParams& params)
{
    if (params.kind != HeckeKind::half_integral)
        throw invalid_argument("hecke_half_integral needs half-integral parameters");
    if (ell % 2 == 0 || !is_prime(ell))
        throw invalid_argument("T(l^2) needs an odd prime, got " + std::to_string(ell));
    if ((4 * params.level) % ell == 0)
        throw invalid_argument("T(l^2) needs l not dividing 4*level: l = " + std::to_string(ell) + ", level " +
                               std::to_string(params.level));
    require_integral(f, "hecke_half_integral");
    const std::int64_t ell2 = ell * ell;
    const std::int64_t prec = f.prec() / ell2;
    if (prec < 1)
        throw precision_error("T(" + std::to_string(ell) + "^2) needs precision > " + std::to_string(ell2));
    const std::int64_t lambda = params.weight;
    const std::int64_t sign = (lambda % 2 == 0) ? 1 : -1;
    auto chi_star = [&](std::int64_t x) { return kronecker(sign, x) * kronecker(params.character_top, x); };
    const Integer middle = chi_star(ell) * ring_power(ell, lambda - 1, f.ring());
    const Integer last = chi_star(ell2) * ring_power(ell, 2 * lambda - 1, f.ring());
    std::vector<Integer> out(static_cast<std::size_t>(prec));
    for (std::int64_t m = 0; m < prec; ++m) {
        Integer c = f.coefficient_at(ell2 * m);
        const int leg = kronecker(m, ell);
        if (leg != 0)
            c += leg * middle * f.coefficient_at(m);
        if (m % ell2 == 0)
            c += last * f.coefficient_at(m / ell2);
        out[static_cast<std::size_t>(m)] = std::move(c);
    }
    return QSeries(1, 0, std::move(out), f.ring());
}

QSeries hecke(const QSeries& f, std::int64_t prime, const HeckeParams& params)
{
    return params.kind == HeckeKind::integer_weight ? hecke_integer(f, prime, params)
                                                    : hecke_half_integral(f, prime, params);
}

QSeries progression_extract(const QSeries& f, std::int64_t A, std::int64_t B)
{
    if (A < 1)
        throw invalid_argument("progression step must be >= 1, got " + std::to_string(A));
    if (f.grain() != 1)
        throw invalid_argument("progression_extract needs grain 1");
    const std::int64_t first = ceil_div(f.offset() - B, A);
    const std::int64_t prec = floor_div(f.prec() - B - 1, A) + 1;
    if (prec <= first)
        throw precision_error("no coefficient of " + std::to_string(A) + "n + " + std::to_string(B) +
                              " lies in the known range [" + std::to_string(f.offset()) + ", " +
                              std::to_string(f.prec()) + ")");
    std::vector<Integer> out(static_cast<std::size_t>(prec - first));
    for (std::int64_t n = first; n < prec; ++n)
        out[static_cast<std::size_t>(n - first)] = f.coefficient_at(A * n + B);
    return QSeries(1, first, std::move(out), f.ring());
}

} // namespace qgrowth
