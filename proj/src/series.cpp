#include "qgrowth/series.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "qgrowth/errors.hpp"
#include "qgrowth/kernels.hpp"

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

std::vector<kernels::residue> to_residues(std::span<const Integer> c)
{
    std::vector<kernels::residue> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        out[i] = static_cast<kernels::residue>(to_u64(c[i]));
    return out;
}

std::vector<Integer> from_residues(const std::vector<kernels::residue>& r)
{
    std::vector<Integer> out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        out[i] = from_u64(r[i]);
    return out;
}

void require_same_ring(const QSeries& a, const QSeries& b, const char* op)
{
    if (!(a.ring() == b.ring()))
        throw ring_mismatch(std::string(op) + ": operands over " + a.ring().describe() + " and " +
                            b.ring().describe());
}

bool is_unit(const Integer& c, const CoefficientRing& ring)
{
    if (!ring.is_residues())
        return c == 1 || c == -1;
    Integer g;
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), ring.modulus().get_mpz_t());
    return g == 1;
}

// Index of the first nonzero stored coefficient, or size() if none.
std::size_t leading_index(std::span<const Integer> c)
{
    std::size_t i = 0;
    while (i < c.size() && sgn(c[i]) == 0)
        ++i;
    return i;
}

} // namespace

QSeries::QSeries(std::int64_t grain, std::int64_t offset, std::vector<Integer> coeffs, CoefficientRing ring)
    : grain_(grain), offset_(offset), coeffs_(std::move(coeffs)), ring_(std::move(ring))
{
    if (grain_ < 1)
        throw invalid_argument("grain must be >= 1, got " + std::to_string(grain_));
    if (coeffs_.empty())
        throw invalid_argument("a series needs at least one known coefficient (prec > offset)");
    if (ring_.is_residues())
        for (auto& c : coeffs_)
            ring_.canonicalize(c);
}

QSeries make_series(std::int64_t grain, std::int64_t offset, std::vector<Integer> coeffs, CoefficientRing ring)
{
    return QSeries(grain, offset, std::move(coeffs), std::move(ring));
}

QSeries QSeries::zero(std::int64_t grain, std::int64_t offset, std::int64_t prec, CoefficientRing ring)
{
    if (prec <= offset)
        throw invalid_argument("zero series needs prec > offset");
    return QSeries(grain, offset, std::vector<Integer>(static_cast<std::size_t>(prec - offset)), std::move(ring));
}

QSeries QSeries::monomial(std::int64_t grain, std::int64_t exponent, const Integer& c, std::int64_t prec,
                          CoefficientRing ring)
{
    if (prec <= exponent)
        throw invalid_argument("monomial needs prec > exponent");
    std::vector<Integer> coeffs(static_cast<std::size_t>(prec - exponent));
    coeffs[0] = c;
    return QSeries(grain, exponent, std::move(coeffs), std::move(ring));
}

Integer QSeries::coefficient_at(std::int64_t n) const
{
    if (n >= prec())
        throw precision_error("coefficient of q^(" + std::to_string(n) + "/" + std::to_string(grain_) +
                              ") requested but precision is " + std::to_string(prec()));
    if (n < offset_)
        return Integer(0);
    return coeffs_[static_cast<std::size_t>(n - offset_)];
}

bool QSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) == 0; });
}

QSeries QSeries::rescaled(std::int64_t factor) const
{
    if (factor < 1)
        throw invalid_argument("rescale factor must be >= 1");
    if (factor == 1)
        return *this;
    std::vector<Integer> out(coeffs_.size() * static_cast<std::size_t>(factor));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i * static_cast<std::size_t>(factor)] = coeffs_[i];
    return QSeries(grain_ * factor, offset_ * factor, std::move(out), ring_);
}

QSeries QSeries::on_grain(std::int64_t g) const
{
    if (g < 1 || grain_ % g != 0)
        throw invalid_argument("grain " + std::to_string(g) + " does not divide " + std::to_string(grain_));
    const std::int64_t k = grain_ / g;
    if (k == 1)
        return *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const std::int64_t e = offset_ + static_cast<std::int64_t>(i);
        if (sgn(coeffs_[i]) != 0 && e % k != 0)
            throw invalid_argument("nonzero coefficient at q^(" + std::to_string(e) + "/" + std::to_string(grain_) +
                                   ") is not on grain " + std::to_string(g));
    }
    const std::int64_t new_prec = ceil_div(prec(), k);
    const std::int64_t new_offset = std::min(ceil_div(offset_, k), new_prec - 1);
    std::vector<Integer> out(static_cast<std::size_t>(new_prec - new_offset));
    for (std::int64_t n = new_offset; n < new_prec; ++n)
        out[static_cast<std::size_t>(n - new_offset)] = coefficient_at(n * k);
    return QSeries(g, new_offset, std::move(out), ring_);
}

QSeries QSeries::truncated(std::int64_t new_prec) const
{
    if (new_prec > prec())
        throw precision_error("cannot extend precision from " + std::to_string(prec()) + " to " +
                              std::to_string(new_prec));
    if (new_prec <= offset_)
        throw invalid_argument("truncation would leave no known coefficients");
    std::vector<Integer> out(coeffs_.begin(), coeffs_.begin() + (new_prec - offset_));
    return QSeries(grain_, offset_, std::move(out), ring_);
}

QSeries QSeries::shifted(std::int64_t shift) const
{
    return QSeries(grain_, offset_ + shift, coeffs_, ring_);
}

std::pair<QSeries, QSeries> unify_grains(const QSeries& a, const QSeries& b)
{
    const std::int64_t g = std::lcm(a.grain(), b.grain());
    return {a.rescaled(g / a.grain()), b.rescaled(g / b.grain())};
}

QSeries add(const QSeries& a0, const QSeries& b0)
{
    require_same_ring(a0, b0, "add");
    auto [a, b] = unify_grains(a0, b0);
    const std::int64_t lo = std::min(a.offset(), b.offset());
    const std::int64_t hi = std::min(a.prec(), b.prec());
    std::vector<Integer> out(static_cast<std::size_t>(hi - lo));
    for (std::int64_t n = lo; n < hi; ++n)
        out[static_cast<std::size_t>(n - lo)] = a.coefficient_at(n) + b.coefficient_at(n);
    return QSeries(a.grain(), lo, std::move(out), a.ring());
}

QSeries negate(const QSeries& a) { return scalar_mul(a, Integer(-1)); }

QSeries sub(const QSeries& a, const QSeries& b) { return add(a, negate(b)); }

QSeries mul(const QSeries& a0, const QSeries& b0)
{
    require_same_ring(a0, b0, "mul");
    const bool same = &a0 == &b0;
    auto [a, b] = unify_grains(a0, b0);
    const std::int64_t offset = a.offset() + b.offset();
    const std::int64_t prec = std::min(a.prec() + b.offset(), b.prec() + a.offset());
    const auto len = static_cast<std::size_t>(prec - offset);
    std::vector<Integer> out;
    if (a.ring().has_small_modulus()) {
        const auto m = static_cast<kernels::residue>(to_u64(a.ring().modulus()));
        const auto ra = to_residues(a.coeffs());
        if (same) {
            out = from_residues(kernels::square_mod(ra, m, len));
        } else {
            const auto rb = to_residues(b.coeffs());
            out = from_residues(kernels::convolve_mod(ra, rb, m, len));
        }
    } else {
        out = kernels::convolve(a.coeffs(), b.coeffs(), len);
    }
    out.resize(len);
    return QSeries(a.grain(), offset, std::move(out), a.ring());
}

QSeries invert(const QSeries& a, std::int64_t out_prec)
{
    const auto coeffs = a.coeffs();
    const std::size_t lead = leading_index(coeffs);
    if (lead == coeffs.size())
        throw arithmetic_error("cannot invert a series with no known nonzero coefficient");
    if (!is_unit(coeffs[lead], a.ring()))
        throw arithmetic_error("leading coefficient " + to_string(coeffs[lead]) + " is not a unit in " +
                               a.ring().describe());
    const std::int64_t v = a.offset() + static_cast<std::int64_t>(lead);
    const std::int64_t prec = std::min(out_prec, a.prec() - 2 * v);
    if (prec <= -v)
        throw precision_error("requested reciprocal precision " + std::to_string(out_prec) +
                              " does not reach past its leading exponent " + std::to_string(-v));
    const auto len = static_cast<std::size_t>(prec + v);
    auto unit = coeffs.subspan(lead);
    std::vector<Integer> out;
    if (a.ring().has_small_modulus()) {
        const auto m = static_cast<kernels::residue>(to_u64(a.ring().modulus()));
        out = from_residues(kernels::invert_mod(to_residues(unit), m, len));
    } else if (a.ring().is_residues()) {
        // Large modulus: scale by the inverse of the lead, then the recurrence over Z
        // is exact for a monic input.
        Integer inv;
        mpz_invert(inv.get_mpz_t(), unit[0].get_mpz_t(), a.ring().modulus().get_mpz_t());
        std::vector<Integer> monic(unit.begin(), unit.end());
        for (auto& c : monic)
            c = mod_floor(c * inv, a.ring().modulus());
        out.assign(len, Integer(0));
        out[0] = 1;
        for (std::size_t n = 1; n < len; ++n) {
            Integer s;
            for (std::size_t i = 1; i <= n && i < monic.size(); ++i)
                s += monic[i] * out[n - i];
            out[n] = mod_floor(-s, a.ring().modulus());
        }
        for (auto& c : out)
            c = mod_floor(c * inv, a.ring().modulus());
    } else {
        out = kernels::invert(unit, len);
    }
    return QSeries(a.grain(), -v, std::move(out), a.ring());
}

QSeries pow(const QSeries& a, std::int64_t e)
{
    if (e == 0)
        return QSeries::monomial(a.grain(), 0, Integer(1), a.prec() - a.offset(), a.ring());
    if (e < 0)
        return pow(invert(a, a.prec()), -e);
    QSeries base = a;
    std::optional<QSeries> acc;
    for (;;) {
        if (e & 1)
            acc = acc ? mul(*acc, base) : base;
        e >>= 1;
        if (e == 0)
            break;
        base = mul(base, base);
    }
    return *acc;
}

QSeries scalar_mul(const QSeries& a, const Integer& c)
{
    std::vector<Integer> out(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : out)
        x *= c;
    return QSeries(a.grain(), a.offset(), std::move(out), a.ring());
}

QSeries scalar_div_exact(const QSeries& a, const Integer& c)
{
    if (sgn(c) == 0)
        throw arithmetic_error("division by zero");
    std::vector<Integer> out(a.coeffs().begin(), a.coeffs().end());
    if (a.ring().is_residues()) {
        Integer inv;
        if (mpz_invert(inv.get_mpz_t(), c.get_mpz_t(), a.ring().modulus().get_mpz_t()) == 0)
            throw arithmetic_error(to_string(c) + " is not invertible in " + a.ring().describe());
        for (auto& x : out)
            x *= inv;
    } else {
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (!mpz_divisible_p(out[i].get_mpz_t(), c.get_mpz_t()))
                throw arithmetic_error("coefficient " + to_string(out[i]) + " at q^(" +
                                       std::to_string(a.offset() + static_cast<std::int64_t>(i)) + "/" +
                                       std::to_string(a.grain()) + ") is not divisible by " + to_string(c));
            mpz_divexact(out[i].get_mpz_t(), out[i].get_mpz_t(), c.get_mpz_t());
        }
    }
    return QSeries(a.grain(), a.offset(), std::move(out), a.ring());
}

QSeries reduce_mod(const QSeries& a, const Integer& m)
{
    auto target = CoefficientRing::residues(m);
    if (a.ring().is_residues() && !mpz_divisible_p(a.ring().modulus().get_mpz_t(), m.get_mpz_t()))
        throw ring_mismatch("cannot reduce " + a.ring().describe() + " to " + target.describe());
    return QSeries(a.grain(), a.offset(), std::vector<Integer>(a.coeffs().begin(), a.coeffs().end()),
                   std::move(target));
}

bool equal_up_to(const QSeries& a0, const QSeries& b0, std::int64_t n_max)
{
    auto [a, b] = unify_grains(a0, b0);
    if (!(a.ring() == b.ring())) {
        if (a.ring().is_residues() && !b.ring().is_residues())
            b = reduce_mod(b, a.ring().modulus());
        else if (b.ring().is_residues() && !a.ring().is_residues())
            a = reduce_mod(a, b.ring().modulus());
        else
            throw ring_mismatch("equal_up_to: " + a.ring().describe() + " vs " + b.ring().describe());
    }
    if (a.prec() < n_max || b.prec() < n_max)
        throw precision_error("equal_up_to(" + std::to_string(n_max) + "): precisions are " +
                              std::to_string(a.prec()) + " and " + std::to_string(b.prec()));
    for (std::int64_t n = std::min(a.offset(), b.offset()); n < n_max; ++n)
        if (a.coefficient_at(n) != b.coefficient_at(n))
            return false;
    return true;
}

} // namespace qgrowth
