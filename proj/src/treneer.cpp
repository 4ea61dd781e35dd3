#include "qgrowth/treneer.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qgrowth/arith.hpp"
#include "qgrowth/errors.hpp"
#include "qgrowth/eta.hpp"

namespace qgrowth {

TreneerContext TreneerContext::make(std::int64_t p, std::int64_t r, std::int64_t j, std::optional<std::int64_t> beta)
{
    TreneerContext ctx{p, r, j, beta.value_or(j - 1)};
    ctx.validate();
    return ctx;
}

void TreneerContext::validate() const
{
    if (p % 2 == 0 || !is_prime(p))
        throw invalid_argument("Treneer context needs an odd prime, got " + std::to_string(p));
    if (r < 1 || j < 1)
        throw invalid_argument("Treneer context needs r >= 1 and j >= 1");
    if (beta < j - 1)
        throw invalid_argument("beta must be >= j - 1 (beta = " + std::to_string(beta) + ", j = " +
                               std::to_string(j) + ")");
}

Integer TreneerContext::modulus() const { return ipow(p, static_cast<unsigned long>(j)); }

QSeries u_power(const QSeries& f, std::int64_t p, std::int64_t r)
{
    if (r < 0)
        throw invalid_argument("u_power needs r >= 0");
    QSeries out = f;
    for (std::int64_t i = 0; i < r; ++i)
        out = u_op(out, p);
    return out;
}

QSeries treneer_projection(const QSeries& f, std::int64_t p, std::int64_t r)
{
    const QSeries head = u_power(f, p, r);
    return sub(head, v_op(u_op(head, p), p));
}

CuspCandidate cusp_candidate(const QSeries& f_proj, const TreneerContext& ctx, std::int64_t prec,
                             std::optional<std::pair<std::int64_t, std::int64_t>> M_k)
{
    ctx.validate();
    if (f_proj.ring().is_residues())
        throw invalid_argument("cusp_candidate expects the projection over Z");
    if (f_proj.grain() != 1)
        throw invalid_argument("cusp_candidate needs grain 1");
    if (prec > f_proj.prec())
        throw precision_error("cusp_candidate: projection known to " + std::to_string(f_proj.prec()) +
                              ", requested " + std::to_string(prec));
    const std::int64_t relative = prec - std::min<std::int64_t>(f_proj.offset(), 0);
    const QSeries fp = eta_quotient_integral(f_p_quotient(ctx.p), relative, f_proj.ring());
    const Integer exponent = ipow(ctx.p, static_cast<unsigned long>(ctx.beta));
    if (!exponent.fits_slong_p())
        throw invalid_argument("p^beta too large");
    const QSeries shift = pow(fp, exponent.get_si());
    CuspCandidate out{mul(f_proj, shift).truncated(prec), false, std::nullopt};
    const QSeries diff = reduce_mod(sub(out.series, f_proj.truncated(prec)), ctx.modulus());
    out.congruent_to_projection = diff.is_zero();
    if (M_k) {
        const auto [M, k] = *M_k;
        out.weight_times_2 = Integer(static_cast<long>(k - 2 * M)) + exponent * (ctx.p * ctx.p - 1);
    }
    return out;
}

AnnihilationProbe hecke_annihilation_probe(const QSeries& f, std::int64_t Q, const HeckeParams& params,
                                           const Integer& m)
{
    if (mpz_divisible_p(m.get_mpz_t(), from_i64(Q).get_mpz_t()))
        throw invalid_argument("probe prime " + std::to_string(Q) + " divides the modulus " + to_string(m));
    AnnihilationProbe out;
    out.prime = Q;
    const QSeries base = f.ring().is_residues() ? f : reduce_mod(f, m);
    const QSeries image = hecke(base, Q, params);
    out.checked_to = image.prec();
    out.annihilated = image.is_zero();

    const bool integer = params.kind == HeckeKind::integer_weight;
    const std::int64_t step = integer ? 2 : 4;
    const std::int64_t first = integer ? 1 : 3;
    const std::int64_t bound = f.prec();
    for (std::int64_t n = 1; n < bound; ++n) {
        if (n % Q == 0)
            continue;
        // Q^first * n, then multiply by Q^step
        std::int64_t power = 1;
        bool overflow = false;
        for (std::int64_t i = 0; i < first; ++i) {
            if (power > bound / Q) {
                overflow = true;
                break;
            }
            power *= Q;
        }
        while (!overflow && power <= (bound - 1) / n) {
            const std::int64_t idx = power * n;
            out.consequence_indices.push_back(idx);
            if (sgn(base.coefficient_at(idx)) != 0)
                out.consequence_violations.push_back(idx);
            for (std::int64_t i = 0; i < step; ++i) {
                if (power > bound / Q) {
                    overflow = true;
                    break;
                }
                power *= Q;
            }
        }
    }
    std::sort(out.consequence_indices.begin(), out.consequence_indices.end());
    std::sort(out.consequence_violations.begin(), out.consequence_violations.end());
    return out;
}

} // namespace qgrowth
