#include "qgrowth/congruence.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qgrowth/arith.hpp"
#include "qgrowth/errors.hpp"
#include "qgrowth/eta.hpp"
#include "qgrowth/growth.hpp"

namespace qgrowth {

namespace {

// Series over Z/m, reducing an integer series or a residue series whose
// modulus m divides.
QSeries residues_mod(const QSeries& s, const Integer& m) { return reduce_mod(s, m); }

std::int64_t parse_i64(const std::string& s, const std::string& context)
{
    try {
        std::size_t used = 0;
        const std::int64_t v = std::stoll(s, &used);
        if (used != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw invalid_argument("bad integer '" + s + "' in " + context);
    }
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, sep))
        parts.push_back(item);
    return parts;
}

SubCheck check(std::string id, std::string identity, bool passed, std::string detail = {})
{
    return {std::move(id), std::move(identity), passed, std::move(detail)};
}

std::string describe_failures(const CongruenceReport& r)
{
    std::string out = std::to_string(r.violations.size()) + " violation(s), first at n = ";
    out += std::to_string(r.violations.front().n);
    return out;
}

} // namespace

Integer gamma0_index(std::int64_t N)
{
    if (N < 1)
        throw invalid_argument("level must be >= 1");
    // N prod (1 + 1/l) = prod l^(e-1) (l + 1)
    Integer idx(1);
    for (const auto& [l, e] : factorize(N))
        idx *= ipow(l, static_cast<unsigned long>(e - 1)) * from_i64(l + 1);
    return idx;
}

std::int64_t sturm_bound(std::int64_t k, std::int64_t N)
{
    if (k < 1)
        throw invalid_argument("Sturm bound needs weight k >= 1");
    const Integer b = from_i64(k) * gamma0_index(N) / 12;
    return to_i64(b);
}

bool ResidueFilter::admits(std::int64_t n) const
{
    std::int64_t r = n % modulus;
    if (r < 0)
        r += modulus;
    return std::find(residues.begin(), residues.end(), r) != residues.end();
}

CongruenceReport verify_congruence(const CongruenceClaim& claim, const QSeries& series)
{
    if (claim.A < 1)
        throw invalid_argument("progression step A must be >= 1");
    if (claim.n_max < 0)
        throw invalid_argument("n_max must be >= 0");
    if (claim.filter && claim.filter->modulus < 1)
        throw invalid_argument("residue filter modulus must be >= 1");
    const std::int64_t top = claim.A * claim.n_max + claim.B;
    if (top >= series.prec())
        throw precision_error("precision shortfall: claim needs the coefficient of q^" + std::to_string(top) +
                              " but the series is known only below q^" + std::to_string(series.prec()));
    const QSeries reduced = residues_mod(series, claim.modulus);
    CongruenceReport report;
    report.claim = claim;
    for (std::int64_t n = 0; n <= claim.n_max; ++n) {
        if (claim.filter && !claim.filter->admits(n))
            continue;
        const std::int64_t idx = claim.A * n + claim.B;
        ++report.verified_count;
        if (sgn(reduced.coefficient_at(idx)) != 0)
            report.violations.push_back({n, series.coefficient_at(idx)});
    }
    report.verdict = report.violations.empty() ? Verdict::holds_on_range : Verdict::violated;
    return report;
}

std::vector<CongruenceClaim> scan_congruences(const QSeries& series, const Integer& m, std::int64_t A_max,
                                              std::int64_t n_max, int workers, const std::string& series_id)
{
    if (A_max < 1 || n_max < 0)
        throw invalid_argument("scan needs A_max >= 1 and n_max >= 0");
    if (series.grain() != 1)
        throw invalid_argument("scan needs grain 1");
    const std::int64_t top = A_max * n_max + A_max - 1;
    if (top >= series.prec())
        throw precision_error("precision shortfall: scan up to A = " + std::to_string(A_max) + ", n = " + std::to_string(n_max) +
                              " needs precision > " + std::to_string(top) + ", have " +
                              std::to_string(series.prec()));
    const QSeries reduced = residues_mod(series, m);
    const auto coeffs = reduced.coeffs();
    const std::int64_t offset = reduced.offset();
    auto vanishes = [&](std::int64_t idx) {
        return idx < offset || sgn(coeffs[static_cast<std::size_t>(idx - offset)]) == 0;
    };

    std::vector<std::pair<std::int64_t, std::int64_t>> cells;
    for (std::int64_t A = 1; A <= A_max; ++A)
        for (std::int64_t B = 0; B < A; ++B)
            cells.emplace_back(A, B);
    std::vector<std::uint8_t> hit(cells.size(), 0);
    const int nthreads = workers > 0 ? workers : 1;
#pragma omp parallel for schedule(dynamic, 256) num_threads(nthreads)
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const auto [A, B] = cells[c];
        bool ok = true;
        for (std::int64_t n = 0; n <= n_max && ok; ++n)
            ok = vanishes(A * n + B);
        hit[c] = ok ? 1 : 0;
    }
    std::vector<CongruenceClaim> out;
    for (std::size_t c = 0; c < cells.size(); ++c)
        if (hit[c])
            out.push_back({series_id, cells[c].first, cells[c].second, m, n_max, std::nullopt});
    return out;
}

QSeries named_series(const std::string& id, std::int64_t prec, const CoefficientRing& ring)
{
    if (id.rfind("eta:", 0) == 0)
        return eta_quotient_integral(EtaQuotient::parse(id.substr(4)), prec, ring);
    const auto parts = split(id, ':');
    if (parts.empty())
        throw invalid_argument("empty series identifier");
    const std::string& family = parts[0];
    auto arg = [&](std::size_t i) {
        if (parts.size() <= i)
            throw invalid_argument("series '" + id + "' is missing a parameter");
        return parse_i64(parts[i], "series identifier '" + id + "'");
    };
    if (family == "partition" || family == "sym")
        return partition_series(prec, ring);
    if (family == "even-parts")
        return even_parts_series(prec, ring);
    if (family == "alt")
        return alt_series(prec, ring);
    if (family == "wreath-alt")
        return wreath_alt_series(arg(1), prec, ring);
    if (family == "f")
        return f_M_series(arg(1), prec, ring);
    if (family == "f-term")
        return f_M_k_term(arg(1), arg(2), prec, ring);
    throw invalid_argument("unknown series family '" + family + "'");
}

bool ReproductionReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.passed; });
}

void ReproductionReport::require_all() const
{
    for (const auto& c : checks)
        if (!c.passed)
            throw error(name + ": sub-check " + c.id + " failed: " + c.identity +
                        (c.detail.empty() ? "" : " (" + c.detail + ")"));
}

ReproductionReport reproduce_mod7_chain()
{
    const Integer seven(7);
    const auto mod7 = CoefficientRing::residues(seven);
    // Identities are checked for every coefficient q^n, n <= 100.
    constexpr std::int64_t upto = 101;
    constexpr std::int64_t before_u7 = 7 * upto;
    ReproductionReport report{"mod7-chain", {}};

    {
        const QSeries lhs = u_op(eta_quotient_integral(EtaQuotient({{1, 192}}), before_u7, mod7), 7);
        report.checks.push_back(check("i", "Delta^8(z) | U_7 = 0 (mod 7) to q^100", lhs.truncated(upto).is_zero()));
    }
    {
        const QSeries lhs = u_op(eta_quotient_integral(EtaQuotient({{1, 96}, {2, 48}}), before_u7, mod7), 7);
        report.checks.push_back(
            check("ii", "Delta^4(z) Delta^2(2z) | U_7 = 0 (mod 7) to q^100", lhs.truncated(upto).is_zero()));
    }
    {
        const QSeries lhs = u_op(eta_quotient_integral(EtaQuotient({{2, 96}}), before_u7, mod7), 7);
        const QSeries rhs = scalar_mul(eta_quotient_integral(EtaQuotient({{2, 24}}), upto, mod7), Integer(3));
        report.checks.push_back(
            check("iii", "Delta^4(2z) | U_7 = 3 Delta(2z) (mod 7) to q^100", equal_up_to(lhs, rhs, upto)));
    }

    constexpr std::int64_t extract_prec = 2400;
    const QSeries f2 = f_M_series(2, 7 * extract_prec, mod7);
    const QSeries lhs = progression_extract(f2, 7, 0).truncated(extract_prec);
    {
        const QSeries eta10 = eta_quotient_integral(EtaQuotient({{24, 10}}), extract_prec, mod7);
        const bool ok = equal_up_to(lhs, scalar_mul(eta10, Integer(3)), extract_prec);
        std::string detail;
        if (!ok) {
            for (long c = 0; c < 7; ++c)
                if (equal_up_to(lhs, scalar_mul(eta10, Integer(c)), extract_prec))
                    detail = "the extraction equals " + std::to_string(c) + " eta^10(24z) (mod 7)";
            if (detail.empty())
                detail = "the extraction is not a multiple of eta^10(24z) (mod 7)";
        }
        report.checks.push_back(
            check("iv", "sum gamma_{W'_2}((7n+2)/12) q^n = 3 eta^10(24z) (mod 7) to q^2400", ok, detail));
    }
    {
        std::string detail;
        bool ok = true;
        for (std::int64_t B = 0; B < 24; ++B) {
            if (B == 10)
                continue;
            CongruenceClaim claim{"f:2|U7", 24, B, seven, (extract_prec - 1 - B) / 24, std::nullopt};
            const auto r = verify_congruence(claim, lhs);
            if (r.verdict == Verdict::violated) {
                ok = false;
                detail = "class n = " + std::to_string(B) + " (mod 24): " + describe_failures(r);
                break;
            }
        }
        if (ok) {
            CongruenceClaim claim{"f:2|U7", 24, 10, seven, 90, ResidueFilter{7, {2, 4, 5, 6}}};
            const auto r = verify_congruence(claim, lhs);
            if (r.verdict == Verdict::violated) {
                ok = false;
                detail = "n = 24t + 10, t = 2,4,5,6 (mod 7): " + describe_failures(r);
            }
        }
        report.checks.push_back(check("v",
                                      "gamma_{W'_2}((7n+2)/12) = 0 (mod 7) for n != 10 (mod 24) and for "
                                      "n = 24t + 10, t = 2,4,5,6 (mod 7), t <= 90",
                                      ok, detail));
    }
    return report;
}

ReproductionReport reproduce_wreath_congruence(std::int64_t p)
{
    ReproductionReport report;
    CongruenceClaim claim;
    claim.series_id = "wreath-alt:1";
    if (p == 5) {
        report.name = "wreath-mod5";
        claim.A = 2 * 625;
        claim.B = 1198;
        claim.modulus = 5;
        claim.n_max = 3;
    } else if (p == 7) {
        report.name = "wreath-mod49";
        claim.A = 2 * 117649;
        claim.B = 225494;
        claim.modulus = 49;
        claim.n_max = 0;
    } else {
        throw invalid_argument("known wreath congruences are for p = 5 and p = 7");
    }
    const std::int64_t prec = claim.A * claim.n_max + claim.B + 1;
    const QSeries series = wreath_alt_series(1, prec, CoefficientRing::residues(claim.modulus));
    const auto r = verify_congruence(claim, series);
    report.checks.push_back(check(report.name,
                                  "gamma_{W'_1}(" + std::to_string(claim.A) + " n + " + std::to_string(claim.B) +
                                      ") = 0 (mod " + to_string(claim.modulus) + ") for n <= " +
                                      std::to_string(claim.n_max),
                                  r.verdict == Verdict::holds_on_range,
                                  r.violations.empty() ? "" : describe_failures(r)));
    return report;
}

PropagationReport propagation_check(const QSeries& f, const std::vector<PrimeCondition>& primes, const Integer& m,
                                  std::int64_t bound)
{
    PropagationReport report;
    if (primes.empty())
        return report;
    const QSeries base = reduce_mod(f, m);
    for (const auto& pc : primes) {
        const QSeries image = hecke(base, pc.prime, pc.params);
        if (!image.is_zero())
            report.premise_failures.push_back(pc.prime);
    }
    report.premise_holds = report.premise_failures.empty();
    if (!report.premise_holds) {
        report.conclusion_holds = false;
        return report;
    }

    // Per prime: first exponent and stride (1, 2) for integer weight, (3, 4)
    // when any half-integral condition names it.
    std::vector<std::pair<std::int64_t, std::pair<int, int>>> pattern;
    for (const auto& pc : primes) {
        const bool half = pc.params.kind == HeckeKind::half_integral;
        auto it = std::find_if(pattern.begin(), pattern.end(), [&](const auto& e) { return e.first == pc.prime; });
        const std::pair<int, int> step = half ? std::pair{3, 4} : std::pair{1, 2};
        if (it == pattern.end())
            pattern.push_back({pc.prime, step});
        else if (half)
            it->second = step;
    }
    bound = std::min(bound, f.prec());

    // All products prod p^e with e in each prime's exponent pattern, below bound.
    std::vector<std::int64_t> heads{1};
    for (const auto& [p, step] : pattern) {
        std::vector<std::int64_t> next;
        for (std::int64_t h : heads) {
            const Integer stride = ipow(p, static_cast<unsigned long>(step.second));
            for (Integer power = ipow(p, static_cast<unsigned long>(step.first)); h * power < bound;
                 power *= stride)
                next.push_back(to_i64(h * power));
        }
        heads = std::move(next);
    }
    std::set<std::int64_t> indices;
    for (std::int64_t h : heads) {
        for (std::int64_t n = 1; h * n < bound; ++n) {
            bool coprime = true;
            for (const auto& [p, step] : pattern)
                coprime = coprime && n % p != 0;
            if (coprime)
                indices.insert(h * n);
        }
    }
    report.checked_indices.assign(indices.begin(), indices.end());
    for (std::int64_t idx : report.checked_indices)
        if (sgn(base.coefficient_at(idx)) != 0)
            report.violations.push_back(idx);
    report.conclusion_holds = report.violations.empty();
    return report;
}

} // namespace qgrowth
