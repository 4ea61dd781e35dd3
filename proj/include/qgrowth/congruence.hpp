#ifndef QGROWTH_CONGRUENCE_HPP
#define QGROWTH_CONGRUENCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgrowth/operators.hpp"
#include "qgrowth/series.hpp"

namespace qgrowth {

/// [SL2(Z) : Gamma0(N)] = N prod_{l | N} (1 + 1/l).
Integer gamma0_index(std::int64_t N);

/// floor(k * [SL2(Z) : Gamma0(N)] / 12) for integer weight k >= 1.
std::int64_t sturm_bound(std::int64_t k, std::int64_t N);

/// Restricts a claim to n = r (mod modulus) for r in residues.
struct ResidueFilter {
    std::int64_t modulus = 1;
    std::vector<std::int64_t> residues;

    bool admits(std::int64_t n) const;
};

/// "coefficient A n + B of the series is 0 mod m for 0 <= n <= n_max".
struct CongruenceClaim {
    std::string series_id;
    std::int64_t A = 1;
    std::int64_t B = 0;
    Integer modulus{2};
    std::int64_t n_max = 0;
    std::optional<ResidueFilter> filter;

    friend bool operator==(const CongruenceClaim& a, const CongruenceClaim& b)
    {
        return a.series_id == b.series_id && a.A == b.A && a.B == b.B && a.modulus == b.modulus &&
               a.n_max == b.n_max;
    }
};

enum class Verdict { holds_on_range, violated };

struct Violation {
    std::int64_t n;
    Integer coefficient;
};

struct CongruenceReport {
    CongruenceClaim claim;
    std::int64_t verified_count = 0;
    std::vector<Violation> violations;
    Verdict verdict = Verdict::holds_on_range;
};

/// Checks the claim on `series`. Throws precision_error when A n_max + B is
/// not below the series precision.
CongruenceReport verify_congruence(const CongruenceClaim& claim, const QSeries& series);

/// Every (A, B), 1 <= A <= A_max, 0 <= B < A, whose coefficients at A n + B,
/// n <= n_max, all vanish mod m. Sorted by (A, B). Candidates, not theorems.
std::vector<CongruenceClaim> scan_congruences(const QSeries& series, const Integer& m, std::int64_t A_max,
                                              std::int64_t n_max, int workers = 0,
                                              const std::string& series_id = "");

/// Builds a series from an identifier: "partition", "even-parts", "alt",
/// "wreath-alt:M", "f:M", "f-term:M:k", "eta:<expression>" (grain 1).
QSeries named_series(const std::string& id, std::int64_t prec,
                     const CoefficientRing& ring = CoefficientRing::integers());

struct SubCheck {
    std::string id;
    std::string identity;
    bool passed = false;
    std::string detail;
};

struct ReproductionReport {
    std::string name;
    std::vector<SubCheck> checks;

    bool all_passed() const;
    /// Throws error naming the first failing identity.
    void require_all() const;
};

/// The mod-7 example for W'_2: three Delta identities under U_7, the
/// extraction of F_2 at 7n against 3 eta^10(24z), and the residue classes of
/// the resulting lacunary congruence.
ReproductionReport reproduce_mod7_chain();

/// gamma_{W'_1}(2*5^4 n + 1198) = 0 mod 5 for n <= 3 (p = 5), or
/// gamma_{W'_1}(2*7^6 n + 225494) = 0 mod 49 for n = 0 (p = 7).
ReproductionReport reproduce_wreath_congruence(std::int64_t p);

struct PrimeCondition {
    std::int64_t prime;
    HeckeParams params;
};

struct PropagationReport {
    bool premise_holds = true;
    std::vector<std::int64_t> premise_failures; ///< primes whose Hecke image is nonzero mod m
    bool conclusion_holds = true;
    std::vector<std::int64_t> checked_indices;
    std::vector<std::int64_t> violations;
};

/// Checks that each listed Hecke operator kills f mod m, then that f vanishes
/// at prod p_i^(2 r_i + 1) prod l_j^(4 s_j + 3) n (gcd(n, primes) = 1) below
/// bound. A prime listed with both kinds uses the exponents 4t + 3.
PropagationReport propagation_check(const QSeries& f, const std::vector<PrimeCondition>& primes, const Integer& m,
                                  std::int64_t bound);

} // namespace qgrowth

#endif
