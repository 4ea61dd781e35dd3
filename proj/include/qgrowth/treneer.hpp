#ifndef QGROWTH_TRENEER_HPP
#define QGROWTH_TRENEER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qgrowth/operators.hpp"
#include "qgrowth/series.hpp"

namespace qgrowth {

/// Parameters of the cusp-form shift: prime p, U-depth r, target modulus p^j
/// and the F_p exponent p^beta.
struct TreneerContext {
    std::int64_t p = 5;
    std::int64_t r = 1;
    std::int64_t j = 1;
    std::int64_t beta = 0;

    /// beta defaults to j - 1, the smallest admissible value.
    static TreneerContext make(std::int64_t p, std::int64_t r, std::int64_t j,
                               std::optional<std::int64_t> beta = std::nullopt);

    /// Throws invalid_argument unless p is an odd prime, r, j >= 1 and beta >= j - 1.
    void validate() const;

    Integer modulus() const; ///< p^j
};

/// f | U_{p^r} as r successive applications of U_p.
QSeries u_power(const QSeries& f, std::int64_t p, std::int64_t r);

/// f | U_{p^r} - f | U_{p^{r+1}} | V_p: keeps a(p^r n) for p not dividing n.
QSeries treneer_projection(const QSeries& f, std::int64_t p, std::int64_t r);

struct CuspCandidate {
    QSeries series;
    /// Congruence to the input projection modulo p^j, checked to prec.
    bool congruent_to_projection = false;
    /// 2 * (k/2 - M + p^beta (p^2 - 1)/2), when (M, k) were supplied.
    std::optional<Integer> weight_times_2;
};

/// f_proj * F_p^(p^beta) truncated to prec. Pass (M, k) to get the weight.
CuspCandidate cusp_candidate(const QSeries& f_proj, const TreneerContext& ctx, std::int64_t prec,
                             std::optional<std::pair<std::int64_t, std::int64_t>> M_k = std::nullopt);

struct AnnihilationProbe {
    std::int64_t prime = 0;
    bool annihilated = false;   ///< T applied to f vanishes mod m on the known range
    std::int64_t checked_to = 0; ///< precision of the Hecke image
    /// Indices Q^(2t+1) n (integer weight) or Q^(4t+3) n (half-integral),
    /// gcd(n, Q) = 1, below f's precision.
    std::vector<std::int64_t> consequence_indices;
    /// Entries of consequence_indices whose coefficient is nonzero mod m.
    std::vector<std::int64_t> consequence_violations;
};

/// Applies the Hecke operator at Q selected by params.kind, reduces mod m and
/// reports vanishing and the implied zero set. Q must not divide m or the level.
AnnihilationProbe hecke_annihilation_probe(const QSeries& f, std::int64_t Q, const HeckeParams& params,
                                           const Integer& m);

} // namespace qgrowth

#endif
