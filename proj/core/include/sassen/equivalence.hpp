#ifndef SASSEN_EQUIVALENCE_HPP
#define SASSEN_EQUIVALENCE_HPP

#include <cstddef>
#include <vector>

#include "sassen/hmatrix.hpp"
#include "sassen/index.hpp"
#include "sassen/matrix.hpp"

namespace sassen {

/// Constructive dominance witness for A built from a Sassenfeld pair (A, P):
/// t = alpha * s + witness(P) scales the preconditioner witness just enough
/// that A itself becomes generalized diagonally dominant.
struct EquivalenceCertificate {
    /// Per-row deviation weights; zero exactly when the row of A equals the
    /// row of P.
    RealVector delta;
    /// Rows with positive delta, the only ones that constrain alpha.
    std::vector<std::size_t> active;
    double alpha = 0.0;
    /// Strictly positive witness for A.
    RealVector t;
    /// Row margins |a_ii| t_i - sum_{j != i} |a_ij| t_j, all positive.
    RealVector margins;
    /// Set when some margin is positive only at round-off scale.
    bool degenerate = false;
};

/// delta_i = (1 / |a_ii|) * sum_j (1 - s_j) |a_ij - p_ij|.
/// Requires a nonzero diagonal and s entrywise inside [0, 1).
RealVector delta_vector(const ComplexMatrix& a, const ComplexMatrix& p, const RealVector& s);

/// Smallest nonnegative alpha making t = alpha * s + u a dominance witness:
/// the max over active rows of
/// [u_i (|p_ii| - |a_ii|) + sum_{j != i} (|a_ij| - |p_ij|) u_j] / (delta_i |a_ii|).
double alpha_threshold(const ComplexMatrix& a, const ComplexMatrix& p, const RealVector& s,
                       const RealVector& u, const RealVector& delta);

struct GddOptions {
    /// Margins below this times the row magnitude flag the certificate
    /// degenerate; margins below the negation reject it outright.
    double margin_rel_tol = 1e-12;
    /// Strictness margin for requiring mu < 1.
    double contraction_margin = 1e-10;
};

/// Builds the witness t and verifies strict row dominance. The index of the
/// report must be strictly below 1; the certificate must affirm P.
EquivalenceCertificate gdd_certificate(const ComplexMatrix& a, const ComplexMatrix& p,
                                       const SassenfeldReport& report,
                                       const HCertificate& cert_of_p,
                                       const GddOptions& opts = {});

/// The trivial direction: a certified matrix preconditions itself with
/// index 0. Returns the corresponding report (P = A, s = 0).
SassenfeldReport verify_h_direction(const ComplexMatrix& a, const HCertificate& cert);

} // namespace sassen

#endif
