#ifndef SASSEN_HMATRIX_HPP
#define SASSEN_HMATRIX_HPP

#include <string>

#include "sassen/matrix.hpp"
#include "sassen/spectral.hpp"

namespace sassen {

/// Comparison matrix of a complex square matrix: keeps the diagonal moduli
/// and negates the off-diagonal moduli. Carries the canonical split
/// mat = r*I - b with r the largest diagonal modulus, so b is entrywise
/// nonnegative by construction.
struct ComparisonMatrix {
    RealMatrix mat;
    double r = 0.0;
    RealMatrix b;
};

ComparisonMatrix comparison_matrix(const ComplexMatrix& a);

/// Row margins of generalized diagonal dominance scaled by u:
/// margin_i = |a_ii| u_i - sum_{j != i} |a_ij| u_j. All margins strictly
/// positive means u witnesses that a is an H-matrix.
RealVector dominance_margins(const ComplexMatrix& a, const RealVector& u);

/// |diag a|^{-1} |off a|; throws ZeroDiagonal when a diagonal entry vanishes.
RealMatrix jacobi_iteration_matrix(const ComplexMatrix& a);

enum class HVerdict { IsH, NotH, Inconclusive };

struct HCertificate {
    HVerdict verdict = HVerdict::NotH;
    /// Strictly positive scaling vector with ComparisonMatrix * witness > 0;
    /// present exactly when verdict is IsH.
    RealVector witness;
    /// Secondary diagnostic: spectral radius of the Jacobi iteration matrix.
    /// Below 1 exactly for H-matrices with nonzero diagonal.
    SpectralRadiusEstimate jacobi_radius;
    bool jacobi_radius_available = false;
    std::string reason;
};

struct CertifyOptions {
    /// Witness entries must exceed this times the witness norm to count as
    /// strictly positive.
    double positivity_rel_tol = 1e-12;
    SpectralOptions spectral;
};

/// Decides H-matrix membership. Primary test: solve mat(comparison) u = ones;
/// a strictly positive solution is a constructive witness, a nonpositive
/// component or a singular comparison matrix rules membership out. The Jacobi
/// spectral radius is estimated as a cross-check; a firm disagreement between
/// the two tests downgrades the verdict to Inconclusive.
HCertificate certify_h(const ComplexMatrix& a, const CertifyOptions& opts = {});

} // namespace sassen

#endif
