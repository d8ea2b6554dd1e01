#ifndef SASSEN_SPLITTING_HPP
#define SASSEN_SPLITTING_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "sassen/hmatrix.hpp"
#include "sassen/index.hpp"
#include "sassen/lu.hpp"
#include "sassen/matrix.hpp"

namespace sassen {

enum class PreconditionerKind { Jacobi, GaussSeidel, Custom };

enum class SolveStrategy { Diagonal, ForwardSubstitution, Factored };

/// A certified preconditioner with its solve machinery prepared once.
/// Immutable after construction and shareable across threads.
struct PreconditionerSpec {
    PreconditionerKind kind = PreconditionerKind::Custom;
    ComplexMatrix p;
    HCertificate certificate;
    SolveStrategy strategy = SolveStrategy::Factored;

    /// Solves p y = rhs with the prepared strategy.
    ComplexVector apply_inverse(const ComplexVector& rhs) const;

    std::shared_ptr<const ComplexLu> lu; // set when strategy is Factored
    double substitution_threshold = 0.0; // pivot floor for the direct paths
};

/// Builds the diagonal (Jacobi) or lower-triangular (Gauss-Seidel) part of a,
/// certifies it, and prepares the matching solve strategy. Throws
/// PreconditionerNotH when certification fails.
PreconditionerSpec make_preconditioner(const ComplexMatrix& a, PreconditionerKind kind);

/// Custom preconditioner variant; the strategy is detected from the zero
/// pattern of p unless forced.
PreconditionerSpec make_preconditioner(const ComplexMatrix& a, const ComplexMatrix& p,
                                       std::optional<SolveStrategy> forced = std::nullopt);

struct SolveOptions {
    /// 0 picks the default of 1000 * order.
    std::size_t max_iter = 0;
    double residual_abs_tol = 0.0;
    /// Relative stop: residual <= rel_tol * (|A| |x_n| + |b|) in inf-norms.
    double residual_rel_tol = 1e-10;
    /// Allows running with an index at or above 1; the trace then carries no
    /// a priori bounds.
    bool best_effort = false;
};

struct SolveTrace {
    ComplexVector x;
    std::size_t iterations = 0;
    /// inf-norm residuals of x_0 .. x_n.
    std::vector<double> residuals;
    double mu = 0.0;
    Contraction contraction = Contraction::NotContractive;
    /// True when mu is strictly below 1, making the bounds below valid.
    bool certified = false;
    /// mu^n * E0 per step; E0 is the true initial error when a reference is
    /// supplied, otherwise the surrogate |x_1 - x_0| / (1 - mu). Empty when
    /// unavailable.
    std::vector<double> apriori_bounds;
    /// inf-norm errors against the reference solution, when supplied.
    std::vector<double> true_errors;
    bool converged = false;
};

/// Splitting iteration p x_{n+1} = (p - a) x_n + b, run in residual form.
/// Without best_effort the index must be strictly below 1 (NotContractive
/// otherwise). The optional reference solution is for bound verification.
SolveTrace solve(const ComplexMatrix& a, const ComplexVector& b,
                 const PreconditionerSpec& spec, const ComplexVector& x0,
                 const SolveOptions& opts = {}, const ComplexVector* reference = nullptr);

/// Tridiagonal (-1, 2, -1) matrix of the given order (at least 1).
ComplexMatrix fdm_matrix(std::size_t m);

} // namespace sassen

#endif
