#ifndef SASSEN_INDEX_HPP
#define SASSEN_INDEX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sassen/hmatrix.hpp"
#include "sassen/matrix.hpp"

namespace sassen {

enum class IndexMethod { Direct, Iterative };

/// Sassenfeld vector s and index mu of a matrix with respect to a certified
/// preconditioner: s solves comparison(P) s = |A - P| ones, mu = inf_norm(s).
struct SassenfeldReport {
    RealVector s;
    double mu = 0.0;
    IndexMethod method = IndexMethod::Direct;
    /// Iterative runs record inf_norm(s_k) per adopted iterate, k >= 1
    /// (a single k = 0 entry when the start vector is already a fixed point).
    /// Every entry is a certified upper bound of mu for a valid start vector.
    std::vector<double> trace;
    std::size_t iterations = 0;
    bool converged = true;
    std::string preconditioner;
};

struct InvertibilityCertificate {
    Complex shift{};
    double mu = 0.0;
    bool certified = false;
};

enum class Contraction { Contractive, Marginal, NotContractive };

/// Values within `margin` of 1 are Marginal: floating point cannot support a
/// strict verdict there.
Contraction classify_contraction(double mu, double margin = 1e-10);

SassenfeldReport sassenfeld_vector(const ComplexMatrix& a, const ComplexMatrix& p,
                                   const HCertificate& cert);

double sassenfeld_index(const ComplexMatrix& a, const ComplexMatrix& p,
                        const HCertificate& cert);

/// Scales the certificate witness just enough to be a valid iteration start:
/// s0 = c * witness with the smallest c such that |A - P| ones <= comparison(P) s0.
RealVector default_start_vector(const ComplexMatrix& a, const ComplexMatrix& p,
                                const HCertificate& cert);

struct IterationOptions {
    /// Absolute tolerance on the iterate increment.
    double tol = 1e-15;
    /// 0 picks the default of 100 * order.
    std::size_t max_iter = 0;
    /// Entrywise slack factor for validating the start vector.
    double start_slack = 1e-12;
};

/// Monotone fixed-point iteration |diag P| s_{k+1} = |off P| s_k + |A - P| ones.
/// The start vector must dominate in the sense |A - P| ones <= comparison(P) s0;
/// this makes every trace norm an upper bound of mu and the iterates
/// entrywise non-increasing. Hitting max_iter reports converged = false with
/// the best bound reached.
SassenfeldReport iterative_index_estimate(const ComplexMatrix& a, const ComplexMatrix& p,
                                          const HCertificate& cert, const RealVector& s0,
                                          const IterationOptions& opts = {});

/// Certified bound without solving: if |A - P| ones <= comparison(P) v
/// entrywise, then mu <= inf_norm(v). Absent when the test fails.
std::optional<double> bound_from_test_vector(const ComplexMatrix& a, const ComplexMatrix& p,
                                             const HCertificate& cert, const RealVector& v);

struct NormBoundReport {
    /// mu, an upper bound of inf_norm(I - P^{-1} A).
    double bound = 0.0;
    bool exact_available = false;
    double exact_norm = 0.0;
};

struct NormBoundOptions {
    /// Orders up to this get the dense cross-check of the exact norm.
    std::size_t dense_check_threshold = 64;
    /// The exact norm may exceed the bound by at most this before the
    /// cross-check is declared inconsistent.
    double check_tol = 1e-10;
};

NormBoundReport iteration_matrix_norm_bound(const ComplexMatrix& a, const ComplexMatrix& p,
                                            const HCertificate& cert,
                                            const NormBoundOptions& opts = {});

/// A + tau * P is non-singular whenever |tau + 1| > mu.
InvertibilityCertificate shifted_invertibility(const ComplexMatrix& a, const ComplexMatrix& p,
                                               const HCertificate& cert, Complex tau);

/// (1 + mu) / (1 - mu), an upper bound of the inf-norm condition number of
/// P^{-1} A; requires mu strictly below 1.
double condition_bound(const ComplexMatrix& a, const ComplexMatrix& p,
                       const HCertificate& cert);

} // namespace sassen

#endif
