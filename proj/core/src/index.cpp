#include "sassen/index.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#include "sassen/errors.hpp"
#include "sassen/lu.hpp"

namespace sassen {

namespace {

void require_certified(const HCertificate& cert) {
    if (cert.verdict != HVerdict::IsH) {
        throw PreconditionerNotH("preconditioner lacks an affirmative H-certificate");
    }
}

// Row sums of |A - P|, the right-hand side the Sassenfeld vector solves for.
RealVector difference_row_sums(const ComplexMatrix& a, const ComplexMatrix& p) {
    require_same_order(a, p, "matrix and preconditioner");
    const std::size_t n = a.order();
    RealVector rhs(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            rhs[i] += std::abs(a(i, j) - p(i, j));
        }
    }
    return rhs;
}

// comp * v >= rhs entrywise, with slack relative to the row magnitudes so the
// test survives rounding in v.
bool dominates(const RealMatrix& comp, const RealVector& v, const RealVector& rhs,
               double slack) {
    const std::size_t n = comp.order();
    for (std::size_t i = 0; i < n; ++i) {
        double lhs = 0.0;
        double scale = rhs[i];
        for (std::size_t j = 0; j < n; ++j) {
            lhs += comp(i, j) * v[j];
            scale += std::abs(comp(i, j)) * std::abs(v[j]);
        }
        if (lhs - rhs[i] < -slack * scale) {
            return false;
        }
    }
    return true;
}

double max_abs_difference(const RealVector& x, const RealVector& y) {
    double best = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        best = std::max(best, std::abs(x[i] - y[i]));
    }
    return best;
}

} // namespace

Contraction classify_contraction(double mu, double margin) {
    if (mu < 1.0 - margin) {
        return Contraction::Contractive;
    }
    if (mu <= 1.0 + margin) {
        return Contraction::Marginal;
    }
    return Contraction::NotContractive;
}

SassenfeldReport sassenfeld_vector(const ComplexMatrix& a, const ComplexMatrix& p,
                                   const HCertificate& cert) {
    require_certified(cert);
    validate_finite(a, "matrix");
    validate_finite(p, "preconditioner");
    RealVector rhs = difference_row_sums(a, p);
    RealVector s = solve_dense(comparison_matrix(p).mat, rhs);

    // The exact solution is entrywise nonnegative; anything below round-off
    // scale signals a wrong certificate.
    const double floor = 1e-12 * inf_norm(s);
    for (double& si : s) {
        if (si < 0.0) {
            if (si < -floor) {
                throw InternalInconsistency("Sassenfeld vector has a negative component");
            }
            si = 0.0;
        }
    }

    SassenfeldReport rep;
    rep.s = std::move(s);
    rep.mu = inf_norm(rep.s);
    rep.method = IndexMethod::Direct;
    rep.converged = true;
    return rep;
}

double sassenfeld_index(const ComplexMatrix& a, const ComplexMatrix& p,
                        const HCertificate& cert) {
    return sassenfeld_vector(a, p, cert).mu;
}

RealVector default_start_vector(const ComplexMatrix& a, const ComplexMatrix& p,
                                const HCertificate& cert) {
    require_certified(cert);
    if (cert.witness.size() != p.order()) {
        throw DimensionMismatch("certificate witness length does not match preconditioner order");
    }
    RealVector rhs = difference_row_sums(a, p);
    const RealVector denom = matvec(comparison_matrix(p).mat, cert.witness);
    double c = 0.0;
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        if (denom[i] <= 0.0) {
            throw InternalInconsistency("certificate witness fails dominance for the preconditioner");
        }
        c = std::max(c, rhs[i] / denom[i]);
    }
    RealVector s0 = cert.witness;
    for (double& v : s0) {
        v *= c;
    }
    return s0;
}

SassenfeldReport iterative_index_estimate(const ComplexMatrix& a, const ComplexMatrix& p,
                                          const HCertificate& cert, const RealVector& s0,
                                          const IterationOptions& opts) {
    require_certified(cert);
    validate_finite(a, "matrix");
    validate_finite(p, "preconditioner");
    const RealVector rhs = difference_row_sums(a, p);
    const std::size_t n = a.order();
    if (s0.size() != n) {
        throw DimensionMismatch("start vector length does not match matrix order");
    }
    validate_finite(s0, "start vector");

    const RealMatrix comp = comparison_matrix(p).mat;
    if (!dominates(comp, s0, rhs, opts.start_slack)) {
        throw InvalidStartVector("start vector does not dominate the difference row sums");
    }

    SassenfeldReport rep;
    rep.method = IndexMethod::Iterative;
    if (n == 0) {
        rep.converged = true;
        return rep;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (comp(i, i) == 0.0) {
            throw ZeroDiagonal("preconditioner has a zero diagonal entry");
        }
    }

    // |diag P| next = |off P| cur + rhs; off moduli are the negated
    // off-diagonal entries of the comparison matrix.
    const auto iterate = [&](const RealVector& cur) {
        RealVector next(n);
        for (std::size_t i = 0; i < n; ++i) {
            double acc = rhs[i];
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) {
                    acc -= comp(i, j) * cur[j];
                }
            }
            next[i] = acc / comp(i, i);
        }
        return next;
    };

    const std::size_t max_iter = opts.max_iter > 0 ? opts.max_iter : 100 * n;

    RealVector cur = s0;
    RealVector first = iterate(cur);
    if (max_abs_difference(first, cur) <= opts.tol) {
        rep.s = std::move(cur);
        rep.mu = inf_norm(rep.s);
        rep.iterations = 0;
        rep.trace.push_back(rep.mu);
        rep.converged = true;
        return rep;
    }

    cur = std::move(first);
    std::size_t k = 1;
    rep.trace.push_back(inf_norm(cur));
    rep.converged = false;
    while (k < max_iter) {
        RealVector ahead = iterate(cur);
        if (max_abs_difference(ahead, cur) <= opts.tol) {
            rep.converged = true;
            break;
        }
        cur = std::move(ahead);
        ++k;
        rep.trace.push_back(inf_norm(cur));
    }

    rep.iterations = k;
    rep.s = std::move(cur);
    rep.mu = inf_norm(rep.s);
    return rep;
}

std::optional<double> bound_from_test_vector(const ComplexMatrix& a, const ComplexMatrix& p,
                                             const HCertificate& cert, const RealVector& v) {
    require_certified(cert);
    const RealVector rhs = difference_row_sums(a, p);
    if (v.size() != a.order()) {
        throw DimensionMismatch("test vector length does not match matrix order");
    }
    validate_finite(v, "test vector");
    if (!dominates(comparison_matrix(p).mat, v, rhs, 1e-12)) {
        return std::nullopt;
    }
    return inf_norm(v);
}

NormBoundReport iteration_matrix_norm_bound(const ComplexMatrix& a, const ComplexMatrix& p,
                                            const HCertificate& cert,
                                            const NormBoundOptions& opts) {
    NormBoundReport out;
    out.bound = sassenfeld_index(a, p, cert);

    const std::size_t n = a.order();
    if (n == 0 || n > opts.dense_check_threshold) {
        return out;
    }

    // inf-norm of I - P^{-1} A accumulated column by column.
    const ComplexLu plu(p);
    RealVector row_sums(n, 0.0);
    ComplexVector col(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            col[i] = a(i, j);
        }
        const ComplexVector y = plu.solve(col);
        for (std::size_t i = 0; i < n; ++i) {
            const Complex t = (i == j ? Complex{1.0, 0.0} : Complex{}) - y[i];
            row_sums[i] += std::abs(t);
        }
    }
    out.exact_norm = *std::max_element(row_sums.begin(), row_sums.end());
    out.exact_available = true;
    if (out.exact_norm > out.bound + opts.check_tol) {
        throw InternalInconsistency("iteration matrix norm exceeds the certified bound");
    }
    return out;
}

InvertibilityCertificate shifted_invertibility(const ComplexMatrix& a, const ComplexMatrix& p,
                                               const HCertificate& cert, Complex tau) {
    InvertibilityCertificate out;
    out.shift = tau;
    out.mu = sassenfeld_index(a, p, cert);
    out.certified = std::abs(tau + 1.0) > out.mu;
    return out;
}

double condition_bound(const ComplexMatrix& a, const ComplexMatrix& p,
                       const HCertificate& cert) {
    const double mu = sassenfeld_index(a, p, cert);
    if (classify_contraction(mu) != Contraction::Contractive) {
        throw BoundUnavailable("condition bound requires an index strictly below 1");
    }
    return (1.0 + mu) / (1.0 - mu);
}

} // namespace sassen
