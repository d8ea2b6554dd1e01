#include "sassen/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#include "sassen/errors.hpp"

namespace sassen {

ComplexVector PreconditionerSpec::apply_inverse(const ComplexVector& rhs) const {
    const std::size_t n = p.order();
    if (rhs.size() != n) {
        throw DimensionMismatch("right-hand side length does not match preconditioner order");
    }
    ComplexVector y(n);
    switch (strategy) {
    case SolveStrategy::Diagonal:
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(p(i, i)) <= substitution_threshold) {
                throw SingularMatrix("pivot below singularity threshold");
            }
            y[i] = rhs[i] / p(i, i);
        }
        return y;
    case SolveStrategy::ForwardSubstitution:
        for (std::size_t i = 0; i < n; ++i) {
            Complex acc = rhs[i];
            for (std::size_t j = 0; j < i; ++j) {
                acc -= p(i, j) * y[j];
            }
            if (std::abs(p(i, i)) <= substitution_threshold) {
                throw SingularMatrix("pivot below singularity threshold");
            }
            y[i] = acc / p(i, i);
        }
        return y;
    case SolveStrategy::Factored:
        break;
    }
    if (!lu) {
        throw InternalInconsistency("factored strategy without a cached factorization");
    }
    return lu->solve(rhs);
}

namespace {

PreconditionerSpec finish_spec(PreconditionerKind kind, ComplexMatrix p,
                               std::optional<SolveStrategy> forced) {
    PreconditionerSpec spec;
    spec.kind = kind;
    spec.p = std::move(p);
    spec.certificate = certify_h(spec.p);
    if (spec.certificate.verdict != HVerdict::IsH) {
        const std::string detail = spec.certificate.reason.empty()
                                       ? std::string("certification failed")
                                       : spec.certificate.reason;
        throw PreconditionerNotH("preconditioner is not certified: " + detail);
    }

    if (forced) {
        spec.strategy = *forced;
    } else {
        switch (detect_structure(spec.p)) {
        case MatrixStructure::Diagonal:
            spec.strategy = SolveStrategy::Diagonal;
            break;
        case MatrixStructure::LowerTriangular:
            spec.strategy = SolveStrategy::ForwardSubstitution;
            break;
        default:
            spec.strategy = SolveStrategy::Factored;
            break;
        }
    }

    if (spec.strategy == SolveStrategy::Factored) {
        spec.lu = std::make_shared<const ComplexLu>(spec.p);
    } else {
        spec.substitution_threshold = singularity_threshold(spec.p.order(), inf_norm(spec.p));
    }
    return spec;
}

} // namespace

PreconditionerSpec make_preconditioner(const ComplexMatrix& a, PreconditionerKind kind) {
    validate_finite(a, "matrix");
    const StructuralSplit parts = split(a);
    switch (kind) {
    case PreconditionerKind::Jacobi:
        return finish_spec(kind, parts.diagonal, std::nullopt);
    case PreconditionerKind::GaussSeidel:
        return finish_spec(kind, add(parts.diagonal, parts.lower), std::nullopt);
    case PreconditionerKind::Custom:
        break;
    }
    throw InternalInconsistency("custom preconditioner requires an explicit matrix");
}

PreconditionerSpec make_preconditioner(const ComplexMatrix& a, const ComplexMatrix& p,
                                       std::optional<SolveStrategy> forced) {
    validate_finite(a, "matrix");
    require_same_order(a, p, "matrix and preconditioner");
    return finish_spec(PreconditionerKind::Custom, p, forced);
}

SolveTrace solve(const ComplexMatrix& a, const ComplexVector& b,
                 const PreconditionerSpec& spec, const ComplexVector& x0,
                 const SolveOptions& opts, const ComplexVector* reference) {
    validate_finite(a, "matrix");
    require_same_order(a, spec.p, "matrix and preconditioner");
    const std::size_t n = a.order();
    if (b.size() != n || x0.size() != n || (reference && reference->size() != n)) {
        throw DimensionMismatch("vector length does not match matrix order");
    }
    validate_finite(b, "right-hand side");
    validate_finite(x0, "initial iterate");

    SolveTrace trace;
    trace.mu = sassenfeld_index(a, spec.p, spec.certificate);
    trace.contraction = classify_contraction(trace.mu);
    trace.certified = trace.contraction == Contraction::Contractive;
    if (!trace.certified && !opts.best_effort) {
        throw NotContractive("index is not strictly below 1; use best-effort mode to iterate anyway");
    }

    const double a_norm = inf_norm(a);
    const double b_norm = inf_norm(b);
    const auto residual_of = [&](const ComplexVector& x) {
        ComplexVector r = matvec(a, x);
        for (std::size_t i = 0; i < n; ++i) {
            r[i] = b[i] - r[i];
        }
        return r;
    };
    const auto stop_threshold = [&](const ComplexVector& x) {
        return std::max(opts.residual_abs_tol,
                        opts.residual_rel_tol * (a_norm * inf_norm(x) + b_norm));
    };
    const auto error_vs_reference = [&](const ComplexVector& x) {
        double best = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            best = std::max(best, std::abs(x[i] - (*reference)[i]));
        }
        return best;
    };

    const std::size_t max_iter = opts.max_iter > 0 ? opts.max_iter : 1000 * std::max<std::size_t>(n, 1);

    ComplexVector x = x0;
    ComplexVector r = residual_of(x);
    trace.residuals.push_back(inf_norm(r));
    if (reference) {
        trace.true_errors.push_back(error_vs_reference(x));
    }

    double e0 = 0.0;
    bool e0_known = false;
    if (reference) {
        e0 = trace.true_errors.front();
        e0_known = true;
    }

    std::size_t steps = 0;
    while (true) {
        if (trace.residuals.back() <= stop_threshold(x)) {
            trace.converged = true;
            break;
        }
        if (steps >= max_iter) {
            break;
        }
        const ComplexVector y = spec.apply_inverse(r);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += y[i];
        }
        ++steps;
        // Surrogate initial error from the first update: the distance to the
        // fixed point is at most |x_1 - x_0| / (1 - mu).
        if (!e0_known && trace.certified) {
            e0 = inf_norm(y) / (1.0 - trace.mu);
            e0_known = true;
        }
        r = residual_of(x);
        trace.residuals.push_back(inf_norm(r));
        if (reference) {
            trace.true_errors.push_back(error_vs_reference(x));
        }
    }

    trace.iterations = steps;
    trace.x = std::move(x);
    if (trace.certified && e0_known) {
        trace.apriori_bounds.resize(trace.residuals.size());
        double bound = e0;
        for (std::size_t k = 0; k < trace.apriori_bounds.size(); ++k) {
            trace.apriori_bounds[k] = bound;
            bound *= trace.mu;
        }
    }
    return trace;
}

ComplexMatrix fdm_matrix(std::size_t m) {
    if (m < 1) {
        throw DimensionMismatch("finite difference matrix requires order at least 1");
    }
    ComplexMatrix a(m);
    for (std::size_t i = 0; i < m; ++i) {
        a(i, i) = Complex{2.0, 0.0};
        if (i + 1 < m) {
            a(i, i + 1) = Complex{-1.0, 0.0};
            a(i + 1, i) = Complex{-1.0, 0.0};
        }
    }
    return a;
}

} // namespace sassen
