#include "sassen/hmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "sassen/errors.hpp"
#include "sassen/lu.hpp"

namespace sassen {

ComparisonMatrix comparison_matrix(const ComplexMatrix& a) {
    validate_finite(a, "comparison matrix input");
    const std::size_t n = a.order();
    ComparisonMatrix out;
    out.mat = RealMatrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double mod = std::abs(a(i, j));
            out.mat(i, j) = (i == j) ? mod : -mod;
        }
        out.r = std::max(out.r, out.mat(i, i));
    }
    out.b = RealMatrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out.b(i, j) = (i == j) ? out.r - out.mat(i, j) : -out.mat(i, j);
        }
    }
    return out;
}

RealVector dominance_margins(const ComplexMatrix& a, const RealVector& u) {
    const std::size_t n = a.order();
    if (u.size() != n) {
        throw DimensionMismatch("witness length does not match matrix order");
    }
    RealVector margins(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = std::abs(a(i, i)) * u[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
                acc -= std::abs(a(i, j)) * u[j];
            }
        }
        margins[i] = acc;
    }
    return margins;
}

RealMatrix jacobi_iteration_matrix(const ComplexMatrix& a) {
    validate_finite(a, "Jacobi iteration matrix input");
    const std::size_t n = a.order();
    RealMatrix j(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double d = std::abs(a(i, i));
        if (d == 0.0) {
            throw ZeroDiagonal("Jacobi iteration matrix requires a nonzero diagonal");
        }
        for (std::size_t k = 0; k < n; ++k) {
            j(i, k) = (k == i) ? 0.0 : std::abs(a(i, k)) / d;
        }
    }
    return j;
}

namespace {

bool has_zero_diagonal(const ComplexMatrix& a) {
    for (std::size_t i = 0; i < a.order(); ++i) {
        if (std::abs(a(i, i)) == 0.0) {
            return true;
        }
    }
    return false;
}

} // namespace

HCertificate certify_h(const ComplexMatrix& a, const CertifyOptions& opts) {
    validate_finite(a, "H-certificate input");
    HCertificate cert;

    if (a.order() == 0) {
        cert.verdict = HVerdict::IsH;
        cert.jacobi_radius.converged = true;
        cert.jacobi_radius_available = true;
        return cert;
    }

    if (has_zero_diagonal(a)) {
        cert.verdict = HVerdict::NotH;
        cert.reason = "zero diagonal entry";
        return cert;
    }

    const ComparisonMatrix comp = comparison_matrix(a);
    bool primary_is_h = false;
    RealVector u;
    try {
        u = solve_dense(comp.mat, ones(a.order()));
        const double floor = opts.positivity_rel_tol * inf_norm(u);
        primary_is_h = true;
        for (double ui : u) {
            if (ui <= floor) {
                primary_is_h = false;
                break;
            }
        }
        if (!primary_is_h) {
            cert.reason = "comparison matrix inverse is not nonnegative";
        }
    } catch (const SingularMatrix&) {
        primary_is_h = false;
        cert.reason = "singular comparison matrix";
    }

    cert.jacobi_radius = spectral_radius_nonneg(jacobi_iteration_matrix(a), opts.spectral);
    cert.jacobi_radius_available = true;
    const double band = opts.spectral.near_one_band;
    const SpectralRadiusEstimate& jr = cert.jacobi_radius;

    if (primary_is_h) {
        // A converged radius firmly above 1 contradicts membership.
        if (jr.converged && jr.value > 1.0 + band) {
            cert.verdict = HVerdict::Inconclusive;
            cert.reason = "witness solve and Jacobi radius diagnostic disagree";
            return cert;
        }
        cert.verdict = HVerdict::IsH;
        cert.witness = std::move(u);
        cert.reason.clear();
        return cert;
    }

    // A radius certified below 1 contradicts a negative verdict.
    const bool radius_below_one =
        (jr.converged && jr.value < 1.0 - band) || jr.upper_bound < 1.0 - band;
    if (radius_below_one) {
        cert.verdict = HVerdict::Inconclusive;
        cert.reason = "witness solve and Jacobi radius diagnostic disagree";
        return cert;
    }
    cert.verdict = HVerdict::NotH;
    return cert;
}

} // namespace sassen
