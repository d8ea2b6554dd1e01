#include "sassen/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "sassen/errors.hpp"

namespace sassen {

SpectralRadiusEstimate spectral_radius_nonneg(const RealMatrix& b, const SpectralOptions& opts) {
    validate_finite(b, "spectral radius input");
    const std::size_t n = b.order();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (b(i, j) < 0.0) {
                throw InternalInconsistency("spectral radius estimator requires a nonnegative matrix");
            }
        }
    }

    SpectralRadiusEstimate out;
    if (n == 0) {
        out.converged = true;
        return out;
    }

    RealVector v = ones(n);
    double log_power_norm = 0.0; // log of the inf-norm of b^k applied to ones
    double gamma_prev = 0.0;
    double estimate_prev = std::numeric_limits<double>::quiet_NaN();
    double upper = std::numeric_limits<double>::infinity();
    std::size_t stable_steps = 0;

    for (std::size_t k = 1; k <= opts.max_iter; ++k) {
        RealVector w = matvec(b, v);
        const double gamma = inf_norm(w);
        out.iterations = k;
        if (gamma == 0.0) {
            // A vanished power of a nonnegative matrix means nilpotent.
            out.value = 0.0;
            out.upper_bound = 0.0;
            out.converged = true;
            out.near_one = false;
            return out;
        }

        log_power_norm += std::log(gamma);
        upper = std::min(upper, std::exp(log_power_norm / static_cast<double>(k)));

        const double estimate = (k == 1) ? gamma : std::sqrt(gamma * gamma_prev);
        if (k >= 2 && std::abs(estimate - estimate_prev) <= opts.tol * std::max(1.0, estimate)) {
            ++stable_steps;
        } else {
            stable_steps = 0;
        }

        out.value = estimate;
        // A stable ratio can be a transient of nilpotent structure, which
        // cannot outlive the order; convergence is not declared before then.
        if (stable_steps >= 3 && k >= n) {
            out.converged = true;
            break;
        }

        for (std::size_t i = 0; i < n; ++i) {
            v[i] = w[i] / gamma;
        }
        gamma_prev = gamma;
        estimate_prev = estimate;
    }

    out.upper_bound = upper;
    out.near_one = std::abs(out.value - 1.0) <= opts.near_one_band;
    return out;
}

} // namespace sassen
