#ifndef SASSEN_SPECTRAL_HPP
#define SASSEN_SPECTRAL_HPP

#include <cstddef>

#include "sassen/matrix.hpp"

namespace sassen {

struct SpectralOptions {
    double tol = 1e-10;
    std::size_t max_iter = 10000;
    /// Half-width of the band around 1 inside which the estimate is treated
    /// as indistinguishable from 1.
    double near_one_band = 1e-8;
};

struct SpectralRadiusEstimate {
    double value = 0.0;
    /// Certified upper bound: for a nonnegative matrix the max row sum of the
    /// k-th power equals the k-th power norm, so every Gelfand root bounds the
    /// spectral radius from above. This is the smallest root seen.
    double upper_bound = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    bool near_one = false;
};

/// Power-sequence estimate of the spectral radius of a nonnegative matrix.
/// The value is a two-step geometric-mean ratio, which settles even when the
/// powers oscillate with period two; upper_bound is valid regardless of
/// convergence.
SpectralRadiusEstimate spectral_radius_nonneg(const RealMatrix& b,
                                              const SpectralOptions& opts = {});

} // namespace sassen

#endif
