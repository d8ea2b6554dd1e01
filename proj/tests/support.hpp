// Shared test helpers: deterministic random instances and Eigen-based
// oracles kept independent of the library's own numerics.
#ifndef SASSEN_TESTS_SUPPORT_HPP
#define SASSEN_TESTS_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "sassen/matrix.hpp"

namespace testsupport {

using sassen::Complex;
using sassen::ComplexMatrix;
using sassen::ComplexVector;
using sassen::RealMatrix;
using sassen::RealVector;

inline Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
    const auto n = static_cast<Eigen::Index>(m.order());
    Eigen::MatrixXcd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            out(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        }
    }
    return out;
}

inline Eigen::MatrixXd to_eigen(const RealMatrix& m) {
    const auto n = static_cast<Eigen::Index>(m.order());
    Eigen::MatrixXd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            out(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        }
    }
    return out;
}

inline double inf_norm_eigen(const Eigen::MatrixXcd& m) {
    return m.cwiseAbs().rowwise().sum().maxCoeff();
}

/// Spectral radius by dense eigenvalues, the independent route.
inline double spectral_radius_oracle(const RealMatrix& b) {
    if (b.order() == 0) {
        return 0.0;
    }
    const Eigen::MatrixXd eb = to_eigen(b);
    return eb.eigenvalues().cwiseAbs().maxCoeff();
}

/// inf-norm of I - P^{-1} A computed densely with Eigen.
inline double iteration_matrix_norm_oracle(const ComplexMatrix& a, const ComplexMatrix& p) {
    const Eigen::MatrixXcd ea = to_eigen(a);
    const Eigen::MatrixXcd ep = to_eigen(p);
    const Eigen::MatrixXcd t =
        Eigen::MatrixXcd::Identity(ea.rows(), ea.cols()) - ep.partialPivLu().solve(ea);
    return inf_norm_eigen(t);
}

/// inf-norm condition number of P^{-1} A computed densely with Eigen.
inline double condition_inf_oracle(const ComplexMatrix& a, const ComplexMatrix& p) {
    const Eigen::MatrixXcd ea = to_eigen(a);
    const Eigen::MatrixXcd ep = to_eigen(p);
    const Eigen::MatrixXcd t = ep.partialPivLu().solve(ea);
    return inf_norm_eigen(t) * inf_norm_eigen(t.inverse());
}

inline Complex random_phase(std::mt19937& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const double theta = angle(rng);
    return Complex{std::cos(theta), std::sin(theta)};
}

inline Complex random_complex(std::mt19937& rng, double box) {
    std::uniform_real_distribution<double> coord(-box, box);
    return Complex{coord(rng), coord(rng)};
}

/// Dense complex matrix with entries in a centered box and the diagonal kept
/// away from zero, so the Jacobi and Gauss-Seidel parts always certify.
inline ComplexMatrix random_matrix_nonzero_diag(std::mt19937& rng, std::size_t n,
                                                double box = 1.0) {
    ComplexMatrix a(n);
    std::uniform_real_distribution<double> diag_mod(0.4 * box, 1.6 * box);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = (i == j) ? diag_mod(rng) * random_phase(rng) : random_complex(rng, box);
        }
    }
    return a;
}

/// Strictly diagonally dominant complex matrix: each diagonal modulus exceeds
/// its off-diagonal row sum by a positive margin.
inline ComplexMatrix random_sdd_matrix(std::mt19937& rng, std::size_t n) {
    ComplexMatrix a(n);
    std::uniform_real_distribution<double> margin(0.2, 1.2);
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
                a(i, j) = random_complex(rng, 0.7);
                row += std::abs(a(i, j));
            }
        }
        a(i, i) = (row + margin(rng)) * random_phase(rng);
    }
    return a;
}

inline RealMatrix random_nonneg_matrix(std::mt19937& rng, std::size_t n, double scale = 1.0) {
    RealMatrix b(n);
    std::uniform_real_distribution<double> entry(0.0, scale);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            b(i, j) = entry(rng);
        }
    }
    return b;
}

/// H-matrix built from its definition: comparison matrix r I - B with
/// r above the spectral radius of B, then random phases entrywise.
inline ComplexMatrix random_h_by_construction(std::mt19937& rng, std::size_t n,
                                              double radius_factor = 1.05) {
    const RealMatrix b = random_nonneg_matrix(rng, n);
    const double rho = spectral_radius_oracle(b);
    const double r = radius_factor * std::max(rho, 0.01);
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double magnitude = (i == j) ? r - b(i, j) : b(i, j);
            a(i, j) = magnitude * random_phase(rng);
        }
    }
    return a;
}

inline ComplexVector random_complex_vector(std::mt19937& rng, std::size_t n, double box = 1.0) {
    ComplexVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = random_complex(rng, box);
    }
    return v;
}

inline double max_abs_diff(const RealVector& x, const RealVector& y) {
    double best = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        best = std::max(best, std::abs(x[i] - y[i]));
    }
    return best;
}

inline double max_abs_diff(const ComplexVector& x, const ComplexVector& y) {
    double best = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        best = std::max(best, std::abs(x[i] - y[i]));
    }
    return best;
}

} // namespace testsupport

#endif
