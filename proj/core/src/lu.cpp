#include "sassen/lu.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>

#include "sassen/errors.hpp"

namespace sassen {

namespace {

template <typename T>
MatrixStructure detect_structure_impl(const Matrix<T>& m) {
    const std::size_t n = m.order();
    bool lower_clear = true; // entries below the diagonal are all zero
    bool upper_clear = true; // entries above the diagonal are all zero
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || m(i, j) == T{}) {
                continue;
            }
            if (i > j) {
                lower_clear = false;
            } else {
                upper_clear = false;
            }
        }
    }
    if (lower_clear && upper_clear) {
        return MatrixStructure::Diagonal;
    }
    if (upper_clear) {
        return MatrixStructure::LowerTriangular;
    }
    if (lower_clear) {
        return MatrixStructure::UpperTriangular;
    }
    return MatrixStructure::General;
}

template <typename T>
void check_pivot(const T& pivot, double threshold) {
    if (std::abs(pivot) <= threshold) {
        throw SingularMatrix("pivot below singularity threshold");
    }
}

// x_i = (rhs_i - sum_{j<i} m_ij x_j) / m_ii, rows in increasing order.
template <typename T>
std::vector<T> forward_substitute(const Matrix<T>& m, const std::vector<T>& rhs,
                                  double threshold) {
    const std::size_t n = m.order();
    std::vector<T> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        T acc = rhs[i];
        for (std::size_t j = 0; j < i; ++j) {
            acc -= m(i, j) * x[j];
        }
        check_pivot(m(i, i), threshold);
        x[i] = acc / m(i, i);
    }
    return x;
}

template <typename T>
std::vector<T> backward_substitute(const Matrix<T>& m, const std::vector<T>& rhs,
                                   double threshold) {
    const std::size_t n = m.order();
    std::vector<T> x(n);
    for (std::size_t k = n; k-- > 0;) {
        T acc = rhs[k];
        for (std::size_t j = k + 1; j < n; ++j) {
            acc -= m(k, j) * x[j];
        }
        check_pivot(m(k, k), threshold);
        x[k] = acc / m(k, k);
    }
    return x;
}

template <typename T>
std::vector<T> divide_by_diagonal(const Matrix<T>& m, const std::vector<T>& rhs,
                                  double threshold) {
    const std::size_t n = m.order();
    std::vector<T> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        check_pivot(m(i, i), threshold);
        x[i] = rhs[i] / m(i, i);
    }
    return x;
}

template <typename T>
std::vector<T> solve_dense_impl(const Matrix<T>& m, const std::vector<T>& rhs) {
    if (rhs.size() != m.order()) {
        throw DimensionMismatch("right-hand side length does not match matrix order");
    }
    validate_finite(m, "linear system matrix");
    validate_finite(rhs, "linear system right-hand side");
    const double threshold = singularity_threshold(m.order(), inf_norm(m));
    switch (detect_structure_impl(m)) {
    case MatrixStructure::Diagonal:
        return divide_by_diagonal(m, rhs, threshold);
    case MatrixStructure::LowerTriangular:
        return forward_substitute(m, rhs, threshold);
    case MatrixStructure::UpperTriangular:
        return backward_substitute(m, rhs, threshold);
    case MatrixStructure::General:
        break;
    }
    return DenseLu<T>(m).solve(rhs);
}

} // namespace

template <typename T>
MatrixStructure detect_structure(const Matrix<T>& m) {
    return detect_structure_impl(m);
}

template MatrixStructure detect_structure(const RealMatrix&);
template MatrixStructure detect_structure(const ComplexMatrix&);

double singularity_threshold(std::size_t order, double source_norm) {
    return static_cast<double>(order) * std::numeric_limits<double>::epsilon() * source_norm;
}

template <typename T>
DenseLu<T>::DenseLu(const Matrix<T>& m) : order_(m.order()), lu_(m), perm_(m.order()) {
    validate_finite(lu_, "factorization input");
    const double threshold = singularity_threshold(order_, inf_norm(m));
    for (std::size_t i = 0; i < order_; ++i) {
        perm_[i] = i;
    }
    for (std::size_t k = 0; k < order_; ++k) {
        std::size_t pivot_row = k;
        double pivot_mag = std::abs(lu_(k, k));
        for (std::size_t i = k + 1; i < order_; ++i) {
            const double mag = std::abs(lu_(i, k));
            if (mag > pivot_mag) {
                pivot_mag = mag;
                pivot_row = i;
            }
        }
        if (pivot_mag <= threshold) {
            throw SingularMatrix("pivot below singularity threshold");
        }
        if (pivot_row != k) {
            for (std::size_t j = 0; j < order_; ++j) {
                std::swap(lu_(k, j), lu_(pivot_row, j));
            }
            std::swap(perm_[k], perm_[pivot_row]);
        }
        const T pivot = lu_(k, k);
        for (std::size_t i = k + 1; i < order_; ++i) {
            const T factor = lu_(i, k) / pivot;
            lu_(i, k) = factor;
            for (std::size_t j = k + 1; j < order_; ++j) {
                lu_(i, j) -= factor * lu_(k, j);
            }
        }
    }
}

template <typename T>
std::vector<T> DenseLu<T>::solve(const std::vector<T>& rhs) const {
    if (rhs.size() != order_) {
        throw DimensionMismatch("right-hand side length does not match matrix order");
    }
    validate_finite(rhs, "linear system right-hand side");
    std::vector<T> x(order_);
    // Unit lower solve on the permuted right-hand side.
    for (std::size_t i = 0; i < order_; ++i) {
        T acc = rhs[perm_[i]];
        for (std::size_t j = 0; j < i; ++j) {
            acc -= lu_(i, j) * x[j];
        }
        x[i] = acc;
    }
    for (std::size_t k = order_; k-- > 0;) {
        T acc = x[k];
        for (std::size_t j = k + 1; j < order_; ++j) {
            acc -= lu_(k, j) * x[j];
        }
        x[k] = acc / lu_(k, k);
    }
    return x;
}

template class DenseLu<double>;
template class DenseLu<Complex>;

RealVector solve_dense(const RealMatrix& m, const RealVector& rhs) {
    return solve_dense_impl(m, rhs);
}

ComplexVector solve_dense(const ComplexMatrix& m, const ComplexVector& rhs) {
    return solve_dense_impl(m, rhs);
}

} // namespace sassen
