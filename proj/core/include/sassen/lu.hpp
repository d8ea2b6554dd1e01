#ifndef SASSEN_LU_HPP
#define SASSEN_LU_HPP

#include <cstddef>
#include <vector>

#include "sassen/matrix.hpp"

namespace sassen {

/// Zero-pattern classification used to pick a solve path.
enum class MatrixStructure { Diagonal, LowerTriangular, UpperTriangular, General };

template <typename T>
MatrixStructure detect_structure(const Matrix<T>& m);

/// Singularity threshold for pivots and triangular diagonals:
/// order * ulp * inf-norm of the source matrix.
double singularity_threshold(std::size_t order, double source_norm);

/// LU factorization with partial pivoting. Factors once at construction;
/// throws SingularMatrix when a pivot falls below the threshold.
template <typename T>
class DenseLu {
public:
    explicit DenseLu(const Matrix<T>& m);

    std::size_t order() const noexcept { return order_; }

    std::vector<T> solve(const std::vector<T>& rhs) const;

private:
    std::size_t order_ = 0;
    Matrix<T> lu_;
    std::vector<std::size_t> perm_;
};

using RealLu = DenseLu<double>;
using ComplexLu = DenseLu<Complex>;

/// Solves m x = rhs. Diagonal and triangular inputs are solved by direct
/// substitution; everything else goes through pivoted LU.
RealVector solve_dense(const RealMatrix& m, const RealVector& rhs);
ComplexVector solve_dense(const ComplexMatrix& m, const ComplexVector& rhs);

} // namespace sassen

#endif
