#ifndef SASSEN_MATRIX_HPP
#define SASSEN_MATRIX_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "sassen/errors.hpp"

namespace sassen {

using Complex = std::complex<double>;
using RealVector = std::vector<double>;
using ComplexVector = std::vector<Complex>;

/// Dense square matrix, row-major storage.
template <typename T>
class Matrix {
public:
    Matrix() = default;

    /// Zero matrix of the given order.
    explicit Matrix(std::size_t order) : order_(order), data_(order * order, T{}) {}

    static Matrix identity(std::size_t order) {
        Matrix m(order);
        for (std::size_t i = 0; i < order; ++i) m(i, i) = T{1};
        return m;
    }

    /// Builds from row lists; rejects ragged input and non-finite entries.
    static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows);

    std::size_t order() const noexcept { return order_; }

    T& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * order_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * order_ + j]; }

    std::vector<T>& values() noexcept { return data_; }
    const std::vector<T>& values() const noexcept { return data_; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t order_ = 0;
    std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<Complex>;

/// Exact structural partition A = diagonal + lower + upper.
/// Entries are copied, never recombined arithmetically.
struct StructuralSplit {
    ComplexMatrix diagonal;
    ComplexMatrix lower; ///< strict lower triangle
    ComplexMatrix upper; ///< strict upper triangle

    ComplexMatrix off() const;
};

inline bool is_finite(double x) noexcept { return std::isfinite(x); }
inline bool is_finite(const Complex& z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

template <typename T>
void validate_finite(const Matrix<T>& m, const char* what) {
    for (const auto& v : m.values())
        if (!is_finite(v)) throw NonFiniteEntry(std::string(what) + ": non-finite entry");
}

template <typename T>
void validate_finite(const std::vector<T>& v, const char* what) {
    for (const auto& x : v)
        if (!is_finite(x)) throw NonFiniteEntry(std::string(what) + ": non-finite entry");
}

template <typename T>
Matrix<T> Matrix<T>::from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    Matrix m(rows.size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != m.order_) throw DimensionMismatch("from_rows: matrix is not square");
        std::size_t j = 0;
        for (const auto& v : row) m(i, j++) = v;
        ++i;
    }
    validate_finite(m, "from_rows");
    return m;
}

template <typename T>
void require_same_order(const Matrix<T>& a, const Matrix<T>& b, const char* what) {
    if (a.order() != b.order())
        throw DimensionMismatch(std::string(what) + ": matrix orders differ");
}

/// Entry-wise modulus |M|.
RealMatrix entrywise_modulus(const ComplexMatrix& m);
RealMatrix entrywise_modulus(const RealMatrix& m);

/// Exact partition into diagonal and strict triangles.
StructuralSplit split(const ComplexMatrix& m);

/// Maximum absolute row sum.
double inf_norm(const ComplexMatrix& m);
double inf_norm(const RealMatrix& m);
/// Maximum absolute entry.
double inf_norm(const ComplexVector& v);
double inf_norm(const RealVector& v);

ComplexMatrix to_complex(const RealMatrix& m);
RealVector ones(std::size_t n);

template <typename T>
std::vector<T> matvec(const Matrix<T>& m, const std::vector<T>& x) {
    if (x.size() != m.order()) throw DimensionMismatch("matvec: length mismatch");
    std::vector<T> y(m.order(), T{});
    for (std::size_t i = 0; i < m.order(); ++i) {
        T acc{};
        for (std::size_t j = 0; j < m.order(); ++j) acc += m(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

template <typename T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
    require_same_order(a, b, "matmul");
    Matrix<T> c(a.order());
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t k = 0; k < a.order(); ++k) {
            const T aik = a(i, k);
            if (aik == T{}) continue;
            for (std::size_t j = 0; j < a.order(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <typename T>
Matrix<T> add(const Matrix<T>& a, const Matrix<T>& b) {
    require_same_order(a, b, "add");
    Matrix<T> c = a;
    for (std::size_t k = 0; k < c.values().size(); ++k) c.values()[k] += b.values()[k];
    return c;
}

template <typename T>
Matrix<T> subtract(const Matrix<T>& a, const Matrix<T>& b) {
    require_same_order(a, b, "subtract");
    Matrix<T> c = a;
    for (std::size_t k = 0; k < c.values().size(); ++k) c.values()[k] -= b.values()[k];
    return c;
}

template <typename T, typename S>
Matrix<T> scale(const Matrix<T>& a, S factor) {
    Matrix<T> c = a;
    for (auto& v : c.values()) v = v * factor;
    return c;
}

} // namespace sassen

#endif
