#include "sassen/matrix.hpp"

#include <algorithm>

namespace sassen {

ComplexMatrix StructuralSplit::off() const {
    ComplexMatrix m = lower;
    const std::size_t n = m.order();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m(i, j) = upper(i, j);
    return m;
}

RealMatrix entrywise_modulus(const ComplexMatrix& m) {
    RealMatrix r(m.order());
    for (std::size_t k = 0; k < r.values().size(); ++k) r.values()[k] = std::abs(m.values()[k]);
    return r;
}

RealMatrix entrywise_modulus(const RealMatrix& m) {
    RealMatrix r(m.order());
    for (std::size_t k = 0; k < r.values().size(); ++k) r.values()[k] = std::abs(m.values()[k]);
    return r;
}

StructuralSplit split(const ComplexMatrix& m) {
    const std::size_t n = m.order();
    StructuralSplit s{ComplexMatrix(n), ComplexMatrix(n), ComplexMatrix(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                s.diagonal(i, j) = m(i, j);
            else if (j < i)
                s.lower(i, j) = m(i, j);
            else
                s.upper(i, j) = m(i, j);
        }
    return s;
}

namespace {

template <typename T>
double max_abs_row_sum(const Matrix<T>& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.order(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.order(); ++j) s += std::abs(m(i, j));
        best = std::max(best, s);
    }
    return best;
}

template <typename T>
double max_abs_entry(const std::vector<T>& v) {
    double best = 0.0;
    for (const auto& x : v) best = std::max(best, std::abs(x));
    return best;
}

} // namespace

double inf_norm(const ComplexMatrix& m) { return max_abs_row_sum(m); }
double inf_norm(const RealMatrix& m) { return max_abs_row_sum(m); }
double inf_norm(const ComplexVector& v) { return max_abs_entry(v); }
double inf_norm(const RealVector& v) { return max_abs_entry(v); }

ComplexMatrix to_complex(const RealMatrix& m) {
    ComplexMatrix c(m.order());
    for (std::size_t k = 0; k < c.values().size(); ++k) c.values()[k] = Complex(m.values()[k], 0.0);
    return c;
}

RealVector ones(std::size_t n) { return RealVector(n, 1.0); }

} // namespace sassen
