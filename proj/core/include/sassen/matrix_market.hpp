#ifndef SASSEN_MATRIX_MARKET_HPP
#define SASSEN_MATRIX_MARKET_HPP

#include <iosfwd>
#include <string>

#include "sassen/matrix.hpp"

namespace sassen {

/// Matrix Market readers. Accepted headers:
///   %%MatrixMarket matrix <array|coordinate> <real|complex|integer> \
///     <general|symmetric|hermitian>
/// Symmetric and hermitian files store the lower triangle and are expanded.
/// Malformed input raises ParseError carrying the source name and line.
ComplexMatrix read_matrix(std::istream& in, const std::string& source_name);
ComplexMatrix read_matrix(const std::string& path);

/// Vectors are column (m by 1) or row (1 by m) files.
ComplexVector read_vector(std::istream& in, const std::string& source_name);
ComplexVector read_vector(const std::string& path);

/// Writers emit array format, general symmetry, at full double precision so
/// a read of the output reproduces every entry exactly. The complex field is
/// used only when some imaginary part is nonzero.
void write_matrix(std::ostream& out, const ComplexMatrix& m);
void write_matrix(const std::string& path, const ComplexMatrix& m);
void write_vector(std::ostream& out, const ComplexVector& v);
void write_vector(const std::string& path, const ComplexVector& v);
void write_vector(const std::string& path, const RealVector& v);

} // namespace sassen

#endif
