#include "sassen/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sassen/errors.hpp"

namespace sassen {

namespace {

enum class Field { Real, Complex, Integer };
enum class Symmetry { General, Symmetric, Hermitian };

struct Header {
    bool coordinate = false;
    Field field = Field::Real;
    Symmetry symmetry = Symmetry::General;
};

std::string lowered(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream stream(line);
    std::string tok;
    while (stream >> tok) {
        out.push_back(tok);
    }
    return out;
}

// from_chars rejects a leading plus sign, which Matrix Market files may carry.
const char* skip_plus(const char* begin, const char* end) {
    return (begin != end && *begin == '+') ? begin + 1 : begin;
}

double parse_double(const std::string& tok, const std::string& source, long line) {
    double value = 0.0;
    const char* end = tok.data() + tok.size();
    const char* begin = skip_plus(tok.data(), end);
    const auto res = std::from_chars(begin, end, value);
    if (begin == end || res.ec != std::errc{} || res.ptr != end) {
        throw ParseError(source, line, "invalid numeric value '" + tok + "'");
    }
    return value;
}

long parse_index(const std::string& tok, const std::string& source, long line) {
    long value = 0;
    const char* end = tok.data() + tok.size();
    const char* begin = skip_plus(tok.data(), end);
    const auto res = std::from_chars(begin, end, value);
    if (begin == end || res.ec != std::errc{} || res.ptr != end) {
        throw ParseError(source, line, "invalid index '" + tok + "'");
    }
    return value;
}

struct Rectangular {
    long rows = 0;
    long cols = 0;
    std::vector<Complex> data; // row-major

    Complex& at(long i, long j) { return data[static_cast<std::size_t>(i * cols + j)]; }
};

Rectangular parse_stream(std::istream& in, const std::string& source) {
    std::string line;
    long line_no = 0;
    if (!std::getline(in, line)) {
        throw ParseError(source, 1, "empty input");
    }
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    const std::vector<std::string> banner = tokens_of(line);
    if (banner.size() != 5 || lowered(banner[0]) != "%%matrixmarket") {
        throw ParseError(source, line_no, "malformed banner; expected "
                                          "'%%MatrixMarket matrix <format> <field> <symmetry>'");
    }
    if (lowered(banner[1]) != "matrix") {
        throw ParseError(source, line_no, "unsupported object '" + banner[1] + "'");
    }

    Header header;
    const std::string format = lowered(banner[2]);
    if (format == "coordinate") {
        header.coordinate = true;
    } else if (format == "array") {
        header.coordinate = false;
    } else {
        throw ParseError(source, line_no, "unsupported format '" + banner[2] + "'");
    }
    const std::string field = lowered(banner[3]);
    if (field == "real") {
        header.field = Field::Real;
    } else if (field == "complex") {
        header.field = Field::Complex;
    } else if (field == "integer") {
        header.field = Field::Integer;
    } else {
        throw ParseError(source, line_no, "unsupported field '" + banner[3] + "'");
    }
    const std::string sym = lowered(banner[4]);
    if (sym == "general") {
        header.symmetry = Symmetry::General;
    } else if (sym == "symmetric") {
        header.symmetry = Symmetry::Symmetric;
    } else if (sym == "hermitian") {
        header.symmetry = Symmetry::Hermitian;
    } else {
        throw ParseError(source, line_no, "unsupported symmetry '" + banner[4] + "'");
    }

    const auto next_content = [&](std::string& out) {
        while (std::getline(in, out)) {
            ++line_no;
            if (!out.empty() && out.back() == '\r') {
                out.pop_back();
            }
            const auto pos = out.find_first_not_of(" \t");
            if (pos == std::string::npos || out[pos] == '%') {
                continue;
            }
            return true;
        }
        return false;
    };

    if (!next_content(line)) {
        throw ParseError(source, line_no, "missing size line");
    }
    const std::vector<std::string> size_toks = tokens_of(line);
    const std::size_t expected_size_toks = header.coordinate ? 3 : 2;
    if (size_toks.size() != expected_size_toks) {
        throw ParseError(source, line_no, "malformed size line");
    }
    Rectangular rect;
    rect.rows = parse_index(size_toks[0], source, line_no);
    rect.cols = parse_index(size_toks[1], source, line_no);
    if (rect.rows < 0 || rect.cols < 0) {
        throw ParseError(source, line_no, "negative dimension");
    }
    long nnz = 0;
    if (header.coordinate) {
        nnz = parse_index(size_toks[2], source, line_no);
        if (nnz < 0) {
            throw ParseError(source, line_no, "negative entry count");
        }
    }
    if (header.symmetry != Symmetry::General && rect.rows != rect.cols) {
        throw ParseError(source, line_no, "symmetric storage requires a square matrix");
    }
    rect.data.assign(static_cast<std::size_t>(rect.rows) * static_cast<std::size_t>(rect.cols),
                     Complex{});

    const std::size_t values_per_entry = header.field == Field::Complex ? 2 : 1;

    const auto mirror = [&](long i, long j, Complex value) {
        if (header.symmetry == Symmetry::General || i == j) {
            return;
        }
        rect.at(j, i) = header.symmetry == Symmetry::Hermitian ? std::conj(value) : value;
    };
    const auto check_hermitian_diagonal = [&](long i, long j, const Complex& value) {
        if (header.symmetry == Symmetry::Hermitian && i == j && value.imag() != 0.0) {
            throw ParseError(source, line_no, "hermitian diagonal entry must be real");
        }
    };

    if (header.coordinate) {
        std::vector<char> seen(rect.data.size(), 0);
        for (long k = 0; k < nnz; ++k) {
            if (!next_content(line)) {
                throw ParseError(source, line_no, "unexpected end of file; expected "
                                                  + std::to_string(nnz) + " entries");
            }
            const std::vector<std::string> toks = tokens_of(line);
            if (toks.size() != 2 + values_per_entry) {
                throw ParseError(source, line_no, "malformed coordinate entry");
            }
            const long i = parse_index(toks[0], source, line_no) - 1;
            const long j = parse_index(toks[1], source, line_no) - 1;
            if (i < 0 || i >= rect.rows || j < 0 || j >= rect.cols) {
                throw ParseError(source, line_no, "index out of range");
            }
            if (header.symmetry != Symmetry::General && i < j) {
                throw ParseError(source, line_no,
                                 "symmetric storage must hold the lower triangle only");
            }
            Complex value;
            if (header.field == Field::Complex) {
                value = Complex{parse_double(toks[2], source, line_no),
                                parse_double(toks[3], source, line_no)};
            } else {
                value = Complex{parse_double(toks[2], source, line_no), 0.0};
            }
            const std::size_t flat = static_cast<std::size_t>(i * rect.cols + j);
            if (seen[flat]) {
                throw ParseError(source, line_no, "duplicate entry");
            }
            seen[flat] = 1;
            check_hermitian_diagonal(i, j, value);
            rect.at(i, j) = value;
            mirror(i, j, value);
        }
        if (next_content(line)) {
            throw ParseError(source, line_no, "unexpected data after the declared entries");
        }
        return rect;
    }

    // Array format: dense values in column-major order; symmetric storage
    // holds each column from the diagonal down.
    std::vector<double> numbers;
    const std::size_t entries =
        header.symmetry == Symmetry::General
            ? static_cast<std::size_t>(rect.rows) * static_cast<std::size_t>(rect.cols)
            : static_cast<std::size_t>(rect.rows) * static_cast<std::size_t>(rect.rows + 1) / 2;
    const std::size_t needed = entries * values_per_entry;
    numbers.reserve(needed);
    while (numbers.size() < needed) {
        if (!next_content(line)) {
            throw ParseError(source, line_no, "unexpected end of file; expected "
                                              + std::to_string(entries) + " values");
        }
        for (const std::string& tok : tokens_of(line)) {
            if (numbers.size() == needed) {
                throw ParseError(source, line_no, "unexpected data after the declared entries");
            }
            numbers.push_back(parse_double(tok, source, line_no));
        }
    }
    if (next_content(line)) {
        throw ParseError(source, line_no, "unexpected data after the declared entries");
    }

    std::size_t cursor = 0;
    const auto take = [&]() {
        if (header.field == Field::Complex) {
            const double re = numbers[cursor];
            const double im = numbers[cursor + 1];
            cursor += 2;
            return Complex{re, im};
        }
        return Complex{numbers[cursor++], 0.0};
    };
    if (header.symmetry == Symmetry::General) {
        for (long j = 0; j < rect.cols; ++j) {
            for (long i = 0; i < rect.rows; ++i) {
                rect.at(i, j) = take();
            }
        }
    } else {
        for (long j = 0; j < rect.cols; ++j) {
            for (long i = j; i < rect.rows; ++i) {
                const Complex value = take();
                check_hermitian_diagonal(i, j, value);
                rect.at(i, j) = value;
                mirror(i, j, value);
            }
        }
    }
    return rect;
}

ComplexMatrix to_square(const Rectangular& rect, const std::string& source) {
    if (rect.rows != rect.cols) {
        throw ParseError(source, 0, "matrix is not square ("
                                    + std::to_string(rect.rows) + " by "
                                    + std::to_string(rect.cols) + ")");
    }
    ComplexMatrix m(static_cast<std::size_t>(rect.rows));
    for (long i = 0; i < rect.rows; ++i) {
        for (long j = 0; j < rect.cols; ++j) {
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                rect.data[static_cast<std::size_t>(i * rect.cols + j)];
        }
    }
    validate_finite(m, source.c_str());
    return m;
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path, 0, "cannot open file");
    }
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open '" + path + "' for writing");
    }
    return out;
}

bool any_imaginary(const ComplexVector& values) {
    for (const Complex& v : values) {
        if (v.imag() != 0.0) {
            return true;
        }
    }
    return false;
}

void write_array(std::ostream& out, long rows, long cols, const std::vector<Complex>& row_major) {
    const bool complex_field = any_imaginary(row_major);
    out << "%%MatrixMarket matrix array " << (complex_field ? "complex" : "real")
        << " general\n";
    out << rows << " " << cols << "\n";
    for (long j = 0; j < cols; ++j) {
        for (long i = 0; i < rows; ++i) {
            const Complex v = row_major[static_cast<std::size_t>(i * cols + j)];
            out << format_value(v.real());
            if (complex_field) {
                out << " " << format_value(v.imag());
            }
            out << "\n";
        }
    }
    if (!out) {
        throw Error("write failed");
    }
}

} // namespace

ComplexMatrix read_matrix(std::istream& in, const std::string& source_name) {
    return to_square(parse_stream(in, source_name), source_name);
}

ComplexMatrix read_matrix(const std::string& path) {
    std::ifstream in = open_input(path);
    return read_matrix(in, path);
}

ComplexVector read_vector(std::istream& in, const std::string& source_name) {
    const Rectangular rect = parse_stream(in, source_name);
    if (rect.cols != 1 && rect.rows != 1) {
        throw ParseError(source_name, 0, "expected a vector (one row or one column)");
    }
    ComplexVector v(rect.data.begin(), rect.data.end());
    validate_finite(v, source_name.c_str());
    return v;
}

ComplexVector read_vector(const std::string& path) {
    std::ifstream in = open_input(path);
    return read_vector(in, path);
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
    const long n = static_cast<long>(m.order());
    write_array(out, n, n, m.values());
}

void write_matrix(const std::string& path, const ComplexMatrix& m) {
    std::ofstream out = open_output(path);
    write_matrix(out, m);
}

void write_vector(std::ostream& out, const ComplexVector& v) {
    write_array(out, static_cast<long>(v.size()), 1, v);
}

void write_vector(const std::string& path, const ComplexVector& v) {
    std::ofstream out = open_output(path);
    write_vector(out, v);
}

void write_vector(const std::string& path, const RealVector& v) {
    ComplexVector cv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        cv[i] = Complex{v[i], 0.0};
    }
    write_vector(path, cv);
}

} // namespace sassen
