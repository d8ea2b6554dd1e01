#ifndef SASSEN_ERRORS_HPP
#define SASSEN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sassen {

/// Base class of all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A dense factorization met a pivot below the singularity threshold.
class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// Operands have incompatible orders or lengths.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// An input entry is NaN or infinite.
class NonFiniteEntry : public Error {
public:
    using Error::Error;
};

/// The preconditioner carries no affirmative H-certificate.
class PreconditionerNotH : public Error {
public:
    using Error::Error;
};

/// A start vector does not dominate the right-hand side as required
/// for certified iterative bounds.
class InvalidStartVector : public Error {
public:
    using Error::Error;
};

/// A diagonal entry required to be nonzero is zero.
class ZeroDiagonal : public Error {
public:
    using Error::Error;
};

/// The Sassenfeld condition (all components below one) does not hold.
class NotSassenfeld : public Error {
public:
    using Error::Error;
};

/// A constructed dominance certificate violates strictness beyond tolerance.
class CertificateDegenerate : public Error {
public:
    using Error::Error;
};

/// The requested bound is undefined for the given index value.
class BoundUnavailable : public Error {
public:
    using Error::Error;
};

/// A certified solve was requested but the index is not strictly below 1.
class NotContractive : public Error {
public:
    using Error::Error;
};

/// Computed values contradict an invariant guaranteed by a certificate.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

/// Matrix Market input could not be parsed; message carries file and line.
class ParseError : public Error {
public:
    ParseError(const std::string& source, long line, const std::string& what)
        : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

    long line() const noexcept { return line_; }

private:
    long line_;
};

} // namespace sassen

#endif
