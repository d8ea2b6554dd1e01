#include "sassen/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "sassen/errors.hpp"

namespace sassen {

namespace {

void check_sassenfeld_range(const RealVector& s) {
    for (double si : s) {
        if (si >= 1.0) {
            throw NotSassenfeld("Sassenfeld vector component reaches 1");
        }
        if (si < 0.0) {
            throw NotSassenfeld("Sassenfeld vector component is negative");
        }
    }
}

} // namespace

RealVector delta_vector(const ComplexMatrix& a, const ComplexMatrix& p, const RealVector& s) {
    require_same_order(a, p, "matrix and preconditioner");
    const std::size_t n = a.order();
    if (s.size() != n) {
        throw DimensionMismatch("Sassenfeld vector length does not match matrix order");
    }
    check_sassenfeld_range(s);

    RealVector delta(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double dii = std::abs(a(i, i));
        if (dii == 0.0) {
            throw ZeroDiagonal("matrix has a zero diagonal entry");
        }
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += (1.0 - s[j]) * std::abs(a(i, j) - p(i, j));
        }
        delta[i] = acc / dii;
    }
    return delta;
}

double alpha_threshold(const ComplexMatrix& a, const ComplexMatrix& p, const RealVector& s,
                       const RealVector& u, const RealVector& delta) {
    require_same_order(a, p, "matrix and preconditioner");
    const std::size_t n = a.order();
    if (s.size() != n || u.size() != n || delta.size() != n) {
        throw DimensionMismatch("vector length does not match matrix order");
    }

    double alpha = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double numerator = u[i] * (std::abs(p(i, i)) - std::abs(a(i, i)));
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
                numerator += (std::abs(a(i, j)) - std::abs(p(i, j))) * u[j];
            }
        }
        if (delta[i] > 0.0) {
            alpha = std::max(alpha, numerator / (delta[i] * std::abs(a(i, i))));
        } else if (numerator > 0.0) {
            // A zero delta forces the row of A to equal the row of P, which
            // zeroes the numerator exactly.
            throw InternalInconsistency("positive dominance deficit on a zero-delta row");
        }
    }
    return std::max(alpha, 0.0);
}

EquivalenceCertificate gdd_certificate(const ComplexMatrix& a, const ComplexMatrix& p,
                                       const SassenfeldReport& report,
                                       const HCertificate& cert_of_p, const GddOptions& opts) {
    if (cert_of_p.verdict != HVerdict::IsH) {
        throw PreconditionerNotH("preconditioner lacks an affirmative H-certificate");
    }
    require_same_order(a, p, "matrix and preconditioner");
    const std::size_t n = a.order();
    if (report.s.size() != n) {
        throw DimensionMismatch("report vector length does not match matrix order");
    }
    if (cert_of_p.witness.size() != n) {
        throw DimensionMismatch("certificate witness length does not match matrix order");
    }
    if (classify_contraction(report.mu, opts.contraction_margin) != Contraction::Contractive) {
        throw NotSassenfeld("index is not strictly below 1");
    }

    EquivalenceCertificate cert;
    cert.delta = delta_vector(a, p, report.s);
    for (std::size_t i = 0; i < n; ++i) {
        if (cert.delta[i] > 0.0) {
            cert.active.push_back(i);
        }
    }
    cert.alpha = alpha_threshold(a, p, report.s, cert_of_p.witness, cert.delta);

    cert.t.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        cert.t[i] = cert.alpha * report.s[i] + cert_of_p.witness[i];
        if (!(cert.t[i] > 0.0)) {
            throw InternalInconsistency("constructed witness is not strictly positive");
        }
    }

    cert.margins.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double lhs = std::abs(a(i, i)) * cert.t[i];
        double off = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
                off += std::abs(a(i, j)) * cert.t[j];
            }
        }
        cert.margins[i] = lhs - off;
        const double scale = lhs + off;
        if (cert.margins[i] <= -opts.margin_rel_tol * scale) {
            throw CertificateDegenerate("row dominance fails beyond round-off");
        }
        if (cert.margins[i] < opts.margin_rel_tol * scale) {
            cert.degenerate = true;
        }
    }
    return cert;
}

SassenfeldReport verify_h_direction(const ComplexMatrix& a, const HCertificate& cert) {
    if (cert.verdict != HVerdict::IsH) {
        throw PreconditionerNotH("matrix lacks an affirmative H-certificate");
    }
    validate_finite(a, "matrix");
    SassenfeldReport rep;
    rep.s = RealVector(a.order(), 0.0);
    rep.mu = 0.0;
    rep.method = IndexMethod::Direct;
    rep.converged = true;
    rep.preconditioner = "self";
    return rep;
}

} // namespace sassen
