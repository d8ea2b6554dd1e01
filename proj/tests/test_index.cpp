#include <cmath>
#include <random>

#include "doctest.h"
#include "sassen/equivalence.hpp"
#include "sassen/index.hpp"
#include "sassen/splitting.hpp"
#include "support.hpp"

using namespace sassen;
namespace ts = testsupport;

namespace {

ComplexMatrix gauss_seidel_part(const ComplexMatrix& a) {
    const StructuralSplit parts = split(a);
    return add(parts.diagonal, parts.lower);
}

ComplexMatrix jacobi_part(const ComplexMatrix& a) { return split(a).diagonal; }

} // namespace

TEST_CASE("contraction classification") {
    CHECK(classify_contraction(0.0) == Contraction::Contractive);
    CHECK(classify_contraction(0.5) == Contraction::Contractive);
    CHECK(classify_contraction(1.0 - 1e-9) == Contraction::Contractive);
    CHECK(classify_contraction(1.0) == Contraction::Marginal);
    CHECK(classify_contraction(1.0 - 5e-11) == Contraction::Marginal);
    CHECK(classify_contraction(1.0 + 5e-11) == Contraction::Marginal);
    CHECK(classify_contraction(1.0 + 1e-9) == Contraction::NotContractive);
    CHECK(classify_contraction(2.0) == Contraction::NotContractive);
}

TEST_CASE("direct index for lower-triangular preconditioners is exact") {
    SUBCASE("order 2") {
        const ComplexMatrix a = fdm_matrix(2);
        const ComplexMatrix p = gauss_seidel_part(a);
        const SassenfeldReport rep = sassenfeld_vector(a, p, certify_h(p));
        REQUIRE(rep.s.size() == 2);
        CHECK(rep.s[0] == 0.5);
        CHECK(rep.s[1] == 0.25);
        CHECK(rep.mu == 0.5);
        CHECK(rep.method == IndexMethod::Direct);
        CHECK(rep.converged);
    }

    SUBCASE("order 3") {
        const ComplexMatrix a = fdm_matrix(3);
        const ComplexMatrix p = gauss_seidel_part(a);
        const SassenfeldReport rep = sassenfeld_vector(a, p, certify_h(p));
        CHECK(rep.s[0] == 0.5);
        CHECK(rep.s[1] == 0.75);
        CHECK(rep.s[2] == 0.375);
        CHECK(rep.mu == 0.75);
    }

    SUBCASE("closed form across orders") {
        // Forward substitution doubles the gap to 1 each row:
        // s_i = 1 - 2^{-i} up to the second-to-last row, then halves.
        for (std::size_t m = 2; m <= 24; ++m) {
            const ComplexMatrix a = fdm_matrix(m);
            const ComplexMatrix p = gauss_seidel_part(a);
            const SassenfeldReport rep = sassenfeld_vector(a, p, certify_h(p));
            for (std::size_t i = 0; i + 1 < m; ++i) {
                CHECK(rep.s[i] == 1.0 - std::ldexp(1.0, -static_cast<int>(i) - 1));
            }
            const double mu = 1.0 - std::ldexp(1.0, 1 - static_cast<int>(m));
            CHECK(rep.s[m - 1] == mu / 2.0);
            CHECK(rep.mu == mu);
        }
    }
}

TEST_CASE("diagonal preconditioner of the second-difference matrix sits at 1") {
    for (std::size_t m = 3; m <= 40; ++m) {
        const ComplexMatrix a = fdm_matrix(m);
        const ComplexMatrix p = scale(to_complex(RealMatrix::identity(m)), 2.0);
        const double mu = sassenfeld_index(a, p, certify_h(p));
        CHECK(mu == 1.0);
        CHECK(classify_contraction(mu) == Contraction::Marginal);
    }
}

TEST_CASE("index requires an affirmative certificate and matching orders") {
    const ComplexMatrix a = fdm_matrix(3);
    HCertificate bogus;
    bogus.verdict = HVerdict::NotH;
    CHECK_THROWS_AS(sassenfeld_vector(a, gauss_seidel_part(a), bogus), PreconditionerNotH);

    const ComplexMatrix p2 = gauss_seidel_part(fdm_matrix(2));
    CHECK_THROWS_AS(sassenfeld_vector(a, p2, certify_h(p2)), DimensionMismatch);
}

TEST_CASE("index is invariant under global and row scaling") {
    std::mt19937 rng(42);
    for (int rep = 0; rep < 25; ++rep) {
        const std::size_t n = 2 + rep % 9;
        const ComplexMatrix a = ts::random_sdd_matrix(rng, n);
        const ComplexMatrix p = gauss_seidel_part(a);
        const double mu = sassenfeld_index(a, p, certify_h(p));

        const Complex c{3.0, 4.0};
        const ComplexMatrix ca = scale(a, c);
        const ComplexMatrix cp = scale(p, c);
        const double mu_c = sassenfeld_index(ca, cp, certify_h(cp));
        CHECK(mu_c == doctest::Approx(mu).epsilon(1e-12));

        ComplexMatrix da(n), dp(n);
        std::uniform_real_distribution<double> row_scale(0.5, 4.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double d = row_scale(rng);
            for (std::size_t j = 0; j < n; ++j) {
                da(i, j) = d * a(i, j);
                dp(i, j) = d * p(i, j);
            }
        }
        const double mu_d = sassenfeld_index(da, dp, certify_h(dp));
        CHECK(mu_d == doctest::Approx(mu).epsilon(1e-12));
    }
}

TEST_CASE("default start vector") {
    SUBCASE("diagonal preconditioner ends at ones") {
        const ComplexMatrix a = fdm_matrix(3);
        const ComplexMatrix p = scale(to_complex(RealMatrix::identity(3)), 2.0);
        const RealVector s0 = default_start_vector(a, p, certify_h(p));
        REQUIRE(s0.size() == 3);
        CHECK(s0[0] == 1.0);
        CHECK(s0[1] == 1.0);
        CHECK(s0[2] == 1.0);
    }

    SUBCASE("always admissible for the iteration") {
        std::mt19937 rng(4242);
        for (int rep = 0; rep < 25; ++rep) {
            const std::size_t n = 2 + rep % 9;
            const ComplexMatrix a = ts::random_sdd_matrix(rng, n);
            for (const ComplexMatrix& p : {gauss_seidel_part(a), jacobi_part(a)}) {
                const HCertificate cert = certify_h(p);
                const RealVector s0 = default_start_vector(a, p, cert);
                CHECK_NOTHROW(iterative_index_estimate(a, p, cert, s0));
            }
        }
    }
}

TEST_CASE("iterative estimate on the second-difference matrix") {
    SUBCASE("diagonal preconditioner settles in one step") {
        const ComplexMatrix a = fdm_matrix(3);
        const ComplexMatrix p = scale(to_complex(RealMatrix::identity(3)), 2.0);
        const SassenfeldReport rep = iterative_index_estimate(a, p, certify_h(p), ones(3));
        CHECK(rep.converged);
        CHECK(rep.iterations == 1);
        REQUIRE(rep.trace.size() == 1);
        CHECK(rep.trace[0] == 1.0);
        CHECK(rep.s[0] == 0.5);
        CHECK(rep.s[1] == 1.0);
        CHECK(rep.s[2] == 0.5);
        CHECK(rep.mu == 1.0);
        CHECK(rep.method == IndexMethod::Iterative);
    }

    SUBCASE("starting at the fixed point is detected without stepping") {
        const ComplexMatrix a = fdm_matrix(3);
        const ComplexMatrix p = gauss_seidel_part(a);
        const HCertificate cert = certify_h(p);
        const SassenfeldReport direct = sassenfeld_vector(a, p, cert);
        const SassenfeldReport rep = iterative_index_estimate(a, p, cert, direct.s);
        CHECK(rep.converged);
        CHECK(rep.iterations == 0);
        REQUIRE(rep.trace.size() == 1);
        CHECK(rep.trace[0] == direct.mu);
        CHECK(rep.mu == direct.mu);
    }

    SUBCASE("order 10 trace from the all-ones start") {
        const ComplexMatrix a = fdm_matrix(10);
        const ComplexMatrix p = gauss_seidel_part(a);
        const HCertificate cert = certify_h(p);
        const SassenfeldReport rep = iterative_index_estimate(a, p, cert, ones(10));
        const double mu = 1.0 - std::ldexp(1.0, -9);
        CHECK(rep.converged);
        CHECK(rep.iterations == 10);
        REQUIRE(rep.trace.size() == 10);
        for (std::size_t k = 0; k < 8; ++k) {
            CHECK(rep.trace[k] == 1.0);
        }
        CHECK(rep.trace[8] == mu);
        CHECK(rep.trace[9] == mu);
        CHECK(rep.mu == mu);
    }
}

TEST_CASE("iterates decrease entrywise and every trace norm bounds the index") {
    const ComplexMatrix a = fdm_matrix(10);
    const ComplexMatrix p = gauss_seidel_part(a);
    const HCertificate cert = certify_h(p);
    const double mu = sassenfeld_index(a, p, cert);

    IterationOptions opts;
    RealVector prev = ones(10);
    for (std::size_t cap = 1; cap <= 12; ++cap) {
        opts.max_iter = cap;
        const SassenfeldReport rep = iterative_index_estimate(a, p, cert, ones(10), opts);
        for (std::size_t i = 0; i < 10; ++i) {
            CHECK(rep.s[i] <= prev[i] + 1e-15);
        }
        CHECK(inf_norm(rep.s) >= mu - 1e-12);
        prev = rep.s;
    }

    const SassenfeldReport full = iterative_index_estimate(a, p, cert, ones(10));
    for (std::size_t k = 1; k < full.trace.size(); ++k) {
        CHECK(full.trace[k] <= full.trace[k - 1] + 1e-15);
        CHECK(full.trace[k] >= mu - 1e-12);
    }
    CHECK(full.trace.back() == full.mu);
}

TEST_CASE("invalid start vectors are refused") {
    const ComplexMatrix a = fdm_matrix(3);
    const ComplexMatrix p = gauss_seidel_part(a);
    const HCertificate cert = certify_h(p);

    CHECK_THROWS_AS(iterative_index_estimate(a, p, cert, RealVector(3, 0.0)),
                    InvalidStartVector);

    SassenfeldReport direct = sassenfeld_vector(a, p, cert);
    RealVector low = direct.s;
    for (double& v : low) {
        v *= 0.5;
    }
    CHECK_THROWS_AS(iterative_index_estimate(a, p, cert, low), InvalidStartVector);
    CHECK_THROWS_AS(iterative_index_estimate(a, p, cert, ones(2)), DimensionMismatch);
}

TEST_CASE("iteration reports a best-so-far bound when capped") {
    // A dense preconditioner makes the fixed-point iteration genuinely
    // gradual, so a tight cap must end unconverged yet still certified.
    const ComplexMatrix a = fdm_matrix(6);
    ComplexMatrix p = gauss_seidel_part(a);
    p(0, 5) = Complex{0.25, 0.0}; // break the triangular shortcut
    const HCertificate cert = certify_h(p);

    IterationOptions tight;
    tight.max_iter = 2;
    tight.tol = 0.0;
    const SassenfeldReport capped =
        iterative_index_estimate(a, p, cert, default_start_vector(a, p, cert), tight);
    CHECK_FALSE(capped.converged);
    CHECK(capped.iterations == 2);

    const double mu = sassenfeld_index(a, p, cert);
    CHECK(capped.mu >= mu - 1e-12);

    const SassenfeldReport full =
        iterative_index_estimate(a, p, cert, default_start_vector(a, p, cert));
    CHECK(full.converged);
    CHECK(full.mu == doctest::Approx(mu).epsilon(1e-10));
}

TEST_CASE("bound from a test vector") {
    const ComplexMatrix a = fdm_matrix(10);
    const ComplexMatrix p = gauss_seidel_part(a);
    const HCertificate cert = certify_h(p);
    const SassenfeldReport direct = sassenfeld_vector(a, p, cert);

    const auto at_solution = bound_from_test_vector(a, p, cert, direct.s);
    REQUIRE(at_solution.has_value());
    CHECK(*at_solution == direct.mu);

    const auto at_ones = bound_from_test_vector(a, p, cert, ones(10));
    REQUIRE(at_ones.has_value());
    CHECK(*at_ones == 1.0);

    CHECK_FALSE(bound_from_test_vector(a, p, cert, RealVector(10, 0.0)).has_value());
    CHECK_THROWS_AS(bound_from_test_vector(a, p, cert, ones(3)), DimensionMismatch);
}

TEST_CASE("norm bound against the dense iteration matrix") {
    SUBCASE("self preconditioning gives zero") {
        const ComplexMatrix a = fdm_matrix(4);
        const NormBoundReport rep = iteration_matrix_norm_bound(a, a, certify_h(a));
        CHECK(rep.bound == 0.0);
        CHECK(rep.exact_available);
        CHECK(rep.exact_norm <= 1e-14);
    }

    SUBCASE("diagonal preconditioner attains the bound") {
        const ComplexMatrix a = fdm_matrix(3);
        const ComplexMatrix p = scale(to_complex(RealMatrix::identity(3)), 2.0);
        const NormBoundReport rep = iteration_matrix_norm_bound(a, p, certify_h(p));
        CHECK(rep.bound == 1.0);
        CHECK(rep.exact_available);
        CHECK(rep.exact_norm == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("bound dominates the exact norm and the dense oracle agrees") {
        std::mt19937 rng(77);
        for (int rep = 0; rep < 20; ++rep) {
            const std::size_t n = 2 + rep % 9;
            const ComplexMatrix a = ts::random_sdd_matrix(rng, n);
            const ComplexMatrix p = gauss_seidel_part(a);
            const NormBoundReport nb = iteration_matrix_norm_bound(a, p, certify_h(p));
            REQUIRE(nb.exact_available);
            CHECK(nb.exact_norm <= nb.bound + 1e-10);
            CHECK(nb.exact_norm ==
                  doctest::Approx(ts::iteration_matrix_norm_oracle(a, p)).epsilon(1e-9));
        }
    }

    SUBCASE("dense check can be disabled") {
        const ComplexMatrix a = fdm_matrix(5);
        NormBoundOptions opts;
        opts.dense_check_threshold = 0;
        const NormBoundReport rep =
            iteration_matrix_norm_bound(a, gauss_seidel_part(a), certify_h(gauss_seidel_part(a)), opts);
        CHECK_FALSE(rep.exact_available);
        CHECK(rep.bound > 0.0);
    }
}

TEST_CASE("shifted invertibility") {
    const ComplexMatrix a = fdm_matrix(10);
    const ComplexMatrix p = gauss_seidel_part(a);
    const HCertificate cert = certify_h(p);
    const double mu = 1.0 - std::ldexp(1.0, -9);

    const InvertibilityCertificate at_zero = shifted_invertibility(a, p, cert, Complex{});
    CHECK(at_zero.mu == mu);
    CHECK(at_zero.certified); // |0 + 1| = 1 > mu

    const InvertibilityCertificate at_minus_one =
        shifted_invertibility(a, p, cert, Complex{-1.0, 0.0});
    CHECK_FALSE(at_minus_one.certified);

    const InvertibilityCertificate inside =
        shifted_invertibility(a, p, cert, Complex{-1.0, 0.5});
    CHECK_FALSE(inside.certified); // |tau + 1| = 0.5 < mu

    // Certified shifts really are invertible: the factorization succeeds.
    std::mt19937 rng(8);
    for (int rep = 0; rep < 10; ++rep) {
        const double rho = mu + 0.01 + rep * 0.2;
        const Complex tau = Complex{-1.0, 0.0} + rho * ts::random_phase(rng);
        const InvertibilityCertificate c = shifted_invertibility(a, p, cert, tau);
        REQUIRE(c.certified);
        CHECK_NOTHROW(ComplexLu(add(a, scale(p, tau))));
    }
}

TEST_CASE("condition bound") {
    const ComplexMatrix a = fdm_matrix(10);
    const ComplexMatrix p = gauss_seidel_part(a);
    CHECK(condition_bound(a, p, certify_h(p)) == 1023.0);
    CHECK(condition_bound(a, a, certify_h(a)) == 1.0);

    const ComplexMatrix half = scale(to_complex(RealMatrix::identity(3)), 2.0);
    CHECK_THROWS_AS(condition_bound(fdm_matrix(3), half, certify_h(half)), BoundUnavailable);

    // The bound dominates the dense condition number.
    for (std::size_t m = 2; m <= 15; ++m) {
        const ComplexMatrix am = fdm_matrix(m);
        const ComplexMatrix pm = gauss_seidel_part(am);
        const double bound = condition_bound(am, pm, certify_h(pm));
        CHECK(ts::condition_inf_oracle(am, pm) <= bound + 1e-8);
    }
}
