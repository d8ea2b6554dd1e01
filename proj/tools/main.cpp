// sassen: certify H-matrix structure, compute Sassenfeld indices, build
// dominance certificates, and run certified splitting solves on Matrix
// Market inputs.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sassen/equivalence.hpp"
#include "sassen/errors.hpp"
#include "sassen/hmatrix.hpp"
#include "sassen/index.hpp"
#include "sassen/matrix.hpp"
#include "sassen/matrix_market.hpp"
#include "sassen/splitting.hpp"
#include "sassen/version.hpp"

namespace {

using nlohmann::json;
using namespace sassen;

constexpr int kExitCertified = 0;
constexpr int kExitNegative = 1;
constexpr int kExitMarginal = 2;
constexpr int kExitError = 3;
constexpr int kExitUsage = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char* verdict_name(HVerdict v) {
    switch (v) {
    case HVerdict::IsH:
        return "IsH";
    case HVerdict::NotH:
        return "NotH";
    case HVerdict::Inconclusive:
        break;
    }
    return "Inconclusive";
}

const char* contraction_name(Contraction c) {
    switch (c) {
    case Contraction::Contractive:
        return "contractive";
    case Contraction::Marginal:
        return "marginal";
    case Contraction::NotContractive:
        break;
    }
    return "not-contractive";
}

json complex_vector_json(const ComplexVector& v) {
    json arr = json::array();
    for (const Complex& z : v) {
        arr.push_back(json::array({z.real(), z.imag()}));
    }
    return arr;
}

json certificate_json(const HCertificate& cert) {
    json j;
    j["verdict"] = verdict_name(cert.verdict);
    if (!cert.reason.empty()) {
        j["reason"] = cert.reason;
    }
    if (cert.verdict == HVerdict::IsH) {
        j["witness"] = cert.witness;
    }
    if (cert.jacobi_radius_available) {
        j["jacobi_radius"] = {{"value", cert.jacobi_radius.value},
                              {"upper_bound", cert.jacobi_radius.upper_bound},
                              {"iterations", cert.jacobi_radius.iterations},
                              {"converged", cert.jacobi_radius.converged},
                              {"near_one", cert.jacobi_radius.near_one}};
    }
    return j;
}

json sassenfeld_json(const SassenfeldReport& rep) {
    json j;
    j["s"] = rep.s;
    j["mu"] = rep.mu;
    j["method"] = rep.method == IndexMethod::Direct ? "direct" : "iterative";
    if (rep.method == IndexMethod::Iterative) {
        j["trace"] = rep.trace;
        j["iterations"] = rep.iterations;
    }
    j["converged"] = rep.converged;
    if (!rep.preconditioner.empty()) {
        j["preconditioner"] = rep.preconditioner;
    }
    return j;
}

void write_report(const std::string& path, const json& report) {
    if (path.empty()) {
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open '" + path + "' for writing");
    }
    out << report.dump(2) << "\n";
    if (!out) {
        throw Error("failed writing '" + path + "'");
    }
}

json base_report(const char* command, const std::string& matrix_path) {
    json report;
    report["command"] = command;
    report["tool"] = {{"name", "sassen"}, {"version", kVersion}};
    if (!matrix_path.empty()) {
        report["input"] = {{"path", matrix_path}};
    }
    return report;
}

PreconditionerSpec build_preconditioner(const ComplexMatrix& a, const std::string& text,
                                        json& report) {
    json pj;
    std::optional<PreconditionerSpec> spec;
    if (text == "jacobi") {
        pj["kind"] = "jacobi";
        spec = make_preconditioner(a, PreconditionerKind::Jacobi);
    } else if (text == "gauss-seidel") {
        pj["kind"] = "gauss-seidel";
        spec = make_preconditioner(a, PreconditionerKind::GaussSeidel);
    } else if (text.rfind("file:", 0) == 0) {
        const std::string path = text.substr(5);
        pj["kind"] = "custom";
        pj["path"] = path;
        spec = make_preconditioner(a, read_matrix(path));
    } else {
        throw UsageError("unknown preconditioner '" + text
                         + "' (expected jacobi, gauss-seidel, or file:<path>)");
    }
    pj["h_certificate"] = certificate_json(spec->certificate);
    report["preconditioner"] = pj;
    return std::move(*spec);
}

RealVector resolve_start_vector(const ComplexMatrix& a, const PreconditionerSpec& spec,
                                const std::string& text) {
    if (text == "auto") {
        return default_start_vector(a, spec.p, spec.certificate);
    }
    if (text == "ones") {
        return ones(a.order());
    }
    const ComplexVector raw = read_vector(text);
    RealVector s0(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].imag() != 0.0) {
            throw Error("start vector must be real-valued: " + text);
        }
        s0[i] = raw[i].real();
    }
    return s0;
}

void print_vector_head(std::ostream& out, const RealVector& v) {
    const std::size_t shown = std::min<std::size_t>(v.size(), 12);
    out << "(";
    for (std::size_t i = 0; i < shown; ++i) {
        out << (i ? ", " : "") << v[i];
    }
    if (shown < v.size()) {
        out << ", ... " << v.size() - shown << " more";
    }
    out << ")";
}

int run_check_h(const std::string& matrix_path, const std::string& witness_path,
                const std::string& json_path, bool quiet) {
    const ComplexMatrix a = read_matrix(matrix_path);
    const HCertificate cert = certify_h(a);

    int code = kExitMarginal;
    if (cert.verdict == HVerdict::IsH) {
        code = kExitCertified;
    } else if (cert.verdict == HVerdict::NotH) {
        code = kExitNegative;
    }

    json report = base_report("check-h", matrix_path);
    report["h_certificate"] = certificate_json(cert);
    report["exit_code"] = code;
    write_report(json_path, report);

    if (cert.verdict == HVerdict::IsH && !witness_path.empty()) {
        write_vector(witness_path, cert.witness);
    }

    if (!quiet) {
        std::cout << "verdict: " << verdict_name(cert.verdict);
        if (!cert.reason.empty()) {
            std::cout << " (" << cert.reason << ")";
        }
        std::cout << "\n";
        if (cert.verdict == HVerdict::IsH) {
            std::cout << "witness: ";
            print_vector_head(std::cout, cert.witness);
            std::cout << "\n";
            if (!witness_path.empty()) {
                std::cout << "witness written to " << witness_path << "\n";
            }
        }
        if (cert.jacobi_radius_available) {
            std::cout << "jacobi radius estimate: " << cert.jacobi_radius.value
                      << (cert.jacobi_radius.converged ? " (converged)" : " (unresolved)")
                      << "\n";
        }
    }
    return code;
}

struct IndexOutcome {
    SassenfeldReport rep;
    Contraction contraction = Contraction::NotContractive;
    std::optional<double> cond_bound;
    int code = kExitError;
};

IndexOutcome analyze_index(const ComplexMatrix& a, const PreconditionerSpec& spec,
                           const std::string& precond_text, bool iterative,
                           const std::string& s0_text, const IterationOptions& iter_opts,
                           json& report) {
    IndexOutcome out;
    if (iterative) {
        const RealVector s0 = resolve_start_vector(a, spec, s0_text);
        out.rep = iterative_index_estimate(a, spec.p, spec.certificate, s0, iter_opts);
        report["tolerances"] = {{"tol", iter_opts.tol},
                                {"max_iter", iter_opts.max_iter},
                                {"start", s0_text}};
    } else {
        out.rep = sassenfeld_vector(a, spec.p, spec.certificate);
    }
    out.rep.preconditioner = precond_text;
    out.contraction = classify_contraction(out.rep.mu);

    if (out.contraction == Contraction::Contractive) {
        // Valid even for an unconverged estimate: mu only overestimates.
        out.cond_bound = (1.0 + out.rep.mu) / (1.0 - out.rep.mu);
        out.code = kExitCertified;
    } else if (!out.rep.converged || out.contraction == Contraction::Marginal) {
        out.code = kExitMarginal;
    } else {
        out.code = kExitNegative;
    }

    report["sassenfeld"] = sassenfeld_json(out.rep);
    report["contraction"] = contraction_name(out.contraction);
    if (out.cond_bound) {
        report["condition_bound"] = *out.cond_bound;
    }
    return out;
}

void print_index_outcome(const IndexOutcome& out) {
    std::cout << "mu = " << out.rep.mu << " (" << contraction_name(out.contraction) << ")\n";
    std::cout << "s = ";
    print_vector_head(std::cout, out.rep.s);
    std::cout << "\n";
    if (out.rep.method == IndexMethod::Iterative) {
        std::cout << "iterative: " << out.rep.iterations << " iterations, "
                  << (out.rep.converged ? "converged" : "not converged (bound only)") << "\n";
    }
    if (out.cond_bound) {
        std::cout << "condition bound: " << *out.cond_bound << "\n";
    }
}

int run_index(const std::string& matrix_path, const std::string& precond_text, bool iterative,
              const std::string& s0_text, const IterationOptions& iter_opts,
              const std::string& json_path, bool quiet) {
    const ComplexMatrix a = read_matrix(matrix_path);
    json report = base_report("index", matrix_path);
    const PreconditionerSpec spec = build_preconditioner(a, precond_text, report);
    const IndexOutcome out =
        analyze_index(a, spec, precond_text, iterative, s0_text, iter_opts, report);
    report["exit_code"] = out.code;
    write_report(json_path, report);
    if (!quiet) {
        print_index_outcome(out);
    }
    return out.code;
}

int run_certify(const std::string& matrix_path, const std::string& precond_text,
                const std::string& json_path, bool quiet) {
    const ComplexMatrix a = read_matrix(matrix_path);
    json report = base_report("certify", matrix_path);
    const PreconditionerSpec spec = build_preconditioner(a, precond_text, report);
    IndexOutcome out =
        analyze_index(a, spec, precond_text, false, "", IterationOptions{}, report);

    const EquivalenceCertificate cert = gdd_certificate(a, spec.p, out.rep, spec.certificate);
    double min_margin = cert.margins.empty() ? 0.0 : cert.margins.front();
    for (double m : cert.margins) {
        min_margin = std::min(min_margin, m);
    }
    report["equivalence"] = {{"alpha", cert.alpha},
                             {"delta", cert.delta},
                             {"active_rows", cert.active},
                             {"t", cert.t},
                             {"margins", cert.margins},
                             {"min_margin", min_margin},
                             {"degenerate", cert.degenerate}};

    const int code = cert.degenerate ? kExitMarginal : kExitCertified;
    report["exit_code"] = code;
    write_report(json_path, report);

    if (!quiet) {
        print_index_outcome(out);
        std::cout << "alpha = " << cert.alpha << "\n";
        std::cout << "witness t = ";
        print_vector_head(std::cout, cert.t);
        std::cout << "\n";
        std::cout << "min margin = " << min_margin
                  << (cert.degenerate ? " (degenerate)" : "") << "\n";
    }
    return code;
}

int run_solve(const std::string& matrix_path, const std::string& rhs_path,
              const std::string& precond_text, const std::string& x0_path,
              const SolveOptions& solve_opts, const std::string& out_path,
              const std::string& json_path, bool quiet) {
    const ComplexMatrix a = read_matrix(matrix_path);
    const ComplexVector b = read_vector(rhs_path);
    ComplexVector x0(a.order(), Complex{});
    if (!x0_path.empty()) {
        x0 = read_vector(x0_path);
    }

    json report = base_report("solve", matrix_path);
    report["rhs"] = {{"path", rhs_path}};
    const PreconditionerSpec spec = build_preconditioner(a, precond_text, report);
    const SolveTrace trace = solve(a, b, spec, x0, solve_opts);

    const int code = trace.converged ? kExitCertified : kExitMarginal;
    report["tolerances"] = {{"max_iter", solve_opts.max_iter},
                            {"residual_abs_tol", solve_opts.residual_abs_tol},
                            {"residual_rel_tol", solve_opts.residual_rel_tol},
                            {"best_effort", solve_opts.best_effort}};
    report["solver"] = {{"iterations", trace.iterations},
                        {"converged", trace.converged},
                        {"certified", trace.certified},
                        {"mu", trace.mu},
                        {"contraction", contraction_name(trace.contraction)},
                        {"residuals", trace.residuals},
                        {"apriori_bounds", trace.apriori_bounds},
                        {"x", complex_vector_json(trace.x)}};
    report["exit_code"] = code;
    write_report(json_path, report);

    if (!out_path.empty()) {
        write_vector(out_path, trace.x);
    }
    if (!quiet) {
        std::cout << "mu = " << trace.mu << " (" << contraction_name(trace.contraction)
                  << ")\n";
        std::cout << (trace.converged ? "converged" : "not converged") << " after "
                  << trace.iterations << " iterations, residual "
                  << trace.residuals.back() << "\n";
        if (!out_path.empty()) {
            std::cout << "solution written to " << out_path << "\n";
        }
    }
    return code;
}

int run_gen_fdm(std::size_t m, std::string out_path, const std::string& json_path) {
    if (out_path.empty()) {
        out_path = "fdm_" + std::to_string(m) + ".mtx";
    }
    write_matrix(out_path, fdm_matrix(m));

    json report = base_report("gen", "");
    report["generator"] = {{"name", "fdm"}, {"order", m}};
    report["output"] = out_path;
    report["exit_code"] = kExitCertified;
    write_report(json_path, report);

    // The bare path composes in shell substitutions.
    std::cout << out_path << "\n";
    return kExitCertified;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"H-matrix certification and Sassenfeld index toolkit"};
    app.require_subcommand(1);

    std::string json_path;
    bool quiet = false;
    app.add_option("--json", json_path, "write a JSON report to this path");
    app.add_flag("--quiet", quiet, "suppress the human-readable summary");

    std::string check_matrix;
    std::string check_witness;
    CLI::App* check = app.add_subcommand("check-h", "certify H-matrix membership");
    check->fallthrough();
    check->add_option("matrix", check_matrix, "Matrix Market file")->required();
    check->add_option("--witness", check_witness, "write the witness vector to this path");

    std::string index_matrix;
    std::string index_precond;
    bool index_iterative = false;
    std::string index_s0 = "auto";
    IterationOptions iter_opts;
    CLI::App* index = app.add_subcommand("index", "Sassenfeld vector and index");
    index->fallthrough();
    index->add_option("matrix", index_matrix, "Matrix Market file")->required();
    index->add_option("--precond", index_precond, "jacobi, gauss-seidel, or file:<path>")
        ->required();
    index->add_flag("--iterative", index_iterative, "estimate by monotone iteration");
    index->add_option("--s0", index_s0, "start vector: auto, ones, or a vector file path");
    index->add_option("--tol", iter_opts.tol, "iteration increment tolerance");
    index->add_option("--max-iter", iter_opts.max_iter, "iteration cap (0 = 100 * order)");

    std::string certify_matrix;
    std::string certify_precond;
    CLI::App* certify = app.add_subcommand(
        "certify", "constructive diagonal dominance certificate through a preconditioner");
    certify->fallthrough();
    certify->add_option("matrix", certify_matrix, "Matrix Market file")->required();
    certify->add_option("--precond", certify_precond, "jacobi, gauss-seidel, or file:<path>")
        ->required();

    std::string solve_matrix;
    std::string solve_rhs;
    std::string solve_precond;
    std::string solve_x0;
    std::string solve_out;
    SolveOptions solve_opts;
    CLI::App* solve_cmd = app.add_subcommand("solve", "preconditioned splitting iteration");
    solve_cmd->fallthrough();
    solve_cmd->add_option("matrix", solve_matrix, "Matrix Market file")->required();
    solve_cmd->add_option("rhs", solve_rhs, "right-hand side vector file")->required();
    solve_cmd->add_option("--precond", solve_precond, "jacobi, gauss-seidel, or file:<path>")
        ->required();
    solve_cmd->add_option("--x0", solve_x0, "initial iterate vector file (default zero)");
    solve_cmd->add_option("--max-iter", solve_opts.max_iter, "iteration cap (0 = 1000 * order)");
    solve_cmd->add_option("--rel-tol", solve_opts.residual_rel_tol,
                          "relative residual stopping tolerance");
    solve_cmd->add_option("--abs-tol", solve_opts.residual_abs_tol,
                          "absolute residual stopping tolerance");
    solve_cmd->add_flag("--best-effort", solve_opts.best_effort,
                        "iterate even when the index is not below 1 (no bounds)");
    solve_cmd->add_option("-o,--out", solve_out, "write the final iterate to this path");

    std::size_t gen_m = 0;
    std::string gen_out;
    CLI::App* gen = app.add_subcommand("gen", "matrix generators");
    gen->fallthrough();
    gen->require_subcommand(1);
    CLI::App* gen_fdm = gen->add_subcommand("fdm", "tridiagonal (-1, 2, -1) matrix");
    gen_fdm->fallthrough();
    gen_fdm->add_option("order", gen_m, "matrix order (at least 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    gen_fdm->add_option("-o,--output", gen_out, "output path (default fdm_<order>.mtx)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    std::cout << std::setprecision(17);
    try {
        if (*check) {
            return run_check_h(check_matrix, check_witness, json_path, quiet);
        }
        if (*index) {
            return run_index(index_matrix, index_precond, index_iterative, index_s0, iter_opts,
                             json_path, quiet);
        }
        if (*certify) {
            return run_certify(certify_matrix, certify_precond, json_path, quiet);
        }
        if (*solve_cmd) {
            return run_solve(solve_matrix, solve_rhs, solve_precond, solve_x0, solve_opts,
                             solve_out, json_path, quiet);
        }
        if (*gen && *gen_fdm) {
            return run_gen_fdm(gen_m, gen_out, json_path);
        }
        std::cerr << "error: no command selected\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionerNotH& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNegative;
    } catch (const NotSassenfeld& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNegative;
    } catch (const NotContractive& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNegative;
    } catch (const CertificateDegenerate& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNegative;
    } catch (const BoundUnavailable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNegative;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
