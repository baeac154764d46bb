#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hyperint/quad.hpp"
#include "hyperint/verify.hpp"

namespace {

int run_verify(const std::string& corpus, double tol, const std::string& json_path,
               std::uint64_t seed, int jobs) {
    hyperint::verify::RunOptions opts;
    opts.tol = tol;
    opts.seed = seed;
    opts.jobs = jobs;
    hyperint::verify::Report rep;
    try {
        rep = hyperint::verify::run_suite_file(corpus, opts);
    } catch (const hyperint::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    std::cout << hyperint::verify::report_text(rep);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "cannot write report to " << json_path << "\n";
            return 2;
        }
        out << hyperint::verify::report_json(rep);
    }
    return hyperint::verify::exit_code(rep);
}

int run_eval(const std::string& family, int m, double mu, double nu, double a, double b,
             double beta, bool oracle) {
    hyperint::closedform::IntegralSpec spec;
    try {
        spec = hyperint::verify::spec_from_family(family, m, mu, nu, a, b, beta);
    } catch (const hyperint::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }
    try {
        const auto res = hyperint::closedform::evaluate(spec);
        std::printf("value     = %.17g\n", res.value);
        std::printf("formula   = %s\n", res.formula_id.c_str());
        std::printf("est_error = %.3g\n", res.est_error);
        for (const auto& w : res.warnings) std::printf("warning   = %s\n", w.c_str());
        if (oracle) {
            const auto q = hyperint::quad::integrate_spec(spec);
            std::printf("oracle    = %.17g\n", q.value);
            std::printf("|diff|    = %.3g\n", std::abs(q.value - res.value));
        }
        return 0;
    } catch (const hyperint::NotConvergent& e) {
        std::cerr << "not convergent: " << e.what() << "\n";
        return 3;
    } catch (const hyperint::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-form evaluation and verification of hyperbolic-quotient integrals"};
    app.require_subcommand(1);

    auto* vcmd = app.add_subcommand("verify", "run a verification corpus against the quadrature oracle");
    std::string corpus;
    double vtol = 1e-8;
    std::string json_path;
    std::uint64_t seed = 0xD1CE;
    int jobs = 1;
    vcmd->add_option("corpus", corpus, "corpus JSON file")->required();
    vcmd->add_option("--tol", vtol, "comparison tolerance")->capture_default_str();
    vcmd->add_option("--json", json_path, "write structured report to this path");
    vcmd->add_option("--seed", seed, "seed recorded in the report")->capture_default_str();
    vcmd->add_option("--jobs", jobs, "parallel evaluation threads")->capture_default_str();

    auto* ecmd = app.add_subcommand("eval", "evaluate one integral");
    std::string family;
    int m = 0;
    double mu = 1.0, nu = 1.0, a = 0.0, b = 1.0, beta = 0.0;
    bool oracle = false;
    ecmd->add_option("--family", family,
                     "I1|I2|I3|I4|trig-cos-cosh|trig-sin-sinh|trig-sin-cosh|ex3-cosh-sinh2|ex3-sinh-cosh2")
        ->required();
    ecmd->add_option("--m", m, "numerator power")->capture_default_str();
    ecmd->add_option("--mu", mu, "exponent in x^{mu-1}")->capture_default_str();
    ecmd->add_option("--nu", nu, "denominator power")->capture_default_str();
    ecmd->add_option("--a", a, "numerator frequency")->capture_default_str();
    ecmd->add_option("--b", b, "denominator frequency")->capture_default_str();
    ecmd->add_option("--beta", beta, "exponential weight exp(-beta x)")->capture_default_str();
    ecmd->add_flag("--oracle", oracle, "also run the quadrature oracle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (vcmd->parsed()) return run_verify(corpus, vtol, json_path, seed, jobs);
    return run_eval(family, m, mu, nu, a, b, beta, oracle);
}
