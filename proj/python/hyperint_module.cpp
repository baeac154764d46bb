#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperint/hypergeom.hpp"
#include "hyperint/quad.hpp"
#include "hyperint/specfun.hpp"
#include "hyperint/verify.hpp"

namespace py = pybind11;

namespace {

py::dict eval_result_dict(const hyperint::closedform::EvalResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["formula_id"] = r.formula_id;
    d["est_error"] = r.est_error;
    d["warnings"] = r.warnings;
    return d;
}

hyperint::closedform::IntegralSpec make_spec(const std::string& family, int m, double mu, double nu,
                                             double a, double b, double beta) {
    return hyperint::verify::spec_from_family(family, m, mu, nu, a, b, beta);
}

} // namespace

PYBIND11_MODULE(_hyperint, mod) {
    mod.doc() = "closed forms and a quadrature oracle for integrals of quotients of sinh/cosh powers";

    using namespace hyperint;

    py::register_exception<Error>(mod, "HyperintError");

    // special functions
    mod.def("ln_gamma", [](std::complex<double> z) { return specfun::ln_gamma(z); }, py::arg("z"));
    mod.def("digamma", [](std::complex<double> z) { return specfun::digamma(z); }, py::arg("z"));
    mod.def("digamma_real", [](double x) { return specfun::digamma(x); }, py::arg("x"));
    mod.def("trigamma", &specfun::trigamma, py::arg("x"));
    mod.def("beta", [](double a, double b) { return specfun::beta(a, b); }, py::arg("a"), py::arg("b"));
    mod.def("hurwitz_zeta", &specfun::hurwitz_zeta, py::arg("s"), py::arg("a"));
    mod.def("zeta", &specfun::zeta, py::arg("s"));
    mod.def("zed", &specfun::zed, py::arg("mu"), py::arg("a"));
    mod.def("alt_psi_sum", &specfun::alt_psi_sum, py::arg("x"));
    mod.def("catalan", &specfun::catalan);

    // hypergeometric layer
    mod.def("pochhammer", &hypergeom::pochhammer, py::arg("a"), py::arg("n"));
    mod.def(
        "pfq",
        [](const std::vector<double>& num, const std::vector<double>& den, double z, double tol) {
            return hypergeom::pfq({num, den, z}, tol);
        },
        py::arg("numerators"), py::arg("denominators"), py::arg("z"), py::arg("tol") = 1e-12);
    mod.def(
        "classify",
        [](const std::vector<double>& num, const std::vector<double>& den, double z) {
            const auto c = hypergeom::classify({num, den, z});
            return py::make_tuple(c.omega, hypergeom::to_string(c.verdict));
        },
        py::arg("numerators"), py::arg("denominators"), py::arg("z"));
    mod.def("gauss_2f1_minus1", &hypergeom::gauss_2f1_minus1, py::arg("a"), py::arg("b"), py::arg("c"),
            py::arg("tol") = 1e-12);
    mod.def("gauss_sum", &hypergeom::gauss_sum, py::arg("alpha"), py::arg("beta"), py::arg("gamma"));
    mod.def("kummer_sum", &hypergeom::kummer_sum, py::arg("alpha"), py::arg("beta"));
    mod.def("f43_sum", &hypergeom::f43_sum, py::arg("alpha"), py::arg("beta"), py::arg("gamma"));

    // closed forms and the oracle
    mod.def(
        "evaluate",
        [](const std::string& family, int m, double mu, double nu, double a, double b, double beta) {
            return eval_result_dict(closedform::evaluate(make_spec(family, m, mu, nu, a, b, beta)));
        },
        py::arg("family"), py::arg("m") = 0, py::arg("mu") = 1.0, py::arg("nu") = 1.0, py::arg("a") = 0.0,
        py::arg("b") = 1.0, py::arg("beta") = 0.0);
    mod.def(
        "oracle",
        [](const std::string& family, int m, double mu, double nu, double a, double b, double beta,
           double tol) {
            const auto q = quad::integrate_spec(make_spec(family, m, mu, nu, a, b, beta), tol);
            py::dict d;
            d["value"] = q.value;
            d["err_est"] = q.err_est;
            d["n_evals"] = q.n_evals;
            d["converged"] = q.converged;
            return d;
        },
        py::arg("family"), py::arg("m") = 0, py::arg("mu") = 1.0, py::arg("nu") = 1.0, py::arg("a") = 0.0,
        py::arg("b") = 1.0, py::arg("beta") = 0.0, py::arg("tol") = 1e-11);
    mod.def(
        "run_suite",
        [](const std::string& corpus_path, double tol, std::uint64_t seed, int jobs) {
            verify::RunOptions opts;
            opts.tol = tol;
            opts.seed = seed;
            opts.jobs = jobs;
            const auto rep = verify::run_suite_file(corpus_path, opts);
            py::dict d;
            d["passed"] = rep.passed;
            d["failed"] = rep.failed;
            d["text"] = verify::report_text(rep);
            d["json"] = verify::report_json(rep);
            return d;
        },
        py::arg("corpus_path"), py::arg("tol") = 1e-8, py::arg("seed") = 0xD1CEull, py::arg("jobs") = 1);
}
