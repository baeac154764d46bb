#include "hyperint/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hyperint/quad.hpp"

namespace hyperint::verify {

using json = nlohmann::json;

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_number(const json& j, const std::string& key, double fallback, bool* present = nullptr) {
    if (!j.contains(key) || j.at(key).is_null()) {
        if (present) *present = false;
        return fallback;
    }
    if (present) *present = true;
    const json& v = j.at(key);
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        // decimal strings parse through strtod: exact nearest binary64
        const std::string s = v.get<std::string>();
        char* end = nullptr;
        const double d = std::strtod(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0') throw ParseError("bad numeric string for '" + key + "': " + s);
        return d;
    }
    throw ParseError("field '" + key + "' is not numeric");
}

const char* error_name(const Error& e) {
    if (dynamic_cast<const PoleError*>(&e)) return "PoleError";
    if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
    if (dynamic_cast<const UnsupportedRegion*>(&e)) return "UnsupportedRegion";
    if (dynamic_cast<const DivergentSeries*>(&e)) return "DivergentSeries";
    if (dynamic_cast<const SlowConvergence*>(&e)) return "SlowConvergence";
    if (dynamic_cast<const NotConvergent*>(&e)) return "NotConvergent";
    if (dynamic_cast<const NoConvergence*>(&e)) return "NoConvergence";
    if (dynamic_cast<const NonFinite*>(&e)) return "NonFinite";
    if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
    return "Error";
}

void evaluate_case(CaseOutcome& out, double default_tol) {
    const auto t0 = std::chrono::steady_clock::now();
    const double tol = out.rec.tol > 0.0 ? out.rec.tol : default_tol;
    try {
        const closedform::EvalResult closed = closedform::evaluate(out.rec.spec);
        out.closed = closed.value;
        out.formula_id = closed.formula_id;
        out.est_error = closed.est_error;

        const quad::QuadResult q = quad::integrate_spec(out.rec.spec, std::min(1e-11, 0.01 * tol));
        out.oracle = q.value;
        out.oracle_err = q.err_est;
        out.oracle_evals = q.n_evals;

        out.diff = std::abs(out.closed - out.oracle);
        const double bound = std::max(tol, tol * std::abs(out.oracle));
        out.pass = out.diff <= bound;
        if (out.rec.expected) {
            const double dexp = std::abs(out.closed - *out.rec.expected);
            if (dexp > bound) out.pass = false;
            out.diff = std::max(out.diff, dexp);
        }
    } catch (const Error& e) {
        out.pass = false;
        out.error = error_name(e);
    } catch (const std::exception&) {
        out.pass = false;
        out.error = "Error";
    }
    out.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

closedform::IntegralSpec spec_from_family(const std::string& family, int m, double mu, double nu,
                                          double a, double b, double beta) {
    closedform::IntegralSpec s;
    s.m = m;
    s.mu = mu;
    s.nu = nu;
    s.a = a;
    s.b = b;
    s.beta_weight = beta;
    if (family == "I1") {
        s.family = closedform::Family::CoshOverCosh;
    } else if (family == "I2") {
        s.family = closedform::Family::SinhOverCosh;
    } else if (family == "I3") {
        s.family = closedform::Family::CoshOverSinh;
    } else if (family == "I4") {
        s.family = closedform::Family::SinhOverSinh;
    } else if (family == "trig-cos-cosh" || family == "trig-sin-sinh" || family == "trig-sin-cosh") {
        s.trig = true;
        s.m = 1;
        s.mu = 1.0;
        s.nu = 1.0;
        s.family = family == "trig-cos-cosh"   ? closedform::Family::CoshOverCosh
                   : family == "trig-sin-sinh" ? closedform::Family::SinhOverSinh
                                               : closedform::Family::SinhOverCosh;
    } else if (family == "ex3-cosh-sinh2" || family == "ex3-sinh-cosh2") {
        s.family = family == "ex3-cosh-sinh2" ? closedform::Family::CoshOverSinh
                                              : closedform::Family::SinhOverCosh;
        s.m = 1;
        s.nu = 2.0;
        if (s.a == 0.0) s.a = s.b; // same argument in numerator and denominator
        if (s.a != s.b) throw ParseError("ex3 families require a = b");
    } else {
        throw ParseError("unknown family '" + family + "'");
    }
    return s;
}

std::vector<CaseRecord> parse_corpus(const std::string& text, const std::string& origin) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(origin + ": " + e.what());
    }
    if (!root.is_array()) throw ParseError(origin + ": corpus must be a JSON array of cases");

    std::vector<CaseRecord> out;
    out.reserve(root.size());
    for (const json& j : root) {
        if (!j.is_object()) throw ParseError(origin + ": case entries must be objects");
        CaseRecord rec;
        if (!j.contains("id") || !j.at("id").is_string()) throw ParseError(origin + ": case missing string 'id'");
        rec.id = j.at("id").get<std::string>();
        const std::string family =
            j.contains("family") && j.at("family").is_string() ? j.at("family").get<std::string>() : "";
        if (family.empty()) throw ParseError(origin + ": case '" + rec.id + "' missing 'family'");
        const int m = static_cast<int>(parse_number(j, "m", 0));
        const double mu = parse_number(j, "mu", 1.0);
        const double nu = parse_number(j, "nu", 1.0);
        const double a = parse_number(j, "a", 0.0);
        const double b = parse_number(j, "b", 1.0);
        const double beta = parse_number(j, "beta", 0.0);
        rec.spec = spec_from_family(family, m, mu, nu, a, b, beta);
        bool has_expected = false;
        const double expected = parse_number(j, "expected", 0.0, &has_expected);
        if (has_expected) rec.expected = expected;
        if (j.contains("gr_ref") && j.at("gr_ref").is_string()) rec.gr_ref = j.at("gr_ref").get<std::string>();
        bool has_tol = false;
        rec.tol = parse_number(j, "tol", 0.0, &has_tol); // 0 = inherit the runner tolerance
        if (has_tol && !(rec.tol > 0.0)) throw ParseError(origin + ": case '" + rec.id + "' needs tol > 0");
        for (const auto& other : out)
            if (other.id == rec.id) throw ParseError(origin + ": duplicate case id '" + rec.id + "'");
        out.push_back(std::move(rec));
    }
    return out;
}

std::vector<CaseRecord> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open corpus file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_corpus(ss.str(), path);
}

Report run_suite(const std::vector<CaseRecord>& cases, const RunOptions& opts) {
    Report rep;
    rep.seed = opts.seed;
    rep.tol = opts.tol;
    rep.cases.resize(cases.size());
    for (size_t i = 0; i < cases.size(); ++i) {
        rep.cases[i].rec = cases[i];
        if (rep.cases[i].rec.tol <= 0.0) rep.cases[i].rec.tol = opts.tol;
    }

    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || cases.size() < 2) {
        for (auto& c : rep.cases) evaluate_case(c, opts.tol);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= rep.cases.size()) return;
                evaluate_case(rep.cases[i], opts.tol);
            }
        };
        std::vector<std::thread> pool;
        const int n = std::min<int>(jobs, static_cast<int>(cases.size()));
        pool.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::sort(rep.cases.begin(), rep.cases.end(),
              [](const CaseOutcome& x, const CaseOutcome& y) { return x.rec.id < y.rec.id; });
    for (const auto& c : rep.cases) {
        if (c.pass) {
            rep.passed++;
        } else {
            rep.failed++;
        }
        if (c.error.empty() && c.diff > rep.worst_diff) {
            rep.worst_diff = c.diff;
            rep.worst_id = c.rec.id;
        }
    }
    return rep;
}

Report run_suite_file(const std::string& corpus_path, const RunOptions& opts) {
    return run_suite(load_corpus(corpus_path), opts);
}

std::string report_text(const Report& r) {
    std::ostringstream os;
    for (const auto& c : r.cases) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.rec.id;
        if (!c.rec.gr_ref.empty()) os << " (" << c.rec.gr_ref << ")";
        if (!c.error.empty()) {
            os << "  error=" << c.error;
        } else {
            os << "  closed=" << fmt17(c.closed) << "  oracle=" << fmt17(c.oracle)
               << "  |diff|=" << fmt17(c.diff) << "  [" << c.formula_id << "]";
        }
        os << "\n";
    }
    os << "----\n";
    os << "cases: " << r.cases.size() << "  passed: " << r.passed << "  failed: " << r.failed << "\n";
    if (!r.worst_id.empty())
        os << "worst discrepancy: " << fmt17(r.worst_diff) << " (" << r.worst_id << ")\n";
    os << "seed: 0x" << std::hex << r.seed << std::dec << "  tol: " << fmt17(r.tol) << "\n";
    if (r.cases.empty()) os << "empty corpus: nothing to verify\n";
    return os.str();
}

std::string report_json(const Report& r) {
    // Hand-rolled writer: deterministic key order, 17 significant digits.
    std::ostringstream os;
    auto esc = [](const std::string& s) {
        std::string o;
        for (char ch : s) {
            if (ch == '"' || ch == '\\') {
                o.push_back('\\');
                o.push_back(ch);
            } else if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                o += buf;
            } else {
                o.push_back(ch);
            }
        }
        return o;
    };
    os << "{\n";
    os << "  \"seed\": " << r.seed << ",\n";
    os << "  \"tol\": " << fmt17(r.tol) << ",\n";
    os << "  \"n_cases\": " << r.cases.size() << ",\n";
    os << "  \"cases\": [\n";
    for (size_t i = 0; i < r.cases.size(); ++i) {
        const auto& c = r.cases[i];
        const auto& s = c.rec.spec;
        os << "    {\"id\": \"" << esc(c.rec.id) << "\", \"family\": \"" << closedform::family_name(s.family)
           << "\", \"trig\": " << (s.trig ? "true" : "false") << ", \"m\": " << s.m << ", \"mu\": " << fmt17(s.mu)
           << ", \"nu\": " << fmt17(s.nu) << ", \"a\": " << fmt17(s.a) << ", \"b\": " << fmt17(s.b)
           << ", \"beta\": " << fmt17(s.beta_weight) << ", \"tol\": " << fmt17(c.rec.tol);
        if (!c.rec.gr_ref.empty()) os << ", \"gr_ref\": \"" << esc(c.rec.gr_ref) << "\"";
        if (c.rec.expected) os << ", \"expected\": " << fmt17(*c.rec.expected);
        if (!c.error.empty()) {
            os << ", \"error\": \"" << esc(c.error) << "\"";
        } else {
            os << ", \"closed\": " << fmt17(c.closed) << ", \"oracle\": " << fmt17(c.oracle)
               << ", \"diff\": " << fmt17(c.diff) << ", \"formula\": \"" << esc(c.formula_id)
               << "\", \"est_error\": " << fmt17(c.est_error) << ", \"oracle_err\": " << fmt17(c.oracle_err)
               << ", \"oracle_evals\": " << c.oracle_evals;
        }
        os << ", \"pass\": " << (c.pass ? "true" : "false") << "}" << (i + 1 < r.cases.size() ? "," : "") << "\n";
    }
    os << "  ],\n";
    os << "  \"summary\": {\"passed\": " << r.passed << ", \"failed\": " << r.failed
       << ", \"worst_diff\": " << fmt17(r.worst_diff) << ", \"worst_id\": \"" << esc(r.worst_id) << "\"},\n";
    os << "  \"timings\": {";
    for (size_t i = 0; i < r.cases.size(); ++i) {
        os << "\"" << esc(r.cases[i].rec.id) << "\": " << fmt17(r.cases[i].elapsed_ms)
           << (i + 1 < r.cases.size() ? ", " : "");
    }
    os << "}\n";
    os << "}\n";
    return os.str();
}

int exit_code(const Report& r) { return r.failed == 0 ? 0 : 1; }

} // namespace hyperint::verify
