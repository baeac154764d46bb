#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperint/closedform.hpp"

namespace hyperint::verify {

// One verification case: an integral instance, an optional known value, an
// optional integral-table reference, and its tolerance.
struct CaseRecord {
    std::string id;
    closedform::IntegralSpec spec;
    std::optional<double> expected;
    std::string gr_ref;
    double tol = 1e-8;
};

struct CaseOutcome {
    CaseRecord rec;
    bool pass = false;
    std::string error;       // engine error name when a route failed
    double closed = 0.0;
    double oracle = 0.0;
    double diff = 0.0;
    std::string formula_id;
    double est_error = 0.0;
    double oracle_err = 0.0;
    int oracle_evals = 0;
    double elapsed_ms = 0.0;
};

struct Report {
    std::vector<CaseOutcome> cases; // sorted by id
    std::uint64_t seed = 0xD1CE;
    double tol = 1e-8;
    int passed = 0;
    int failed = 0;
    double worst_diff = 0.0;
    std::string worst_id;
};

struct RunOptions {
    double tol = 1e-8;
    std::uint64_t seed = 0xD1CE;
    int jobs = 1;
};

// Map a corpus family tag ("I1".."I4", "trig-*", "ex3-*") plus numeric fields
// onto an IntegralSpec. Throws ParseError for unknown tags.
closedform::IntegralSpec spec_from_family(const std::string& family, int m, double mu, double nu,
                                          double a, double b, double beta);

std::vector<CaseRecord> load_corpus(const std::string& path);
std::vector<CaseRecord> parse_corpus(const std::string& text, const std::string& origin);

// Evaluate every case with the closed-form engine and the quadrature oracle.
// Engine errors mark the case failed, never abort the run.
Report run_suite(const std::vector<CaseRecord>& cases, const RunOptions& opts);
Report run_suite_file(const std::string& corpus_path, const RunOptions& opts);

std::string report_text(const Report& r);
// Structured report; deterministic byte-for-byte for a fixed seed except for
// the trailing timings section. Numbers carry 17 significant digits.
std::string report_json(const Report& r);

int exit_code(const Report& r);

} // namespace hyperint::verify
