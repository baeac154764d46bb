#pragma once

#include <stdexcept>
#include <string>

namespace hyperint {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation at (or within 1e-12 of) a pole of Gamma/psi/zeta.
struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// Argument outside the mathematical domain of the operation.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Hurwitz zeta requested below the supported continuation region.
struct UnsupportedRegion : Error {
    explicit UnsupportedRegion(const std::string& msg) : Error(msg) {}
};

// Series evaluation requested where the series does not converge.
struct DivergentSeries : Error {
    explicit DivergentSeries(const std::string& msg) : Error(msg) {}
};

// Acceleration failed to reach the requested tolerance within budget.
struct SlowConvergence : Error {
    explicit SlowConvergence(const std::string& msg) : Error(msg) {}
};

// Integral fails its convergence conditions.
struct NotConvergent : Error {
    explicit NotConvergent(const std::string& msg) : Error(msg) {}
};

// Quadrature level budget exhausted before reaching tolerance.
struct NoConvergence : Error {
    explicit NoConvergence(const std::string& msg) : Error(msg) {}
};

// Integrand returned NaN/Inf at a quadrature node.
struct NonFinite : Error {
    explicit NonFinite(const std::string& msg) : Error(msg) {}
};

// Corpus/report file could not be parsed.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace hyperint
