#ifndef SQZWG_ERRORS_HPP
#define SQZWG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sqzwg {

// Base for everything this library throws. Subtypes exist so callers (and the
// CLI) can map failure classes to distinct exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input outside a model's or table's documented domain.
class RangeError : public Error {
public:
    using Error::Error;
};

// Mathematically invalid argument (log of non-positive ratio, etc).
class DomainError : public Error {
public:
    using Error::Error;
};

// Inconsistent or unrepresentable waveguide geometry / grid request.
class GeometryError : public Error {
public:
    using Error::Error;
};

// A search interval that does not bracket the sought transition or root.
class BracketError : public Error {
public:
    using Error::Error;
};

// Non-positive index difference where normal dispersion is required.
class DispersionError : public Error {
public:
    using Error::Error;
};

// Degenerate data or non-convergence of the least-squares fitter.
class FitError : public Error {
public:
    using Error::Error;
};

// Instrument/scan settings violating their invariants (aliasing, rbw<=vbw, ...).
class SettingsError : public Error {
public:
    using Error::Error;
};

// Iterative numerics failed to converge; message carries a residual report.
class NumericError : public Error {
public:
    using Error::Error;
};

// Malformed structured text input; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line_number)
        : Error(what), line(line_number) {}
    int line = 0;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace sqzwg

#endif // SQZWG_ERRORS_HPP
