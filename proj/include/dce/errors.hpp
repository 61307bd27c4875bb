#pragma once
#include <stdexcept>
#include <string>

namespace dce {

// Raised when inputs are physically meaningful but outside the regime the
// implemented formulas are valid in (e.g. lossy or dispersive media handed to
// a method derived in the lossless constant-index limit).  The CLI maps this
// to its own exit code so scripts can tell regime problems from usage errors.
class unsupported_regime_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Scenario-file syntax or validation problem, carrying the 1-based line
// number when the offending line is known (0 for file-level problems).
class scenario_parse_error : public std::runtime_error {
public:
    scenario_parse_error(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace dce
