#pragma once

#include "gdbialg/linalg.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gdbialg {

// One violated identity: the condition label (paper vocabulary, e.g. "N7",
// "GF2", "jacobi"), the minimal basis tuple witnessing the failure, and the
// exact residual of the identity there.
struct Violation {
    std::string condition;
    std::vector<std::size_t> indices;  // 0-based basis indices
    Vector residual;
    std::string detail;  // optional, e.g. the offending monomial for conformal checks
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool pass() const { return violations.empty(); }
    bool has(std::string_view condition) const;
    std::vector<std::string> conditions() const;  // deduplicated, in order
    void merge(const ValidationReport& other);
    std::string summary() const;
};

struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidDatumError : std::runtime_error {
    ValidationReport report;
    explicit InvalidDatumError(ValidationReport r);
};

struct InvalidFlagDatumError : std::runtime_error {
    ValidationReport report;
    explicit InvalidFlagDatumError(ValidationReport r);
};

struct NotASubalgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchInconclusiveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gdbialg
