#include "gdbialg/report.hpp"

#include <algorithm>
#include <sstream>

namespace gdbialg {

bool ValidationReport::has(std::string_view condition) const {
    for (const auto& v : violations)
        if (v.condition == condition) return true;
    return false;
}

std::vector<std::string> ValidationReport::conditions() const {
    std::vector<std::string> out;
    for (const auto& v : violations)
        if (std::find(out.begin(), out.end(), v.condition) == out.end())
            out.push_back(v.condition);
    return out;
}

void ValidationReport::merge(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::string ValidationReport::summary() const {
    if (pass()) return "pass";
    std::ostringstream os;
    os << "fail:";
    for (const auto& c : conditions()) os << " " << c;
    return os.str();
}

static std::string describe(const ValidationReport& r) {
    std::ostringstream os;
    os << "datum fails validation (" << r.summary() << ")";
    return os.str();
}

InvalidDatumError::InvalidDatumError(ValidationReport r)
    : std::runtime_error(describe(r)), report(std::move(r)) {}

InvalidFlagDatumError::InvalidFlagDatumError(ValidationReport r)
    : std::runtime_error(describe(r)), report(std::move(r)) {}

}  // namespace gdbialg
