#pragma once

#include "gdbialg/extending.hpp"
#include "gdbialg/flag.hpp"

#include <iosfwd>
#include <string>
#include <variant>

namespace gdbialg {

// Structured-text (JSON) formats.
//
// Algebra file:
//   { "dim": n, "basis": ["L", ...],
//     "product": [[i, j, k, "p/q"], ...], "bracket": [[i, j, k, "p/q"], ...] }
// Entry [i, j, k, c] is the coefficient of basis k in m(e_i, e_j); indices are
// 1-based; omitted entries are zero.
//
// Flag-datum file:
//   { "dim": n, "p": [..], "q": [..], "eta": [..],
//     "S": [[..],[..]], "T": .., "D": .., "a1": [..], "k": "p/q" }
// Matrices are row-major; column j is the image of the j-th basis vector.
//
// Extending-datum file:
//   { "dimA": n, "dimV": m, "l_A": [[i,j,k,c],..], "r_A": .., "l_V": ..,
//     "r_V": .., "f": .., "ast": .., "triangle_l": .., "triangle_r": ..,
//     "h": .., "curly": .. }
// Index domains: l_A, r_A: A x V -> V; l_V, r_V, triangle_r: V x A -> A;
// triangle_l: V x A -> V; f, h: V x V -> A; ast, curly: V x V -> V.
// All indices 1-based.

struct ParseError : std::runtime_error {
    int line = 0, column = 0;
    ParseError(std::string msg, int line_, int col_);
};

std::string print_algebra(const GDBialgebra& A);
GDBialgebra parse_algebra(const std::string& text);

std::string print_flag_datum(const GDFlagDatum& d);
GDFlagDatum parse_flag_datum(const std::string& text);

std::string print_extending_datum(const GDExtendingDatum& d);
GDExtendingDatum parse_extending_datum(const std::string& text);

enum class FileKind { Algebra, FlagDatum, ExtendingDatum };
// Decides by the fields present.
FileKind classify_document(const std::string& text);

// Report rendering shared by the CLI: one line per violation, paper labels.
std::string render_report_text(const std::string& check_name, const ValidationReport& rep,
                               const std::vector<std::string>& basis_names);
std::string render_report_machine(const std::string& check_name, const ValidationReport& rep);

}  // namespace gdbialg
