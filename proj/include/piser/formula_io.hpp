#pragma once

#include <optional>
#include <string>

#include "piser/formula.hpp"
#include "piser/poly.hpp"

namespace piser {

/// On-disk formula record. Line format, ASCII, newline-terminated:
///   pi-series v1
///   m=<int> p=<int> a=<int> r=<int>
///   S: c0 c1 ... cd
/// plus optional "#" comment lines and an optional certificate section
///   Rcheck: q1 q2 ... (rational coefficients of z^1, z^2, ...)
struct FormulaFile {
    Formula formula;
    std::optional<Poly> rcheck;  // in z, zero constant term
    std::string comment;         // single optional comment carried on write
};

std::string render_formula_file(const FormulaFile& f);
/// Throws std::invalid_argument on malformed input.
FormulaFile parse_formula_file(const std::string& text);

FormulaFile read_formula_file(const std::string& path);
void write_formula_file(const std::string& path, const FormulaFile& f);

}  // namespace piser
