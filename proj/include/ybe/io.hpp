#pragma once

#include <iosfwd>
#include <string>

#include "ybe/brace.hpp"
#include "ybe/report.hpp"
#include "ybe/solution.hpp"

namespace ybe {

// Solution document: {"n": int, "sigma": n x n, "tau": n x n}, 0-based,
// row-major. Brace document: {"n": int, "add": n x n, "circle": n x n}.
FiniteSolution read_solution(std::istream& in);
FiniteSolution parse_solution(const std::string& text);
std::string write_solution(const FiniteSolution& sol);

LeftBrace read_brace(std::istream& in);
LeftBrace parse_brace(const std::string& text);
std::string write_brace(const LeftBrace& b);

// Canonical FNV-1a hash of the (sigma, tau) tables, used as the stable
// subject identifier in reports.
std::string canonical_hash(const FiniteSolution& sol);
std::string canonical_hash(const LeftBrace& b);

}  // namespace ybe
