#pragma once

#include <vector>

#include "ybe/report.hpp"
#include "ybe/solution.hpp"

namespace ybe {

// A finite left brace candidate: an addition table for (B,+) and a circle
// table for (B,o) over {0..n-1}, with 0 serving as both identities.
// Construction checks shape and range only; the axioms are reported by
// validate_brace.
class LeftBrace {
 public:
  using Table = std::vector<std::vector<int>>;

  static LeftBrace make(int n, Table add, Table circle);

  int size() const { return n_; }
  int add(int a, int b) const { return add_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  int circle(int a, int b) const { return circle_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }

  // Additive inverse of a; meaningful only when (B,+) is a group with
  // identity 0 (throws MalformedInput otherwise).
  int neg(int a) const;
  // Circle inverse of a, same caveat.
  int circle_inv(int a) const;
  // a - b read off the addition table.
  int sub(int a, int b) const { return add(a, neg(b)); }

  const Table& add_table() const { return add_; }
  const Table& circle_table() const { return circle_; }

  bool operator==(const LeftBrace& o) const = default;

 private:
  LeftBrace() = default;
  int n_ = 0;
  Table add_, circle_;
};

// Reports abelian-group / circle-group / distributive, each with the first
// counterexample when false.
Report validate_brace(const LeftBrace& b);

// Rump's map: sigma_x(y) = x o y - x, tau_y(x) = t o x - t with t the circle
// inverse of sigma_x(y). Requires a valid brace.
FiniteSolution solution_from_brace(const LeftBrace& b);

// Every axiom-satisfying table pair (raw, not up to isomorphism),
// lexicographic by (add, circle); n <= 4.
std::vector<LeftBrace> enumerate_braces(int n);

// The trivial brace on Z/n (add = circle = addition mod n).
LeftBrace trivial_brace(int n);

}  // namespace ybe
