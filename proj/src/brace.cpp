#include "ybe/brace.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "ybe/errors.hpp"

namespace ybe {

namespace {

void require_table(int n, const LeftBrace::Table& t, const char* label) {
  if (static_cast<int>(t.size()) != n)
    throw MalformedInput(std::string(label) + " table must have " + std::to_string(n) + " rows");
  for (int r = 0; r < n; ++r) {
    const auto& row = t[static_cast<size_t>(r)];
    if (static_cast<int>(row.size()) != n)
      throw MalformedInput(std::string(label) + " row " + std::to_string(r) + " has wrong length");
    for (int v : row) {
      if (v < 0 || v >= n)
        throw MalformedInput(std::string(label) + " row " + std::to_string(r) +
                             " has out-of-range entry " + std::to_string(v));
    }
  }
}

std::string pair_str(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Group axioms for a table with intended identity 0; returns (ok, witness).
std::pair<bool, std::string> group_check(int n, const LeftBrace::Table& t, bool require_abelian) {
  for (int a = 0; a < n; ++a) {
    if (t[0][static_cast<size_t>(a)] != a || t[static_cast<size_t>(a)][0] != a)
      return {false, "identity fails at " + std::to_string(a)};
  }
  for (int a = 0; a < n; ++a) {
    bool has_inv = false;
    for (int b = 0; b < n; ++b) has_inv = has_inv || t[static_cast<size_t>(a)][static_cast<size_t>(b)] == 0;
    if (!has_inv) return {false, "no inverse for " + std::to_string(a)};
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const int ab_c = t[static_cast<size_t>(t[static_cast<size_t>(a)][static_cast<size_t>(b)])][static_cast<size_t>(c)];
        const int a_bc = t[static_cast<size_t>(a)][static_cast<size_t>(t[static_cast<size_t>(b)][static_cast<size_t>(c)])];
        if (ab_c != a_bc)
          return {false, "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) +
                             "," + std::to_string(c) + ")"};
      }
    }
  }
  if (require_abelian) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (t[static_cast<size_t>(a)][static_cast<size_t>(b)] != t[static_cast<size_t>(b)][static_cast<size_t>(a)])
          return {false, "commutativity fails at " + pair_str(a, b)};
      }
    }
  }
  return {true, ""};
}

}  // namespace

LeftBrace LeftBrace::make(int n, Table add, Table circle) {
  if (n <= 0) throw MalformedInput("brace size must be positive");
  require_table(n, add, "add");
  require_table(n, circle, "circle");
  LeftBrace b;
  b.n_ = n;
  b.add_ = std::move(add);
  b.circle_ = std::move(circle);
  return b;
}

int LeftBrace::neg(int a) const {
  for (int b = 0; b < n_; ++b) {
    if (add(a, b) == 0) return b;
  }
  throw MalformedInput("element " + std::to_string(a) + " has no additive inverse");
}

int LeftBrace::circle_inv(int a) const {
  for (int b = 0; b < n_; ++b) {
    if (circle(a, b) == 0) return b;
  }
  throw MalformedInput("element " + std::to_string(a) + " has no circle inverse");
}

Report validate_brace(const LeftBrace& b) {
  const int n = b.size();
  Report rep;
  {
    auto [ok, wit] = group_check(n, b.add_table(), true);
    rep.add("abelian-group", ok, wit);
  }
  {
    auto [ok, wit] = group_check(n, b.circle_table(), false);
    rep.add("circle-group", ok, wit);
  }
  {
    // Left distributivity of a.b := a o b - a - b, checked in the
    // subtraction-free form a o (x + y) + a = a o x + a o y.
    bool ok = true;
    std::string wit;
    for (int a = 0; a < n && ok; ++a) {
      for (int x = 0; x < n && ok; ++x) {
        for (int y = 0; y < n && ok; ++y) {
          const int lhs = b.add(b.circle(a, b.add(x, y)), a);
          const int rhs = b.add(b.circle(a, x), b.circle(a, y));
          if (lhs != rhs) {
            ok = false;
            wit = "(" + std::to_string(a) + "," + std::to_string(x) + "," + std::to_string(y) + ")";
          }
        }
      }
    }
    rep.add("distributive", ok, wit);
  }
  return rep;
}

FiniteSolution solution_from_brace(const LeftBrace& b) {
  Report rep = validate_brace(b);
  if (!rep.all_pass()) {
    for (const auto& item : rep.items) {
      if (!item.pass)
        throw MalformedInput("brace axiom '" + item.name + "' fails: " + item.witness);
    }
  }
  const int n = b.size();
  FiniteSolution::Table sigma(static_cast<size_t>(n), std::vector<int>(n));
  FiniteSolution::Table tau(static_cast<size_t>(n), std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      sigma[static_cast<size_t>(x)][static_cast<size_t>(y)] = b.sub(b.circle(x, y), x);
    }
  }
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      const int s = sigma[static_cast<size_t>(x)][static_cast<size_t>(y)];
      const int t = b.circle_inv(s);
      tau[static_cast<size_t>(y)][static_cast<size_t>(x)] = b.sub(b.circle(t, x), t);
    }
  }
  return FiniteSolution::make(n, std::move(sigma), std::move(tau));
}

std::vector<LeftBrace> enumerate_braces(int n) {
  if (n <= 0) throw MalformedInput("enumeration size must be positive");
  if (n > 4) throw ResourceLimit("brace enumeration is bounded to n <= 4");

  // Group tables with identity 0: row 0 is the identity permutation and row a
  // starts with a, so candidate rows are permutations with a fixed first
  // entry. Latin-square plus associativity screening happens in group_check.
  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  auto tables_with_identity = [&](bool abelian) {
    std::vector<LeftBrace::Table> out;
    LeftBrace::Table t;
    t.push_back(perms[0]);  // row 0 = id
    std::function<void()> rec = [&]() {
      const int a = static_cast<int>(t.size());
      if (a == n) {
        if (group_check(n, t, abelian).first) out.push_back(t);
        return;
      }
      for (const auto& p : perms) {
        if (p[0] != a) continue;
        t.push_back(p);
        rec();
        t.pop_back();
      }
    };
    if (n == 1) {
      out.push_back(t);
    } else {
      rec();
    }
    return out;
  };

  const auto adds = tables_with_identity(true);
  const auto circles = tables_with_identity(false);
  std::vector<LeftBrace> out;
  for (const auto& add : adds) {
    for (const auto& circle : circles) {
      LeftBrace b = LeftBrace::make(n, add, circle);
      if (validate_brace(b).all_pass()) out.push_back(std::move(b));
    }
  }
  return out;
}

LeftBrace trivial_brace(int n) {
  LeftBrace::Table t(static_cast<size_t>(n), std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
  }
  return LeftBrace::make(n, t, t);
}

}  // namespace ybe
