#include "ybe/solution.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ybe/errors.hpp"

namespace ybe {

namespace {

std::string tuple_str(std::initializer_list<int> vs) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int v : vs) {
    if (!first) os << ",";
    os << v;
    first = false;
  }
  os << ")";
  return os.str();
}

FiniteSolution::Table invert_rows(const FiniteSolution::Table& t) {
  FiniteSolution::Table inv(t.size(), std::vector<int>(t.size()));
  for (size_t r = 0; r < t.size(); ++r) {
    for (size_t c = 0; c < t.size(); ++c) inv[r][static_cast<size_t>(t[r][c])] = static_cast<int>(c);
  }
  return inv;
}

void require_permutation_rows(int n, const FiniteSolution::Table& t, const char* label) {
  if (static_cast<int>(t.size()) != n)
    throw MalformedInput(std::string(label) + " table must have " + std::to_string(n) + " rows");
  for (int r = 0; r < n; ++r) {
    const auto& row = t[static_cast<size_t>(r)];
    if (static_cast<int>(row.size()) != n)
      throw MalformedInput(std::string(label) + " row " + std::to_string(r) + " has wrong length");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : row) {
      if (v < 0 || v >= n)
        throw MalformedInput(std::string(label) + " row " + std::to_string(r) +
                             " has out-of-range entry " + std::to_string(v));
      if (seen[static_cast<size_t>(v)])
        throw MalformedInput(std::string(label) + " row " + std::to_string(r) +
                             " is not a permutation (duplicate " + std::to_string(v) + ")");
      seen[static_cast<size_t>(v)] = 1;
    }
  }
}

}  // namespace

FiniteSolution FiniteSolution::make(int n, Table sigma, Table tau) {
  if (n <= 0) throw MalformedInput("solution size must be positive");
  require_permutation_rows(n, sigma, "sigma");
  require_permutation_rows(n, tau, "tau");
  FiniteSolution s;
  s.n_ = n;
  s.sigma_ = std::move(sigma);
  s.tau_ = std::move(tau);
  s.sigma_inv_ = invert_rows(s.sigma_);
  s.tau_inv_ = invert_rows(s.tau_);
  return s;
}

FiniteSolution FiniteSolution::reversed() const {
  return make(n_, tau_, sigma_);
}

Report validate_solution(const FiniteSolution& sol) {
  const int n = sol.size();
  Report rep;

  // Non-degeneracy holds by construction; re-checked so the report stands on
  // its own.
  {
    bool ok = true;
    std::string wit;
    for (int r = 0; r < n && ok; ++r) {
      std::vector<char> seen_s(static_cast<size_t>(n), 0), seen_t(static_cast<size_t>(n), 0);
      for (int c = 0; c < n; ++c) {
        if (seen_s[static_cast<size_t>(sol.sigma(r, c))]++) {
          ok = false;
          wit = "sigma row " + std::to_string(r);
          break;
        }
        if (seen_t[static_cast<size_t>(sol.tau(r, c))]++) {
          ok = false;
          wit = "tau row " + std::to_string(r);
          break;
        }
      }
    }
    rep.add("nondegenerate", ok, wit);
  }

  {
    bool ok = true;
    std::string wit;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        const auto [u, v] = sol.braid_map(x, y);
        if (sol.braid_map(u, v) != std::pair<int, int>{x, y}) {
          ok = false;
          wit = tuple_str({x, y});
        }
      }
    }
    rep.add("involutive", ok, wit);
  }

  {
    bool ok = true;
    std::string wit;
    auto r12 = [&](std::array<int, 3> t) {
      const auto [u, v] = sol.braid_map(t[0], t[1]);
      return std::array<int, 3>{u, v, t[2]};
    };
    auto r23 = [&](std::array<int, 3> t) {
      const auto [u, v] = sol.braid_map(t[1], t[2]);
      return std::array<int, 3>{t[0], u, v};
    };
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        for (int z = 0; z < n && ok; ++z) {
          const std::array<int, 3> t{x, y, z};
          if (r12(r23(r12(t))) != r23(r12(r23(t)))) {
            ok = false;
            wit = tuple_str({x, y, z});
          }
        }
      }
    }
    rep.add("braid", ok, wit);
  }

  {
    const SparseMat rc = linearize(sol, true);
    const SparseMat lhs = embed(rc, {0, 1}, 3, n) * embed(rc, {1, 2}, 3, n) * embed(rc, {0, 1}, 3, n);
    const SparseMat rhs = embed(rc, {1, 2}, 3, n) * embed(rc, {0, 1}, 3, n) * embed(rc, {1, 2}, 3, n);
    check_equal(rep, "braid-matrix", lhs, rhs);
  }

  return rep;
}

ConstraintReport check_constraints(const FiniteSolution& sol) {
  const int n = sol.size();
  ConstraintReport out;
  for (int e = 0; e < n; ++e) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        const int c1l = sol.sigma(sol.sigma(e, x), sol.sigma(sol.tau(x, e), y));
        const int c1r = sol.sigma(e, sol.sigma(x, y));
        if (c1l != c1r) out.c1_violations.push_back({e, x, y});
        const int c2l = sol.tau(sol.tau(y, x), sol.tau(sol.sigma(x, y), e));
        const int c2r = sol.tau(y, sol.tau(x, e));
        if (c2l != c2r) out.c2_violations.push_back({e, x, y});
      }
    }
  }
  return out;
}

SparseMat linearize(const FiniteSolution& sol, bool braid) {
  const int n = sol.size();
  const long d2 = static_cast<long>(n) * n;
  SparseMat m(d2, d2);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const auto [u, v] = sol.braid_map(x, y);
      if (braid) {
        // sum e_{x,sigma_x(y)} (x) e_{y,tau_y(x)}
        m.add_at(static_cast<long>(x) * n + y, static_cast<long>(u) * n + v, Scalar(1));
      } else {
        // r = P rcheck = sum e_{y,sigma_x(y)} (x) e_{x,tau_y(x)}
        m.add_at(static_cast<long>(y) * n + x, static_cast<long>(u) * n + v, Scalar(1));
      }
    }
  }
  return m;
}

std::vector<FiniteSolution> enumerate_solutions(int n) {
  if (n <= 0) throw MalformedInput("enumeration size must be positive");
  if (n > 4)
    throw ResourceLimit("solution enumeration is bounded to n <= 4 (search space (n!)^n)");

  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  std::vector<FiniteSolution> out;
  // sigma rows run in lexicographic order; involutivity forces
  // tau_y(x) = sigma_{sigma_x(y)}^{-1}(x), so tau is derived and checked.
  std::vector<size_t> pick(static_cast<size_t>(n), 0);
  const size_t np = perms.size();
  while (true) {
    FiniteSolution::Table sigma;
    sigma.reserve(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) sigma.push_back(perms[pick[static_cast<size_t>(r)]]);

    std::vector<std::vector<int>> sigma_inv(static_cast<size_t>(n), std::vector<int>(n));
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) sigma_inv[static_cast<size_t>(r)][static_cast<size_t>(sigma[static_cast<size_t>(r)][static_cast<size_t>(c)])] = c;
    }
    FiniteSolution::Table tau(static_cast<size_t>(n), std::vector<int>(n));
    bool rows_ok = true;
    for (int y = 0; y < n && rows_ok; ++y) {
      std::vector<char> seen(static_cast<size_t>(n), 0);
      for (int x = 0; x < n; ++x) {
        const int u = sigma[static_cast<size_t>(x)][static_cast<size_t>(y)];
        const int t = sigma_inv[static_cast<size_t>(u)][static_cast<size_t>(x)];
        tau[static_cast<size_t>(y)][static_cast<size_t>(x)] = t;
        if (seen[static_cast<size_t>(t)]++) rows_ok = false;
      }
    }
    if (rows_ok) {
      // Cheap map-level screen before the full (matrix-level) validation.
      auto bm = [&](int x, int y) {
        return std::pair<int, int>{sigma[static_cast<size_t>(x)][static_cast<size_t>(y)],
                                   tau[static_cast<size_t>(y)][static_cast<size_t>(x)]};
      };
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) {
        for (int y = 0; y < n && ok; ++y) {
          const auto [u, v] = bm(x, y);
          ok = bm(u, v) == std::pair<int, int>{x, y};
        }
      }
      for (int x = 0; x < n && ok; ++x) {
        for (int y = 0; y < n && ok; ++y) {
          for (int z = 0; z < n && ok; ++z) {
            const auto [a1, b1] = bm(x, y);
            const auto [a2, b2] = bm(b1, z);
            const auto [a3, b3] = bm(a1, a2);
            const auto [c1, d1] = bm(y, z);
            const auto [c2, d2] = bm(x, c1);
            const auto [c3, d3] = bm(d2, d1);
            ok = std::array<int, 3>{a3, b3, b2} == std::array<int, 3>{c2, c3, d3};
          }
        }
      }
      if (ok) {
        FiniteSolution cand = FiniteSolution::make(n, sigma, tau);
        Report rep = validate_solution(cand);
        if (rep.all_pass()) out.push_back(std::move(cand));
      }
    }

    int pos = n - 1;
    while (pos >= 0 && pick[static_cast<size_t>(pos)] + 1 == np) {
      pick[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++pick[static_cast<size_t>(pos)];
  }
  return out;
}

}  // namespace ybe
