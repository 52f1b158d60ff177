#pragma once

#include <utility>
#include <vector>

#include "ybe/matrix.hpp"
#include "ybe/report.hpp"

namespace ybe {

// A finite set-theoretic pair of lookup tables on X = {0..n-1}:
// sigma row x is the map y -> sigma_x(y), tau row y is x -> tau_y(x).
// Every row must be a permutation (non-degeneracy is an axiom and is
// enforced at construction); involutivity and the braid relation are
// properties reported by validate_solution.
class FiniteSolution {
 public:
  using Table = std::vector<std::vector<int>>;

  static FiniteSolution make(int n, Table sigma, Table tau);

  int size() const { return n_; }
  int sigma(int x, int y) const { return sigma_[static_cast<size_t>(x)][static_cast<size_t>(y)]; }
  int tau(int y, int x) const { return tau_[static_cast<size_t>(y)][static_cast<size_t>(x)]; }
  int sigma_inv(int x, int v) const {
    return sigma_inv_[static_cast<size_t>(x)][static_cast<size_t>(v)];
  }
  int tau_inv(int y, int v) const { return tau_inv_[static_cast<size_t>(y)][static_cast<size_t>(v)]; }

  // The map (x, y) -> (sigma_x(y), tau_y(x)).
  std::pair<int, int> braid_map(int x, int y) const { return {sigma(x, y), tau(y, x)}; }

  const Table& sigma_table() const { return sigma_; }
  const Table& tau_table() const { return tau_; }

  // The opposite solution (sigma' = tau rows, tau' = sigma rows); valid
  // whenever *this is, and the carrier of the alternative-twist mirror.
  FiniteSolution reversed() const;

  bool operator==(const FiniteSolution& o) const = default;

 private:
  FiniteSolution() = default;
  int n_ = 0;
  Table sigma_, tau_, sigma_inv_, tau_inv_;
};

struct ConstraintReport {
  // Triples (eta, x, y) violating the respective constraint.
  std::vector<std::array<int, 3>> c1_violations;
  std::vector<std::array<int, 3>> c2_violations;
  bool clean() const { return c1_violations.empty() && c2_violations.empty(); }
};

// Reports non-degenerate / involutive / braid (map level and matrix level),
// each with the first counterexample when false.
Report validate_solution(const FiniteSolution& sol);

// Evaluates C1 = sigma_{sigma_eta(x)}(sigma_{tau_x(eta)}(y)) - sigma_eta(sigma_x(y))
// and C2 = tau_{tau_y(x)}(tau_{sigma_x(y)}(eta)) - tau_y(tau_x(eta)) on all of X^3.
ConstraintReport check_constraints(const FiniteSolution& sol);

// braid=true: the involution rcheck = sum e_{x,sigma_x(y)} (x) e_{y,tau_y(x)};
// braid=false: r = P * rcheck.
SparseMat linearize(const FiniteSolution& sol, bool braid);

// Every valid table pair, lexicographic by sigma table; n <= 4.
std::vector<FiniteSolution> enumerate_solutions(int n);

}  // namespace ybe
