#pragma once

#include <vector>

#include "ybe/report.hpp"
#include "ybe/solution.hpp"

namespace ybe {

// Paired eigenvectors of the permutation operator and of the braid matrix,
// sharing eigenvalues. Vectors are kept as unnormalized integer vectors; the
// sqrt(2) normalizations collapse to a shared 1/2 weight applied at
// outer-product time, keeping all arithmetic rational.
struct EigenPairing {
  struct Pair {
    std::vector<long> v_perm;   // eigenvector of P
    std::vector<long> v_braid;  // eigenvector of rcheck
    int eigenvalue = 1;         // +1 or -1, shared
    bool halved = false;        // outer product carries weight 1/2
  };
  int dim = 0;  // N^2
  std::vector<Pair> pairs;
};

// Fixed points of rcheck pair with diagonal vectors; each non-fixed orbit
// {(x,y),(sigma_x(y),tau_y(x))} pairs with the permutation orbit
// {(x,sigma_x(y)),(sigma_x(y),x)}, symmetric with symmetric and antisymmetric
// with antisymmetric; orbit representatives are lexicographically smallest.
EigenPairing build_eigen_pairing(const FiniteSolution& sol);

// F^{-1} = sum_k Vhat_k V_k^T = sum_{x,y} e_{x,x} (x) e_{y,sigma_x(y)}.
SparseMat twist_from_eigen(const FiniteSolution& sol);

// F = sum_{x,y} e_{x,x} (x) e_{sigma_x(y),y}; F^{-1} equals its transpose.
SparseMat twist_closed_form(const FiniteSolution& sol);

// G = sum_{x,y} e_{tau_y(x),x} (x) e_{y,y}.
SparseMat twist_alt(const FiniteSolution& sol);

// Checks rcheck = f^{-1} P f and r = (P f P)^{-1} f.
Report verify_similarity(const FiniteSolution& sol, const SparseMat& f);

}  // namespace ybe
