#pragma once

#include <vector>

#include "ybe/report.hpp"
#include "ybe/solution.hpp"

namespace ybe {

// Evaluation representation of the quantum algebra: L(l) = r + l^{-1} P,
// stored blockwise. L0[z][w] is block (z,w) of r on the first leg,
// L1[z][w] = e_{w,z} the corresponding block of P; higher orders vanish.
struct EvaluationRep {
  int n = 0;
  std::vector<std::vector<SparseMat>> L0;
  std::vector<std::vector<SparseMat>> L1;

  // L^{(m)}_{z,w}, with m >= 2 equal to the zero matrix.
  SparseMat L(int order, int z, int w) const;
};

// Builds the blocks and runs the RTT sanity check; a failure there signals a
// convention bug and raises InternalError.
EvaluationRep build_evaluation_rep(const FiniteSolution& sol);

// RTT on (aux1, aux2, quantum) legs after clearing the l^{-1} denominators:
// Rcheck_12(l1-l2) (l1 L_1(l1)) (l2 L_2(l2)) =
// (l2 L_1(l2)) (l1 L_2(l1)) Rcheck_12(l1-l2), exactly in Q[l1,l2].
// Also asserts the blocks reassemble to l*r + P.
Report verify_rtt(const FiniteSolution& sol);

// The defining relations on generators, all (z,w,z^,w^) in X^4 and
// (n,m) in {0,1}^2, as NxN matrix identities.
Report verify_fund2(const FiniteSolution& sol);

// T_{1,23} = r_13 r_12 equals the printed closed form, and every block
// Delta(L_{a,b}) commutes with rcheck on the quantum legs.
Report coproduct_blocks(const FiniteSolution& sol);

}  // namespace ybe
