#pragma once

#include "ybe/report.hpp"
#include "ybe/solution.hpp"

namespace ybe {

// Spectral-parameter solutions attached to a braid involution:
// Rcheck(l) = l*rcheck + I, R(l) = P Rcheck(l) = l*r + P, and the Yangian
// R~(l) = l*I + P. Scalar slot 0 carries l (and l1 in bivariate checks),
// slot 1 carries l2.
struct BaxterizedR {
  int n = 0;
  SparseMat check_form;
  SparseMat r_form;
  SparseMat yangian;
};

BaxterizedR baxterize(const FiniteSolution& sol);

// Rcheck with an arbitrary polynomial argument substituted for the spectral
// parameter (used for differences like l1 - l2).
SparseMat rcheck_at(const FiniteSolution& sol, const Scalar& arg);
SparseMat r_at(const FiniteSolution& sol, const Scalar& arg);
SparseMat yangian_at(int n, const Scalar& arg);

// Rcheck_12(l1-l2) Rcheck_23(l1) Rcheck_12(l2) =
// Rcheck_23(l2) Rcheck_12(l1) Rcheck_23(l1-l2), exactly in Q[l1,l2].
Report verify_spectral_ybe(const FiniteSolution& sol);

// R_12(l) R_21(-l) = (1 - l^2) I.
Report verify_unitarity(const FiniteSolution& sol);

// R^{t1}(l) R^{t2}(-l-N) = l(-l-N) I, and R^{t1 t2}(l) = R_21(l).
Report verify_crossing(const FiniteSolution& sol);

// R(l) = F_21^{-1} R~(l) F_12 and F_21^{-1} P F_12 = P.
Report verify_yangian_twist(const FiniteSolution& sol);

// T~_0(l) = F_{12..N0} T_0(l) F_{012..N}^{-1} with T_0(l) = R_{0N}(l)...R_{01}(l),
// plus the per-site statement
// F_{1..n-1 n 0 n+1..N} R_0n(l) = R~_0n(l) F_{1..n-1 0 n n+1..N}.
Report verify_baxterized_factorization(const FiniteSolution& sol, int N);

}  // namespace ybe
