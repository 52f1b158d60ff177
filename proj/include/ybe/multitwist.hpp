#pragma once

#include <utility>

#include "ybe/report.hpp"
#include "ybe/solution.hpp"

namespace ybe {

// The two-site twist admits two flavors: F = sum e_{x,x} (x) e_{sigma_x(y),y}
// filtered by C1 in its coproduct extensions, and the alternative
// G = sum e_{tau_y(x),x} (x) e_{y,y} filtered by C2.
enum class TwistFlavor { F, G };

struct TwistFamily {
  TwistFlavor flavor = TwistFlavor::F;
  int sites = 2;         // legs beyond leg 0 when built by n_twist
  SparseMat base;        // 2-site twist
  SparseMat f_0_12;      // 3-leg split, legs (0 | 1 2)
  SparseMat f_01_2;      // 3-leg split, legs (0 1 | 2)
  SparseMat f_012;       // 3-twist
  SparseMat full;        // (sites+1)-leg twist
  SparseMat split_tail;  // f_{0,1..n}
  SparseMat split_head;  // f_{01..n-1,n}
};

// The pair (f_{0,12}, f_{01,2}) with the constraint filter applied literally
// (it is vacuous on valid brace solutions).
std::pair<SparseMat, SparseMat> coproduct_twists(const FiniteSolution& sol, TwistFlavor flavor);

// Commutation of the coproduct twists with rcheck on the joined legs, plus
// the r-matrix versions obtained by permutation conjugation.
Report verify_intertwining(const FiniteSolution& sol, TwistFlavor flavor);

// Computes both cocycle products f_01 f_{01,2} and f_12 f_{0,12}; throws
// AdmissibilityFailure when they differ and InternalError when the printed
// closed forms disagree with the product. Returns the common value f_012.
SparseMat cocycle_three(const FiniteSolution& sol, TwistFlavor flavor);

// Builds the (n+1)-leg twist by the generalized cocycle recursion, both
// left-to-right and right-to-left, asserts both agree with the closed form.
SparseMat n_twist(const FiniteSolution& sol, int n, TwistFlavor flavor);

TwistFamily build_twist_family(const FiniteSolution& sol, int n, TwistFlavor flavor);

// T_{0,1..N} = r_{0N} ... r_{01}; for N=2 the printed closed form is
// asserted as well.
SparseMat monodromy(const FiniteSolution& sol, int N);

// Factorization T_{0,1..N} = f_{12..N0}^{-1} f_{01..N}; at N=2 additionally
// re-derives the substitution chain of the direct computation.
Report verify_factorization(const FiniteSolution& sol, int N, TwistFlavor flavor);

// Everything above as one per-identity report (the verify-twist command).
Report twist_report(const FiniteSolution& sol, int n, TwistFlavor flavor);

// Refuses leg counts with dim^legs beyond the desk-scale budget of 10^6
// basis states.
void require_leg_budget(int dim, int legs);

}  // namespace ybe
