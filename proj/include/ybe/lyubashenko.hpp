#pragma once

#include <vector>

#include "ybe/multitwist.hpp"
#include "ybe/report.hpp"
#include "ybe/solution.hpp"

namespace ybe {

// Constant-map solutions built from a single permutation tau (sigma is its
// inverse), with V = sum e_{x,tau(x)}.
struct LyubashenkoData {
  int n = 0;
  std::vector<int> tau;
  std::vector<int> sigma;
  SparseMat V;
  SparseMat Vinv;

  // V^p for any integer p (negative powers via Vinv).
  SparseMat v_power(int p) const;
};

LyubashenkoData lyubashenko_data(const std::vector<int>& tau_perm);

// sigma_x(y) = sigma(y), tau_y(x) = tau(x).
FiniteSolution lyubashenko_solution(const std::vector<int>& tau_perm);

// rcheck = (V (x) I) P (V^{-1} (x) I) = (I (x) V^{-1}) P (I (x) V).
Report verify_conjugation(const LyubashenkoData& d);

// Product-form twist: prod_k V_k^k (F flavor) or prod_k V_k^{-(n-k)} (G).
// Cross-checked against the generic multi-twist recursion and the split
// forms F_{0,12..n} = V_1...V_n, F_{12..n,0} = V_0^n (and the G analogues).
SparseMat lyu_n_twist(const LyubashenkoData& d, int n, TwistFlavor flavor);

// F_{12..N0}^{-1} F_{012..N} = T_{0,12..N}, with the intermediate lemma
// r_{0n} = V_0^{-1} V_n checked per site.
Report verify_lyu_factorization(const LyubashenkoData& d, int N);

// Counit / antipode / twisted-coproduct observations. The counit acts on
// tagged operands (identity, V-powers, matrix units), never on raw matrices.
Report curious_observations(const LyubashenkoData& d);

// --- Tagged operands for the counit machinery -------------------------------

struct LegTag {
  enum class Kind { Identity, VPower, Unit };
  Kind kind = Kind::Identity;
  int power = 0;       // VPower exponent
  int ux = 0, uy = 0;  // Unit indices

  static LegTag identity() { return {}; }
  static LegTag v_power(int p) { return {Kind::VPower, p, 0, 0}; }
  static LegTag unit(int x, int y) { return {Kind::Unit, 0, x, y}; }
};

struct TaggedTerm {
  Rational coeff = Rational(1);
  std::vector<LegTag> legs;
};

// A formal sum of elementary tensors whose factors are named algebra
// elements. Epsilon and the coproducts act on the names; materialize turns a
// term list into an exact matrix.
class TaggedTensor {
 public:
  TaggedTensor(int dim, std::vector<TaggedTerm> terms)
      : dim_(dim), terms_(std::move(terms)) {}

  int legs() const;

  // epsilon at one leg: identity and V-powers evaluate to 1, units to 0; the
  // leg is removed.
  TaggedTensor counit_at(int leg) const;

  // which = 0: group-like coproduct (V^p -> V^p (x) V^p, I -> I (x) I);
  // which = 1/2: the twisted coproducts on matrix units.
  TaggedTensor coproduct_at(int leg, int which, const LyubashenkoData& d) const;

  // Antipode at one leg: V^p -> V^{-p}, units pick up a sign.
  TaggedTensor antipode_at(int leg) const;

  // Swaps the two legs of a 2-leg tensor.
  TaggedTensor flipped() const;

  SparseMat materialize(const LyubashenkoData& d) const;

  // m applied to a 2-leg tensor: the product of the leg factors.
  SparseMat multiply_out(const LyubashenkoData& d) const;

 private:
  int dim_;
  std::vector<TaggedTerm> terms_;
};

}  // namespace ybe
