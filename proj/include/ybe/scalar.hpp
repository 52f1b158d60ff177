#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ybe {

using Rational = boost::multiprecision::cpp_rational;

// Exact ring scalar: a sparse polynomial over Q in at most two named
// indeterminates. Slot 0 carries the spectral parameter of univariate
// identities; slots 0 and 1 together carry the two parameters of bivariate
// ones. A plain rational is a degree-zero polynomial. Canonical form: no
// zero coefficients are stored.
class Scalar {
 public:
  // (exponent of slot 0, exponent of slot 1) -> coefficient
  using Key = std::array<int, 2>;
  using TermMap = std::map<Key, Rational>;

  Scalar() = default;
  Scalar(long v);                 // NOLINT: implicit by design
  Scalar(const Rational& v);      // NOLINT: implicit by design

  // The monomial slot^power.
  static Scalar var(int slot, int power = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant scalar (zero for the empty polynomial).
  Rational constant() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  Scalar operator-() const;

  bool operator==(const Scalar& o) const { return terms_ == o.terms_; }

  int degree(int slot) const;
  bool uses(int slot) const { return degree(slot) > 0; }

  // Substitutes rationals for the used slots. Missing assignments for a used
  // slot throw MalformedInput.
  Scalar eval(const std::vector<std::pair<int, Rational>>& assign) const;

  // Canonical rendering, ascending exponents, e.g. "1 - 2*l1 + l1^2*l2".
  std::string str(const std::array<std::string, 2>& names = {"l1", "l2"}) const;

  const TermMap& terms() const { return terms_; }

 private:
  void add_term(const Key& k, const Rational& c);
  TermMap terms_;
};

}  // namespace ybe
