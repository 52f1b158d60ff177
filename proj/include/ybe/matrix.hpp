#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybe/scalar.hpp"

namespace ybe {

// Exact sparse matrix over the Scalar ring. Zero entries are never stored,
// so equality is structural equality of canonical forms. Tensor basis
// convention throughout: (a, b) -> a*dim + b, leftmost factor most
// significant.
class SparseMat {
 public:
  using Index = std::pair<long, long>;
  using EntryMap = std::map<Index, Scalar>;

  SparseMat() = default;
  SparseMat(long rows, long cols) : rows_(rows), cols_(cols) {}

  static SparseMat identity(long n);
  // The matrix unit e_{r,c} of size n x n.
  static SparseMat unit(long n, long r, long c);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  long nnz() const { return static_cast<long>(e_.size()); }

  Scalar at(long r, long c) const;
  void set(long r, long c, Scalar v);
  void add_at(long r, long c, const Scalar& v);

  SparseMat operator*(const SparseMat& o) const;
  SparseMat operator+(const SparseMat& o) const;
  SparseMat operator-(const SparseMat& o) const;
  SparseMat scaled(const Scalar& s) const;
  SparseMat transpose() const;

  bool operator==(const SparseMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

  bool is_zero() const { return e_.empty(); }
  bool is_identity() const;
  // Exactly one entry per row and per column, every entry equal to 1.
  bool is_permutation() const;

  // First differing entry against o in row-major order, as
  // (row, col, this value, other value).
  std::optional<std::tuple<long, long, Scalar, Scalar>> first_diff(const SparseMat& o) const;

  SparseMat eval(const std::vector<std::pair<int, Rational>>& assign) const;

  // Coordinate text form "row col value", row-major, canonical polynomial
  // rendering. Uses "l" for slot 0 when slot 1 is unused anywhere.
  std::string dump() const;

  const EntryMap& entries() const { return e_; }

 private:
  long rows_ = 0, cols_ = 0;
  EntryMap e_;
};

SparseMat kron(const SparseMat& a, const SparseMat& b);

// The operator acting as op on the listed legs (in the given order) and as
// the identity on the rest of `total` legs of dimension `dim` each.
// embed(op, {2, 1}, ...) realizes subscript notation like F_{21}.
SparseMat embed(const SparseMat& op, const std::vector<int>& legs, int total, int dim);

// Relabels tensor legs: construction slot i of m becomes physical leg
// slot_to_leg[i]. Equivalent to conjugation by the corresponding leg
// permutation operator.
SparseMat permute_legs(const SparseMat& m, const std::vector<int>& slot_to_leg, int dim);

// Transposes the indices of one leg of a dim^2 x dim^2 matrix.
SparseMat partial_transpose(const SparseMat& a, int leg, int dim);

// Permutation matrices invert by transposition; constant rational matrices
// by exact Gaussian elimination. Returns nullopt when singular; throws
// MalformedInput for polynomial-valued input.
std::optional<SparseMat> try_inverse(const SparseMat& a);

// The permutation operator P on two legs of dimension n.
SparseMat perm_op(int n);

}  // namespace ybe
