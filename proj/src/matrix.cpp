#include "ybe/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "ybe/errors.hpp"

namespace ybe {

namespace {

void check_same_shape(const SparseMat& a, const SparseMat& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw InternalError(std::string("shape mismatch in ") + op);
}

// Digits of idx in base dim, most significant first, length total.
std::vector<int> to_digits(long idx, int total, int dim) {
  std::vector<int> d(static_cast<size_t>(total));
  for (int i = total - 1; i >= 0; --i) {
    d[static_cast<size_t>(i)] = static_cast<int>(idx % dim);
    idx /= dim;
  }
  return d;
}

long from_digits(const std::vector<int>& d, int dim) {
  long idx = 0;
  for (int v : d) idx = idx * dim + v;
  return idx;
}

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

SparseMat SparseMat::identity(long n) {
  SparseMat m(n, n);
  for (long i = 0; i < n; ++i) m.e_[{i, i}] = Scalar(1);
  return m;
}

SparseMat SparseMat::unit(long n, long r, long c) {
  SparseMat m(n, n);
  m.e_[{r, c}] = Scalar(1);
  return m;
}

Scalar SparseMat::at(long r, long c) const {
  auto it = e_.find({r, c});
  return it == e_.end() ? Scalar() : it->second;
}

void SparseMat::set(long r, long c, Scalar v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw InternalError("SparseMat::set out of range");
  if (v.is_zero()) {
    e_.erase({r, c});
  } else {
    e_[{r, c}] = std::move(v);
  }
}

void SparseMat::add_at(long r, long c, const Scalar& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw InternalError("SparseMat::add_at out of range");
  auto it = e_.find({r, c});
  if (it == e_.end()) {
    if (!v.is_zero()) e_.emplace(Index{r, c}, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) e_.erase(it);
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
  if (cols_ != o.rows_) throw InternalError("shape mismatch in operator*");
  SparseMat out(rows_, o.cols_);
  for (const auto& [rc, v] : e_) {
    const auto [i, k] = rc;
    // row k of o
    for (auto it = o.e_.lower_bound({k, 0}); it != o.e_.end() && it->first.first == k; ++it) {
      out.add_at(i, it->first.second, v * it->second);
    }
  }
  return out;
}

SparseMat SparseMat::operator+(const SparseMat& o) const {
  check_same_shape(*this, o, "operator+");
  SparseMat out = *this;
  for (const auto& [rc, v] : o.e_) out.add_at(rc.first, rc.second, v);
  return out;
}

SparseMat SparseMat::operator-(const SparseMat& o) const {
  check_same_shape(*this, o, "operator-");
  SparseMat out = *this;
  for (const auto& [rc, v] : o.e_) out.add_at(rc.first, rc.second, -v);
  return out;
}

SparseMat SparseMat::scaled(const Scalar& s) const {
  SparseMat out(rows_, cols_);
  if (s.is_zero()) return out;
  for (const auto& [rc, v] : e_) out.e_[rc] = v * s;
  return out;
}

SparseMat SparseMat::transpose() const {
  SparseMat out(cols_, rows_);
  for (const auto& [rc, v] : e_) out.e_[{rc.second, rc.first}] = v;
  return out;
}

bool SparseMat::is_identity() const {
  if (rows_ != cols_ || nnz() != rows_) return false;
  for (const auto& [rc, v] : e_) {
    if (rc.first != rc.second || !(v == Scalar(1))) return false;
  }
  return true;
}

bool SparseMat::is_permutation() const {
  if (rows_ != cols_ || nnz() != rows_) return false;
  std::vector<char> col_seen(static_cast<size_t>(cols_), 0);
  long row_prev = -1;
  for (const auto& [rc, v] : e_) {
    if (!(v == Scalar(1))) return false;
    if (rc.first == row_prev) return false;  // two entries in a row
    row_prev = rc.first;
    if (col_seen[static_cast<size_t>(rc.second)]) return false;
    col_seen[static_cast<size_t>(rc.second)] = 1;
  }
  return nnz() == rows_;
}

std::optional<std::tuple<long, long, Scalar, Scalar>> SparseMat::first_diff(
    const SparseMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    return std::tuple<long, long, Scalar, Scalar>{-1, -1, Scalar(), Scalar()};
  auto a = e_.begin();
  auto b = o.e_.begin();
  while (a != e_.end() || b != o.e_.end()) {
    if (b == o.e_.end() || (a != e_.end() && a->first < b->first)) {
      return std::tuple{a->first.first, a->first.second, a->second, Scalar()};
    }
    if (a == e_.end() || b->first < a->first) {
      return std::tuple{b->first.first, b->first.second, Scalar(), b->second};
    }
    if (!(a->second == b->second)) {
      return std::tuple{a->first.first, a->first.second, a->second, b->second};
    }
    ++a;
    ++b;
  }
  return std::nullopt;
}

SparseMat SparseMat::eval(const std::vector<std::pair<int, Rational>>& assign) const {
  SparseMat out(rows_, cols_);
  for (const auto& [rc, v] : e_) {
    Scalar ev = v.eval(assign);
    if (!ev.is_zero()) out.e_[rc] = std::move(ev);
  }
  return out;
}

std::string SparseMat::dump() const {
  bool bivariate = false;
  for (const auto& [rc, v] : e_) bivariate = bivariate || v.uses(1);
  const std::array<std::string, 2> names =
      bivariate ? std::array<std::string, 2>{"l1", "l2"} : std::array<std::string, 2>{"l", "l2"};
  std::ostringstream os;
  for (const auto& [rc, v] : e_) {
    os << rc.first << " " << rc.second << " " << v.str(names) << "\n";
  }
  return os.str();
}

SparseMat kron(const SparseMat& a, const SparseMat& b) {
  SparseMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (const auto& [arc, av] : a.entries()) {
    for (const auto& [brc, bv] : b.entries()) {
      out.set(arc.first * b.rows() + brc.first, arc.second * b.cols() + brc.second, av * bv);
    }
  }
  return out;
}

SparseMat embed(const SparseMat& op, const std::vector<int>& legs, int total, int dim) {
  const int k = static_cast<int>(legs.size());
  if (op.rows() != ipow(dim, k) || op.cols() != ipow(dim, k))
    throw InternalError("embed: operator dimension does not match legs");
  std::vector<char> used(static_cast<size_t>(total), 0);
  for (int l : legs) {
    if (l < 0 || l >= total || used[static_cast<size_t>(l)])
      throw InternalError("embed: bad leg list");
    used[static_cast<size_t>(l)] = 1;
  }
  std::vector<int> idle;
  for (int i = 0; i < total; ++i) {
    if (!used[static_cast<size_t>(i)]) idle.push_back(i);
  }

  const long D = ipow(dim, total);
  SparseMat out(D, D);
  const long idle_count = ipow(dim, total - k);
  std::vector<int> rd(static_cast<size_t>(total)), cd(static_cast<size_t>(total));
  for (const auto& [rc, v] : op.entries()) {
    const auto ord = to_digits(rc.first, k, dim);
    const auto ocd = to_digits(rc.second, k, dim);
    for (long mask = 0; mask < idle_count; ++mask) {
      const auto md = to_digits(mask, total - k, dim);
      for (int i = 0; i < k; ++i) {
        rd[static_cast<size_t>(legs[static_cast<size_t>(i)])] = ord[static_cast<size_t>(i)];
        cd[static_cast<size_t>(legs[static_cast<size_t>(i)])] = ocd[static_cast<size_t>(i)];
      }
      for (size_t i = 0; i < idle.size(); ++i) {
        rd[static_cast<size_t>(idle[i])] = md[i];
        cd[static_cast<size_t>(idle[i])] = md[i];
      }
      out.set(from_digits(rd, dim), from_digits(cd, dim), v);
    }
  }
  return out;
}

SparseMat permute_legs(const SparseMat& m, const std::vector<int>& slot_to_leg, int dim) {
  const int total = static_cast<int>(slot_to_leg.size());
  if (m.rows() != ipow(dim, total) || m.cols() != m.rows())
    throw InternalError("permute_legs: dimension mismatch");
  SparseMat out(m.rows(), m.cols());
  std::vector<int> rd(static_cast<size_t>(total)), cd(static_cast<size_t>(total));
  for (const auto& [rc, v] : m.entries()) {
    const auto ord = to_digits(rc.first, total, dim);
    const auto ocd = to_digits(rc.second, total, dim);
    for (int i = 0; i < total; ++i) {
      rd[static_cast<size_t>(slot_to_leg[static_cast<size_t>(i)])] = ord[static_cast<size_t>(i)];
      cd[static_cast<size_t>(slot_to_leg[static_cast<size_t>(i)])] = ocd[static_cast<size_t>(i)];
    }
    out.set(from_digits(rd, dim), from_digits(cd, dim), v);
  }
  return out;
}

SparseMat partial_transpose(const SparseMat& a, int leg, int dim) {
  const long d2 = static_cast<long>(dim) * dim;
  if (a.rows() != d2 || a.cols() != d2)
    throw InternalError("partial_transpose: dimension mismatch");
  if (leg != 0 && leg != 1) throw InternalError("partial_transpose: leg must be 0 or 1");
  SparseMat out(d2, d2);
  for (const auto& [rc, v] : a.entries()) {
    const long r0 = rc.first / dim, r1 = rc.first % dim;
    const long c0 = rc.second / dim, c1 = rc.second % dim;
    if (leg == 0) {
      out.set(c0 * dim + r1, r0 * dim + c1, v);
    } else {
      out.set(r0 * dim + c1, c0 * dim + r1, v);
    }
  }
  return out;
}

std::optional<SparseMat> try_inverse(const SparseMat& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (a.is_permutation()) return a.transpose();
  const long n = a.rows();
  // Dense exact Gauss-Jordan over Q; only constant matrices are supported.
  std::vector<std::vector<Rational>> m(static_cast<size_t>(n)),
      inv(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) {
    m[static_cast<size_t>(i)].assign(static_cast<size_t>(n), Rational(0));
    inv[static_cast<size_t>(i)].assign(static_cast<size_t>(n), Rational(0));
    inv[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  }
  for (const auto& [rc, v] : a.entries()) {
    if (!v.is_constant())
      throw MalformedInput("matrix inversion requires constant rational entries");
    m[static_cast<size_t>(rc.first)][static_cast<size_t>(rc.second)] = v.constant();
  }
  for (long col = 0; col < n; ++col) {
    long piv = -1;
    for (long r = col; r < n; ++r) {
      if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(col)]);
    std::swap(inv[static_cast<size_t>(piv)], inv[static_cast<size_t>(col)]);
    const Rational p = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
    for (long c = 0; c < n; ++c) {
      m[static_cast<size_t>(col)][static_cast<size_t>(c)] /= p;
      inv[static_cast<size_t>(col)][static_cast<size_t>(c)] /= p;
    }
    for (long r = 0; r < n; ++r) {
      if (r == col) continue;
      const Rational f = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (f == 0) continue;
      for (long c = 0; c < n; ++c) {
        m[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
            f * m[static_cast<size_t>(col)][static_cast<size_t>(c)];
        inv[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
            f * inv[static_cast<size_t>(col)][static_cast<size_t>(c)];
      }
    }
  }
  SparseMat out(n, n);
  for (long r = 0; r < n; ++r) {
    for (long c = 0; c < n; ++c) {
      if (inv[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0)
        out.set(r, c, Scalar(inv[static_cast<size_t>(r)][static_cast<size_t>(c)]));
    }
  }
  return out;
}

SparseMat perm_op(int n) {
  SparseMat p(static_cast<long>(n) * n, static_cast<long>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      p.set(static_cast<long>(x) * n + y, static_cast<long>(y) * n + x, Scalar(1));
    }
  }
  return p;
}

}  // namespace ybe
