#include "ybe/twist.hpp"

#include <algorithm>

#include "ybe/errors.hpp"

namespace ybe {

namespace {

std::vector<long> basis_vec(int dim, int pos, int sign_pos = -1, int sign = 0) {
  std::vector<long> v(static_cast<size_t>(dim), 0);
  v[static_cast<size_t>(pos)] = 1;
  if (sign_pos >= 0) v[static_cast<size_t>(sign_pos)] = sign;
  return v;
}

}  // namespace

EigenPairing build_eigen_pairing(const FiniteSolution& sol) {
  const int n = sol.size();
  const int dim = n * n;
  EigenPairing ep;
  ep.dim = dim;

  // Fixed points (x, y) = (sigma_x(y), tau_y(x)); for involutive solutions
  // sigma_x(y) = x already forces tau_y(x) = y, which we re-check.
  std::vector<std::pair<int, int>> fixed;
  for (int x = 0; x < n; ++x) {
    const int y = sol.sigma_inv(x, x);
    const auto [u, v] = sol.braid_map(x, y);
    if (u == x && v == y) fixed.emplace_back(x, y);
  }
  if (static_cast<int>(fixed.size()) != n)
    throw InternalError("eigen pairing: fixed-point count != N; solution is not involutive");

  std::vector<EigenPairing::Pair> plus, minus;
  for (const auto& [x, y] : fixed) {
    EigenPairing::Pair p;
    p.v_braid = basis_vec(dim, x * n + y);
    p.v_perm = basis_vec(dim, x * n + x);
    p.eigenvalue = 1;
    p.halved = false;
    plus.push_back(std::move(p));
  }

  // Non-fixed orbits, representatives in lexicographic order.
  std::vector<char> seen(static_cast<size_t>(dim), 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (seen[static_cast<size_t>(x * n + y)]) continue;
      const auto [u, v] = sol.braid_map(x, y);
      if (u == x && v == y) continue;  // fixed point
      seen[static_cast<size_t>(x * n + y)] = 1;
      seen[static_cast<size_t>(u * n + v)] = 1;
      EigenPairing::Pair sym;
      sym.v_braid = basis_vec(dim, x * n + y, u * n + v, +1);
      sym.v_perm = basis_vec(dim, x * n + u, u * n + x, +1);
      sym.eigenvalue = 1;
      sym.halved = true;
      plus.push_back(std::move(sym));
      EigenPairing::Pair anti;
      anti.v_braid = basis_vec(dim, x * n + y, u * n + v, -1);
      anti.v_perm = basis_vec(dim, x * n + u, u * n + x, -1);
      anti.eigenvalue = -1;
      anti.halved = true;
      minus.push_back(std::move(anti));
    }
  }

  ep.pairs = std::move(plus);
  ep.pairs.insert(ep.pairs.end(), minus.begin(), minus.end());
  if (static_cast<int>(ep.pairs.size()) != dim)
    throw InternalError("eigen pairing: pair count != N^2");
  return ep;
}

SparseMat twist_from_eigen(const FiniteSolution& sol) {
  const EigenPairing ep = build_eigen_pairing(sol);
  const int dim = ep.dim;
  SparseMat acc(dim, dim);
  const Scalar half(Rational(1, 2));
  for (const auto& p : ep.pairs) {
    for (int r = 0; r < dim; ++r) {
      if (p.v_braid[static_cast<size_t>(r)] == 0) continue;
      for (int c = 0; c < dim; ++c) {
        if (p.v_perm[static_cast<size_t>(c)] == 0) continue;
        Scalar term(p.v_braid[static_cast<size_t>(r)] * p.v_perm[static_cast<size_t>(c)]);
        if (p.halved) term *= half;
        acc.add_at(r, c, term);
      }
    }
  }
  return acc;
}

SparseMat twist_closed_form(const FiniteSolution& sol) {
  const int n = sol.size();
  SparseMat f(static_cast<long>(n) * n, static_cast<long>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      f.add_at(static_cast<long>(x) * n + sol.sigma(x, y), static_cast<long>(x) * n + y, Scalar(1));
    }
  }
  return f;
}

SparseMat twist_alt(const FiniteSolution& sol) {
  const int n = sol.size();
  SparseMat g(static_cast<long>(n) * n, static_cast<long>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      g.add_at(static_cast<long>(sol.tau(y, x)) * n + y, static_cast<long>(x) * n + y, Scalar(1));
    }
  }
  return g;
}

Report verify_similarity(const FiniteSolution& sol, const SparseMat& f) {
  const int n = sol.size();
  Report rep;
  auto finv = try_inverse(f);
  if (!finv) {
    rep.add("similarity", false, "twist is singular");
    rep.add("factorization", false, "twist is singular");
    return rep;
  }
  const SparseMat p = perm_op(n);
  check_equal(rep, "similarity", *finv * p * f, linearize(sol, true));
  const SparseMat f_op = permute_legs(f, {1, 0}, n);
  auto fop_inv = try_inverse(f_op);
  check_equal(rep, "factorization", *fop_inv * f, linearize(sol, false));
  return rep;
}

}  // namespace ybe
