#include "ybe/baxter.hpp"

#include "ybe/errors.hpp"
#include "ybe/multitwist.hpp"
#include "ybe/twist.hpp"

namespace ybe {

SparseMat rcheck_at(const FiniteSolution& sol, const Scalar& arg) {
  const long d2 = static_cast<long>(sol.size()) * sol.size();
  return linearize(sol, true).scaled(arg) + SparseMat::identity(d2);
}

SparseMat r_at(const FiniteSolution& sol, const Scalar& arg) {
  return linearize(sol, false).scaled(arg) + perm_op(sol.size());
}

SparseMat yangian_at(int n, const Scalar& arg) {
  const long d2 = static_cast<long>(n) * n;
  return SparseMat::identity(d2).scaled(arg) + perm_op(n);
}

BaxterizedR baxterize(const FiniteSolution& sol) {
  BaxterizedR b;
  b.n = sol.size();
  const Scalar l = Scalar::var(0);
  b.check_form = rcheck_at(sol, l);
  b.r_form = r_at(sol, l);
  b.yangian = yangian_at(sol.size(), l);
  return b;
}

Report verify_spectral_ybe(const FiniteSolution& sol) {
  const int n = sol.size();
  Report rep;
  const Scalar l1 = Scalar::var(0), l2 = Scalar::var(1);
  const SparseMat rd = rcheck_at(sol, l1 - l2);
  const SparseMat r1 = rcheck_at(sol, l1);
  const SparseMat r2 = rcheck_at(sol, l2);
  auto on12 = [&](const SparseMat& m) { return embed(m, {0, 1}, 3, n); };
  auto on23 = [&](const SparseMat& m) { return embed(m, {1, 2}, 3, n); };
  const SparseMat lhs = on12(rd) * on23(r1) * on12(r2);
  const SparseMat rhs = on23(r2) * on12(r1) * on23(rd);
  check_equal(rep, "baxter.ybe", lhs, rhs);
  return rep;
}

Report verify_unitarity(const FiniteSolution& sol) {
  const int n = sol.size();
  Report rep;
  const Scalar l = Scalar::var(0);
  const SparseMat r12 = r_at(sol, l);
  const SparseMat r21 = permute_legs(r_at(sol, -l), {1, 0}, n);
  const Scalar factor = Scalar(1) - l * l;
  check_equal(rep, "baxter.unitarity", r12 * r21,
              SparseMat::identity(static_cast<long>(n) * n).scaled(factor));
  return rep;
}

Report verify_crossing(const FiniteSolution& sol) {
  const int n = sol.size();
  Report rep;
  const Scalar l = Scalar::var(0);
  // N in the crossing factor is the set cardinality.
  const Scalar shifted = -l - Scalar(n);
  const SparseMat lhs =
      partial_transpose(r_at(sol, l), 0, n) * partial_transpose(r_at(sol, shifted), 1, n);
  const Scalar factor = l * shifted;
  check_equal(rep, "baxter.crossing", lhs,
              SparseMat::identity(static_cast<long>(n) * n).scaled(factor));
  const SparseMat tt = partial_transpose(partial_transpose(r_at(sol, l), 0, n), 1, n);
  check_equal(rep, "baxter.tt", tt, permute_legs(r_at(sol, l), {1, 0}, n));
  return rep;
}

Report verify_yangian_twist(const FiniteSolution& sol) {
  const int n = sol.size();
  Report rep;
  const Scalar l = Scalar::var(0);
  const SparseMat f = twist_closed_form(sol);
  const SparseMat f21 = permute_legs(f, {1, 0}, n);
  auto f21_inv = try_inverse(f21);
  if (!f21_inv) {
    rep.add("baxter.yangian-twist", false, "twist is singular");
    return rep;
  }
  check_equal(rep, "baxter.yangian-twist", r_at(sol, l), *f21_inv * yangian_at(n, l) * f);
  check_equal(rep, "baxter.perm-invariance", *f21_inv * perm_op(n) * f, perm_op(n));
  return rep;
}

Report verify_baxterized_factorization(const FiniteSolution& sol, int N) {
  const int n = sol.size();
  require_leg_budget(n, N + 1);
  Report rep;
  const Scalar l = Scalar::var(0);
  const int total = N + 1;
  const SparseMat rl = r_at(sol, l);
  const SparseMat rt = yangian_at(n, l);
  SparseMat t0 = embed(rl, {0, N}, total, n);
  SparseMat tt0 = embed(rt, {0, N}, total, n);
  for (int k = N - 1; k >= 1; --k) {
    t0 = t0 * embed(rl, {0, k}, total, n);
    tt0 = tt0 * embed(rt, {0, k}, total, n);
  }
  const SparseMat full = n_twist(sol, N, TwistFlavor::F);
  std::vector<int> seq(static_cast<size_t>(total));
  for (int i = 0; i < N; ++i) seq[static_cast<size_t>(i)] = i + 1;
  seq[static_cast<size_t>(N)] = 0;
  const SparseMat cyc = permute_legs(full, seq, n);
  auto full_inv = try_inverse(full);
  if (!full_inv) {
    rep.add("baxter.monodromy", false, "twist is singular");
    return rep;
  }
  check_equal(rep, "baxter.monodromy", tt0, cyc * t0 * *full_inv);
  // Per-site statement.
  bool per_site = true;
  std::string wit;
  for (int k = 1; k <= N && per_site; ++k) {
    std::vector<int> seq_a, seq_b;
    for (int i = 1; i < k; ++i) {
      seq_a.push_back(i);
      seq_b.push_back(i);
    }
    seq_a.push_back(k);
    seq_a.push_back(0);
    seq_b.push_back(0);
    seq_b.push_back(k);
    for (int i = k + 1; i <= N; ++i) {
      seq_a.push_back(i);
      seq_b.push_back(i);
    }
    const SparseMat fa = permute_legs(full, seq_a, n);
    const SparseMat fb = permute_legs(full, seq_b, n);
    const SparseMat lhs = fa * embed(rl, {0, k}, total, n);
    const SparseMat rhs = embed(rt, {0, k}, total, n) * fb;
    if (!(lhs == rhs)) {
      per_site = false;
      wit = "site " + std::to_string(k) + ": " + diff_witness(lhs, rhs);
    }
  }
  rep.add("baxter.per-site", per_site, wit);
  return rep;
}

}  // namespace ybe
