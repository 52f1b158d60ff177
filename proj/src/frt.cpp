#include "ybe/frt.hpp"

#include "ybe/errors.hpp"

namespace ybe {

namespace {

// (z,w) block on the first leg of a two-leg matrix: B[a,b] = M[(z,a),(w,b)].
SparseMat block(const SparseMat& m, int z, int w, int n) {
  SparseMat b(n, n);
  for (const auto& [rc, v] : m.entries()) {
    if (rc.first / n == z && rc.second / n == w) b.set(rc.first % n, rc.second % n, v);
  }
  return b;
}

// l * L_j(l) on (aux1, aux2, quantum): matrix units on the aux leg, blocks on
// the quantum leg. Reassembled from the stored blocks so the test exercises
// the block decomposition, not the r-matrix directly.
SparseMat cleared_L(const EvaluationRep& rep, int aux, const Scalar& l) {
  const int n = rep.n;
  const long D = static_cast<long>(n) * n * n;
  SparseMat out(D, D);
  for (int z = 0; z < n; ++z) {
    for (int w = 0; w < n; ++w) {
      const SparseMat lzw = rep.L0[static_cast<size_t>(z)][static_cast<size_t>(w)].scaled(l) +
                            rep.L1[static_cast<size_t>(z)][static_cast<size_t>(w)];
      if (lzw.is_zero()) continue;
      const SparseMat unit = SparseMat::unit(n, z, w);
      const SparseMat factor =
          aux == 0 ? kron(kron(unit, SparseMat::identity(n)), lzw)
                   : kron(kron(SparseMat::identity(n), unit), lzw);
      out = out + factor;
    }
  }
  return out;
}

bool rtt_holds(const EvaluationRep& rep, const FiniteSolution& sol, std::string* witness) {
  const int n = rep.n;
  const Scalar l1 = Scalar::var(0), l2 = Scalar::var(1);
  const SparseMat rc =
      linearize(sol, true).scaled(l1 - l2) + SparseMat::identity(static_cast<long>(n) * n);
  const SparseMat rc12 = embed(rc, {0, 1}, 3, n);
  const SparseMat lhs = rc12 * cleared_L(rep, 0, l1) * cleared_L(rep, 1, l2);
  const SparseMat rhs = cleared_L(rep, 0, l2) * cleared_L(rep, 1, l1) * rc12;
  if (lhs == rhs) return true;
  if (witness) *witness = diff_witness(lhs, rhs);
  return false;
}

}  // namespace

SparseMat EvaluationRep::L(int order, int z, int w) const {
  if (order == 0) return L0[static_cast<size_t>(z)][static_cast<size_t>(w)];
  if (order == 1) return L1[static_cast<size_t>(z)][static_cast<size_t>(w)];
  return SparseMat(n, n);
}

EvaluationRep build_evaluation_rep(const FiniteSolution& sol) {
  const int n = sol.size();
  EvaluationRep rep;
  rep.n = n;
  const SparseMat r = linearize(sol, false);
  const SparseMat p = perm_op(n);
  rep.L0.resize(static_cast<size_t>(n));
  rep.L1.resize(static_cast<size_t>(n));
  for (int z = 0; z < n; ++z) {
    for (int w = 0; w < n; ++w) {
      rep.L0[static_cast<size_t>(z)].push_back(block(r, z, w, n));
      rep.L1[static_cast<size_t>(z)].push_back(block(p, z, w, n));
    }
  }
  std::string wit;
  if (!rtt_holds(rep, sol, &wit))
    throw InternalError("evaluation representation fails RTT: " + wit);
  return rep;
}

Report verify_rtt(const FiniteSolution& sol) {
  const int n = sol.size();
  Report rep;
  const EvaluationRep ev = build_evaluation_rep(sol);
  std::string wit;
  const bool ok = rtt_holds(ev, sol, &wit);
  rep.add("frt.rtt", ok, wit);
  // Reassembly: sum_{z,w} e_{z,w} (x) (l L0 + L1)_{z,w} = l*r + P on two legs.
  const Scalar l = Scalar::var(0);
  const long d2 = static_cast<long>(n) * n;
  SparseMat assembled(d2, d2);
  for (int z = 0; z < n; ++z) {
    for (int w = 0; w < n; ++w) {
      const SparseMat lzw = ev.L0[static_cast<size_t>(z)][static_cast<size_t>(w)].scaled(l) +
                            ev.L1[static_cast<size_t>(z)][static_cast<size_t>(w)];
      assembled = assembled + kron(SparseMat::unit(n, z, w), lzw);
    }
  }
  check_equal(rep, "frt.reassembly", assembled, linearize(sol, false).scaled(l) + perm_op(n));
  return rep;
}

Report verify_fund2(const FiniteSolution& sol) {
  const int n = sol.size();
  Report rep;
  const EvaluationRep ev = build_evaluation_rep(sol);
  bool ok = true;
  std::string wit;
  for (int z = 0; z < n && ok; ++z) {
    for (int w = 0; w < n && ok; ++w) {
      for (int zh = 0; zh < n && ok; ++zh) {
        for (int wh = 0; wh < n && ok; ++wh) {
          const int sw = sol.sigma(w, wh);
          const int tw = sol.tau(wh, w);
          const int sz = sol.sigma(z, zh);
          const int tz = sol.tau(zh, z);
          for (int nn = 0; nn <= 1 && ok; ++nn) {
            for (int mm = 0; mm <= 1 && ok; ++mm) {
              const SparseMat lhs =
                  ev.L(nn, z, w) * ev.L(mm, zh, wh) - ev.L(mm, z, w) * ev.L(nn, zh, wh);
              const SparseMat rhs = ev.L(mm, z, sw) * ev.L(nn + 1, zh, tw) -
                                    ev.L(mm + 1, z, sw) * ev.L(nn, zh, tw) -
                                    ev.L(nn + 1, sz, w) * ev.L(mm, tz, wh) +
                                    ev.L(nn, sz, w) * ev.L(mm + 1, tz, wh);
              if (!(lhs == rhs)) {
                ok = false;
                wit = "(z,w,z^,w^,n,m)=(" + std::to_string(z) + "," + std::to_string(w) + "," +
                      std::to_string(zh) + "," + std::to_string(wh) + "," + std::to_string(nn) +
                      "," + std::to_string(mm) + ")";
              }
            }
          }
        }
      }
    }
  }
  rep.add("frt.fund2", ok, wit);
  return rep;
}

Report coproduct_blocks(const FiniteSolution& sol) {
  const int n = sol.size();
  Report rep;
  const SparseMat r = linearize(sol, false);
  const SparseMat t123 = embed(r, {0, 2}, 3, n) * embed(r, {0, 1}, 3, n);
  // Printed closed form of T_{1,23}.
  SparseMat closed(t123.rows(), t123.cols());
  for (int e = 0; e < n; ++e) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        const long row = (static_cast<long>(sol.tau(y, x)) * n + e) * n + sol.sigma(x, y);
        const long col = (static_cast<long>(sol.sigma(e, x)) * n + sol.tau(x, e)) * n + y;
        closed.add_at(row, col, Scalar(1));
      }
    }
  }
  check_equal(rep, "frt.coproduct-closed-form", t123, closed);

  const SparseMat rc = linearize(sol, true);
  bool ok = true;
  std::string wit;
  const long d2 = static_cast<long>(n) * n;
  for (int a = 0; a < n && ok; ++a) {
    for (int b = 0; b < n && ok; ++b) {
      SparseMat delta(d2, d2);
      for (const auto& [rc_idx, v] : t123.entries()) {
        if (rc_idx.first / d2 == a && rc_idx.second / d2 == b)
          delta.set(rc_idx.first % d2, rc_idx.second % d2, v);
      }
      if (!(delta * rc == rc * delta)) {
        ok = false;
        wit = "block (" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
    }
  }
  rep.add("frt.coproduct-commutes", ok, wit);
  return rep;
}

}  // namespace ybe
