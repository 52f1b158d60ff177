#include "ybe/lyubashenko.hpp"

#include "ybe/errors.hpp"

namespace ybe {

namespace {

void require_permutation(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  if (n == 0) throw MalformedInput("permutation must be nonempty");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : p) {
    if (v < 0 || v >= n) throw MalformedInput("permutation entry out of range");
    if (seen[static_cast<size_t>(v)]++) throw MalformedInput("not a permutation (duplicate entry)");
  }
}

}  // namespace

SparseMat LyubashenkoData::v_power(int p) const {
  SparseMat m = SparseMat::identity(n);
  const SparseMat& factor = p >= 0 ? V : Vinv;
  for (int i = 0; i < std::abs(p); ++i) m = m * factor;
  return m;
}

LyubashenkoData lyubashenko_data(const std::vector<int>& tau_perm) {
  require_permutation(tau_perm);
  LyubashenkoData d;
  d.n = static_cast<int>(tau_perm.size());
  d.tau = tau_perm;
  d.sigma.assign(static_cast<size_t>(d.n), 0);
  for (int x = 0; x < d.n; ++x) d.sigma[static_cast<size_t>(d.tau[static_cast<size_t>(x)])] = x;
  d.V = SparseMat(d.n, d.n);
  d.Vinv = SparseMat(d.n, d.n);
  for (int x = 0; x < d.n; ++x) {
    d.V.set(x, d.tau[static_cast<size_t>(x)], Scalar(1));
    d.Vinv.set(d.tau[static_cast<size_t>(x)], x, Scalar(1));
  }
  return d;
}

FiniteSolution lyubashenko_solution(const std::vector<int>& tau_perm) {
  const LyubashenkoData d = lyubashenko_data(tau_perm);
  FiniteSolution::Table sigma(static_cast<size_t>(d.n)), tau(static_cast<size_t>(d.n));
  for (int r = 0; r < d.n; ++r) {
    sigma[static_cast<size_t>(r)] = d.sigma;
    tau[static_cast<size_t>(r)] = d.tau;
  }
  return FiniteSolution::make(d.n, std::move(sigma), std::move(tau));
}

Report verify_conjugation(const LyubashenkoData& d) {
  Report rep;
  const SparseMat rc = linearize(lyubashenko_solution(d.tau), true);
  const SparseMat p = perm_op(d.n);
  const SparseMat id = SparseMat::identity(d.n);
  check_equal(rep, "lyu.conjugation-left", rc, kron(d.V, id) * p * kron(d.Vinv, id));
  check_equal(rep, "lyu.conjugation-right", rc, kron(id, d.Vinv) * p * kron(id, d.V));
  return rep;
}

SparseMat lyu_n_twist(const LyubashenkoData& d, int n, TwistFlavor flavor) {
  require_leg_budget(d.n, n + 1);
  const int total = n + 1;
  SparseMat prod = SparseMat::identity(1);
  for (int k = 0; k <= n; ++k) {
    const int p = flavor == TwistFlavor::F ? k : -(n - k);
    prod = kron(prod, d.v_power(p));
  }
  const FiniteSolution sol = lyubashenko_solution(d.tau);
  const SparseMat generic = n_twist(sol, n, flavor);
  if (!(prod == generic))
    throw InternalError("product-form twist differs from generic recursion: " +
                        diff_witness(prod, generic));
  // Split forms: F_{0,12..n} = V_1...V_n and F_{12..n,0} = V_0^n; the G
  // analogues are G_{0,12..n} = V_0^{-n} and G_{12..n,0} = V_1^{-1}...V_n^{-1}.
  const TwistFamily fam = build_twist_family(sol, n, flavor);
  SparseMat tail_expected = SparseMat::identity(1);
  SparseMat head_cycled_expected = SparseMat::identity(1);
  for (int k = 0; k <= n; ++k) {
    if (flavor == TwistFlavor::F) {
      tail_expected = kron(tail_expected, k == 0 ? SparseMat::identity(d.n) : d.V);
      head_cycled_expected =
          kron(head_cycled_expected, k == 0 ? d.v_power(n) : SparseMat::identity(d.n));
    } else {
      tail_expected = kron(tail_expected, k == 0 ? d.v_power(-n) : SparseMat::identity(d.n));
      head_cycled_expected = kron(head_cycled_expected, k == 0 ? SparseMat::identity(d.n) : d.Vinv);
    }
  }
  if (!(fam.split_tail == tail_expected))
    throw InternalError("split form F_{0,1..n} differs from the product expression");
  std::vector<int> seq(static_cast<size_t>(total));
  for (int i = 0; i < n; ++i) seq[static_cast<size_t>(i)] = i + 1;
  seq[static_cast<size_t>(n)] = 0;
  const SparseMat head_cycled = permute_legs(fam.split_head, seq, d.n);
  if (!(head_cycled == head_cycled_expected))
    throw InternalError("split form F_{12..n,0} differs from the product expression");
  return prod;
}

Report verify_lyu_factorization(const LyubashenkoData& d, int N) {
  Report rep;
  const FiniteSolution sol = lyubashenko_solution(d.tau);
  const SparseMat r = linearize(sol, false);
  const int total = N + 1;
  bool sites_ok = true;
  std::string wit;
  for (int k = 1; k <= N && sites_ok; ++k) {
    const SparseMat lhs = embed(r, {0, k}, total, d.n);
    const SparseMat rhs =
        embed(d.Vinv, {0}, total, d.n) * embed(d.V, {k}, total, d.n);
    if (!(lhs == rhs)) {
      sites_ok = false;
      wit = "site " + std::to_string(k);
    }
  }
  rep.add("lyu.r-product", sites_ok, wit);

  const SparseMat full = lyu_n_twist(d, N, TwistFlavor::F);
  std::vector<int> seq(static_cast<size_t>(total));
  for (int i = 0; i < N; ++i) seq[static_cast<size_t>(i)] = i + 1;
  seq[static_cast<size_t>(N)] = 0;
  const SparseMat cyc = permute_legs(full, seq, d.n);
  check_equal(rep, "lyu.factorization", cyc.transpose() * full, monodromy(sol, N));
  return rep;
}

// --- Tagged tensors ----------------------------------------------------------

int TaggedTensor::legs() const {
  return terms_.empty() ? 0 : static_cast<int>(terms_.front().legs.size());
}

TaggedTensor TaggedTensor::counit_at(int leg) const {
  std::vector<TaggedTerm> out;
  for (const auto& t : terms_) {
    const LegTag& tag = t.legs[static_cast<size_t>(leg)];
    if (tag.kind == LegTag::Kind::Unit) continue;  // epsilon(e_{x,y}) = 0
    TaggedTerm kept;
    kept.coeff = t.coeff;  // epsilon(I) = epsilon(V^p) = 1
    for (int i = 0; i < static_cast<int>(t.legs.size()); ++i) {
      if (i != leg) kept.legs.push_back(t.legs[static_cast<size_t>(i)]);
    }
    out.push_back(std::move(kept));
  }
  return TaggedTensor(dim_, std::move(out));
}

TaggedTensor TaggedTensor::coproduct_at(int leg, int which, const LyubashenkoData& d) const {
  std::vector<TaggedTerm> out;
  auto splice = [&](const TaggedTerm& t, const LegTag& a, const LegTag& b) {
    TaggedTerm nt;
    nt.coeff = t.coeff;
    for (int i = 0; i < static_cast<int>(t.legs.size()); ++i) {
      if (i == leg) {
        nt.legs.push_back(a);
        nt.legs.push_back(b);
      } else {
        nt.legs.push_back(t.legs[static_cast<size_t>(i)]);
      }
    }
    return nt;
  };
  for (const auto& t : terms_) {
    const LegTag& tag = t.legs[static_cast<size_t>(leg)];
    switch (tag.kind) {
      case LegTag::Kind::Identity:
        out.push_back(splice(t, LegTag::identity(), LegTag::identity()));
        break;
      case LegTag::Kind::VPower:
        if (which != 0)
          throw InternalError("twisted coproducts are defined on matrix units only");
        out.push_back(splice(t, tag, tag));
        break;
      case LegTag::Kind::Unit: {
        if (which == 0) throw InternalError("group-like coproduct applied to a matrix unit");
        const int x = tag.ux, y = tag.uy;
        if (which == 1) {
          out.push_back(splice(t, tag, LegTag::identity()));
          out.push_back(splice(t, LegTag::identity(),
                               LegTag::unit(d.tau[static_cast<size_t>(x)],
                                            d.tau[static_cast<size_t>(y)])));
        } else {
          out.push_back(splice(t,
                               LegTag::unit(d.sigma[static_cast<size_t>(x)],
                                            d.sigma[static_cast<size_t>(y)]),
                               LegTag::identity()));
          out.push_back(splice(t, LegTag::identity(), tag));
        }
        break;
      }
    }
  }
  return TaggedTensor(dim_, std::move(out));
}

TaggedTensor TaggedTensor::antipode_at(int leg) const {
  std::vector<TaggedTerm> out;
  for (const auto& t : terms_) {
    TaggedTerm nt = t;
    LegTag& tag = nt.legs[static_cast<size_t>(leg)];
    switch (tag.kind) {
      case LegTag::Kind::Identity:
        break;
      case LegTag::Kind::VPower:
        tag.power = -tag.power;
        break;
      case LegTag::Kind::Unit:
        nt.coeff = -nt.coeff;
        break;
    }
    out.push_back(std::move(nt));
  }
  return TaggedTensor(dim_, std::move(out));
}

TaggedTensor TaggedTensor::flipped() const {
  std::vector<TaggedTerm> out;
  for (const auto& t : terms_) {
    if (t.legs.size() != 2) throw InternalError("flipped requires a 2-leg tensor");
    TaggedTerm nt;
    nt.coeff = t.coeff;
    nt.legs = {t.legs[1], t.legs[0]};
    out.push_back(std::move(nt));
  }
  return TaggedTensor(dim_, std::move(out));
}

SparseMat TaggedTensor::materialize(const LyubashenkoData& d) const {
  auto leg_matrix = [&](const LegTag& tag) {
    switch (tag.kind) {
      case LegTag::Kind::Identity:
        return SparseMat::identity(d.n);
      case LegTag::Kind::VPower:
        return d.v_power(tag.power);
      case LegTag::Kind::Unit:
        return SparseMat::unit(d.n, tag.ux, tag.uy);
    }
    throw InternalError("unreachable");
  };
  const int nlegs = legs();
  long D = 1;
  for (int i = 0; i < nlegs; ++i) D *= d.n;
  SparseMat acc(D, D);
  for (const auto& t : terms_) {
    SparseMat m = SparseMat::identity(1);
    for (const auto& tag : t.legs) m = kron(m, leg_matrix(tag));
    acc = acc + m.scaled(Scalar(t.coeff));
  }
  return acc;
}

SparseMat TaggedTensor::multiply_out(const LyubashenkoData& d) const {
  SparseMat acc(d.n, d.n);
  for (const auto& t : terms_) {
    if (t.legs.size() != 2) throw InternalError("multiply_out requires a 2-leg tensor");
    TaggedTensor single(dim_, {TaggedTerm{t.coeff, {t.legs[0]}}});
    TaggedTensor other(dim_, {TaggedTerm{Rational(1), {t.legs[1]}}});
    acc = acc + single.materialize(d) * other.materialize(d);
  }
  return acc;
}

namespace {

TaggedTensor tagged_unit(int dim, int x, int y) {
  return TaggedTensor(dim, {TaggedTerm{Rational(1), {LegTag::unit(x, y)}}});
}

}  // namespace

Report curious_observations(const LyubashenkoData& d) {
  Report rep;
  const int n = d.n;
  const FiniteSolution sol = lyubashenko_solution(d.tau);
  const SparseMat id = SparseMat::identity(n);

  // F = I (x) V, G = V^{-1} (x) I, r = V^{-1} (x) V as tagged operands.
  const TaggedTensor f_tag(n, {TaggedTerm{Rational(1), {LegTag::identity(), LegTag::v_power(1)}}});
  const TaggedTensor g_tag(n, {TaggedTerm{Rational(1), {LegTag::v_power(-1), LegTag::identity()}}});
  const TaggedTensor r_tag(n, {TaggedTerm{Rational(1), {LegTag::v_power(-1), LegTag::v_power(1)}}});

  check_equal(rep, "lyu.tagged-r-matches", r_tag.materialize(d), linearize(sol, false));
  check_equal(rep, "lyu.counit-f-left", f_tag.counit_at(0).materialize(d), d.V);
  check_equal(rep, "lyu.counit-f-right", f_tag.counit_at(1).materialize(d), id);
  check_equal(rep, "lyu.counit-g-right", g_tag.counit_at(1).materialize(d), d.Vinv);
  check_equal(rep, "lyu.counit-g-left", g_tag.counit_at(0).materialize(d), id);
  check_equal(rep, "lyu.counit-r-left", r_tag.counit_at(0).materialize(d), d.V);
  check_equal(rep, "lyu.counit-r-right", r_tag.counit_at(1).materialize(d), d.Vinv);

  // Group-like V: Delta(V) = V (x) V, (eps (x) id)Delta(V) = V, antipode.
  const TaggedTensor v_tag(n, {TaggedTerm{Rational(1), {LegTag::v_power(1)}}});
  const TaggedTensor delta_v = v_tag.coproduct_at(0, 0, d);
  check_equal(rep, "lyu.group-like", delta_v.materialize(d), kron(d.V, d.V));
  check_equal(rep, "lyu.counit-coproduct-v", delta_v.counit_at(0).materialize(d), d.V);
  check_equal(rep, "lyu.antipode-left", delta_v.antipode_at(0).multiply_out(d), id);
  check_equal(rep, "lyu.antipode-right", delta_v.antipode_at(1).multiply_out(d), id);

  // Twisted coproducts commute with R(lambda) after flipping.
  {
    const Scalar l = Scalar::var(0);
    const SparseMat rl = linearize(sol, false).scaled(l) + perm_op(n);
    bool ok = true;
    std::string wit;
    for (int which = 1; which <= 2 && ok; ++which) {
      for (int x = 0; x < n && ok; ++x) {
        for (int y = 0; y < n && ok; ++y) {
          const TaggedTensor delta = tagged_unit(n, x, y).coproduct_at(0, which, d);
          const SparseMat lhs = delta.flipped().materialize(d) * rl;
          const SparseMat rhs = rl * delta.materialize(d);
          if (!(lhs == rhs)) {
            ok = false;
            wit = "Delta" + std::to_string(which) + " at (" + std::to_string(x) + "," +
                  std::to_string(y) + ")";
          }
        }
      }
    }
    rep.add("lyu.delta-commute", ok, wit);
  }

  // Bialgebra-axiom anomaly: (eps (x) id)Delta1(e_{x,y}) = e_{tau(x),tau(y)},
  // which differs from e_{x,y} exactly where tau moves the pair; the other
  // side is the honest identity. Mirror statement for Delta2.
  {
    bool ok = true;
    std::string wit;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        const SparseMat exy = SparseMat::unit(n, x, y);
        const TaggedTensor d1 = tagged_unit(n, x, y).coproduct_at(0, 1, d);
        const TaggedTensor d2 = tagged_unit(n, x, y).coproduct_at(0, 2, d);
        const SparseMat lhs1 = d1.counit_at(0).materialize(d);
        const SparseMat expected1 =
            SparseMat::unit(n, d.tau[static_cast<size_t>(x)], d.tau[static_cast<size_t>(y)]);
        const bool moved1 = d.tau[static_cast<size_t>(x)] != x || d.tau[static_cast<size_t>(y)] != y;
        if (!(lhs1 == expected1) || (lhs1 == exy) == moved1) {
          ok = false;
          wit = "Delta1 at (" + std::to_string(x) + "," + std::to_string(y) + ")";
          break;
        }
        if (!(d1.counit_at(1).materialize(d) == exy)) {
          ok = false;
          wit = "Delta1 right counit at (" + std::to_string(x) + "," + std::to_string(y) + ")";
          break;
        }
        const SparseMat lhs2 = d2.counit_at(1).materialize(d);
        const SparseMat expected2 =
            SparseMat::unit(n, d.sigma[static_cast<size_t>(x)], d.sigma[static_cast<size_t>(y)]);
        const bool moved2 =
            d.sigma[static_cast<size_t>(x)] != x || d.sigma[static_cast<size_t>(y)] != y;
        if (!(lhs2 == expected2) || (lhs2 == exy) == moved2) {
          ok = false;
          wit = "Delta2 at (" + std::to_string(x) + "," + std::to_string(y) + ")";
          break;
        }
        if (!(d2.counit_at(0).materialize(d) == exy)) {
          ok = false;
          wit = "Delta2 left counit at (" + std::to_string(x) + "," + std::to_string(y) + ")";
          break;
        }
      }
    }
    rep.add("lyu.counit-anomaly", ok, wit);
  }

  // Almost co-associativity with Phi = I (x) I (x) V and Phi^ = V (x) I (x) I.
  {
    bool ok = true;
    std::string wit;
    const SparseMat phi = kron(kron(id, id), d.V);
    const SparseMat phi_inv = kron(kron(id, id), d.Vinv);
    const SparseMat phih = kron(kron(d.V, id), id);
    const SparseMat phih_inv = kron(kron(d.Vinv, id), id);
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        const TaggedTensor d1 = tagged_unit(n, x, y).coproduct_at(0, 1, d);
        const SparseMat lhs1 = d1.coproduct_at(1, 1, d).materialize(d);
        const SparseMat rhs1 = phi_inv * d1.coproduct_at(0, 1, d).materialize(d) * phi;
        if (!(lhs1 == rhs1)) {
          ok = false;
          wit = "Delta1 at (" + std::to_string(x) + "," + std::to_string(y) + ")";
          break;
        }
        const TaggedTensor d2 = tagged_unit(n, x, y).coproduct_at(0, 2, d);
        const SparseMat lhs2 = d2.coproduct_at(1, 2, d).materialize(d);
        const SparseMat rhs2 = phih_inv * d2.coproduct_at(0, 2, d).materialize(d) * phih;
        if (!(lhs2 == rhs2)) {
          ok = false;
          wit = "Delta2 at (" + std::to_string(x) + "," + std::to_string(y) + ")";
          break;
        }
      }
    }
    rep.add("lyu.almost-coassoc", ok, wit);
  }

  return rep;
}

}  // namespace ybe
