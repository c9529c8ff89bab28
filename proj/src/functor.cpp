#include "retic/functor.hpp"

#include <algorithm>

namespace retic {

Analysis analyze_algebra(const AlgebraPtr& alg, int threads) {
  Analysis a;
  a.algebra = alg;
  a.con = std::make_shared<CongruenceLattice>(enumerate_congruences(alg));
  a.cs = std::make_shared<CommutatorStructure>(commutator_table(alg, a.con, threads));
  a.spec = build_spectrum_report(*a.cs);
  try {
    a.retic = std::make_shared<ReticulationResult>(build_reticulation(a.cs));
  } catch (const HypothesisError& e) {
    a.retic_refusal = e.what();
  }
  return a;
}

namespace {

int transport_index(const SurjectiveMorphism& f, const Analysis& a, const Analysis& b,
                    int alpha) {
  int idx = b.con->index_of(transport_congruence(f, a.con->elems[alpha]));
  if (idx < 0) throw AlgebraError("transported congruence is unknown on the target");
  return idx;
}

}  // namespace

ReticMorphism retic_morphism(const SurjectiveMorphism& f, const Analysis& a,
                             const Analysis& b) {
  if (!a.retic || !b.retic)
    throw HypothesisError("reticulation unavailable on one of the endpoints");
  ReticMorphism m;
  m.map.assign(a.retic->classes(), -1);
  for (int alpha = 0; alpha < a.cs->size(); ++alpha) {
    int img = b.retic->lambda(transport_index(f, a, b, alpha));
    int cls = a.retic->lambda(alpha);
    if (m.map[cls] < 0) m.map[cls] = img;
    else if (m.map[cls] != img)
      throw HypothesisError("induced reticulation map is not well defined");
  }
  std::vector<uint8_t> hit(b.retic->classes(), 0);
  for (int v : m.map) hit[v] = 1;
  for (uint8_t h : hit)
    if (!h) throw HypothesisError("induced reticulation map is not surjective");

  // Bounded lattice morphism over the class lattices.
  const auto& la = a.retic->lattice;
  const auto& lb = b.retic->lattice;
  for (int x = 0; x < la.size(); ++x)
    for (int y = 0; y < la.size(); ++y) {
      if (m.map[la.join(x, y)] != lb.join(m.map[x], m.map[y]) ||
          m.map[la.meet(x, y)] != lb.meet(m.map[x], m.map[y]))
        throw HypothesisError("induced reticulation map is not a lattice morphism");
    }
  if (m.map[la.bottom()] != lb.bottom() || m.map[la.top()] != lb.top())
    throw HypothesisError("induced reticulation map does not preserve the bounds");
  return m;
}

Report verify_quotient_preservation(const Analysis& a, int theta) {
  Report rep;
  rep.subject = "quotient preservation at " + a.cs->lat.labels[theta];
  if (!a.retic) {
    rep.skip("retic_quotient_iso", a.retic_refusal);
    return rep;
  }
  auto [q, p] = quotient_algebra(a.algebra, a.con->elems[theta]);
  Analysis qa = analyze_algebra(q);
  if (!qa.retic) {
    rep.skip("retic_quotient_iso", qa.retic_refusal);
    return rep;
  }

  LatticeIdeal ts = theta_star(*a.retic, theta);
  auto [quot, qmap] = quotient_by_ideal(a.retic->lattice, ts);
  rep.add("retic_quotient_iso", lattice_iso(qa.retic->lattice, quot).has_value());

  // Ideal kernel of the induced map equals theta*.
  ReticMorphism lf = retic_morphism(p, a, qa);
  std::vector<uint8_t> ker(a.retic->classes(), 0);
  for (int c = 0; c < a.retic->classes(); ++c)
    if (lf.map[c] == qa.retic->lattice.bottom()) ker[c] = 1;
  rep.add("ideal_kernel_is_theta_star", ker == ts.member);
  return rep;
}

Report verify_quotient_preservation_all(const Analysis& a) {
  Report rep;
  rep.subject = "quotient preservation";
  for (int t = 0; t < a.con->size(); ++t) {
    Report one = verify_quotient_preservation(a, t);
    for (auto& c : one.checks) {
      c.name = a.cs->lat.labels[t] + ": " + c.name;
      rep.checks.push_back(std::move(c));
    }
  }
  return rep;
}

Report verify_product_preservation(const AlgebraPtr& a, const AlgebraPtr& b, int threads) {
  Report rep;
  rep.subject = "product preservation";
  auto prod = std::make_shared<FiniteAlgebra>(direct_product(*a, *b));
  Analysis pa = analyze_algebra(prod, threads);
  Analysis aa = analyze_algebra(a);
  Analysis ba = analyze_algebra(b);
  const int nb = b->size();

  auto pair_congruence = [&](const Congruence& x, const Congruence& y) {
    std::vector<int> rep_v(prod->size());
    for (int i = 0; i < prod->size(); ++i)
      rep_v[i] = x.rep(i / nb) * nb + y.rep(i % nb);
    return Congruence::from_rep(std::move(rep_v));
  };

  // Cheap negative path first, then the element-wise shape check.
  bool no_skew = pa.con->size() == aa.con->size() * ba.con->size();
  if (no_skew) {
    for (int i = 0; i < aa.con->size() && no_skew; ++i)
      for (int j = 0; j < ba.con->size(); ++j)
        if (pa.con->index_of(pair_congruence(aa.con->elems[i], ba.con->elems[j])) < 0) {
          no_skew = false;
          break;
        }
  }
  if (!no_skew) {
    rep.add("no_skew_congruences", false, "skew congruences found; isomorphism skipped");
    return rep;
  }
  rep.add("no_skew_congruences", true);

  // Pair generation: Cg(X x Y) = Cg(X) x Cg(Y) for singleton X, Y.
  bool cg_prod = true;
  for (int x1 = 0; x1 < a->size() && cg_prod; ++x1)
    for (int y1 = x1; y1 < a->size() && cg_prod; ++y1)
      for (int x2 = 0; x2 < b->size() && cg_prod; ++x2)
        for (int y2 = x2; y2 < b->size(); ++y2) {
          Congruence left = cg_generate(
              *prod, {{x1 * nb + x2, y1 * nb + y2}, {x1 * nb + y2, y1 * nb + x2}});
          Congruence right = pair_congruence(cg_generate(*a, {{x1, y1}}),
                                             cg_generate(*b, {{x2, y2}}));
          if (left != right) { cg_prod = false; break; }
        }
  rep.add("pair_generation_factorizes", cg_prod);

  // Spec(A x B) = {phi x top} u {top x psi}.
  std::vector<int> expected;
  for (int phi : aa.spec.spec)
    expected.push_back(pa.con->index_of(
        pair_congruence(aa.con->elems[phi], Congruence::all(b->size()))));
  for (int psi : ba.spec.spec)
    expected.push_back(pa.con->index_of(
        pair_congruence(Congruence::all(a->size()), ba.con->elems[psi])));
  std::sort(expected.begin(), expected.end());
  rep.add("spectrum_formula", expected == pa.spec.spec);

  if (pa.retic && aa.retic && ba.retic) {
    BoundedLattice lab = product_lattice(aa.retic->lattice, ba.retic->lattice);
    rep.add("retic_product_iso", lattice_iso(pa.retic->lattice, lab).has_value());
  } else {
    rep.skip("retic_product_iso", "reticulation unavailable");
  }
  return rep;
}

Report verify_semiprime_reduction(const Analysis& a) {
  Report rep;
  rep.subject = "semiprime reduction";
  int rho0 = a.spec.radical_map[a.con->bottom()];
  auto [q, p] = quotient_algebra(a.algebra, a.con->elems[rho0]);
  Analysis qa = analyze_algebra(q);
  rep.add("reduced_algebra_semiprime", qa.spec.semiprime);
  if (a.retic && qa.retic) {
    rep.add("retic_preserved", lattice_iso(a.retic->lattice, qa.retic->lattice).has_value());
    // B(L(A)) and B(Con(A/rho(bottom))) are isomorphic Boolean algebras; this
    // needs the variety-level hypotheses, so it sits behind the surrogate
    // gate (every maximal congruence prime).
    bool gate = true;
    for (int m : a.spec.max)
      if (std::find(a.spec.spec.begin(), a.spec.spec.end(), m) == a.spec.spec.end())
        gate = false;
    if (gate) {
      auto bl = boolean_center_lattice(a.retic->lattice);
      auto bq = boolean_center(*qa.cs);
      bool iso = bl.size() == bq.size();
      if (iso) {
        auto sub = [&](const BoundedLattice& l, const std::vector<int>& elems) {
          const int m = static_cast<int>(elems.size());
          std::vector<uint8_t> leq(static_cast<size_t>(m) * m, 0);
          std::vector<std::string> labels;
          for (int i = 0; i < m; ++i) labels.push_back(l.labels[elems[i]]);
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
              leq[static_cast<size_t>(i) * m + j] = l.le(elems[i], elems[j]) ? 1 : 0;
          return BoundedLattice::from_leq(std::move(labels), std::move(leq));
        };
        iso = lattice_iso(sub(a.retic->lattice, bl), sub(qa.cs->lat, bq)).has_value();
      }
      rep.add("center_preserved", iso);
    } else {
      rep.skip("center_preserved",
               "surrogate gate failed: maximal congruences are not all prime");
    }
  } else {
    rep.skip("retic_preserved", "reticulation unavailable");
    rep.skip("center_preserved", "reticulation unavailable");
  }
  return rep;
}

Report verify_hyperarchimedean_equivalences(const Analysis& a) {
  Report rep;
  rep.subject = "hyperarchimedean equivalences";

  auto spec = a.spec.spec;
  bool gate = true;
  for (int m : a.spec.max)
    if (std::find(spec.begin(), spec.end(), m) == spec.end()) gate = false;
  if (!a.cs->flags.nabla_neutral) gate = false;
  if (!gate || !a.retic) {
    rep.skip("six_conditions_agree",
             !a.retic ? a.retic_refusal
                      : "surrogate gate failed: maximal congruences are not all prime");
    return rep;
  }

  int rho0 = a.spec.radical_map[a.con->bottom()];
  auto [q, p] = quotient_algebra(a.algebra, a.con->elems[rho0]);
  Analysis qa = analyze_algebra(q);

  bool c1 = is_hyperarchimedean(*a.cs).flag;
  bool c2 = is_hyperarchimedean(*qa.cs).flag;
  bool c3 = a.spec.max == spec;
  bool c4 = is_boolean(a.retic->lattice);

  auto center_sublattice = [](const BoundedLattice& l) {
    auto elems = boolean_center_lattice(l);
    const int m = static_cast<int>(elems.size());
    std::vector<uint8_t> leq(static_cast<size_t>(m) * m, 0);
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i) labels.push_back(l.labels[elems[i]]);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        leq[static_cast<size_t>(i) * m + j] = l.le(elems[i], elems[j]) ? 1 : 0;
    return BoundedLattice::from_leq(std::move(labels), std::move(leq));
  };
  bool c5 = lattice_iso(a.retic->lattice, center_sublattice(a.cs->lat)).has_value();
  bool c6 = lattice_iso(a.retic->lattice, center_sublattice(qa.cs->lat)).has_value();

  bool agree = c1 == c2 && c2 == c3 && c3 == c4 && c4 == c5 && c5 == c6;
  std::string detail = std::string("hyperarchimedean=") + (c1 ? "1" : "0") +
                       " reduced=" + (c2 ? "1" : "0") + " max_eq_spec=" + (c3 ? "1" : "0") +
                       " retic_boolean=" + (c4 ? "1" : "0") + " retic_iso_center=" +
                       (c5 ? "1" : "0") + " retic_iso_reduced_center=" + (c6 ? "1" : "0");
  rep.add("six_conditions_agree", agree, detail);

  if (c1) {
    bool quo = true;
    for (int t = 0; t < a.con->size() && quo; ++t) {
      auto [qt, pt] = quotient_algebra(a.algebra, a.con->elems[t]);
      Analysis qta = analyze_algebra(qt);
      if (!is_hyperarchimedean(*qta.cs).flag) quo = false;
    }
    rep.add("quotients_stay_hyperarchimedean", quo);
    rep.add("retic_boolean_when_hyperarchimedean", c4);
  } else {
    rep.skip("quotients_stay_hyperarchimedean", "the algebra is not hyperarchimedean");
    rep.skip("retic_boolean_when_hyperarchimedean", "the algebra is not hyperarchimedean");
  }
  return rep;
}

Report verify_functoriality(const Analysis& a, int theta, int zeta) {
  Report rep;
  rep.subject = "functoriality";
  if (!a.con->le(theta, zeta)) throw AlgebraError("needs theta <= zeta");
  if (!a.retic) {
    rep.skip("composition", a.retic_refusal);
    return rep;
  }
  auto [q1, p1] = quotient_algebra(a.algebra, a.con->elems[theta]);
  Analysis a1 = analyze_algebra(q1);
  // zeta / theta on the quotient.
  Congruence z_over_t = transport_congruence(p1, a.con->elems[zeta]);
  auto [q2, p2] = quotient_algebra(q1, z_over_t);
  Analysis a2 = analyze_algebra(q2);

  SurjectiveMorphism whole = compose(p2, p1);
  ReticMorphism lf = retic_morphism(p1, a, a1);
  ReticMorphism lg = retic_morphism(p2, a1, a2);
  ReticMorphism lgf = retic_morphism(whole, a, a2);

  bool ok = true;
  for (int c = 0; c < a.retic->classes(); ++c)
    if (lgf.map[c] != lg.map[lf.map[c]]) { ok = false; break; }
  rep.add("composition", ok);

  // The identity induces the identity.
  ReticMorphism id = retic_morphism(identity_morphism(a.algebra), a, a);
  bool idok = true;
  for (int c = 0; c < a.retic->classes(); ++c)
    if (id.map[c] != c) idok = false;
  rep.add("identity", idok);
  return rep;
}

Report verify_transport_invariants(const Analysis& a) {
  Report rep;
  rep.subject = "transport invariants";

  // Transports of center elements land in the center of every quotient.
  bool center_ok = true;
  if (a.cs->flags.nabla_neutral) {
    auto center = boolean_center(*a.cs);
    for (int t = 0; t < a.con->size() && center_ok; ++t) {
      auto [q, p] = quotient_algebra(a.algebra, a.con->elems[t]);
      Analysis qa = analyze_algebra(q);
      auto qcenter = boolean_center_lattice(qa.cs->lat);
      for (int c : center) {
        int img = qa.con->index_of(transport_congruence(p, a.con->elems[c]));
        if (std::find(qcenter.begin(), qcenter.end(), img) == qcenter.end()) {
          center_ok = false;
          break;
        }
      }
    }
    rep.add("center_transports_into_center", center_ok);
  } else {
    rep.skip("center_transports_into_center", "top is not commutator-neutral");
  }

  // The top is compact: every element is a join of principal elements below
  // it (finite carrier).
  bool compact = true;
  for (int t = 0; t < a.con->size(); ++t) {
    int j = a.con->bottom();
    for (int x = 0; x < a.con->size(); ++x)
      if (a.con->principal[x] && a.con->le(x, t)) j = a.con->join(j, x);
    if (j != t) compact = false;
  }
  rep.add("every_element_join_of_principals", compact);
  return rep;
}

}  // namespace retic
