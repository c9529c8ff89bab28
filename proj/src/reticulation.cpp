#include "retic/reticulation.hpp"

#include <algorithm>
#include <map>

namespace retic {

ReticulationResult build_reticulation(const std::shared_ptr<const CommutatorStructure>& cs) {
  if (!cs->flags.commutative)
    throw HypothesisError("reticulation requires a commutative commutator; "
                          "the commutative law fails for this structure");

  const int n = cs->size();
  std::vector<int> rad(n);
  for (int t = 0; t < n; ++t) rad[t] = radical(*cs, t, RadicalMethod::via_spec);

  ReticulationResult r;
  r.source = cs;
  r.class_of.assign(n, -1);
  std::map<int, int> cls_of_rad;
  for (int t = 0; t < n; ++t) {
    auto it = cls_of_rad.find(rad[t]);
    if (it == cls_of_rad.end()) {
      it = cls_of_rad.emplace(rad[t], static_cast<int>(r.class_rep.size())).first;
      r.class_rep.push_back(t);
    }
    r.class_of[t] = it->second;
    r.class_rep[it->second] = std::min(r.class_rep[it->second], t);
  }
  const int m = static_cast<int>(r.class_rep.size());

  // Class operations must not depend on representatives; without the
  // join_distributive law this is what the construction actually needs, and
  // it is verified exhaustively here.
  for (int a = 0; a < n; ++a)
    for (int a2 = 0; a2 < n; ++a2) {
      if (r.class_of[a] != r.class_of[a2]) continue;
      for (int b = 0; b < n; ++b) {
        if (r.class_of[cs->lat.join(a, b)] != r.class_of[cs->lat.join(a2, b)] ||
            r.class_of[cs->comm(a, b)] != r.class_of[cs->comm(a2, b)])
          throw HypothesisError(
              "reticulation classes are not compatible with join and commutator; "
              "the join_distributive law fails for this structure");
        if (r.class_of[cs->comm(a, b)] != r.class_of[cs->lat.meet(a, b)])
          throw HypothesisError(
              "commutator and meet fall in different radical classes; "
              "the join_distributive law fails for this structure");
      }
    }

  std::vector<int> join_t(static_cast<size_t>(m) * m), meet_t(static_cast<size_t>(m) * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      int a = r.class_rep[x], b = r.class_rep[y];
      join_t[static_cast<size_t>(x) * m + y] = r.class_of[cs->lat.join(a, b)];
      meet_t[static_cast<size_t>(x) * m + y] = r.class_of[cs->comm(a, b)];
    }

  std::vector<uint8_t> leq(static_cast<size_t>(m) * m, 0);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      leq[static_cast<size_t>(x) * m + y] = join_t[static_cast<size_t>(x) * m + y] == y;

  std::vector<std::string> labels;
  for (int x = 0; x < m; ++x) labels.push_back(cs->lat.labels[r.class_rep[x]]);
  r.lattice = BoundedLattice::from_leq(std::move(labels), std::move(leq));

  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (r.lattice.join(x, y) != join_t[static_cast<size_t>(x) * m + y] ||
          r.lattice.meet(x, y) != meet_t[static_cast<size_t>(x) * m + y])
        throw HypothesisError("class operations do not agree with the quotient order");

  if (!is_distributive(r.lattice))
    throw HypothesisError("reticulation lattice failed the distributivity check");

  // lambda is a surjective bounded-lattice morphism by construction; check
  // the bound images all the same.
  if (r.class_of[cs->lat.bottom()] != r.lattice.bottom() ||
      r.class_of[cs->lat.top()] != r.lattice.top())
    throw HypothesisError("class bounds do not match the quotient bounds");

  return r;
}

LatticeIdeal theta_star(const ReticulationResult& r, int theta) {
  const auto& cs = *r.source;
  LatticeIdeal ideal;
  ideal.member.assign(r.classes(), 0);
  int top = r.lattice.bottom();
  for (int a = 0; a < cs.size(); ++a)
    if (cs.lat.le(a, theta)) {
      ideal.member[r.class_of[a]] = 1;
      top = r.lattice.join(top, r.class_of[a]);
    }
  ideal.top_elem = top;
  if (!is_ideal(r.lattice, ideal.member))
    throw LatticeError("theta* failed the ideal axioms");
  return ideal;
}

int ideal_lower_star(const ReticulationResult& r, const LatticeIdeal& ideal) {
  if (!is_ideal(r.lattice, ideal.member)) throw LatticeError("not an ideal of L(A)");
  const auto& cs = *r.source;
  int j = cs.lat.bottom();
  for (int a = 0; a < cs.size(); ++a)
    if (ideal.contains(r.class_of[a])) j = cs.lat.join(j, a);
  return j;
}

RadicalLattice rcon_lattice(const ReticulationResult& r) {
  const auto& cs = *r.source;
  RadicalLattice out;
  for (int t = 0; t < cs.size(); ++t)
    if (radical(cs, t, RadicalMethod::via_spec) == t) out.elems.push_back(t);
  const int m = static_cast<int>(out.elems.size());
  std::vector<uint8_t> leq(static_cast<size_t>(m) * m, 0);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      leq[static_cast<size_t>(x) * m + y] = cs.lat.le(out.elems[x], out.elems[y]) ? 1 : 0;
  std::vector<std::string> labels;
  for (int t : out.elems) labels.push_back(cs.lat.labels[t]);
  out.lattice = BoundedLattice::from_leq(std::move(labels), std::move(leq));

  // Meet must be the plain meet and join the radical of the join.
  auto pos = [&](int elem) {
    return static_cast<int>(std::lower_bound(out.elems.begin(), out.elems.end(), elem) -
                            out.elems.begin());
  };
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      int mt = cs.lat.meet(out.elems[x], out.elems[y]);
      int jn = radical(cs, cs.lat.join(out.elems[x], out.elems[y]), RadicalMethod::via_spec);
      if (out.lattice.meet(x, y) != pos(mt) || out.lattice.join(x, y) != pos(jn))
        throw LatticeError("radical elements are not closed under the stated operations");
    }
  return out;
}

Report verify_spec_homeomorphism(const ReticulationResult& r) {
  Report rep;
  rep.subject = "spectrum homeomorphism";
  const auto& cs = *r.source;
  auto spec = spectrum(cs);
  auto lspec = prime_ideals(r.lattice);

  bool u_into = true, v_into = true, uv = true, vu = true;
  std::vector<LatticeIdeal> u_images;
  for (int phi : spec) {
    LatticeIdeal u = theta_star(r, phi);
    u_images.push_back(u);
    if (std::find(lspec.begin(), lspec.end(), u) == lspec.end()) u_into = false;
    if (ideal_lower_star(r, u) != phi) vu = false;
  }
  for (const auto& p : lspec) {
    int v = ideal_lower_star(r, p);
    if (std::find(spec.begin(), spec.end(), v) == spec.end()) v_into = false;
    else if (!(theta_star(r, v) == p)) uv = false;
  }
  rep.add("u_maps_into_prime_ideals", u_into);
  rep.add("v_maps_into_prime_congruences", v_into);
  rep.add("u_after_v_is_identity", uv);
  rep.add("v_after_u_is_identity", vu);
  rep.add("spectra_same_size", spec.size() == lspec.size(),
          std::to_string(spec.size()) + " vs " + std::to_string(lspec.size()));

  // Closed-set transport: u(V_A(theta)) = V_Id(theta*) for every theta.
  bool transport = true;
  for (int t = 0; t < cs.size() && transport; ++t) {
    auto v_sets = stone_sets(cs, t);
    LatticeIdeal ts = theta_star(r, t);
    std::vector<LatticeIdeal> lhs;
    for (int phi : v_sets.V) lhs.push_back(theta_star(r, phi));
    std::vector<LatticeIdeal> rhs;
    for (const auto& p : lspec)
      if ([&] {
            for (int x = 0; x < r.classes(); ++x)
              if (ts.contains(x) && !p.contains(x)) return false;
            return true;
          }())
        rhs.push_back(p);
    if (lhs.size() != rhs.size()) { transport = false; break; }
    for (const auto& i : lhs)
      if (std::find(rhs.begin(), rhs.end(), i) == rhs.end()) { transport = false; break; }
  }
  rep.add("closed_set_transport", transport);
  return rep;
}

Report verify_annihilators(const ReticulationResult& r) {
  Report rep;
  rep.subject = "annihilator transfer";
  const auto& cs = *r.source;
  if (!cs.flags.join_distributive) {
    rep.skip("perp_star_vs_annihilator", "needs join_distributive");
    rep.skip("lower_star_perp_vs_annihilator", "needs join_distributive");
    return rep;
  }
  const bool semiprime =
      radical(cs, cs.lat.bottom(), RadicalMethod::via_spec) == cs.lat.bottom();

  auto ideal_leq = [&](const LatticeIdeal& a, const LatticeIdeal& b) {
    for (int x = 0; x < r.classes(); ++x)
      if (a.contains(x) && !b.contains(x)) return false;
    return true;
  };

  bool star_ok = true, lower_ok = true;
  for (int t = 0; t < cs.size(); ++t) {
    LatticeIdeal lhs = theta_star(r, perp(cs, t));
    LatticeIdeal rhs = annihilator(r.lattice, theta_star(r, t));
    if (semiprime ? !(lhs == rhs) : !ideal_leq(lhs, rhs)) star_ok = false;
  }
  for (const auto& ideal : ideals(r.lattice)) {
    int lhs = perp(cs, ideal_lower_star(r, ideal));
    int rhs = ideal_lower_star(r, annihilator(r.lattice, ideal));
    if (semiprime ? lhs != rhs : !cs.lat.le(lhs, rhs)) lower_ok = false;
  }
  rep.add("perp_star_vs_annihilator", star_ok,
          semiprime ? "exact equality (semiprime)" : "containment only");
  rep.add("lower_star_perp_vs_annihilator", lower_ok,
          semiprime ? "exact equality (semiprime)" : "containment only");
  return rep;
}

Report verify_galois(const ReticulationResult& r) {
  Report rep;
  rep.subject = "star correspondence";
  const auto& cs = *r.source;

  bool star_round = true, rho_star = true;
  for (int t = 0; t < cs.size(); ++t) {
    int rho = radical(cs, t, RadicalMethod::via_spec);
    if (ideal_lower_star(r, theta_star(r, t)) != rho) star_round = false;
    if (!(theta_star(r, rho) == theta_star(r, t))) rho_star = false;
  }
  rep.add("lower_star_of_star_is_radical", star_round);
  rep.add("star_of_radical_is_star", rho_star);

  bool ideal_round = true;
  for (const auto& i : ideals(r.lattice))
    if (!(theta_star(r, ideal_lower_star(r, i)) == i)) ideal_round = false;
  rep.add("star_of_lower_star_is_identity", ideal_round);

  // theta -> theta* restricted to the radical elements is a lattice
  // isomorphism onto Id(L(A)).
  auto rcon = rcon_lattice(r);
  auto all_ideals = ideals(r.lattice);
  bool iso = rcon.lattice.size() == static_cast<int>(all_ideals.size());
  if (iso) {
    std::vector<int> image;
    for (int x = 0; x < rcon.lattice.size(); ++x) {
      LatticeIdeal i = theta_star(r, rcon.elems[x]);
      auto it = std::find(all_ideals.begin(), all_ideals.end(), i);
      if (it == all_ideals.end()) { iso = false; break; }
      image.push_back(static_cast<int>(it - all_ideals.begin()));
      if (ideal_lower_star(r, i) != rcon.elems[x]) { iso = false; break; }
    }
    if (iso) {
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (image.size() != all_ideals.size()) iso = false;
    }
    // Operation preservation.
    for (int x = 0; x < rcon.lattice.size() && iso; ++x)
      for (int y = 0; y < rcon.lattice.size() && iso; ++y) {
        LatticeIdeal ix = theta_star(r, rcon.elems[x]);
        LatticeIdeal iy = theta_star(r, rcon.elems[y]);
        LatticeIdeal im = theta_star(r, rcon.elems[rcon.lattice.meet(x, y)]);
        LatticeIdeal ij = theta_star(r, rcon.elems[rcon.lattice.join(x, y)]);
        LatticeIdeal meet_ideal = principal_ideal(r.lattice,
                                                  r.lattice.meet(ix.top_elem, iy.top_elem));
        LatticeIdeal join_ideal = principal_ideal(r.lattice,
                                                  r.lattice.join(ix.top_elem, iy.top_elem));
        if (!(im == meet_ideal) || !(ij == join_ideal)) iso = false;
      }
  }
  rep.add("rcon_isomorphic_to_ideal_lattice", iso);

  bool closed_count = true;
  {
    std::vector<std::vector<int>> con_closed, id_closed;
    for (int t = 0; t < cs.size(); ++t) {
      auto v = stone_sets(cs, t).V;
      std::sort(v.begin(), v.end());
      if (std::find(con_closed.begin(), con_closed.end(), v) == con_closed.end())
        con_closed.push_back(v);
    }
    auto lspec = prime_ideals(r.lattice);
    for (const auto& i : ideals(r.lattice)) {
      std::vector<int> v;
      for (size_t p = 0; p < lspec.size(); ++p) {
        bool contains = true;
        for (int x = 0; x < r.classes(); ++x)
          if (i.contains(x) && !lspec[p].contains(x)) { contains = false; break; }
        if (contains) v.push_back(static_cast<int>(p));
      }
      std::sort(v.begin(), v.end());
      if (std::find(id_closed.begin(), id_closed.end(), v) == id_closed.end())
        id_closed.push_back(v);
    }
    closed_count = con_closed.size() == id_closed.size();
  }
  rep.add("closed_set_families_same_size", closed_count);
  return rep;
}

}  // namespace retic
