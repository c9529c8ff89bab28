#include "retic/spectrum.hpp"

#include <algorithm>

namespace retic {

bool is_prime(const CommutatorStructure& cs, int phi) {
  if (phi == cs.lat.top()) return false;  // proper only
  const int n = cs.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (cs.lat.le(cs.comm(a, b), phi) && !cs.lat.le(a, phi) && !cs.lat.le(b, phi))
        return false;
  return true;
}

bool is_semiprime_congruence(const CommutatorStructure& cs, int phi) {
  const int n = cs.size();
  for (int a = 0; a < n; ++a)
    if (cs.lat.le(cs.comm(a, a), phi) && !cs.lat.le(a, phi)) return false;
  return true;
}

namespace {

bool meet_irreducible(const BoundedLattice& lat, int x) {
  if (x == lat.top()) return false;
  for (int a = 0; a < lat.size(); ++a)
    for (int b = 0; b < lat.size(); ++b)
      if (lat.meet(a, b) == x && a != x && b != x) return false;
  return true;
}

}  // namespace

std::vector<int> spectrum(const CommutatorStructure& cs) {
  std::vector<int> out;
  for (int phi = 0; phi < cs.size(); ++phi)
    if (is_prime(cs, phi)) out.push_back(phi);

  if (cs.flags.commutative && cs.flags.join_distributive) {
    std::vector<int> cross;
    for (int phi = 0; phi < cs.size(); ++phi)
      if (phi != cs.lat.top() && meet_irreducible(cs.lat, phi) &&
          is_semiprime_congruence(cs, phi))
        cross.push_back(phi);
    if (cross != out)
      throw LatticeError("internal error: prime scan disagrees with the "
                         "meet-irreducible + semiprime characterization");
  }
  return out;
}

int radical(const CommutatorStructure& cs, int theta, RadicalMethod method) {
  if (method == RadicalMethod::via_spec) {
    int r = cs.lat.top();  // empty intersection of primes
    for (int phi : spectrum(cs))
      if (cs.lat.le(theta, phi)) r = cs.lat.meet(r, phi);
    return r;
  }
  if (!cs.has_principal_marks())
    throw HypothesisError(
        "radical via_iteration needs principal congruence marks, which this "
        "fixture does not carry");
  int r = cs.lat.bottom();
  for (int a = 0; a < cs.size(); ++a) {
    if (!cs.principal[a]) continue;
    if (cs.lat.le(iterated_fixpoint(cs, a, a), theta)) r = cs.lat.join(r, a);
  }
  return r;
}

StoneSets stone_sets(const CommutatorStructure& cs, int theta) {
  StoneSets s;
  for (int phi : spectrum(cs)) {
    if (cs.lat.le(theta, phi)) s.V.push_back(phi);
    else s.D.push_back(phi);
  }
  return s;
}

std::vector<int> boolean_center(const CommutatorStructure& cs) {
  std::vector<int> out = boolean_center_lattice(cs.lat);
  if (!cs.flags.nabla_neutral) return out;

  // With a neutral top the complement of a center element is its perp, and
  // the center is a Boolean algebra; both facts are verified here.
  const auto& lat = cs.lat;
  for (int a : out) {
    int j = lat.bottom();
    for (int x = 0; x < cs.size(); ++x)
      if (cs.comm(x, a) == lat.bottom()) j = lat.join(j, x);
    if (cs.comm(j, a) != lat.bottom() || lat.join(a, j) != lat.top() ||
        lat.meet(a, j) != lat.bottom())
      throw LatticeError("center element " + lat.labels[a] +
                         " is not complemented by its perp");
  }
  for (int a : out)
    for (int b : out) {
      if (std::find(out.begin(), out.end(), lat.join(a, b)) == out.end() ||
          std::find(out.begin(), out.end(), lat.meet(a, b)) == out.end())
        throw LatticeError("center is not closed under join and meet");
      for (int c : out)
        if (lat.meet(a, lat.join(b, c)) != lat.join(lat.meet(a, b), lat.meet(a, c)))
          throw LatticeError("center is not distributive");
    }
  return out;
}

HyperarchWitness is_hyperarchimedean(const CommutatorStructure& cs) {
  if (!cs.has_principal_marks())
    throw HypothesisError("hyperarchimedean test needs principal congruence marks");
  HyperarchWitness out;
  auto center = boolean_center_lattice(cs.lat);
  auto in_center = [&](int x) {
    return std::find(center.begin(), center.end(), x) != center.end();
  };
  out.flag = true;
  for (int a = 0; a < cs.size(); ++a) {
    if (!cs.principal[a]) continue;
    std::optional<int> witness;
    int x = cs.comm(a, a);
    for (int n = 1; n <= cs.size() + 1; ++n) {
      if (in_center(x)) {
        witness = n;
        break;
      }
      int next = cs.comm(x, x);
      if (next == x) break;
      x = next;
    }
    if (!witness) out.flag = false;
    out.witnesses.emplace_back(a, witness);
  }
  return out;
}

bool semiprime_algebra(const CommutatorStructure& cs) {
  return radical(cs, cs.lat.bottom(), RadicalMethod::via_spec) == cs.lat.bottom();
}

void SpectrumReport::validate(const CommutatorStructure& cs) const {
  for (int phi : spec)
    if (phi == cs.lat.top()) throw LatticeError("spectrum contains the improper top");
  if (radical_map[cs.lat.top()] != cs.lat.top())
    throw LatticeError("radical of the top must be the top");
  if (semiprime != (radical_map[cs.lat.bottom()] == cs.lat.bottom()))
    throw LatticeError("semiprime flag disagrees with the radical of the bottom");
}

SpectrumReport build_spectrum_report(const CommutatorStructure& cs) {
  SpectrumReport r;
  r.spec = spectrum(cs);
  for (auto [a, b] : cs.lat.covers())
    if (b == cs.lat.top() && cs.size() > 1) r.max.push_back(a);
  for (int t = 0; t < cs.size(); ++t)
    r.radical_map.push_back(radical(cs, t, RadicalMethod::via_spec));
  r.semiprime = r.radical_map[cs.lat.bottom()] == cs.lat.bottom();
  r.center = boolean_center(cs);
  if (cs.has_principal_marks()) r.hyperarchimedean = is_hyperarchimedean(cs);
  r.validate(cs);
  return r;
}

Report conditional_spectrum_checks(const CommutatorStructure& cs) {
  Report rep;
  rep.subject = "conditional spectrum checks";
  auto spec = spectrum(cs);
  std::vector<int> max;
  for (auto [a, b] : cs.lat.covers())
    if (b == cs.lat.top() && cs.size() > 1) max.push_back(a);

  bool max_in_spec = true;
  for (int m : max)
    if (std::find(spec.begin(), spec.end(), m) == spec.end()) max_in_spec = false;

  if (!cs.flags.nabla_neutral || !max_in_spec) {
    std::string why = !cs.flags.nabla_neutral
                          ? "top is not commutator-neutral"
                          : "a maximal element is not prime; the ambient variety-level "
                            "hypotheses cannot hold";
    rep.skip("maximal_implies_prime", why);
    rep.skip("vanishing_only_at_top", why);
    return rep;
  }

  rep.add("maximal_implies_prime", true);
  bool ok = true;
  for (int t = 0; t < cs.size(); ++t) {
    bool empty = stone_sets(cs, t).V.empty();
    if (empty != (t == cs.lat.top())) { ok = false; break; }
  }
  rep.add("vanishing_only_at_top", ok);
  return rep;
}

}  // namespace retic
