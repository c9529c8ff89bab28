// Brute-force ground truth used only by the tests: partition enumeration,
// minimal-compatible-partition search, and independent group-theoretic
// commutators. Everything here is deliberately naive.
#ifndef RETIC_TESTS_ORACLES_HPP_
#define RETIC_TESTS_ORACLES_HPP_

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <vector>

#include "retic/commutator.hpp"
#include "retic/congruence.hpp"
#include "retic/document.hpp"

namespace oracles {

using namespace retic;

// All partitions of {0..n-1} as canonical representative vectors
// (restricted growth enumeration).
inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> assign(n, 0);
  auto emit = [&] {
    std::vector<int> rep(n);
    std::vector<int> first(n, -1);
    for (int i = 0; i < n; ++i) {
      if (first[assign[i]] < 0) first[assign[i]] = i;
      rep[i] = first[assign[i]];
    }
    out.push_back(rep);
  };
  // assign[i] <= 1 + max(assign[0..i-1])
  while (true) {
    emit();
    int i = n - 1;
    for (; i > 0; --i) {
      int mx = 0;
      for (int j = 0; j < i; ++j) mx = std::max(mx, assign[j]);
      if (assign[i] <= mx) {
        ++assign[i];
        for (int j = i + 1; j < n; ++j) assign[j] = 0;
        break;
      }
      assign[i] = 0;
    }
    if (i == 0) break;
  }
  return out;
}

inline std::vector<Congruence> brute_congruences(const FiniteAlgebra& alg) {
  std::vector<Congruence> out;
  for (auto& rep : all_partitions(alg.size())) {
    Congruence c = Congruence::from_rep(rep);
    if (!check_compatible(alg, c)) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Least compatible partition containing the pairs: meet of all such.
inline Congruence brute_cg(const FiniteAlgebra& alg,
                           const std::vector<std::pair<int, int>>& pairs) {
  Congruence best = Congruence::all(alg.size());
  for (const auto& c : brute_congruences(alg)) {
    bool contains = true;
    for (auto [x, y] : pairs)
      if (!c.related(x, y)) { contains = false; break; }
    if (contains) best = best.meet(c);
  }
  return best;
}

// Integer quaternions: elements encoded as (sign, axis) with axis 0=1, 1=i,
// 2=j, 3=k; multiplication through the 4-dimensional real representation.
struct Quat {
  std::array<int, 4> v{};  // coefficients of 1, i, j, k
};

inline Quat quat_mul(const Quat& p, const Quat& q) {
  const auto& a = p.v;
  const auto& b = q.v;
  Quat r;
  r.v[0] = a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
  r.v[1] = a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2];
  r.v[2] = a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1];
  r.v[3] = a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0];
  return r;
}

// Unit quaternions in the fixture's label order 1 -1 i -i j -j k -k.
inline std::vector<Quat> quat_units() {
  std::vector<Quat> out(8);
  for (int axis = 0; axis < 4; ++axis)
    for (int s = 0; s < 2; ++s) {
      Quat q;
      q.v[axis] = s == 0 ? 1 : -1;
      out[axis * 2 + s] = q;
    }
  return out;
}

inline int quat_index(const Quat& q) {
  auto units = quat_units();
  for (int i = 0; i < 8; ++i)
    if (units[i].v == q.v) return i;
  return -1;
}

// Subgroup of a group fixture generated by a set (elements as indices; the
// fixture's first operation is the product, second the inverse).
inline std::vector<int> generated_subgroup(const FiniteAlgebra& g, std::vector<int> gens) {
  std::set<int> s(gens.begin(), gens.end());
  int e = g.apply(2, {});
  s.insert(e);
  bool grown = true;
  while (grown) {
    grown = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int x : cur) {
      int args1[1] = {x};
      if (s.insert(g.apply(1, args1)).second) grown = true;
      for (int y : cur) {
        int args2[2] = {x, y};
        if (s.insert(g.apply(0, args2)).second) grown = true;
      }
    }
  }
  return {s.begin(), s.end()};
}

// Normal-subgroup commutator [H,K]: subgroup generated by h^-1 k^-1 h k.
inline std::vector<int> group_commutator_subgroup(const FiniteAlgebra& g,
                                                  const std::vector<int>& h,
                                                  const std::vector<int>& k) {
  std::vector<int> gens;
  for (int x : h)
    for (int y : k) {
      int ix[1] = {x}, iy[1] = {y};
      int xi = g.apply(1, ix), yi = g.apply(1, iy);
      int t1[2] = {xi, yi};
      int t2[2] = {g.apply(0, t1), x};
      int t3[2] = {g.apply(0, t2), y};
      gens.push_back(g.apply(0, t3));
    }
  return generated_subgroup(g, gens);
}

// The congruence of a group fixture attached to a normal subgroup: cosets.
inline Congruence congruence_of_subgroup(const FiniteAlgebra& g, const std::vector<int>& h) {
  const int n = g.size();
  std::vector<std::vector<int>> blocks;
  std::vector<char> seen(n, 0);
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<int> coset;
    for (int m : h) {
      int args[2] = {m, x};
      int y = g.apply(0, args);
      coset.push_back(y);
      seen[y] = 1;
    }
    blocks.push_back(coset);
  }
  return Congruence::from_blocks(n, blocks);
}

// The subgroup of a congruence: the block of the unit.
inline std::vector<int> subgroup_of_congruence(const FiniteAlgebra& g, const Congruence& c) {
  int e = g.apply(2, {});
  std::vector<int> out;
  for (int x = 0; x < g.size(); ++x)
    if (c.related(x, e)) out.push_back(x);
  return out;
}

// Small random algebras for property tests (deterministic seed).
inline FiniteAlgebra random_groupoid(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  Signature sig;
  sig.ops = {{"f", 2}};
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (auto& v : table) v = pick(rng);
  return FiniteAlgebra("rnd" + std::to_string(seed), labels, sig, {table});
}

}  // namespace oracles

#endif  // RETIC_TESTS_ORACLES_HPP_
