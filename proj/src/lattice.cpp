#include "retic/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace retic {

std::vector<std::pair<int, int>> BoundedLattice::covers() const {
  std::vector<std::pair<int, int>> out;
  const int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !le(i, j)) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k)
        if (k != i && k != j && le(i, k) && le(k, j)) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  std::sort(out.begin(), out.end());
  return out;
}

BoundedLattice BoundedLattice::from_leq(std::vector<std::string> labels,
                                        std::vector<uint8_t> leq) {
  BoundedLattice l;
  l.labels = std::move(labels);
  l.leq = std::move(leq);
  const int n = l.size();
  if (l.leq.size() != static_cast<size_t>(n) * n)
    throw LatticeError("order relation has the wrong size");

  for (int i = 0; i < n; ++i)
    if (!l.le(i, i)) throw LatticeError("order is not reflexive");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (l.le(i, j) && l.le(j, i) && i != j)
        throw LatticeError("order is not antisymmetric");
      if (!l.le(i, j)) continue;
      for (int k = 0; k < n; ++k)
        if (l.le(j, k) && !l.le(i, k)) throw LatticeError("order is not transitive");
    }

  l.join_table.assign(static_cast<size_t>(n) * n, -1);
  l.meet_table.assign(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int jn = -1;
      for (int k = 0; k < n; ++k) {
        if (!l.le(i, k) || !l.le(j, k)) continue;
        if (jn < 0 || l.le(k, jn)) jn = k;
      }
      if (jn < 0 || !l.le(i, jn) || !l.le(j, jn))
        throw LatticeError("join of " + l.labels[i] + " and " + l.labels[j] + " does not exist");
      for (int k = 0; k < n; ++k)
        if (l.le(i, k) && l.le(j, k) && !l.le(jn, k))
          throw LatticeError("no least upper bound for " + l.labels[i] + ", " + l.labels[j]);
      l.join_table[static_cast<size_t>(i) * n + j] = jn;

      int mt = -1;
      for (int k = 0; k < n; ++k) {
        if (!l.le(k, i) || !l.le(k, j)) continue;
        if (mt < 0 || l.le(mt, k)) mt = k;
      }
      if (mt < 0)
        throw LatticeError("meet of " + l.labels[i] + " and " + l.labels[j] + " does not exist");
      for (int k = 0; k < n; ++k)
        if (l.le(k, i) && l.le(k, j) && !l.le(k, mt))
          throw LatticeError("no greatest lower bound for " + l.labels[i] + ", " + l.labels[j]);
      l.meet_table[static_cast<size_t>(i) * n + j] = mt;
    }

  l.bottom_ = -1;
  l.top_ = -1;
  for (int i = 0; i < n; ++i) {
    bool bot = true, top = true;
    for (int j = 0; j < n; ++j) {
      if (!l.le(i, j)) bot = false;
      if (!l.le(j, i)) top = false;
    }
    if (bot) l.bottom_ = i;
    if (top) l.top_ = i;
  }
  if (l.bottom_ < 0 || l.top_ < 0) throw LatticeError("lattice has no bounds");
  return l;
}

BoundedLattice BoundedLattice::from_covers(std::vector<std::string> labels,
                                           const std::vector<std::pair<int, int>>& covers) {
  const int n = static_cast<int>(labels.size());
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) leq[static_cast<size_t>(i) * n + i] = 1;
  for (auto [a, b] : covers) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw LatticeError("cover pair out of range");
    leq[static_cast<size_t>(a) * n + b] = 1;
  }
  // Warshall closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (leq[static_cast<size_t>(i) * n + k])
        for (int j = 0; j < n; ++j)
          if (leq[static_cast<size_t>(k) * n + j]) leq[static_cast<size_t>(i) * n + j] = 1;
  return from_leq(std::move(labels), std::move(leq));
}

BoundedLattice BoundedLattice::from_congruences(const CongruenceLattice& lat) {
  BoundedLattice l;
  const int n = lat.size();
  for (int i = 0; i < n; ++i)
    l.labels.push_back(lat.elems[i].to_string(*lat.algebra));
  l.leq = lat.leq;
  l.join_table = lat.join_table;
  l.meet_table = lat.meet_table;
  l.bottom_ = lat.bottom();
  l.top_ = lat.top();
  return l;
}

bool is_modular(const BoundedLattice& l) {
  const int n = l.size();
  // a <= c implies a v (b ^ c) = (a v b) ^ c.
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c) {
      if (!l.le(a, c)) continue;
      for (int b = 0; b < n; ++b)
        if (l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), c)) return false;
    }
  return true;
}

bool is_distributive(const BoundedLattice& l) {
  const int n = l.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return false;
  return true;
}

LatticeTests lattice_tests(const BoundedLattice& l) {
  return {is_modular(l), is_distributive(l)};
}

std::optional<int> complement_of(const BoundedLattice& l, int x) {
  for (int y = 0; y < l.size(); ++y)
    if (l.join(x, y) == l.top() && l.meet(x, y) == l.bottom()) return y;
  return std::nullopt;
}

std::vector<int> boolean_center_lattice(const BoundedLattice& l) {
  std::vector<int> out;
  for (int x = 0; x < l.size(); ++x)
    if (complement_of(l, x)) out.push_back(x);
  return out;
}

bool is_boolean(const BoundedLattice& l) {
  if (!is_distributive(l)) return false;
  for (int x = 0; x < l.size(); ++x)
    if (!complement_of(l, x)) return false;
  return true;
}

LatticeIdeal principal_ideal(const BoundedLattice& l, int x) {
  LatticeIdeal i;
  i.member.assign(l.size(), 0);
  for (int y = 0; y < l.size(); ++y)
    if (l.le(y, x)) i.member[y] = 1;
  i.top_elem = x;
  return i;
}

bool is_ideal(const BoundedLattice& l, const std::vector<uint8_t>& set) {
  bool nonempty = false;
  for (int x = 0; x < l.size(); ++x) {
    if (!set[x]) continue;
    nonempty = true;
    for (int y = 0; y < l.size(); ++y) {
      if (l.le(y, x) && !set[y]) return false;
      if (set[y] && !set[l.join(x, y)]) return false;
    }
  }
  return nonempty;
}

std::vector<LatticeIdeal> ideals(const BoundedLattice& l) {
  // A nonempty join-closed down-set of a finite lattice has a maximum, so the
  // ideals are exactly the principal ones.
  std::vector<LatticeIdeal> out;
  for (int x = 0; x < l.size(); ++x) out.push_back(principal_ideal(l, x));
  return out;
}

std::vector<LatticeIdeal> prime_ideals(const BoundedLattice& l) {
  std::vector<LatticeIdeal> out;
  for (int x = 0; x < l.size(); ++x) {
    if (x == l.top()) continue;  // proper only
    bool prime = true;
    for (int a = 0; a < l.size() && prime; ++a)
      for (int b = 0; b < l.size() && prime; ++b)
        if (l.le(l.meet(a, b), x) && !l.le(a, x) && !l.le(b, x)) prime = false;
    if (prime) out.push_back(principal_ideal(l, x));
  }
  return out;
}

std::vector<LatticeIdeal> max_ideals(const BoundedLattice& l) {
  // Maximal proper ideals are generated by coatoms.
  std::vector<LatticeIdeal> out;
  for (auto [a, b] : l.covers())
    if (b == l.top()) out.push_back(principal_ideal(l, a));
  return out;
}

LatticeIdeal annihilator(const BoundedLattice& l, const LatticeIdeal& i) {
  LatticeIdeal out;
  out.member.assign(l.size(), 0);
  int top = l.bottom();
  for (int a = 0; a < l.size(); ++a) {
    bool ok = true;
    for (int x = 0; x < l.size() && ok; ++x)
      if (i.contains(x) && l.meet(a, x) != l.bottom()) ok = false;
    if (ok) {
      out.member[a] = 1;
      top = l.join(top, a);
    }
  }
  out.top_elem = top;
  return out;
}

namespace {

std::vector<int> element_heights(const BoundedLattice& l) {
  // Longest chain from bottom.
  std::vector<int> h(l.size(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : l.covers())
      if (h[b] < h[a] + 1) {
        h[b] = h[a] + 1;
        changed = true;
      }
  }
  return h;
}

std::vector<uint64_t> iso_invariants(const BoundedLattice& l) {
  const int n = l.size();
  auto h = element_heights(l);
  std::vector<int> up(n, 0), down(n, 0), below(n, 0), above(n, 0);
  for (auto [a, b] : l.covers()) {
    ++up[a];
    ++down[b];
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (l.le(j, i) && i != j) ++below[i];
      if (l.le(i, j) && i != j) ++above[i];
    }
  std::vector<uint64_t> inv(n);
  for (int i = 0; i < n; ++i)
    inv[i] = (static_cast<uint64_t>(h[i]) << 48) ^ (static_cast<uint64_t>(up[i]) << 36) ^
             (static_cast<uint64_t>(down[i]) << 24) ^ (static_cast<uint64_t>(below[i]) << 12) ^
             static_cast<uint64_t>(above[i]);
  return inv;
}

bool iso_backtrack(const BoundedLattice& a, const BoundedLattice& b,
                   const std::vector<uint64_t>& ia, const std::vector<uint64_t>& ib,
                   std::vector<int>& map, std::vector<uint8_t>& used, int next) {
  const int n = a.size();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand] || ia[next] != ib[cand]) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      if (a.le(prev, next) != b.le(map[prev], cand)) ok = false;
      if (a.le(next, prev) != b.le(cand, map[prev])) ok = false;
    }
    if (!ok) continue;
    map[next] = cand;
    used[cand] = 1;
    if (iso_backtrack(a, b, ia, ib, map, used, next + 1)) return true;
    used[cand] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> lattice_iso(const BoundedLattice& a, const BoundedLattice& b) {
  if (a.size() != b.size()) return std::nullopt;
  auto ia = iso_invariants(a), ib = iso_invariants(b);
  auto sa = ia, sb = ib;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  std::vector<int> map(a.size(), -1);
  std::vector<uint8_t> used(a.size(), 0);
  if (iso_backtrack(a, b, ia, ib, map, used, 0)) return map;
  return std::nullopt;
}

std::pair<BoundedLattice, std::vector<int>> quotient_by_ideal(const BoundedLattice& l,
                                                              const LatticeIdeal& i) {
  const int m = i.top_elem;
  const int n = l.size();
  // Image of x -> x v m carries the quotient.
  std::vector<int> image;
  std::vector<int> where(n, -1);
  for (int x = 0; x < n; ++x) {
    int v = l.join(x, m);
    if (where[v] < 0) {
      where[v] = 0;
      image.push_back(v);
    }
  }
  std::sort(image.begin(), image.end());
  for (size_t k = 0; k < image.size(); ++k) where[image[k]] = static_cast<int>(k);

  BoundedLattice q;
  const int qn = static_cast<int>(image.size());
  for (int v : image) q.labels.push_back(l.labels[v]);
  q.leq.assign(static_cast<size_t>(qn) * qn, 0);
  for (int x = 0; x < qn; ++x)
    for (int y = 0; y < qn; ++y)
      q.leq[static_cast<size_t>(x) * qn + y] = l.le(image[x], image[y]) ? 1 : 0;
  q = BoundedLattice::from_leq(std::move(q.labels), std::move(q.leq));

  std::vector<int> map(n);
  for (int x = 0; x < n; ++x) map[x] = where[l.join(x, m)];
  return {q, map};
}

BoundedLattice chain_lattice(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) leq[static_cast<size_t>(i) * n + j] = 1;
  return BoundedLattice::from_leq(std::move(labels), std::move(leq));
}

BoundedLattice boolean_lattice(int k) {
  const int n = 1 << k;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i & j) == i) leq[static_cast<size_t>(i) * n + j] = 1;
  return BoundedLattice::from_leq(std::move(labels), std::move(leq));
}

BoundedLattice product_lattice(const BoundedLattice& a, const BoundedLattice& b) {
  const int na = a.size(), nb = b.size(), n = na * nb;
  std::vector<std::string> labels;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      labels.push_back("(" + a.labels[i] + "," + b.labels[j] + ")");
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.le(i / nb, j / nb) && b.le(i % nb, j % nb))
        leq[static_cast<size_t>(i) * n + j] = 1;
  return BoundedLattice::from_leq(std::move(labels), std::move(leq));
}

BoundedLattice ordinal_sum(const BoundedLattice& a, const BoundedLattice& b) {
  // Top of a is identified with bottom of b.
  const int na = a.size(), nb = b.size(), n = na + nb - 1;
  auto idx_a = [&](int x) { return x; };
  auto idx_b = [&](int y) {
    if (y == b.bottom()) return a.top();
    return na + (y > b.bottom() ? y - 1 : y);
  };
  std::vector<std::string> labels(n);
  for (int x = 0; x < na; ++x) labels[idx_a(x)] = "s" + std::to_string(idx_a(x));
  for (int y = 0; y < nb; ++y) labels[idx_b(y)] = "s" + std::to_string(idx_b(y));
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < na; ++y)
      if (a.le(x, y)) leq[static_cast<size_t>(idx_a(x)) * n + idx_a(y)] = 1;
  for (int x = 0; x < nb; ++x)
    for (int y = 0; y < nb; ++y)
      if (b.le(x, y)) leq[static_cast<size_t>(idx_b(x)) * n + idx_b(y)] = 1;
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y)
      leq[static_cast<size_t>(idx_a(x)) * n + idx_b(y)] = 1;
  return BoundedLattice::from_leq(std::move(labels), std::move(leq));
}

std::vector<std::pair<std::string, BoundedLattice>> named_small_lattices() {
  std::vector<std::pair<std::string, BoundedLattice>> out;
  out.emplace_back("L1", chain_lattice(1));
  out.emplace_back("L2", chain_lattice(2));
  out.emplace_back("L3", chain_lattice(3));
  out.emplace_back("L4", chain_lattice(4));
  out.emplace_back("L5", chain_lattice(5));
  out.emplace_back("L2^2", boolean_lattice(2));
  out.emplace_back("L2^3", boolean_lattice(3));
  out.emplace_back("L2+L2^2", ordinal_sum(chain_lattice(2), boolean_lattice(2)));
  out.emplace_back("L2+L2+L2", ordinal_sum(ordinal_sum(chain_lattice(2), chain_lattice(2)),
                                           chain_lattice(2)));
  return out;
}

std::optional<std::string> recognize_lattice(const BoundedLattice& l) {
  for (const auto& [name, shape] : named_small_lattices())
    if (lattice_iso(l, shape)) return name;
  return std::nullopt;
}

FiniteAlgebra lattice_as_algebra(const BoundedLattice& l, const std::string& name) {
  const int n = l.size();
  Signature sig;
  sig.ops = {{"join", 2}, {"meet", 2}, {"zero", 0}, {"one", 0}};
  std::vector<std::vector<int>> tables(4);
  tables[0].resize(static_cast<size_t>(n) * n);
  tables[1].resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      tables[0][static_cast<size_t>(i) * n + j] = l.join(i, j);
      tables[1][static_cast<size_t>(i) * n + j] = l.meet(i, j);
    }
  tables[2] = {l.bottom()};
  tables[3] = {l.top()};
  return FiniteAlgebra(name, l.labels, sig, std::move(tables));
}

}  // namespace retic
