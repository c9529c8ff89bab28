#include "retic/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace retic {

Congruence Congruence::identity(int n) {
  std::vector<int> r(n);
  std::iota(r.begin(), r.end(), 0);
  return from_rep(std::move(r));
}

Congruence Congruence::all(int n) {
  return from_rep(std::vector<int>(n, 0));
}

Congruence Congruence::from_rep(std::vector<int> rep) {
  Congruence c;
  c.rep_ = std::move(rep);
  const int n = c.size();
  for (int x = 0; x < n; ++x) {
    int r = c.rep_[x];
    if (r < 0 || r >= n || c.rep_[r] != r || r > x)
      throw AlgebraError("representative vector is not canonical");
  }
  return c;
}

Congruence Congruence::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> rep(n, -1);
  for (const auto& b : blocks) {
    int least = n;
    for (int x : b) least = std::min(least, x);
    for (int x : b) {
      if (x < 0 || x >= n || rep[x] != -1)
        throw AlgebraError("blocks do not form a partition");
      rep[x] = least;
    }
  }
  for (int x = 0; x < n; ++x)
    if (rep[x] == -1) rep[x] = x;
  return from_rep(std::move(rep));
}

int Congruence::block_count() const {
  int c = 0;
  for (int x = 0; x < size(); ++x)
    if (rep_[x] == x) ++c;
  return c;
}

std::vector<std::vector<int>> Congruence::blocks() const {
  std::vector<std::vector<int>> out;
  std::vector<int> where(size(), -1);
  for (int x = 0; x < size(); ++x) {
    int r = rep_[x];
    if (where[r] < 0) {
      where[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[where[r]].push_back(x);
  }
  return out;
}

std::vector<std::pair<int, int>> Congruence::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size(); ++x)
    for (int y = x + 1; y < size(); ++y)
      if (rep_[x] == rep_[y]) out.emplace_back(x, y);
  return out;
}

bool Congruence::leq(const Congruence& other) const {
  for (int x = 0; x < size(); ++x)
    if (other.rep_[x] != other.rep_[rep_[x]]) return false;
  return true;
}

Congruence Congruence::meet(const Congruence& other) const {
  const int n = size();
  std::map<std::pair<int, int>, int> least;
  std::vector<int> rep(n);
  for (int x = 0; x < n; ++x) {
    auto key = std::make_pair(rep_[x], other.rep_[x]);
    auto it = least.find(key);
    if (it == least.end()) {
      least.emplace(key, x);
      rep[x] = x;
    } else {
      rep[x] = it->second;
    }
  }
  return from_rep(std::move(rep));
}

bool Congruence::operator<(const Congruence& o) const {
  int bc = block_count(), obc = o.block_count();
  if (bc != obc) return bc > obc;
  return rep_ < o.rep_;
}

std::string Congruence::to_string(const FiniteAlgebra& alg) const {
  std::string s;
  for (const auto& b : blocks()) {
    s += "{";
    for (size_t i = 0; i < b.size(); ++i) {
      if (i) s += ",";
      s += alg.label(b[i]);
    }
    s += "}";
  }
  return s;
}

std::optional<CompatibilityViolation> check_compatible(const FiniteAlgebra& alg,
                                                       const Congruence& c) {
  const auto& sig = alg.signature();
  const int n = alg.size();
  // Single-coordinate substitution suffices.
  for (size_t op = 0; op < sig.ops.size(); ++op) {
    const int k = sig.ops[op].arity;
    if (k == 0) continue;
    std::vector<int> args(k, 0);
    while (true) {
      int base = alg.apply(static_cast<int>(op), args);
      for (int p = 0; p < k; ++p) {
        int orig = args[p];
        for (int y = 0; y < n; ++y) {
          if (y == orig || !c.related(orig, y)) continue;
          args[p] = y;
          int other = alg.apply(static_cast<int>(op), args);
          args[p] = orig;
          if (!c.related(base, other)) {
            CompatibilityViolation v;
            v.op = sig.ops[op].name;
            v.left_args = args;
            v.right_args = args;
            v.right_args[p] = y;
            return v;
          }
        }
      }
      int p = k - 1;
      for (; p >= 0; --p) {
        if (++args[p] < n) break;
        args[p] = 0;
      }
      if (p < 0) break;
    }
  }
  return std::nullopt;
}

namespace {

// Union-find with merge propagation through the operation tables: when two
// blocks merge, translations of one bridging pair are re-examined.
class CongruenceCloser {
 public:
  explicit CongruenceCloser(const FiniteAlgebra& alg) : alg_(alg), parent_(alg.size()) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void merge(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return;
    if (rx > ry) std::swap(rx, ry);  // union by least representative
    parent_[ry] = rx;
    queue_.emplace_back(rx, ry);
  }

  void close() {
    const auto& sig = alg_.signature();
    const int n = alg_.size();
    while (!queue_.empty()) {
      auto [u, v] = queue_.front();
      queue_.pop_front();
      for (size_t op = 0; op < sig.ops.size(); ++op) {
        const int k = sig.ops[op].arity;
        if (k == 0) continue;
        std::vector<int> args(k, 0);
        for (int pos = 0; pos < k; ++pos) {
          // Enumerate contexts over the remaining coordinates.
          std::fill(args.begin(), args.end(), 0);
          while (true) {
            args[pos] = u;
            int a = alg_.apply(static_cast<int>(op), args);
            args[pos] = v;
            int b = alg_.apply(static_cast<int>(op), args);
            merge(a, b);
            int p = k - 1;
            for (; p >= 0; --p) {
              if (p == pos) continue;
              if (++args[p] < n) break;
              args[p] = 0;
            }
            if (p < 0) break;
          }
        }
      }
    }
  }

  Congruence result() {
    std::vector<int> rep(alg_.size());
    for (int x = 0; x < alg_.size(); ++x) rep[x] = find(x);
    return Congruence::from_rep(std::move(rep));
  }

 private:
  const FiniteAlgebra& alg_;
  std::vector<int> parent_;
  std::deque<std::pair<int, int>> queue_;
};

}  // namespace

Congruence cg_generate(const FiniteAlgebra& alg, const std::vector<std::pair<int, int>>& pairs) {
  CongruenceCloser c(alg);
  for (auto [x, y] : pairs) c.merge(x, y);
  c.close();
  return c.result();
}

Congruence congruence_join(const FiniteAlgebra& alg, const Congruence& a, const Congruence& b) {
  CongruenceCloser c(alg);
  for (int x = 0; x < alg.size(); ++x) {
    c.merge(x, a.rep(x));
    c.merge(x, b.rep(x));
  }
  c.close();
  return c.result();
}

int CongruenceLattice::index_of(const Congruence& c) const {
  for (int i = 0; i < size(); ++i)
    if (elems[i] == c) return i;
  return -1;
}

CongruenceLattice enumerate_congruences(const AlgebraPtr& alg) {
  const int n = alg->size();
  std::map<std::vector<int>, int> seen;
  std::vector<Congruence> all;
  std::vector<uint8_t> is_principal;
  auto add = [&](const Congruence& c, bool principal) {
    auto it = seen.find(c.rep_vector());
    if (it == seen.end()) {
      seen.emplace(c.rep_vector(), static_cast<int>(all.size()));
      all.push_back(c);
      is_principal.push_back(principal);
      return true;
    }
    if (principal) is_principal[it->second] = 1;
    return false;
  };

  add(Congruence::identity(n), true);  // Cg(x,x)
  std::vector<Congruence> principals;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      Congruence c = cg_generate(*alg, {{x, y}});
      add(c, true);
      principals.push_back(c);
    }

  // Join-closure over a worklist; every congruence is a join of principals.
  std::deque<int> work;
  for (int i = 0; i < static_cast<int>(all.size()); ++i) work.push_back(i);
  while (!work.empty()) {
    Congruence c = all[work.front()];
    work.pop_front();
    for (const auto& p : principals) {
      if (p.leq(c)) continue;
      Congruence j = congruence_join(*alg, c, p);
      if (add(j, false)) work.push_back(static_cast<int>(all.size()) - 1);
    }
  }

  // Sort: block count descending, then lex rep vector.
  std::vector<int> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return all[i] < all[j]; });

  CongruenceLattice lat;
  lat.algebra = alg;
  for (int i : order) {
    lat.elems.push_back(all[i]);
    lat.principal.push_back(is_principal[i]);
  }
  const size_t m = lat.elems.size();
  lat.leq.assign(m * m, 0);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      lat.leq[i * m + j] = lat.elems[i].leq(lat.elems[j]) ? 1 : 0;

  lat.join_table.assign(m * m, -1);
  lat.meet_table.assign(m * m, -1);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      Congruence mt = lat.elems[i].meet(lat.elems[j]);
      int mi = lat.index_of(mt);
      if (mi < 0) throw AlgebraError("congruence set not closed under meet");
      lat.meet_table[i * m + j] = mi;
      Congruence jn = congruence_join(*alg, lat.elems[i], lat.elems[j]);
      int ji = lat.index_of(jn);
      if (ji < 0) throw AlgebraError("congruence set not closed under join");
      lat.join_table[i * m + j] = ji;
    }

  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      if (i == j || !lat.le(static_cast<int>(i), static_cast<int>(j))) continue;
      bool cover = true;
      for (size_t k = 0; k < m && cover; ++k)
        if (k != i && k != j && lat.le(static_cast<int>(i), static_cast<int>(k)) &&
            lat.le(static_cast<int>(k), static_cast<int>(j)))
          cover = false;
      if (cover) lat.covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  std::sort(lat.covers.begin(), lat.covers.end());
  return lat;
}

std::vector<int> maximal_congruences(const CongruenceLattice& lat) {
  std::vector<int> out;
  const int top = lat.top();
  if (lat.size() == 1) return out;  // trivial algebra: no proper congruence
  for (auto [a, b] : lat.covers)
    if (b == top) out.push_back(a);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> singleton_subuniverses(const FiniteAlgebra& alg) {
  std::vector<int> out;
  const auto& sig = alg.signature();
  for (int x = 0; x < alg.size(); ++x) {
    bool ok = true;
    for (size_t op = 0; op < sig.ops.size() && ok; ++op) {
      std::vector<int> args(sig.ops[op].arity, x);
      if (alg.apply(static_cast<int>(op), args) != x) ok = false;
    }
    if (ok) out.push_back(x);
  }
  return out;
}

std::pair<AlgebraPtr, SurjectiveMorphism> quotient_algebra(const AlgebraPtr& a,
                                                           const Congruence& theta) {
  if (theta.size() != a->size())
    throw AlgebraError("congruence is over a different carrier");
  if (auto v = check_compatible(*a, theta)) {
    std::string args;
    for (size_t i = 0; i < v->left_args.size(); ++i) {
      if (i) args += ",";
      args += a->label(v->left_args[i]) + "/" + a->label(v->right_args[i]);
    }
    throw AlgebraError("partition is not compatible with operation " + v->op +
                       " at (" + args + ")");
  }

  std::vector<int> reps;  // least representative of each block, ascending
  for (int x = 0; x < a->size(); ++x)
    if (theta.rep(x) == x) reps.push_back(x);
  std::vector<int> block_index(a->size(), -1);
  for (size_t i = 0; i < reps.size(); ++i) block_index[reps[i]] = static_cast<int>(i);

  std::vector<std::string> labels;
  for (int r : reps) labels.push_back(a->label(r));

  const auto& sig = a->signature();
  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> tables;
  for (size_t op = 0; op < sig.ops.size(); ++op) {
    const int k = sig.ops[op].arity;
    size_t total = 1;
    for (int i = 0; i < k; ++i) total *= static_cast<size_t>(m);
    std::vector<int> t(total);
    std::vector<int> args(k, 0), outer(k);
    size_t idx = 0;
    while (true) {
      for (int p = 0; p < k; ++p) outer[p] = reps[args[p]];
      t[idx++] = block_index[theta.rep(a->apply(static_cast<int>(op), outer))];
      int p = k - 1;
      for (; p >= 0; --p) {
        if (++args[p] < m) break;
        args[p] = 0;
      }
      if (p < 0 || k == 0) break;
    }
    tables.push_back(std::move(t));
  }

  auto q = std::make_shared<FiniteAlgebra>(a->name() + "/theta", std::move(labels), sig,
                                           std::move(tables));
  std::vector<int> proj(a->size());
  for (int x = 0; x < a->size(); ++x) proj[x] = block_index[theta.rep(x)];
  return {q, SurjectiveMorphism(a, q, std::move(proj))};
}

Congruence kernel(const SurjectiveMorphism& f) {
  return pull_back(f, Congruence::identity(f.target->size()));
}

Congruence pull_back(const SurjectiveMorphism& f, const Congruence& beta) {
  const int n = f.source->size();
  std::vector<int> least(f.target->size(), -1);
  std::vector<int> rep(n);
  for (int x = 0; x < n; ++x) {
    int cls = beta.rep(f.map[x]);
    if (least[cls] < 0) least[cls] = x;
    rep[x] = least[cls];
  }
  return Congruence::from_rep(std::move(rep));
}

Congruence transport_congruence(const SurjectiveMorphism& f, const Congruence& alpha) {
  Congruence lifted = congruence_join(*f.source, alpha, kernel(f));
  const int m = f.target->size();
  // lifted contains Ker(f), so blocks map to well-defined target blocks.
  std::vector<int> src_of(m, -1);
  for (int x = 0; x < f.source->size(); ++x)
    if (src_of[f.map[x]] < 0) src_of[f.map[x]] = x;
  std::vector<int> least(f.source->size(), -1);
  std::vector<int> rep(m);
  for (int y = 0; y < m; ++y) {
    int cls = lifted.rep(src_of[y]);
    if (least[cls] < 0) least[cls] = y;
    rep[y] = least[cls];
  }
  return Congruence::from_rep(std::move(rep));
}

}  // namespace retic
