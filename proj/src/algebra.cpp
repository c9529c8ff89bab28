#include "retic/algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace retic {

int Signature::index_of(const std::string& name) const {
  for (size_t i = 0; i < ops.size(); ++i)
    if (ops[i].name == name) return static_cast<int>(i);
  return -1;
}

void Signature::validate() const {
  std::set<std::string> seen;
  for (const auto& op : ops) {
    if (op.arity < 0) throw AlgebraError("negative arity for operation " + op.name);
    if (!seen.insert(op.name).second)
      throw AlgebraError("duplicate operation symbol " + op.name);
  }
}

namespace {
size_t pow_size(int n, int k) {
  size_t r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<size_t>(n);
  return r;
}
}  // namespace

FiniteAlgebra::FiniteAlgebra(std::string name, std::vector<std::string> labels,
                             Signature sig, std::vector<std::vector<int>> tables)
    : name_(std::move(name)), labels_(std::move(labels)), sig_(std::move(sig)),
      tables_(std::move(tables)) {
  if (labels_.empty()) throw AlgebraError("carrier must be non-empty");
  sig_.validate();
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw AlgebraError("duplicate element label " + l);
  if (tables_.size() != sig_.ops.size())
    throw AlgebraError("expected one table per operation");
  const int n = size();
  for (size_t i = 0; i < tables_.size(); ++i) {
    const auto& op = sig_.ops[i];
    if (tables_[i].size() != pow_size(n, op.arity))
      throw AlgebraError("table for " + op.name + " is not total");
    for (int v : tables_[i])
      if (v < 0 || v >= n)
        throw AlgebraError("table for " + op.name + " has an entry outside the carrier");
  }
}

int FiniteAlgebra::index_of_label(const std::string& l) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == l) return i;
  return -1;
}

int FiniteAlgebra::apply(int op, std::span<const int> args) const {
  const auto& t = tables_[op];
  size_t idx = 0;
  for (int a : args) idx = idx * static_cast<size_t>(size()) + static_cast<size_t>(a);
  return t[idx];
}

int FiniteAlgebra::evaluate_indices(const std::string& op, std::span<const int> args) const {
  int oi = sig_.index_of(op);
  if (oi < 0) throw AlgebraError("unknown operation symbol " + op);
  if (static_cast<int>(args.size()) != sig_.ops[oi].arity)
    throw AlgebraError("arity mismatch for " + op);
  for (int a : args)
    if (a < 0 || a >= size()) throw AlgebraError("argument outside the carrier");
  return apply(oi, args);
}

int FiniteAlgebra::evaluate(const std::string& op, const std::vector<std::string>& args) const {
  std::vector<int> idx;
  idx.reserve(args.size());
  for (const auto& l : args) {
    int x = index_of_label(l);
    if (x < 0) throw AlgebraError("label " + l + " not in carrier");
    idx.push_back(x);
  }
  return evaluate_indices(op, idx);
}

FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const auto& sa = a.signature();
  const auto& sb = b.signature();
  if (sa.ops.size() != sb.ops.size())
    throw AlgebraError("signature mismatch in direct product");
  for (size_t i = 0; i < sa.ops.size(); ++i)
    if (sa.ops[i].name != sb.ops[i].name || sa.ops[i].arity != sb.ops[i].arity)
      throw AlgebraError("signature mismatch in direct product at " + sa.ops[i].name);

  const int na = a.size(), nb = b.size();
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(na) * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");

  std::vector<std::vector<int>> tables;
  for (size_t op = 0; op < sa.ops.size(); ++op) {
    const int k = sa.ops[op].arity;
    std::vector<int> t(pow_size(na * nb, k));
    std::vector<int> args(k, 0);
    std::vector<int> ai(k), bi(k);
    size_t idx = 0;
    while (true) {
      for (int p = 0; p < k; ++p) {
        ai[p] = args[p] / nb;
        bi[p] = args[p] % nb;
      }
      int ra = a.apply(static_cast<int>(op), ai);
      int rb = b.apply(static_cast<int>(op), bi);
      t[idx++] = ra * nb + rb;
      int p = k - 1;
      for (; p >= 0; --p) {
        if (++args[p] < na * nb) break;
        args[p] = 0;
      }
      if (p < 0) break;
    }
    tables.push_back(std::move(t));
  }
  return FiniteAlgebra(a.name() + "x" + b.name(), std::move(labels), sa, std::move(tables));
}

SurjectiveMorphism::SurjectiveMorphism(AlgebraPtr src, AlgebraPtr tgt, std::vector<int> m)
    : source(std::move(src)), target(std::move(tgt)), map(std::move(m)) {
  if (static_cast<int>(map.size()) != source->size())
    throw AlgebraError("morphism map must be total on the source carrier");
  std::vector<char> hit(target->size(), 0);
  for (int v : map) {
    if (v < 0 || v >= target->size())
      throw AlgebraError("morphism map has a value outside the target carrier");
    hit[v] = 1;
  }
  for (char h : hit)
    if (!h) throw AlgebraError("morphism is not onto the target");

  const auto& sig = source->signature();
  if (sig.ops.size() != target->signature().ops.size())
    throw AlgebraError("morphism endpoints have different signatures");
  for (size_t op = 0; op < sig.ops.size(); ++op) {
    const int k = sig.ops[op].arity;
    std::vector<int> args(k, 0), im(k);
    while (true) {
      for (int p = 0; p < k; ++p) im[p] = map[args[p]];
      int lhs = map[source->apply(static_cast<int>(op), args)];
      int rhs = target->apply(static_cast<int>(op), im);
      if (lhs != rhs)
        throw AlgebraError("map does not commute with operation " + sig.ops[op].name);
      int p = k - 1;
      for (; p >= 0; --p) {
        if (++args[p] < source->size()) break;
        args[p] = 0;
      }
      if (p < 0 || k == 0) break;
    }
  }
}

SurjectiveMorphism compose(const SurjectiveMorphism& g, const SurjectiveMorphism& f) {
  if (f.target.get() != g.source.get() &&
      f.target->labels() != g.source->labels())
    throw AlgebraError("morphisms are not composable");
  std::vector<int> m(f.map.size());
  for (size_t i = 0; i < f.map.size(); ++i) m[i] = g.map[f.map[i]];
  return SurjectiveMorphism(f.source, g.target, std::move(m));
}

SurjectiveMorphism identity_morphism(const AlgebraPtr& a) {
  std::vector<int> m(a->size());
  for (int i = 0; i < a->size(); ++i) m[i] = i;
  return SurjectiveMorphism(a, a, std::move(m));
}

SurjectiveMorphism projection_morphism(const AlgebraPtr& prod, const AlgebraPtr& factor, int which) {
  std::vector<int> m(prod->size());
  const int nb = which == 0 ? prod->size() / factor->size() : factor->size();
  for (int i = 0; i < prod->size(); ++i)
    m[i] = which == 0 ? i / nb : i % nb;
  return SurjectiveMorphism(prod, factor, std::move(m));
}

std::vector<std::vector<int>> generate_subuniverse(const FiniteAlgebra& alg, int k,
                                                   const std::vector<std::vector<int>>& generators) {
  if (k <= 0) throw AlgebraError("tuple width must be positive");
  const int n = alg.size();
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != k) throw AlgebraError("generator tuple of wrong width");
    for (int x : g)
      if (x < 0 || x >= n) throw AlgebraError("generator tuple outside the carrier");
  }

  // Tuples hash to fixed-width integers when k*ceil(log2 n) fits a word.
  int bits = 1;
  while ((1 << bits) < n) ++bits;
  const bool packable = static_cast<size_t>(k) * bits <= 63;

  auto pack = [&](const std::vector<int>& t) {
    uint64_t code = 0;
    for (int x : t) code = (code << bits) | static_cast<uint64_t>(x);
    return code;
  };

  std::vector<std::vector<int>> list;
  std::unordered_set<uint64_t> seen_packed;
  std::set<std::vector<int>> seen_tuples;
  auto try_add = [&](const std::vector<int>& t) {
    if (packable ? seen_packed.insert(pack(t)).second : seen_tuples.insert(t).second)
      list.push_back(t);
  };
  for (const auto& g : generators) try_add(g);

  const auto& sig = alg.signature();
  // Nullary constants enter as constant tuples.
  for (size_t op = 0; op < sig.ops.size(); ++op)
    if (sig.ops[op].arity == 0)
      try_add(std::vector<int>(k, alg.apply(static_cast<int>(op), {})));

  // Worklist over newly added tuples: every operation applied to argument
  // tuples with at least one new component tuple.
  size_t frontier_begin = 0;
  std::vector<int> result(k);
  while (frontier_begin < list.size()) {
    size_t frontier_end = list.size();
    for (size_t op = 0; op < sig.ops.size(); ++op) {
      const int ar = sig.ops[op].arity;
      if (ar == 0) continue;
      std::vector<size_t> choice(ar, 0);
      std::vector<int> args(ar);
      while (true) {
        bool has_new = false;
        for (size_t c : choice)
          if (c >= frontier_begin) { has_new = true; break; }
        if (has_new) {
          for (int pos = 0; pos < k; ++pos) {
            for (int p = 0; p < ar; ++p) args[p] = list[choice[p]][pos];
            result[pos] = alg.apply(static_cast<int>(op), args);
          }
          try_add(result);
        }
        int p = ar - 1;
        for (; p >= 0; --p) {
          if (++choice[p] < frontier_end) break;
          choice[p] = 0;
        }
        if (p < 0) break;
      }
    }
    frontier_begin = frontier_end;
  }

  std::sort(list.begin(), list.end());
  return list;
}

FiniteAlgebra subalgebra(const FiniteAlgebra& alg, const std::vector<int>& universe) {
  std::vector<int> sorted = universe;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> pos(alg.size(), -1);
  for (size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = static_cast<int>(i);

  std::vector<std::string> labels;
  for (int x : sorted) labels.push_back(alg.label(x));

  const auto& sig = alg.signature();
  std::vector<std::vector<int>> tables;
  const int m = static_cast<int>(sorted.size());
  for (size_t op = 0; op < sig.ops.size(); ++op) {
    const int k = sig.ops[op].arity;
    std::vector<int> t(pow_size(m, k));
    std::vector<int> args(k, 0), outer(k);
    size_t idx = 0;
    while (true) {
      for (int p = 0; p < k; ++p) outer[p] = sorted[args[p]];
      int v = alg.apply(static_cast<int>(op), outer);
      if (pos[v] < 0)
        throw AlgebraError("set is not closed under operation " + sig.ops[op].name);
      t[idx++] = pos[v];
      int p = k - 1;
      for (; p >= 0; --p) {
        if (++args[p] < m) break;
        args[p] = 0;
      }
      if (p < 0 || k == 0) break;
    }
    tables.push_back(std::move(t));
  }
  return FiniteAlgebra(alg.name() + "_sub", std::move(labels), sig, std::move(tables));
}

}  // namespace retic
