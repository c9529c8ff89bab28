#include "retic/commutator.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>

namespace retic {

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail) return false;
  return true;
}

void Report::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail,
                    std::move(detail)});
}

void Report::skip(std::string name, std::string why) {
  checks.push_back({std::move(name), CheckStatus::skipped, std::move(why)});
}

namespace {

// Generating pairs of a congruence: (least, x) within each block.
std::vector<std::pair<int, int>> star_pairs(const Congruence& c) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < c.size(); ++x)
    if (c.rep(x) != x) out.emplace_back(c.rep(x), x);
  return out;
}

// Matrices are 4-tuples (x,y,z,w) read as rows (x,y) over (z,w); we store
// them as a pair of columns (x,z), (y,w), both drawn from the compatible
// reflexive closure R of the alpha generators. The least fixed point over
// this matrix family equals the one over the full M(alpha,beta): the term
// condition decomposes over generating pairs of the first argument, and the
// two-directional forcing rule makes row orientation immaterial.
//
// Generation and forcing are interleaved: delta only ever contains forced
// pairs, so once it reaches the bound alpha ^ beta the cell is decided and
// the rest of the closure is skipped.
class CommutatorCell {
 public:
  CommutatorCell(const FiniteAlgebra& alg, const std::vector<std::pair<int, int>>& alpha_gens,
                 const Congruence& beta)
      : alg_(alg), n_(alg.size()) {
    std::vector<std::vector<int>> gen2;
    for (auto [a, b] : alpha_gens) gen2.push_back({a, b});
    for (int e = 0; e < n_; ++e) gen2.push_back({e, e});
    auto closed = generate_subuniverse(alg, 2, gen2);
    ridx_.assign(static_cast<size_t>(n_) * n_, -1);
    for (const auto& p : closed) {
      ridx_[static_cast<size_t>(p[0]) * n_ + p[1]] = static_cast<int>(rpairs_.size());
      rpairs_.emplace_back(p[0], p[1]);
    }
    r_ = rpairs_.size();
    present_.assign(r_ * r_, 0);

    // Per-op tables over R-indices for the binary case, the hot path.
    const auto& sig = alg.signature();
    for (size_t op = 0; op < sig.ops.size(); ++op) {
      if (sig.ops[op].arity != 2) continue;
      binary_ops_.emplace_back();
      auto& t = binary_ops_.back();
      t.resize(r_ * r_);
      for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < r_; ++j) {
          int args1[2] = {rpairs_[i].first, rpairs_[j].first};
          int args2[2] = {rpairs_[i].second, rpairs_[j].second};
          t[i * r_ + j] = rindex(alg.apply(static_cast<int>(op), args1),
                                 alg.apply(static_cast<int>(op), args2));
        }
    }

    for (auto [a, b] : alpha_gens) {
      int i = rindex(a, b);
      add(i, i);  // (a,a,b,b)
    }
    for (int e = 0; e < n_; ++e) {
      int i = rindex(e, e);
      add(i, i);
    }
    for (int c = 0; c < n_; ++c)
      for (int d = 0; d < n_; ++d)
        if (beta.related(c, d)) add(rindex(c, c), rindex(d, d));  // (c,d,c,d)
  }

  Congruence run(const Congruence& upper) {
    Congruence delta = Congruence::identity(n_);
    size_t frontier_begin = 0;
    while (true) {
      force_to_fixpoint(delta);
      if (delta == upper) return delta;
      if (frontier_begin >= codes_.size()) return delta;
      frontier_begin = extend_one_round(frontier_begin);
    }
  }

 private:
  int rindex(int a, int b) const { return ridx_[static_cast<size_t>(a) * n_ + b]; }

  void add(int colL, int colR) {
    size_t code = static_cast<size_t>(colL) * r_ + colR;
    if (!present_[code]) {
      present_[code] = 1;
      codes_.push_back(static_cast<uint32_t>(code));
    }
  }

  // One frontier round: every operation applied to argument tuples with at
  // least one element from [frontier_begin, frontier_end).
  size_t extend_one_round(size_t frontier_begin) {
    const size_t frontier_end = codes_.size();
    const auto& sig = alg_.signature();
    size_t binary_seen = 0;
    for (size_t op = 0; op < sig.ops.size(); ++op) {
      const int ar = sig.ops[op].arity;
      if (ar == 0) continue;
      if (ar == 2) {
        const auto& t = binary_ops_[binary_seen++];
        for (size_t i = frontier_begin; i < frontier_end; ++i) {
          uint32_t ci = codes_[i];
          size_t li = ci / r_, ri = ci % r_;
          for (size_t j = 0; j < frontier_end; ++j) {
            uint32_t cj = codes_[j];
            size_t lj = cj / r_, rj = cj % r_;
            add(t[li * r_ + lj], t[ri * r_ + rj]);
            if (j < frontier_begin) add(t[lj * r_ + li], t[rj * r_ + ri]);
          }
        }
        continue;
      }
      std::vector<size_t> choice(ar, 0);
      std::vector<int> la(ar), lb(ar), ra(ar), rb(ar);
      while (true) {
        bool has_new = false;
        for (size_t c : choice)
          if (c >= frontier_begin && c < frontier_end) { has_new = true; break; }
        if (has_new) {
          for (int p = 0; p < ar; ++p) {
            uint32_t code = codes_[choice[p]];
            la[p] = rpairs_[code / r_].first;
            lb[p] = rpairs_[code / r_].second;
            ra[p] = rpairs_[code % r_].first;
            rb[p] = rpairs_[code % r_].second;
          }
          add(rindex(alg_.apply(static_cast<int>(op), la), alg_.apply(static_cast<int>(op), lb)),
              rindex(alg_.apply(static_cast<int>(op), ra), alg_.apply(static_cast<int>(op), rb)));
        }
        int p = ar - 1;
        for (; p >= 0; --p) {
          if (++choice[p] < frontier_end) break;
          choice[p] = 0;
        }
        if (p < 0) break;
      }
    }
    return frontier_end;
  }

  // Sweep all matrices, collect pairs delta forces, close with cg_generate
  // once per sweep, until stable.
  void force_to_fixpoint(Congruence& delta) {
    while (true) {
      std::vector<std::pair<int, int>> forced;
      for (uint32_t code : codes_) {
        auto [x, z] = rpairs_[code / r_];
        auto [y, w] = rpairs_[code % r_];
        bool top = delta.related(x, y), bottom = delta.related(z, w);
        if (top && !bottom) forced.emplace_back(z, w);
        else if (bottom && !top) forced.emplace_back(x, y);
      }
      if (forced.empty()) return;
      auto pairs = delta.pairs();
      pairs.insert(pairs.end(), forced.begin(), forced.end());
      delta = cg_generate(alg_, pairs);
    }
  }

  const FiniteAlgebra& alg_;
  int n_;
  std::vector<std::pair<int, int>> rpairs_;
  std::vector<int> ridx_;
  size_t r_ = 0;
  std::vector<std::vector<int>> binary_ops_;
  std::vector<uint32_t> codes_;
  std::vector<uint8_t> present_;
};

}  // namespace

Congruence tc_commutator(const FiniteAlgebra& alg, const Congruence& alpha,
                         const Congruence& beta) {
  if (alpha.size() != alg.size() || beta.size() != alg.size())
    throw AlgebraError("congruence over a different carrier");
  if (check_compatible(alg, alpha) || check_compatible(alg, beta))
    throw AlgebraError("commutator arguments must be verified congruences");
  CommutatorCell cell(alg, star_pairs(alpha), beta);
  return cell.run(alpha.meet(beta));
}

Congruence tc_commutator_naive(const FiniteAlgebra& alg, const Congruence& alpha,
                               const Congruence& beta) {
  const int n = alg.size();
  std::vector<std::vector<int>> gens;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (alpha.related(a, b)) gens.push_back({a, a, b, b});
  for (int c = 0; c < n; ++c)
    for (int d = 0; d < n; ++d)
      if (beta.related(c, d)) gens.push_back({c, d, c, d});
  auto matrices = generate_subuniverse(alg, 4, gens);

  Congruence delta = Congruence::identity(n);
  while (true) {
    std::vector<std::pair<int, int>> forced;
    for (const auto& m : matrices) {
      bool top = delta.related(m[0], m[1]), bottom = delta.related(m[2], m[3]);
      if (top && !bottom) forced.emplace_back(m[2], m[3]);
      else if (bottom && !top) forced.emplace_back(m[0], m[1]);
    }
    if (forced.empty()) return delta;
    auto pairs = delta.pairs();
    pairs.insert(pairs.end(), forced.begin(), forced.end());
    delta = cg_generate(alg, pairs);
  }
}

void CommutatorStructure::validate_and_flag() {
  const int n = lat.size();
  if (table.size() != static_cast<size_t>(n) * n)
    throw LatticeError("commutator table has the wrong size");
  for (int v : table)
    if (v < 0 || v >= n) throw LatticeError("commutator table entry out of range");

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!lat.le(comm(a, b), lat.meet(a, b)))
        throw LatticeError("commutator table exceeds the meet at (" + lat.labels[a] + "," +
                           lat.labels[b] + ")");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int a2 = 0; a2 < n; ++a2)
        for (int b2 = 0; b2 < n; ++b2)
          if (lat.le(a, a2) && lat.le(b, b2) && !lat.le(comm(a, b), comm(a2, b2)))
            throw LatticeError("commutator table is not monotone");

  flags.commutative = true;
  for (int a = 0; a < n && flags.commutative; ++a)
    for (int b = 0; b < n; ++b)
      if (comm(a, b) != comm(b, a)) { flags.commutative = false; break; }

  // Binary join distributivity; equivalent to the arbitrary-join form on a
  // finite lattice.
  flags.join_distributive = true;
  for (int a = 0; a < n && flags.join_distributive; ++a)
    for (int b = 0; b < n && flags.join_distributive; ++b)
      for (int c = 0; c < n; ++c) {
        if (comm(a, lat.join(b, c)) != lat.join(comm(a, b), comm(a, c)) ||
            comm(lat.join(b, c), a) != lat.join(comm(b, a), comm(c, a))) {
          flags.join_distributive = false;
          break;
        }
      }

  flags.equals_meet = true;
  for (int a = 0; a < n && flags.equals_meet; ++a)
    for (int b = 0; b < n; ++b)
      if (comm(a, b) != lat.meet(a, b)) { flags.equals_meet = false; break; }

  flags.associative = true;
  for (int a = 0; a < n && flags.associative; ++a)
    for (int b = 0; b < n && flags.associative; ++b)
      for (int c = 0; c < n; ++c)
        if (comm(comm(a, b), c) != comm(a, comm(b, c))) {
          flags.associative = false;
          break;
        }

  flags.nabla_neutral = true;
  for (int a = 0; a < n; ++a)
    if (comm(a, lat.top()) != a) { flags.nabla_neutral = false; break; }
}

CommutatorStructure commutator_table(const AlgebraPtr& alg) {
  auto con = std::make_shared<CongruenceLattice>(enumerate_congruences(alg));
  return commutator_table(alg, con);
}

CommutatorStructure commutator_table(const AlgebraPtr& alg,
                                     std::shared_ptr<const CongruenceLattice> con,
                                     int threads) {
  CommutatorStructure cs;
  cs.lat = BoundedLattice::from_congruences(*con);
  cs.provenance = Provenance::computed_from_algebra;
  cs.algebra = alg;
  cs.con = con;
  cs.principal = con->principal;

  const int m = con->size();
  cs.table.assign(static_cast<size_t>(m) * m, -1);

  // Cells are independent; rows share the first argument's generator closure.
  auto run_rows = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      auto gens = star_pairs(con->elems[i]);
      for (int j = 0; j < m; ++j) {
        CommutatorCell cell(*alg, gens, con->elems[j]);
        Congruence c = cell.run(con->elems[i].meet(con->elems[j]));
        int idx = con->index_of(c);
        if (idx < 0) throw AlgebraError("commutator value is not a known congruence");
        cs.table[static_cast<size_t>(i) * m + j] = idx;
      }
    }
  };

  int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  nthreads = std::min(std::max(nthreads, 1), m);
  if (nthreads <= 1 || m <= 2) {
    run_rows(0, m);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(nthreads));
    int chunk = (m + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      int b = t * chunk, e = std::min(m, b + chunk);
      if (b >= e) break;
      pool.emplace_back([&, t, b, e] {
        try {
          run_rows(b, e);
        } catch (...) {
          errors[static_cast<size_t>(t)] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  cs.validate_and_flag();
  return cs;
}

CommutatorStructure fixture_structure(BoundedLattice lat, std::vector<int> table) {
  CommutatorStructure cs;
  cs.lat = std::move(lat);
  cs.table = std::move(table);
  cs.provenance = Provenance::fixture;
  cs.validate_and_flag();
  return cs;
}

int iterated(const CommutatorStructure& cs, int a, int b, int n, IterMode mode) {
  if (n < 1) throw AlgebraError("iterated commutator needs n >= 1");
  int x = cs.comm(a, b);
  for (int i = 1; i < n; ++i) {
    int next = mode == IterMode::square ? cs.comm(x, x) : cs.comm(a, x);
    if (next == x) return x;  // stabilized
    x = next;
  }
  return x;
}

int iterated_fixpoint(const CommutatorStructure& cs, int a, int b) {
  int x = cs.comm(a, b);
  for (int i = 0; i < cs.size(); ++i) {
    int next = cs.comm(x, x);
    if (next == x) return x;
    x = next;
  }
  return x;
}

Classification classify(const CommutatorStructure& cs) {
  Classification out;
  const int top = cs.lat.top(), bottom = cs.lat.bottom();
  out.abelian = cs.comm(top, top) == bottom;

  int x = cs.comm(top, top);
  for (int n = 1; n <= cs.size() + 1; ++n) {
    if (x == bottom) {
      out.solvable = true;
      out.solvable_witness = n;
      break;
    }
    int next = cs.comm(x, x);
    if (next == x) break;
    x = next;
  }
  x = cs.comm(top, top);
  for (int n = 1; n <= cs.size() + 1; ++n) {
    if (x == bottom) {
      out.nilpotent = true;
      out.nilpotent_witness = n;
      break;
    }
    int next = cs.comm(top, x);
    if (next == x) break;
    x = next;
  }
  return out;
}

namespace {

// Join of everything satisfying pred, when that join itself satisfies pred.
template <typename Pred>
std::optional<int> max_with(const CommutatorStructure& cs, Pred pred) {
  int j = cs.lat.bottom();
  bool any = false;
  for (int a = 0; a < cs.size(); ++a)
    if (pred(a)) {
      j = cs.lat.join(j, a);
      any = true;
    }
  if (!any || !pred(j)) return std::nullopt;
  return j;
}

}  // namespace

int residuation(const CommutatorStructure& cs, int theta, int zeta) {
  if (!cs.flags.join_distributive)
    throw HypothesisError(
        "residuation requires the join_distributive law; it fails for this structure");
  auto r = max_with(cs, [&](int a) { return cs.lat.le(cs.comm(theta, a), zeta); });
  if (!r)
    throw HypothesisError("residuation join does not satisfy its own bound");
  return *r;
}

int perp(const CommutatorStructure& cs, int theta) {
  return residuation(cs, theta, cs.lat.bottom());
}

Report law_checks(const CommutatorStructure& cs, int max_n) {
  Report rep;
  rep.subject = "commutator laws";
  const int n = cs.size();
  const auto& lat = cs.lat;

  {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n; ++b)
        if (!lat.le(cs.comm(a, b), lat.meet(a, b))) { ok = false; break; }
    rep.add("commutator_below_meet", ok);
  }
  {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int a2 = 0; a2 < n && ok; ++a2)
          for (int b2 = 0; b2 < n; ++b2)
            if (lat.le(a, a2) && lat.le(b, b2) && !lat.le(cs.comm(a, b), cs.comm(a2, b2))) {
              ok = false;
              break;
            }
    rep.add("commutator_monotone", ok);
  }
  {
    // [a,b]^{n+1} = [[a,b],[a,b]]^n
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int k = 1; k <= max_n + 1; ++k) {
          int ab = cs.comm(a, b);
          if (iterated(cs, a, b, k + 1, IterMode::square) !=
              iterated(cs, ab, ab, k, IterMode::square)) {
            ok = false;
            break;
          }
        }
    rep.add("square_iteration_recurrence", ok);
  }
  {
    // Monotone in both arguments at every depth; antitone in the depth.
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int a2 = 0; a2 < n && ok; ++a2)
          for (int b2 = 0; b2 < n && ok; ++b2) {
            if (!lat.le(a, a2) || !lat.le(b, b2)) continue;
            for (int k = 1; k <= max_n; ++k)
              if (!lat.le(iterated(cs, a, b, k, IterMode::square),
                          iterated(cs, a2, b2, k, IterMode::square))) {
                ok = false;
                break;
              }
          }
    rep.add("iterate_monotone", ok);
    ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int k = 1; k <= max_n && ok; ++k)
          for (int k2 = 1; k2 <= k; ++k2)
            if (!lat.le(iterated(cs, a, b, k, IterMode::square),
                        iterated(cs, a, b, k2, IterMode::square))) {
              ok = false;
              break;
            }
    rep.add("iterate_antitone_in_depth", ok);
  }
  {
    // [a,b]^{k*n} <= [[a,b]^k, [a,b]^k]^n for k,n >= 2.
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int k = 2; k <= max_n && ok; ++k)
          for (int m = 2; m <= max_n; ++m) {
            int abk = iterated(cs, a, b, k, IterMode::square);
            if (!lat.le(iterated(cs, a, b, k * m, IterMode::square),
                        iterated(cs, abk, abk, m, IterMode::square))) {
              ok = false;
              break;
            }
          }
    rep.add("iterate_power_bound", ok);
  }

  if (cs.flags.commutative && cs.flags.associative) {
    // [a,b]^{n+1} = [[a,a]^n, [b,b]^n]
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int k = 1; k <= max_n; ++k) {
          int lhs = iterated(cs, a, b, k + 1, IterMode::square);
          int rhs = cs.comm(iterated(cs, a, a, k, IterMode::square),
                            iterated(cs, b, b, k, IterMode::square));
          if (lhs != rhs) { ok = false; break; }
        }
    rep.add("associative_square_split", ok);
  } else {
    rep.skip("associative_square_split", "commutator is not associative");
  }

  const bool cjd = cs.flags.commutative && cs.flags.join_distributive;
  if (cjd) {
    // The split laws need both exponents at least 2: at exponent 1 they can
    // fail even over groups (two join-complementary abelian subgroups whose
    // mutual commutator is non-trivial).
    bool ok4 = true, ok5 = true, ok7 = true;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ab = lat.join(a, b);
        for (int k = 1; k <= max_n; ++k) {
          if (!lat.le(iterated(cs, ab, ab, k, IterMode::square),
                      lat.join(a, iterated(cs, b, b, k, IterMode::square))))
            ok4 = false;
          if (k < 2) continue;
          for (int m = 2; m <= max_n; ++m)
            if (!lat.le(iterated(cs, ab, ab, k * m, IterMode::square),
                        lat.join(iterated(cs, a, a, k, IterMode::square),
                                 iterated(cs, b, b, m, IterMode::square))))
              ok5 = false;
        }
      }
    // k-fold join split with exponent n^k over triples.
    for (int a = 0; a < n && ok7; ++a)
      for (int b = 0; b < n && ok7; ++b)
        for (int c = 0; c < n && ok7; ++c) {
          int abc = lat.join(lat.join(a, b), c);
          for (int k = 2; k <= 2; ++k) {
            int lhs = iterated(cs, abc, abc, k * k * k, IterMode::square);
            int rhs = lat.join(lat.join(iterated(cs, a, a, k, IterMode::square),
                                        iterated(cs, b, b, k, IterMode::square)),
                               iterated(cs, c, c, k, IterMode::square));
            if (!lat.le(lhs, rhs)) { ok7 = false; break; }
          }
        }
    rep.add("join_absorb_square", ok4);
    rep.add("join_split_square", ok5);
    rep.add("join_split_multi", ok7);
  } else {
    rep.skip("join_absorb_square", "needs commutative + join_distributive");
    rep.skip("join_split_square", "needs commutative + join_distributive");
    rep.skip("join_split_multi", "needs commutative + join_distributive");
  }

  if (cs.flags.nabla_neutral && cjd) {
    bool ok1 = true, ok2 = true, ok3 = true;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (lat.join(a, b) == lat.top()) {
          if (cs.comm(a, b) != lat.meet(a, b)) ok1 = false;
          for (int k = 1; k <= max_n; ++k)
            if (lat.join(iterated(cs, a, a, k, IterMode::square),
                         iterated(cs, b, b, k, IterMode::square)) != lat.top())
              ok3 = false;
        }
        for (int c = 0; c < n; ++c)
          if (lat.join(a, b) == lat.top() && lat.join(a, c) == lat.top()) {
            if (lat.join(a, cs.comm(b, c)) != lat.top() ||
                lat.join(a, lat.meet(b, c)) != lat.top())
              ok2 = false;
          }
      }
    rep.add("hot_pair_meet", ok1);
    rep.add("hot_pair_join", ok2);
    rep.add("hot_pair_square_join", ok3);
  } else {
    rep.skip("hot_pair_meet", "needs nabla_neutral + join_distributive");
    rep.skip("hot_pair_join", "needs nabla_neutral + join_distributive");
    rep.skip("hot_pair_square_join", "needs nabla_neutral + join_distributive");
  }

  if (cs.flags.nabla_neutral) {
    // Complemented elements meet everything through the commutator.
    bool ok = true;
    for (int a : boolean_center_lattice(lat))
      for (int t = 0; t < n; ++t)
        if (cs.comm(a, t) != lat.meet(a, t) || cs.comm(t, a) != lat.meet(t, a)) {
          ok = false;
          break;
        }
    rep.add("center_meets", ok);
  } else {
    rep.skip("center_meets", "needs nabla_neutral");
  }

  if (cs.flags.join_distributive) {
    bool adj = true;
    for (int a = 0; a < n && adj; ++a)
      for (int b = 0; b < n && adj; ++b)
        for (int c = 0; c < n; ++c)
          if (lat.le(cs.comm(a, b), c) != lat.le(a, residuation(cs, b, c))) {
            adj = false;
            break;
          }
    rep.add("residuation_adjunction", adj);

    bool impl = true;
    for (int a = 0; a < n && impl; ++a) {
      if (cs.comm(a, lat.top()) != a) continue;  // only for top-neutral elements
      for (int b = 0; b < n; ++b)
        if ((residuation(cs, a, b) == lat.top()) != lat.le(a, b)) {
          impl = false;
          break;
        }
    }
    rep.add("residuation_nabla", impl);
  } else {
    rep.skip("residuation_adjunction", "needs join_distributive");
    rep.skip("residuation_nabla", "needs join_distributive");
  }

  return rep;
}

Report subalgebra_commutator_check(const AlgebraPtr& alg, const CommutatorStructure& cs,
                                   const std::vector<int>& universe) {
  Report rep;
  rep.subject = "subalgebra commutator containment";
  auto sub = std::make_shared<FiniteAlgebra>(subalgebra(*alg, universe));
  std::vector<int> sorted = universe;
  std::sort(sorted.begin(), sorted.end());

  auto restrict = [&](const Congruence& c) {
    std::vector<int> rep_v(sorted.size());
    std::vector<int> least(alg->size(), -1);
    for (size_t i = 0; i < sorted.size(); ++i) {
      int cls = c.rep(sorted[i]);
      if (least[cls] < 0) least[cls] = static_cast<int>(i);
      rep_v[i] = least[cls];
    }
    return Congruence::from_rep(std::move(rep_v));
  };

  bool ok = true;
  std::string witness;
  for (int i = 0; i < cs.size() && ok; ++i)
    for (int j = 0; j < cs.size(); ++j) {
      Congruence sa = restrict(cs.con->elems[i]);
      Congruence sb = restrict(cs.con->elems[j]);
      Congruence inner = tc_commutator(*sub, sa, sb);
      Congruence outer = restrict(cs.con->elems[cs.comm(i, j)]);
      if (!inner.leq(outer)) {
        ok = false;
        witness = "pair (" + cs.lat.labels[i] + "," + cs.lat.labels[j] + ")";
        break;
      }
    }
  rep.add("subalgebra_containment", ok, witness);
  return rep;
}

Report quotient_commutator_check(const AlgebraPtr& alg, const CommutatorStructure& cs,
                                 int max_n) {
  Report rep;
  rep.subject = "quotient commutator transfer";
  const auto& con = *cs.con;
  bool ok = true;
  std::string witness;
  for (int t = 0; t < con.size() && ok; ++t) {
    auto [q, p] = quotient_algebra(alg, con.elems[t]);
    auto qcon = std::make_shared<CongruenceLattice>(enumerate_congruences(q));
    auto qcs = commutator_table(q, qcon);
    for (int a = 0; a < con.size() && ok; ++a)
      for (int b = 0; b < con.size() && ok; ++b) {
        int qa = qcon->index_of(transport_congruence(p, con.elems[a]));
        int qb = qcon->index_of(transport_congruence(p, con.elems[b]));
        for (int k = 1; k <= max_n; ++k) {
          int lhs = iterated(qcs, qa, qb, k, IterMode::square);
          Congruence rhs = transport_congruence(
              p, con.elems[iterated(cs, a, b, k, IterMode::square)]);
          if (qcon->elems[lhs] != rhs) {
            ok = false;
            witness = "theta=" + cs.lat.labels[t] + " pair (" + cs.lat.labels[a] + "," +
                      cs.lat.labels[b] + ") n=" + std::to_string(k);
            break;
          }
        }
      }
  }
  rep.add("quotient_transfer", ok, witness);
  return rep;
}

Report product_commutator_check(const AlgebraPtr& a, const AlgebraPtr& b) {
  Report rep;
  rep.subject = "product commutator";
  auto prod = std::make_shared<FiniteAlgebra>(direct_product(*a, *b));
  auto ca = std::make_shared<CongruenceLattice>(enumerate_congruences(a));
  auto cb = std::make_shared<CongruenceLattice>(enumerate_congruences(b));
  auto cp = std::make_shared<CongruenceLattice>(enumerate_congruences(prod));

  auto pair_congruence = [&](const Congruence& x, const Congruence& y) {
    const int nb = b->size();
    std::vector<int> rep_v(prod->size());
    for (int i = 0; i < prod->size(); ++i)
      rep_v[i] = x.rep(i / nb) * nb + y.rep(i % nb);
    return Congruence::from_rep(std::move(rep_v));
  };

  if (cp->size() != ca->size() * cb->size()) {
    rep.add("no_skew_congruences", false,
            std::to_string(cp->size()) + " congruences vs " +
                std::to_string(ca->size() * cb->size()) + " products");
    return rep;
  }
  for (int i = 0; i < ca->size(); ++i)
    for (int j = 0; j < cb->size(); ++j)
      if (cp->index_of(pair_congruence(ca->elems[i], cb->elems[j])) < 0) {
        rep.add("no_skew_congruences", false, "a product congruence is missing");
        return rep;
      }
  rep.add("no_skew_congruences", true);

  auto csa = commutator_table(a, ca);
  auto csb = commutator_table(b, cb);
  auto csp = commutator_table(prod, cp);

  bool ok = true;
  for (int i1 = 0; i1 < ca->size() && ok; ++i1)
    for (int j1 = 0; j1 < cb->size() && ok; ++j1)
      for (int i2 = 0; i2 < ca->size() && ok; ++i2)
        for (int j2 = 0; j2 < cb->size(); ++j2) {
          int lhs_idx = csp.comm(cp->index_of(pair_congruence(ca->elems[i1], cb->elems[j1])),
                                 cp->index_of(pair_congruence(ca->elems[i2], cb->elems[j2])));
          Congruence rhs = pair_congruence(ca->elems[csa.comm(i1, i2)],
                                           cb->elems[csb.comm(j1, j2)]);
          if (cp->elems[lhs_idx] != rhs) { ok = false; break; }
        }
  rep.add("product_commutator_factorizes", ok);
  return rep;
}

Report property_a_diagnostic(const CommutatorStructure& cs, int max_n, int max_k) {
  Report rep;
  rep.subject = "bounded centralizer-power diagnostic";
  const int n = cs.size();
  bool found_all = true;
  std::string detail;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int m = 1; m <= max_n; ++m) {
        bool found = false;
        for (int k = 1; k <= max_k && !found; ++k) {
          int lhs = cs.comm(iterated(cs, a, a, k, IterMode::square),
                            iterated(cs, b, b, k, IterMode::square));
          if (cs.lat.le(lhs, iterated(cs, a, b, m, IterMode::square))) found = true;
        }
        if (!found) {
          found_all = false;
          if (detail.empty())
            detail = "no k <= " + std::to_string(max_k) + " found at (" + cs.lat.labels[a] +
                     "," + cs.lat.labels[b] + "), n=" + std::to_string(m) +
                     "; inconclusive, not a refutation";
        }
      }
  rep.checks.push_back({"power_containment", found_all ? CheckStatus::pass : CheckStatus::skipped,
                        detail});
  return rep;
}

}  // namespace retic
