#ifndef RETIC_CONGRUENCE_HPP_
#define RETIC_CONGRUENCE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "retic/algebra.hpp"

namespace retic {

// A partition of {0..n-1} in canonical block-representative form:
// rep(x) is the least element of x's block.
class Congruence {
 public:
  Congruence() = default;
  static Congruence identity(int n);  // delta
  static Congruence all(int n);       // nabla
  static Congruence from_rep(std::vector<int> rep);
  static Congruence from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int size() const { return static_cast<int>(rep_.size()); }
  int rep(int x) const { return rep_[x]; }
  const std::vector<int>& rep_vector() const { return rep_; }
  bool related(int x, int y) const { return rep_[x] == rep_[y]; }
  int block_count() const;
  std::vector<std::vector<int>> blocks() const;
  std::vector<std::pair<int, int>> pairs() const;  // all related ordered pairs x<y

  bool leq(const Congruence& other) const;  // refinement order
  Congruence meet(const Congruence& other) const;

  bool operator==(const Congruence& o) const { return rep_ == o.rep_; }
  bool operator!=(const Congruence& o) const { return rep_ != o.rep_; }
  bool operator<(const Congruence& o) const;  // block count desc, then lex rep

  std::string to_string(const FiniteAlgebra& alg) const;  // e.g. {a,b}{x}{y}

 private:
  std::vector<int> rep_;
};

struct CompatibilityViolation {
  std::string op;
  std::vector<int> left_args, right_args;
};

// Checks that the partition is compatible with every operation of alg.
std::optional<CompatibilityViolation> check_compatible(const FiniteAlgebra& alg,
                                                       const Congruence& c);

// Least congruence of alg containing the given pairs (Mal'cev closure via
// union-find with compatibility propagation).
Congruence cg_generate(const FiniteAlgebra& alg, const std::vector<std::pair<int, int>>& pairs);

// Join in Con(alg).
Congruence congruence_join(const FiniteAlgebra& alg, const Congruence& a, const Congruence& b);

// All congruences of alg: every Cg(a,b), closed under pairwise join.
// Elements sorted by block count descending then lex rep, so delta is first
// and nabla last.
struct CongruenceLattice {
  AlgebraPtr algebra;
  std::vector<Congruence> elems;
  std::vector<uint8_t> leq;        // elems.size()^2, row-major
  std::vector<int> join_table, meet_table;
  std::vector<uint8_t> principal;  // is some Cg(a,b)
  std::vector<std::pair<int, int>> covers;

  int size() const { return static_cast<int>(elems.size()); }
  bool le(int i, int j) const { return leq[static_cast<size_t>(i) * elems.size() + j] != 0; }
  int join(int i, int j) const { return join_table[static_cast<size_t>(i) * elems.size() + j]; }
  int meet(int i, int j) const { return meet_table[static_cast<size_t>(i) * elems.size() + j]; }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  int index_of(const Congruence& c) const;  // -1 when absent
};

CongruenceLattice enumerate_congruences(const AlgebraPtr& alg);

std::vector<int> maximal_congruences(const CongruenceLattice& lat);  // coatom indices

// All x with f(x,...,x) = x for every operation (and c = x for constants).
std::vector<int> singleton_subuniverses(const FiniteAlgebra& alg);

// Quotient algebra and its canonical projection; blocks are labelled by their
// least representatives. Reports the violating operation when theta is not
// compatible.
std::pair<AlgebraPtr, SurjectiveMorphism> quotient_algebra(const AlgebraPtr& a,
                                                           const Congruence& theta);

// f(alpha v Ker f) on the target.
Congruence transport_congruence(const SurjectiveMorphism& f, const Congruence& alpha);
// f*(beta) on the source; contains Ker(f).
Congruence pull_back(const SurjectiveMorphism& f, const Congruence& beta);
Congruence kernel(const SurjectiveMorphism& f);

}  // namespace retic

#endif  // RETIC_CONGRUENCE_HPP_
