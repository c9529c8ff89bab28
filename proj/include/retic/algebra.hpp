#ifndef RETIC_ALGEBRA_HPP_
#define RETIC_ALGEBRA_HPP_

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "retic/errors.hpp"

namespace retic {

struct OpSym {
  std::string name;
  int arity = 0;
};

// Operation symbols with arities; symbols must be pairwise distinct.
// The empty signature is allowed.
struct Signature {
  std::vector<OpSym> ops;

  int index_of(const std::string& name) const;  // -1 when absent
  void validate() const;
};

// A finite algebra given by total operation tables over an ordered carrier.
// Elements are 0-based indices internally; labels are presentation only.
// Tables are stored flattened row-major (first argument most significant).
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  FiniteAlgebra(std::string name, std::vector<std::string> labels,
                Signature sig, std::vector<std::vector<int>> tables);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& name() const { return name_; }
  const Signature& signature() const { return sig_; }
  const std::string& label(int x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of_label(const std::string& l) const;  // -1 when absent

  const std::vector<int>& table(int op) const { return tables_.at(op); }

  // Index-based lookup; no validation beyond debug bounds.
  int apply(int op, std::span<const int> args) const;

  // Validating evaluation by symbol and element labels.
  int evaluate(const std::string& op, const std::vector<std::string>& args) const;
  int evaluate_indices(const std::string& op, std::span<const int> args) const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  Signature sig_;
  std::vector<std::vector<int>> tables_;
};

using AlgebraPtr = std::shared_ptr<const FiniteAlgebra>;

// Carrier of a x b in row-major pair order: (i,j) -> i*|B|+j.
FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b);

// Total map between carriers commuting with every operation and onto the
// target; construction validates both.
struct SurjectiveMorphism {
  AlgebraPtr source;
  AlgebraPtr target;
  std::vector<int> map;

  SurjectiveMorphism(AlgebraPtr src, AlgebraPtr tgt, std::vector<int> m);
  int operator()(int x) const { return map[x]; }
};

SurjectiveMorphism compose(const SurjectiveMorphism& g, const SurjectiveMorphism& f);
SurjectiveMorphism identity_morphism(const AlgebraPtr& a);
SurjectiveMorphism projection_morphism(const AlgebraPtr& prod, const AlgebraPtr& factor,
                                       int which);  // 0 = left, 1 = right

// Least subset of carrier^k containing the generators and closed under every
// operation applied coordinate-wise. Output sorted lexicographically.
// An empty generator set yields the closure of the nullary constants (empty
// when there are none).
std::vector<std::vector<int>> generate_subuniverse(const FiniteAlgebra& alg, int k,
                                                   const std::vector<std::vector<int>>& generators);

// Induced algebra on a subuniverse (1-tuples). Labels are inherited.
FiniteAlgebra subalgebra(const FiniteAlgebra& alg, const std::vector<int>& universe);

}  // namespace retic

#endif  // RETIC_ALGEBRA_HPP_
