#ifndef RETIC_SPECTRUM_HPP_
#define RETIC_SPECTRUM_HPP_

#include <optional>
#include <vector>

#include "retic/commutator.hpp"

namespace retic {

bool is_prime(const CommutatorStructure& cs, int phi);
bool is_semiprime_congruence(const CommutatorStructure& cs, int phi);

// Primes by the definitional scan; cross-checked against meet-irreducible +
// semiprime when the commutative and join_distributive flags hold.
std::vector<int> spectrum(const CommutatorStructure& cs);

enum class RadicalMethod { via_spec, via_iteration };

// via_spec: meet of the primes above theta (empty meet = top).
// via_iteration: join of the principal elements whose iterated diagonal
// commutator eventually drops below theta; needs principal marks.
int radical(const CommutatorStructure& cs, int theta, RadicalMethod method);

struct StoneSets {
  std::vector<int> V, D;
};

StoneSets stone_sets(const CommutatorStructure& cs, int theta);

// Elements with a complement; when the structure is nabla_neutral the
// complement is verified to be theta-perp and the center to form a Boolean
// algebra.
std::vector<int> boolean_center(const CommutatorStructure& cs);

struct HyperarchWitness {
  bool flag = false;
  // For each principal element: the least n with [a,a]^n in the center.
  std::vector<std::pair<int, std::optional<int>>> witnesses;
};

HyperarchWitness is_hyperarchimedean(const CommutatorStructure& cs);

bool semiprime_algebra(const CommutatorStructure& cs);

struct SpectrumReport {
  std::vector<int> spec;
  std::vector<int> max;
  std::vector<int> radical_map;  // per lattice element, via_spec
  bool semiprime = false;
  std::vector<int> center;
  std::optional<HyperarchWitness> hyperarchimedean;  // absent without marks

  void validate(const CommutatorStructure& cs) const;
};

SpectrumReport build_spectrum_report(const CommutatorStructure& cs);

// Conditional statements that depend on variety-level hypotheses no single
// algebra can witness; reported against the surrogate gate max subset of spec.
Report conditional_spectrum_checks(const CommutatorStructure& cs);

}  // namespace retic

#endif  // RETIC_SPECTRUM_HPP_
