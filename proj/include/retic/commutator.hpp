#ifndef RETIC_COMMUTATOR_HPP_
#define RETIC_COMMUTATOR_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "retic/congruence.hpp"
#include "retic/lattice.hpp"

namespace retic {

struct LawFlags {
  bool commutative = false;
  bool join_distributive = false;
  bool equals_meet = false;
  bool associative = false;
  bool nabla_neutral = false;  // [theta, nabla] = theta for all theta
};

enum class Provenance { computed_from_algebra, fixture };

// A finite bounded lattice with a binary commutator table. Either computed
// from an algebra's congruence lattice (indices aligned with it) or loaded as
// a fixture. The table always satisfies [a,b] <= a ^ b and monotonicity;
// construction verifies both, and the law flags are set only after exhaustive
// verification.
struct CommutatorStructure {
  BoundedLattice lat;
  std::vector<int> table;  // lat.size()^2
  LawFlags flags;
  Provenance provenance = Provenance::fixture;
  std::vector<uint8_t> principal;  // empty for fixtures without marks

  // Present for computed structures.
  AlgebraPtr algebra;
  std::shared_ptr<const CongruenceLattice> con;

  int size() const { return lat.size(); }
  int comm(int a, int b) const { return table[static_cast<size_t>(a) * lat.size() + b]; }
  bool has_principal_marks() const { return !principal.empty(); }

  void validate_and_flag();  // throws LatticeError on a broken table
};

// Term-condition commutator of two congruences, computed as the least
// congruence delta such that every matrix in M(alpha, beta) has its top row
// in delta exactly when its bottom row is. M(alpha, beta) is generated inside
// carrier^4; the closure runs over column pairs drawn from the compatible
// reflexive closure of alpha's generating pairs, which generates the same
// least fixed point as the full matrix set.
Congruence tc_commutator(const FiniteAlgebra& alg, const Congruence& alpha,
                         const Congruence& beta);

// Reference implementation: the full A^4 closure over all alpha- and
// beta-pairs, exactly as defined. Quadratic in the matrix count; intended for
// small carriers and used to cross-check tc_commutator.
Congruence tc_commutator_naive(const FiniteAlgebra& alg, const Congruence& alpha,
                               const Congruence& beta);

// Full |Con|^2 table with verified law flags.
CommutatorStructure commutator_table(const AlgebraPtr& alg);
CommutatorStructure commutator_table(const AlgebraPtr& alg,
                                     std::shared_ptr<const CongruenceLattice> con,
                                     int threads = 0);

CommutatorStructure fixture_structure(BoundedLattice lat, std::vector<int> table);

enum class IterMode { square, left };

// mode square: [a,b]^n with [a,b]^{n+1} = [[a,b]^n, [a,b]^n];
// mode left:   (a,b]^n with (a,b]^{n+1} = (a, (a,b]^n].
int iterated(const CommutatorStructure& cs, int a, int b, int n, IterMode mode);

// Fixed point of x -> [x,x] starting from [a,b].
int iterated_fixpoint(const CommutatorStructure& cs, int a, int b);

struct Classification {
  bool abelian = false, solvable = false, nilpotent = false;
  std::optional<int> solvable_witness, nilpotent_witness;
};

Classification classify(const CommutatorStructure& cs);

// theta -> zeta = max{alpha : [theta, alpha] <= zeta}; requires the
// join-distributive flag (otherwise the join need not satisfy the condition).
int residuation(const CommutatorStructure& cs, int theta, int zeta);
int perp(const CommutatorStructure& cs, int theta);  // theta -> bottom

enum class CheckStatus { pass, fail, skipped };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct Report {
  std::string subject;
  std::vector<Check> checks;

  bool all_pass() const;                // no fail among non-skipped
  void add(std::string name, bool ok, std::string detail = "");
  void skip(std::string name, std::string why);
};

// Commutator-law battery for one structure. Laws whose hypotheses fail on
// this structure are reported as skipped. max_n bounds iterated-commutator
// depths.
Report law_checks(const CommutatorStructure& cs, int max_n = 3);

// Containment of commutators under a subalgebra: [a n S^2, b n S^2]_S is
// contained in [a,b]_A n S^2 for every pair. universe lists S's elements
// inside alg's carrier.
Report subalgebra_commutator_check(const AlgebraPtr& alg, const CommutatorStructure& cs,
                                   const std::vector<int>& universe);

// Product commutator: [a1 x b1, a2 x b2] = [a1,a2] x [b1,b2] over a direct
// product with no skew congruences; both sides computed independently.
Report product_commutator_check(const AlgebraPtr& a, const AlgebraPtr& b);

// Quotient transfer: [(a v t)/t, (b v t)/t]^n = ([a,b]^n v t)/t for every
// congruence t of alg and n <= max_n.
Report quotient_commutator_check(const AlgebraPtr& alg, const CommutatorStructure& cs,
                                 int max_n = 3);

// Bounded diagnostic for the property that some k <= max_k satisfies
// [[a,a]^k, [b,b]^k] <= [a,b]^n for all pairs; absence of such k is reported,
// not treated as a refutation.
Report property_a_diagnostic(const CommutatorStructure& cs, int max_n = 3, int max_k = 6);

}  // namespace retic

#endif  // RETIC_COMMUTATOR_HPP_
