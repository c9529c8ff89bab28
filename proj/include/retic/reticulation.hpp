#ifndef RETIC_RETICULATION_HPP_
#define RETIC_RETICULATION_HPP_

#include <memory>
#include <vector>

#include "retic/spectrum.hpp"

namespace retic {

// L(A): the quotient of the congruence elements by equal radical, with class
// join induced by the join and class meet induced by the commutator. Class
// labels come from the least element of each class.
struct ReticulationResult {
  std::shared_ptr<const CommutatorStructure> source;
  std::vector<int> class_of;   // source element -> class id
  std::vector<int> class_rep;  // class id -> least source element
  BoundedLattice lattice;

  int lambda(int elem) const { return class_of[elem]; }
  int classes() const { return lattice.size(); }
};

// Requires a commutative table. Join-distributivity is the stated hypothesis
// for the construction; when the flag fails the quotient is still attempted
// and is refused unless its operations are exhaustively well defined and the
// result distributive (the degenerate empty-spectrum case always passes).
ReticulationResult build_reticulation(const std::shared_ptr<const CommutatorStructure>& cs);

// theta* = { classes of elements below theta }, an ideal of L(A).
LatticeIdeal theta_star(const ReticulationResult& r, int theta);
// I_* = join of all elements whose class lies in I.
int ideal_lower_star(const ReticulationResult& r, const LatticeIdeal& ideal);

// RCon(A): radical elements under (meet, radical-of-join), isomorphic to
// Id(L(A)) via theta -> theta*.
struct RadicalLattice {
  std::vector<int> elems;  // source elements that are radicals, ascending
  BoundedLattice lattice;
};

RadicalLattice rcon_lattice(const ReticulationResult& r);

// u = theta*, v = I_* between Spec(A) and Spec_Id(L(A)): mutually inverse,
// closed sets transported. All failures are report entries.
Report verify_spec_homeomorphism(const ReticulationResult& r);

// Annihilator transfer: (theta-perp)* = Ann(theta*) and (I_*)-perp =
// Ann(I)_* on semiprime structures; only the left-to-right containments
// otherwise. Needs the join_distributive law for perp.
Report verify_annihilators(const ReticulationResult& r);

// Galois properties: (theta*)_* = rho(theta), (I_*)* = I, rho(theta)* =
// theta*, and theta -> theta* an isomorphism RCon -> Id(L).
Report verify_galois(const ReticulationResult& r);

}  // namespace retic

#endif  // RETIC_RETICULATION_HPP_
