#ifndef RETIC_LATTICE_HPP_
#define RETIC_LATTICE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "retic/congruence.hpp"
#include "retic/errors.hpp"

namespace retic {

// A finite bounded lattice given by its order; join/meet tables are computed
// and the lattice axioms validated on construction.
struct BoundedLattice {
  std::vector<std::string> labels;
  std::vector<uint8_t> leq;  // n*n row-major
  std::vector<int> join_table, meet_table;
  int bottom_ = 0, top_ = 0;

  int size() const { return static_cast<int>(labels.size()); }
  bool le(int i, int j) const { return leq[static_cast<size_t>(i) * size() + j] != 0; }
  int join(int i, int j) const { return join_table[static_cast<size_t>(i) * size() + j]; }
  int meet(int i, int j) const { return meet_table[static_cast<size_t>(i) * size() + j]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  std::vector<std::pair<int, int>> covers() const;

  static BoundedLattice from_leq(std::vector<std::string> labels, std::vector<uint8_t> leq);
  static BoundedLattice from_covers(std::vector<std::string> labels,
                                    const std::vector<std::pair<int, int>>& covers);
  static BoundedLattice from_congruences(const CongruenceLattice& lat);
};

bool is_modular(const BoundedLattice& l);
bool is_distributive(const BoundedLattice& l);
bool is_boolean(const BoundedLattice& l);

struct LatticeTests {
  bool modular = false;
  bool distributive = false;
};

LatticeTests lattice_tests(const BoundedLattice& l);

// Complemented elements.
std::vector<int> boolean_center_lattice(const BoundedLattice& l);
std::optional<int> complement_of(const BoundedLattice& l, int x);

// In a finite lattice every ideal is principal, so ideals are represented by
// their member set plus their top.
struct LatticeIdeal {
  std::vector<uint8_t> member;
  int top_elem = 0;

  bool contains(int x) const { return member[x] != 0; }
  bool operator==(const LatticeIdeal& o) const { return member == o.member; }
};

LatticeIdeal principal_ideal(const BoundedLattice& l, int x);
bool is_ideal(const BoundedLattice& l, const std::vector<uint8_t>& set);
std::vector<LatticeIdeal> ideals(const BoundedLattice& l);
std::vector<LatticeIdeal> prime_ideals(const BoundedLattice& l);
std::vector<LatticeIdeal> max_ideals(const BoundedLattice& l);

// Ann(I) = {a | a ^ x = 0 for all x in I}.
LatticeIdeal annihilator(const BoundedLattice& l, const LatticeIdeal& i);

// Order isomorphism if one exists (backtracking over degree/height classes).
std::optional<std::vector<int>> lattice_iso(const BoundedLattice& a, const BoundedLattice& b);

// Quotient of a distributive lattice by an ideal: x ~ y iff x v m = y v m for
// m the ideal's top; realized on the filter [m, 1]. Returns the quotient and
// the element map.
std::pair<BoundedLattice, std::vector<int>> quotient_by_ideal(const BoundedLattice& l,
                                                              const LatticeIdeal& i);

BoundedLattice chain_lattice(int n);
BoundedLattice boolean_lattice(int k);  // 2^k
BoundedLattice product_lattice(const BoundedLattice& a, const BoundedLattice& b);
BoundedLattice ordinal_sum(const BoundedLattice& a, const BoundedLattice& b);

// Small named shapes used for readable output: L1..L5, L2^2, L2^3,
// L2+L2^2, L2+L2+L2.
std::vector<std::pair<std::string, BoundedLattice>> named_small_lattices();
std::optional<std::string> recognize_lattice(const BoundedLattice& l);

// Lattice term operations make a bounded lattice a FiniteAlgebra with
// signature (join, meet, zero, one).
FiniteAlgebra lattice_as_algebra(const BoundedLattice& l, const std::string& name);

}  // namespace retic

#endif  // RETIC_LATTICE_HPP_
