#ifndef RETIC_DOCUMENT_HPP_
#define RETIC_DOCUMENT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "retic/commutator.hpp"

namespace retic {

enum class DocumentKind { algebra, commutator_structure };

// A parsed input document: either a finite algebra with operation tables or
// an abstract commutator-structure fixture (lattice order plus table).
struct AlgebraDocument {
  DocumentKind kind = DocumentKind::algebra;
  std::string name;
  AlgebraPtr algebra;                              // kind == algebra
  std::shared_ptr<CommutatorStructure> structure;  // kind == commutator_structure
};

// Line-oriented plain text:
//
//   kind: algebra
//   name: m5
//   elements: a b x y z
//   op +/2:
//   a b a a a
//   ...
//
//   kind: commutator-structure
//   name: u5
//   elements: Delta alpha beta gamma delta nabla
//   leq:
//   Delta delta
//   ...
//   comm:
//   Delta Delta Delta Delta Delta Delta
//   ...
//
// '#' starts a comment. leq lines are order pairs (covers suffice; the
// reflexive-transitive closure is taken and the lattice axioms validated).
AlgebraDocument parse_document(const std::string& text);

std::vector<std::string> fixture_names();
bool is_fixture_name(const std::string& name);
const std::string& fixture_text(const std::string& name);
AlgebraDocument load_fixture(const std::string& name);

}  // namespace retic

#endif  // RETIC_DOCUMENT_HPP_
