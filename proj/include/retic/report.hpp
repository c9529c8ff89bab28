#ifndef RETIC_REPORT_HPP_
#define RETIC_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "retic/document.hpp"
#include "retic/functor.hpp"

namespace retic {

// Everything the analyze command reports; round-trips losslessly through the
// JSON emitter.
struct AnalysisReport {
  std::string name;
  std::string kind;  // "algebra" | "commutator-structure"

  // Congruence (or abstract) lattice summary.
  std::vector<std::string> elements;
  std::vector<std::pair<int, int>> covers;
  bool modular = false;
  bool distributive = false;
  std::vector<int> maximal;
  std::vector<int> principal;

  std::vector<int> commutator;  // flattened table, row-major
  bool commutative = false, join_distributive = false, equals_meet = false,
       associative = false, nabla_neutral = false;

  bool abelian = false, solvable = false, nilpotent = false;
  std::optional<int> solvable_witness, nilpotent_witness;

  std::vector<int> spec;
  std::vector<int> max_congruences;
  std::vector<int> radical_map;
  bool semiprime = false;
  std::vector<int> boolean_center;
  std::optional<bool> hyperarchimedean;  // absent without principal marks

  // Reticulation: classes by element, covers of L(A), recognized shape.
  std::optional<std::vector<int>> retic_class_of;
  std::vector<std::string> retic_labels;
  std::vector<std::pair<int, int>> retic_covers;
  std::optional<std::string> retic_shape;
  std::string retic_refusal;

  struct ConditionalCheck {
    std::string name;
    std::string status;  // pass | fail | skipped
    std::string detail;
    bool operator==(const ConditionalCheck&) const = default;
  };
  std::vector<ConditionalCheck> conditional;

  bool operator==(const AnalysisReport&) const = default;
};

AnalysisReport analyze_document(const AlgebraDocument& doc, int threads = 0);

std::string emit_json(const AnalysisReport& r);
AnalysisReport parse_report_json(const std::string& text);

// DOT digraph of a cover relation, bottom at rank 0 (edges point upward).
std::string emit_dot(const BoundedLattice& lat, const std::string& graph_name);

// Analysis built from a structure fixture (shares the algebra path downstream).
Analysis analyze_structure(const std::shared_ptr<const CommutatorStructure>& cs);

// The whole theorem battery for one document; the CLI exit status is 0 only
// when every non-skipped check passes. Size guards skip the quotient-battery
// entries on carriers above the cap.
std::vector<Report> verify_battery(const AlgebraDocument& doc, int threads = 0);

}  // namespace retic

#endif  // RETIC_REPORT_HPP_
