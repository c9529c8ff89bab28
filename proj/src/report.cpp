#include "retic/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace retic {

using ordered_json = nlohmann::ordered_json;

Analysis analyze_structure(const std::shared_ptr<const CommutatorStructure>& cs) {
  Analysis a;
  a.cs = cs;
  a.spec = build_spectrum_report(*cs);
  try {
    a.retic = std::make_shared<ReticulationResult>(build_reticulation(cs));
  } catch (const HypothesisError& e) {
    a.retic_refusal = e.what();
  }
  return a;
}

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "skipped";
  }
}

void fill_from_analysis(AnalysisReport& r, const Analysis& a) {
  const auto& cs = *a.cs;
  r.elements = cs.lat.labels;
  r.covers = cs.lat.covers();
  r.modular = is_modular(cs.lat);
  r.distributive = is_distributive(cs.lat);
  r.maximal = a.spec.max;
  if (cs.has_principal_marks())
    r.principal.assign(cs.principal.begin(), cs.principal.end());

  r.commutator = cs.table;
  r.commutative = cs.flags.commutative;
  r.join_distributive = cs.flags.join_distributive;
  r.equals_meet = cs.flags.equals_meet;
  r.associative = cs.flags.associative;
  r.nabla_neutral = cs.flags.nabla_neutral;

  Classification cl = classify(cs);
  r.abelian = cl.abelian;
  r.solvable = cl.solvable;
  r.nilpotent = cl.nilpotent;
  r.solvable_witness = cl.solvable_witness;
  r.nilpotent_witness = cl.nilpotent_witness;

  r.spec = a.spec.spec;
  r.max_congruences = a.spec.max;
  r.radical_map = a.spec.radical_map;
  r.semiprime = a.spec.semiprime;
  r.boolean_center = a.spec.center;
  if (a.spec.hyperarchimedean) r.hyperarchimedean = a.spec.hyperarchimedean->flag;

  if (a.retic) {
    r.retic_class_of = a.retic->class_of;
    r.retic_labels = a.retic->lattice.labels;
    r.retic_covers = a.retic->lattice.covers();
    r.retic_shape = recognize_lattice(a.retic->lattice);
  } else {
    r.retic_refusal = a.retic_refusal;
  }

  for (const auto& c : conditional_spectrum_checks(cs).checks)
    r.conditional.push_back({c.name, status_name(c.status), c.detail});
}

}  // namespace

AnalysisReport analyze_document(const AlgebraDocument& doc, int threads) {
  AnalysisReport r;
  r.name = doc.name;
  if (doc.kind == DocumentKind::algebra) {
    r.kind = "algebra";
    fill_from_analysis(r, analyze_algebra(doc.algebra, threads));
  } else {
    r.kind = "commutator-structure";
    fill_from_analysis(r, analyze_structure(doc.structure));
  }
  return r;
}

namespace {

ordered_json pairs_json(const std::vector<std::pair<int, int>>& v) {
  ordered_json out = ordered_json::array();
  for (auto [a, b] : v) out.push_back(ordered_json::array({a, b}));
  return out;
}

std::vector<std::pair<int, int>> pairs_from_json(const ordered_json& j) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : j) out.emplace_back(e[0].get<int>(), e[1].get<int>());
  return out;
}

}  // namespace

std::string emit_json(const AnalysisReport& r) {
  ordered_json j;
  j["name"] = r.name;
  j["kind"] = r.kind;
  j["elements"] = r.elements;
  j["covers"] = pairs_json(r.covers);
  j["modular"] = r.modular;
  j["distributive"] = r.distributive;
  j["maximal"] = r.maximal;
  j["principal"] = r.principal;
  j["commutator"] = r.commutator;
  j["laws"] = ordered_json{{"commutative", r.commutative},
                           {"join_distributive", r.join_distributive},
                           {"equals_meet", r.equals_meet},
                           {"associative", r.associative},
                           {"nabla_neutral", r.nabla_neutral}};
  ordered_json cls;
  cls["abelian"] = r.abelian;
  cls["solvable"] = r.solvable;
  cls["nilpotent"] = r.nilpotent;
  cls["solvable_witness"] = r.solvable_witness ? ordered_json(*r.solvable_witness)
                                               : ordered_json(nullptr);
  cls["nilpotent_witness"] = r.nilpotent_witness ? ordered_json(*r.nilpotent_witness)
                                                 : ordered_json(nullptr);
  j["classification"] = cls;
  j["spec"] = r.spec;
  j["max_congruences"] = r.max_congruences;
  j["radical_map"] = r.radical_map;
  j["semiprime"] = r.semiprime;
  j["boolean_center"] = r.boolean_center;
  j["hyperarchimedean"] =
      r.hyperarchimedean ? ordered_json(*r.hyperarchimedean) : ordered_json(nullptr);
  ordered_json retic;
  if (r.retic_class_of) {
    retic["class_of"] = *r.retic_class_of;
    retic["labels"] = r.retic_labels;
    retic["covers"] = pairs_json(r.retic_covers);
    retic["shape"] = r.retic_shape ? ordered_json(*r.retic_shape) : ordered_json(nullptr);
  } else {
    retic["refusal"] = r.retic_refusal;
  }
  j["reticulation"] = retic;
  ordered_json cond = ordered_json::array();
  for (const auto& c : r.conditional)
    cond.push_back(ordered_json{{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
  j["conditional"] = cond;
  return j.dump(2) + "\n";
}

AnalysisReport parse_report_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  AnalysisReport r;
  r.name = j.at("name").get<std::string>();
  r.kind = j.at("kind").get<std::string>();
  r.elements = j.at("elements").get<std::vector<std::string>>();
  r.covers = pairs_from_json(j.at("covers"));
  r.modular = j.at("modular").get<bool>();
  r.distributive = j.at("distributive").get<bool>();
  r.maximal = j.at("maximal").get<std::vector<int>>();
  r.principal = j.at("principal").get<std::vector<int>>();
  r.commutator = j.at("commutator").get<std::vector<int>>();
  const auto& laws = j.at("laws");
  r.commutative = laws.at("commutative").get<bool>();
  r.join_distributive = laws.at("join_distributive").get<bool>();
  r.equals_meet = laws.at("equals_meet").get<bool>();
  r.associative = laws.at("associative").get<bool>();
  r.nabla_neutral = laws.at("nabla_neutral").get<bool>();
  const auto& cls = j.at("classification");
  r.abelian = cls.at("abelian").get<bool>();
  r.solvable = cls.at("solvable").get<bool>();
  r.nilpotent = cls.at("nilpotent").get<bool>();
  if (!cls.at("solvable_witness").is_null())
    r.solvable_witness = cls.at("solvable_witness").get<int>();
  if (!cls.at("nilpotent_witness").is_null())
    r.nilpotent_witness = cls.at("nilpotent_witness").get<int>();
  r.spec = j.at("spec").get<std::vector<int>>();
  r.max_congruences = j.at("max_congruences").get<std::vector<int>>();
  r.radical_map = j.at("radical_map").get<std::vector<int>>();
  r.semiprime = j.at("semiprime").get<bool>();
  r.boolean_center = j.at("boolean_center").get<std::vector<int>>();
  if (!j.at("hyperarchimedean").is_null())
    r.hyperarchimedean = j.at("hyperarchimedean").get<bool>();
  const auto& retic = j.at("reticulation");
  if (retic.contains("class_of")) {
    r.retic_class_of = retic.at("class_of").get<std::vector<int>>();
    r.retic_labels = retic.at("labels").get<std::vector<std::string>>();
    r.retic_covers = pairs_from_json(retic.at("covers"));
    if (!retic.at("shape").is_null()) r.retic_shape = retic.at("shape").get<std::string>();
  } else {
    r.retic_refusal = retic.at("refusal").get<std::string>();
  }
  for (const auto& c : j.at("conditional"))
    r.conditional.push_back({c.at("name").get<std::string>(),
                             c.at("status").get<std::string>(),
                             c.at("detail").get<std::string>()});
  return r;
}

std::string emit_dot(const BoundedLattice& lat, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph \"" << graph_name << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (int i = 0; i < lat.size(); ++i)
    out << "  n" << i << " [label=\"" << lat.labels[i] << "\"];\n";
  for (auto [a, b] : lat.covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::vector<Report> verify_battery(const AlgebraDocument& doc, int threads) {
  std::vector<Report> out;
  Analysis a = doc.kind == DocumentKind::algebra ? analyze_algebra(doc.algebra, threads)
                                                 : analyze_structure(doc.structure);

  out.push_back(law_checks(*a.cs));
  out.push_back(conditional_spectrum_checks(*a.cs));

  {
    Report r;
    r.subject = "radical methods";
    if (a.cs->has_principal_marks()) {
      bool agree = true;
      for (int t = 0; t < a.cs->size(); ++t)
        if (radical(*a.cs, t, RadicalMethod::via_spec) !=
            radical(*a.cs, t, RadicalMethod::via_iteration)) {
          agree = false;
          break;
        }
      r.add("via_spec_equals_via_iteration", agree);
    } else {
      r.skip("via_spec_equals_via_iteration", "no principal marks on this fixture");
    }
    out.push_back(r);
  }

  if (a.retic) {
    out.push_back(verify_spec_homeomorphism(*a.retic));
    out.push_back(verify_galois(*a.retic));
    out.push_back(verify_annihilators(*a.retic));
  } else {
    Report r;
    r.subject = "reticulation";
    r.skip("construction", a.retic_refusal);
    out.push_back(r);
  }

  {
    Report r;
    r.subject = "boolean center";
    try {
      boolean_center(*a.cs);  // throws when the verified laws fail
      r.add("center_is_boolean_algebra", true);
    } catch (const LatticeError& e) {
      r.add("center_is_boolean_algebra", false, e.what());
    }
    out.push_back(r);
  }

  if (doc.kind == DocumentKind::algebra) {
    out.push_back(verify_transport_invariants(a));
    out.push_back(verify_semiprime_reduction(a));
    out.push_back(verify_hyperarchimedean_equivalences(a));
    if (doc.algebra->size() <= 10) {
      out.push_back(verify_quotient_preservation_all(a));
      out.push_back(quotient_commutator_check(a.algebra, *a.cs));
    } else {
      Report r;
      r.subject = "quotient batteries";
      r.skip("quotient_preservation", "carrier above the per-document size guard");
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace retic
