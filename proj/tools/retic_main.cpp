#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "retic/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitVerification = 4;

retic::AlgebraDocument load_input(const std::string& input) {
  if (retic::is_fixture_name(input)) return retic::load_fixture(input);
  std::ifstream in(input);
  if (!in) throw retic::ParseError(0, 0, "cannot open " + input + " (not a fixture name either)");
  std::ostringstream buf;
  buf << in.rdbuf();
  return retic::parse_document(buf.str());
}

std::string describe(const retic::AnalysisReport& r) {
  std::ostringstream out;
  out << r.name << " (" << r.kind << ")\n";
  out << "  elements of Con: " << r.elements.size() << " (modular=" << (r.modular ? "yes" : "no")
      << ", distributive=" << (r.distributive ? "yes" : "no") << ")\n";
  out << "  laws: commutative=" << r.commutative << " join_distributive=" << r.join_distributive
      << " equals_meet=" << r.equals_meet << " associative=" << r.associative
      << " nabla_neutral=" << r.nabla_neutral << "\n";
  out << "  classification: abelian=" << r.abelian << " solvable=" << r.solvable;
  if (r.solvable_witness) out << "(n=" << *r.solvable_witness << ")";
  out << " nilpotent=" << r.nilpotent;
  if (r.nilpotent_witness) out << "(n=" << *r.nilpotent_witness << ")";
  out << "\n  Spec = {";
  for (size_t i = 0; i < r.spec.size(); ++i)
    out << (i ? ", " : "") << r.elements[r.spec[i]];
  out << "}\n  Max = {";
  for (size_t i = 0; i < r.max_congruences.size(); ++i)
    out << (i ? ", " : "") << r.elements[r.max_congruences[i]];
  out << "}\n  semiprime=" << (r.semiprime ? "yes" : "no") << "\n";
  out << "  Boolean center = {";
  for (size_t i = 0; i < r.boolean_center.size(); ++i)
    out << (i ? ", " : "") << r.elements[r.boolean_center[i]];
  out << "}\n";
  if (r.hyperarchimedean)
    out << "  hyperarchimedean=" << (*r.hyperarchimedean ? "yes" : "no") << "\n";
  if (r.retic_class_of) {
    out << "  L has " << r.retic_labels.size() << " classes";
    if (r.retic_shape) out << ", isomorphic to " << *r.retic_shape;
    out << "\n";
  } else {
    out << "  reticulation refused: " << r.retic_refusal << "\n";
  }
  for (const auto& c : r.conditional)
    out << "  [" << c.status << "] " << c.name << (c.detail.empty() ? "" : ": " + c.detail)
        << "\n";
  return out.str();
}

void print_commutators(std::ostream& out, const retic::AnalysisReport& r) {
  const int n = static_cast<int>(r.elements.size());
  out << "commutator table of " << r.name << " (rows/cols in element order)\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      out << (j ? " " : "") << r.elements[r.commutator[static_cast<size_t>(i) * n + j]];
    out << "\n";
  }
}

void print_spectrum(std::ostream& out, const retic::AnalysisReport& r) {
  out << "Spec(" << r.name << ") = {";
  for (size_t i = 0; i < r.spec.size(); ++i)
    out << (i ? ", " : "") << r.elements[r.spec[i]];
  out << "}\nMax(" << r.name << ") = {";
  for (size_t i = 0; i < r.max_congruences.size(); ++i)
    out << (i ? ", " : "") << r.elements[r.max_congruences[i]];
  out << "}\nradicals:\n";
  for (size_t t = 0; t < r.radical_map.size(); ++t)
    out << "  rho(" << r.elements[t] << ") = " << r.elements[r.radical_map[t]] << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-algebra congruence, commutator, spectrum and reticulation toolkit"};
  app.require_subcommand(1);

  std::string input;
  bool as_json = false;
  std::string dot_out;
  int max_lattice = 20;
  if (const char* env = std::getenv("RETIC_MAX_LATTICE")) max_lattice = std::atoi(env);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "document file or built-in fixture name")->required();
    cmd->add_flag("--json", as_json, "emit JSON instead of text");
    cmd->add_option("--dot-out", dot_out, "write DOT output to this path");
    cmd->add_option("--max-lattice", max_lattice, "ideal-enumeration size cap");
  };

  auto* analyze = app.add_subcommand("analyze", "full analysis report");
  auto* commutators = app.add_subcommand("commutators", "commutator table");
  auto* spectrum_cmd = app.add_subcommand("spectrum", "prime spectrum, maximal congruences, radicals");
  auto* reticulate = app.add_subcommand("reticulate", "reticulation lattice and shape tag");
  auto* verify = app.add_subcommand("verify", "run the whole theorem battery");
  auto* dot = app.add_subcommand("dot", "Hasse diagrams of Con and L as DOT");
  for (auto* cmd : {analyze, commutators, spectrum_cmd, reticulate, verify, dot})
    add_common(cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    retic::AlgebraDocument doc = load_input(input);

    if (verify->parsed()) {
      auto reports = retic::verify_battery(doc);
      bool ok = true;
      for (const auto& rep : reports)
        for (const auto& c : rep.checks) {
          const char* status = c.status == retic::CheckStatus::pass ? "pass"
                               : c.status == retic::CheckStatus::fail ? "FAIL"
                                                                      : "skip";
          std::cout << "[" << status << "] " << rep.subject << ": " << c.name;
          if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
          std::cout << "\n";
          if (c.status == retic::CheckStatus::fail) ok = false;
        }
      std::cout << (ok ? "all checks passed" : "verification failed") << "\n";
      return ok ? kExitOk : kExitVerification;
    }

    retic::AnalysisReport report = retic::analyze_document(doc);

    if (dot->parsed()) {
      retic::BoundedLattice con = retic::BoundedLattice::from_covers(report.elements, report.covers);
      std::ostringstream buf;
      buf << retic::emit_dot(con, "Con_" + report.name);
      if (report.retic_class_of) {
        retic::BoundedLattice l =
            retic::BoundedLattice::from_covers(report.retic_labels, report.retic_covers);
        buf << retic::emit_dot(l, "L_" + report.name);
      }
      if (!dot_out.empty()) {
        std::ofstream out(dot_out);
        out << buf.str();
      } else {
        std::cout << buf.str();
      }
      return kExitOk;
    }

    if (as_json) {
      std::cout << retic::emit_json(report);
      return reticulate->parsed() && !report.retic_class_of ? kExitHypothesis : kExitOk;
    }

    if (analyze->parsed()) {
      std::cout << describe(report);
    } else if (commutators->parsed()) {
      print_commutators(std::cout, report);
    } else if (spectrum_cmd->parsed()) {
      print_spectrum(std::cout, report);
    } else if (reticulate->parsed()) {
      if (!report.retic_class_of) {
        std::cout << "reticulation refused: " << report.retic_refusal << "\n";
        return kExitHypothesis;
      }
      if (static_cast<int>(report.retic_labels.size()) > max_lattice) {
        std::cout << "L(" << report.name << ") has " << report.retic_labels.size()
                  << " classes, above the cap " << max_lattice << "\n";
        return kExitHypothesis;
      }
      std::cout << "L(" << report.name << ") ";
      if (report.retic_shape) {
        std::cout << "is isomorphic to " << *report.retic_shape << "\n";
      } else {
        std::cout << "covers:\n";
        for (auto [a, b] : report.retic_covers)
          std::cout << "  " << report.retic_labels[a] << " < " << report.retic_labels[b] << "\n";
      }
    }
    return kExitOk;
  } catch (const retic::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const retic::HypothesisError& e) {
    std::cerr << "hypothesis refusal: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
}
