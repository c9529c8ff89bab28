#include <doctest.h>

#include "oracles.hpp"
#include "retic/document.hpp"
#include "retic/functor.hpp"

using namespace retic;

TEST_CASE("induced maps on reticulations") {
  auto c8 = load_fixture("c8").algebra;
  Analysis a = analyze_algebra(c8);

  SUBCASE("the identity induces the identity") {
    ReticMorphism id = retic_morphism(identity_morphism(c8), a, a);
    for (int c = 0; c < a.retic->classes(); ++c) CHECK(id.map[c] == c);
  }
  SUBCASE("collapsing to a point lands in the one-class lattice") {
    auto [q, p] = quotient_algebra(c8, Congruence::all(c8->size()));
    Analysis qa = analyze_algebra(q);
    CHECK(qa.retic->classes() == 1);
    ReticMorphism m = retic_morphism(p, a, qa);
    for (int v : m.map) CHECK(v == 0);
  }
  SUBCASE("the centre quotient maps one-class to one-class") {
    Congruence centre = oracles::congruence_of_subgroup(*c8, {0, 1});
    auto [q, p] = quotient_algebra(c8, centre);
    Analysis qa = analyze_algebra(q);
    CHECK(a.retic->classes() == 1);  // empty spectrum upstairs
    CHECK(qa.retic->classes() == 1);  // the Klein group is abelian
    ReticMorphism m = retic_morphism(p, a, qa);
    CHECK(m.map.size() == 1);
  }
}

TEST_CASE("quotient preservation for every congruence of the pentagon and of n5x") {
  for (const char* name : {"lattice-p", "n5x"}) {
    CAPTURE(name);
    Analysis a = analyze_algebra(load_fixture(name).algebra);
    Report rep = verify_quotient_preservation_all(a);
    for (const auto& c : rep.checks) {
      CAPTURE(c.name);
      CHECK(c.status == CheckStatus::pass);
    }
  }
}

TEST_CASE("product preservation") {
  SUBCASE("lattice product e x p") {
    Report rep = verify_product_preservation(load_fixture("lattice-e").algebra,
                                             load_fixture("lattice-p").algebra);
    for (const auto& c : rep.checks) {
      CAPTURE(c.name);
      CHECK(c.status == CheckStatus::pass);
    }
  }
  SUBCASE("a one-element factor changes nothing") {
    auto p = load_fixture("lattice-p").algebra;
    Signature sig = p->signature();
    auto one = std::make_shared<FiniteAlgebra>(
        "one", std::vector<std::string>{"*"}, sig,
        std::vector<std::vector<int>>{{0}, {0}, {0}, {0}});
    Report rep = verify_product_preservation(p, one);
    CHECK(rep.all_pass());
    Analysis pa = analyze_algebra(p);
    auto prod = std::make_shared<FiniteAlgebra>(direct_product(*p, *one));
    Analysis qa = analyze_algebra(prod);
    CHECK(lattice_iso(pa.retic->lattice, qa.retic->lattice).has_value());
  }
}

TEST_CASE("semiprime reduction") {
  SUBCASE("quaternion group reduces to the trivial algebra") {
    Analysis a = analyze_algebra(load_fixture("c8").algebra);
    int rho0 = a.spec.radical_map[a.con->bottom()];
    CHECK(rho0 == a.con->top());
    Report rep = verify_semiprime_reduction(a);
    for (const auto& c : rep.checks) {
      CAPTURE(c.name);
      CHECK(c.status != CheckStatus::fail);
    }
  }
  SUBCASE("semiprime fixtures reduce to themselves") {
    for (const char* name : {"m5", "lattice-e", "lattice-p", "chain-4"}) {
      CAPTURE(name);
      Analysis a = analyze_algebra(load_fixture(name).algebra);
      REQUIRE(a.spec.semiprime);
      Report rep = verify_semiprime_reduction(a);
      CHECK(rep.all_pass());
    }
  }
  SUBCASE("every algebra fixture passes the reduction battery") {
    for (const auto& name : fixture_names()) {
      auto doc = load_fixture(name);
      if (doc.kind != DocumentKind::algebra) continue;
      CAPTURE(name);
      Report rep = verify_semiprime_reduction(analyze_algebra(doc.algebra));
      for (const auto& c : rep.checks) {
        CAPTURE(c.name);
        CHECK(c.status != CheckStatus::fail);
      }
    }
  }
}

TEST_CASE("hyperarchimedean equivalences") {
  SUBCASE("all six conditions hold for the chain-4 lattice") {
    Analysis a = analyze_algebra(load_fixture("chain-4").algebra);
    Report rep = verify_hyperarchimedean_equivalences(a);
    REQUIRE(!rep.checks.empty());
    CHECK(rep.checks.front().status == CheckStatus::pass);
    CHECK(is_hyperarchimedean(*a.cs).flag);
  }
  SUBCASE("all six conditions fail together for the pentagon") {
    Analysis a = analyze_algebra(load_fixture("lattice-p").algebra);
    Report rep = verify_hyperarchimedean_equivalences(a);
    REQUIRE(!rep.checks.empty());
    CHECK(rep.checks.front().status == CheckStatus::pass);  // they agree: all false
    CHECK(!is_hyperarchimedean(*a.cs).flag);
  }
  SUBCASE("fixtures failing the surrogate gate are skipped") {
    Analysis a = analyze_algebra(load_fixture("n5x").algebra);
    Report rep = verify_hyperarchimedean_equivalences(a);
    CHECK(rep.checks.front().status == CheckStatus::skipped);
  }
  SUBCASE("a trivial algebra satisfies everything vacuously") {
    Signature sig;
    sig.ops = {{"join", 2}, {"meet", 2}, {"zero", 0}, {"one", 0}};
    auto one = std::make_shared<FiniteAlgebra>(
        "one", std::vector<std::string>{"*"}, sig,
        std::vector<std::vector<int>>{{0}, {0}, {0}, {0}});
    Analysis a = analyze_algebra(one);
    Report rep = verify_hyperarchimedean_equivalences(a);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("functoriality along quotient chains") {
  SUBCASE("pentagon chain") {
    Analysis a = analyze_algebra(load_fixture("lattice-p").algebra);
    int gamma = a.con->index_of(Congruence::from_blocks(5, {{2, 3}}));
    int alpha = a.con->index_of(Congruence::from_blocks(5, {{0, 2, 3}, {1, 4}}));
    REQUIRE(gamma >= 0);
    REQUIRE(alpha >= 0);
    Report rep = verify_functoriality(a, gamma, alpha);
    CHECK(rep.all_pass());
  }
  SUBCASE("n5x chain through phi") {
    Analysis a = analyze_algebra(load_fixture("n5x").algebra);
    int phi = a.con->index_of(Congruence::from_blocks(5, {{3, 4}}));
    int psi = a.con->index_of(Congruence::from_blocks(5, {{1, 2}, {3, 4}}));
    Report rep = verify_functoriality(a, phi, psi);
    CHECK(rep.all_pass());
  }
}

TEST_CASE("transport invariants") {
  for (const auto& name : fixture_names()) {
    auto doc = load_fixture(name);
    if (doc.kind != DocumentKind::algebra) continue;
    CAPTURE(name);
    Analysis a = analyze_algebra(doc.algebra);
    Report rep = verify_transport_invariants(a);
    for (const auto& c : rep.checks) {
      CAPTURE(c.name);
      CHECK(c.status != CheckStatus::fail);
    }
  }
}
