#include <doctest.h>

#include "oracles.hpp"
#include "retic/document.hpp"
#include "retic/functor.hpp"
#include "retic/report.hpp"

using namespace retic;

namespace {

Analysis analyzed(const std::string& name) {
  auto doc = load_fixture(name);
  if (doc.kind == DocumentKind::algebra) return analyze_algebra(doc.algebra);
  return analyze_structure(doc.structure);
}

int part_of(const Analysis& a, std::vector<std::vector<int>> blocks) {
  REQUIRE(a.con);
  int idx = a.con->index_of(Congruence::from_blocks(a.con->algebra->size(), blocks));
  REQUIRE(idx >= 0);
  return idx;
}

}  // namespace

TEST_CASE("primality examples") {
  Analysis n = analyzed("n5x");
  int psi = part_of(n, {{1, 2}, {3, 4}});
  int xi = part_of(n, {{0, 1}, {3, 4}});
  int chi = part_of(n, {{0, 1, 2}, {3, 4}});
  int chi1 = part_of(n, {{0, 1, 2}});
  CHECK(is_prime(*n.cs, psi));
  CHECK(is_prime(*n.cs, xi));
  CHECK(!is_prime(*n.cs, chi));
  CHECK(!is_prime(*n.cs, chi1));
  CHECK(!is_prime(*n.cs, n.cs->lat.top()));  // properness

  Analysis m = analyzed("m5");
  CHECK(is_prime(*m.cs, m.con->bottom()));
  CHECK(m.spec.spec == std::vector<int>{m.con->bottom()});
}

TEST_CASE("spectra of the named structures") {
  CHECK(analyzed("c8").spec.spec.empty());
  CHECK(analyzed("s3").spec.spec.empty());
  CHECK(analyzed("u5").spec.spec.empty());
  Analysis n = analyzed("n5x");
  CHECK(n.spec.spec == std::vector<int>{part_of(n, {{0, 1}, {3, 4}}),
                                        part_of(n, {{1, 2}, {3, 4}})});
  Analysis e = analyzed("lattice-e");
  CHECK(e.spec.spec.size() == 2);
  Analysis p = analyzed("lattice-p");
  CHECK(p.spec.spec.size() == 3);
}

TEST_CASE("radical examples and laws") {
  Analysis n = analyzed("n5x");
  int phi = part_of(n, {{3, 4}});
  int chi = part_of(n, {{0, 1, 2}, {3, 4}});
  int psi = part_of(n, {{1, 2}, {3, 4}});
  int psi1 = part_of(n, {{1, 2}});
  CHECK(radical(*n.cs, n.con->bottom(), RadicalMethod::via_spec) == phi);
  CHECK(radical(*n.cs, chi, RadicalMethod::via_spec) == n.cs->lat.top());
  CHECK(radical(*n.cs, psi1, RadicalMethod::via_spec) == psi);
  CHECK(radical(*n.cs, n.cs->lat.top(), RadicalMethod::via_spec) == n.cs->lat.top());

  Analysis c8 = analyzed("c8");
  for (int t = 0; t < c8.cs->size(); ++t)
    CHECK(radical(*c8.cs, t, RadicalMethod::via_spec) == c8.cs->lat.top());

  SUBCASE("closure operator laws") {
    for (const char* name : {"c8", "s3", "m5", "n5x", "lattice-e", "lattice-p", "u5"}) {
      CAPTURE(name);
      Analysis a = analyzed(name);
      const auto& rm = a.spec.radical_map;
      for (int t = 0; t < a.cs->size(); ++t) {
        CHECK(a.cs->lat.le(t, rm[t]));
        CHECK(rm[rm[t]] == rm[t]);
        for (int z = 0; z < a.cs->size(); ++z)
          if (a.cs->lat.le(t, z)) CHECK(a.cs->lat.le(rm[t], rm[z]));
      }
    }
  }
  SUBCASE("radicals of iterated commutators collapse to the meet") {
    for (const char* name : {"c8", "m5", "n5x", "lattice-p"}) {
      CAPTURE(name);
      Analysis a = analyzed(name);
      const auto& rm = a.spec.radical_map;
      for (int x = 0; x < a.cs->size(); ++x)
        for (int y = 0; y < a.cs->size(); ++y)
          for (int k = 1; k <= 3; ++k) {
            int it = iterated(*a.cs, x, y, k, IterMode::square);
            CHECK(rm[it] == rm[a.cs->lat.meet(x, y)]);
            CHECK(rm[it] == a.cs->lat.meet(rm[x], rm[y]));
          }
    }
  }
}

TEST_CASE("radical methods agree on every algebra-backed fixture") {
  for (const auto& name : fixture_names()) {
    auto doc = load_fixture(name);
    if (doc.kind != DocumentKind::algebra) continue;
    CAPTURE(name);
    Analysis a = analyze_algebra(doc.algebra);
    for (int t = 0; t < a.cs->size(); ++t)
      CHECK(radical(*a.cs, t, RadicalMethod::via_spec) ==
            radical(*a.cs, t, RadicalMethod::via_iteration));
  }
  // Fixture structures without principal marks refuse the iteration method.
  auto u5 = load_fixture("u5").structure;
  CHECK_THROWS_AS(radical(*u5, 0, RadicalMethod::via_iteration), HypothesisError);
}

TEST_CASE("stone sets") {
  Analysis n = analyzed("n5x");
  int psi = part_of(n, {{1, 2}, {3, 4}});
  int psi1 = part_of(n, {{1, 2}});
  SUBCASE("bounds") {
    auto at_bottom = stone_sets(*n.cs, n.cs->lat.bottom());
    CHECK(at_bottom.V == n.spec.spec);
    CHECK(at_bottom.D.empty());
    CHECK(stone_sets(*n.cs, n.cs->lat.top()).V.empty());
  }
  SUBCASE("V of psi1 is exactly psi") {
    CHECK(stone_sets(*n.cs, psi1).V == std::vector<int>{psi});
  }
  SUBCASE("closed sets turn commutators into unions and joins into intersections") {
    for (const char* name : {"n5x", "m5", "lattice-p", "u5"}) {
      CAPTURE(name);
      Analysis a = analyzed(name);
      for (int x = 0; x < a.cs->size(); ++x)
        for (int y = 0; y < a.cs->size(); ++y) {
          auto vx = stone_sets(*a.cs, x).V;
          auto vy = stone_sets(*a.cs, y).V;
          std::vector<int> uni, inter;
          std::set_union(vx.begin(), vx.end(), vy.begin(), vy.end(), std::back_inserter(uni));
          std::set_intersection(vx.begin(), vx.end(), vy.begin(), vy.end(),
                                std::back_inserter(inter));
          CHECK(stone_sets(*a.cs, a.cs->comm(x, y)).V == uni);
          CHECK(stone_sets(*a.cs, a.cs->lat.meet(x, y)).V == uni);
          CHECK(stone_sets(*a.cs, a.cs->lat.join(x, y)).V == inter);
          auto dxy = stone_sets(*a.cs, a.cs->comm(x, y)).D;
          std::vector<int> dinter;
          auto dx = stone_sets(*a.cs, x).D;
          auto dy = stone_sets(*a.cs, y).D;
          std::set_intersection(dx.begin(), dx.end(), dy.begin(), dy.end(),
                                std::back_inserter(dinter));
          CHECK(dxy == dinter);
        }
    }
  }
}

TEST_CASE("boolean centers") {
  Analysis c8 = analyzed("c8");
  CHECK(c8.spec.center == std::vector<int>{c8.cs->lat.bottom(), c8.cs->lat.top()});

  Analysis l4 = analyzed("chain-4");
  CHECK(static_cast<int>(l4.spec.center.size()) == l4.cs->size());  // boolean lattice

  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    Analysis a = analyzed(name);
    CHECK(std::find(a.spec.center.begin(), a.spec.center.end(), a.cs->lat.bottom()) !=
          a.spec.center.end());
    CHECK(std::find(a.spec.center.begin(), a.spec.center.end(), a.cs->lat.top()) !=
          a.spec.center.end());
  }
}

TEST_CASE("hyperarchimedean tests") {
  CHECK(is_hyperarchimedean(*analyzed("chain-4").cs).flag);
  CHECK(!is_hyperarchimedean(*analyzed("lattice-p").cs).flag);
  SUBCASE("a trivial algebra is vacuously hyperarchimedean") {
    Signature sig;
    sig.ops = {{"f", 1}};
    auto one = std::make_shared<FiniteAlgebra>("one", std::vector<std::string>{"*"}, sig,
                                               std::vector<std::vector<int>>{{0}});
    CHECK(is_hyperarchimedean(commutator_table(one)).flag);
  }
  SUBCASE("witnesses stabilize within the lattice height") {
    auto w = is_hyperarchimedean(*analyzed("chain-4").cs);
    for (auto [elem, n] : w.witnesses) {
      REQUIRE(n.has_value());
      CHECK(*n >= 1);
      CHECK(*n <= 8);
    }
  }
}

TEST_CASE("semiprimeness and its consequences") {
  CHECK(analyzed("m5").spec.semiprime);
  CHECK(!analyzed("n5x").spec.semiprime);
  CHECK(!analyzed("c8").spec.semiprime);
  CHECK(analyzed("lattice-e").spec.semiprime);

  SUBCASE("compact elements drop into the radical iff a power vanishes") {
    for (const char* name : {"c8", "m5", "n5x", "lattice-p"}) {
      CAPTURE(name);
      Analysis a = analyzed(name);
      int rho0 = a.spec.radical_map[a.cs->lat.bottom()];
      for (int t = 0; t < a.cs->size(); ++t) {
        if (!a.cs->principal[t]) continue;
        bool below = a.cs->lat.le(t, rho0);
        bool vanishes = iterated_fixpoint(*a.cs, t, t) == a.cs->lat.bottom();
        CHECK(below == vanishes);
      }
    }
  }
  SUBCASE("on semiprime fixtures the commutator vanishes exactly with the meet") {
    for (const char* name : {"m5", "lattice-e", "lattice-p", "lattice-d", "chain-4"}) {
      CAPTURE(name);
      Analysis a = analyzed(name);
      REQUIRE(a.spec.semiprime);
      for (int x = 0; x < a.cs->size(); ++x)
        for (int y = 0; y < a.cs->size(); ++y)
          CHECK((a.cs->comm(x, y) == a.cs->lat.bottom()) ==
                (a.cs->lat.meet(x, y) == a.cs->lat.bottom()));
    }
  }
}

TEST_CASE("conditional checks gate on the surrogate hypothesis") {
  for (const char* name : {"lattice-e", "lattice-p", "lattice-d", "chain-4"}) {
    CAPTURE(name);
    Report rep = conditional_spectrum_checks(*analyzed(name).cs);
    for (const auto& c : rep.checks) CHECK(c.status == CheckStatus::pass);
  }
  for (const char* name : {"c8", "s3", "m5", "n5x", "u5"}) {
    CAPTURE(name);
    Report rep = conditional_spectrum_checks(*analyzed(name).cs);
    for (const auto& c : rep.checks) CHECK(c.status == CheckStatus::skipped);
  }
}

TEST_CASE("spectrum reports validate their own invariants") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    Analysis a = analyzed(name);
    CHECK_NOTHROW(a.spec.validate(*a.cs));
    CHECK(a.spec.radical_map[a.cs->lat.top()] == a.cs->lat.top());
  }
}
