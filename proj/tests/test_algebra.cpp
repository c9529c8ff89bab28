#include <doctest.h>

#include "oracles.hpp"
#include "retic/document.hpp"
#include "retic/lattice.hpp"

using namespace retic;

TEST_CASE("quaternion fixture matches integer-quaternion arithmetic") {
  auto c8 = load_fixture("c8").algebra;
  auto units = oracles::quat_units();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      int args[2] = {i, j};
      CHECK(c8->apply(0, args) == oracles::quat_index(oracles::quat_mul(units[i], units[j])));
    }
  CHECK(c8->evaluate("mul", {"i", "j"}) == c8->index_of_label("k"));
  CHECK(c8->evaluate("e", {}) == c8->index_of_label("1"));
  CHECK(c8->evaluate("inv", {"i"}) == c8->index_of_label("-i"));
}

TEST_CASE("evaluation errors") {
  auto c8 = load_fixture("c8").algebra;
  CHECK_THROWS_AS(c8->evaluate("nosuch", {}), AlgebraError);
  CHECK_THROWS_AS(c8->evaluate("mul", {"i"}), AlgebraError);
  CHECK_THROWS_AS(c8->evaluate("mul", {"i", "q"}), AlgebraError);
}

TEST_CASE("chain join is max") {
  auto l4 = load_fixture("chain-4").algebra;
  CHECK(l4->evaluate("join", {"x", "y"}) == l4->index_of_label("y"));
  CHECK(l4->evaluate("meet", {"x", "y"}) == l4->index_of_label("x"));
}

TEST_CASE("direct product carrier and signature checks") {
  auto e = load_fixture("lattice-e").algebra;
  auto p = load_fixture("lattice-p").algebra;
  auto prod = direct_product(*e, *p);
  CHECK(prod.size() == 30);
  CHECK(prod.signature().ops.size() == 4);

  auto c8 = load_fixture("c8").algebra;
  CHECK_THROWS_AS(direct_product(*e, *c8), AlgebraError);
}

TEST_CASE("one-element factor gives an isomorphic product") {
  auto p = load_fixture("lattice-p").algebra;
  Signature sig = p->signature();
  std::vector<std::vector<int>> tables = {{0}, {0}, {0}, {0}};
  auto one = std::make_shared<FiniteAlgebra>("one", std::vector<std::string>{"*"}, sig, tables);
  auto prod = std::make_shared<FiniteAlgebra>(direct_product(*p, *one));
  CHECK(prod->size() == p->size());
  // First projection is an isomorphism: a bijective morphism.
  SurjectiveMorphism pr = projection_morphism(prod, p, 0);
  std::vector<int> sorted = pr.map;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < p->size(); ++i) CHECK(sorted[i] == i);
}

TEST_CASE("projections of a product are verified surjective morphisms") {
  auto a = load_fixture("chain-2").algebra;
  auto b = load_fixture("chain-3").algebra;
  auto prod = std::make_shared<FiniteAlgebra>(direct_product(*a, *b));
  CHECK_NOTHROW(projection_morphism(prod, a, 0));
  CHECK_NOTHROW(projection_morphism(prod, b, 1));
}

TEST_CASE("morphism validation rejects non-homomorphisms and non-surjections") {
  auto a = load_fixture("chain-2").algebra;
  CHECK_THROWS_AS(SurjectiveMorphism(a, a, {0, 0}), AlgebraError);  // not onto
  auto c3 = load_fixture("chain-3").algebra;
  CHECK_THROWS_AS(SurjectiveMorphism(c3, c3, {0, 0, 2}), AlgebraError);  // breaks join
}

TEST_CASE("quotient of the quaternion group by the centre is the Klein group") {
  auto c8 = load_fixture("c8").algebra;
  Congruence centre = oracles::congruence_of_subgroup(
      *c8, {c8->index_of_label("1"), c8->index_of_label("-1")});
  auto [q, p] = quotient_algebra(c8, centre);
  CHECK(q->size() == 4);
  // Klein group: abelian with every element self-inverse.
  for (int x = 0; x < 4; ++x) {
    int xx[2] = {x, x};
    CHECK(q->apply(0, xx) == q->apply(2, {}));
    for (int y = 0; y < 4; ++y) {
      int xy[2] = {x, y}, yx[2] = {y, x};
      CHECK(q->apply(0, xy) == q->apply(0, yx));
    }
  }
  CHECK(kernel(p) == centre);
}

TEST_CASE("quotient by the identity congruence copies the tables") {
  auto m5 = load_fixture("m5").algebra;
  auto [q, p] = quotient_algebra(m5, Congruence::identity(m5->size()));
  CHECK(q->size() == m5->size());
  for (size_t op = 0; op < m5->signature().ops.size(); ++op)
    CHECK(q->table(static_cast<int>(op)) == m5->table(static_cast<int>(op)));
}

TEST_CASE("quotient by an incompatible partition reports the operation") {
  auto n5x = load_fixture("n5x").algebra;
  Congruence bad = Congruence::from_blocks(5, {{0, 3}});  // merge a,x only
  CHECK(check_compatible(*n5x, bad).has_value());
  CHECK_THROWS_WITH_AS(quotient_algebra(n5x, bad).first->size(),
                       doctest::Contains("not compatible with operation +"), AlgebraError);
}

TEST_CASE("subuniverse generation examples") {
  auto c8 = load_fixture("c8").algebra;
  SUBCASE("already closed set is a fixed point") {
    std::vector<std::vector<int>> gens = {{0}, {1}};  // {1,-1}
    auto out = generate_subuniverse(*c8, 1, gens);
    CHECK(out == gens);
    CHECK(generate_subuniverse(*c8, 1, out) == out);
  }
  SUBCASE("identity generates the trivial subgroup") {
    auto out = generate_subuniverse(*c8, 1, {{0}});
    CHECK(out == std::vector<std::vector<int>>{{0}});
  }
  SUBCASE("i generates the four-element cyclic subgroup") {
    auto out = generate_subuniverse(*c8, 1, {{2}});
    CHECK(out.size() == 4);  // 1, -1, i, -i
  }
  SUBCASE("empty generators give the constants' closure") {
    auto out = generate_subuniverse(*c8, 2, {});
    CHECK(out == std::vector<std::vector<int>>{{0, 0}});
  }
  SUBCASE("no nullary operations and no generators give the empty set") {
    auto m5 = load_fixture("m5").algebra;
    CHECK(generate_subuniverse(*m5, 1, {}).empty());
  }
  SUBCASE("closure idempotence on a wide tuple set") {
    auto m5 = load_fixture("m5").algebra;
    auto out = generate_subuniverse(*m5, 3, {{0, 2, 3}, {1, 1, 4}});
    CHECK(generate_subuniverse(*m5, 3, out) == out);
  }
}

TEST_CASE("subalgebra on the cyclic subgroup of i") {
  auto c8 = load_fixture("c8").algebra;
  auto universe = oracles::generated_subgroup(*c8, {c8->index_of_label("i")});
  FiniteAlgebra s = subalgebra(*c8, universe);
  CHECK(s.size() == 4);
  CHECK_THROWS_AS(subalgebra(*c8, {c8->index_of_label("i")}), AlgebraError);  // not closed
}

TEST_CASE("transport and pull-back form the kernel bijection") {
  auto c8 = load_fixture("c8").algebra;
  auto con = enumerate_congruences(c8);
  for (int t = 0; t < con.size(); ++t) {
    auto [q, p] = quotient_algebra(c8, con.elems[t]);
    CHECK(kernel(p) == con.elems[t]);
    CHECK(pull_back(p, Congruence::identity(q->size())) == con.elems[t]);
    CHECK(transport_congruence(p, con.elems[t]) == Congruence::identity(q->size()));

    auto qcon = enumerate_congruences(q);
    // transport o pull_back = identity on Con(target).
    for (int b = 0; b < qcon.size(); ++b)
      CHECK(transport_congruence(p, pull_back(p, qcon.elems[b])) == qcon.elems[b]);
    // pull_back o transport = identity above the kernel.
    for (int a = 0; a < con.size(); ++a) {
      if (!con.elems[t].leq(con.elems[a])) continue;
      CHECK(pull_back(p, transport_congruence(p, con.elems[a])) == con.elems[a]);
    }
  }
}

TEST_CASE("transport of an atom lands on an atom of the Klein quotient") {
  auto c8 = load_fixture("c8").algebra;
  Congruence centre = oracles::congruence_of_subgroup(
      *c8, {c8->index_of_label("1"), c8->index_of_label("-1")});
  Congruence thetai = oracles::congruence_of_subgroup(
      *c8, oracles::generated_subgroup(*c8, {c8->index_of_label("i")}));
  auto [q, p] = quotient_algebra(c8, centre);
  auto qcon = enumerate_congruences(q);
  CHECK(qcon.size() == 5);  // Klein group: identity, three atoms, top
  Congruence image = transport_congruence(p, thetai);
  int idx = qcon.index_of(image);
  REQUIRE(idx >= 0);
  int atoms = 0;
  bool is_atom = false;
  for (auto [a, b] : qcon.covers)
    if (a == qcon.bottom()) {
      ++atoms;
      if (b == idx) is_atom = true;
    }
  CHECK(atoms == 3);
  CHECK(is_atom);
}

TEST_CASE("transport along a projection recovers the left factor congruence") {
  auto a = load_fixture("chain-3").algebra;
  auto b = load_fixture("chain-2").algebra;
  auto prod = std::make_shared<FiniteAlgebra>(direct_product(*a, *b));
  SurjectiveMorphism pr = projection_morphism(prod, a, 0);
  auto acon = enumerate_congruences(a);
  const int nb = b->size();
  for (int i = 0; i < acon.size(); ++i) {
    // alpha x identity on the product.
    std::vector<int> rep(prod->size());
    for (int x = 0; x < prod->size(); ++x)
      rep[x] = acon.elems[i].rep(x / nb) * nb + x % nb;
    CHECK(transport_congruence(pr, Congruence::from_rep(rep)) == acon.elems[i]);
  }
}
