#include "retic/document.hpp"

#include <map>

namespace retic {

namespace {

// The quaternion group under (product, inverse, unit).
const char* kC8 = R"(kind: algebra
name: c8
elements: 1 -1 i -i j -j k -k
op mul/2:
1 -1 i -i j -j k -k
-1 1 -i i -j j -k k
i -i -1 1 k -k -j j
-i i 1 -1 -k k j -j
j -j -k k -1 1 i -i
-j j k -k 1 -1 -i i
k -k j -j -i i -1 1
-k k -j j i -i 1 -1
op inv/1:
1 -1 -i i -j j -k k
op e/0:
1
)";

// The symmetric group on three letters: t,u,v transpositions, c,d the cycles.
const char* kS3 = R"(kind: algebra
name: s3
elements: 1 t u v c d
op mul/2:
1 t u v c d
t 1 d c v u
u c 1 d t v
v d c 1 u t
c u v t d 1
d v t u 1 c
op inv/1:
1 t u v d c
op e/0:
1
)";

// Five-element groupoid whose congruences form the seven-element lattice
// with one atom {a,b} under an M3 of partitions of {x,y,z}: {a,b} is a max
// semilattice acting as the identity on {x,y,z}, and {x,y,z} multiplies into
// {a,b} through the equality kernel.
const char* kM5 = R"(kind: algebra
name: m5
elements: a b x y z
op +/2:
a b x y z
b b x y z
x x a b b
y y b a b
z z b b a
)";

// Five-element groupoid: a<b<c is a join chain absorbing x,y on the left,
// while x and y are constant rows swapping each other.
const char* kN5X = R"(kind: algebra
name: n5x
elements: a b c x y
op +/2:
a b c a a
b b c b b
c c c c c
y y y y y
x x x x x
)";

// Commutator-structure fixture: the six-element congruence lattice with its
// commutator table, loaded directly because the source operation table is
// not usable.
const char* kU5 = R"(kind: commutator-structure
name: u5
elements: Delta alpha beta gamma delta nabla
leq:
Delta delta
delta alpha
delta beta
delta gamma
alpha nabla
beta nabla
gamma nabla
comm:
Delta Delta Delta Delta Delta Delta
Delta delta delta delta delta alpha
Delta delta delta delta delta beta
Delta delta delta gamma delta gamma
Delta delta delta delta Delta delta
Delta alpha beta gamma delta nabla
)";

// Bounded lattice with branches a, b and a chain x < y.
const char* kLatticeE = R"(kind: algebra
name: lattice-e
elements: 0 a b x y 1
op join/2:
0 a b x y 1
a a 1 1 1 1
b 1 b 1 1 1
x 1 1 x y 1
y 1 1 y y 1
1 1 1 1 1 1
op meet/2:
0 0 0 0 0 0
0 a 0 0 0 a
0 0 b 0 0 b
0 0 0 x x x
0 0 0 x y y
0 a b x y 1
op zero/0:
0
op one/0:
1
)";

// The pentagon: 0 < a < 1 and 0 < x < y < 1.
const char* kLatticeP = R"(kind: algebra
name: lattice-p
elements: 0 a x y 1
op join/2:
0 a x y 1
a a 1 1 1
x 1 x y 1
y 1 y y 1
1 1 1 1 1
op meet/2:
0 0 0 0 0
0 a 0 0 a
0 0 x x x
0 0 x y y
0 a x y 1
op zero/0:
0
op one/0:
1
)";

// The diamond: three incomparable atoms-coatoms.
const char* kLatticeD = R"(kind: algebra
name: lattice-d
elements: 0 a x b 1
op join/2:
0 a x b 1
a a 1 1 1
x 1 x 1 1
b 1 1 b 1
1 1 1 1 1
op meet/2:
0 0 0 0 0
0 a 0 0 a
0 0 x 0 x
0 0 0 b b
0 a x b 1
op zero/0:
0
op one/0:
1
)";

const char* kChain2 = R"(kind: algebra
name: chain-2
elements: 0 1
op join/2:
0 1
1 1
op meet/2:
0 0
0 1
op zero/0:
0
op one/0:
1
)";

const char* kChain3 = R"(kind: algebra
name: chain-3
elements: 0 m 1
op join/2:
0 m 1
m m 1
1 1 1
op meet/2:
0 0 0
0 m m
0 m 1
op zero/0:
0
op one/0:
1
)";

const char* kChain4 = R"(kind: algebra
name: chain-4
elements: 0 x y 1
op join/2:
0 x y 1
x x y 1
y y y 1
1 1 1 1
op meet/2:
0 0 0 0
0 x x x
0 x y y
0 x y 1
op zero/0:
0
op one/0:
1
)";

const std::map<std::string, const char*>& fixture_map() {
  static const std::map<std::string, const char*> m = {
      {"c8", kC8},           {"s3", kS3},           {"m5", kM5},
      {"n5x", kN5X},         {"u5", kU5},           {"lattice-e", kLatticeE},
      {"lattice-p", kLatticeP}, {"lattice-d", kLatticeD}, {"chain-2", kChain2},
      {"chain-3", kChain3},  {"chain-4", kChain4},
  };
  return m;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [name, text] : fixture_map()) out.push_back(name);
  return out;
}

bool is_fixture_name(const std::string& name) {
  return fixture_map().count(name) != 0;
}

const std::string& fixture_text(const std::string& name) {
  static std::map<std::string, std::string> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    auto mit = fixture_map().find(name);
    if (mit == fixture_map().end()) throw AlgebraError("unknown fixture " + name);
    it = cache.emplace(name, mit->second).first;
  }
  return it->second;
}

AlgebraDocument load_fixture(const std::string& name) {
  return parse_document(fixture_text(name));
}

}  // namespace retic
