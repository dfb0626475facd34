#include <random>
#include <unordered_set>

#include "doctest.h"
#include "sylow/tableau.hpp"
#include "sylow/text.hpp"

using namespace sylow;

namespace {

Tableau T(std::vector<const char*> coords) {
  std::vector<BoolPoly> parsed;
  for (unsigned i = 0; i < coords.size(); ++i)
    parsed.push_back(parse_poly(coords[i], i));
  return Tableau(std::move(parsed));
}

Tableau random_tableau(unsigned depth, std::mt19937_64& rng) {
  const std::uint64_t order_bits = (std::uint64_t{1} << depth) - 1;
  std::uint64_t bits = 0;
  for (unsigned chunk = 0; chunk < order_bits; chunk += 64)
    bits ^= rng() << chunk;  // depth <= 6 keeps this one word
  return tableau_at(depth, bits & ((std::uint64_t{1} << order_bits) - 1));
}

// Straight from the level-action definition, coordinate by coordinate.
LeafPermutation oracle_permutation(const Tableau& f) {
  LeafPermutation p;
  p.depth = f.depth();
  p.images.resize(std::size_t{1} << f.depth());
  for (std::uint32_t v = 0; v < p.images.size(); ++v) {
    std::uint32_t image = 0;
    for (unsigned i = 1; i <= f.depth(); ++i) {
      const std::uint32_t prefix = v & ((std::uint32_t{1} << (i - 1)) - 1);
      const std::uint32_t bit = (v >> (i - 1)) & 1u;
      image |= (bit ^ f.coordinate(i).evaluate(prefix)) << (i - 1);
    }
    p.images[v] = image;
  }
  return p;
}

}  // namespace

TEST_SUITE("tableau") {

TEST_CASE("construction checks the arity ladder") {
  CHECK_THROWS_AS(Tableau({BoolPoly::one(0), BoolPoly::zero(0)}),
                  ArityMismatch);
  const Tableau id = Tableau::identity(3);
  CHECK(id.is_identity());
  CHECK(id.depth() == 3);
  for (unsigned i = 1; i <= 3; ++i) CHECK(id.coordinate(i).is_zero());
}

TEST_CASE("coordinate and prefix accessors") {
  const Tableau f = T({"1", "x1", "0"});
  CHECK(f.coordinate(2) == parse_poly("x1", 1));
  CHECK(f.prefix(2) == T({"1", "x1"}));
  CHECK_THROWS_AS(f.coordinate(4), std::out_of_range);
  CHECK_THROWS_AS(f.prefix(0), std::out_of_range);
}

TEST_CASE("product follows the substitution formula") {
  // [1,0,0] * [0,x1,0]: the second coordinate picks up the shift x1 -> x1+1.
  CHECK(T({"1", "0", "0"}) * T({"0", "x1", "0"}) == T({"1", "x1+1", "0"}));
  const Tableau f = T({"1", "x1+1", "x1*x2+x2+1"});
  CHECK(f * Tableau::identity(3) == f);
  CHECK(Tableau::identity(3) * f == f);
  CHECK_THROWS_AS(f * Tableau::identity(2), ArityMismatch);
}

TEST_CASE("product coordinates equal the definitional substitution") {
  std::mt19937_64 rng(21);
  for (unsigned depth = 1; depth <= 6; ++depth) {
    for (int trial = 0; trial < 30; ++trial) {
      const Tableau f = random_tableau(depth, rng);
      const Tableau g = random_tableau(depth, rng);
      const Tableau fg = f * g;
      for (unsigned i = 1; i <= depth; ++i) {
        std::vector<BoolPoly> shifted;
        for (unsigned j = 1; j < i; ++j)
          shifted.push_back(BoolPoly::variable(i - 1, j) +
                            f.coordinate(j).with_arity(i - 1));
        const BoolPoly expected =
            f.coordinate(i) + substitute(g.coordinate(i), shifted, i - 1);
        CHECK(fg.coordinate(i) == expected);
      }
    }
  }
}

TEST_CASE("leaf action fixed examples") {
  CHECK(leaf_permutation(Tableau::identity(4)).is_identity());
  // [1, 0] flips b1 only: swaps 00<->10 and 01<->11 (written b1 b2).
  const LeafPermutation flip = leaf_permutation(T({"1", "0"}));
  CHECK(flip.images == std::vector<std::uint32_t>{1, 0, 3, 2});
  // [0, x1] fixes 00 and 01, swaps 10<->11.
  const LeafPermutation cond = leaf_permutation(T({"0", "x1"}));
  CHECK(cond.images == std::vector<std::uint32_t>{0, 3, 2, 1});
}

TEST_CASE("leaf action matches the evaluate-based oracle") {
  std::mt19937_64 rng(22);
  for (unsigned depth = 1; depth <= 6; ++depth)
    for (int trial = 0; trial < 20; ++trial) {
      const Tableau f = random_tableau(depth, rng);
      CHECK(leaf_permutation(f) == oracle_permutation(f));
    }
}

TEST_CASE("multiplication is a homomorphism onto leaf permutations") {
  // exhaustive at depths 2 and 3
  for (unsigned depth : {2u, 3u}) {
    const std::uint64_t order = std::uint64_t{1} << ((1u << depth) - 1);
    std::vector<Tableau> all;
    for (std::uint64_t idx = 0; idx < order; ++idx)
      all.push_back(tableau_at(depth, idx));
    for (const Tableau& f : all) {
      const LeafPermutation pf = leaf_permutation(f);
      for (const Tableau& g : all)
        CHECK(leaf_permutation(f * g) == compose(pf, leaf_permutation(g)));
    }
  }
  // random spot checks at depth 6
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const Tableau f = random_tableau(6, rng);
    const Tableau g = random_tableau(6, rng);
    CHECK(leaf_permutation(f * g) ==
          compose(leaf_permutation(f), leaf_permutation(g)));
  }
}

TEST_CASE("associativity") {
  const std::uint64_t order2 = 8;
  for (std::uint64_t a = 0; a < order2; ++a)
    for (std::uint64_t b = 0; b < order2; ++b)
      for (std::uint64_t c = 0; c < order2; ++c) {
        const Tableau f = tableau_at(2, a), g = tableau_at(2, b),
                      h = tableau_at(2, c);
        CHECK((f * g) * h == f * (g * h));
      }
  std::mt19937_64 rng(24);
  for (unsigned depth = 3; depth <= 5; ++depth)
    for (int trial = 0; trial < 50; ++trial) {
      const Tableau f = random_tableau(depth, rng);
      const Tableau g = random_tableau(depth, rng);
      const Tableau h = random_tableau(depth, rng);
      CHECK((f * g) * h == f * (g * h));
    }
}

TEST_CASE("inverses") {
  CHECK(Tableau::identity(4).inverse() == Tableau::identity(4));
  const Tableau f = T({"1", "x1", "x1*x2"});
  CHECK((f.inverse() * f).is_identity());
  CHECK((f * f.inverse()).is_identity());
  // exhaustive at depths 1..3
  for (unsigned depth = 1; depth <= 3; ++depth) {
    const std::uint64_t order = std::uint64_t{1} << ((1u << depth) - 1);
    for (std::uint64_t idx = 0; idx < order; ++idx) {
      const Tableau g = tableau_at(depth, idx);
      CHECK((g * g.inverse()).is_identity());
      CHECK((g.inverse() * g).is_identity());
    }
  }
  std::mt19937_64 rng(25);
  for (unsigned depth = 4; depth <= 6; ++depth)
    for (int trial = 0; trial < 25; ++trial) {
      const Tableau g = random_tableau(depth, rng);
      CHECK((g * g.inverse()).is_identity());
      // and via the permutation oracle
      CHECK(leaf_permutation(g.inverse()) == invert(leaf_permutation(g)));
    }
}

TEST_CASE("powers") {
  const Tableau f = T({"1", "x1+1", "0"});
  CHECK(f.pow(0) == Tableau::identity(3));
  CHECK(Tableau::identity(3).pow(7) == Tableau::identity(3));
  CHECK(f.pow(2) == f * f);
  CHECK(f.pow(3) == f * f * f);
}

TEST_CASE("packed keys enumerate the whole group") {
  for (unsigned depth = 1; depth <= 4; ++depth) {
    const std::uint64_t order = std::uint64_t{1} << ((1u << depth) - 1);
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t idx = 0; idx < order; ++idx)
      seen.insert(packed_index(tableau_at(depth, idx)));
    CHECK(seen.size() == order);
  }
}

TEST_CASE("permutation round trip") {
  std::mt19937_64 rng(26);
  for (unsigned depth = 1; depth <= 6; ++depth)
    for (int trial = 0; trial < 10; ++trial) {
      const Tableau f = random_tableau(depth, rng);
      CHECK(tableau_from_leaf_permutation(leaf_permutation(f)) == f);
    }
  // a non-level permutation must be rejected: swap leaves 0 and 3 at depth 2
  LeafPermutation bad;
  bad.depth = 2;
  bad.images = {3, 1, 2, 0};
  CHECK_THROWS_AS(tableau_from_leaf_permutation(bad), InternalInconsistency);
}

TEST_CASE("text form") {
  CHECK(to_string(T({"1", "x1", "x1*x2"})) == "[1; x1; x1*x2]");
  CHECK(to_string(Tableau::identity(2)) == "[0; 0]");
}

}  // TEST_SUITE
