#include <algorithm>
#include <random>

#include "doctest.h"
#include "sylow/girth.hpp"
#include "sylow/text.hpp"

using namespace sylow;

namespace {

DiagonalBase B(std::vector<const char*> coords) {
  std::vector<BoolPoly> parsed;
  for (unsigned i = 0; i < coords.size(); ++i)
    parsed.push_back(parse_poly(coords[i], i));
  return DiagonalBase(static_cast<unsigned>(coords.size()),
                      std::move(parsed));
}

Tableau word_product(const DiagonalBase& base,
                     const std::vector<unsigned>& word) {
  Tableau acc = Tableau::identity(base.depth());
  for (unsigned g : word) acc = acc * base.generator(g);
  return acc;
}

bool cyclically_reduced(const std::vector<unsigned>& word) {
  for (std::size_t t = 0; t < word.size(); ++t)
    if (word[t] == word[(t + 1) % word.size()]) return false;
  return true;
}

}  // namespace

TEST_SUITE("girth") {

TEST_CASE("commutation of generator pairs") {
  const DiagonalBase no4 = B({"1", "x1", "x1*x2"});
  for (unsigned i = 1; i <= 3; ++i)
    for (unsigned j = i + 1; j <= 3; ++j) CHECK_FALSE(commutes(no4, i, j));

  const DiagonalBase with4 = B({"1", "x1+1", "x1*x2"});
  CHECK(commutes(with4, 2, 3));
  CHECK_FALSE(commutes(with4, 1, 2));
  CHECK_FALSE(commutes(with4, 1, 3));

  CHECK_THROWS_AS(commutes(no4, 2, 2), std::out_of_range);
  CHECK_THROWS_AS(commutes(no4, 0, 2), std::out_of_range);
}

TEST_CASE("the first generator never commutes") {
  for (unsigned n : {2u, 3u, 4u}) {
    const std::uint64_t total = diagonal_base_count(n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const DiagonalBase base = diagonal_base_at(n, idx);
      for (unsigned j = 2; j <= n; ++j) CHECK_FALSE(commutes(base, 1, j));
    }
  }
  std::mt19937_64 rng(41);
  for (unsigned n : {5u, 6u})
    for (int trial = 0; trial < 1000; ++trial) {
      const DiagonalBase base = sample_diagonal(n, rng);
      for (unsigned j = 2; j <= n; ++j) CHECK_FALSE(commutes(base, 1, j));
    }
}

TEST_CASE("commutation criterion fixed examples") {
  CHECK_FALSE(condition_star(B({"1", "x1", "x1*x2"})).has_value());
  const auto witness = condition_star(B({"1", "x1+1", "x1*x2"}));
  REQUIRE(witness.has_value());
  CHECK(witness->i == 2);
  CHECK(witness->j == 3);
  CHECK_FALSE(witness->alpha);
  CHECK(witness->g.is_zero());
  CHECK_FALSE(condition_star(base_s()).has_value());
  CHECK_THROWS_AS(condition_star(full_monomial_base(2)), DepthTooSmall);
}

TEST_CASE("criterion witnesses satisfy their identity") {
  for (unsigned n : {3u, 4u}) {
    const std::uint64_t total = diagonal_base_count(n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const DiagonalBase base = diagonal_base_at(n, idx);
      const auto witness = condition_star(base);
      CHECK(witness.has_value() == has_commuting_pair(base));
      if (!witness) continue;
      // rebuild: g * [D_i]_i == alpha * (full monomial / x_i), and the
      // decomposition reassembles [D_j]_j
      const unsigned i = witness->i, j = witness->j;
      const BoolPoly lhs =
          witness->g * base.diagonal(i).with_arity(j - 1);
      BoolPoly rhs(j - 1);
      if (witness->alpha)
        rhs = BoolPoly::from_terms(
            j - 1, {full_monomial_mask(j - 1) & ~(Monomial{1} << (i - 1))});
      CHECK(lhs == rhs);
      CHECK(BoolPoly::full_monomial(j - 1) +
                BoolPoly::variable(j - 1, i) * witness->g + witness->h ==
            base.diagonal(j));
      CHECK(commutes(base, i, j));
    }
  }
}

TEST_CASE("six-cycle relation words") {
  CHECK(six_cycle_relation(base_s(), 2, 4, 5));
  for (unsigned n = 3; n <= 6; ++n) {
    const DiagonalBase base = full_monomial_base(n);
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned j = i + 1; j <= n; ++j)
        for (unsigned k = j + 1; k <= n; ++k)
          CHECK_FALSE(six_cycle_relation(base, i, j, k));
  }
  CHECK_THROWS_AS(six_cycle_relation(base_s(), 4, 2, 5), std::out_of_range);
}

TEST_CASE("six-cycle search") {
  const auto word = find_six_cycle(base_s());
  REQUIRE(word.has_value());
  CHECK(word->size() == 6);
  CHECK(cyclically_reduced(*word));
  CHECK(word_product(base_s(), *word).is_identity());
  std::vector<unsigned> sorted(*word);
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<unsigned>{2, 2, 4, 4, 5, 5});

  for (const DiagonalBase& base : enumerate_diagonal(3))
    if (!has_commuting_pair(base))
      CHECK_FALSE(find_six_cycle(base).has_value());
  CHECK_FALSE(find_six_cycle(full_monomial_base(4)).has_value());
}

TEST_CASE("six-cycle search returns the lexicographically first word") {
  // brute enumeration of every cyclically reduced length-6 word
  const DiagonalBase s = base_s();
  std::vector<std::vector<unsigned>> zero_words;
  std::vector<unsigned> word(6);
  for (word[0] = 1; word[0] <= 5; ++word[0])
    for (word[1] = 1; word[1] <= 5; ++word[1])
      for (word[2] = 1; word[2] <= 5; ++word[2])
        for (word[3] = 1; word[3] <= 5; ++word[3])
          for (word[4] = 1; word[4] <= 5; ++word[4])
            for (word[5] = 1; word[5] <= 5; ++word[5]) {
              if (!cyclically_reduced(word)) continue;
              if (word_product(s, word).is_identity())
                zero_words.push_back(word);
            }
  REQUIRE_FALSE(zero_words.empty());
  const auto first = *std::min_element(zero_words.begin(), zero_words.end());
  CHECK(find_six_cycle(s) == first);
}

TEST_CASE("staged girth fixed values") {
  for (const DiagonalBase& base : enumerate_diagonal(2))
    CHECK(girth(base).girth == 8);
  CHECK(girth(base_s()).girth == 6);
  CHECK(girth(B({"1", "x1+1", "x1*x2"})).girth == 4);
  CHECK_THROWS_AS(girth(DiagonalBase(1, {BoolPoly::one(0)})), DepthTooSmall);
}

TEST_CASE("girth witnesses are sound") {
  auto check_report = [](const DiagonalBase& base) {
    const GirthReport report = girth(base);
    CHECK(report.witness.size() == static_cast<std::size_t>(report.girth));
    CHECK(cyclically_reduced(report.witness));
    CHECK(word_product(base, report.witness).is_identity());
    if (base.depth() >= 3)
      CHECK(report.star.has_value() == (report.girth == 4));
  };
  for (const DiagonalBase& base : enumerate_diagonal(3)) check_report(base);
  check_report(base_s());
  check_report(full_monomial_base(5));
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial)
    check_report(sample_diagonal(5, rng));
}

TEST_CASE("vanishing short patterns force a commuting pair") {
  // of the five length-6 shapes over i < j < k, all but (k,j,i,k,i,j)
  // imply a 4-cycle
  for (unsigned n : {3u, 4u}) {
    const std::uint64_t total = diagonal_base_count(n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const DiagonalBase base = diagonal_base_at(n, idx);
      const bool pair = has_commuting_pair(base);
      for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j)
          for (unsigned k = j + 1; k <= n; ++k) {
            const std::vector<std::vector<unsigned>> shapes = {
                {k, j, i, k, j, i},
                {k, i, j, k, i, j},
                {k, j, i, j, k, i},
                {k, j, k, i, j, i},
            };
            for (const auto& w : shapes)
              if (word_product(base, w).is_identity()) CHECK(pair);
          }
    }
  }
}

TEST_CASE("no six-cycle word through the first generator") {
  for (unsigned n : {3u, 4u}) {
    const std::uint64_t total = diagonal_base_count(n);
    for (std::uint64_t idx = 0; idx < total; ++idx)
      CHECK(d1_six_cycle_free(diagonal_base_at(n, idx)));
  }
  CHECK(d1_six_cycle_free(base_s()));
}

TEST_CASE("breadth-first parity of relations") {
  for (const DiagonalBase& base : enumerate_diagonal(3))
    CHECK(verify_even_cycles(base, 4));
  CHECK(verify_even_cycles(base_s(), 4));
  for (const DiagonalBase& base : enumerate_diagonal(2))
    CHECK(verify_even_cycles(base, 4));
}

TEST_CASE("census of girths") {
  CensusOptions options;
  options.n = 2;
  CensusResult census = classify(options);
  CHECK(census.total == 2);
  CHECK(census.counts == std::map<int, std::uint64_t>{{8, 2}});

  options.n = 3;
  census = classify(options);
  CHECK(census.total == 16);
  CHECK(census.counts == std::map<int, std::uint64_t>{{4, 8}, {8, 8}});
  CHECK(census.exemplars.count(4) == 1);
  CHECK(girth(census.exemplars.at(4)).girth == 4);

  options.n = 4;
  census = classify(options);
  CHECK(census.total == 2048);
  CHECK(census.counts.count(6) == 0);
  CHECK(census.counts.at(4) + census.counts.at(8) == 2048);

  options.n = 5;
  CHECK_THROWS_AS(classify(options), GuardViolation);
}

TEST_CASE("census is independent of the worker count") {
  CensusOptions serial;
  serial.n = 4;
  serial.jobs = 1;
  CensusOptions parallel = serial;
  parallel.jobs = 4;
  const CensusResult a = classify(serial);
  const CensusResult b = classify(parallel);
  CHECK(a.counts == b.counts);
  REQUIRE(a.exemplars.size() == b.exemplars.size());
  for (const auto& [g, base] : a.exemplars) CHECK(b.exemplars.at(g) == base);
}

TEST_CASE("delta-only and sampled censuses") {
  CensusOptions options;
  options.n = 5;
  options.scope = CensusScope::DeltaOnly;
  const CensusResult census = classify(options);
  CHECK(census.total == 8);
  CHECK(census.counts == std::map<int, std::uint64_t>{{4, 7}, {8, 1}});

  CensusOptions sample;
  sample.n = 5;
  sample.scope = CensusScope::Sample;
  sample.sample_count = 64;
  sample.seed = 5;
  const CensusResult first = classify(sample);
  const CensusResult second = classify(sample);
  CHECK(first.counts == second.counts);
  std::uint64_t total = 0;
  for (const auto& [g, c] : first.counts) {
    CHECK((g == 4 || g == 6 || g == 8));
    total += c;
  }
  CHECK(total == 64);

  // depths past the 64-bit index space go through the direct sampler
  CensusOptions deep;
  deep.n = 7;
  deep.scope = CensusScope::Sample;
  deep.sample_count = 4;
  deep.seed = 3;
  std::uint64_t deep_total = 0;
  for (const auto& [g, c] : classify(deep).counts) deep_total += c;
  CHECK(deep_total == 4);
}

TEST_CASE("girth six survives extension to depth 7") {
  DiagonalBase grown = base_s();
  grown = extend_no4cycle(extend_no4cycle(grown));
  CHECK(grown.depth() == 7);
  const GirthReport report = girth(grown);
  CHECK(report.girth == 6);
  CHECK(word_product(grown, report.witness).is_identity());
  CHECK(verify_even_cycles(grown, 3));
}

}  // TEST_SUITE
