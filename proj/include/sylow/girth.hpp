#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "sylow/bases.hpp"

// Girth of Cay(P_n(2), D) for diagonal bases D, decided by staged word
// search: a commuting generator pair gives a 4-cycle; otherwise a vanishing
// cyclically reduced length-6 word gives a 6-cycle; otherwise the universal
// relation (D_1 D_2)^4 = 0 caps the girth at 8.

namespace sylow {

// Witness of the commutation criterion for a pair D_i, D_j (2 <= i < j):
// split [D_j]_j = x_1..x_{j-1} + x_i*g + h with g, h free of x_i and g free
// of the full monomial over x_i; the pair commutes exactly when
// g * [D_i]_i = alpha * (x_1..x_{j-1} / x_i), alpha being the parity bit of
// [D_i]_i's monomial count (even -> 0, odd -> 1).
struct StarWitness {
  unsigned i = 0;
  unsigned j = 0;
  bool alpha = false;
  BoolPoly g;
  BoolPoly h;
};

struct GirthReport {
  int girth = 0;                   // 4, 6 or 8
  std::vector<unsigned> witness;   // cyclically reduced word, product = 0
  std::optional<StarWitness> star; // present exactly when girth = 4, n >= 3
};

// True iff (D_j D_i)^2 = 0; 1 <= i < j <= depth.
bool commutes(const DiagonalBase& base, unsigned i, unsigned j);
bool has_commuting_pair(const DiagonalBase& base);

// First (i, j) in lexicographic order satisfying the criterion; depth >= 3.
std::optional<StarWitness> condition_star(const DiagonalBase& base);

// D_k D_j D_i D_k D_i D_j = 0 for i < j < k.
bool six_cycle_relation(const DiagonalBase& base, unsigned i, unsigned j,
                        unsigned k);

// First cyclically reduced length-6 word (lexicographic order) whose product
// is the identity; scans all of them.
std::optional<std::vector<unsigned>> find_six_cycle(const DiagonalBase& base);

GirthReport girth(const DiagonalBase& base);

// True iff D_k D_j D_1 D_k D_1 D_j != 0 for all 1 < j < k <= depth; expected
// to hold for every diagonal base.
bool d1_six_cycle_free(const DiagonalBase& base);

// Breadth-first expansion of reduced words up to max_depth finds no
// odd-length relation (no edge joins two vertices at equal distance).
bool verify_even_cycles(const DiagonalBase& base, unsigned max_depth = 4);

// --- census -----------------------------------------------------------------

enum class CensusScope { Exhaustive, DeltaOnly, Sample };

struct CensusOptions {
  unsigned n = 3;
  CensusScope scope = CensusScope::Exhaustive;
  unsigned exhaustive_guard = kDefaultExhaustiveGuard;
  std::uint64_t sample_count = 0;  // Sample scope only
  std::uint64_t seed = 1;          // Sample scope only
  unsigned jobs = 0;               // 0 = hardware concurrency
};

struct CensusResult {
  unsigned n = 0;
  CensusScope scope = CensusScope::Exhaustive;
  std::uint64_t total = 0;
  std::uint64_t seed = 0;  // meaningful for the Sample scope only
  std::map<int, std::uint64_t> counts;          // girth -> bases
  std::map<int, DiagonalBase> exemplars;        // girth -> first base seen
};

// Deterministic for fixed options regardless of worker count.
CensusResult classify(const CensusOptions& options);

}  // namespace sylow
