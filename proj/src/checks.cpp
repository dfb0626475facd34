#include "sylow/checks.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "sylow/graph.hpp"
#include "sylow/report.hpp"

namespace sylow {

namespace {

class CheckFailure : public Error {
 public:
  using Error::Error;
};

void require(bool condition, const std::string& what) {
  if (!condition) throw CheckFailure(what);
}

std::string join_counts(const CensusResult& census) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, c] : census.counts) {
    if (!first) out << ", ";
    out << c << " of girth " << g;
    first = false;
  }
  return out.str();
}

Tableau random_tableau(unsigned depth, std::mt19937_64& rng) {
  std::vector<BoolPoly> coords;
  coords.reserve(depth);
  for (unsigned i = 0; i < depth; ++i) {
    TruthTable t(i);
    for (std::size_t w = 0; w < t.word_count(); ++w) t.words()[w] = rng();
    if (i < 6) t.words()[0] &= (std::uint64_t{1} << (1u << i)) - 1;
    coords.push_back(from_truth_table(t));
  }
  return Tableau(std::move(coords));
}

// Deterministic distinct sample of `count` values from [0, limit).
std::vector<std::uint64_t> sample_indices(std::uint64_t limit,
                                          std::size_t count,
                                          std::uint64_t seed) {
  std::vector<std::uint64_t> all(limit);
  for (std::uint64_t i = 0; i < limit; ++i) all[i] = i;
  std::vector<std::uint64_t> picked;
  std::mt19937_64 rng(seed);
  std::sample(all.begin(), all.end(), std::back_inserter(picked), count, rng);
  return picked;
}

// --- the checks -------------------------------------------------------------

std::string check_c8_base_case(const CheckOptions&) {
  const auto bases = enumerate_diagonal(2);
  require(bases.size() == 2, "expected exactly 2 diagonal bases at depth 2");
  for (const DiagonalBase& base : bases) {
    CayleyGraph graph(base);
    require(graph.vertex_count() == 8, "P_2(2) must have 8 elements");
    for (std::uint32_t v = 0; v < 8; ++v)
      require(graph.neighbor(v, 1) != graph.neighbor(v, 2),
              "vertex with coinciding neighbors");
    require(graph_girth(graph) == 8, "BFS girth from C_8 is not 8");
    require(girth(base).girth == 8, "staged girth at depth 2 is not 8");
  }
  return "both depth-2 bases give an 8-vertex 2-regular graph of girth 8";
}

std::string check_girth4_criterion(const CheckOptions&) {
  std::ostringstream details;
  for (unsigned n : {3u, 4u}) {
    std::uint64_t four = 0;
    const std::uint64_t total = diagonal_base_count(n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const DiagonalBase base = diagonal_base_at(n, idx);
      const bool witness = condition_star(base).has_value();
      const bool pair = has_commuting_pair(base);
      const bool four_cycle = girth(base).girth == 4;
      require(witness == pair,
              "criterion witness disagrees with the pair scan at depth " +
                  std::to_string(n) + ", index " + std::to_string(idx));
      require(pair == four_cycle,
              "commuting pair disagrees with staged girth at depth " +
                  std::to_string(n) + ", index " + std::to_string(idx));
      if (four_cycle) ++four;
    }
    details << (n == 3 ? "" : "; ") << "n=" << n << ": " << four << "/"
            << total << " with girth 4";
  }
  return details.str();
}

std::string check_girth6_boundary(const CheckOptions& options) {
  std::ostringstream details;
  for (unsigned n : {3u, 4u}) {
    CensusOptions census_options;
    census_options.n = n;
    census_options.jobs = options.jobs;
    const CensusResult census = classify(census_options);
    require(census.counts.count(6) == 0,
            "a girth-6 base exists at depth " + std::to_string(n));
    details << "n=" << n << ": " << join_counts(census) << "; ";
  }
  const DiagonalBase s = base_s();
  require(!has_commuting_pair(s), "S has a commuting pair");
  require(six_cycle_relation(s, 2, 4, 5),
          "S_5 S_4 S_2 S_5 S_2 S_4 is not the identity");
  require(girth(s).girth == 6, "girth of Cay(P_5(2), S) is not 6");
  details << "S at n=5 has girth 6";
  return details.str();
}

std::string check_full_monomial_girth8(const CheckOptions&) {
  for (unsigned n = 2; n <= 6; ++n) {
    const DiagonalBase base = full_monomial_base(n);
    require(girth(base).girth == 8,
            "full-monomial base at depth " + std::to_string(n) +
                " does not have girth 8");
    if (n <= CayleyGraph::kMaxDepth)
      require(graph_girth(CayleyGraph(base)) == 8,
              "BFS girth disagrees at depth " + std::to_string(n));
  }
  return "full-monomial bases have girth 8 for n = 2..6 (BFS-checked to 4)";
}

std::string check_extension(const CheckOptions&) {
  std::uint64_t extended3 = 0;
  for (const DiagonalBase& base : enumerate_diagonal(3)) {
    if (has_commuting_pair(base)) continue;
    require(!has_commuting_pair(extend_no4cycle(base)),
            "depth-3 extension grew a commuting pair");
    ++extended3;
  }
  require(extended3 > 0, "no commuting-pair-free base at depth 3");

  std::vector<std::uint64_t> free4;
  const std::uint64_t total4 = diagonal_base_count(4);
  for (std::uint64_t idx = 0; idx < total4; ++idx)
    if (!has_commuting_pair(diagonal_base_at(4, idx))) free4.push_back(idx);
  std::mt19937_64 rng(2024);
  std::vector<std::uint64_t> picked;
  std::sample(free4.begin(), free4.end(), std::back_inserter(picked), 100,
              rng);
  require(picked.size() == 100, "fewer than 100 commuting-pair-free bases "
                                "at depth 4");
  for (std::uint64_t idx : picked)
    require(!has_commuting_pair(extend_no4cycle(diagonal_base_at(4, idx))),
            "depth-4 extension grew a commuting pair (index " +
                std::to_string(idx) + ")");

  DiagonalBase grown = base_s();
  for (unsigned target = 6; target <= 7; ++target) {
    grown = extend_no4cycle(grown);
    require(grown.depth() == target, "extension depth bookkeeping is off");
    require(girth(grown).girth == 6,
            "extension of S to depth " + std::to_string(target) +
                " does not keep girth 6");
  }
  std::ostringstream details;
  details << extended3 << " depth-3 bases and 100 sampled depth-4 bases "
          << "extend without commuting pairs; S keeps girth 6 up to n=7";
  return details.str();
}

std::string check_lemma_c6(const CheckOptions&) {
  for (unsigned n : {3u, 4u}) {
    const std::uint64_t total = diagonal_base_count(n);
    for (std::uint64_t idx = 0; idx < total; ++idx)
      require(d1_six_cycle_free(diagonal_base_at(n, idx)),
              "six-cycle through D_1 at depth " + std::to_string(n) +
                  ", index " + std::to_string(idx));
  }
  std::mt19937_64 rng(99);
  for (unsigned trial = 0; trial < 1000; ++trial)
    require(d1_six_cycle_free(sample_diagonal(5, rng)),
            "six-cycle through D_1 in a random depth-5 base");
  return "no D_1 six-cycle word vanishes: 16 + 2048 exhaustive, 1000 random "
         "at n=5";
}

std::string check_delta_invariants(const CheckOptions&) {
  std::uint64_t bases_checked = 0;
  for (unsigned n = 3; n <= 10; ++n) {
    std::set<std::pair<std::uint64_t, std::vector<unsigned>>> classes;
    const std::uint32_t vectors = std::uint32_t{1} << (n - 2);
    for (std::uint32_t bits = 0; bits < vectors; ++bits) {
      CharacteristicVector a;
      a.depth = n;
      for (unsigned t = 0; t < n - 2; ++t)
        a.bits.push_back((bits >> (n - 3 - t)) & 1u);
      const DiagonalBase base = delta_base(a);
      const DeltaInvariant inv = commuting_degree_profile(base);
      require(inv.pair_count == delta_count_formula(a),
              "pair count != closed form at n=" + std::to_string(n) +
                  ", vector " + a.to_string());
      require(inv.pair_count == commuting_pair_count(base),
              "profile sum / 2 != brute pair count");
      classes.emplace(inv.pair_count, inv.profile);
      ++bases_checked;
    }
    require(classes.size() == vectors,
            "invariant collision among delta bases at n=" + std::to_string(n));
  }
  return std::to_string(bases_checked) +
         " delta bases match the closed form; invariants pairwise distinct "
         "for n = 3..10";
}

std::string check_ball_separation(const CheckOptions& options) {
  const DiagonalBase d = delta_base(5, 0b100);
  const DiagonalBase d_prime = delta_base(5, 0b011);
  const DeltaInvariant inv_d = commuting_degree_profile(d);
  const DeltaInvariant inv_dp = commuting_degree_profile(d_prime);
  require(inv_d.pair_count == 3 && inv_dp.pair_count == 3,
          "both characteristic vectors must give exactly 3 commuting pairs");
  require(inv_d.profile == std::vector<unsigned>({0, 1, 1, 1, 3}),
          "profile of [1,0,0] is not [0,1,1,1,3]");
  require(inv_dp.profile == std::vector<unsigned>({0, 0, 2, 2, 2}),
          "profile of [0,1,1] is not [0,0,2,2,2]");

  const Tableau center = Tableau::identity(5);
  require(four_cycles_through(d, center) == 3 &&
              four_cycles_through(d_prime, center) == 3,
          "4-cycle count through a vertex is not 3");

  const Ball ball_d = ball(d, center, 2);
  const Ball ball_dp = ball(d_prime, center, 2);
  export_dot(ball_d, options.scratch_dir / "ball_delta100_r2.dot");
  export_dot(ball_dp, options.scratch_dir / "ball_delta011_r2.dot");

  const auto stats_d = center_edge_four_cycle_counts(ball_d);
  const auto stats_dp = center_edge_four_cycle_counts(ball_dp);
  require(stats_d != stats_dp,
          "radius-2 balls have identical per-edge 4-cycle statistics");
  require(std::vector<unsigned>(stats_d.begin(), stats_d.end()) ==
              std::vector<unsigned>({0, 1, 1, 1, 3}),
          "ball edge statistics disagree with the commuting profile");
  std::ostringstream details;
  details << "balls: " << ball_d.vertices.size() << "/"
          << ball_dp.vertices.size() << " vertices, " << ball_d.edges.size()
          << "/" << ball_dp.edges.size() << " edges, per-edge 4-cycle stats "
          << "{0,1,1,1,3} vs {0,0,2,2,2}";
  return details.str();
}

std::string check_oracle_equivalence(const CheckOptions&) {
  for (unsigned n : {1u, 2u, 3u}) {
    const std::uint64_t order = std::uint64_t{1} << ((1u << n) - 1);
    std::vector<Tableau> all;
    all.reserve(order);
    for (std::uint64_t idx = 0; idx < order; ++idx)
      all.push_back(tableau_at(n, idx));
    for (const Tableau& f : all) {
      const LeafPermutation pf = leaf_permutation(f);
      for (const Tableau& g : all)
        require(leaf_permutation(f * g) == compose(pf, leaf_permutation(g)),
                "product/permutation mismatch at depth " + std::to_string(n));
    }
  }
  std::mt19937_64 rng(7);
  for (unsigned trial = 0; trial < 10000; ++trial) {
    const Tableau f = random_tableau(6, rng);
    const Tableau g = random_tableau(6, rng);
    require(leaf_permutation(f * g) ==
                compose(leaf_permutation(f), leaf_permutation(g)),
            "product/permutation mismatch at depth 6");
  }

  for (const DiagonalBase& base : enumerate_diagonal(3))
    require(girth(base).girth == graph_girth(CayleyGraph(base)),
            "staged girth disagrees with BFS girth at depth 3");
  for (std::uint64_t idx : sample_indices(diagonal_base_count(4), 200, 41)) {
    const DiagonalBase base = diagonal_base_at(4, idx);
    require(girth(base).girth == graph_girth(CayleyGraph(base)),
            "staged girth disagrees with BFS girth at depth 4, index " +
                std::to_string(idx));
  }
  return "multiplication matches leaf-action composition (all pairs n<=3, "
         "10^4 random at n=6); staged girth matches BFS girth (16 + 200 "
         "bases)";
}

std::string check_even_cycle_parity(const CheckOptions&) {
  std::uint64_t bases_checked = 0;
  for (unsigned n : {2u, 3u, 4u}) {
    const std::uint64_t total = diagonal_base_count(n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      require(verify_even_cycles(diagonal_base_at(n, idx), 4),
              "odd relation at depth " + std::to_string(n) + ", index " +
                  std::to_string(idx));
      ++bases_checked;
    }
  }
  return std::to_string(bases_checked) +
         " bases expand to depth 4 without an odd-length relation";
}

struct CheckSpec {
  const char* name;
  double budget_seconds;
  std::string (*run)(const CheckOptions&);
};

constexpr CheckSpec kChecks[] = {
    {"c8-base-case", 1.0, check_c8_base_case},
    {"girth4-criterion", 10.0, check_girth4_criterion},
    {"girth6-boundary", 30.0, check_girth6_boundary},
    {"full-monomial-girth8", 0.0, check_full_monomial_girth8},
    {"extension-no4cycle", 0.0, check_extension},
    {"lemma-c6", 0.0, check_lemma_c6},
    {"delta-invariants", 10.0, check_delta_invariants},
    {"ball-separation", 0.0, check_ball_separation},
    {"oracle-equivalence", 0.0, check_oracle_equivalence},
    {"even-cycle-parity", 0.0, check_even_cycle_parity},
};

}  // namespace

std::vector<std::string> verification_check_names() {
  std::vector<std::string> names;
  for (const CheckSpec& spec : kChecks) names.emplace_back(spec.name);
  return names;
}

std::vector<CheckResult> run_verification_suite(const CheckOptions& options) {
  CheckOptions effective = options;
  if (effective.scratch_dir.empty())
    effective.scratch_dir =
        std::filesystem::temp_directory_path() / "sylow-verify";
  std::filesystem::create_directories(effective.scratch_dir);

  std::vector<CheckResult> results;
  for (const CheckSpec& spec : kChecks) {
    if (!options.filter.empty() &&
        std::string(spec.name).find(options.filter) == std::string::npos)
      continue;
    CheckResult result;
    result.name = spec.name;
    result.budget_seconds = spec.budget_seconds;
    const auto start = std::chrono::steady_clock::now();
    try {
      result.details = spec.run(effective);
      result.pass = true;
    } catch (const std::exception& e) {
      result.pass = false;
      result.details = e.what();
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (result.pass && result.budget_seconds > 0.0 &&
        result.seconds > result.budget_seconds) {
      result.pass = false;
      result.details += " [exceeded " + std::to_string(spec.budget_seconds) +
                        "s budget]";
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace sylow
