#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "sylow/graph.hpp"
#include "sylow/report.hpp"
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

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "sylow-tests";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("explicit graphs at small depth") {
  for (const DiagonalBase& base : enumerate_diagonal(2)) {
    const CayleyGraph graph(base);
    CHECK(graph.vertex_count() == 8);
    CHECK(graph.degree() == 2);
    CHECK(graph_girth(graph) == 8);  // an 8-cycle
  }
  const CayleyGraph graph(B({"1", "x1", "x1*x2"}));
  CHECK(graph.vertex_count() == 128);
  CHECK(graph.degree() == 3);
  // identity neighbors are exactly the generators
  for (unsigned g = 1; g <= 3; ++g)
    CHECK(graph.vertex(graph.neighbor(0, g)) == graph.base().generator(g));
  CHECK_THROWS_AS(CayleyGraph(full_monomial_base(5)), GuardViolation);
}

TEST_CASE("regularity and neighbor symmetry") {
  for (unsigned n : {2u, 3u}) {
    for (const DiagonalBase& base : enumerate_diagonal(n)) {
      const CayleyGraph graph(base);
      for (std::uint32_t v = 0; v < graph.vertex_count(); ++v)
        for (unsigned g = 1; g <= n; ++g) {
          const std::uint32_t w = graph.neighbor(v, g);
          CHECK(w != v);
          CHECK(graph.neighbor(w, g) == v);  // involution edges
          for (unsigned h = g + 1; h <= n; ++h)
            CHECK(graph.neighbor(v, h) != w);
        }
    }
  }
}

TEST_CASE("BFS girth fixed examples") {
  CHECK(graph_girth(CayleyGraph(B({"1", "x1+1", "x1*x2"}))) == 4);
  CHECK(graph_girth(CayleyGraph(B({"1", "x1", "x1*x2"}))) == 8);
}

TEST_CASE("BFS girth agrees with the staged search") {
  for (const DiagonalBase& base : enumerate_diagonal(3))
    CHECK(graph_girth(CayleyGraph(base)) == girth(base).girth);
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    const DiagonalBase base =
        diagonal_base_at(4, rng() % diagonal_base_count(4));
    CHECK(graph_girth(CayleyGraph(base)) == girth(base).girth);
  }
}

TEST_CASE("vertex indexing round trips") {
  const CayleyGraph graph(B({"1", "x1", "x1*x2"}));
  for (std::uint32_t v = 0; v < graph.vertex_count(); v += 7)
    CHECK(graph.index_of(graph.vertex(v)) == v);
}

TEST_CASE("packed adjacency equals the generic product") {
  std::mt19937_64 rng(53);
  for (unsigned n : {3u, 4u}) {
    const DiagonalBase base =
        diagonal_base_at(n, rng() % diagonal_base_count(n));
    const CayleyGraph graph(base);
    for (int trial = 0; trial < 200; ++trial) {
      const std::uint32_t v =
          static_cast<std::uint32_t>(rng() % graph.vertex_count());
      const Tableau f = graph.vertex(v);
      for (unsigned g = 1; g <= n; ++g)
        CHECK(graph.neighbor(v, g) == graph.index_of(f * base.generator(g)));
    }
  }
}

TEST_CASE("balls around the identity") {
  const DiagonalBase zero_delta = full_monomial_base(5);
  const Tableau center = Tableau::identity(5);
  {
    const Ball b = ball(zero_delta, center, 0);
    CHECK(b.vertices.size() == 1);
    CHECK(b.edges.empty());
  }
  {
    // no generator product is another generator: radius 1 is a bare star
    const Ball b = ball(zero_delta, center, 1);
    CHECK(b.vertices.size() == 6);
    CHECK(b.edges.size() == 5);
    for (const auto& [u, v] : b.edges) CHECK(u == 0);
  }
  CHECK_THROWS_AS(ball(zero_delta, center, 4), GuardViolation);
}

TEST_CASE("balls at depth 7 use multi-word vertex keys") {
  // no commuting pair anywhere, so the radius-2 ball is a tree:
  // 1 + 7 + 7*6 vertices
  const DiagonalBase grown = extend_no4cycle(extend_no4cycle(base_s()));
  const Ball b = ball(grown, Tableau::identity(7), 2);
  CHECK(b.vertices.size() == 50);
  CHECK(b.edges.size() == 49);
  CHECK(center_edge_four_cycle_counts(b) == std::vector<unsigned>(7, 0));
}

TEST_CASE("radius-2 balls of the two depth-5 delta bases") {
  const DiagonalBase d = delta_base(5, 0b100);
  const DiagonalBase d_prime = delta_base(5, 0b011);
  const Tableau center = Tableau::identity(5);
  const Ball ball_d = ball(d, center, 2);
  const Ball ball_dp = ball(d_prime, center, 2);

  // 1 + 5 + (20 - 3 merged by the commuting pairs)
  CHECK(ball_d.vertices.size() == 23);
  CHECK(ball_dp.vertices.size() == 23);
  CHECK(ball_d.edges.size() == ball_dp.edges.size());

  CHECK(center_edge_four_cycle_counts(ball_d) ==
        std::vector<unsigned>{0, 1, 1, 1, 3});
  CHECK(center_edge_four_cycle_counts(ball_dp) ==
        std::vector<unsigned>{0, 0, 2, 2, 2});
}

TEST_CASE("4-cycle counts through a vertex") {
  CHECK(four_cycles_through(full_monomial_base(5), Tableau::identity(5)) == 0);
  CHECK(four_cycles_through(delta_base(5, 0b100), Tableau::identity(5)) == 3);
  CHECK(four_cycles_through(delta_base(5, 0b011), Tableau::identity(5)) == 3);

  // independent of the vertex
  std::mt19937_64 rng(52);
  const DiagonalBase base = delta_base(5, 0b101);
  const std::uint64_t at_identity =
      four_cycles_through(base, Tableau::identity(5));
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<BoolPoly> coords;
    for (unsigned i = 0; i < 5; ++i) {
      TruthTable t(i);
      for (std::size_t w = 0; w < t.word_count(); ++w) t.words()[w] = rng();
      if (i < 6) t.words()[0] &= (std::uint64_t{1} << (1u << i)) - 1;
      coords.push_back(from_truth_table(t));
    }
    CHECK(four_cycles_through(base, Tableau(std::move(coords))) ==
          at_identity);
  }
}

TEST_CASE("commuting pair counts and the delta closed form") {
  for (unsigned n = 3; n <= 10; ++n)
    for (std::uint32_t bits = 0; bits < (1u << (n - 2)); ++bits) {
      CharacteristicVector a;
      a.depth = n;
      for (unsigned t = 0; t < n - 2; ++t)
        a.bits.push_back((bits >> (n - 3 - t)) & 1u);
      CHECK(commuting_pair_count(delta_base(a)) == delta_count_formula(a));
    }
  // the two depth-5 examples
  CHECK(delta_count_formula(CharacteristicVector::parse(5, "100")) == 3);
  CHECK(delta_count_formula(CharacteristicVector::parse(5, "011")) == 3);
  CHECK(delta_count_formula(CharacteristicVector::parse(5, "000")) == 0);
}

TEST_CASE("commuting degree profiles") {
  CHECK(commuting_degree_profile(delta_base(5, 0b100)).profile ==
        std::vector<unsigned>{0, 1, 1, 1, 3});
  CHECK(commuting_degree_profile(delta_base(5, 0b011)).profile ==
        std::vector<unsigned>{0, 0, 2, 2, 2});
  CHECK(commuting_degree_profile(full_monomial_base(6)).profile ==
        std::vector<unsigned>(6, 0));
  const DeltaInvariant inv = commuting_degree_profile(delta_base(6, 0b1010));
  std::uint64_t sum = 0;
  for (unsigned d : inv.profile) sum += d;
  CHECK(sum == 2 * inv.pair_count);
}

TEST_CASE("DOT export is byte-stable") {
  const auto dir = scratch_dir();
  const DiagonalBase base = B({"1", "x1"});
  export_dot(CayleyGraph(base), dir / "c8_a.dot");
  export_dot(CayleyGraph(base), dir / "c8_b.dot");
  const std::string a = slurp(dir / "c8_a.dot");
  CHECK(a == slurp(dir / "c8_b.dot"));
  // 8 nodes, 8 edges
  std::size_t nodes = 0, edges = 0, pos = 0;
  std::istringstream lines(a);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find("[label=") != std::string::npos) ++nodes;
    if (line.find(" -- ") != std::string::npos) ++edges;
  }
  (void)pos;
  CHECK(nodes == 8);
  CHECK(edges == 8);

  const Ball b = ball(base, Tableau::identity(2), 0);
  export_dot(b, dir / "point.dot");
  const std::string point = slurp(dir / "point.dot");
  CHECK(point.find("v0") != std::string::npos);
  CHECK(point.find(" -- ") == std::string::npos);
}

TEST_CASE("JSON report schema") {
  const BaseReport report = analyze_base(base_s());
  const std::string json = to_json(report);
  CHECK(json.find("\"schema\": 1") != std::string::npos);
  CHECK(json.find("\"girth\": 6") != std::string::npos);
  CHECK(json.find("\"c_D\": 0") != std::string::npos);
  CHECK(json.find("\"star\": null") != std::string::npos);
  CHECK(json.find("\"timings\"") == std::string::npos);
  CHECK(to_json(report, true).find("\"timings\"") != std::string::npos);

  const BaseReport four = analyze_base(B({"1", "x1+1", "x1*x2"}));
  const std::string four_json = to_json(four);
  CHECK(four_json.find("\"girth\": 4") != std::string::npos);
  CHECK(four_json.find("\"i\": 2") != std::string::npos);

  const auto dir = scratch_dir();
  export_json(report, dir / "s5.json");
  CHECK(slurp(dir / "s5.json") == json);
}

TEST_CASE("report base strings re-parse to the same base") {
  const DiagonalBase original = base_s();
  const auto doc = nlohmann::json::parse(to_json(analyze_base(original)));
  REQUIRE(doc.at("n").get<unsigned>() == original.depth());
  std::vector<BoolPoly> reparsed;
  unsigned arity = 0;
  for (const auto& text : doc.at("base"))
    reparsed.push_back(parse_poly(text.get<std::string>(), arity++));
  CHECK(DiagonalBase(original.depth(), std::move(reparsed)) == original);
}

}  // TEST_SUITE
