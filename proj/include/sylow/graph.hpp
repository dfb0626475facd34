#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "sylow/girth.hpp"

// Explicit Cayley graphs Cay(P_n(2), D) at small depth, balls B(v, r) at any
// depth, and the commuting-pair invariants that separate delta bases.

namespace sylow {

class CayleyGraph {
 public:
  static constexpr unsigned kMaxDepth = 4;  // 2^15 vertices

  // Throws GuardViolation above kMaxDepth.
  explicit CayleyGraph(const DiagonalBase& base);

  const DiagonalBase& base() const { return base_; }
  unsigned depth() const { return base_.depth(); }
  std::uint32_t vertex_count() const {
    return std::uint32_t{1} << ((1u << depth()) - 1);
  }
  unsigned degree() const { return depth(); }

  // Neighbor along generator g (1-based).
  std::uint32_t neighbor(std::uint32_t vertex, unsigned g) const {
    return adjacency_[std::size_t{vertex} * depth() + (g - 1)];
  }

  // Vertex indexing: the packed coordinate bits of the tableau read as an
  // integer; index 0 is the identity.
  Tableau vertex(std::uint32_t index) const;
  std::uint32_t index_of(const Tableau& f) const;

 private:
  DiagonalBase base_;
  std::vector<std::uint32_t> adjacency_;
};

// Exact girth by breadth-first search from the identity (valid because the
// graph is vertex-transitive); always 4, 6 or 8 for these graphs.
int graph_girth(const CayleyGraph& graph);

struct Ball {
  unsigned radius = 0;
  std::vector<Tableau> vertices;                        // [0] is the center
  std::vector<unsigned> distance;                       // per vertex
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // u < v

  const Tableau& center() const { return vertices.front(); }
};

// Induced subgraph on all vertices within the radius, discovered by word
// expansion; the full graph is never built, so any depth works.  Radius is
// capped at 3 for depth >= 5.
Ball ball(const DiagonalBase& base, const Tableau& center, unsigned radius);

// Number of distinct 4-cycles containing the vertex; equals the commuting
// pair count of the base and is independent of the chosen vertex.
std::uint64_t four_cycles_through(const DiagonalBase& base,
                                  const Tableau& vertex);

// c_D by brute force over generator pairs.
std::uint64_t commuting_pair_count(const DiagonalBase& base);

// Closed form for delta bases: sum over i of a_i * (n - i).
std::uint64_t delta_count_formula(const CharacteristicVector& a);

// Pair count plus the sorted per-generator commuting degrees; together these
// distinguish the Cayley graphs of any two distinct delta bases.
struct DeltaInvariant {
  std::uint64_t pair_count = 0;
  std::vector<unsigned> profile;  // ascending
};
DeltaInvariant commuting_degree_profile(const DiagonalBase& base);

// Sorted per-center-edge counts of 4-cycles inside a radius-2 ball; the
// graph-side realization of the commuting-degree profile.
std::vector<unsigned> center_edge_four_cycle_counts(const Ball& b);

// DOT output, undirected, vertices labeled with tableau text.  Writes are
// atomic (temp file + rename) and byte-stable for identical inputs.
void export_dot(const CayleyGraph& graph, const std::filesystem::path& path);
void export_dot(const Ball& b, const std::filesystem::path& path);

// Atomic write helper shared by the exporters and report writers.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& contents);

}  // namespace sylow
