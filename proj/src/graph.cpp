#include "sylow/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "sylow/text.hpp"

namespace sylow {

namespace {

std::uint32_t key_to_index(const std::vector<std::uint64_t>& key) {
  return static_cast<std::uint32_t>(key[0]);
}

}  // namespace

CayleyGraph::CayleyGraph(const DiagonalBase& base) : base_(base) {
  if (base.depth() > kMaxDepth)
    throw GuardViolation("explicit Cayley graph capped at depth " +
                         std::to_string(kMaxDepth) + " (got " +
                         std::to_string(base.depth()) + ")");
  const unsigned n = depth();
  const std::uint32_t count = vertex_count();
  adjacency_.resize(std::size_t{count} * n);

  // Right-multiplying by the diagonal generator D_g rewrites only the
  // coordinate-g bits of the packed index:
  //   [f D_g]_g (v) = f_g(v) + d_g(image of v under f's depth-(g-1) prefix),
  // so each neighbor is an XOR with a gathered copy of d_g's truth table.
  std::uint32_t diag_tt[kMaxDepth] = {0, 0, 0, 0};
  unsigned offset[kMaxDepth] = {0, 0, 0, 0};
  for (unsigned g = 1; g <= n; ++g) {
    const TruthTable t = to_truth_table(base.diagonal(g));
    for (std::uint32_t p = 0; p < (1u << (g - 1)); ++p)
      if (t.test(p)) diag_tt[g - 1] |= 1u << p;
    if (g < n) offset[g] = offset[g - 1] + (1u << (g - 1));
  }

  for (std::uint32_t v = 0; v < count; ++v) {
    std::uint32_t coord[kMaxDepth];
    for (unsigned i = 1; i <= n; ++i)
      coord[i - 1] = (v >> offset[i - 1]) & ((1u << (1u << (i - 1))) - 1u);
    // leaf map of the growing prefix, extended one level per generator
    std::uint8_t prefix_map[1u << (kMaxDepth - 1)];
    prefix_map[0] = 0;
    for (unsigned g = 1; g <= n; ++g) {
      const std::uint32_t points = 1u << (g - 1);
      std::uint32_t gathered = 0;
      for (std::uint32_t p = 0; p < points; ++p)
        gathered |= ((diag_tt[g - 1] >> prefix_map[p]) & 1u) << p;
      adjacency_[std::size_t{v} * n + (g - 1)] =
          v ^ (gathered << offset[g - 1]);
      if (g < n) {
        for (std::uint32_t p = 0; p < points; ++p) {
          const std::uint8_t low = prefix_map[p];
          const std::uint8_t bit = (coord[g - 1] >> p) & 1u;
          prefix_map[p] = low | (bit << (g - 1));
          prefix_map[p | points] = low | ((1u ^ bit) << (g - 1));
        }
      }
    }
  }
}

Tableau CayleyGraph::vertex(std::uint32_t index) const {
  return tableau_at(depth(), index);
}

std::uint32_t CayleyGraph::index_of(const Tableau& f) const {
  return key_to_index(packed_key(f));
}

int graph_girth(const CayleyGraph& graph) {
  const std::uint32_t count = graph.vertex_count();
  const unsigned degree = graph.degree();
  constexpr std::uint32_t kUnseen = ~std::uint32_t{0};
  std::vector<std::uint32_t> dist(count, kUnseen);
  std::vector<unsigned> parent_gen(count, 0);
  std::queue<std::uint32_t> queue;

  const std::uint32_t root = 0;  // identity
  dist[root] = 0;
  queue.push(root);
  std::uint32_t best = kUnseen;
  while (!queue.empty()) {
    const std::uint32_t u = queue.front();
    queue.pop();
    // Any bound found from here on is at least 2*dist[u].
    if (2 * std::uint64_t{dist[u]} >= best) break;
    for (unsigned g = 1; g <= degree; ++g) {
      if (g == parent_gen[u]) continue;  // the tree edge back to the parent
      const std::uint32_t v = graph.neighbor(u, g);
      if (dist[v] == kUnseen) {
        dist[v] = dist[u] + 1;
        parent_gen[v] = g;
        queue.push(v);
      } else {
        best = std::min(best, dist[u] + dist[v] + 1);
      }
    }
  }
  if (best == kUnseen)
    throw InternalInconsistency("Cayley graph has no cycle through the root");
  const int g = static_cast<int>(best);
  if (g != 4 && g != 6 && g != 8)
    throw InternalInconsistency("girth " + std::to_string(g) +
                                " outside {4, 6, 8}");
  return g;
}

Ball ball(const DiagonalBase& base, const Tableau& center, unsigned radius) {
  const unsigned n = base.depth();
  if (center.depth() != n)
    throw ArityMismatch("ball center depth differs from the base depth");
  if (n >= 5 && radius > 3)
    throw GuardViolation("ball radius capped at 3 for depth >= 5");
  if (n <= 4 && radius > 16)
    throw GuardViolation("ball radius out of range");

  Ball b;
  b.radius = radius;
  std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, PackedKeyHash>
      index;
  b.vertices.push_back(center);
  b.distance.push_back(0);
  index.emplace(packed_key(center), 0);

  // Word expansion in discovery order keeps the vertex numbering canonical.
  std::size_t cursor = 0;
  while (cursor < b.vertices.size()) {
    const std::uint32_t u = static_cast<std::uint32_t>(cursor);
    const unsigned du = b.distance[u];
    ++cursor;
    if (du == radius) continue;
    for (unsigned g = 1; g <= n; ++g) {
      Tableau v = b.vertices[u] * base.generator(g);
      const bool inserted =
          index
              .emplace(packed_key(v),
                       static_cast<std::uint32_t>(b.vertices.size()))
              .second;
      if (inserted) {
        b.vertices.push_back(std::move(v));
        b.distance.push_back(du + 1);
      }
    }
  }
  // Every ambient edge between ball vertices, found by pairwise generator
  // application.
  for (std::uint32_t u = 0; u < b.vertices.size(); ++u)
    for (unsigned g = 1; g <= n; ++g) {
      const auto it = index.find(packed_key(b.vertices[u] * base.generator(g)));
      if (it != index.end() && u < it->second)
        b.edges.emplace_back(u, it->second);
    }
  std::sort(b.edges.begin(), b.edges.end());
  return b;
}

std::uint64_t four_cycles_through(const DiagonalBase& base,
                                  const Tableau& vertex) {
  const unsigned n = base.depth();
  if (n > 5)
    throw GuardViolation("4-cycle counting capped at depth 5");
  // A 4-cycle through v is an unordered pair of neighbors with a common
  // second vertex; count common neighbors q != v over all neighbor pairs.
  std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, PackedKeyHash>
      reached_by;  // q -> bitmask of generators a with v*D_a adjacent to q
  const auto v_key = packed_key(vertex);
  for (unsigned a = 1; a <= n; ++a) {
    const Tableau p = vertex * base.generator(a);
    for (unsigned g = 1; g <= n; ++g) {
      auto q_key = packed_key(p * base.generator(g));
      if (q_key == v_key) continue;
      reached_by[std::move(q_key)] |= std::uint32_t{1} << (a - 1);
    }
  }
  std::uint64_t cycles = 0;
  for (const auto& [q, mask] : reached_by) {
    const std::uint64_t k = std::popcount(mask);
    cycles += k * (k - 1) / 2;
  }
  return cycles;
}

std::uint64_t commuting_pair_count(const DiagonalBase& base) {
  std::uint64_t count = 0;
  for (unsigned i = 1; i <= base.depth(); ++i)
    for (unsigned j = i + 1; j <= base.depth(); ++j)
      if (commutes(base, i, j)) ++count;
  return count;
}

std::uint64_t delta_count_formula(const CharacteristicVector& a) {
  std::uint64_t total = 0;
  for (unsigned i = 2; i <= a.depth - 1; ++i)
    if (a.bits[i - 2]) total += a.depth - i;
  return total;
}

DeltaInvariant commuting_degree_profile(const DiagonalBase& base) {
  const unsigned n = base.depth();
  DeltaInvariant inv;
  inv.profile.assign(n, 0);
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = i + 1; j <= n; ++j)
      if (commutes(base, i, j)) {
        ++inv.profile[i - 1];
        ++inv.profile[j - 1];
        ++inv.pair_count;
      }
  std::sort(inv.profile.begin(), inv.profile.end());
  return inv;
}

std::vector<unsigned> center_edge_four_cycle_counts(const Ball& b) {
  // Adjacency sets on ball indices.
  const std::size_t count = b.vertices.size();
  std::vector<std::vector<std::uint32_t>> adj(count);
  for (const auto& [u, v] : b.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<unsigned> counts;
  for (std::uint32_t p : adj[0]) {
    // 4-cycles 0 - p - q - w - 0: count pairs (q adj p, w adj 0, w != p,
    // q != 0, q adj w).
    unsigned through_edge = 0;
    for (std::uint32_t q : adj[p]) {
      if (q == 0) continue;
      for (std::uint32_t w : adj[0]) {
        if (w == p) continue;
        if (std::find(adj[q].begin(), adj[q].end(), w) != adj[q].end())
          ++through_edge;
      }
    }
    counts.push_back(through_edge);
  }
  std::sort(counts.begin(), counts.end());
  return counts;
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << contents;
    if (!out) throw Error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

namespace {

void append_dot_edges(
    std::ostringstream& out,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  for (const auto& [u, v] : edges)
    out << "  v" << u << " -- v" << v << ";\n";
}

}  // namespace

void export_dot(const CayleyGraph& graph, const std::filesystem::path& path) {
  std::ostringstream out;
  out << "graph cayley {\n";
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v)
    out << "  v" << v << " [label=\"" << to_string(graph.vertex(v))
        << "\"];\n";
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t v = 0; v < graph.vertex_count(); ++v)
    for (unsigned g = 1; g <= graph.degree(); ++g) {
      const std::uint32_t w = graph.neighbor(v, g);
      if (v < w) edges.emplace_back(v, w);
    }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  append_dot_edges(out, edges);
  out << "}\n";
  write_file_atomic(path, out.str());
}

void export_dot(const Ball& b, const std::filesystem::path& path) {
  std::ostringstream out;
  out << "graph ball {\n";
  for (std::uint32_t v = 0; v < b.vertices.size(); ++v)
    out << "  v" << v << " [label=\"" << to_string(b.vertices[v])
        << "\" dist=" << b.distance[v] << "];\n";
  append_dot_edges(out, b.edges);
  out << "}\n";
  write_file_atomic(path, out.str());
}

}  // namespace sylow
