#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fortlib/vertex_set.hpp"

namespace fortlib {

struct HypercubeMeta {
  int dimension = 0;
};

// Immutable simple graph with bit-indexed adjacency rows. Hypercubes carry
// HypercubeMeta and label vertex i with the d-bit binary string of i
// (most significant bit first); adjacency then follows the rule
// popcount(i XOR j) == 1, which the constructor materializes like any
// other graph so every algorithm sees one representation.
class Graph {
 public:
  // Hard cap on materialized graphs; adjacency rows are dense bitsets.
  static constexpr int kMaxVertices = 1 << 16;
  static constexpr int kMaxHypercubeDim = 24;

  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                              std::vector<std::string> labels = {});
  static Graph hypercube(int d);
  static Graph cartesian_product(const Graph& g, const Graph& h);

  int order() const { return n_; }
  long long size() const { return edge_count_; }

  bool adjacent(int u, int v) const { return adj_[static_cast<size_t>(u)].test(v); }
  int degree(int v) const { return adj_[static_cast<size_t>(v)].count(); }
  const VertexSet& neighborhood(int v) const;
  VertexSet closed_neighborhood(int v) const;

  // BFS distance; std::nullopt when u and v are disconnected.
  std::optional<int> distance(int u, int v) const;
  // Number of shortest u-v paths (0 when disconnected, 1 when u == v).
  uint64_t count_shortest_paths(int u, int v) const;

  struct Bipartition {
    VertexSet part0;  // the part containing the smallest vertex of each component
    VertexSet part1;
  };
  // Parts of a 2-coloring, or an odd cycle witnessing non-bipartiteness.
  std::variant<Bipartition, std::vector<int>> bipartition_or_odd_cycle() const;
  std::optional<Bipartition> bipartition() const;

  const std::optional<HypercubeMeta>& hypercube_meta() const { return meta_; }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[static_cast<size_t>(v)]; }

  // Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edge_list() const;

  // Digest of (n, sorted edge list); keys census caches and reports.
  std::string canonical_hash() const;

  bool same_adjacency(const Graph& other) const;

 private:
  explicit Graph(int n);
  void add_edge(int u, int v);
  void recount_edges();

  int n_ = 0;
  long long edge_count_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
  std::optional<HypercubeMeta> meta_;
};

}  // namespace fortlib
