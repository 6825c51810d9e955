#include "fortlib/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "fortlib/errors.hpp"

namespace fortlib {

namespace {

std::string binary_label(int value, int width) {
  std::string s(static_cast<size_t>(width), '0');
  for (int i = 0; i < width; ++i)
    if ((value >> (width - 1 - i)) & 1) s[static_cast<size_t>(i)] = '1';
  return s;
}

uint64_t fnv1a(uint64_t h, uint64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xff;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 1) throw invalid_input("graph needs at least one vertex");
  if (n > kMaxVertices)
    throw resource_limit("graph too large to materialize adjacency (n > " +
                         std::to_string(kMaxVertices) + ")");
  adj_.assign(static_cast<size_t>(n), VertexSet(n));
}

void Graph::add_edge(int u, int v) {
  adj_[static_cast<size_t>(u)].set(v);
  adj_[static_cast<size_t>(v)].set(u);
}

void Graph::recount_edges() {
  long long deg_sum = 0;
  for (const auto& row : adj_) deg_sum += row.count();
  edge_count_ = deg_sum / 2;
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                            std::vector<std::string> labels) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw invalid_input("edge endpoint out of range: (" + std::to_string(u) + "," +
                          std::to_string(v) + ")");
    if (u == v) throw invalid_input("self-loop at vertex " + std::to_string(u));
    g.add_edge(u, v);  // duplicates collapse in the bitset
  }
  g.recount_edges();
  if (!labels.empty()) {
    if (static_cast<int>(labels.size()) != n)
      throw invalid_input("labels length does not match n");
    g.labels_ = std::move(labels);
  }
  return g;
}

Graph Graph::hypercube(int d) {
  if (d < 1 || d > kMaxHypercubeDim)
    throw invalid_input("hypercube dimension must be in [1," +
                        std::to_string(kMaxHypercubeDim) + "]");
  if (d > 16)
    throw resource_limit("hypercube of dimension " + std::to_string(d) +
                         " exceeds the materialization guard (n > 65536)");
  int n = 1 << d;
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int j = 0; j < d; ++j) g.adj_[static_cast<size_t>(v)].set(v ^ (1 << j));
  g.edge_count_ = static_cast<long long>(d) << (d - 1);
  g.labels_.reserve(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) g.labels_.push_back(binary_label(v, d));
  g.meta_ = HypercubeMeta{d};
  return g;
}

Graph Graph::cartesian_product(const Graph& g, const Graph& h) {
  long long n = static_cast<long long>(g.n_) * h.n_;
  if (n > kMaxVertices)
    throw resource_limit("product order " + std::to_string(n) + " exceeds the resource guard");
  Graph p(static_cast<int>(n));
  int nh = h.n_;
  for (int u = 0; u < g.n_; ++u) {
    for (int up = 0; up < nh; ++up) {
      int i = u * nh + up;
      h.adj_[static_cast<size_t>(up)].for_each(
          [&](int vp) { p.adj_[static_cast<size_t>(i)].set(u * nh + vp); });
      g.adj_[static_cast<size_t>(u)].for_each(
          [&](int v) { p.adj_[static_cast<size_t>(i)].set(v * nh + up); });
    }
  }
  p.recount_edges();
  if (g.has_labels() && h.has_labels()) {
    p.labels_.reserve(static_cast<size_t>(n));
    for (int u = 0; u < g.n_; ++u)
      for (int up = 0; up < nh; ++up) p.labels_.push_back(g.label(u) + h.label(up));
  }
  if (g.meta_ && h.meta_) p.meta_ = HypercubeMeta{g.meta_->dimension + h.meta_->dimension};
  return p;
}

const VertexSet& Graph::neighborhood(int v) const {
  if (v < 0 || v >= n_) throw invalid_input("vertex " + std::to_string(v) + " out of range");
  return adj_[static_cast<size_t>(v)];
}

VertexSet Graph::closed_neighborhood(int v) const {
  VertexSet s = neighborhood(v);
  s.set(v);
  return s;
}

std::optional<int> Graph::distance(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) throw invalid_input("vertex out of range");
  std::vector<int> dist(static_cast<size_t>(n_), -1);
  dist[static_cast<size_t>(u)] = 0;
  std::deque<int> queue{u};
  while (!queue.empty() && dist[static_cast<size_t>(v)] < 0) {
    int x = queue.front();
    queue.pop_front();
    adj_[static_cast<size_t>(x)].for_each([&](int y) {
      if (dist[static_cast<size_t>(y)] < 0) {
        dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
        queue.push_back(y);
      }
    });
  }
  int d = dist[static_cast<size_t>(v)];
  if (d < 0) return std::nullopt;
  if (meta_) {
    int hamming = std::popcount(static_cast<unsigned>(u ^ v));
    if (d != hamming)
      throw internal_consistency_error("hypercube BFS distance disagrees with Hamming distance");
  }
  return d;
}

uint64_t Graph::count_shortest_paths(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) throw invalid_input("vertex out of range");
  std::vector<int> dist(static_cast<size_t>(n_), -1);
  std::vector<uint64_t> ways(static_cast<size_t>(n_), 0);
  dist[static_cast<size_t>(u)] = 0;
  ways[static_cast<size_t>(u)] = 1;
  std::deque<int> queue{u};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    adj_[static_cast<size_t>(x)].for_each([&](int y) {
      if (dist[static_cast<size_t>(y)] < 0) {
        dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
        queue.push_back(y);
      }
      if (dist[static_cast<size_t>(y)] == dist[static_cast<size_t>(x)] + 1)
        ways[static_cast<size_t>(y)] += ways[static_cast<size_t>(x)];
    });
  }
  return ways[static_cast<size_t>(v)];
}

std::variant<Graph::Bipartition, std::vector<int>> Graph::bipartition_or_odd_cycle() const {
  std::vector<int> color(static_cast<size_t>(n_), -1);
  std::vector<int> parent(static_cast<size_t>(n_), -1);
  std::vector<int> depth(static_cast<size_t>(n_), 0);
  for (int root = 0; root < n_; ++root) {
    if (color[static_cast<size_t>(root)] >= 0) continue;
    color[static_cast<size_t>(root)] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      int bad = -1;
      adj_[static_cast<size_t>(x)].for_each([&](int y) {
        if (color[static_cast<size_t>(y)] < 0) {
          color[static_cast<size_t>(y)] = 1 - color[static_cast<size_t>(x)];
          parent[static_cast<size_t>(y)] = x;
          depth[static_cast<size_t>(y)] = depth[static_cast<size_t>(x)] + 1;
          queue.push_back(y);
        } else if (color[static_cast<size_t>(y)] == color[static_cast<size_t>(x)] && bad < 0) {
          bad = y;
        }
      });
      if (bad >= 0) {
        // walk both endpoints up to their lowest common ancestor
        std::vector<int> left{x}, right{bad};
        int a = x, b = bad;
        while (depth[static_cast<size_t>(a)] > depth[static_cast<size_t>(b)]) {
          a = parent[static_cast<size_t>(a)];
          left.push_back(a);
        }
        while (depth[static_cast<size_t>(b)] > depth[static_cast<size_t>(a)]) {
          b = parent[static_cast<size_t>(b)];
          right.push_back(b);
        }
        while (a != b) {
          a = parent[static_cast<size_t>(a)];
          b = parent[static_cast<size_t>(b)];
          left.push_back(a);
          right.push_back(b);
        }
        std::vector<int> cycle(left.rbegin(), left.rend());
        cycle.insert(cycle.end(), right.begin(), right.end() - 1);
        return cycle;
      }
    }
  }
  Bipartition parts{VertexSet(n_), VertexSet(n_)};
  for (int v = 0; v < n_; ++v)
    (color[static_cast<size_t>(v)] == 0 ? parts.part0 : parts.part1).set(v);
  return parts;
}

std::optional<Graph::Bipartition> Graph::bipartition() const {
  auto r = bipartition_or_odd_cycle();
  if (auto* parts = std::get_if<Bipartition>(&r)) return *parts;
  return std::nullopt;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(edge_count_));
  for (int u = 0; u < n_; ++u)
    adj_[static_cast<size_t>(u)].for_each([&](int v) {
      if (u < v) edges.emplace_back(u, v);
    });
  return edges;
}

std::string Graph::canonical_hash() const {
  uint64_t h = 0xcbf29ce484222325ull;
  h = fnv1a(h, static_cast<uint64_t>(n_));
  for (auto [u, v] : edge_list()) {
    h = fnv1a(h, static_cast<uint64_t>(u));
    h = fnv1a(h, static_cast<uint64_t>(v));
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool Graph::same_adjacency(const Graph& other) const {
  if (n_ != other.n_) return false;
  for (int v = 0; v < n_; ++v)
    if (adj_[static_cast<size_t>(v)] != other.adj_[static_cast<size_t>(v)]) return false;
  return true;
}

}  // namespace fortlib
