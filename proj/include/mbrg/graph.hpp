#pragma once

#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mbrg/vertex_set.hpp"

namespace mbrg {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1, n >= 2.
///
/// Disconnected graphs are allowed here; operations that need connectivity
/// check it themselves. Labels are display-only.
class Graph {
 public:
  /// Duplicate edges collapse. Throws InvalidInput on n < 2, n > kMaxVertices,
  /// out-of-range endpoints, self-loops, or a label list of the wrong length.
  static Graph build(int n, std::span<const Edge> edges, std::vector<std::string> labels = {});

  int order() const { return n_; }
  int size() const;
  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return adjacency_[v].size(); }
  bool has_edge(int u, int v) const { return adjacency_[u].contains(v); }

  /// Sorted (u < v) edge list.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// The attached label, or "v_i" when the graph carries none.
  std::string label(int v) const;
  /// Index of the vertex carrying `name`; throws InvalidInput if absent.
  int vertex(const std::string& name) const;

  Graph with_labels(std::vector<std::string> labels) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adjacency_ == b.adjacency_;
  }

 private:
  Graph() = default;
  int n_ = 0;
  std::vector<VertexSet> adjacency_;
  std::vector<std::string> labels_;
};

/// Hop-count distances. Unreachable pairs hold kUnreachable.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = std::numeric_limits<int>::max();

  explicit DistanceMatrix(int n) : n_(n), dist_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int order() const { return n_; }
  int operator()(int u, int v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  int& at(int u, int v) { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  std::span<const int> row(int u) const {
    return {dist_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
  }

 private:
  int n_;
  std::vector<int> dist_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

/// Throws NotConnected unless g is connected.
void require_connected(const Graph& g);

/// G □ H. Vertex (i, j) is flattened to i * |H| + j and labelled "(u_{i+1},v_{j+1})".
Graph cartesian_product(const Graph& g, const Graph& h);

/// G[K_2]: vertex v becomes 2v and 2v+1, labelled "(x,1)" and "(x,2)" where x
/// is v's label.
Graph lexicographic_product_with_k2(const Graph& g);

// JSON file format: {"n": int, "edges": [[u,v],...], "labels": [string...]?}
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

}  // namespace mbrg
