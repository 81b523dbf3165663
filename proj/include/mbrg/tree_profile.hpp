#pragma once

#include <vector>

#include "mbrg/graph.hpp"
#include "mbrg/vertex_set.hpp"

namespace mbrg {

/// An exterior major vertex v together with its terminal leaves.
struct ExteriorMajor {
  int vertex = 0;
  /// Terminal leaves, nearest first (ties by index).
  std::vector<int> terminals;
  /// legs[j]: the v-terminals[j] path without v, ordered from v outwards.
  std::vector<std::vector<int>> legs;
  /// |N(v) ∩ L_v|
  int adjacent_leaf_count = 0;

  int terminal_degree() const { return static_cast<int>(terminals.size()); }
};

struct TreeProfile {
  VertexSet leaves;
  VertexSet major;           // degree >= 3
  VertexSet exterior_major;  // major with at least one terminal leaf
  VertexSet m1;              // terminal degree 1
  VertexSet m2;              // terminal degree >= 2
  std::vector<ExteriorMajor> exterior;  // ascending by vertex

  int sigma() const { return leaves.size(); }
  int ex() const { return exterior_major.size(); }
};

bool is_tree(const Graph& g);
bool is_path_graph(const Graph& g);

/// A leaf is terminal for the unique major vertex strictly closest to it.
/// Throws InvalidInput unless g is a tree other than a path.
TreeProfile tree_profile(const Graph& g);

/// Metric-basis characterization for trees: exactly one vertex from each leg
/// of every exterior major vertex except exactly one leg per vertex, and
/// nothing outside the legs.
bool satisfies_tree_basis_characterization(const TreeProfile& profile, VertexSet w);

}  // namespace mbrg
