#include "mbrg/tree_profile.hpp"

#include <algorithm>
#include <map>

#include "mbrg/errors.hpp"

namespace mbrg {

bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

bool is_path_graph(const Graph& g) {
  if (!is_tree(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

TreeProfile tree_profile(const Graph& g) {
  if (!is_tree(g)) throw InvalidInput("tree_profile needs a tree");
  if (is_path_graph(g)) throw InvalidInput("tree_profile is undefined for paths");
  TreeProfile p;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) p.leaves.insert(v);
    if (g.degree(v) >= 3) p.major.insert(v);
  }
  std::map<int, ExteriorMajor> by_vertex;
  p.leaves.for_each([&](int leaf) {
    // Walk inward through degree-2 vertices; the first major vertex reached is
    // strictly closer to the leaf than any other.
    std::vector<int> leg{leaf};
    int prev = leaf;
    int cur = g.neighbors(leaf).min();
    while (!p.major.contains(cur)) {
      leg.push_back(cur);
      const VertexSet next = g.neighbors(cur) - VertexSet::single(prev);
      prev = cur;
      cur = next.min();
    }
    std::reverse(leg.begin(), leg.end());
    auto& em = by_vertex[cur];
    em.vertex = cur;
    em.terminals.push_back(leaf);
    em.legs.push_back(std::move(leg));
  });
  for (auto& [v, em] : by_vertex) {
    std::vector<std::size_t> order(em.terminals.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (em.legs[a].size() != em.legs[b].size()) return em.legs[a].size() < em.legs[b].size();
      return em.terminals[a] < em.terminals[b];
    });
    ExteriorMajor sorted;
    sorted.vertex = v;
    for (std::size_t i : order) {
      sorted.terminals.push_back(em.terminals[i]);
      sorted.legs.push_back(em.legs[i]);
      if (em.legs[i].size() == 1) ++sorted.adjacent_leaf_count;
    }
    p.exterior_major.insert(v);
    (sorted.terminal_degree() == 1 ? p.m1 : p.m2).insert(v);
    p.exterior.push_back(std::move(sorted));
  }
  return p;
}

bool satisfies_tree_basis_characterization(const TreeProfile& profile, VertexSet w) {
  VertexSet covered;
  for (const auto& em : profile.exterior) {
    int empty_legs = 0;
    for (const auto& leg : em.legs) {
      const VertexSet leg_set = VertexSet::from(leg);
      covered |= leg_set;
      const int hits = (w & leg_set).size();
      if (hits > 1) return false;
      if (hits == 0) ++empty_legs;
    }
    if (empty_legs != 1) return false;
  }
  return w.is_subset_of(covered);
}

}  // namespace mbrg
