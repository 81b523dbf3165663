#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <span>
#include <vector>

#include "mbrg/graph.hpp"
#include "mbrg/vertex_set.hpp"

namespace mbrg {

using CodeVector = std::vector<int>;

/// Distances from x to each vertex of the ordered set s.
CodeVector code_vector(const DistanceMatrix& d, std::span<const int> s, int x);

/// Reference predicate: sorts the n code vectors with respect to w and looks
/// for a repeat. Throws NotConnected / InvalidInput on a disconnected graph or
/// an empty w.
bool is_resolving(const Graph& g, const DistanceMatrix& d, VertexSet w);

/// Fast resolving-set predicate for repeated queries on one graph.
///
/// For every vertex pair {x, y} it stores the mask of vertices z with
/// d(x,z) != d(y,z); W resolves iff it hits every mask. Masks are checked in
/// ascending popcount so failing sets exit early. Graphs with n <= kCacheOrder
/// memoize answers per mask in a lazily filled 2^n table.
class ResolvingOracle {
 public:
  static constexpr int kCacheOrder = 20;

  explicit ResolvingOracle(const Graph& g);
  ResolvingOracle(const Graph& g, const DistanceMatrix& d);

  int order() const { return n_; }
  bool resolves(VertexSet w) const;
  /// Same answer as resolves(), memoized when the graph is small enough.
  bool resolves_cached(VertexSet w);
  /// Pairs of distinct vertices that w fails to separate (the first one found).
  std::optional<std::pair<int, int>> unresolved_pair(VertexSet w) const;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> separators_;
  std::vector<std::pair<int, int>> pair_ids_;
  std::vector<std::int8_t> cache_;  // 0 unknown, 1 resolves, -1 does not
};

struct DimOptions {
  bool collect_bases = false;
  /// Refuse to scan a subset level with more than this many candidates.
  double max_subsets = 1e7;
};

struct DimResult {
  int dimension = 0;
  std::vector<VertexSet> bases;  // every metric basis, colex order, when requested
  std::uint64_t subsets_examined = 0;
};

/// Exact metric dimension by scanning subset sizes upward from the twin lower
/// bound; subsets of one size are visited in colexicographic order.
DimResult metric_dimension(const Graph& g, const DimOptions& opts = {});

/// All metric bases in colexicographic order. Throws GuardExceeded when
/// C(n, dim) exceeds max_subsets.
std::vector<VertexSet> enumerate_metric_bases(const Graph& g, double max_subsets = 1e7);

/// C(n, k) as a double (exact for the sizes used here).
double binomial(int n, int k);

/// Visits every k-subset of {0..n-1} in colexicographic order until f returns false.
template <typename F>
void for_each_k_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(VertexSet{});
    return;
  }
  const std::uint64_t limit = n >= 64 ? 0 : (std::uint64_t{1} << n);
  std::uint64_t x = (k >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  while (true) {
    if (!f(VertexSet(x))) return;
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    if (r == 0) return;  // overflowed past bit 63
    x = (((r ^ x) >> 2) / c) | r;
    if (limit != 0 && x >= limit) return;
  }
}

}  // namespace mbrg
