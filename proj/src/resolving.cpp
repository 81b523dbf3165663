#include "mbrg/resolving.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "mbrg/errors.hpp"
#include "mbrg/twins.hpp"

namespace mbrg {

CodeVector code_vector(const DistanceMatrix& d, std::span<const int> s, int x) {
  CodeVector out;
  out.reserve(s.size());
  for (int z : s) out.push_back(d(x, z));
  return out;
}

bool is_resolving(const Graph& g, const DistanceMatrix& d, VertexSet w) {
  require_connected(g);
  if (w.empty()) throw InvalidInput("resolving-set query on an empty set");
  if (!w.is_subset_of(g.vertices())) throw InvalidInput("set contains vertices outside the graph");
  const auto members = w.members();
  std::vector<CodeVector> codes;
  codes.reserve(g.order());
  for (int x = 0; x < g.order(); ++x) codes.push_back(code_vector(d, members, x));
  std::sort(codes.begin(), codes.end());
  return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
}

ResolvingOracle::ResolvingOracle(const Graph& g) : ResolvingOracle(g, all_pairs_distances(g)) {}

ResolvingOracle::ResolvingOracle(const Graph& g, const DistanceMatrix& d) : n_(g.order()) {
  require_connected(g);
  std::vector<std::pair<std::uint64_t, std::pair<int, int>>> rows;
  rows.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
  for (int x = 0; x < n_; ++x) {
    for (int y = x + 1; y < n_; ++y) {
      std::uint64_t mask = 0;
      for (int z = 0; z < n_; ++z) {
        if (d(x, z) != d(y, z)) mask |= std::uint64_t{1} << z;
      }
      rows.push_back({mask, {x, y}});
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::popcount(a.first) < std::popcount(b.first);
  });
  separators_.reserve(rows.size());
  pair_ids_.reserve(rows.size());
  for (const auto& [mask, ids] : rows) {
    separators_.push_back(mask);
    pair_ids_.push_back(ids);
  }
  if (n_ <= kCacheOrder) cache_.assign(std::size_t{1} << n_, 0);
}

bool ResolvingOracle::resolves(VertexSet w) const {
  const std::uint64_t bits = w.bits();
  for (std::uint64_t mask : separators_) {
    if ((mask & bits) == 0) return false;
  }
  return true;
}

bool ResolvingOracle::resolves_cached(VertexSet w) {
  if (cache_.empty()) return resolves(w);
  auto& slot = cache_[w.bits()];
  if (slot == 0) slot = resolves(w) ? 1 : -1;
  return slot > 0;
}

std::optional<std::pair<int, int>> ResolvingOracle::unresolved_pair(VertexSet w) const {
  for (std::size_t i = 0; i < separators_.size(); ++i) {
    if ((separators_[i] & w.bits()) == 0) return pair_ids_[i];
  }
  return std::nullopt;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

DimResult scan_dimension(const Graph& g, const DimOptions& opts, int start) {
  const ResolvingOracle oracle(g);
  const int n = g.order();
  DimResult result;
  for (int k = std::max(start, 1); k <= n; ++k) {
    if (binomial(n, k) > opts.max_subsets) {
      throw GuardExceeded("metric dimension scan at size " + std::to_string(k) + " needs C(" +
                          std::to_string(n) + "," + std::to_string(k) + ") subsets");
    }
    bool found = false;
    for_each_k_subset(n, k, [&](VertexSet s) {
      ++result.subsets_examined;
      if (oracle.resolves(s)) {
        found = true;
        if (!opts.collect_bases) return false;
        result.bases.push_back(s);
      }
      return true;
    });
    if (found) {
      result.dimension = k;
      return result;
    }
  }
  // V(G) always resolves, so the loop cannot fall through.
  throw std::logic_error("no resolving set found");
}

}  // namespace

DimResult metric_dimension(const Graph& g, const DimOptions& opts) {
  require_connected(g);
  return scan_dimension(g, opts, twin_lower_bound(twin_classes(g)));
}

std::vector<VertexSet> enumerate_metric_bases(const Graph& g, double max_subsets) {
  DimOptions opts;
  opts.collect_bases = true;
  opts.max_subsets = max_subsets;
  return metric_dimension(g, opts).bases;
}

}  // namespace mbrg
