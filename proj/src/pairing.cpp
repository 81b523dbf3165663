#include "mbrg/pairing.hpp"

#include <algorithm>
#include <bit>

#include <nlohmann/json.hpp>

#include "mbrg/errors.hpp"
#include "mbrg/resolving.hpp"
#include "mbrg/tree_profile.hpp"

namespace mbrg {

VertexSet PairingSet::endpoints() const {
  VertexSet out;
  for (const auto& [u, w] : pairs) {
    out.insert(u);
    out.insert(w);
  }
  return out;
}

nlohmann::json to_json(const PairingSet& p) {
  auto out = nlohmann::json::array();
  for (const auto& [u, w] : p.pairs) out.push_back({std::min(u, w), std::max(u, w)});
  return out;
}

namespace {

void check_pairs(const Graph& g, const PairingSet& p) {
  VertexSet seen;
  for (const auto& [u, w] : p.pairs) {
    for (int v : {u, w}) {
      if (v < 0 || v >= g.order()) throw InvalidInput("pair endpoint " + std::to_string(v) + " out of range");
      if (seen.contains(v)) throw InvalidInput("vertex " + std::to_string(v) + " appears in more than one pair");
      seen.insert(v);
    }
  }
}

// Every selection of one endpoint per pair, united with `extra`, resolves.
// Gray-code order: consecutive selections differ by one swapped endpoint.
bool all_selections_resolve(const ResolvingOracle& oracle, const std::vector<std::pair<int, int>>& pairs,
                            std::uint64_t extra) {
  std::uint64_t mask = extra;
  for (const auto& [u, w] : pairs) mask |= std::uint64_t{1} << u;
  if (!oracle.resolves(VertexSet(mask))) return false;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t i = 1; i < total; ++i) {
    const auto& [u, w] = pairs[std::countr_zero(i)];
    mask ^= (std::uint64_t{1} << u) | (std::uint64_t{1} << w);
    if (!oracle.resolves(VertexSet(mask))) return false;
  }
  return true;
}

class PairingSearch {
 public:
  PairingSearch(const Graph& g, int k, const PairingOptions& opts) : oracle_(g), k_(k), opts_(opts) {
    const std::uint64_t all = g.vertices().bits();
    // Candidate pairs in colexicographic order. A pair is kept only if each
    // endpoint can be left out: V - {u} and V - {w} both resolve.
    for (int w = 1; w < g.order(); ++w) {
      for (int u = 0; u < w; ++u) {
        const std::uint64_t bu = std::uint64_t{1} << u;
        const std::uint64_t bw = std::uint64_t{1} << w;
        if (oracle_.resolves(VertexSet(all & ~bu)) && oracle_.resolves(VertexSet(all & ~bw))) {
          candidates_.emplace_back(u, w);
        }
      }
    }
    // suffix_[i]: endpoints of candidates i.. ; bounds what later pairs can add.
    suffix_.assign(candidates_.size() + 1, 0);
    for (std::size_t i = candidates_.size(); i-- > 0;) {
      suffix_[i] = suffix_[i + 1] | (std::uint64_t{1} << candidates_[i].first) |
                   (std::uint64_t{1} << candidates_[i].second);
    }
  }

  std::optional<PairingSet> run() {
    if (k_ == 0) return std::nullopt;
    if (extend(0, 0)) return PairingSet{chosen_};
    return std::nullopt;
  }

 private:
  bool extend(std::size_t from, std::uint64_t used) {
    if (static_cast<int>(chosen_.size()) == k_) return true;
    for (std::size_t i = from; i < candidates_.size(); ++i) {
      const auto [u, w] = candidates_[i];
      const std::uint64_t pair_bits = (std::uint64_t{1} << u) | (std::uint64_t{1} << w);
      if (used & pair_bits) continue;
      if (++nodes_ > opts_.max_nodes) throw GuardExceeded("pairing search exceeded its node budget");
      chosen_.emplace_back(u, w);
      const std::uint64_t now_used = used | pair_bits;
      // Any completion's selection is a subset of (current selection + every
      // vertex later pairs could still use); superset closure makes this a
      // sound cut.
      const std::uint64_t reachable =
          static_cast<int>(chosen_.size()) == k_ ? 0 : (suffix_[i + 1] & ~now_used);
      if (all_selections_resolve(oracle_, chosen_, reachable) && extend(i + 1, now_used)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  ResolvingOracle oracle_;
  int k_;
  PairingOptions opts_;
  std::vector<std::pair<int, int>> candidates_;
  std::vector<std::uint64_t> suffix_;
  std::vector<std::pair<int, int>> chosen_;
  double nodes_ = 0;
};

int idx(const std::vector<int>& path, int j) { return path.at(static_cast<std::size_t>(j - 1)); }

PairingSet bouquet_pairing(const FamilySpec& spec) {
  const BouquetProfile bp = bouquet_profile(spec);
  if (bp.z > 2) throw InvalidInput("bouquet pairing needs at most two 4-cycles");
  // Roles: 4-cycles first, then the other even cycles, then odd cycles.
  std::vector<const BouquetCycle*> four, even, odd;
  for (const auto& c : bp.cycles) {
    if (c.length == 4) {
      four.push_back(&c);
    } else if (c.length % 2 == 0) {
      even.push_back(&c);
    } else {
      odd.push_back(&c);
    }
  }
  PairingSet out;
  auto add = [&out](int a, int b) { out.pairs.emplace_back(a, b); };
  auto two_pairs = [&](const BouquetCycle& c) {
    const int k = c.length / 2;
    add(idx(c.path, 1), idx(c.path, k - 1));
    add(idx(c.path, k + 1), idx(c.path, 2 * k - 1));
  };
  std::size_t even_from = 0;
  if (bp.z == 0 && bp.x >= 1) {
    const auto& c = *even[0];
    const int k = c.length / 2;
    add(idx(c.path, k - 1), idx(c.path, k + 1));
    even_from = 1;
  } else if (bp.z == 1) {
    add(idx(four[0]->path, 1), idx(four[0]->path, 3));
  } else if (bp.z == 2) {
    add(idx(four[0]->path, 1), idx(four[0]->path, 3));
    add(idx(four[1]->path, 1), idx(four[1]->path, 3));
    add(idx(four[0]->path, 2), idx(four[1]->path, 2));
  }
  for (std::size_t i = even_from; i < even.size(); ++i) two_pairs(*even[i]);
  for (const auto* c : odd) add(c->middle[0], c->middle[1]);
  return out;
}

PairingSet multipartite_pairing(const FamilySpec& spec) {
  const auto& parts = spec.params;
  std::vector<int> first_vertex;
  int next = 0;
  for (int a : parts) {
    first_vertex.push_back(next);
    next += a;
  }
  std::vector<int> singles, doubles;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] > 2) throw InvalidInput("multipartite pairing needs every part of size at most 2");
    (parts[i] == 1 ? singles : doubles).push_back(first_vertex[i]);
  }
  if (singles.size() > 2) throw InvalidInput("multipartite pairing needs at most two singleton parts");
  PairingSet out;
  if (singles.size() == 2) out.pairs.emplace_back(singles[0], singles[1]);
  for (int v : doubles) out.pairs.emplace_back(v, v + 1);
  return out;
}

}  // namespace

bool is_pairing_resolving(const Graph& g, const PairingSet& pairs, const PairingOptions& opts) {
  require_connected(g);
  check_pairs(g, pairs);
  if (pairs.pairs.empty()) throw InvalidInput("empty pairing");
  if (pairs.size() > opts.max_pairs) {
    throw GuardExceeded("pairing of size " + std::to_string(pairs.size()) + " exceeds the transversal guard");
  }
  const ResolvingOracle oracle(g);
  return all_selections_resolve(oracle, pairs.pairs, 0);
}

std::optional<PairingSet> find_pairing(const Graph& g, int k, const PairingOptions& opts) {
  require_connected(g);
  if (g.order() > opts.max_order) {
    throw GuardExceeded("pairing search guard: order " + std::to_string(g.order()) + " exceeds " +
                        std::to_string(opts.max_order));
  }
  if (k < 1 || 2 * k > g.order()) return std::nullopt;
  PairingSearch search(g, k, opts);
  return search.run();
}

std::optional<PairingSet> find_dim_pairing(const Graph& g, const PairingOptions& opts) {
  require_connected(g);
  if (g.order() > opts.max_order) {
    throw GuardExceeded("pairing search guard: order " + std::to_string(g.order()) + " exceeds " +
                        std::to_string(opts.max_order));
  }
  return find_pairing(g, metric_dimension(g).dimension, opts);
}

std::optional<PairingSet> find_smallest_pairing(const Graph& g, const PairingOptions& opts) {
  require_connected(g);
  if (g.order() > opts.max_order) {
    throw GuardExceeded("pairing search guard: order " + std::to_string(g.order()) + " exceeds " +
                        std::to_string(opts.max_order));
  }
  for (int k = metric_dimension(g).dimension; 2 * k <= g.order(); ++k) {
    if (auto p = find_pairing(g, k, opts)) return p;
  }
  return std::nullopt;
}

PairingSet tree_pairing(const Graph& tree) {
  const TreeProfile p = tree_profile(tree);
  PairingSet out;
  for (const auto& em : p.exterior) {
    if (em.terminal_degree() < 2) continue;
    if (em.adjacent_leaf_count > 2) {
      throw InvalidInput("tree pairing needs at most 2 adjacent terminal leaves at every exterior major vertex");
    }
    out.pairs.emplace_back(em.terminals[0], em.terminals[1]);
    for (std::size_t i = 2; i < em.terminals.size(); ++i) {
      const auto& leg = em.legs[i];
      out.pairs.emplace_back(leg[leg.size() - 2], leg.back());  // support vertex, leaf
    }
  }
  return out;
}

PairingSet construct_family_pairing(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::Star:
    case FamilyKind::Spider:
    case FamilyKind::TreeFromEdges:
      return tree_pairing(generate(spec));
    case FamilyKind::Bouquet:
      return bouquet_pairing(spec);
    case FamilyKind::CompleteMultipartite:
      return multipartite_pairing(spec);
    case FamilyKind::Grid: {
      const int s = p[0], t = p[1];
      return PairingSet{{{0, (s - 1) * t + t - 1}, {(s - 1) * t, t - 1}}};
    }
    case FamilyKind::Torus: {
      const int s = p[0], t = p[1];
      if (s % 2 != 0 || t % 2 != 0) throw InvalidInput("torus pairing needs both sides even");
      auto id = [t](int i, int j) { return i * t + j; };
      auto antipode = [&](int i, int j) { return id((i + s / 2) % s, (j + t / 2) % t); };
      // x, y diametral in a C_s copy; z next to x in C_s; w next to x in C_t.
      const int coords[4][2] = {{0, 0}, {s / 2, 0}, {1, 0}, {0, 1}};
      PairingSet out;
      for (const auto& c : coords) out.pairs.emplace_back(id(c[0], c[1]), antipode(c[0], c[1]));
      return out;
    }
    default:
      throw InvalidInput("no explicit pairing construction for " + std::string(family_name(spec.kind)));
  }
}

}  // namespace mbrg
