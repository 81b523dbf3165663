#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mbrg/families.hpp"
#include "mbrg/graph.hpp"

namespace mbrg {

/// Disjoint vertex pairs {u_i, w_i}; a pairing resolving set when every
/// one-per-pair selection resolves the graph.
struct PairingSet {
  std::vector<std::pair<int, int>> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
  VertexSet endpoints() const;
  friend bool operator==(const PairingSet&, const PairingSet&) = default;
};

nlohmann::json to_json(const PairingSet& p);

struct PairingOptions {
  /// Largest pairing whose 2^k selections is_pairing_resolving will check.
  int max_pairs = 20;
  /// Largest graph order find_dim_pairing will search.
  int max_order = 16;
  /// Cap on search nodes for find_dim_pairing.
  double max_nodes = 5e7;
};

/// Checks all 2^k selections in Gray-code order, stopping at the first that
/// fails. Throws InvalidInput on repeated or out-of-range endpoints and
/// GuardExceeded when k > max_pairs.
bool is_pairing_resolving(const Graph& g, const PairingSet& pairs, const PairingOptions& opts = {});

/// First pairing resolving set with dim(G) pairs, in colexicographic order
/// over pair choices, or nullopt if none exists. Throws GuardExceeded when the
/// search is too large to be conclusive.
std::optional<PairingSet> find_dim_pairing(const Graph& g, const PairingOptions& opts = {});

/// First pairing resolving set with exactly k pairs, same order and guards.
std::optional<PairingSet> find_pairing(const Graph& g, int k, const PairingOptions& opts = {});

/// Pairing resolving set with the fewest pairs (at least dim(G)), or nullopt
/// when none exists.
std::optional<PairingSet> find_smallest_pairing(const Graph& g, const PairingOptions& opts = {});

/// The explicit pairing for families that come with one: trees (and stars,
/// spiders) whose exterior majors with two or more terminal leaves each have
/// at most 2 adjacent leaves, bouquets with at most two 4-cycles, complete
/// multipartite graphs with every part and the singleton-part count at most
/// 2, grids, and tori with both sides even. Throws InvalidInput otherwise.
PairingSet construct_family_pairing(const FamilySpec& spec);

/// The tree construction on an arbitrary tree (see construct_family_pairing).
PairingSet tree_pairing(const Graph& tree);

}  // namespace mbrg
