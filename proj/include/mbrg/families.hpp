#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mbrg/graph.hpp"

namespace mbrg {

enum class FamilyKind {
  Path,
  Cycle,
  Complete,
  Star,
  CompleteMultipartite,
  TreeFromEdges,
  Spider,
  Petersen,
  Bouquet,
  Grid,
  Torus,
  LexCycleK2,
  Gk,
};

/// A named graph family plus its integer parameters:
///   path n | cycle n | complete n | star k (K_{1,k}) | complete_multipartite a_1..a_k
///   tree_from_edges u_0 v_0 u_1 v_1 ... | spider leg lengths | petersen
///   bouquet cycle lengths | grid s t | torus s t | lex_cycle_k2 m | g_k k
struct FamilySpec {
  FamilyKind kind = FamilyKind::Path;
  std::vector<int> params;
};

std::string_view family_name(FamilyKind kind);
FamilyKind parse_family_kind(std::string_view name);

/// Throws InvalidInput when the parameters do not fit the kind.
void validate(const FamilySpec& spec);

/// Connected graph with display labels. Petersen: u_1..u_5 outer, w_1..w_5
/// inner. Bouquet: cut vertex w then u_{i,j}. G_k: a_i, b_S, c_S with S as a
/// bit string (leftmost bit = a_1). Products: (u_i,v_j).
Graph generate(const FamilySpec& spec);

nlohmann::json to_json(const FamilySpec& spec);
FamilySpec family_from_json(const nlohmann::json& j);

/// Parameter schema for every kind, as served by the session API.
nlohmann::json family_catalog();

struct GkStructure {
  VertexSet a;
  VertexSet b;
  VertexSet c;
  /// (b_S, c_S) for every nonempty S, ordered by the binary value of S.
  std::vector<std::pair<int, int>> pairing;
};

/// Layout: A = 0..k-1, B = k..k+2^k-2, C follows; B and C share the subset
/// order of `pairing`.
GkStructure g_k_structure(int k);

struct BouquetCycle {
  int length = 0;
  /// P^i = C^i - w: u_{i,1} .. u_{i,length-1} in cycle order.
  std::vector<int> path;
  /// Odd length 2k+1: {u_{i,k}, u_{i,k+1}}. Even length 2k: {u_{i,k}}.
  std::vector<int> middle;
};

struct BouquetProfile {
  int m = 0;
  int x = 0;  // even cycles
  int z = 0;  // 4-cycles
  int cut_vertex = 0;
  std::vector<BouquetCycle> cycles;
};

BouquetProfile bouquet_profile(const FamilySpec& spec);

}  // namespace mbrg
