#pragma once

#include <optional>
#include <vector>

#include "mbrg/graph.hpp"
#include "mbrg/vertex_set.hpp"

namespace mbrg {

enum class TwinKind { Singleton, Clique, Independent };

struct TwinClass {
  VertexSet members;
  TwinKind kind = TwinKind::Singleton;
};

/// Twin equivalence classes, ordered by minimum member.
struct TwinPartition {
  std::vector<TwinClass> classes;
};

/// u and v are twins iff N(u) \ {v} == N(v) \ {u}.
bool are_twins(const Graph& g, int u, int v);

TwinPartition twin_classes(const Graph& g);

/// Sum over classes of (|Q| - 1): every resolving set misses at most one
/// vertex per class.
int twin_lower_bound(const TwinPartition& tp);

/// Spoiler's two-move forced win from twin structure: one class of size >= 4,
/// or two classes of size >= 3.
struct SpoilerQuickWin {
  std::vector<VertexSet> witness;  // the class (or two classes) that triggered
  std::vector<int> grab;           // vertices Spoiler should claim, in priority order
  int s_mb = 2;
  int s_mb_s = 2;
};

std::optional<SpoilerQuickWin> spoiler_quick_win(const TwinPartition& tp);

/// Spoiler's instant-win move in a live position: a still-unclaimed vertex of a
/// twin class from which Spoiler already holds one vertex, or the lowest
/// unclaimed vertex of a qualifying class. Empty when no quick win applies.
std::optional<int> twin_grab_move(const TwinPartition& tp, VertexSet resolver, VertexSet spoiler);

}  // namespace mbrg
