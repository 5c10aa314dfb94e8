#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "starstab/graph.hpp"

namespace starstab {

struct StabilityVerdict {
  bool stable = false;
  /// Lexicographically smallest fault set leaving no copy of the pattern;
  /// present exactly when stable is false.
  std::optional<VertexSet> witness;
  std::uint64_t checked_fault_sets = 0;
};

/// Subgraph (not induced) containment by backtracking.
bool contains_subgraph(const Graph& host, const Graph& pattern);

/// (K_{1,r}; k)-vertex stability: every k-vertex deletion leaves a vertex of
/// degree at least r.
StabilityVerdict is_star_stable(const Graph& g, int r, int k);

/// (H; k)-vertex stability for an arbitrary pattern, by exhaustive fault sets
/// and subgraph search. Intended for desk-scale inputs.
StabilityVerdict is_stable_general(const Graph& g, const Graph& pattern, int k);

/// True when the complement has too few edges to leave every vertex of some
/// (r+1)-subset with a non-neighbour, which proves star stability without
/// enumerating fault sets. False means "undecided", not "unstable".
bool sparse_complement_proves_stable(const Graph& g, int r, int k);

enum class LowDegreeClass {
  not_applicable,
  unique_regular_survivor,
  unstable,
};

std::string_view to_string(LowDegreeClass c) noexcept;

/// Classifies a graph of order r+k+1 with no total vertex: for even r and
/// odd k the only stable one is K_{r+k+1}^{r+k-1}, otherwise none is stable.
LowDegreeClass classify_low_degree(const Graph& g, int r, int k);

}  // namespace starstab
