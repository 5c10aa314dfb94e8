#pragma once

#include <compare>
#include <string>
#include <vector>

#include "starstab/graph.hpp"

namespace starstab {

/// graph6 text of the canonically relabelled graph. Two graphs share a code
/// exactly when they are isomorphic.
struct CanonicalCode {
  std::string graph6;

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Permutation (old vertex -> new vertex) taking g to its canonical
/// representative.
///
/// The denser of g and its complement is relabelled through the sparser one.
/// The sparse side is split into connected components, each component is
/// labelled by individualization-refinement with exhaustive backtracking over
/// the target cell (only interchangeable twin vertices are skipped), and the
/// components are laid out in sorted order of their labelled forms.
std::vector<int> canonical_labelling(const Graph& g);

Graph canonical_graph(const Graph& g);
CanonicalCode canonical_form(const Graph& g);

/// Rejects on order, size and degree sequence before comparing codes.
bool is_isomorphic(const Graph& g1, const Graph& g2);

/// Vertices of degree at least one.
VertexSet support(const Graph& g);

}  // namespace starstab
