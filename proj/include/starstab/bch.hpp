#pragma once

#include <string>
#include <vector>

#include "starstab/graph.hpp"

namespace starstab {

/// Bijection from pattern vertices to label slots. slots[v] is the 0-based
/// slot of pattern vertex v; the 1-based label shown to users is slot + 1.
struct Labelling {
  std::vector<int> slots;

  static Labelling identity(int n);
  /// From 1-based labels listed in pattern-vertex order.
  static Labelling from_labels(const std::vector<int>& labels);
  std::vector<int> labels() const;

  friend bool operator==(const Labelling&, const Labelling&) = default;
};

/// Output of the spare-vertex construction. Result vertex i carries label i+1.
struct LabeledInstance {
  Graph pattern;
  int k = 0;
  Labelling labelling;
  Graph result;
  std::vector<std::string> warnings;
};

/// image[s] is the result vertex hosting the pattern vertex in slot s.
struct Embedding {
  std::vector<int> image;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Labels the pattern by `labelling`, appends k spare vertices after the
/// pattern's labels, and joins every vertex of {i..i+k} to every vertex of
/// {j..j+k} for each pattern edge with slots i, j.
LabeledInstance bch_construct(const Graph& pattern, int k, const Labelling& labelling);

/// Star labelling with the center in the first slot.
Labelling default_star_labelling(int r);

/// K_{k+1} * complement(K_r): the construction's output for K_{1,r}, with the
/// k+1 total vertices first.
Graph star_stable(int r, int k);

/// Greedy recovery map for a fault set of at most k vertices: pattern slots
/// are taken in increasing order and each receives the smallest surviving
/// result vertex not yet used.
Embedding recovery_embedding(const LabeledInstance& instance, VertexSet faults);

/// Checks injectivity, avoidance of the fault set, the shift bound
/// slot <= image <= slot + |faults|, and that every pattern edge lands on a
/// result edge.
bool embedding_is_valid(const LabeledInstance& instance, VertexSet faults,
                        const Embedding& embedding);

}  // namespace starstab
