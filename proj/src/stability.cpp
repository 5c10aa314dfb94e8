#include "starstab/stability.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "starstab/error.hpp"
#include "starstab/iso.hpp"

namespace starstab {

namespace {

void check_star_params(int r, int k) {
  if (r < 3) fail(ErrorCode::invalid_parameter, "star K_{1,r} requires r >= 3");
  if (k < 0) fail(ErrorCode::invalid_parameter, "fault budget k must be non-negative");
}

// k-subsets of 0..n-1 in lexicographic order of their sorted member lists.
class Combinations {
 public:
  Combinations(int n, int k) : n_(n), index_(static_cast<std::size_t>(k)) {
    std::iota(index_.begin(), index_.end(), 0);
  }

  Row mask() const {
    Row m = 0;
    for (int v : index_) m |= bit(v);
    return m;
  }

  bool advance() {
    const int k = static_cast<int>(index_.size());
    int i = k - 1;
    while (i >= 0 && index_[i] == n_ - k + i) --i;
    if (i < 0) return false;
    ++index_[i];
    for (int j = i + 1; j < k; ++j) index_[j] = index_[j - 1] + 1;
    return true;
  }

 private:
  int n_;
  std::vector<int> index_;
};

// Walks every k-subset in lexicographic order and stops at the first one for
// which `survives` is false.
template <class Survives>
StabilityVerdict scan_fault_sets(int n, int k, Survives&& survives) {
  StabilityVerdict verdict;
  Combinations faults(n, k);
  do {
    ++verdict.checked_fault_sets;
    const Row f = faults.mask();
    if (!survives(f)) {
      verdict.stable = false;
      verdict.witness = VertexSet(f);
      return verdict;
    }
  } while (faults.advance());
  verdict.stable = true;
  return verdict;
}

StabilityVerdict too_small(int n, int k) {
  StabilityVerdict verdict;
  verdict.stable = false;
  verdict.witness = VertexSet(low_bits(std::min(n, k)));
  verdict.checked_fault_sets = 1;
  return verdict;
}

class SubgraphMatcher {
 public:
  SubgraphMatcher(const Graph& host, const Graph& pattern)
      : host_(host), pattern_(pattern), image_(static_cast<std::size_t>(pattern.order()), -1) {
    // Place high-degree pattern vertices first, preferring those already
    // attached to placed ones so adjacency constraints prune early.
    const int p = pattern.order();
    Row placed = 0;
    for (int step = 0; step < p; ++step) {
      int best = -1;
      int best_links = -1;
      for (int v = 0; v < p; ++v) {
        if (placed & bit(v)) continue;
        const int links = std::popcount(pattern.neighbours(v) & placed);
        if (best < 0 || links > best_links ||
            (links == best_links && pattern.degree(v) > pattern.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      order_.push_back(best);
      placed |= bit(best);
    }
  }

  bool run() { return extend(0, 0); }

 private:
  bool extend(std::size_t depth, Row used) {
    if (depth == order_.size()) return true;
    const int p = order_[depth];
    Row candidates = host_.vertex_mask() & ~used;
    for (std::size_t d = 0; d < depth; ++d) {
      const int q = order_[d];
      if (pattern_.adjacent(p, q)) candidates &= host_.neighbours(image_[q]);
    }
    const int need = pattern_.degree(p);
    for (Row b = candidates; b != 0; b &= b - 1) {
      const int h = std::countr_zero(b);
      if (host_.degree(h) < need) continue;
      image_[p] = h;
      if (extend(depth + 1, used | bit(h))) return true;
    }
    image_[p] = -1;
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<int> order_;
  std::vector<int> image_;
};

}  // namespace

std::string_view to_string(LowDegreeClass c) noexcept {
  switch (c) {
    case LowDegreeClass::not_applicable:
      return "not-applicable";
    case LowDegreeClass::unique_regular_survivor:
      return "the-unique-regular-survivor";
    case LowDegreeClass::unstable:
      return "unstable";
  }
  return "unknown";
}

bool contains_subgraph(const Graph& host, const Graph& pattern) {
  if (pattern.order() > host.order() || pattern.size() > host.size()) return false;
  if (pattern.order() == 0) return true;
  return SubgraphMatcher(host, pattern).run();
}

StabilityVerdict is_star_stable(const Graph& g, int r, int k) {
  check_star_params(r, k);
  const int n = g.order();
  if (n < r + 1 + k) return too_small(n, k);
  return scan_fault_sets(n, k, [&](Row faults) {
    const Row alive = g.vertex_mask() & ~faults;
    for (Row b = alive; b != 0; b &= b - 1) {
      if (std::popcount(g.neighbours(std::countr_zero(b)) & alive) >= r) return true;
    }
    return false;
  });
}

StabilityVerdict is_stable_general(const Graph& g, const Graph& pattern, int k) {
  if (k < 0) fail(ErrorCode::invalid_parameter, "fault budget k must be non-negative");
  const int n = g.order();
  if (n - k < pattern.order()) return too_small(n, k);
  return scan_fault_sets(n, k, [&](Row faults) {
    return contains_subgraph(induced_delete(g, VertexSet(faults)), pattern);
  });
}

bool sparse_complement_proves_stable(const Graph& g, int r, int k) {
  check_star_params(r, k);
  const int n = g.order();
  if (n < r + 1 + k) return false;
  const long missing = static_cast<long>(n) * (n - 1) / 2 - g.size();
  return missing < (r + 2) / 2;
}

LowDegreeClass classify_low_degree(const Graph& g, int r, int k) {
  check_star_params(r, k);
  if (g.order() != r + k + 1) {
    fail(ErrorCode::invalid_parameter, "classification applies to order r+k+1 = " +
                                           std::to_string(r + k + 1) + ", got " +
                                           std::to_string(g.order()));
  }
  if (g.max_degree() == r + k) return LowDegreeClass::not_applicable;
  if (r % 2 == 0 && k % 2 == 1 && is_isomorphic(g, near_complete_regular(r + k + 1))) {
    return LowDegreeClass::unique_regular_survivor;
  }
  return LowDegreeClass::unstable;
}

}  // namespace starstab
