#include "starstab/bch.hpp"

#include <algorithm>
#include <numeric>

#include "starstab/error.hpp"
#include "starstab/iso.hpp"

namespace starstab {

Labelling Labelling::identity(int n) {
  Labelling l;
  l.slots.resize(static_cast<std::size_t>(n));
  std::iota(l.slots.begin(), l.slots.end(), 0);
  return l;
}

Labelling Labelling::from_labels(const std::vector<int>& labels) {
  Labelling l;
  l.slots.reserve(labels.size());
  for (int label : labels) l.slots.push_back(label - 1);
  return l;
}

std::vector<int> Labelling::labels() const {
  std::vector<int> out;
  out.reserve(slots.size());
  for (int s : slots) out.push_back(s + 1);
  return out;
}

namespace {

void check_labelling(const Labelling& labelling, int n) {
  if (static_cast<int>(labelling.slots.size()) != n) {
    fail(ErrorCode::invalid_parameter, "labelling has " + std::to_string(labelling.slots.size()) +
                                           " entries for a pattern of order " + std::to_string(n));
  }
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int s : labelling.slots) {
    if (s < 0 || s >= n || used[s]) {
      fail(ErrorCode::invalid_parameter,
           "labelling is not a bijection onto 1.." + std::to_string(n));
    }
    used[s] = true;
  }
}

}  // namespace

LabeledInstance bch_construct(const Graph& pattern, int k, const Labelling& labelling) {
  const int n = pattern.order();
  if (k < 0) fail(ErrorCode::invalid_parameter, "fault budget k must be non-negative");
  if (n + k > kMaxOrder) {
    fail(ErrorCode::capacity_exceeded, "constructed graph would have order " +
                                           std::to_string(n + k) + " > " +
                                           std::to_string(kMaxOrder));
  }
  check_labelling(labelling, n);

  std::vector<Row> rows(static_cast<std::size_t>(n + k), 0);
  const Row window = low_bits(k + 1);
  for (auto [a, b] : pattern.edges()) {
    const int i = labelling.slots[a];
    const int j = labelling.slots[b];
    const Row from_i = window << i;
    const Row from_j = window << j;
    for (int u = i; u <= i + k; ++u) rows[u] |= from_j;
    for (int v = j; v <= j + k; ++v) rows[v] |= from_i;
  }
  for (int v = 0; v < n + k; ++v) rows[v] &= ~bit(v);

  LabeledInstance instance{pattern, k, labelling, Graph::from_rows(std::move(rows)), {}};
  if (pattern.min_degree() == 0 && n > 0) {
    instance.warnings.emplace_back(
        "pattern has isolated vertices; stability under vertex addition/removal is not implied");
  }
  return instance;
}

Labelling default_star_labelling(int r) {
  if (r < 3) fail(ErrorCode::invalid_parameter, "star K_{1,r} requires r >= 3");
  return Labelling::identity(r + 1);
}

Graph star_stable(int r, int k) {
  if (r < 3) fail(ErrorCode::invalid_parameter, "star K_{1,r} requires r >= 3");
  if (k < 0) fail(ErrorCode::invalid_parameter, "fault budget k must be non-negative");
  if (r + k + 1 > kMaxOrder) {
    fail(ErrorCode::capacity_exceeded,
         "G(r,k) would have order " + std::to_string(r + k + 1) + " > " + std::to_string(kMaxOrder));
  }
  return conjunction(complete_graph(k + 1), empty_graph(r));
}

Embedding recovery_embedding(const LabeledInstance& instance, VertexSet faults) {
  const Row range = instance.result.vertex_mask();
  if (faults.bits() & ~range) {
    fail(ErrorCode::invalid_parameter, "fault set contains a vertex outside the constructed graph");
  }
  if (faults.size() > instance.k) {
    fail(ErrorCode::invalid_parameter, "fault set of size " + std::to_string(faults.size()) +
                                           " exceeds k = " + std::to_string(instance.k));
  }

  Embedding embedding;
  const int n = instance.pattern.order();
  embedding.image.reserve(static_cast<std::size_t>(n));
  Row available = range & ~faults.bits();
  for (int slot = 0; slot < n; ++slot) {
    const int chosen = std::countr_zero(available);
    embedding.image.push_back(chosen);
    available &= ~bit(chosen);
  }
  return embedding;
}

bool embedding_is_valid(const LabeledInstance& instance, VertexSet faults,
                        const Embedding& embedding) {
  const int n = instance.pattern.order();
  if (static_cast<int>(embedding.image.size()) != n) return false;
  Row used = 0;
  for (int slot = 0; slot < n; ++slot) {
    const int target = embedding.image[slot];
    if (target < 0 || target >= instance.result.order()) return false;
    if (faults.contains(target) || (used & bit(target))) return false;
    if (target < slot || target > slot + faults.size()) return false;
    used |= bit(target);
  }
  for (auto [a, b] : instance.pattern.edges()) {
    const int u = embedding.image[instance.labelling.slots[a]];
    const int v = embedding.image[instance.labelling.slots[b]];
    if (!instance.result.adjacent(u, v)) return false;
  }
  return true;
}

}  // namespace starstab
