#include "starstab/iso.hpp"

#include <algorithm>
#include <numeric>

namespace starstab {

namespace {

using Cells = std::vector<std::vector<int>>;

bool are_twins(const Graph& g, int u, int v) {
  return (g.neighbours(u) & ~bit(v)) == (g.neighbours(v) & ~bit(u));
}

// Splits every cell by the vector of neighbour counts into all current cells
// until the ordered partition is equitable. Fragments keep the position of
// their parent cell and are ordered by increasing count vector, so the result
// depends only on the graph and the incoming ordered partition.
void refine(const Graph& g, Cells& cells) {
  const int n = g.order();
  std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
  for (;;) {
    std::vector<Row> masks;
    masks.reserve(cells.size());
    for (const auto& cell : cells) {
      Row m = 0;
      for (int v : cell) m |= bit(v);
      masks.push_back(m);
    }

    Cells next;
    next.reserve(cells.size());
    bool split = false;
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      for (int v : cell) {
        auto& sig = signature[v];
        sig.clear();
        for (Row m : masks) sig.push_back(std::popcount(g.neighbours(v) & m));
      }
      std::vector<int> sorted = cell;
      std::stable_sort(sorted.begin(), sorted.end(),
                       [&](int a, int b) { return signature[a] < signature[b]; });
      std::size_t begin = 0;
      while (begin < sorted.size()) {
        std::size_t end = begin + 1;
        while (end < sorted.size() && signature[sorted[end]] == signature[sorted[begin]]) ++end;
        next.emplace_back(sorted.begin() + static_cast<std::ptrdiff_t>(begin),
                          sorted.begin() + static_cast<std::ptrdiff_t>(end));
        begin = end;
      }
      if (next.back().size() != cell.size()) split = true;
    }
    cells = std::move(next);
    if (!split) return;
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {}

  std::vector<int> run() {
    Cells cells;
    std::vector<int> all(static_cast<std::size_t>(g_.order()));
    std::iota(all.begin(), all.end(), 0);
    cells.push_back(std::move(all));
    search(std::move(cells));
    return best_labelling_;
  }

  const std::vector<Row>& best_rows() const { return best_rows_; }

 private:
  void search(Cells cells) {
    refine(g_, cells);
    const auto target = std::find_if(cells.begin(), cells.end(),
                                     [](const auto& cell) { return cell.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const auto target_index = static_cast<std::size_t>(target - cells.begin());
    const std::vector<int> members = *target;
    std::vector<int> tried;
    for (int v : members) {
      // Transposing twins is an automorphism fixing every individualized
      // vertex, so both subtrees yield the same set of leaves.
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return are_twins(g_, u, v); })) {
        continue;
      }
      tried.push_back(v);

      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target_index) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        rest.reserve(members.size() - 1);
        for (int u : members) {
          if (u != v) rest.push_back(u);
        }
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  void leaf(const Cells& cells) {
    std::vector<int> labelling(static_cast<std::size_t>(g_.order()));
    for (std::size_t i = 0; i < cells.size(); ++i) labelling[cells[i][0]] = static_cast<int>(i);
    Graph relabelled = g_.permuted(labelling);
    if (best_rows_.empty() || relabelled.rows() < best_rows_) {
      best_rows_ = relabelled.rows();
      best_labelling_ = std::move(labelling);
    }
  }

  const Graph& g_;
  std::vector<Row> best_rows_;
  std::vector<int> best_labelling_;
};

std::vector<Row> connected_components(const Graph& g) {
  std::vector<Row> out;
  Row unseen = g.vertex_mask();
  while (unseen != 0) {
    Row component = bit(std::countr_zero(unseen));
    Row frontier = component;
    while (frontier != 0) {
      Row grown = 0;
      for (Row b = frontier; b != 0; b &= b - 1) grown |= g.neighbours(std::countr_zero(b));
      frontier = grown & ~component;
      component |= grown;
    }
    out.push_back(component);
    unseen &= ~component;
  }
  return out;
}

struct LabelledComponent {
  std::vector<int> vertices;
  std::vector<int> labelling;
  std::vector<Row> rows;
};

}  // namespace

std::vector<int> canonical_labelling(const Graph& g) {
  const int n = g.order();
  const long pairs = static_cast<long>(n) * (n - 1) / 2;
  const Graph sparse = 2L * g.size() > pairs ? complement(g) : g;

  std::vector<LabelledComponent> components;
  for (Row mask : connected_components(sparse)) {
    LabelledComponent c;
    c.vertices = VertexSet(mask).members();
    if (c.vertices.size() == 1) {
      c.labelling = {0};
      c.rows = {0};
    } else {
      const Graph part = induced_subgraph(sparse, VertexSet(mask));
      CanonicalSearch search(part);
      c.labelling = search.run();
      c.rows = search.best_rows();
    }
    components.push_back(std::move(c));
  }
  std::stable_sort(components.begin(), components.end(), [](const auto& a, const auto& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.rows < b.rows;
  });

  std::vector<int> labelling(static_cast<std::size_t>(n));
  int offset = 0;
  for (const auto& c : components) {
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      labelling[c.vertices[i]] = offset + c.labelling[i];
    }
    offset += static_cast<int>(c.vertices.size());
  }
  return labelling;
}

Graph canonical_graph(const Graph& g) { return g.permuted(canonical_labelling(g)); }

CanonicalCode canonical_form(const Graph& g) { return {encode_graph6(canonical_graph(g))}; }

bool is_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order() || g1.size() != g2.size()) return false;
  if (g1.degree_sequence() != g2.degree_sequence()) return false;
  return canonical_form(g1) == canonical_form(g2);
}

VertexSet support(const Graph& g) {
  Row bits = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.neighbours(v) != 0) bits |= bit(v);
  }
  return VertexSet(bits);
}

}  // namespace starstab
