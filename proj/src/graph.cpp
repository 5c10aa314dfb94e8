#include "starstab/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "starstab/error.hpp"

namespace starstab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_parameter:
      return "invalid-parameter";
    case ErrorCode::capacity_exceeded:
      return "capacity-exceeded";
    case ErrorCode::parse_error:
      return "parse-error";
    case ErrorCode::schema_mismatch:
      return "schema-mismatch";
    case ErrorCode::io_error:
      return "io-error";
  }
  return "unknown";
}

namespace {

void check_order(int n) {
  if (n < 0) fail(ErrorCode::invalid_parameter, "graph order must be non-negative");
  if (n > kMaxOrder) {
    fail(ErrorCode::capacity_exceeded,
         "graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  }
}

void check_vertex(int v, int n) {
  if (v < 0 || v >= n) {
    fail(ErrorCode::invalid_parameter,
         "vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> members)
    : VertexSet(std::span<const int>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::span<const int> members) {
  for (int v : members) {
    check_vertex(v, kMaxOrder);
    bits_ |= bit(v);
  }
}

VertexSet VertexSet::with(int v) const {
  check_vertex(v, kMaxOrder);
  return VertexSet(bits_ | bit(v));
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (Row b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

Graph::Graph(int order) {
  check_order(order);
  rows_.assign(static_cast<std::size_t>(order), 0);
}

Graph Graph::from_edges(int order, std::span<const std::pair<int, int>> edges) {
  Graph g(order);
  for (auto [u, v] : edges) {
    check_vertex(u, order);
    check_vertex(v, order);
    if (u == v) fail(ErrorCode::invalid_parameter, "loops are not allowed");
    if (!g.adjacent(u, v)) {
      g.rows_[u] |= bit(v);
      g.rows_[v] |= bit(u);
      ++g.size_;
    }
  }
  return g;
}

Graph Graph::from_edges(int order, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(order, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(std::vector<Row> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  Graph g;
  int degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~low_bits(n)) fail(ErrorCode::invalid_parameter, "adjacency row out of range");
    if (rows[v] & bit(v)) fail(ErrorCode::invalid_parameter, "loops are not allowed");
    for (Row b = rows[v]; b != 0; b &= b - 1) {
      const int u = std::countr_zero(b);
      if (!((rows[u] >> v) & 1U)) fail(ErrorCode::invalid_parameter, "adjacency is not symmetric");
    }
    degree_sum += std::popcount(rows[v]);
  }
  g.rows_ = std::move(rows);
  g.size_ = degree_sum / 2;
  return g;
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (Row r : rows_) best = std::max(best, std::popcount(r));
  return best;
}

int Graph::min_degree() const noexcept {
  if (rows_.empty()) return 0;
  int best = kMaxOrder;
  for (Row r : rows_) best = std::min(best, std::popcount(r));
  return best;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out;
  out.reserve(rows_.size());
  for (Row r : rows_) out.push_back(std::popcount(r));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int u = 0; u < order(); ++u) {
    for (Row b = rows_[u] & ~low_bits(u + 1); b != 0; b &= b - 1) {
      out.emplace_back(u, std::countr_zero(b));
    }
  }
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(u, order());
  check_vertex(v, order());
  if (u == v) fail(ErrorCode::invalid_parameter, "loops are not allowed");
  Graph g = *this;
  if (!g.adjacent(u, v)) {
    g.rows_[u] |= bit(v);
    g.rows_[v] |= bit(u);
    ++g.size_;
  }
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check_vertex(u, order());
  check_vertex(v, order());
  Graph g = *this;
  if (g.adjacent(u, v)) {
    g.rows_[u] &= ~bit(v);
    g.rows_[v] &= ~bit(u);
    --g.size_;
  }
  return g;
}

Graph Graph::permuted(std::span<const int> new_label) const {
  const int n = order();
  if (static_cast<int>(new_label.size()) != n) {
    fail(ErrorCode::invalid_parameter, "permutation length does not match graph order");
  }
  Row seen = 0;
  for (int v : new_label) {
    check_vertex(v, n);
    seen |= bit(v);
  }
  if (seen != low_bits(n)) fail(ErrorCode::invalid_parameter, "relabelling is not a permutation");

  Graph g(n);
  g.size_ = size_;
  for (int v = 0; v < n; ++v) {
    Row mapped = 0;
    for (Row b = rows_[v]; b != 0; b &= b - 1) mapped |= bit(new_label[std::countr_zero(b)]);
    g.rows_[new_label[v]] = mapped;
  }
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  check_order(n);
  std::vector<Row> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) rows[v] = low_bits(n) & ~bit(v);
  return Graph::from_rows(std::move(rows));
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) fail(ErrorCode::invalid_parameter, "a cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph star(int r) {
  if (r < 3) fail(ErrorCode::invalid_parameter, "star K_{1,r} requires r >= 3");
  check_order(r + 1);
  std::vector<std::pair<int, int>> edges;
  for (int leaf = 1; leaf <= r; ++leaf) edges.emplace_back(0, leaf);
  return Graph::from_edges(r + 1, edges);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n = n1 + g2.order();
  check_order(n);
  std::vector<Row> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n1; ++v) rows[v] = g1.neighbours(v);
  for (int v = 0; v < g2.order(); ++v) rows[n1 + v] = g2.neighbours(v) << n1;
  return Graph::from_rows(std::move(rows));
}

Graph conjunction(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n = n1 + g2.order();
  check_order(n);
  std::vector<Row> rows(static_cast<std::size_t>(n));
  const Row first = low_bits(n1);
  const Row second = low_bits(n) & ~first;
  for (int v = 0; v < n1; ++v) rows[v] = g1.neighbours(v) | second;
  for (int v = 0; v < g2.order(); ++v) rows[n1 + v] = (g2.neighbours(v) << n1) | first;
  return Graph::from_rows(std::move(rows));
}

Graph near_complete_regular(int n) {
  if (n < 2 || n % 2 != 0) {
    fail(ErrorCode::invalid_parameter,
         "K_n^{n-2} exists only for even n >= 2, got n = " + std::to_string(n));
  }
  check_order(n);
  std::vector<Row> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) rows[v] = low_bits(n) & ~bit(v) & ~bit(v ^ 1);
  return Graph::from_rows(std::move(rows));
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<Row> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) rows[v] = ~g.neighbours(v) & low_bits(n) & ~bit(v);
  return Graph::from_rows(std::move(rows));
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  if (keep.bits() & ~g.vertex_mask()) {
    fail(ErrorCode::invalid_parameter, "vertex set exceeds the graph's vertex range");
  }
  const std::vector<int> kept = keep.members();
  const int m = static_cast<int>(kept.size());
  std::vector<Row> rows(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const Row nb = g.neighbours(kept[i]);
    for (int j = 0; j < m; ++j) {
      if ((nb >> kept[j]) & 1U) rows[i] |= bit(j);
    }
  }
  return Graph::from_rows(std::move(rows));
}

Graph induced_delete(const Graph& g, VertexSet faults) {
  if (faults.bits() & ~g.vertex_mask()) {
    fail(ErrorCode::invalid_parameter, "fault set exceeds the graph's vertex range");
  }
  return induced_subgraph(g, VertexSet(g.vertex_mask() & ~faults.bits()));
}

Graph pad_isolated(const Graph& g, int n) {
  if (n < g.order()) fail(ErrorCode::invalid_parameter, "cannot pad to a smaller order");
  return disjoint_union(g, Graph(n - g.order()));
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    fail(ErrorCode::capacity_exceeded, "graph6 output supports order <= 62");
  }
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph decode_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) fail(ErrorCode::parse_error, "graph6: empty input");

  const int header = static_cast<unsigned char>(text[0]);
  if (header < 63 || header > 63 + kMaxGraph6Order) {
    fail(ErrorCode::parse_error, "graph6: unsupported header byte " + std::to_string(header));
  }
  const int n = header - 63;
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t groups = (pairs + 5) / 6;
  if (text.size() != 1 + groups) {
    fail(ErrorCode::parse_error, "graph6: expected " + std::to_string(groups) +
                                     " data bytes for order " + std::to_string(n) + ", got " +
                                     std::to_string(text.size() - 1));
  }

  std::vector<int> bits;
  bits.reserve(groups * 6);
  for (std::size_t i = 1; i < text.size(); ++i) {
    const int value = static_cast<unsigned char>(text[i]) - 63;
    if (value < 0 || value > 63) fail(ErrorCode::parse_error, "graph6: byte outside 63..126");
    for (int shift = 5; shift >= 0; --shift) bits.push_back((value >> shift) & 1);
  }
  for (std::size_t i = pairs; i < bits.size(); ++i) {
    if (bits[i] != 0) fail(ErrorCode::parse_error, "graph6: non-zero padding bits");
  }

  std::vector<std::pair<int, int>> edges;
  std::size_t pos = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits[pos++]) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

std::string export_dot(const Graph& g, int label_base) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v + label_base << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u + label_base << " -- " << v + label_base << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace starstab
