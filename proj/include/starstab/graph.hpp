#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace starstab {

inline constexpr int kMaxOrder = 64;
inline constexpr int kMaxGraph6Order = 62;

using Row = std::uint64_t;

constexpr Row bit(int v) noexcept { return Row{1} << v; }

constexpr Row low_bits(int n) noexcept {
  return n >= 64 ? ~Row{0} : (Row{1} << n) - 1;
}

/// Subset of the vertex range 0..63 of some host graph.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Row bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> members);
  explicit VertexSet(std::span<const int> members);

  constexpr Row bits() const noexcept { return bits_; }
  constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1U; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  VertexSet with(int v) const;

  /// Members in increasing order.
  std::vector<int> members() const;

  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  Row bits_ = 0;
};

/// Simple undirected graph of order at most 64 with one adjacency word per
/// vertex. Values are immutable; every transformation returns a new Graph.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on `order` vertices.
  explicit Graph(int order);

  static Graph from_edges(int order, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int order,
                          std::initializer_list<std::pair<int, int>> edges);
  /// Adjacency rows must be symmetric and loop-free.
  static Graph from_rows(std::vector<Row> rows);

  int order() const noexcept { return static_cast<int>(rows_.size()); }
  int size() const noexcept { return size_; }

  bool adjacent(int u, int v) const noexcept { return (rows_[u] >> v) & 1U; }
  Row neighbours(int v) const noexcept { return rows_[v]; }
  int degree(int v) const noexcept { return std::popcount(rows_[v]); }
  const std::vector<Row>& rows() const noexcept { return rows_; }

  int max_degree() const noexcept;
  int min_degree() const noexcept;
  /// Degrees sorted in non-increasing order.
  std::vector<int> degree_sequence() const;
  /// Edges (u, v) with u < v, ordered by u then v.
  std::vector<std::pair<int, int>> edges() const;
  Row vertex_mask() const noexcept { return low_bits(order()); }

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  /// Relabel so that old vertex v becomes vertex new_label[v].
  Graph permuted(std::span<const int> new_label) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Row> rows_;
  int size_ = 0;
};

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// K_{1,r} with the center at vertex 0; requires r >= 3.
Graph star(int r);

/// Join: disjoint union plus every edge between the two vertex sets. The
/// vertices of g2 follow those of g1.
Graph conjunction(const Graph& g1, const Graph& g2);

/// Disjoint union, vertices of g2 following those of g1.
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// The (n-2)-regular graph on even n: K_n minus the perfect matching
/// {0,1}, {2,3}, ...
Graph near_complete_regular(int n);

Graph complement(const Graph& g);

/// Induced subgraph on the kept vertices, reindexed in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet keep);

/// G - F with the surviving vertices reindexed contiguously.
Graph induced_delete(const Graph& g, VertexSet faults);

/// Appends isolated vertices until the order reaches n.
Graph pad_isolated(const Graph& g, int n);

std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

std::string export_dot(const Graph& g, int label_base = 0);

}  // namespace starstab
