#pragma once

#include "fullgroup/int_matrix.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fullgroup {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct EdgeSpec {
  std::string id;
  std::string src;
  std::string dst;
};

/// Finite directed multigraph. Vertex and edge ids are opaque strings; every
/// ordering in the library follows declaration order.
class Graph {
 public:
  /// Builds the graph; throws InvalidGraph for unknown endpoints or duplicate ids.
  /// Graph invariants (irreducible, not a permutation) are checked by validate_graph.
  Graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

  /// Vertices named by `vertex_names` (default v0, v1, ...); edges named e0, e1, ...
  /// in row-major order of the matrix.
  static Graph from_matrix(const std::vector<std::vector<int>>& matrix,
                           std::vector<std::string> vertex_names = {});

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return sources_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const std::string& edge_name(EdgeId e) const { return edge_names_.at(e); }
  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  VertexId source(EdgeId e) const { return sources_[e]; }
  VertexId target(EdgeId e) const { return targets_[e]; }
  /// Outgoing edges of v in declaration order.
  const std::vector<EdgeId>& out_edges(VertexId v) const { return out_[v]; }
  const std::vector<EdgeId>& in_edges(VertexId v) const { return in_[v]; }

  /// M(x, y) = number of edges x -> y.
  IntMatrix adjacency() const;
  IntMatrix adjacency_transpose() const { return adjacency().transpose(); }

  /// True when every edge name is a single character (words then print unseparated).
  bool compact_edge_names() const noexcept { return compact_names_; }

 private:
  std::vector<std::string> vertices_;
  std::vector<std::string> edge_names_;
  std::vector<VertexId> sources_;
  std::vector<VertexId> targets_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
  bool compact_names_ = true;
};

using GraphPtr = std::shared_ptr<const Graph>;

/// Throws NotIrreducible, IsPermutation, or MatrixEdgeMismatch. The optional
/// matrix is a declared adjacency matrix that must agree with the edge counts.
void validate_graph(const Graph& g, const std::optional<IntMatrix>& declared_matrix = std::nullopt);

struct PeriodInfo {
  std::size_t period = 0;
  bool primitive = false;
  /// Least m with every entry of M^m at least 3 (primitive graphs only).
  std::optional<std::size_t> mixing_exponent;
};

PeriodInfo period_and_primitivity(const Graph& g);

/// Admissible edge path with an explicit initial vertex, so that the empty
/// word at a vertex denotes the set of paths leaving that vertex.
struct Word {
  VertexId anchor = 0;
  std::vector<EdgeId> edges;

  std::size_t length() const noexcept { return edges.size(); }
  bool empty() const noexcept { return edges.empty(); }
};

/// Canonical order: length, then anchor, then edges lexicographically.
std::strong_ordering canonical_compare(const Word& a, const Word& b);
/// Tree order: anchor, then edges lexicographically with prefixes first.
std::strong_ordering tree_compare(const Word& a, const Word& b);

inline bool operator==(const Word& a, const Word& b) {
  return a.anchor == b.anchor && a.edges == b.edges;
}

struct CanonicalLess {
  bool operator()(const Word& a, const Word& b) const { return canonical_compare(a, b) < 0; }
};
struct TreeLess {
  bool operator()(const Word& a, const Word& b) const { return tree_compare(a, b) < 0; }
};

// Word toolkit. Operands are assumed admissible for the given graph.
Word make_word(const Graph& g, VertexId anchor, std::vector<EdgeId> edges);  // checks admissibility
Word empty_word(VertexId anchor);
/// Word spelled by edge names; anchor is the source of the first edge.
Word word_from_names(const Graph& g, const std::vector<std::string>& names);
bool is_admissible(const Graph& g, const Word& w);
VertexId initial_vertex(const Word& w);
VertexId terminal_vertex(const Graph& g, const Word& w);
/// Throws NotComposable unless t(a) == i(b).
Word concat(const Graph& g, const Word& a, const Word& b);
Word append(const Graph& g, const Word& a, EdgeId e);
bool is_prefix(const Word& prefix, const Word& w);
/// Word with the last edge dropped; the parent of a length-one word is the empty word at its anchor.
Word parent(const Word& w);
/// w e for every edge e leaving t(w).
std::vector<Word> children(const Graph& g, const Word& w);
/// All admissible words of the given length, optionally constrained at either end,
/// in canonical order.
std::vector<Word> enumerate_words(const Graph& g, std::size_t length,
                                  std::optional<VertexId> start = std::nullopt,
                                  std::optional<VertexId> end = std::nullopt);
/// Shortest word of length >= 1 from `from` to `to` (BFS in edge declaration order).
Word shortest_path(const Graph& g, VertexId from, VertexId to);
/// Shortest word of length >= 0 from `from` to `to`.
Word shortest_connection(const Graph& g, VertexId from, VertexId to);
/// Some admissible word of exactly the given length ending at `to`.
Word word_of_length_ending_at(const Graph& g, std::size_t length, VertexId to);

/// Concatenated edge names (dot-separated when names are longer than one character);
/// the empty word prints as "(anchor)".
std::string format_word(const Graph& g, const Word& w);

}  // namespace fullgroup
