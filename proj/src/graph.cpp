#include "fullgroup/graph.hpp"

#include "fullgroup/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace fullgroup {

Graph::Graph(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(Errc::InvalidGraph, "graph has no vertices");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_index_.emplace(vertices_[i], static_cast<VertexId>(i)).second)
      throw Error(Errc::InvalidGraph, "duplicate vertex id '" + vertices_[i] + "'");
  }
  out_.resize(vertices_.size());
  in_.resize(vertices_.size());
  for (const auto& spec : edges) {
    auto s = vertex_index_.find(spec.src);
    auto t = vertex_index_.find(spec.dst);
    if (s == vertex_index_.end() || t == vertex_index_.end())
      throw Error(Errc::InvalidGraph, "edge '" + spec.id + "' has an unknown endpoint");
    const auto id = static_cast<EdgeId>(edge_names_.size());
    if (!edge_index_.emplace(spec.id, id).second)
      throw Error(Errc::InvalidGraph, "duplicate edge id '" + spec.id + "'");
    edge_names_.push_back(spec.id);
    sources_.push_back(s->second);
    targets_.push_back(t->second);
    out_[s->second].push_back(id);
    in_[t->second].push_back(id);
    if (spec.id.size() != 1) compact_names_ = false;
  }
}

Graph Graph::from_matrix(const std::vector<std::vector<int>>& matrix,
                         std::vector<std::string> vertex_names) {
  const std::size_t n = matrix.size();
  if (vertex_names.empty())
    for (std::size_t i = 0; i < n; ++i) vertex_names.push_back("v" + std::to_string(i));
  if (vertex_names.size() != n) throw Error(Errc::InvalidGraph, "vertex name count mismatch");
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw Error(Errc::InvalidGraph, "adjacency matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix[i][j] < 0) throw Error(Errc::InvalidGraph, "negative adjacency entry");
      for (int k = 0; k < matrix[i][j]; ++k)
        edges.push_back({"e" + std::to_string(edges.size()), vertex_names[i], vertex_names[j]});
    }
  }
  return Graph(std::move(vertex_names), edges);
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

IntMatrix Graph::adjacency() const {
  IntMatrix m(vertex_count(), vertex_count());
  for (EdgeId e = 0; e < edge_count(); ++e) m(sources_[e], targets_[e]) += 1;
  return m;
}

namespace {

std::vector<bool> reachable(const Graph& g, VertexId start, bool forward) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexId> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    const auto& edges = forward ? g.out_edges(v) : g.in_edges(v);
    for (EdgeId e : edges) {
      VertexId w = forward ? g.target(e) : g.source(e);
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

void validate_graph(const Graph& g, const std::optional<IntMatrix>& declared_matrix) {
  if (declared_matrix && *declared_matrix != g.adjacency())
    throw Error(Errc::MatrixEdgeMismatch, "declared matrix " + declared_matrix->to_string() +
                                              " differs from edge counts " +
                                              g.adjacency().to_string());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.out_edges(v).empty() || g.in_edges(v).empty())
      throw Error(Errc::NotIrreducible, "vertex '" + g.vertex_name(v) + "' is a source or sink");
  const auto fwd = reachable(g, 0, true);
  const auto bwd = reachable(g, 0, false);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!fwd[v] || !bwd[v])
      throw Error(Errc::NotIrreducible, "graph is not strongly connected at '" +
                                            g.vertex_name(v) + "'");
  bool permutation = true;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.out_edges(v).size() != 1 || g.in_edges(v).size() != 1) permutation = false;
  if (permutation) throw Error(Errc::IsPermutation, "adjacency matrix is a permutation matrix");
}

PeriodInfo period_and_primitivity(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<long> level(n, -1);
  std::deque<VertexId> queue{0};
  level[0] = 0;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : g.out_edges(v)) {
      VertexId w = g.target(e);
      if (level[w] < 0) {
        level[w] = level[v] + 1;
        queue.push_back(w);
      }
    }
  }
  long period = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const long u = level[g.source(e)];
    const long w = level[g.target(e)];
    if (u < 0 || w < 0) continue;
    period = std::gcd(period, std::abs(u + 1 - w));
  }
  PeriodInfo info;
  info.period = static_cast<std::size_t>(period);
  info.primitive = period == 1;
  if (!info.primitive) return info;

  // Powers saturated at 3: only the threshold matters.
  auto saturate = [](long x) { return std::min<long>(x, 3); };
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto& x = m[g.source(e)][g.target(e)];
    x = saturate(x + 1);
  }
  std::vector<std::vector<long>> p = m;
  const std::size_t limit = 3 * ((n - 1) * (n - 1) + 1) + 3;
  for (std::size_t k = 1; k <= limit; ++k) {
    bool all = true;
    for (const auto& row : p)
      for (long x : row)
        if (x < 3) all = false;
    if (all) {
      info.mixing_exponent = k;
      break;
    }
    std::vector<std::vector<long>> q(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (p[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) q[i][j] = saturate(q[i][j] + p[i][l] * m[l][j]);
      }
    p = std::move(q);
  }
  return info;
}

std::strong_ordering canonical_compare(const Word& a, const Word& b) {
  if (auto c = a.edges.size() <=> b.edges.size(); c != 0) return c;
  if (auto c = a.anchor <=> b.anchor; c != 0) return c;
  return a.edges <=> b.edges;
}

std::strong_ordering tree_compare(const Word& a, const Word& b) {
  if (auto c = a.anchor <=> b.anchor; c != 0) return c;
  return a.edges <=> b.edges;
}

bool is_admissible(const Graph& g, const Word& w) {
  if (w.anchor >= g.vertex_count()) return false;
  VertexId at = w.anchor;
  for (EdgeId e : w.edges) {
    if (e >= g.edge_count() || g.source(e) != at) return false;
    at = g.target(e);
  }
  return true;
}

Word make_word(const Graph& g, VertexId anchor, std::vector<EdgeId> edges) {
  Word w{anchor, std::move(edges)};
  if (!is_admissible(g, w)) throw Error(Errc::InvalidWord, "word is not admissible");
  return w;
}

Word empty_word(VertexId anchor) { return Word{anchor, {}}; }

Word word_from_names(const Graph& g, const std::vector<std::string>& names) {
  if (names.empty()) throw Error(Errc::InvalidWord, "an empty word needs an explicit anchor");
  std::vector<EdgeId> edges;
  for (const auto& n : names) {
    auto e = g.find_edge(n);
    if (!e) throw Error(Errc::InvalidWord, "unknown edge '" + n + "'");
    edges.push_back(*e);
  }
  const VertexId anchor = g.source(edges.front());
  return make_word(g, anchor, std::move(edges));
}

VertexId initial_vertex(const Word& w) { return w.anchor; }

VertexId terminal_vertex(const Graph& g, const Word& w) {
  return w.edges.empty() ? w.anchor : g.target(w.edges.back());
}

Word concat(const Graph& g, const Word& a, const Word& b) {
  if (terminal_vertex(g, a) != b.anchor)
    throw Error(Errc::NotComposable, format_word(g, a) + " does not end where " +
                                         format_word(g, b) + " starts");
  Word w = a;
  w.edges.insert(w.edges.end(), b.edges.begin(), b.edges.end());
  return w;
}

Word append(const Graph& g, const Word& a, EdgeId e) {
  if (terminal_vertex(g, a) != g.source(e))
    throw Error(Errc::NotComposable, "edge '" + g.edge_name(e) + "' cannot follow " +
                                         format_word(g, a));
  Word w = a;
  w.edges.push_back(e);
  return w;
}

bool is_prefix(const Word& prefix, const Word& w) {
  if (prefix.anchor != w.anchor || prefix.edges.size() > w.edges.size()) return false;
  return std::equal(prefix.edges.begin(), prefix.edges.end(), w.edges.begin());
}

Word parent(const Word& w) {
  Word p = w;
  if (!p.edges.empty()) p.edges.pop_back();
  return p;
}

std::vector<Word> children(const Graph& g, const Word& w) {
  std::vector<Word> out;
  for (EdgeId e : g.out_edges(terminal_vertex(g, w))) {
    Word c = w;
    c.edges.push_back(e);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Word> enumerate_words(const Graph& g, std::size_t length, std::optional<VertexId> start,
                                  std::optional<VertexId> end) {
  std::vector<Word> layer;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!start || *start == v) layer.push_back(empty_word(v));
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (auto& c : children(g, w)) next.push_back(std::move(c));
    layer = std::move(next);
  }
  if (end)
    std::erase_if(layer, [&](const Word& w) { return terminal_vertex(g, w) != *end; });
  std::sort(layer.begin(), layer.end(), CanonicalLess{});
  return layer;
}

Word shortest_path(const Graph& g, VertexId from, VertexId to) {
  // BFS over (vertex) with the first step forced, so that from == to yields a cycle.
  std::vector<std::optional<EdgeId>> via(g.vertex_count());
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<VertexId> queue;
  for (EdgeId e : g.out_edges(from)) {
    VertexId w = g.target(e);
    if (!seen[w]) {
      seen[w] = true;
      via[w] = e;
      queue.push_back(w);
    }
  }
  while (!queue.empty() && !seen[to]) {
    VertexId v = queue.front();
    queue.pop_front();
    for (EdgeId e : g.out_edges(v)) {
      VertexId w = g.target(e);
      if (!seen[w]) {
        seen[w] = true;
        via[w] = e;
        queue.push_back(w);
      }
    }
  }
  if (!seen[to]) throw Error(Errc::NotIrreducible, "no path between the given vertices");
  std::vector<EdgeId> rev;
  VertexId at = to;
  do {
    EdgeId e = *via[at];
    rev.push_back(e);
    at = g.source(e);
  } while (at != from || rev.empty());
  // A path may revisit `from` only as its final vertex; the loop above stops at the
  // first return to `from` when walking backwards, which is the start of the path.
  std::reverse(rev.begin(), rev.end());
  return Word{from, std::move(rev)};
}

Word shortest_connection(const Graph& g, VertexId from, VertexId to) {
  if (from == to) return empty_word(from);
  return shortest_path(g, from, to);
}

Word word_of_length_ending_at(const Graph& g, std::size_t length, VertexId to) {
  std::vector<EdgeId> rev;
  VertexId at = to;
  for (std::size_t k = 0; k < length; ++k) {
    if (g.in_edges(at).empty()) throw Error(Errc::NotIrreducible, "vertex without incoming edge");
    EdgeId e = g.in_edges(at).front();
    rev.push_back(e);
    at = g.source(e);
  }
  std::reverse(rev.begin(), rev.end());
  return Word{at, std::move(rev)};
}

std::string format_word(const Graph& g, const Word& w) {
  if (w.edges.empty()) return "(" + g.vertex_name(w.anchor) + ")";
  std::string out;
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    if (i && !g.compact_edge_names()) out += '.';
    out += g.edge_name(w.edges[i]);
  }
  return out;
}

}  // namespace fullgroup
