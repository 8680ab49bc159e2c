#include "fullgroup/clopen.hpp"

#include "fullgroup/error.hpp"

#include <algorithm>
#include <map>

namespace fullgroup {

std::vector<Word> canonical_words(const Graph& g, std::vector<Word> words) {
  std::sort(words.begin(), words.end(), TreeLess{});
  std::vector<Word> antichain;
  for (auto& w : words) {
    if (!antichain.empty() && is_prefix(antichain.back(), w)) continue;
    antichain.push_back(std::move(w));
  }
  if (antichain.empty()) return antichain;

  std::size_t longest = 0;
  for (const auto& w : antichain) longest = std::max(longest, w.length());
  std::vector<std::vector<Word>> by_length(longest + 1);
  for (auto& w : antichain) by_length[w.length()].push_back(std::move(w));

  for (std::size_t len = longest; len >= 1; --len) {
    std::map<Word, std::size_t, TreeLess> families;
    for (const auto& w : by_length[len]) ++families[parent(w)];
    std::vector<Word> kept;
    for (auto& w : by_length[len]) {
      Word p = parent(w);
      if (families[p] != g.out_edges(terminal_vertex(g, p)).size()) kept.push_back(std::move(w));
    }
    for (const auto& [p, count] : families)
      if (count == g.out_edges(terminal_vertex(g, p)).size()) by_length[len - 1].push_back(p);
    by_length[len] = std::move(kept);
  }

  std::vector<Word> out;
  for (auto& bucket : by_length)
    for (auto& w : bucket) out.push_back(std::move(w));
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

ClopenSet::ClopenSet(GraphPtr graph, std::vector<Word> words) : graph_(std::move(graph)) {
  for (const auto& w : words)
    if (!is_admissible(*graph_, w)) throw Error(Errc::InvalidWord, "word is not admissible");
  words_ = canonical_words(*graph_, std::move(words));
}

ClopenSet ClopenSet::empty(GraphPtr graph) { return ClopenSet(std::move(graph), {}); }

ClopenSet ClopenSet::whole(GraphPtr graph) {
  std::vector<Word> words;
  for (VertexId v = 0; v < graph->vertex_count(); ++v) words.push_back(empty_word(v));
  return ClopenSet(std::move(graph), std::move(words));
}

ClopenSet ClopenSet::cylinder(GraphPtr graph, const Word& w) {
  return ClopenSet(std::move(graph), {w});
}

std::size_t ClopenSet::max_length() const {
  std::size_t m = 0;
  for (const auto& w : words_) m = std::max(m, w.length());
  return m;
}

bool ClopenSet::contains_cylinder(const Word& w) const {
  // C_w lies inside the set iff it does not meet the complement.
  for (const auto& x : words_)
    if (is_prefix(x, w)) return true;
  bool touched = false;
  for (const auto& x : words_)
    if (is_prefix(w, x)) touched = true;
  if (!touched) return false;
  return is_subset(ClopenSet::cylinder(graph_, w), *this);
}

ClopenSet unite(const ClopenSet& a, const ClopenSet& b) {
  std::vector<Word> words = a.words();
  words.insert(words.end(), b.words().begin(), b.words().end());
  return ClopenSet(a.graph_ptr(), std::move(words));
}

ClopenSet intersect(const ClopenSet& a, const ClopenSet& b) {
  std::vector<Word> words;
  for (const auto& x : a.words())
    for (const auto& y : b.words()) {
      if (is_prefix(x, y))
        words.push_back(y);
      else if (is_prefix(y, x))
        words.push_back(x);
    }
  return ClopenSet(a.graph_ptr(), std::move(words));
}

namespace {

void complement_below(const Graph& g, const Word& node, const std::vector<Word>& inside,
                      std::vector<Word>& out) {
  std::vector<Word> below;
  for (const auto& w : inside) {
    if (is_prefix(w, node)) return;
    if (is_prefix(node, w)) below.push_back(w);
  }
  if (below.empty()) {
    out.push_back(node);
    return;
  }
  for (const auto& c : children(g, node)) complement_below(g, c, below, out);
}

}  // namespace

ClopenSet complement(const ClopenSet& a) {
  const Graph& g = a.graph();
  std::vector<Word> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) complement_below(g, empty_word(v), a.words(), out);
  return ClopenSet(a.graph_ptr(), std::move(out));
}

ClopenSet complement_in(const ClopenSet& a, const ClopenSet& y) {
  return intersect(y, complement(a));
}

ClopenSet difference(const ClopenSet& a, const ClopenSet& b) { return complement_in(b, a); }

bool is_subset(const ClopenSet& a, const ClopenSet& b) { return intersect(a, b) == a; }

bool is_disjoint(const ClopenSet& a, const ClopenSet& b) {
  for (const auto& x : a.words())
    for (const auto& y : b.words())
      if (is_prefix(x, y) || is_prefix(y, x)) return false;
  return true;
}

bool pairwise_disjoint_words(std::vector<Word> words) {
  std::sort(words.begin(), words.end(), TreeLess{});
  for (std::size_t i = 1; i < words.size(); ++i)
    if (is_prefix(words[i - 1], words[i])) return false;
  return true;
}

bool is_partition_of(const std::vector<ClopenSet>& parts, const ClopenSet& y) {
  std::vector<Word> all;
  for (const auto& p : parts) all.insert(all.end(), p.words().begin(), p.words().end());
  if (!pairwise_disjoint_words(all)) return false;
  return ClopenSet(y.graph_ptr(), std::move(all)) == y;
}

std::vector<Word> extensions(const Graph& g, const Word& w, std::size_t level) {
  std::vector<Word> layer{w};
  for (std::size_t k = w.length(); k < level; ++k) {
    std::vector<Word> next;
    for (const auto& x : layer)
      for (auto& c : children(g, x)) next.push_back(std::move(c));
    layer = std::move(next);
  }
  return layer;
}

std::vector<Word> refine_to_level(const ClopenSet& a, std::size_t level) {
  if (level < a.max_length())
    throw Error(Errc::LevelTooSmall, "level " + std::to_string(level) + " is below word length " +
                                         std::to_string(a.max_length()));
  std::vector<Word> out;
  for (const auto& w : a.words()) {
    auto ext = extensions(a.graph(), w, level);
    out.insert(out.end(), ext.begin(), ext.end());
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

}  // namespace fullgroup
