#pragma once

#include "fullgroup/graph.hpp"

#include <cstddef>
#include <vector>

namespace fullgroup {

/// Clopen subset of X stored as a reduced antichain of cylinder words in
/// canonical order. Two sets are equal iff their word lists are equal.
class ClopenSet {
 public:
  ClopenSet() = default;
  /// The union of the given cylinders (overlaps allowed); throws InvalidWord.
  ClopenSet(GraphPtr graph, std::vector<Word> words);

  static ClopenSet empty(GraphPtr graph);
  static ClopenSet whole(GraphPtr graph);
  static ClopenSet cylinder(GraphPtr graph, const Word& w);

  const GraphPtr& graph_ptr() const noexcept { return graph_; }
  const Graph& graph() const { return *graph_; }
  const std::vector<Word>& words() const noexcept { return words_; }
  bool is_empty() const noexcept { return words_.empty(); }
  std::size_t max_length() const;

  /// C_w is contained in this set.
  bool contains_cylinder(const Word& w) const;

  friend bool operator==(const ClopenSet& a, const ClopenSet& b) { return a.words_ == b.words_; }

 private:
  GraphPtr graph_;
  std::vector<Word> words_;
};

/// Antichain + sibling reduction + canonical sort of a list of cylinders.
std::vector<Word> canonical_words(const Graph& g, std::vector<Word> words);

ClopenSet unite(const ClopenSet& a, const ClopenSet& b);
ClopenSet intersect(const ClopenSet& a, const ClopenSet& b);
/// X minus `a`.
ClopenSet complement(const ClopenSet& a);
/// y minus a.
ClopenSet complement_in(const ClopenSet& a, const ClopenSet& y);
ClopenSet difference(const ClopenSet& a, const ClopenSet& b);
bool is_subset(const ClopenSet& a, const ClopenSet& b);
bool is_disjoint(const ClopenSet& a, const ClopenSet& b);
/// Pairwise disjoint with union equal to y.
bool is_partition_of(const std::vector<ClopenSet>& parts, const ClopenSet& y);
/// True when no word of the list is a prefix of another (duplicates included).
bool pairwise_disjoint_words(std::vector<Word> words);

/// All extensions of the words of `a` to length `level`, in canonical order.
/// Throws LevelTooSmall when level < a.max_length().
std::vector<Word> refine_to_level(const ClopenSet& a, std::size_t level);

/// Extensions of a single word to the given length (level >= w.length()).
std::vector<Word> extensions(const Graph& g, const Word& w, std::size_t level);

}  // namespace fullgroup
