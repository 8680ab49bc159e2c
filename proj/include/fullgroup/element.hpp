#pragma once

#include "fullgroup/clopen.hpp"
#include "fullgroup/homology.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace fullgroup {

/// U_{range,domain}: the prefix substitution domain.z -> range.z.
struct Piece {
  Word range;
  Word domain;

  /// Cocycle value |range| - |domain|.
  long shift() const noexcept {
    return static_cast<long>(range.length()) - static_cast<long>(domain.length());
  }
  friend bool operator==(const Piece&, const Piece&) = default;
};

/// Finite union of U_{mu_i,nu_i} with disjoint domains and disjoint ranges,
/// kept in canonical form (maximal sibling merge, sorted by domain word).
class PrefixBijection {
 public:
  PrefixBijection() = default;
  /// Validates (InvalidElement) and canonicalizes.
  PrefixBijection(GraphPtr graph, std::vector<Piece> pieces);

  const GraphPtr& graph_ptr() const noexcept { return graph_; }
  const Graph& graph() const { return *graph_; }
  const std::vector<Piece>& pieces() const noexcept { return pieces_; }
  bool is_empty() const noexcept { return pieces_.empty(); }

  ClopenSet source() const;
  ClopenSet range() const;

  friend bool operator==(const PrefixBijection& a, const PrefixBijection& b) {
    return a.pieces_ == b.pieces_;
  }

 private:
  GraphPtr graph_;
  std::vector<Piece> pieces_;
};

/// Sibling merge to a fixed point, then sort by domain word.
std::vector<Piece> canonical_pieces(const Graph& g, std::vector<Piece> pieces);
/// Replaces piece `index` by its children (mu e, nu e).
std::vector<Piece> expand_piece(const Graph& g, std::vector<Piece> pieces, std::size_t index);

PrefixBijection identity_on(const ClopenSet& y);
/// a after b, defined on b^{-1}(r(b) cap s(a)).
PrefixBijection compose(const PrefixBijection& a, const PrefixBijection& b);
PrefixBijection inverse(const PrefixBijection& a);
/// Union of two G-sets; throws InvalidElement when domains or ranges overlap.
PrefixBijection disjoint_union(const PrefixBijection& a, const PrefixBijection& b);
/// Restriction to domain cap s(a).
PrefixBijection restrict_to(const PrefixBijection& a, const ClopenSet& domain);
/// a(s), for s inside s(a) (the part outside s(a) is dropped).
ClopenSet image(const PrefixBijection& a, const ClopenSet& s);

/// pi_U for a G-set U with s(U) = r(U) = ambient.
class FullGroupElement {
 public:
  FullGroupElement() = default;
  /// Throws InvalidElement unless s = r = ambient.
  FullGroupElement(PrefixBijection table, ClopenSet ambient);

  const PrefixBijection& table() const noexcept { return table_; }
  const ClopenSet& ambient() const noexcept { return ambient_; }
  const Graph& graph() const { return table_.graph(); }
  const GraphPtr& graph_ptr() const noexcept { return ambient_.graph_ptr(); }
  const std::vector<Piece>& pieces() const noexcept { return table_.pieces(); }

  friend bool operator==(const FullGroupElement& a, const FullGroupElement& b) {
    return a.ambient_ == b.ambient_ && a.table_ == b.table_;
  }

 private:
  PrefixBijection table_;
  ClopenSet ambient_;
};

FullGroupElement identity(const ClopenSet& y);
/// a after b. Throws AmbientMismatch.
FullGroupElement compose(const FullGroupElement& a, const FullGroupElement& b);
FullGroupElement inverse(const FullGroupElement& a);
bool equals(const FullGroupElement& a, const FullGroupElement& b);
/// Canonical form of an arbitrary table over the ambient.
FullGroupElement canonicalize(const FullGroupElement& a);
FullGroupElement power(const FullGroupElement& a, long exponent);

/// preperiod . cycle^infinity, kept minimal: primitive cycle and shortest preperiod.
struct Point {
  Word preperiod;
  Word cycle;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Validates (InvalidPoint) and normalizes.
Point make_point(const Graph& g, Word preperiod, Word cycle);
/// First n edges of the sequence.
Word point_prefix(const Graph& g, const Point& x, std::size_t n);
bool point_in(const ClopenSet& y, const Point& x);

/// Throws PointOutsideAmbient.
Point apply_point(const FullGroupElement& a, const Point& x);
Point apply_point(const PrefixBijection& a, const Point& x);

/// Union of C_nu over the non-identity pieces of the canonical table.
ClopenSet support(const FullGroupElement& a);

/// Index in H1 as a kernel vector of id - M^t.
IntVector index_vector(const FullGroupElement& a);
IntVector index_vector(const ShiftLinearData& d, const FullGroupElement& a);
/// Index in H1 as coordinates in the HNF kernel basis.
IntVector index(const Homology& h, const FullGroupElement& a);
IntVector index(const FullGroupElement& a);

inline constexpr std::size_t kDefaultOrderBound = 64;

/// Least k <= bound with a^k = 1; nullopt when none exists within the bound or
/// the index is nonzero (such elements have infinite order).
std::optional<std::size_t> order_up_to(const FullGroupElement& a, std::size_t bound = kDefaultOrderBound);

}  // namespace fullgroup
