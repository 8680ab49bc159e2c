#include "fullgroup/element.hpp"

#include "fullgroup/error.hpp"

#include <algorithm>
#include <map>

namespace fullgroup {

namespace {

struct PairLess {
  bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
    if (auto c = tree_compare(a.first, b.first); c != 0) return c < 0;
    return tree_compare(a.second, b.second) < 0;
  }
};

bool mergeable_child(const Piece& p) {
  return !p.range.empty() && !p.domain.empty() && p.range.edges.back() == p.domain.edges.back();
}

void check_pieces(const Graph& g, const std::vector<Piece>& pieces) {
  std::vector<Word> domains;
  std::vector<Word> ranges;
  for (const auto& p : pieces) {
    if (!is_admissible(g, p.range) || !is_admissible(g, p.domain))
      throw Error(Errc::InvalidElement, "piece word is not admissible");
    if (terminal_vertex(g, p.range) != terminal_vertex(g, p.domain))
      throw Error(Errc::InvalidElement, "piece (" + format_word(g, p.range) + ", " +
                                            format_word(g, p.domain) +
                                            ") has different terminal vertices");
    domains.push_back(p.domain);
    ranges.push_back(p.range);
  }
  if (!pairwise_disjoint_words(std::move(domains)))
    throw Error(Errc::InvalidElement, "domain cylinders overlap");
  if (!pairwise_disjoint_words(std::move(ranges)))
    throw Error(Errc::InvalidElement, "range cylinders overlap");
}

}  // namespace

std::vector<Piece> canonical_pieces(const Graph& g, std::vector<Piece> pieces) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<Word, Word>, std::size_t, PairLess> families;
    for (const auto& p : pieces)
      if (mergeable_child(p)) ++families[{parent(p.range), parent(p.domain)}];
    std::vector<Piece> next;
    for (auto& p : pieces) {
      if (mergeable_child(p)) {
        std::pair<Word, Word> key{parent(p.range), parent(p.domain)};
        if (families[key] == g.out_edges(terminal_vertex(g, key.first)).size()) continue;
      }
      next.push_back(std::move(p));
    }
    for (const auto& [key, count] : families)
      if (count == g.out_edges(terminal_vertex(g, key.first)).size()) {
        next.push_back({key.first, key.second});
        changed = true;
      }
    pieces = std::move(next);
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    return canonical_compare(a.domain, b.domain) < 0;
  });
  return pieces;
}

std::vector<Piece> expand_piece(const Graph& g, std::vector<Piece> pieces, std::size_t index) {
  const Piece p = pieces.at(index);
  pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(index));
  for (EdgeId e : g.out_edges(terminal_vertex(g, p.domain)))
    pieces.push_back({append(g, p.range, e), append(g, p.domain, e)});
  return pieces;
}

PrefixBijection::PrefixBijection(GraphPtr graph, std::vector<Piece> pieces)
    : graph_(std::move(graph)) {
  check_pieces(*graph_, pieces);
  pieces_ = canonical_pieces(*graph_, std::move(pieces));
}

ClopenSet PrefixBijection::source() const {
  std::vector<Word> words;
  for (const auto& p : pieces_) words.push_back(p.domain);
  return ClopenSet(graph_, std::move(words));
}

ClopenSet PrefixBijection::range() const {
  std::vector<Word> words;
  for (const auto& p : pieces_) words.push_back(p.range);
  return ClopenSet(graph_, std::move(words));
}

PrefixBijection identity_on(const ClopenSet& y) {
  std::vector<Piece> pieces;
  for (const auto& w : y.words()) pieces.push_back({w, w});
  return PrefixBijection(y.graph_ptr(), std::move(pieces));
}

PrefixBijection compose(const PrefixBijection& a, const PrefixBijection& b) {
  const Graph& g = b.graph();
  std::vector<Piece> out;
  for (const auto& p : b.pieces())
    for (const auto& q : a.pieces()) {
      if (is_prefix(p.range, q.domain)) {
        Word kappa{terminal_vertex(g, p.range),
                   {q.domain.edges.begin() + static_cast<std::ptrdiff_t>(p.range.length()),
                    q.domain.edges.end()}};
        out.push_back({q.range, concat(g, p.domain, kappa)});
      } else if (is_prefix(q.domain, p.range)) {
        Word kappa{terminal_vertex(g, q.domain),
                   {p.range.edges.begin() + static_cast<std::ptrdiff_t>(q.domain.length()),
                    p.range.edges.end()}};
        out.push_back({concat(g, q.range, kappa), p.domain});
      }
    }
  return PrefixBijection(b.graph_ptr(), std::move(out));
}

PrefixBijection inverse(const PrefixBijection& a) {
  std::vector<Piece> out;
  for (const auto& p : a.pieces()) out.push_back({p.domain, p.range});
  return PrefixBijection(a.graph_ptr(), std::move(out));
}

PrefixBijection disjoint_union(const PrefixBijection& a, const PrefixBijection& b) {
  std::vector<Piece> out = a.pieces();
  out.insert(out.end(), b.pieces().begin(), b.pieces().end());
  return PrefixBijection(a.graph_ptr() ? a.graph_ptr() : b.graph_ptr(), std::move(out));
}

PrefixBijection restrict_to(const PrefixBijection& a, const ClopenSet& domain) {
  return compose(a, identity_on(domain));
}

ClopenSet image(const PrefixBijection& a, const ClopenSet& s) {
  return compose(a, identity_on(s)).range();
}

FullGroupElement::FullGroupElement(PrefixBijection table, ClopenSet ambient)
    : table_(std::move(table)), ambient_(std::move(ambient)) {
  if (!table_.graph_ptr()) table_ = PrefixBijection(ambient_.graph_ptr(), {});
  if (table_.source() != ambient_)
    throw Error(Errc::InvalidElement, "domain of the table is not the ambient set");
  if (table_.range() != ambient_)
    throw Error(Errc::InvalidElement, "range of the table is not the ambient set");
}

FullGroupElement identity(const ClopenSet& y) { return FullGroupElement(identity_on(y), y); }

FullGroupElement compose(const FullGroupElement& a, const FullGroupElement& b) {
  if (a.ambient() != b.ambient())
    throw Error(Errc::AmbientMismatch, "elements act on different ambient sets");
  return FullGroupElement(compose(a.table(), b.table()), a.ambient());
}

FullGroupElement inverse(const FullGroupElement& a) {
  return FullGroupElement(inverse(a.table()), a.ambient());
}

bool equals(const FullGroupElement& a, const FullGroupElement& b) {
  if (a.ambient() != b.ambient())
    throw Error(Errc::AmbientMismatch, "elements act on different ambient sets");
  return a.table() == b.table();
}

FullGroupElement canonicalize(const FullGroupElement& a) {
  return FullGroupElement(PrefixBijection(a.graph_ptr(), a.pieces()), a.ambient());
}

FullGroupElement power(const FullGroupElement& a, long exponent) {
  FullGroupElement base = exponent < 0 ? inverse(a) : a;
  FullGroupElement result = identity(a.ambient());
  for (long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) result = compose(result, base);
  return result;
}

Point make_point(const Graph& g, Word preperiod, Word cycle) {
  if (cycle.empty()) throw Error(Errc::InvalidPoint, "cycle is empty");
  if (!is_admissible(g, preperiod) || !is_admissible(g, cycle))
    throw Error(Errc::InvalidPoint, "point words are not admissible");
  if (terminal_vertex(g, cycle) != cycle.anchor)
    throw Error(Errc::InvalidPoint, "cycle is not closed");
  if (terminal_vertex(g, preperiod) != cycle.anchor)
    throw Error(Errc::InvalidPoint, "preperiod does not end where the cycle starts");

  auto& c = cycle.edges;
  const std::size_t n = c.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = c[i] == c[i - d];
    if (periodic) {
      c.resize(d);
      break;
    }
  }
  while (!preperiod.empty() && preperiod.edges.back() == c.back()) {
    EdgeId last = c.back();
    c.pop_back();
    c.insert(c.begin(), last);
    cycle.anchor = g.source(last);
    preperiod.edges.pop_back();
  }
  if (preperiod.empty()) preperiod.anchor = cycle.anchor;
  return Point{std::move(preperiod), std::move(cycle)};
}

Word point_prefix(const Graph&, const Point& x, std::size_t n) {
  Word w{x.preperiod.anchor, {}};
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = x.preperiod.length();
    w.edges.push_back(i < p ? x.preperiod.edges[i] : x.cycle.edges[(i - p) % x.cycle.length()]);
  }
  return w;
}

bool point_in(const ClopenSet& y, const Point& x) {
  const Word prefix = point_prefix(y.graph(), x, y.max_length());
  for (const auto& w : y.words())
    if (is_prefix(w, prefix)) return true;
  return false;
}

namespace {

Point drop_prefix(const Graph& g, const Point& x, std::size_t k) {
  const std::size_t p = x.preperiod.length();
  if (k <= p) {
    Word rest{k == 0 ? x.preperiod.anchor : g.target(x.preperiod.edges[k - 1]),
              {x.preperiod.edges.begin() + static_cast<std::ptrdiff_t>(k), x.preperiod.edges.end()}};
    return Point{std::move(rest), x.cycle};
  }
  const std::size_t j = (k - p) % x.cycle.length();
  Word cyc{g.source(x.cycle.edges[j]), {}};
  for (std::size_t i = 0; i < x.cycle.length(); ++i)
    cyc.edges.push_back(x.cycle.edges[(j + i) % x.cycle.length()]);
  return Point{Word{cyc.anchor, {}}, std::move(cyc)};
}

}  // namespace

Point apply_point(const PrefixBijection& a, const Point& x) {
  const Graph& g = a.graph();
  std::size_t longest = 0;
  for (const auto& p : a.pieces()) longest = std::max(longest, p.domain.length());
  const Word prefix = point_prefix(g, x, longest);
  for (const auto& p : a.pieces()) {
    if (!is_prefix(p.domain, prefix)) continue;
    Point rest = drop_prefix(g, x, p.domain.length());
    return make_point(g, concat(g, p.range, rest.preperiod), rest.cycle);
  }
  throw Error(Errc::PointOutsideAmbient, "point is outside the domain");
}

Point apply_point(const FullGroupElement& a, const Point& x) { return apply_point(a.table(), x); }

ClopenSet support(const FullGroupElement& a) {
  std::vector<Word> words;
  for (const auto& p : a.pieces())
    if (p.range != p.domain) words.push_back(p.domain);
  return ClopenSet(a.graph_ptr(), std::move(words));
}

IntVector index_vector(const ShiftLinearData& d, const FullGroupElement& a) {
  const Graph& g = a.graph();
  // Terms of sum_n delta^(-n) [1_{S(a,n)}]_K, one per piece and power of delta.
  std::vector<DimGroupElement> terms;
  for (const auto& p : a.pieces()) {
    const long m = -p.shift();
    IntVector base(g.vertex_count());
    base[terminal_vertex(g, p.domain)] = 1;
    const std::size_t level = p.domain.length();
    if (m > 0) {
      IntVector v = base;
      for (long j = 0; j < m; ++j) {
        terms.push_back({level, v});
        v = d.mt * v;
      }
    } else if (m < 0) {
      for (long j = 1; j <= -m; ++j) terms.push_back({level + static_cast<std::size_t>(j), negate(base)});
    }
  }
  std::size_t top = 0;
  for (const auto& t : terms) top = std::max(top, t.level);
  IntVector sum(g.vertex_count());
  for (const auto& t : terms) sum = add(sum, matrix_power(d.mt, top - t.level) * t.vec);
  return to_kernel_representative(d, DimGroupElement{top, sum});
}

IntVector index_vector(const FullGroupElement& a) {
  return index_vector(shift_linear_data(a.graph()), a);
}

IntVector index(const Homology& h, const FullGroupElement& a) {
  return kernel_coordinates(h, index_vector(a));
}

IntVector index(const FullGroupElement& a) { return index(homology(a.graph()), a); }

std::optional<std::size_t> order_up_to(const FullGroupElement& a, std::size_t bound) {
  if (!is_zero(index_vector(a))) return std::nullopt;
  const FullGroupElement id = identity(a.ambient());
  FullGroupElement p = a;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (p == id) return k;
    p = compose(p, a);
  }
  return std::nullopt;
}

}  // namespace fullgroup
