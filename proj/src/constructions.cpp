#include "fullgroup/constructions.hpp"

#include "fullgroup/error.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace fullgroup {

std::vector<Word> split_cylinder(const Graph& g, const Word& mu, std::size_t k) {
  std::deque<Word> leaves{mu};
  std::size_t guard = 0;
  while (leaves.size() < k) {
    if (++guard > 1'000'000) throw std::logic_error("split_cylinder: no branching vertex reachable");
    Word w = std::move(leaves.front());
    leaves.pop_front();
    for (auto& c : children(g, w)) leaves.push_back(std::move(c));
  }
  return {leaves.begin(), leaves.begin() + static_cast<std::ptrdiff_t>(k)};
}

PrefixBijection embed_into(const ClopenSet& a, const ClopenSet& b) {
  if (a.is_empty() || b.is_empty()) throw Error(Errc::EmptyInput, "embed_into needs nonempty sets");
  const Graph& g = a.graph();
  const std::size_t n = a.words().size();
  auto slots = split_cylinder(g, b.words().front(), a == b ? n + 1 : n);
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < n; ++i) {
    const Word& src = a.words()[i];
    Word dst = concat(g, slots[i],
                      shortest_connection(g, terminal_vertex(g, slots[i]), terminal_vertex(g, src)));
    pieces.push_back({std::move(dst), src});
  }
  return PrefixBijection(a.graph_ptr(), std::move(pieces));
}

std::pair<PrefixBijection, PrefixBijection> doubling(const ClopenSet& a) {
  if (a.is_empty()) throw Error(Errc::EmptyInput, "doubling needs a nonempty set");
  auto halves = split_cylinder(a.graph(), a.words().front(), 2);
  return {embed_into(a, ClopenSet::cylinder(a.graph_ptr(), halves[0])),
          embed_into(a, ClopenSet::cylinder(a.graph_ptr(), halves[1]))};
}

DedicatedPartition dedicated_partition(const Graph& g, VertexId zeta, const IntVector& need) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> want(n);
  std::size_t total = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (need[v] > 0) want[v] = need[v].convert_to<std::size_t>();
    total += want[v];
  }
  const IntMatrix mt = g.adjacency_transpose();
  IntVector count(n);
  count[zeta] = 1;
  std::size_t depth = 0;
  auto sum = [](const IntVector& v) {
    Int s = 0;
    for (const auto& x : v) s += x;
    return s;
  };
  while (sum(count) < total) {
    count = mt * count;
    ++depth;
  }

  std::vector<Word> leaves = enumerate_words(g, depth, zeta);
  std::vector<bool> used(leaves.size(), false);
  DedicatedPartition out;
  out.dedicated.resize(n);
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const VertexId t = terminal_vertex(g, leaves[i]);
    if (out.dedicated[t].size() < want[t]) {
      out.dedicated[t].push_back(leaves[i]);
      used[i] = true;
    }
  }
  for (VertexId xi = 0; xi < n; ++xi) {
    while (out.dedicated[xi].size() < want[xi]) {
      std::size_t i = 0;
      while (used[i]) ++i;
      used[i] = true;
      Word cur = leaves[i];
      const Word path = shortest_connection(g, terminal_vertex(g, cur), xi);
      for (EdgeId e : path.edges) {
        for (EdgeId f : g.out_edges(terminal_vertex(g, cur)))
          if (f != e) {
            leaves.push_back(append(g, cur, f));
            used.push_back(false);
          }
        cur = append(g, cur, e);
      }
      leaves[i] = cur;
      out.dedicated[xi].push_back(cur);
    }
  }
  std::sort(leaves.begin(), leaves.end(), CanonicalLess{});
  out.leaves = std::move(leaves);
  return out;
}

namespace {

std::vector<std::size_t> terminal_counts(const Graph& g, const std::vector<Word>& words) {
  std::vector<std::size_t> c(g.vertex_count(), 0);
  for (const auto& w : words) ++c[terminal_vertex(g, w)];
  return c;
}

IntVector as_int_vector(const std::vector<std::size_t>& c) {
  IntVector v;
  for (auto x : c) v.emplace_back(x);
  return v;
}

/// A positive u with (M^t - id) u > 0 entrywise.
IntVector expanding_vector(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const IntMatrix mt = g.adjacency_transpose();
  const std::size_t p = period_and_primitivity(g).period;
  IntVector ones(n, 1);
  std::vector<IntVector> powers{ones};
  for (std::size_t k = 0; k < 4 * n * n + 4 * p + 8; ++k) {
    while (powers.size() < k + p + 1) powers.push_back(mt * powers.back());
    IntVector u(n);
    for (std::size_t i = 0; i < p; ++i) u = add(u, powers[k + i]);
    IntVector grow = subtract(mt * u, u);
    if (std::all_of(grow.begin(), grow.end(), [](const Int& x) { return x >= 1; })) return u;
  }
  throw std::logic_error("expanding_vector: no expanding vector found");
}

}  // namespace

ClopenSet realize_class(const ClopenSet& region, const IntVector& v) {
  if (region.is_empty()) throw Error(Errc::EmptyInput, "region is empty");
  const Graph& g = region.graph();
  const IntMatrix mt = g.adjacency_transpose();
  const IntVector u = expanding_vector(g);
  const IntVector grow = subtract(mt * u, u);
  // n = v + t (M^t - id) u with every entry >= 1 has the class of v.
  Int t = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] < 1) t = std::max(t, Int((1 - v[i] + grow[i] - 1) / grow[i]));
  IntVector n(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) n[i] = v[i] + t * grow[i];

  const Word& w0 = region.words().front();
  auto part = dedicated_partition(g, terminal_vertex(g, w0), n);
  std::vector<Word> words;
  for (const auto& list : part.dedicated)
    for (const auto& lambda : list) words.push_back(concat(g, w0, lambda));
  return ClopenSet(region.graph_ptr(), std::move(words));
}

PrefixBijection hopf_witness(const ClopenSet& a, const ClopenSet& b) {
  if (a.is_empty() || b.is_empty()) throw Error(Errc::EmptyInput, "hopf_witness needs nonempty sets");
  const Graph& g = a.graph();
  std::vector<Word> I = a.words();
  std::vector<Word> J = b.words();

  std::optional<std::pair<std::size_t, std::size_t>> match;
  for (std::size_t i = 0; i < I.size() && !match; ++i)
    for (std::size_t j = 0; j < J.size() && !match; ++j)
      if (terminal_vertex(g, I[i]) == terminal_vertex(g, J[j])) match = {i, j};
  if (!match) {
    const Word path = shortest_path(g, terminal_vertex(g, J[0]), terminal_vertex(g, I[0]));
    std::size_t j = 0;
    for (EdgeId e : path.edges) {
      Word nu = J[j];
      J.erase(J.begin() + static_cast<std::ptrdiff_t>(j));
      for (auto& c : children(g, nu)) J.push_back(std::move(c));
      const Word next = append(g, nu, e);
      j = static_cast<std::size_t>(std::find(J.begin(), J.end(), next) - J.begin());
    }
    match = {0, j};
  }
  const Word mu0 = I[match->first];
  const Word nu0 = J[match->second];
  const VertexId zeta = terminal_vertex(g, mu0);

  const IntVector av = as_int_vector(terminal_counts(g, I));
  const IntVector bv = as_int_vector(terminal_counts(g, J));
  const IntMatrix mt_minus_id = g.adjacency_transpose() - IntMatrix::identity(g.vertex_count());
  auto x = integer_solve(mt_minus_id, subtract(bv, av));
  if (!x) throw Error(Errc::ClassesDiffer, "[1_A] and [1_B] differ in H0");
  IntVector c(x->size()), d(x->size()), need(x->size());
  for (std::size_t i = 0; i < x->size(); ++i) {
    c[i] = (*x)[i] > 0 ? (*x)[i] : Int(0);
    d[i] = (*x)[i] < 0 ? Int(-(*x)[i]) : Int(0);
    need[i] = std::max(c[i], d[i]);
  }
  const auto part = dedicated_partition(g, zeta, need);

  auto grow = [&](std::vector<Word> words, const Word& base, const IntVector& expand) {
    words.erase(std::find(words.begin(), words.end(), base));
    std::set<Word, TreeLess> expanded;
    for (VertexId xi = 0; xi < g.vertex_count(); ++xi)
      for (std::size_t k = 0; k < expand[xi]; ++k) expanded.insert(part.dedicated[xi][k]);
    for (const auto& lambda : part.leaves) {
      Word w = concat(g, base, lambda);
      if (expanded.count(lambda))
        for (auto& ch : children(g, w)) words.push_back(std::move(ch));
      else
        words.push_back(std::move(w));
    }
    std::sort(words.begin(), words.end(), CanonicalLess{});
    return words;
  };
  const std::vector<Word> I2 = grow(I, mu0, c);
  const std::vector<Word> J2 = grow(J, nu0, d);

  std::vector<std::vector<Word>> by_terminal(g.vertex_count());
  for (const auto& w : J2) by_terminal[terminal_vertex(g, w)].push_back(w);
  std::vector<std::size_t> cursor(g.vertex_count(), 0);
  std::vector<Piece> pieces;
  for (const auto& w : I2) {
    const VertexId t = terminal_vertex(g, w);
    if (cursor[t] >= by_terminal[t].size()) throw std::logic_error("hopf_witness: count mismatch");
    pieces.push_back({by_terminal[t][cursor[t]++], w});
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (cursor[v] != by_terminal[v].size()) throw std::logic_error("hopf_witness: count mismatch");

  PrefixBijection u(a.graph_ptr(), std::move(pieces));
  if (u.source() != a || u.range() != b) throw std::logic_error("hopf_witness: verification failed");
  return u;
}

namespace {

void check_swap_inputs(const ClopenSet& a, const ClopenSet& b, const ClopenSet& y) {
  if (a.is_empty() || b.is_empty()) throw Error(Errc::EmptyInput, "swapped sets must be nonempty");
  if (!is_subset(a, y) || !is_subset(b, y))
    throw Error(Errc::NotInAmbient, "swapped sets must lie inside the ambient set");
  if (!is_disjoint(a, b)) throw Error(Errc::NotDisjoint, "swapped sets overlap");
}

}  // namespace

FullGroupElement transposition(const ClopenSet& a, const ClopenSet& b, const ClopenSet& y) {
  check_swap_inputs(a, b, y);
  const PrefixBijection h = hopf_witness(a, b);
  const ClopenSet rest = difference(y, unite(a, b));
  return FullGroupElement(disjoint_union(disjoint_union(h, inverse(h)), identity_on(rest)), y);
}

FullGroupElement gamma(const Word& mu, const Word& nu, const ClopenSet& y) {
  const Graph& g = y.graph();
  if (terminal_vertex(g, mu) != terminal_vertex(g, nu))
    throw Error(Errc::NotComposable, format_word(g, mu) + " and " + format_word(g, nu) +
                                         " end at different vertices");
  const ClopenSet a = ClopenSet::cylinder(y.graph_ptr(), mu);
  const ClopenSet b = ClopenSet::cylinder(y.graph_ptr(), nu);
  check_swap_inputs(a, b, y);
  const PrefixBijection swap(y.graph_ptr(), {{mu, nu}, {nu, mu}});
  return FullGroupElement(disjoint_union(swap, identity_on(difference(y, unite(a, b)))), y);
}

namespace {

std::optional<std::pair<EdgeId, EdgeId>> find_pq(const ClopenSet& y) {
  const Graph& g = y.graph();
  for (EdgeId p = 0; p < g.edge_count(); ++p)
    for (EdgeId q : g.out_edges(g.target(p))) {
      if (q == p) continue;
      const ClopenSet need(y.graph_ptr(), {Word{g.source(p), {p, q}}, Word{g.source(q), {q}}});
      if (is_subset(need, y)) return std::make_pair(p, q);
    }
  return std::nullopt;
}

std::vector<FullGroupElement> gamma_family(const ClopenSet& y, std::size_t top,
                                           std::size_t& steps, std::size_t budget) {
  const Graph& g = y.graph();
  auto tick = [&] {
    if (++steps > budget)
      throw Error(Errc::StepBudgetExceeded, "generating set enumeration exceeded " +
                                                std::to_string(budget) + " steps");
  };
  std::vector<std::vector<Word>> inside(top + 1);
  for (std::size_t len = 0; len <= top; ++len)
    for (auto& w : enumerate_words(g, len)) {
      tick();
      if (y.contains_cylinder(w)) inside[len].push_back(std::move(w));
    }

  std::vector<FullGroupElement> unique;
  std::set<std::string> seen;
  auto key_of = [](const FullGroupElement& e) {
    std::string k;
    for (const auto& p : e.pieces())
      for (const Word* w : {&p.range, &p.domain}) {
        k += std::to_string(w->anchor) + ':';
        for (EdgeId x : w->edges) k += std::to_string(x) + ',';
        k += ';';
      }
    return k;
  };
  auto consider = [&](const Word& mu, const Word& nu) {
    tick();
    if (terminal_vertex(g, mu) != terminal_vertex(g, nu)) return;
    if (is_prefix(mu, nu) || is_prefix(nu, mu)) return;
    FullGroupElement e = gamma(mu, nu, y);
    if (seen.insert(key_of(e)).second) unique.push_back(std::move(e));
  };
  for (std::size_t len = 0; len <= top; ++len) {
    const auto& ws = inside[len];
    for (std::size_t i = 0; i < ws.size(); ++i)
      for (std::size_t j = i + 1; j < ws.size(); ++j) consider(ws[i], ws[j]);
    if (len + 1 <= top)
      for (const auto& mu : ws)
        for (const auto& nu : inside[len + 1]) consider(mu, nu);
  }
  return unique;
}

}  // namespace

GeneratingSet generating_set(const ClopenSet& y, std::size_t step_budget) {
  if (y.is_empty()) throw Error(Errc::EmptyInput, "ambient set is empty");
  const Graph& g = y.graph();
  const PeriodInfo info = period_and_primitivity(g);
  if (!info.primitive)
    throw Error(Errc::NotPrimitive, "graph has period " + std::to_string(info.period));
  const std::size_t mix = *info.mixing_exponent;
  std::size_t steps = 0;

  GeneratingSet out;
  if (find_pq(y)) {
    out.m = std::max(mix, y.max_length());
    out.elements = gamma_family(y, out.m + 2, steps, step_budget);
    return out;
  }

  // Move to Y' = C_pq + C_q + E of the same class, then conjugate back.
  const GraphPtr& gp = y.graph_ptr();
  const ClopenSet x = ClopenSet::whole(gp);
  for (EdgeId p = 0; p < g.edge_count(); ++p)
    for (EdgeId q : g.out_edges(g.target(p))) {
      if (q == p) continue;
      const ClopenSet core(gp, {Word{g.source(p), {p, q}}, Word{g.source(q), {q}}});
      const ClopenSet region = difference(x, core);
      if (region.is_empty()) continue;
      IntVector v = class_in_K(g, y).vec;
      v[g.target(q)] -= 2;
      const ClopenSet target = unite(core, realize_class(region, v));
      const PrefixBijection h = hopf_witness(y, target);
      out.m = std::max(mix, target.max_length());
      for (const auto& e : gamma_family(target, out.m + 2, steps, step_budget))
        out.elements.push_back(
            FullGroupElement(compose(inverse(h), compose(e.table(), h)), y));
      out.conjugator = h;
      return out;
    }
  throw std::logic_error("generating_set: no admissible pair p, q");
}

RealizedIndex realize_index_element(const GraphPtr& gp, const IntVector& w) {
  const Graph& g = *gp;
  const ClopenSet x = ClopenSet::whole(gp);
  const IntMatrix id_minus_mt = IntMatrix::identity(g.vertex_count()) - g.adjacency_transpose();
  if (w.size() != g.vertex_count() || !is_zero(id_minus_mt * w))
    throw Error(Errc::NotKernelVector, to_string(w) + " is not in Ker(id - M^t)");

  // Chain sum_e w_{i(e)} 1_{U_e}, negative terms as inverse G-sets.
  std::vector<PrefixBijection> chain;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Int& k = w[g.source(e)];
    const PrefixBijection ue(gp, {{Word{g.source(e), {e}}, empty_word(g.target(e))}});
    const PrefixBijection term = k > 0 ? ue : inverse(ue);
    for (Int c = 0; c < abs(k); ++c) chain.push_back(term);
  }
  if (chain.empty()) {
    FullGroupElement id = identity(x);
    return {id, IntVector(g.vertex_count())};
  }
  const std::size_t n = chain.size();

  std::size_t level = 0;
  std::vector<ClopenSet> src, rng;
  for (const auto& c : chain) {
    src.push_back(c.source());
    rng.push_back(c.range());
    level = std::max({level, src.back().max_length(), rng.back().max_length()});
  }

  // A_ij: per level cylinder Z, match the j with Z in r(C_j) to the i with Z in s(C_i).
  struct Cell {
    std::size_t i, j;
    Word z;
  };
  std::vector<Cell> cells;
  for (const auto& z : enumerate_words(g, level)) {
    std::vector<std::size_t> is, js;
    for (std::size_t k = 0; k < n; ++k) {
      if (src[k].contains_cylinder(z)) is.push_back(k);
      if (rng[k].contains_cylinder(z)) js.push_back(k);
    }
    if (is.size() != js.size())
      throw Error(Errc::CycleCheckFailed, "cycle condition fails on " + format_word(g, z));
    for (std::size_t k = 0; k < is.size(); ++k) cells.push_back({is[k], js[k], z});
  }

  const auto slots = split_cylinder(g, empty_word(0), n);
  std::vector<PrefixBijection> u;
  for (std::size_t k = 0; k < n; ++k)
    u.push_back(embed_into(rng[k], ClopenSet::cylinder(gp, slots[k])));

  PrefixBijection v(gp, {});
  for (const auto& cell : cells) {
    const PrefixBijection piece =
        compose(u[cell.i], compose(chain[cell.i], compose(identity_on(ClopenSet::cylinder(gp, cell.z)),
                                                          inverse(u[cell.j]))));
    v = disjoint_union(v, piece);
  }
  ClopenSet moved = ClopenSet::empty(gp);
  for (const auto& uk : u) moved = unite(moved, uk.range());
  if (v.source() != moved || v.range() != moved)
    throw Error(Errc::CycleCheckFailed, "assembled G-set does not act on the disjointified ranges");
  // The chain is oriented opposite to the index formula; the inverse realizes w.
  FullGroupElement alpha =
      inverse(FullGroupElement(disjoint_union(v, identity_on(difference(x, moved))), x));
  IntVector iv = index_vector(alpha);
  return {std::move(alpha), std::move(iv)};
}

FreeProductWitness free_product_witness(const GraphPtr& gp) {
  const ClopenSet x = ClopenSet::whole(gp);
  const auto k = split_cylinder(*gp, x.words().front(), 2);
  FreeProductWitness out;
  out.u = embed_into(x, ClopenSet::cylinder(gp, k[0]));
  out.v = embed_into(x, ClopenSet::cylinder(gp, k[1]));
  out.a = out.u.range();
  out.b = out.v.range();
  const PrefixBijection ui = inverse(out.u);
  const PrefixBijection vi = inverse(out.v);

  const PrefixBijection swap = disjoint_union(compose(out.v, ui), compose(out.u, vi));
  out.alpha = FullGroupElement(
      disjoint_union(swap, identity_on(difference(x, unite(out.a, out.b)))), x);

  const PrefixBijection uu = compose(out.u, out.u);
  const PrefixBijection uv = compose(out.u, out.v);
  PrefixBijection beta = compose(out.v, compose(ui, ui));
  beta = disjoint_union(beta, restrict_to(out.u, out.b));
  beta = disjoint_union(beta, compose(uu, compose(vi, ui)));
  const ClopenSet moved = unite(unite(uu.range(), out.b), uv.range());
  out.beta = FullGroupElement(disjoint_union(beta, identity_on(difference(x, moved))), x);
  return out;
}

ZipperDefect zipper_defect(const FullGroupElement& a, std::size_t step_budget) {
  if (a.ambient() != ClopenSet::whole(a.graph_ptr()))
    throw Error(Errc::AmbientNotX, "zipper defect needs ambient X");
  std::size_t steps = 0;
  // Words of length >= 1 not inside any cylinder of a partition are exactly the
  // proper nonempty prefixes of its words.
  auto count_prefixes = [&](bool domain_side) {
    std::set<Word, TreeLess> prefixes;
    for (const auto& p : a.pieces()) {
      const Word& w = domain_side ? p.domain : p.range;
      for (std::size_t len = 1; len < w.length(); ++len) {
        if (++steps > step_budget)
          throw Error(Errc::StepBudgetExceeded, "zipper enumeration exceeded " +
                                                    std::to_string(step_budget) + " steps");
        prefixes.insert(Word{w.anchor, {w.edges.begin(), w.edges.begin() + static_cast<std::ptrdiff_t>(len)}});
      }
    }
    return prefixes.size();
  };
  ZipperDefect z;
  z.defect = count_prefixes(true) + count_prefixes(false);
  for (const auto& p : a.pieces()) z.m = std::max({z.m, p.domain.length(), p.range.length()});
  return z;
}

}  // namespace fullgroup
