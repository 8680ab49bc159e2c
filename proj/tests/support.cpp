#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace testing_support {

Word w(const Graph& g, const std::string& letters) {
  std::vector<std::string> names;
  for (char c : letters) names.emplace_back(1, c);
  return word_from_names(g, names);
}

ClopenSet set_of(const GraphPtr& g, const std::vector<std::string>& words) {
  std::vector<Word> ws;
  for (const auto& s : words) ws.push_back(w(*g, s));
  return ClopenSet(g, ws);
}

FullGroupElement element(const GraphPtr& g, const std::vector<std::pair<std::string, std::string>>& pieces) {
  std::vector<Piece> ps;
  for (const auto& [r, d] : pieces) {
    Piece p;
    p.range = r.empty() ? empty_word(0) : w(*g, r);
    p.domain = d.empty() ? empty_word(0) : w(*g, d);
    ps.push_back(p);
  }
  return FullGroupElement(PrefixBijection(g, ps), ClopenSet::whole(g));
}

std::vector<GraphPtr> property_graphs() {
  return {full_shift(2), golden_mean(), two_one_one_two(), graph_from_matrix({{1, 2}, {1, 1}})};
}

GraphPtr random_graph(std::mt19937_64& rng, int max_vertices, int max_entry) {
  std::uniform_int_distribution<int> size_dist(1, max_vertices);
  std::uniform_int_distribution<int> entry_dist(0, max_entry);
  for (;;) {
    const int n = size_dist(rng);
    std::vector<std::vector<int>> m(n, std::vector<int>(n));
    for (auto& row : m)
      for (auto& x : row) x = entry_dist(rng);
    auto g = std::make_shared<const Graph>(Graph::from_matrix(m));
    try {
      validate_graph(*g);
      return g;
    } catch (const Error&) {
    }
  }
}

std::vector<Word> random_partition(std::mt19937_64& rng, const ClopenSet& base, std::size_t max_pieces,
                                   std::size_t max_depth) {
  const Graph& g = base.graph();
  std::vector<Word> leaves = base.words();
  std::uniform_int_distribution<int> rounds_dist(1, 8);
  const int rounds = rounds_dist(rng);
  for (int r = 0; r < rounds; ++r) {
    std::vector<std::size_t> options;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      const std::size_t kids = g.out_edges(terminal_vertex(g, leaves[i])).size();
      if (leaves[i].length() < max_depth && leaves.size() - 1 + kids <= max_pieces) options.push_back(i);
    }
    if (options.empty()) break;
    const std::size_t pick = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    auto kids = children(g, leaves[pick]);
    leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(pick));
    leaves.insert(leaves.end(), kids.begin(), kids.end());
  }
  return leaves;
}

ClopenSet random_clopen(std::mt19937_64& rng, const GraphPtr& g, std::size_t max_pieces,
                        std::size_t max_depth) {
  auto leaves = random_partition(rng, ClopenSet::whole(g), max_pieces, max_depth);
  std::vector<Word> chosen;
  for (auto& l : leaves)
    if (rng() % 2) chosen.push_back(l);
  return ClopenSet(g, chosen);
}

namespace {

FullGroupElement shuffled_partition(std::mt19937_64& rng, const GraphPtr& g, std::size_t max_pieces,
                                    std::size_t max_depth, bool same_length);

FullGroupElement permutation_element(std::mt19937_64& rng, const GraphPtr& g, std::size_t max_pieces,
                                     std::size_t max_depth, bool same_length) {
  const ClopenSet x = ClopenSet::whole(g);
  for (int attempt = 0;; ++attempt) {
    FullGroupElement a = shuffled_partition(rng, g, max_pieces, max_depth, same_length);
    if (attempt == 4 || a != identity(x)) return a;
  }
}

FullGroupElement shuffled_partition(std::mt19937_64& rng, const GraphPtr& g, std::size_t max_pieces,
                                    std::size_t max_depth, bool same_length) {
  const auto leaves = random_partition(rng, ClopenSet::whole(g), max_pieces, max_depth);
  std::map<std::pair<VertexId, std::size_t>, std::vector<Word>> groups;
  for (const auto& l : leaves)
    groups[{terminal_vertex(*g, l), same_length ? l.length() : 0}].push_back(l);
  std::vector<Piece> pieces;
  for (auto& [key, ws] : groups) {
    auto targets = ws;
    std::shuffle(targets.begin(), targets.end(), rng);
    for (std::size_t i = 0; i < ws.size(); ++i) pieces.push_back(Piece{targets[i], ws[i]});
  }
  return FullGroupElement(PrefixBijection(g, pieces), ClopenSet::whole(g));
}

}  // namespace

FullGroupElement random_permutation_element(std::mt19937_64& rng, const GraphPtr& g, std::size_t max_pieces,
                                            std::size_t max_depth) {
  return permutation_element(rng, g, max_pieces, max_depth, false);
}

FullGroupElement random_length_preserving_element(std::mt19937_64& rng, const GraphPtr& g,
                                                  std::size_t max_pieces, std::size_t max_depth) {
  return permutation_element(rng, g, max_pieces, max_depth, true);
}

Point random_point(std::mt19937_64& rng, const Graph& g) {
  auto walk = [&](VertexId from, std::size_t len) {
    Word out = empty_word(from);
    for (std::size_t i = 0; i < len; ++i) {
      const auto& outs = g.out_edges(terminal_vertex(g, out));
      out = append(g, out, outs[rng() % outs.size()]);
    }
    return out;
  };
  const VertexId start = static_cast<VertexId>(rng() % g.vertex_count());
  Word pre = walk(start, rng() % 5);
  const VertexId loop = terminal_vertex(g, pre);
  Word c = walk(loop, rng() % 4);
  c = concat(g, c, shortest_connection(g, terminal_vertex(g, c), loop));
  if (c.empty()) c = shortest_path(g, loop, loop);
  return make_point(g, pre, c);
}

SmallMatrix small_adjacency(const Graph& g) {
  SmallMatrix m(g.vertex_count(), std::vector<long long>(g.vertex_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) ++m[g.source(e)][g.target(e)];
  return m;
}

SmallMatrix small_multiply(const SmallMatrix& a, const SmallMatrix& b) {
  const std::size_t n = a.size();
  SmallMatrix c(n, std::vector<long long>(b[0].size()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

namespace {

SmallMatrix clamp(SmallMatrix m, long long cap) {
  for (auto& row : m)
    for (auto& x : row) x = std::min(x, cap);
  return m;
}

}  // namespace

std::size_t oracle_mixing_exponent(const Graph& g, std::size_t limit) {
  const SmallMatrix m = small_adjacency(g);
  SmallMatrix p = m;
  for (std::size_t k = 1; k <= limit; ++k) {
    bool all = true;
    for (auto& row : p)
      for (auto x : row) all = all && x >= 3;
    if (all) return k;
    p = clamp(small_multiply(p, m), 1000);
  }
  return 0;
}

std::size_t oracle_period(const Graph& g, std::size_t limit) {
  const SmallMatrix m = small_adjacency(g);
  SmallMatrix p = m;
  std::size_t d = 0;
  for (std::size_t k = 1; k <= limit; ++k) {
    long long tr = 0;
    for (std::size_t i = 0; i < p.size(); ++i) tr += p[i][i];
    if (tr > 0) d = std::gcd(d, k);
    p = clamp(small_multiply(p, m), 1000);
  }
  return d;
}

long long small_det(const SmallMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  long long total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    SmallMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    total += (j % 2 ? -1 : 1) * a[0][j] * small_det(minor);
  }
  return total;
}

std::vector<long long> oracle_invariant_factors(const SmallMatrix& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<long long> divisors{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    long long d = 0;
    std::vector<std::size_t> ri, ci;
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, std::vector<std::vector<std::size_t>>&)>
        subsets = [&](std::size_t start, std::size_t n, std::vector<std::size_t>& cur,
                      std::vector<std::vector<std::size_t>>& out) {
          if (cur.size() == k) {
            out.push_back(cur);
            return;
          }
          for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            subsets(i + 1, n, cur, out);
            cur.pop_back();
          }
        };
    subsets(0, rows, ri, row_sets);
    subsets(0, cols, ci, col_sets);
    for (const auto& rs : row_sets)
      for (const auto& cs : col_sets) {
        SmallMatrix minor(k, std::vector<long long>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = a[rs[i]][cs[j]];
        d = std::gcd(d, std::llabs(small_det(minor)));
      }
    divisors.push_back(d);
  }
  std::vector<long long> factors;
  for (std::size_t k = 1; k < divisors.size(); ++k) {
    if (divisors[k] == 0) {
      factors.push_back(0);
      continue;
    }
    const long long f = divisors[k] / divisors[k - 1];
    if (f != 1) factors.push_back(f);
  }
  for (std::size_t k = std::min(rows, cols); k < rows; ++k) factors.push_back(0);
  return factors;
}

std::optional<Word> oracle_apply(const PrefixBijection& t, const Word& x) {
  for (const auto& p : t.pieces()) {
    if (p.domain.anchor != x.anchor || p.domain.length() > x.length()) continue;
    if (!std::equal(p.domain.edges.begin(), p.domain.edges.end(), x.edges.begin())) continue;
    Word out = p.range;
    out.edges.insert(out.edges.end(), x.edges.begin() + static_cast<std::ptrdiff_t>(p.domain.length()),
                     x.edges.end());
    return out;
  }
  return std::nullopt;
}

std::size_t oracle_outside_count(const Graph& g, const std::vector<Word>& words) {
  std::size_t m = 0;
  for (const auto& x : words) m = std::max(m, x.length());
  std::size_t count = 0;
  for (std::size_t len = 1; len < m; ++len)
    for (const auto& lambda : enumerate_words(g, len)) {
      bool inside = false;
      for (const auto& nu : words) inside = inside || is_prefix(nu, lambda);
      if (!inside) ++count;
    }
  return count;
}

std::vector<bool> oracle_membership(const ClopenSet& s, std::size_t level) {
  std::vector<bool> bits;
  for (const auto& x : enumerate_words(s.graph(), level)) {
    bool in = false;
    for (const auto& y : s.words()) in = in || is_prefix(y, x);
    bits.push_back(in);
  }
  return bits;
}

std::size_t oracle_gamma_count(const Graph& g, std::size_t top) {
  // Words as (start vertex, edge list) grown by depth-first search over edges.
  struct Path {
    VertexId start;
    std::vector<EdgeId> edges;
    VertexId end;
  };
  std::vector<std::vector<Path>> by_length(top + 1);
  std::function<void(Path)> grow = [&](Path p) {
    by_length[p.edges.size()].push_back(p);
    if (p.edges.size() == top) return;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (g.source(e) == p.end) {
        Path q = p;
        q.edges.push_back(e);
        q.end = g.target(e);
        grow(q);
      }
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v) grow(Path{v, {}, v});
  auto prefix = [](const Path& a, const Path& b) {
    return a.start == b.start && a.edges.size() <= b.edges.size() &&
           std::equal(a.edges.begin(), a.edges.end(), b.edges.begin());
  };
  std::size_t count = 0;
  for (std::size_t len = 0; len <= top; ++len) {
    const auto& ws = by_length[len];
    for (std::size_t i = 0; i < ws.size(); ++i)
      for (std::size_t j = i + 1; j < ws.size(); ++j)
        if (ws[i].end == ws[j].end && !prefix(ws[i], ws[j])) ++count;
    if (len < top)
      for (const auto& a : ws)
        for (const auto& b : by_length[len + 1])
          if (a.end == b.end && !prefix(a, b)) ++count;
  }
  return count;
}

std::vector<long long> oracle_index_vector(const FullGroupElement& a) {
  const Graph& g = a.graph();
  const std::size_t n = g.vertex_count();
  SmallMatrix mt(n, std::vector<long long>(n));
  for (EdgeId e = 0; e < g.edge_count(); ++e) ++mt[g.target(e)][g.source(e)];
  auto apply = [&](const std::vector<long long>& v) {
    std::vector<long long> out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i] += mt[i][j] * v[j];
    return out;
  };

  // Terms (level, vector) of delta^(-shift)[C_domain].
  std::vector<std::pair<std::size_t, std::vector<long long>>> terms;
  for (const auto& p : a.pieces()) {
    std::vector<long long> e(n);
    e[terminal_vertex(g, p.domain)] = 1;
    const long shift = p.shift();
    const std::size_t base = p.domain.length();
    if (shift < 0) {
      std::vector<long long> v = e;
      for (long j = 0; j < -shift; ++j) {
        terms.emplace_back(base, v);
        v = apply(v);
      }
    } else {
      for (long j = 1; j <= shift; ++j) {
        std::vector<long long> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = -e[i];
        terms.emplace_back(base + static_cast<std::size_t>(j), v);
      }
    }
  }
  std::size_t top = 0;
  for (const auto& t : terms) top = std::max(top, t.first);
  std::vector<long long> sum(n);
  for (auto [level, v] : terms) {
    for (; level < top; ++level) v = apply(v);
    for (std::size_t i = 0; i < n; ++i) sum[i] += v[i];
  }
  for (std::size_t k = 0; k < n + 1; ++k) sum = apply(sum);
  if (apply(sum) != sum) throw std::logic_error("oracle index: not a kernel class");
  return sum;
}

std::vector<std::vector<long long>> oracle_elements(const std::vector<long long>& factors) {
  std::vector<std::vector<long long>> elements{{}};
  for (long long d : factors) {
    std::vector<std::vector<long long>> next;
    for (const auto& e : elements)
      for (long long x = 0; x < d; ++x) {
        auto f = e;
        f.push_back(x);
        next.push_back(f);
      }
    elements = next;
  }
  return elements;
}

std::vector<long long> oracle_apply_automorphism(const std::vector<long long>& factors, const SmallMatrix& phi,
                                                 const std::vector<long long>& x) {
  const std::size_t k = factors.size();
  std::vector<long long> out(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out[j] += x[i] * phi[i][j];
  for (std::size_t j = 0; j < k; ++j) out[j] = ((out[j] % factors[j]) + factors[j]) % factors[j];
  return out;
}

std::vector<SmallMatrix> oracle_automorphisms(const std::vector<long long>& factors) {
  const std::size_t k = factors.size();
  const auto elements = oracle_elements(factors);
  std::vector<SmallMatrix> result;
  SmallMatrix gens;
  std::function<void()> search = [&] {
    if (gens.size() == k) {
      std::set<std::vector<long long>> seen;
      for (const auto& x : elements) seen.insert(oracle_apply_automorphism(factors, gens, x));
      if (seen.size() == elements.size()) result.push_back(gens);
      return;
    }
    const long long d = factors[gens.size()];
    for (const auto& y : elements) {
      bool killed = true;
      for (std::size_t j = 0; j < k; ++j) killed = killed && (d * y[j]) % factors[j] == 0;
      if (!killed) continue;
      gens.push_back(y);
      search();
      gens.pop_back();
    }
  };
  search();
  return result;
}

}  // namespace testing_support
