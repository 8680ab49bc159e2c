// Acceptance run: one PASS/FAIL line per criterion.
#include "support.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

using namespace testing_support;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

IntVector iv(std::initializer_list<long long> xs) {
  IntVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

IntVector unit_class(const GraphPtr& g, const Homology& h) {
  return free_first(h.h0, class_in_G(h, *g, ClopenSet::whole(g)));
}

ClopenSet nonempty_clopen(std::mt19937_64& rng, const GraphPtr& g) {
  for (;;) {
    auto a = random_clopen(rng, g);
    if (!a.is_empty()) return a;
  }
}

// ---- 1 ------------------------------------------------------------------------

Outcome invariant_table() {
  Outcome o;
  double slowest = 0;
  auto row = [&](const std::string& name, const std::function<bool()>& check) {
    const auto start = Clock::now();
    const bool ok = check();
    const double t = seconds_since(start);
    slowest = std::max(slowest, t);
    o.require(ok, name + " invariants");
    o.require(t < 1.0, name + " took " + std::to_string(t) + " s");
  };
  for (auto [n, r] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 3}, {5, 2}, {6, 4}}) {
    row("full shift (" + std::to_string(n) + "," + std::to_string(r) + ")", [n, r] {
      auto g = full_shift(n, r);
      const Homology h = homology(*g);
      const bool group = n == 2 ? h.h0.is_trivial()
                                : (h.h0.torsion() == std::vector<Int>{n - 1} && h.h0.free_rank() == 0);
      const IntVector unit = unit_class(g, h);
      const bool unit_ok = n == 2 ? unit.empty() : unit == IntVector{Int(r % (n - 1))};
      return group && h.h1_rank() == 0 && h.det == 1 - n && unit_ok;
    });
  }
  row("golden mean", [] {
    const Homology h = homology(*golden_mean());
    return h.h0.is_trivial() && h.h1_rank() == 0 && h.det == -1;
  });
  row("[[2,1],[1,2]]", [] {
    auto g = two_one_one_two();
    const Homology h = homology(*g);
    return h.h0.torsion().empty() && h.h0.free_rank() == 1 && h.h1_rank() == 1 && is_zero(unit_class(g, h));
  });
  row("free product p=q=3", [] {
    auto g = free_product_boundary(3, 3);
    const Homology h = homology(*g);
    return h.h0.torsion() == std::vector<Int>{3} && h.h0.free_rank() == 0 && is_zero(unit_class(g, h));
  });
  row("free group k=2", [] {
    const Homology h = homology(*free_group_boundary(2));
    return h.h0.torsion().empty() && h.h0.free_rank() == 2 && h.h1_rank() == 2;
  });
  row("free group k=3", [] {
    auto g = free_group_boundary(3);
    const Homology h = homology(*g);
    return h.h0.torsion() == std::vector<Int>{2} && h.h0.free_rank() == 3 && h.h1_rank() == 3 &&
           unit_class(g, h) == iv({0, 0, 0, 1});
  });
  if (o.pass) o.detail = "13 rows, slowest " + std::to_string(slowest) + " s";
  return o;
}

// ---- 2 ------------------------------------------------------------------------

Outcome abelianization_groups() {
  Outcome o;
  for (int n = 2; n <= 7; ++n)
    for (int r = 1; r < std::max(2, n); ++r) {
      const auto ab = abelianization(homology(*full_shift(n, r)));
      const bool ok = n % 2 == 0 ? ab.is_trivial() : (ab.torsion() == std::vector<Int>{2} && ab.free_rank() == 0);
      o.require(ok, "V_{" + std::to_string(n) + "," + std::to_string(r) + "} gave " + ab.to_string());
    }
  const auto k2 = abelianization(homology(*free_group_boundary(2)));
  o.require(k2.free_rank() == 2 && k2.torsion() == std::vector<Int>{2, 2}, "k=2 gave " + k2.to_string());
  const auto k3 = abelianization(homology(*free_group_boundary(3)));
  o.require(k3.free_rank() == 3 && k3.torsion() == std::vector<Int>{2, 2, 2, 2}, "k=3 gave " + k3.to_string());
  if (o.pass) o.detail = "k=2: " + k2.to_string() + ", k=3: " + k3.to_string();
  return o;
}

// ---- 3 ------------------------------------------------------------------------

Outcome classification() {
  Outcome o;
  auto gm = golden_mean();
  auto f2 = full_shift(2);
  o.require(classify(*gm, ClopenSet::whole(gm), *f2, ClopenSet::whole(f2)) == Verdict::SufficientConditionHolds,
            "golden mean vs full 2-shift");
  auto a = full_shift(3, 1);
  auto b = full_shift(3, 2);
  o.require(classify(*a, ClopenSet::whole(a), *b, ClopenSet::whole(b)) == Verdict::InvariantsDiffer,
            "full (3,1) vs full (3,2)");
  // Cross-check against the gcd(n-1, r) rule on small full shifts.
  for (int n = 2; n <= 6; ++n)
    for (int r1 = 1; r1 <= 4; ++r1)
      for (int r2 = 1; r2 <= 4; ++r2) {
        auto g1 = full_shift(n, r1);
        auto g2 = full_shift(n, r2);
        const bool same = std::gcd(n - 1, r1) == std::gcd(n - 1, r2);
        const Verdict v = classify(*g1, ClopenSet::whole(g1), *g2, ClopenSet::whole(g2));
        o.require(v == (same ? Verdict::SufficientConditionHolds : Verdict::InvariantsDiffer),
                  "gcd rule fails at n=" + std::to_string(n));
      }
  if (o.pass) o.detail = "SufficientConditionHolds / InvariantsDiffer; gcd rule on 80 pairs";
  return o;
}

// ---- 4 ------------------------------------------------------------------------

Outcome group_axioms() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(1004);
  std::size_t triples = 0, probes_pairs = 0;
  for (const auto& g : property_graphs()) {
    const auto id = identity(ClopenSet::whole(g));
    for (int trial = 0; trial < 260; ++trial, ++triples) {
      const auto a = random_permutation_element(rng, g);
      const auto b = random_permutation_element(rng, g);
      const auto c = random_permutation_element(rng, g);
      o.require(equals(compose(a, compose(b, c)), compose(compose(a, b), c)), "associativity");
      o.require(equals(compose(a, id), a) && equals(compose(id, a), a), "identity law");
      o.require(equals(compose(a, inverse(a)), id) && equals(compose(inverse(a), a), id), "inverse law");
      if (trial % 5 == 0) {
        ++probes_pairs;
        const auto ab = compose(a, b);
        for (int probe = 0; probe < 100; ++probe) {
          const Point p = random_point(rng, *g);
          o.require(apply_point(ab, p) == apply_point(a, apply_point(b, p)), "point evaluation");
        }
      }
    }
  }
  const double t = seconds_since(start);
  o.require(t < 60, "runtime " + std::to_string(t) + " s");
  if (o.pass)
    o.detail = std::to_string(triples) + " triples over 4 graphs, " + std::to_string(probes_pairs) +
               " pairs x 100 probes, " + std::to_string(t) + " s";
  return o;
}

// ---- 5 ------------------------------------------------------------------------

Outcome index_suite() {
  Outcome o;
  std::mt19937_64 rng(1005);
  std::size_t pairs = 0, transpositions = 0, kelements = 0;
  for (const auto& g : {two_one_one_two(), free_group_boundary(2), golden_mean(), full_shift(3)}) {
    const Homology h = homology(*g);
    std::vector<FullGroupElement> pool;
    for (std::size_t i = 0; i < h.h1_rank(); ++i) pool.push_back(realize_index_element(g, h.h1_basis.column(i)).element);
    for (int trial = 0; trial < 60; ++trial, ++pairs) {
      auto a = random_permutation_element(rng, g);
      auto b = random_permutation_element(rng, g);
      if (!pool.empty() && trial % 2 == 0) a = compose(a, pool[rng() % pool.size()]);
      if (!pool.empty() && trial % 3 == 0) b = compose(inverse(pool[rng() % pool.size()]), b);
      o.require(index(h, compose(a, b)) == add(index(h, a), index(h, b)), "homomorphism");
    }
    const auto whole = ClopenSet::whole(g);
    for (int trial = 0; trial < 15; ++trial) {
      const auto a = nonempty_clopen(rng, g);
      const auto rest = complement(a);
      if (rest.is_empty()) continue;
      const auto b = realize_class(rest, class_in_K(*g, a).vec);
      if (b.is_empty()) continue;
      o.require(is_zero(index(h, transposition(a, b, whole))), "transposition index");
      ++transpositions;
    }
    for (int trial = 0; trial < 15; ++trial, ++kelements)
      o.require(is_zero(index(h, random_length_preserving_element(rng, g))), "[[K]] index");
  }
  o.require(pairs >= 200, "too few pairs");

  std::string relation;
  for (const auto& g : {two_one_one_two(), free_group_boundary(2)}) {
    const Homology h = homology(*g);
    const std::size_t r = h.h1_rank();
    IntMatrix coords(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      const IntVector wi = h.h1_basis.column(i);
      const auto e = realize_index_element(g, wi).element;
      const IntVector c = index(h, e);
      for (std::size_t j = 0; j < r; ++j) coords(j, i) = c[j];
      const auto oracle = oracle_index_vector(e);
      for (std::size_t j = 0; j < oracle.size(); ++j) o.require(index_vector(e)[j] == oracle[j], "index oracle");
      for (std::size_t k = 0; k < r; ++k) {
        const IntVector wk = h.h1_basis.column(k);
        o.require(index_vector(realize_index_element(g, add(wi, wk)).element) ==
                      add(index_vector(e), index_vector(realize_index_element(g, wk).element)),
                  "realize additivity");
      }
    }
    o.require(abs(determinant(coords)) == 1, "realize image not unimodular");
    relation += (relation.empty() ? "" : ", ") + std::string(coords == IntMatrix::identity(r) ? "identity" : "non-identity") +
                " relation on rank " + std::to_string(r);
  }
  if (o.pass)
    o.detail = std::to_string(pairs) + " pairs, " + std::to_string(transpositions) + " transpositions, " +
               std::to_string(kelements) + " [[K]] elements; realize vs index: " + relation;
  return o;
}

// ---- 6 ------------------------------------------------------------------------

std::pair<long long, long long> oracle_class(const ClopenSet& a) {
  const Graph& g = a.graph();
  if (g.vertex_count() == 1) {
    const long long n = static_cast<long long>(g.edge_count());
    return {static_cast<long long>(a.words().size()) % (n - 1), n - 1};
  }
  long long value = 0;
  for (const auto& x : refine_to_level(a, a.max_length())) value += terminal_vertex(g, x) == 0 ? 1 : -1;
  return {value, 0};
}

Outcome hopf_round_trip() {
  Outcome o;
  std::mt19937_64 rng(1006);
  std::size_t equal = 0, unequal = 0;
  for (const auto& g : {full_shift(2), full_shift(3), full_shift(4), golden_mean(), two_one_one_two()}) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = nonempty_clopen(rng, g);
      const auto region = nonempty_clopen(rng, g);
      const auto b = realize_class(region, class_in_K(*g, a).vec);
      if (b.is_empty()) continue;
      const auto h = hopf_witness(a, b);
      o.require(h.source() == a && h.range() == b, "witness does not verify");
      ++equal;
    }
  }
  for (const auto& g : {full_shift(3), full_shift(4), two_one_one_two()}) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = nonempty_clopen(rng, g);
      const auto b = nonempty_clopen(rng, g);
      if (oracle_class(a) == oracle_class(b)) continue;
      bool refused = false;
      try {
        hopf_witness(a, b);
      } catch (const Error& e) {
        refused = e.code() == Errc::ClassesDiffer;
      }
      o.require(refused, "unequal classes accepted");
      ++unequal;
    }
  }
  o.require(equal >= 100, "only " + std::to_string(equal) + " equal-class pairs");
  o.require(unequal >= 50, "only " + std::to_string(unequal) + " unequal-class pairs");
  if (o.pass)
    o.detail = std::to_string(equal) + " equal-class pairs verified, " + std::to_string(unequal) +
               " unequal-class pairs refused";
  return o;
}

// ---- 7 ------------------------------------------------------------------------

Outcome free_product() {
  Outcome o;
  std::size_t total_words = 0;
  for (const auto& g : {full_shift(2), golden_mean(), two_one_one_two(), free_group_boundary(2)}) {
    const auto w = free_product_witness(g);
    const auto id = identity(ClopenSet::whole(g));
    const auto beta2 = compose(w.beta, w.beta);
    o.require(compose(w.alpha, w.alpha) == id && w.alpha != id, "alpha^2");
    o.require(compose(w.beta, beta2) == id && w.beta != id, "beta^3");
    o.require(is_disjoint(w.a, w.b) && image(w.alpha.table(), w.a) == w.b, "alpha(A) = B");
    o.require(is_subset(image(w.beta.table(), w.b), w.a) && is_subset(image(beta2.table(), w.b), w.a),
              "beta(B), beta^2(B) inside A");
    std::function<void(const FullGroupElement&, std::size_t, bool)> grow = [&](const FullGroupElement& cur,
                                                                                std::size_t len, bool last_alpha) {
      if (len > 0) {
        o.require(cur != id, "alternating word equals identity");
        ++total_words;
      }
      if (len == 12) return;
      if (len == 0 || !last_alpha) grow(compose(w.alpha, cur), len + 1, true);
      if (len == 0 || last_alpha) {
        grow(compose(w.beta, cur), len + 1, false);
        grow(compose(beta2, cur), len + 1, false);
      }
    };
    grow(id, 0, false);
  }
  if (o.pass) o.detail = std::to_string(total_words) + " alternating words over 4 graphs";
  return o;
}

// ---- 8 ------------------------------------------------------------------------

Outcome generating_set_check() {
  Outcome o;
  auto f2 = full_shift(2);
  const auto gs = generating_set(ClopenSet::whole(f2));
  const std::size_t oracle = oracle_gamma_count(*f2, 4);
  o.require(gs.elements.size() == oracle, "count " + std::to_string(gs.elements.size()) + " vs oracle " +
                                              std::to_string(oracle));
  for (const auto& g : gs.elements) {
    o.require(order_up_to(g, 2) == 2, "not an involution");
    o.require(is_zero(index(g)), "nonzero index");
    std::vector<Word> moved;
    for (const auto& p : g.pieces())
      if (p.range != p.domain) moved.push_back(p.domain);
    o.require(moved.size() == 2 && pairwise_disjoint_words(moved) && support(g) == ClopenSet(f2, moved),
              "support is not two disjoint cylinders");
  }
  if (o.pass) o.detail = "|F| = " + std::to_string(gs.elements.size()) + " = oracle " + std::to_string(oracle);
  return o;
}

// ---- 9 ------------------------------------------------------------------------

Outcome zipper() {
  Outcome o;
  std::mt19937_64 rng(1009);
  for (const auto& g : property_graphs())
    o.require(zipper_defect(identity(ClopenSet::whole(g))).defect == 0, "identity defect");
  std::size_t count = 0;
  for (const auto& g : property_graphs())
    for (int trial = 0; trial < 60; ++trial, ++count) {
      auto a = random_permutation_element(rng, g);
      if (trial % 2) a = compose(a, random_permutation_element(rng, g));
      const auto z = zipper_defect(a, 100000);
      o.require(z.defect + 1 >= z.m, "defect below m - 1");
    }
  bool stopped = false;
  try {
    zipper_defect(element(full_shift(2), {{"0", "00"}, {"10", "01"}, {"11", "1"}}), 1);
  } catch (const Error& e) {
    stopped = e.code() == Errc::StepBudgetExceeded;
  }
  o.require(stopped, "step budget not enforced");
  o.require(count >= 200, "too few elements");
  if (o.pass) o.detail = std::to_string(count) + " random elements, budget 1e5 steps never exceeded";
  return o;
}

// ---- 10 -----------------------------------------------------------------------

Outcome canonical_form() {
  Outcome o;
  std::mt19937_64 rng(1010);
  int graphs = 0;
  for (; graphs < 25; ++graphs) {
    auto g = random_graph(rng, 5, 3);
    const IntMatrix n = canonical_form_matrix(*g);
    bool shape = n.is_square() && n.rows() >= 1;
    bool has_two = false;
    for (std::size_t i = 0; i < n.rows(); ++i)
      for (std::size_t j = 0; j < n.cols(); ++j)
        if (i == j) {
          shape = shape && n(i, i) >= 2;
          has_two = has_two || n(i, i) == 2;
        } else {
          shape = shape && n(i, j) == 1;
        }
    o.require(shape && has_two, "shape conditions");
    std::vector<std::vector<int>> rows(n.rows(), std::vector<int>(n.cols()));
    for (std::size_t i = 0; i < n.rows(); ++i)
      for (std::size_t j = 0; j < n.cols(); ++j) rows[i][j] = static_cast<int>(n(i, j));
    const Homology a = homology(*g);
    const Homology b = homology(*graph_from_matrix(rows));
    SmallMatrix id_minus(rows.size(), std::vector<long long>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows.size(); ++j) id_minus[i][j] = (i == j) - rows[j][i];
    o.require(a.h0.torsion() == b.h0.torsion() && a.h0.free_rank() == b.h0.free_rank(), "H0 mismatch");
    o.require(a.det == small_det(id_minus), "det mismatch");
  }
  if (o.pass) o.detail = std::to_string(graphs) + " random graphs";
  return o;
}

}  // namespace

int main() {
  const auto start = Clock::now();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"invariant table", invariant_table},
      {"abelianization groups", abelianization_groups},
      {"classification", classification},
      {"group axioms", group_axioms},
      {"index", index_suite},
      {"hopf round trip", hopf_round_trip},
      {"free product witness", free_product},
      {"generating set", generating_set_check},
      {"zipper defect", zipper},
      {"canonical form", canonical_form},
  };
  bool all = true;
  int number = 1;
  for (const auto& [name, run] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::ostringstream line;
    line << number++ << ' ' << (o.pass ? "PASS" : "FAIL") << ' ' << name << " (" << seconds_since(t0) << " s)";
    if (!o.detail.empty()) line << ": " << o.detail;
    std::cout << line.str() << std::endl;
  }
  const double total = seconds_since(start);
  const bool fast = total < 300;
  all = all && fast;
  std::cout << "11 " << (fast ? "PASS" : "FAIL") << " wall clock: " << total << " s for criteria 1-10" << std::endl;
  return all ? 0 : 1;
}
