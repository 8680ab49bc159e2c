#include "fullgroup/lattice.hpp"

#include "fullgroup/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace fullgroup {
namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mod_nonneg(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// Smallest nonzero |S(i,j)| over i, j >= t; ties by row-major order.
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const IntMatrix& s, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Int best_abs;
  for (std::size_t i = t; i < s.rows(); ++i)
    for (std::size_t j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      Int v = abs(s(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntMatrix s = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    bool block_zero = false;
    while (true) {
      auto pivot = find_pivot(s, t);
      if (!pivot) {
        block_zero = true;
        break;
      }
      s.swap_rows(t, pivot->first);
      u.swap_rows(t, pivot->first);
      s.swap_cols(t, pivot->second);
      v.swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t) == 0) continue;
        Int q = s(i, t) / s(t, t);
        s.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j) == 0) continue;
        Int q = s(t, j) / s(t, t);
        s.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the remaining block by the pivot.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (s(i, j) % s(t, t) != 0) {
            s.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (block_zero) break;
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(s), std::move(v)};
}

IntMatrix row_hermite_form(const IntMatrix& a) {
  IntMatrix h = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < h.rows(); ++i)
        if (h(i, c) != 0 && (!best || abs(h(i, c)) < abs(h(*best, c)))) best = i;
      if (!best) break;
      h.swap_rows(r, *best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        h.add_row_multiple(i, r, -(h(i, c) / h(r, c)));
        if (h(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) h.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) h.add_row_multiple(i, r, -floor_div(h(i, c), h(r, c)));
    ++r;
  }
  IntMatrix out(r, h.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) out(i, j) = h(i, j);
  return out;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  const SmithForm snf = smith_normal_form(a);
  const std::size_t n = a.cols();
  std::size_t r = 0;
  while (r < std::min(a.rows(), n) && snf.S(r, r) != 0) ++r;
  IntMatrix raw(n - r, n);
  for (std::size_t k = r; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) raw(k - r, i) = snf.V(i, k);
  return row_hermite_form(raw).transpose();
}

FgAbelianGroup::FgAbelianGroup(std::vector<Int> torsion, std::size_t free_rank,
                               IntMatrix projection)
    : torsion_(std::move(torsion)), free_rank_(free_rank), projection_(std::move(projection)) {
  if (projection_.rows() != coordinate_count())
    throw std::invalid_argument("FgAbelianGroup: projection height must match coordinates");
}

FgAbelianGroup FgAbelianGroup::direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
  // Relations on the concatenated coordinate space, renormalized via Smith form.
  const std::size_t ca = a.coordinate_count();
  const std::size_t cb = b.coordinate_count();
  IntMatrix rel(ca + cb, ca + cb);
  for (std::size_t i = 0; i < a.torsion().size(); ++i) rel(i, i) = a.torsion()[i];
  for (std::size_t i = 0; i < b.torsion().size(); ++i) rel(ca + i, ca + i) = b.torsion()[i];
  FgAbelianGroup normalized = cokernel(rel);

  IntMatrix block(ca + cb, a.ambient_dimension() + b.ambient_dimension());
  for (std::size_t i = 0; i < ca; ++i)
    for (std::size_t j = 0; j < a.ambient_dimension(); ++j) block(i, j) = a.projection()(i, j);
  for (std::size_t i = 0; i < cb; ++i)
    for (std::size_t j = 0; j < b.ambient_dimension(); ++j)
      block(ca + i, a.ambient_dimension() + j) = b.projection()(i, j);
  return FgAbelianGroup(normalized.torsion(), normalized.free_rank(),
                        normalized.projection() * block);
}

Int FgAbelianGroup::torsion_order() const {
  Int order = 1;
  for (const auto& d : torsion_) order *= d;
  return order;
}

IntVector FgAbelianGroup::coordinates(const IntVector& ambient) const {
  return reduce(projection_ * ambient);
}

IntVector FgAbelianGroup::reduce(IntVector coords) const {
  if (coords.size() != coordinate_count())
    throw std::invalid_argument("FgAbelianGroup: coordinate vector has wrong length");
  for (std::size_t i = 0; i < torsion_.size(); ++i) coords[i] = mod_nonneg(coords[i], torsion_[i]);
  return coords;
}

IntVector FgAbelianGroup::add(const IntVector& a, const IntVector& b) const {
  return reduce(fullgroup::add(a, b));
}

bool FgAbelianGroup::isomorphic_to(const FgAbelianGroup& other) const {
  return torsion_ == other.torsion_ && free_rank_ == other.free_rank_;
}

std::string FgAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::vector<std::string> parts;
  if (free_rank_ == 1) parts.emplace_back("Z");
  if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
  for (std::size_t i = 0; i < torsion_.size();) {
    std::size_t j = i;
    while (j < torsion_.size() && torsion_[j] == torsion_[i]) ++j;
    std::ostringstream os;
    if (j - i == 1)
      os << "Z_" << torsion_[i];
    else
      os << "(Z_" << torsion_[i] << ")^" << (j - i);
    parts.push_back(os.str());
    i = j;
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

namespace {

// Scales a torsion coordinate by a unit mod d so that the first nonzero entry becomes gcd(entry, d).
void normalize_torsion_row(IntVector& row, const Int& d) {
  for (auto& x : row) x = mod_nonneg(x, d);
  auto first = std::find_if(row.begin(), row.end(), [](const Int& x) { return x != 0; });
  if (first == row.end()) return;
  const Int g = gcd(*first, d);
  const Int a = *first / g;
  const Int dd = d / g;
  // Inverse of a modulo dd by the extended Euclidean algorithm.
  Int r0 = dd, r1 = a % dd, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const Int q = r0 / r1;
    Int next = r0 - q * r1;
    r0 = r1;
    r1 = next;
    next = s0 - q * s1;
    s0 = s1;
    s1 = next;
  }
  Int u = dd == 1 ? Int(1) : mod_nonneg(s0, dd);
  while (gcd(u, d) != 1) u += dd;
  for (auto& x : row) x = mod_nonneg(x * u, d);
}

}  // namespace

FgAbelianGroup cokernel(const IntMatrix& a) {
  const SmithForm snf = smith_normal_form(a);
  const std::size_t m = a.rows();
  const std::size_t diag = std::min(m, a.cols());
  std::vector<Int> torsion;
  std::vector<std::size_t> torsion_rows;
  std::vector<std::size_t> free_rows;
  for (std::size_t i = 0; i < m; ++i) {
    const Int d = i < diag ? snf.S(i, i) : Int(0);
    if (d == 0)
      free_rows.push_back(i);
    else if (d != 1) {
      torsion.push_back(d);
      torsion_rows.push_back(i);
    }
  }
  IntMatrix projection(torsion_rows.size() + free_rows.size(), m);
  std::size_t out = 0;
  for (std::size_t k = 0; k < torsion_rows.size(); ++k) {
    IntVector row = snf.U.row(torsion_rows[k]);
    normalize_torsion_row(row, torsion[k]);
    for (std::size_t j = 0; j < m; ++j) projection(out, j) = row[j];
    ++out;
  }
  for (std::size_t r : free_rows) {
    IntVector row = snf.U.row(r);
    for (const auto& x : row)
      if (x != 0) {
        if (x < 0) row = negate(row);
        break;
      }
    for (std::size_t j = 0; j < m; ++j) projection(out, j) = row[j];
    ++out;
  }
  return FgAbelianGroup(std::move(torsion), free_rows.size(), std::move(projection));
}

namespace {

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
  std::vector<std::pair<Int, unsigned>> out;
  for (Int p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// One primary component Z_{p^e1} + ... + Z_{p^ek}.
struct PrimaryComponent {
  Int p;
  std::vector<Int> moduli;  // p^ei
};

unsigned valuation(Int x, const Int& p) {
  unsigned v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

// Height of x: largest k with x in p^k T; -1 encodes infinity (x == 0).
long height(const std::vector<Int>& x, const Int& p) {
  long h = -1;
  for (const auto& xi : x) {
    if (xi == 0) continue;
    long v = static_cast<long>(valuation(xi, p));
    if (h < 0 || v < h) h = v;
  }
  return h;
}

// (h(x), h(px), h(p^2 x), ...) until the element vanishes.
std::vector<long> ulm_sequence(std::vector<Int> x, const PrimaryComponent& c) {
  std::vector<long> seq;
  while (true) {
    long h = height(x, c.p);
    seq.push_back(h);
    if (h < 0) break;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] * c.p) % c.moduli[i];
  }
  return seq;
}

// All elements of the component in mixed-radix order.
std::vector<std::vector<Int>> enumerate_component(const PrimaryComponent& c) {
  std::vector<std::vector<Int>> all{{}};
  for (const auto& m : c.moduli) {
    std::vector<std::vector<Int>> next;
    for (const auto& prefix : all)
      for (Int x = 0; x < m; ++x) {
        auto e = prefix;
        e.push_back(x);
        next.push_back(std::move(e));
      }
    all = std::move(next);
  }
  return all;
}

}  // namespace

bool orbit_equivalent(const FgAbelianGroup& group, const IntVector& a, const IntVector& b,
                      const Int& torsion_bound) {
  const IntVector ra = group.reduce(a);
  const IntVector rb = group.reduce(b);
  if (ra == rb) return true;

  const std::size_t k = group.torsion().size();
  const IntVector free_a(ra.begin() + static_cast<std::ptrdiff_t>(k), ra.end());
  const IntVector free_b(rb.begin() + static_cast<std::ptrdiff_t>(k), rb.end());
  // GL_r(Z) acts transitively on vectors of equal content.
  const Int g = gcd_of(free_a);
  if (g != gcd_of(free_b)) return false;
  if (k == 0) return true;

  if (group.torsion_order() > torsion_bound)
    throw Error(Errc::TorsionTooLarge, "torsion order " + group.torsion_order().str() +
                                           " exceeds bound " + torsion_bound.str());

  // Automorphisms are block triangular: torsion -> torsion via Aut(T), free -> torsion via
  // an arbitrary homomorphism whose values on the free part sweep out g*T. So we need
  // R in Aut(T) with R t_a in t_b + g T, decided prime by prime.
  std::map<Int, PrimaryComponent> components;
  for (const auto& d : group.torsion())
    for (const auto& [p, e] : factorize(d)) {
      auto& c = components[p];
      c.p = p;
      c.moduli.push_back(boost::multiprecision::pow(p, e));
    }

  for (const auto& [p, comp] : components) {
    std::vector<Int> ta, tb;
    for (std::size_t i = 0; i < k; ++i) {
      const Int& d = group.torsion()[i];
      if (d % p != 0) continue;
      const Int pe = boost::multiprecision::pow(p, valuation(d, p));
      ta.push_back(ra[i] % pe);
      tb.push_back(rb[i] % pe);
    }
    const auto target = ulm_sequence(ta, comp);

    std::set<std::vector<Int>> shifts;
    if (g == 0) {
      shifts.insert(std::vector<Int>(comp.moduli.size()));
    } else {
      for (const auto& z : enumerate_component(comp)) {
        std::vector<Int> gz(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) gz[i] = (g * z[i]) % comp.moduli[i];
        shifts.insert(std::move(gz));
      }
    }
    bool found = false;
    for (const auto& s : shifts) {
      std::vector<Int> y(tb.size());
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = (tb[i] + s[i]) % comp.moduli[i];
      if (ulm_sequence(y, comp) == target) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::size_t stable_kernel_index(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("stable_kernel_index: matrix not square");
  std::size_t j = 0;
  IntMatrix power = IntMatrix::identity(a.rows());
  std::size_t current = a.rows();
  while (true) {
    IntMatrix next = power * a;
    const std::size_t next_rank = rank(next);
    if (next_rank == current) return j;
    current = next_rank;
    power = std::move(next);
    ++j;
  }
}

std::optional<IntVector> integer_solve(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("integer_solve: shape mismatch");
  const SmithForm snf = smith_normal_form(a);
  const IntVector c = snf.U * b;
  const std::size_t diag = std::min(a.rows(), a.cols());
  IntVector y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Int d = i < diag ? snf.S(i, i) : Int(0);
    if (d == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % d != 0) return std::nullopt;
      y[i] = c[i] / d;
    }
  }
  return snf.V * y;
}

FgAbelianGroup tensor_z2(const FgAbelianGroup& group) {
  std::size_t twos = group.free_rank();
  for (const auto& d : group.torsion())
    if (d % 2 == 0) ++twos;
  return FgAbelianGroup(std::vector<Int>(twos, Int(2)), 0, IntMatrix(twos, 0));
}

IntVector free_first(const FgAbelianGroup& group, const IntVector& coords) {
  const std::size_t t = group.torsion().size();
  IntVector out(coords.begin() + static_cast<std::ptrdiff_t>(t), coords.end());
  out.insert(out.end(), coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(t));
  return out;
}

}  // namespace fullgroup
