#include "fullgroup/homology.hpp"

#include "fullgroup/error.hpp"

#include <algorithm>

namespace fullgroup {

ShiftLinearData shift_linear_data(const Graph& g) {
  ShiftLinearData d;
  d.mt = g.adjacency_transpose();
  d.id_minus_mt = IntMatrix::identity(g.vertex_count()) - d.mt;
  d.stable_index = stable_kernel_index(d.mt);
  d.mt_stable = matrix_power(d.mt, d.stable_index);
  return d;
}

DimGroupElement raise_to_level(const Graph& g, const DimGroupElement& x, std::size_t level) {
  if (level < x.level) throw Error(Errc::LevelTooSmall, "cannot lower the level of a class");
  if (level == x.level) return x;
  return {level, matrix_power(g.adjacency_transpose(), level - x.level) * x.vec};
}

DimGroupElement class_in_K(const Graph& g, const ClopenSet& a, std::optional<std::size_t> level) {
  const std::size_t top = level.value_or(a.max_length());
  if (top < a.max_length())
    throw Error(Errc::LevelTooSmall, "level " + std::to_string(top) + " is below word length " +
                                         std::to_string(a.max_length()));
  const IntMatrix mt = g.adjacency_transpose();
  // Accumulate level by level: raise the partial sum, then add the words of that length.
  IntVector acc(g.vertex_count());
  for (std::size_t len = 0; len <= top; ++len) {
    if (len > 0) acc = mt * acc;
    for (const auto& w : a.words())
      if (w.length() == len) acc[terminal_vertex(g, w)] += 1;
  }
  return {top, acc};
}

DimGroupElement dim_add(const Graph& g, const DimGroupElement& x, const DimGroupElement& y) {
  const std::size_t level = std::max(x.level, y.level);
  return {level, add(raise_to_level(g, x, level).vec, raise_to_level(g, y, level).vec)};
}

DimGroupElement dim_negate(const DimGroupElement& x) { return {x.level, negate(x.vec)}; }

DimGroupElement apply_delta(const Graph& g, const DimGroupElement& x, long j) {
  if (j >= 0) return {x.level, matrix_power(g.adjacency_transpose(), static_cast<std::size_t>(j)) * x.vec};
  return {x.level + static_cast<std::size_t>(-j), x.vec};
}

bool dim_equals(const ShiftLinearData& d, const DimGroupElement& x, const DimGroupElement& y) {
  const DimGroupElement& lo = x.level <= y.level ? x : y;
  const DimGroupElement& hi = x.level <= y.level ? y : x;
  IntVector diff = subtract(matrix_power(d.mt, hi.level - lo.level) * lo.vec, hi.vec);
  return is_zero(d.mt_stable * diff);
}

bool dim_equals(const Graph& g, const DimGroupElement& x, const DimGroupElement& y) {
  return dim_equals(shift_linear_data(g), x, y);
}

IntVector to_kernel_representative(const ShiftLinearData& d, const DimGroupElement& x) {
  IntVector w = d.mt_stable * x.vec;
  if (!is_zero(d.id_minus_mt * w))
    throw Error(Errc::NotInKernel, "class " + to_string(x.vec) + " at level " +
                                       std::to_string(x.level) + " is not fixed by delta");
  return w;
}

IntVector to_kernel_representative(const Graph& g, const DimGroupElement& x) {
  return to_kernel_representative(shift_linear_data(g), x);
}

Homology homology(const Graph& g) {
  Homology h;
  const IntMatrix a = IntMatrix::identity(g.vertex_count()) - g.adjacency_transpose();
  h.h0 = cokernel(a);
  h.h1_basis = kernel_basis(a);
  h.bowen_franks = h.h0;
  h.det = determinant(a);
  return h;
}

IntVector class_in_G(const Homology& h, const Graph& g, const ClopenSet& a) {
  return h.h0.coordinates(class_in_K(g, a).vec);
}

IntVector class_in_G(const Graph& g, const ClopenSet& a) { return class_in_G(homology(g), g, a); }

IntVector kernel_coordinates(const Homology& h, const IntVector& w) {
  if (h.h1_basis.cols() == 0) {
    if (!is_zero(w)) throw Error(Errc::NotKernelVector, to_string(w) + " is not in Ker(id - M^t)");
    return {};
  }
  auto c = integer_solve(h.h1_basis, w);
  if (!c) throw Error(Errc::NotKernelVector, to_string(w) + " is not in Ker(id - M^t)");
  return *c;
}

IntVector kernel_vector(const Homology& h, const IntVector& coords) {
  if (coords.size() != h.h1_basis.cols())
    throw Error(Errc::NotKernelVector, "expected " + std::to_string(h.h1_basis.cols()) +
                                           " kernel coordinates, got " +
                                           std::to_string(coords.size()));
  if (coords.empty()) return IntVector(h.h1_basis.rows());
  return h.h1_basis * coords;
}

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::SufficientConditionHolds: return "SufficientConditionHolds";
    case Verdict::InvariantsDiffer: return "InvariantsDiffer";
    case Verdict::Undecided: return "Undecided";
  }
  return "?";
}

Verdict classify(const Graph& g1, const ClopenSet& y1, const Graph& g2, const ClopenSet& y2,
                 const Int& orbit_bound) {
  if (y1.is_empty() || y2.is_empty()) throw Error(Errc::EmptyInput, "ambient set is empty");
  const Homology h1 = homology(g1);
  const Homology h2 = homology(g2);
  if (!h1.h0.isomorphic_to(h2.h0) || h1.h1_rank() != h2.h1_rank())
    return Verdict::InvariantsDiffer;
  // Isomorphic groups share the normalized coordinate system.
  if (!orbit_equivalent(h1.h0, class_in_G(h1, g1, y1), class_in_G(h2, g2, y2), orbit_bound))
    return Verdict::InvariantsDiffer;
  return h1.det == h2.det ? Verdict::SufficientConditionHolds : Verdict::Undecided;
}

IntMatrix canonical_form_matrix(const Graph& g) {
  const Homology h = homology(g);
  std::vector<Int> d = h.h0.torsion();
  for (std::size_t i = 0; i < h.h0.free_rank(); ++i) d.push_back(0);
  auto det_of = [](const std::vector<Int>& factors) {
    Int p = 1;
    for (const auto& x : factors) p *= x;
    return (factors.size() + 1) % 2 == 0 ? p : Int(-p);
  };
  if (det_of(d) != h.det) d.push_back(1);
  const std::size_t n = d.size() + 1;
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? Int(2) : Int(1);
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i] + 2;
  return m;
}

FgAbelianGroup abelianization(const Homology& h) {
  const std::size_t r = h.h1_rank();
  return FgAbelianGroup::direct_sum(tensor_z2(h.h0),
                                    FgAbelianGroup({}, r, IntMatrix::identity(r)));
}

}  // namespace fullgroup
