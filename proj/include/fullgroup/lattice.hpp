#pragma once

#include "fullgroup/int_matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fullgroup {

/// U * A * V == S with U, V unimodular and S diagonal with d1 | d2 | ... (d_i >= 0).
struct SmithForm {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;
};

/// Pivot rule: smallest nonzero |entry| in the active block, ties broken by
/// row-major position. Output is deterministic for a fixed input.
SmithForm smith_normal_form(const IntMatrix& a);

/// Row Hermite normal form of the lattice spanned by the rows of `a`:
/// zero rows removed, leading entries positive, entries above a pivot reduced
/// into [0, pivot).
IntMatrix row_hermite_form(const IntMatrix& a);

/// Columns form the unique Hermite-reduced basis of {x in Z^n : A x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

/// Finitely generated abelian group Z_{d1} + ... + Z_{dk} + Z^r presented as a
/// quotient of an ambient Z^n. Torsion coordinates come first, then free ones.
class FgAbelianGroup {
 public:
  FgAbelianGroup() = default;
  FgAbelianGroup(std::vector<Int> torsion, std::size_t free_rank, IntMatrix projection);

  static FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);

  const std::vector<Int>& torsion() const noexcept { return torsion_; }
  std::size_t free_rank() const noexcept { return free_rank_; }
  /// (torsion + free) x ambient matrix mapping ambient vectors to coordinates.
  const IntMatrix& projection() const noexcept { return projection_; }

  std::size_t coordinate_count() const noexcept { return torsion_.size() + free_rank_; }
  std::size_t ambient_dimension() const noexcept { return projection_.cols(); }
  bool is_trivial() const noexcept { return torsion_.empty() && free_rank_ == 0; }
  /// Order of the torsion subgroup.
  Int torsion_order() const;

  /// Coordinates of the class of an ambient vector, torsion entries reduced into [0, d).
  IntVector coordinates(const IntVector& ambient) const;
  /// Reduces an arbitrary coordinate vector.
  IntVector reduce(IntVector coords) const;
  IntVector add(const IntVector& a, const IntVector& b) const;
  IntVector zero() const { return IntVector(coordinate_count()); }

  /// Same invariant factors and free rank.
  bool isomorphic_to(const FgAbelianGroup& other) const;

  /// "0", "Z", "Z^3 + Z_2", "Z^2 + (Z_2)^4": free part first.
  std::string to_string() const;

 private:
  std::vector<Int> torsion_;
  std::size_t free_rank_ = 0;
  IntMatrix projection_;
};

/// Reorders torsion-first coordinates into free-first order, matching to_string().
IntVector free_first(const FgAbelianGroup& group, const IntVector& coords);

/// Z^rows / Im(A).
FgAbelianGroup cokernel(const IntMatrix& a);

inline constexpr long long kDefaultOrbitBound = 10000;

/// Whether some automorphism of `group` maps coordinate vector `a` to `b`.
/// Throws TorsionTooLarge when the torsion order exceeds `torsion_bound`.
bool orbit_equivalent(const FgAbelianGroup& group, const IntVector& a, const IntVector& b,
                      const Int& torsion_bound = kDefaultOrbitBound);

/// Least j >= 0 with rank(A^j) == rank(A^{j+1}).
std::size_t stable_kernel_index(const IntMatrix& a);

/// Some x with A x = b over Z, or nullopt.
std::optional<IntVector> integer_solve(const IntMatrix& a, const IntVector& b);

/// G (x) Z_2 as an all-torsion group (projection is not carried over).
FgAbelianGroup tensor_z2(const FgAbelianGroup& group);

}  // namespace fullgroup
