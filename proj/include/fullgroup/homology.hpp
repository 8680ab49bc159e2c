#pragma once

#include "fullgroup/clopen.hpp"
#include "fullgroup/lattice.hpp"

#include <optional>
#include <string_view>

namespace fullgroup {

/// Class in the dimension group lim(Z^V, M^t) represented at a level.
struct DimGroupElement {
  std::size_t level = 0;
  IntVector vec;
};

/// Linear data of a graph shared by the homology computations.
struct ShiftLinearData {
  IntMatrix mt;           // M^t
  IntMatrix id_minus_mt;  // id - M^t
  std::size_t stable_index = 0;
  IntMatrix mt_stable;    // (M^t)^s
};

ShiftLinearData shift_linear_data(const Graph& g);

/// Sum of the basis vectors e_{t(w)} raised to a common level (default: the
/// longest word). Throws LevelTooSmall.
DimGroupElement class_in_K(const Graph& g, const ClopenSet& a,
                           std::optional<std::size_t> level = std::nullopt);
DimGroupElement raise_to_level(const Graph& g, const DimGroupElement& x, std::size_t level);
DimGroupElement dim_add(const Graph& g, const DimGroupElement& x, const DimGroupElement& y);
DimGroupElement dim_negate(const DimGroupElement& x);
/// delta^j: multiply by M^t for j > 0, raise the level for j < 0.
DimGroupElement apply_delta(const Graph& g, const DimGroupElement& x, long j);
bool dim_equals(const Graph& g, const DimGroupElement& x, const DimGroupElement& y);
bool dim_equals(const ShiftLinearData& d, const DimGroupElement& x, const DimGroupElement& y);
/// (M^t)^s vec, required to be fixed by M^t. Throws NotInKernel.
IntVector to_kernel_representative(const ShiftLinearData& d, const DimGroupElement& x);
IntVector to_kernel_representative(const Graph& g, const DimGroupElement& x);

struct Homology {
  FgAbelianGroup h0;
  /// Columns: HNF basis of Ker(id - M^t).
  IntMatrix h1_basis;
  FgAbelianGroup bowen_franks;
  Int det;

  std::size_t h1_rank() const noexcept { return h1_basis.cols(); }
};

Homology homology(const Graph& g);

/// Coordinates of [1_A]_G in H0.
IntVector class_in_G(const Homology& h, const Graph& g, const ClopenSet& a);
IntVector class_in_G(const Graph& g, const ClopenSet& a);

/// Coordinates of a kernel vector in the H1 basis. Throws NotKernelVector.
IntVector kernel_coordinates(const Homology& h, const IntVector& w);
/// Kernel vector with the given basis coordinates.
IntVector kernel_vector(const Homology& h, const IntVector& coords);

enum class Verdict { SufficientConditionHolds, InvariantsDiffer, Undecided };
std::string_view verdict_name(Verdict v) noexcept;

Verdict classify(const Graph& g1, const ClopenSet& y1, const Graph& g2, const ClopenSet& y2,
                 const Int& orbit_bound = kDefaultOrbitBound);

/// Off-diagonal 1, diagonal >= 2 with some diagonal entry 2, realizing the
/// Bowen-Franks group and det(id - M^t) of g.
IntMatrix canonical_form_matrix(const Graph& g);

/// (H0 (x) Z_2) + H1.
FgAbelianGroup abelianization(const Homology& h);

}  // namespace fullgroup
