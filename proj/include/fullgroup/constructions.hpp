#pragma once

#include "fullgroup/element.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace fullgroup {

inline constexpr std::size_t kDefaultStepBudget = 10'000'000;

/// k disjoint subcylinders of C_mu found by breadth-first expansion.
std::vector<Word> split_cylinder(const Graph& g, const Word& mu, std::size_t k);

/// G-set with s = a and r inside b; r is a proper subset of b when a == b.
/// Throws EmptyInput.
PrefixBijection embed_into(const ClopenSet& a, const ClopenSet& b);

/// (U, V) with s(U) = s(V) = a and disjoint ranges inside a.
std::pair<PrefixBijection, PrefixBijection> doubling(const ClopenSet& a);

/// Partition of D_zeta containing at least need[xi] distinguished words ending at xi.
struct DedicatedPartition {
  std::vector<Word> leaves;
  /// dedicated[xi]: distinguished leaves ending at xi (need[xi] of them).
  std::vector<std::vector<Word>> dedicated;
};
DedicatedPartition dedicated_partition(const Graph& g, VertexId zeta, const IntVector& need);

/// Nonempty clopen E inside `region` whose H0 class is the class of the ambient
/// vector `v`. Throws EmptyInput for an empty region.
ClopenSet realize_class(const ClopenSet& region, const IntVector& v);

/// G-set with s = a and r = b. Throws ClassesDiffer, EmptyInput.
PrefixBijection hopf_witness(const ClopenSet& a, const ClopenSet& b);

/// Swap of a and b by a Hopf witness, identity on the rest of y.
/// Throws EmptyInput, NotInAmbient, NotDisjoint, ClassesDiffer.
FullGroupElement transposition(const ClopenSet& a, const ClopenSet& b, const ClopenSet& y);
/// Swap of C_mu and C_nu through U_{mu,nu}. Throws NotComposable, NotInAmbient, NotDisjoint.
FullGroupElement gamma(const Word& mu, const Word& nu, const ClopenSet& y);

struct GeneratingSet {
  std::vector<FullGroupElement> elements;
  /// max(mixing exponent, depth of the ambient actually enumerated).
  std::size_t m = 0;
  /// Set when the ambient lacked C_pq + C_q and the set was conjugated from another ambient.
  std::optional<PrefixBijection> conjugator;
};

/// Throws NotPrimitive, StepBudgetExceeded.
GeneratingSet generating_set(const ClopenSet& y, std::size_t step_budget = kDefaultStepBudget);

struct RealizedIndex {
  FullGroupElement element;
  /// index_vector(element), recorded for comparison with the input.
  IntVector index_vector;
};

/// Element whose index realizes the kernel vector w. Throws NotKernelVector.
RealizedIndex realize_index_element(const GraphPtr& g, const IntVector& w);

struct FreeProductWitness {
  PrefixBijection u;
  PrefixBijection v;
  ClopenSet a;  // r(U)
  ClopenSet b;  // r(V)
  FullGroupElement alpha;
  FullGroupElement beta;
};

FreeProductWitness free_product_witness(const GraphPtr& g);

struct ZipperDefect {
  std::size_t defect = 0;
  std::size_t m = 0;
};

/// Throws AmbientNotX, StepBudgetExceeded.
ZipperDefect zipper_defect(const FullGroupElement& a, std::size_t step_budget = kDefaultStepBudget);

}  // namespace fullgroup
