#pragma once

#include "fullgroup/catalog.hpp"
#include "fullgroup/constructions.hpp"
#include "fullgroup/error.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace testing_support {

using namespace fullgroup;

using SmallMatrix = std::vector<std::vector<long long>>;

// ---- builders --------------------------------------------------------------

/// Word spelled with single-character edge names, e.g. w(g, "010").
Word w(const Graph& g, const std::string& letters);
ClopenSet set_of(const GraphPtr& g, const std::vector<std::string>& words);
FullGroupElement element(const GraphPtr& g, const std::vector<std::pair<std::string, std::string>>& pieces);

/// The graphs used by the property suites.
std::vector<GraphPtr> property_graphs();

// ---- random objects ----------------------------------------------------------

/// Random valid graph with at most max_vertices vertices and entries at most max_entry.
GraphPtr random_graph(std::mt19937_64& rng, int max_vertices, int max_entry);
/// Random partition of `base` into at most max_pieces cylinders of depth at most max_depth.
std::vector<Word> random_partition(std::mt19937_64& rng, const ClopenSet& base, std::size_t max_pieces,
                                   std::size_t max_depth);
ClopenSet random_clopen(std::mt19937_64& rng, const GraphPtr& g, std::size_t max_pieces = 8,
                        std::size_t max_depth = 5);
/// Random element of [[G]]: a terminal-vertex-preserving permutation of a random partition.
FullGroupElement random_permutation_element(std::mt19937_64& rng, const GraphPtr& g,
                                            std::size_t max_pieces = 8, std::size_t max_depth = 5);
/// Random element of [[K]]: every piece keeps the word length.
FullGroupElement random_length_preserving_element(std::mt19937_64& rng, const GraphPtr& g,
                                                  std::size_t max_pieces = 8, std::size_t max_depth = 5);
/// Random point of X (preperiod up to 4 edges, cycle up to 4 edges).
Point random_point(std::mt19937_64& rng, const Graph& g);

// ---- independent oracles ---------------------------------------------------

SmallMatrix small_adjacency(const Graph& g);
SmallMatrix small_multiply(const SmallMatrix& a, const SmallMatrix& b);
/// Least m with every entry of M^m at least 3, by plain matrix powers.
std::size_t oracle_mixing_exponent(const Graph& g, std::size_t limit = 64);
/// gcd of the lengths k <= limit with trace(M^k) > 0.
std::size_t oracle_period(const Graph& g, std::size_t limit = 64);
/// Invariant factors d_k / d_{k-1} from gcds of k x k minors (1s dropped, 0s kept).
std::vector<long long> oracle_invariant_factors(const SmallMatrix& a);
long long small_det(const SmallMatrix& a);

/// Image of a finite word under a table (nullopt when no domain word is a prefix).
std::optional<Word> oracle_apply(const PrefixBijection& t, const Word& x);

/// Words of length 1..max-1 that are not inside any cylinder of `words`.
std::size_t oracle_outside_count(const Graph& g, const std::vector<Word>& words);

/// Membership of every word of length `level` in the set, as a bit vector.
std::vector<bool> oracle_membership(const ClopenSet& s, std::size_t level);

/// Number of gamma generators for Y = X by exhaustive enumeration of word pairs.
std::size_t oracle_gamma_count(const Graph& g, std::size_t top);

/// Sum over pieces of delta^(-n)[C_nu] at a common level, in 64-bit arithmetic,
/// then multiplied by (M^t)^dim so the result is the kernel representative.
std::vector<long long> oracle_index_vector(const FullGroupElement& a);

/// Aut(Z_{d1} + ... + Z_{dk}) by enumerating generator images; row i is the image of generator i.
std::vector<SmallMatrix> oracle_automorphisms(const std::vector<long long>& factors);
std::vector<long long> oracle_apply_automorphism(const std::vector<long long>& factors, const SmallMatrix& phi,
                                                 const std::vector<long long>& x);
/// Every element of Z_{d1} + ... + Z_{dk} in lexicographic order.
std::vector<std::vector<long long>> oracle_elements(const std::vector<long long>& factors);

}  // namespace testing_support
