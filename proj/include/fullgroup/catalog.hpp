#pragma once

#include "fullgroup/graph.hpp"

#include <string>
#include <vector>

namespace fullgroup {

/// r vertices, M(0, r-1) = n and M(i, i-1) = 1; r = 1 is the full n-shift.
GraphPtr full_shift(int n, int r = 1);
/// Vertices a, b; edges e: a->a, f: a->b, g: b->a.
GraphPtr golden_mean();
/// M = [[2,1],[1,2]].
GraphPtr two_one_one_two();
/// Boundary of Z_p * Z_q: M = [[0, p-1], [q-1, 0]].
GraphPtr free_product_boundary(int p, int q);
/// Boundary of the free group on k generators; vertices s1, S1, s2, S2, ...
GraphPtr free_group_boundary(int k);
/// Graph with the given adjacency matrix (vertices v0.., edges e0..), validated.
GraphPtr graph_from_matrix(const std::vector<std::vector<int>>& m);

}  // namespace fullgroup
