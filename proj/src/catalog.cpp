#include "fullgroup/catalog.hpp"

#include <memory>

namespace fullgroup {

GraphPtr graph_from_matrix(const std::vector<std::vector<int>>& m) {
  auto g = std::make_shared<const Graph>(Graph::from_matrix(m));
  validate_graph(*g);
  return g;
}

GraphPtr full_shift(int n, int r) {
  if (r == 1) {
    std::vector<EdgeSpec> edges;
    for (int i = 0; i < n; ++i) edges.push_back({std::to_string(i), "v", "v"});
    auto g = std::make_shared<const Graph>(Graph({"v"}, edges));
    validate_graph(*g);
    return g;
  }
  std::vector<std::vector<int>> m(r, std::vector<int>(r, 0));
  m[0][r - 1] = n;
  for (int i = 1; i < r; ++i) m[i][i - 1] = 1;
  return graph_from_matrix(m);
}

GraphPtr golden_mean() {
  auto g = std::make_shared<const Graph>(
      Graph({"a", "b"}, {{"e", "a", "a"}, {"f", "a", "b"}, {"g", "b", "a"}}));
  validate_graph(*g);
  return g;
}

GraphPtr two_one_one_two() { return graph_from_matrix({{2, 1}, {1, 2}}); }

GraphPtr free_product_boundary(int p, int q) {
  return graph_from_matrix({{0, p - 1}, {q - 1, 0}});
}

GraphPtr free_group_boundary(int k) {
  const int n = 2 * k;
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) {
    names.push_back("s" + std::to_string(i));
    names.push_back("S" + std::to_string(i));
  }
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 1));
  for (int i = 0; i < k; ++i) {
    m[2 * i][2 * i + 1] = 0;
    m[2 * i + 1][2 * i] = 0;
  }
  auto g = std::make_shared<const Graph>(Graph::from_matrix(m, names));
  validate_graph(*g);
  return g;
}

}  // namespace fullgroup
