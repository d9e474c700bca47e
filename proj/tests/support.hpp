#pragma once

// Shared helpers for the test suites. Cycle notation is accepted here as
// input sugar only; the library's canonical form is one-line notation.

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "pancake/graph.hpp"
#include "pancake/permutation.hpp"

namespace testsupport {

/// Build a permutation of S_n from disjoint cycles, e.g.
/// from_cycles(4, {{1,2},{3,4}}) == one-line [2,1,4,3].
/// Each cycle (a b c) maps a->b, b->c, c->a.
inline pancake::Permutation from_cycles(
    int n, std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) img[static_cast<std::size_t>(k - 1)] = k;
  for (const auto& cyc : cycles) {
    std::vector<int> c(cyc);
    for (std::size_t i = 0; i < c.size(); ++i)
      img[static_cast<std::size_t>(c[i] - 1)] = c[(i + 1) % c.size()];
  }
  return pancake::Permutation(img);
}

inline std::vector<pancake::vertex_t> ids_of(
    const pancake::PancakeGraph& g,
    std::initializer_list<std::vector<int>> one_line_forms) {
  std::vector<pancake::vertex_t> ids;
  for (const auto& f : one_line_forms)
    ids.push_back(g.id_of(pancake::Permutation(f)));
  std::sort(ids.begin(), ids.end());
  return ids;
}

inline std::vector<pancake::vertex_t> sorted(std::vector<pancake::vertex_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace testsupport
