#pragma once

#include <cstdint>

#include "gallai/coloring.hpp"

namespace gallai {

// Rainbow K_{1,3} counts for the near-rainbow (k-2)-colorings of K_t in which
// the repeated colors form
//   1: red 3P2   2: red P3+P2   3: red P4   4: red K3   5: red K13
//   6: red P3 and blue P3 sharing their centre,
// evaluated with C(a,b) = 0 and a-b = 0 whenever a < b.
std::uint64_t complete_star_case(int i, std::int64_t t);

// Same for K_{t,t}:
//   1: red 3P2   2: red P3+P2   3: red P4   4: red K13
//   5: red P3 and blue P3 sharing their centre.
std::uint64_t bipartite_star_case(int i, std::int64_t t);

// The coloring described by case i: red = color 1, blue = color 2, every
// other edge its own color. Throws when t is too small to place the edges.
EdgeColoring complete_star_case_coloring(int i, int t);
EdgeColoring bipartite_star_case_coloring(int i, int t);

inline constexpr int kCompleteStarCases = 6;
inline constexpr int kBipartiteStarCases = 5;

}  // namespace gallai
