#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gallai/coloring.hpp"
#include "gallai/pattern.hpp"

namespace gallai {

// Parameters of one of the five colored structures, with explicit vertex
// lists so that a classifier's recovered partition regenerates the input.
//
//   1: K_n, parts[0] = V_1 (may be empty), parts[i] = V_{i+1}. Edges inside
//      V_{i+1} get color i+1, except `one_edges` (vertex pairs) which get 1;
//      all other edges get 1.
//   2: K_n, K_n - center has color 1, center_colors[j] colors the edge from
//      the center to the j-th other vertex in increasing order.
//   3: K_{n,n}, u_parts[i] = U_{i+1} (non-empty); U_{i+1} x V has color i+1.
//   4: K_{n,n}, u1 (non-empty) and u2 split U; v_parts[0] = V_1 may be empty.
//      V_i x U_1 has color i, V_i x U_2 has color 1.
//   5: K_{n,n}, u_parts and v_parts with part 0 possibly empty. U_i x V_i has
//      color i except `one_edges` ((u, v) positions) which get 1; all other
//      edges get 1.
// For 3-5, positions refer to the host side named by u_side playing U.
struct StructureSpec {
  int id = 1;
  int n = 0;
  std::vector<std::vector<int>> parts;
  std::vector<std::pair<int, int>> one_edges;
  int center = 0;
  std::vector<int> center_colors;
  Side u_side = Side::U;
  std::vector<std::vector<int>> u_parts;
  std::vector<int> u1;
  std::vector<int> u2;
  std::vector<std::vector<int>> v_parts;

  friend bool operator==(const StructureSpec&, const StructureSpec&) = default;
};

// Builders that lay parts out on consecutive vertices.
StructureSpec structure1(const std::vector<int>& part_sizes);
StructureSpec structure2(int n, int center, std::vector<int> center_colors);
StructureSpec structure3(const std::vector<int>& u_sizes);
StructureSpec structure4(int u1_size, int u2_size, const std::vector<int>& v_sizes);
StructureSpec structure5(const std::vector<int>& u_sizes, const std::vector<int>& v_sizes);

HostGraph structure_host(const StructureSpec& spec);
EdgeColoring generate_structure(const StructureSpec& spec);

struct StructureVerdict {
  std::optional<int> matched;
  std::optional<StructureSpec> witness;
  // Every structure id that matches, in test order.
  std::vector<int> all_matches;
  // When nothing matches and a probe pattern is given: a rainbow copy.
  std::optional<std::vector<int>> rainbow_copy;
};

// Recovered spec for one structure, trying every color as color 1 and every
// side as U.
std::optional<StructureSpec> match_structure(const EdgeColoring& c, int id);

// Complete hosts test structures 1 then 2; bipartite hosts 3, 4, 5.
StructureVerdict classify_structure(const EdgeColoring& c,
                                    const std::optional<PatternGraph>& probe = std::nullopt);

bool equal_up_to_relabeling(const EdgeColoring& a, const EdgeColoring& b);

}  // namespace gallai
