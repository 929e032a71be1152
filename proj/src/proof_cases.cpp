#include "gallai/proof_cases.hpp"

#include <utility>
#include <vector>

#include "gallai/combinatorics.hpp"
#include "gallai/error.hpp"

namespace gallai {

namespace {

__extension__ using Wide = __int128;

// Saturated binomial C(t - d, b).
Wide Cs(std::int64_t t, std::int64_t d, std::int64_t b) {
  return saturating_binomial(saturating_difference(t, d), b);
}

Wide D(std::int64_t t, std::int64_t d) { return saturating_difference(t, d); }

std::uint64_t narrow(Wide v) {
  if (v < 0 || v > static_cast<Wide>(UINT64_MAX)) throw GuardError("case count out of range");
  return static_cast<std::uint64_t>(v);
}

void check_case(int i, int count) {
  if (i < 1 || i > count) {
    throw ValidationError("case index must be 1.." + std::to_string(count) + ", got " +
                          std::to_string(i));
  }
}

EdgeColoring paint(const HostGraph& host, const std::vector<std::pair<int, int>>& red,
                   const std::vector<std::pair<int, int>>& blue) {
  std::vector<int> colors(host.edge_count(), 0);
  for (const auto& [a, b] : red) colors[host.edge_between(a, b)] = 1;
  for (const auto& [a, b] : blue) colors[host.edge_between(a, b)] = 2;
  int next = blue.empty() ? 2 : 3;
  for (int& c : colors) {
    if (c == 0) c = next++;
  }
  return EdgeColoring{host, next - 1, std::move(colors)};
}

}  // namespace

std::uint64_t complete_star_case(int i, std::int64_t t) {
  check_case(i, kCompleteStarCases);
  const Wide head = Cs(t, 1, 3);
  switch (i) {
    case 1: return narrow(t * head);
    case 2: return narrow(D(t, 1) * head + Cs(t, 3, 3) + 2 * Cs(t, 3, 2));
    case 3: return narrow(D(t, 2) * head + 2 * Cs(t, 3, 3) + 4 * Cs(t, 3, 2));
    case 4: return narrow(D(t, 3) * head + 3 * Cs(t, 3, 3) + 6 * Cs(t, 3, 2));
    case 5: return narrow(D(t, 1) * head + Cs(t, 4, 3) + 3 * Cs(t, 4, 2));
    default: return narrow(D(t, 1) * head + Cs(t, 5, 3) + 4 * Cs(t, 5, 2) + 4 * D(t, 5));
  }
}

std::uint64_t bipartite_star_case(int i, std::int64_t t) {
  check_case(i, kBipartiteStarCases);
  const Wide head = Cs(t, 0, 3);
  switch (i) {
    case 1: return narrow(2 * t * head);
    case 2: return narrow(D(2 * t, 1) * head + Cs(t, 2, 3) + 2 * Cs(t, 2, 2));
    case 3: return narrow(D(2 * t, 2) * head + 2 * Cs(t, 2, 3) + 4 * Cs(t, 2, 2));
    case 4: return narrow(D(2 * t, 1) * head + Cs(t, 3, 3) + 3 * Cs(t, 3, 2));
    default: return narrow(D(2 * t, 1) * head + Cs(t, 4, 3) + 4 * Cs(t, 4, 2) + 4 * D(t, 4));
  }
}

EdgeColoring complete_star_case_coloring(int i, int t) {
  check_case(i, kCompleteStarCases);
  static constexpr int kNeeded[] = {0, 6, 5, 4, 3, 4, 5};
  if (t < kNeeded[i]) {
    throw ValidationError("case " + std::to_string(i) + " needs K_t with t >= " +
                          std::to_string(kNeeded[i]));
  }
  const HostGraph host = HostGraph::complete(t);
  switch (i) {
    case 1: return paint(host, {{0, 1}, {2, 3}, {4, 5}}, {});
    case 2: return paint(host, {{0, 1}, {0, 2}, {3, 4}}, {});
    case 3: return paint(host, {{0, 1}, {1, 2}, {2, 3}}, {});
    case 4: return paint(host, {{0, 1}, {0, 2}, {1, 2}}, {});
    case 5: return paint(host, {{0, 1}, {0, 2}, {0, 3}}, {});
    default: return paint(host, {{0, 1}, {0, 2}}, {{0, 3}, {0, 4}});
  }
}

EdgeColoring bipartite_star_case_coloring(int i, int t) {
  check_case(i, kBipartiteStarCases);
  static constexpr int kNeeded[] = {0, 3, 3, 2, 3, 4};
  if (t < kNeeded[i]) {
    throw ValidationError("case " + std::to_string(i) + " needs K_{t,t} with t >= " +
                          std::to_string(kNeeded[i]));
  }
  const HostGraph host = HostGraph::bipartite(t);
  // u_i is flat vertex i, v_j is flat vertex t + j.
  const int v = t;
  switch (i) {
    case 1: return paint(host, {{0, v}, {1, v + 1}, {2, v + 2}}, {});
    case 2: return paint(host, {{0, v}, {0, v + 1}, {1, v + 2}}, {});
    case 3: return paint(host, {{0, v}, {1, v}, {1, v + 1}}, {});
    case 4: return paint(host, {{0, v}, {0, v + 1}, {0, v + 2}}, {});
    default: return paint(host, {{0, v}, {0, v + 1}}, {{0, v + 2}, {0, v + 3}});
  }
}

}  // namespace gallai
