#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "gallai/coloring.hpp"
#include "gallai/pattern.hpp"

namespace gallai {

// Copies of a pattern under a coloring. Single-edge patterns are counted as
// monochromatic only, so rainbow + other + sum(mono) == total always holds.
struct CountReport {
  std::uint64_t total = 0;
  std::uint64_t rainbow = 0;
  std::map<int, std::uint64_t> mono;
  std::uint64_t other = 0;

  std::uint64_t mono_total() const;
  friend bool operator==(const CountReport&, const CountReport&) = default;
};

// |V(p)|! C(n, |V(p)|) / |Aut(p)|, and 0 when n < |V(p)|.
std::uint64_t fox_count(int n, const PatternGraph& p);

// Copies of P4, P5 or P4plus through two given edges, by the closed forms
// selected on whether the edges are adjacent. Complete hosts: P4 (t >= 4),
// P5 and P4plus (t >= 5). Bipartite hosts: P4 and P5 (t >= 3).
std::uint64_t count_containing(const HostGraph& host, RainbowTarget p, EdgeId e1, EdgeId e2);

// Brute force: copies whose edge set contains every required edge.
std::uint64_t count_containing_oracle(const HostGraph& host, const PatternGraph& p,
                                      std::span<const int> required);
std::uint64_t count_containing_oracle(const CopyList& copies, std::span<const int> required);

CountReport count_colored(const EdgeColoring& c, const PatternGraph& p);
CountReport count_colored(std::span<const int> colors, const CopyList& copies);

bool has_rainbow(const EdgeColoring& c, const PatternGraph& p);
bool has_rainbow(std::span<const int> colors, const CopyList& copies);
std::optional<std::vector<int>> first_rainbow_copy(const EdgeColoring& c, const PatternGraph& p);

// Fast paths for the search loops.
std::uint64_t rainbow_count(std::span<const int> colors, const CopyList& copies);
std::uint64_t mono_count(std::span<const int> colors, const CopyList& copies);
bool has_mono(std::span<const int> colors, const CopyList& copies);

}  // namespace gallai
