#include "gallai/counting.hpp"

#include <algorithm>

#include "gallai/combinatorics.hpp"
#include "gallai/error.hpp"

namespace gallai {

namespace {

bool is_rainbow(std::span<const int> colors, std::span<const int> copy) {
  for (std::size_t i = 0; i < copy.size(); ++i) {
    for (std::size_t j = i + 1; j < copy.size(); ++j) {
      if (colors[copy[i]] == colors[copy[j]]) return false;
    }
  }
  return true;
}

bool is_mono(std::span<const int> colors, std::span<const int> copy) {
  for (std::size_t i = 1; i < copy.size(); ++i) {
    if (colors[copy[i]] != colors[copy[0]]) return false;
  }
  return true;
}

void check_edge_count(const HostGraph& host, std::span<const int> colors) {
  if (static_cast<int>(colors.size()) != host.edge_count()) {
    throw ValidationError("coloring does not match host " + host.descriptor());
  }
}

}  // namespace

std::uint64_t CountReport::mono_total() const {
  std::uint64_t sum = 0;
  for (const auto& [color, count] : mono) sum += count;
  return sum;
}

std::uint64_t fox_count(int n, const PatternGraph& p) {
  const int v = p.vertex_count();
  if (n < 2) throw ValidationError("fox_count requires n >= 2");
  if (n < v) return 0;
  const BigCount value =
      factorial(v) * static_cast<BigCount>(binomial(n, v)) / static_cast<BigCount>(aut_order(p));
  if (value > UINT64_MAX) throw GuardError("fox_count overflow");
  return static_cast<std::uint64_t>(value);
}

std::uint64_t count_containing(const HostGraph& host, RainbowTarget p, EdgeId e1, EdgeId e2) {
  if (e1 == e2) throw ValidationError("count_containing needs two distinct edges");
  const bool adjacent = host.edges_adjacent(e1, e2);
  const std::uint64_t t = static_cast<std::uint64_t>(host.n());
  auto need = [&](std::uint64_t minimum) {
    if (t < minimum) {
      throw ValidationError("closed form for " + std::string(target_name(p)) + " on " +
                            host.descriptor() + " needs t >= " + std::to_string(minimum));
    }
  };
  if (!host.is_bipartite()) {
    switch (p) {
      case RainbowTarget::P4: need(4); return adjacent ? 2 * (t - 3) : 4;
      case RainbowTarget::P5: need(5); return adjacent ? 3 * (t - 3) * (t - 4) : 12 * (t - 4);
      case RainbowTarget::P4Plus: need(5); return adjacent ? 5 * (t - 3) * (t - 4) : 8 * (t - 4);
      case RainbowTarget::K13: break;
    }
  } else {
    switch (p) {
      case RainbowTarget::P4: need(3); return adjacent ? 2 * (t - 1) : 2;
      case RainbowTarget::P5: need(3); return adjacent ? 3 * (t - 1) * (t - 2) : 6 * (t - 2);
      case RainbowTarget::P4Plus:
      case RainbowTarget::K13: break;
    }
  }
  throw ValidationError("no closed form for " + std::string(target_name(p)) + " on " +
                        host.descriptor());
}

std::uint64_t count_containing_oracle(const HostGraph& host, const PatternGraph& p,
                                      std::span<const int> required) {
  for (int e : required) {
    if (e < 0 || e >= host.edge_count()) {
      throw ValidationError("edge " + std::to_string(e) + " out of range for " +
                            host.descriptor());
    }
  }
  return count_containing_oracle(enumerate_copies(host, p), required);
}

std::uint64_t count_containing_oracle(const CopyList& copies, std::span<const int> required) {
  if (required.empty()) throw ValidationError("required edge set is empty");
  std::vector<int> need(required.begin(), required.end());
  std::sort(need.begin(), need.end());
  need.erase(std::unique(need.begin(), need.end()), need.end());
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < copies.size(); ++i) {
    const auto copy = copies[i];
    if (std::includes(copy.begin(), copy.end(), need.begin(), need.end())) ++count;
  }
  return count;
}

CountReport count_colored(const EdgeColoring& c, const PatternGraph& p) {
  require_valid(c);
  return count_colored(c.colors, enumerate_copies(c.host, p));
}

CountReport count_colored(std::span<const int> colors, const CopyList& copies) {
  CountReport report;
  report.total = copies.size();
  for (std::size_t i = 0; i < copies.size(); ++i) {
    const auto copy = copies[i];
    if (is_mono(colors, copy)) {
      ++report.mono[colors[copy[0]]];
    } else if (is_rainbow(colors, copy)) {
      ++report.rainbow;
    } else {
      ++report.other;
    }
  }
  return report;
}

bool has_rainbow(const EdgeColoring& c, const PatternGraph& p) {
  return first_rainbow_copy(c, p).has_value();
}

bool has_rainbow(std::span<const int> colors, const CopyList& copies) {
  if (copies.edges_per_copy() < 2) return false;
  for (std::size_t i = 0; i < copies.size(); ++i) {
    if (is_rainbow(colors, copies[i])) return true;
  }
  return false;
}

std::optional<std::vector<int>> first_rainbow_copy(const EdgeColoring& c, const PatternGraph& p) {
  require_valid(c);
  check_edge_count(c.host, c.colors);
  const CopyList copies = enumerate_copies(c.host, p);
  if (copies.edges_per_copy() < 2) return std::nullopt;
  for (std::size_t i = 0; i < copies.size(); ++i) {
    const auto copy = copies[i];
    if (is_rainbow(c.colors, copy)) return std::vector<int>(copy.begin(), copy.end());
  }
  return std::nullopt;
}

std::uint64_t rainbow_count(std::span<const int> colors, const CopyList& copies) {
  if (copies.edges_per_copy() < 2) return 0;
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < copies.size(); ++i) count += is_rainbow(colors, copies[i]) ? 1 : 0;
  return count;
}

std::uint64_t mono_count(std::span<const int> colors, const CopyList& copies) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < copies.size(); ++i) count += is_mono(colors, copies[i]) ? 1 : 0;
  return count;
}

bool has_mono(std::span<const int> colors, const CopyList& copies) {
  for (std::size_t i = 0; i < copies.size(); ++i) {
    if (is_mono(colors, copies[i])) return true;
  }
  return false;
}

}  // namespace gallai
