#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gallai/host.hpp"

namespace gallai {

// Small simple graph without isolated vertices, used as a rainbow target G,
// a monochromatic target H, or a hypothesis bound graph. Adjacency is kept as
// 64-bit rows, so at most 64 vertices.
class PatternGraph {
 public:
  PatternGraph(int vertex_count, std::vector<std::pair<int, int>> edges,
               std::optional<std::vector<int>> bipartition = std::nullopt,
               std::string name = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::optional<std::vector<int>>& bipartition() const { return bipartition_; }
  const std::string& name() const { return name_; }
  std::uint64_t neighbors(int v) const { return adjacency_[v]; }
  bool has_edge(int a, int b) const { return (adjacency_[a] >> b) & 1U; }
  int degree(int v) const;
  bool is_bipartite() const;
  bool is_complete() const;

  friend bool operator==(const PatternGraph& a, const PatternGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_ &&
           a.bipartition_ == b.bipartition_ && a.name_ == b.name_;
  }

 private:
  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
  std::optional<std::vector<int>> bipartition_;
  std::string name_;
  std::vector<std::uint64_t> adjacency_;
};

inline constexpr int kMaxCountingPatternVertices = 8;
inline constexpr int kMaxContainedPatternVertices = 12;

PatternGraph path_graph(int vertices);
PatternGraph star_graph(int leaves);
PatternGraph complete_graph(int vertices);
PatternGraph multipartite_graph(int parts, int part_size);
PatternGraph matching_graph(int edges);
PatternGraph p4_plus();
PatternGraph s3_plus();

// Builtins by name: "P2".."P5", "K13", "P4plus", "K3", "S3plus", "K1_<k>",
// "Kmulti_<parts>x<size>", "M<j>".
PatternGraph builtin_pattern(std::string_view name);

// Order of Aut(p) by brute force over vertex permutations.
std::uint64_t aut_order(const PatternGraph& p);

// Distinct copies of a pattern in a host, each stored as its sorted edge ids.
// Copies are listed in lexicographic order of those id sequences.
class CopyList {
 public:
  CopyList(int edges_per_copy, std::vector<int> flat)
      : edges_per_copy_(edges_per_copy), flat_(std::move(flat)) {}

  std::size_t size() const {
    return edges_per_copy_ == 0 ? 0 : flat_.size() / static_cast<std::size_t>(edges_per_copy_);
  }
  bool empty() const { return size() == 0; }
  int edges_per_copy() const { return edges_per_copy_; }
  std::span<const int> operator[](std::size_t i) const {
    return {flat_.data() + i * static_cast<std::size_t>(edges_per_copy_),
            static_cast<std::size_t>(edges_per_copy_)};
  }

 private:
  int edges_per_copy_;
  std::vector<int> flat_;
};

CopyList enumerate_copies(const HostGraph& host, const PatternGraph& p);

// Whether h is isomorphic to a (not necessarily induced) subgraph of bound.
bool contains_subgraph(const PatternGraph& bound, const PatternGraph& h);

enum class RainbowTarget { P4, P5, K13, P4Plus };

std::string_view target_name(RainbowTarget target);
RainbowTarget parse_target(std::string_view name);
PatternGraph target_pattern(RainbowTarget target);

// Hypothesis bound graph for the general Gallai-Ramsey theorems at a given
// number of colors. std::nullopt means the theorem bounds H only through
// edge and vertex counts (complete-host P4 and P5).
std::optional<PatternGraph> bound_graph(HostKind setting, RainbowTarget target, int colors);

// Same containment question as contains_subgraph(bound_graph(...), h), but
// valid for arbitrarily many colors: the bound is trimmed to what an
// embedding of h can use.
bool fits_bound(HostKind setting, RainbowTarget target, int colors, const PatternGraph& h);

}  // namespace gallai
