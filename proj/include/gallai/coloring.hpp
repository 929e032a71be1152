#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gallai/combinatorics.hpp"
#include "gallai/host.hpp"

namespace gallai {

// Exact k-edge-coloring: colors[e] in 1..k for every edge index e.
struct EdgeColoring {
  HostGraph host;
  int k = 0;
  std::vector<int> colors;

  friend bool operator==(const EdgeColoring& a, const EdgeColoring& b) {
    return a.host == b.host && a.k == b.k && a.colors == b.colors;
  }
};

// Every problem with the coloring; empty when it is a valid exact coloring.
std::vector<std::string> validate(const EdgeColoring& c);
void require_valid(const EdgeColoring& c);

// Color class sizes, sorted in non-increasing order.
using ClassProfile = std::vector<int>;

ClassProfile normalize_profile(std::vector<int> sizes);
ClassProfile profile_of(const EdgeColoring& c);
// All profiles with exactly k parts summing to m, in decreasing lexicographic order.
std::vector<ClassProfile> profiles_for(int m, int k);
// Number of set partitions of m labeled edges with the given block sizes.
BigCount labeled_partition_count(int m, const ClassProfile& profile);

// Relabel colors by order of first occurrence along the edge order (1-based).
std::vector<int> first_occurrence_relabel(std::span<const int> colors);

// Coloring moved by a vertex automorphism: result[image(e)] = colors[e].
EdgeColoring apply_automorphism(const EdgeColoring& c, const Permutation& p);
// Colors permuted: result[e] = relabel[colors[e] - 1].
EdgeColoring relabel_colors(const EdgeColoring& c, const std::vector<int>& relabel);

// Materialized host automorphism group stored as inverse edge permutations.
class HostSymmetry {
 public:
  explicit HostSymmetry(const HostGraph& host);

  const HostGraph& host() const { return host_; }
  std::size_t size() const { return count_; }
  // inverse(g)[e] is the edge that g maps onto e.
  std::span<const std::uint8_t> inverse(std::size_t g) const {
    return {inverse_.data() + g * static_cast<std::size_t>(m_), static_cast<std::size_t>(m_)};
  }

 private:
  HostGraph host_;
  int m_;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> inverse_;
};

// Orbit representative under host automorphisms and color relabeling: the
// least first-occurrence-relabeled color sequence over the group.
EdgeColoring canonicalize(const EdgeColoring& c);
EdgeColoring canonicalize(const EdgeColoring& c, const HostSymmetry& symmetry);

struct ColoringClass {
  EdgeColoring representative;
  // Number of color-class partitions in the orbit, |Aut| / stabilizer.
  std::uint64_t partition_orbit = 0;
  std::uint64_t stabilizer = 0;
  // Labeled-color colorings in the orbit: k! * partition_orbit.
  BigCount orbit_size = 0;
};

struct EnumerationOptions {
  std::optional<ClassProfile> profile;
  int threads = 1;
};

inline constexpr int kMaxEnumerationComplete = 6;
inline constexpr int kMaxEnumerationCompleteNearRainbow = 7;
inline constexpr int kMaxEnumerationBipartite = 4;
inline constexpr int kMaxEnumerationBipartiteNearRainbow = 5;
inline constexpr std::uint64_t kEnumerationBudget = 50'000'000;

// Throws GuardError or ValidationError when the enumeration is not allowed.
void check_enumeration(const HostGraph& host, int k, const std::optional<ClassProfile>& profile);

// One representative per class of exact k-colorings under host automorphisms
// and color relabeling, sorted by representative.
std::vector<ColoringClass> enumerate_exact_colorings(const HostGraph& host, int k,
                                                     const EnumerationOptions& options = {});
std::vector<ColoringClass> enumerate_exact_colorings(const HostSymmetry& symmetry, int k,
                                                     const EnumerationOptions& options = {});

}  // namespace gallai
