#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gallai/coloring.hpp"
#include "gallai/counting.hpp"
#include "gallai/formulas.hpp"
#include "gallai/pattern.hpp"

namespace gallai {

struct ClassEvaluation {
  EdgeColoring representative;
  BigCount orbit_size = 0;
  std::uint64_t rainbow = 0;
  std::uint64_t mono = 0;
  std::uint64_t total = 0;
};

struct SearchReport {
  // Minimum of (rainbow G copies + monochromatic H copies).
  std::uint64_t value = 0;
  EdgeColoring witness{HostGraph::complete(2), 1, {1}};
  std::uint64_t witness_rainbow = 0;
  std::uint64_t witness_mono = 0;
  std::uint64_t classes_examined = 0;
  std::optional<std::vector<ClassEvaluation>> per_class;
  std::optional<std::uint64_t> formula_value;
  std::optional<bool> formula_agreement;
};

struct SearchOptions {
  std::optional<ClassProfile> profile;
  int threads = 1;
  bool keep_classes = false;
};

// Minimum over every exact k-coloring of the host (one per canonical class).
// Ties go to the least canonical representative.
SearchReport gm_search(const PatternGraph& G, const PatternGraph& H, int k, HostKind kind, int n,
                       const SearchOptions& options = {});
SearchReport gm_search(const std::vector<ColoringClass>& classes, const CopyList& g_copies,
                       const CopyList& h_copies, int threads = 1, bool keep_classes = false);

enum class Verdict { Good, Bad, Infeasible };
std::string verdict_name(Verdict v);

struct GrRow {
  int n = 0;
  // Infeasible: the host has fewer than k edges, so no exact k-coloring
  // exists. Such sizes are never counted as Good.
  Verdict verdict = Verdict::Infeasible;
  std::uint64_t classes_examined = 0;
  // Least canonical coloring with neither a rainbow G nor a monochromatic H.
  std::optional<EdgeColoring> counterexample;
};

struct GrSearchReport {
  std::vector<GrRow> rows;
  // Least N with every n in [N, n_max] Good.
  std::optional<int> least_good;
  std::string scope = "bounded verification";
};

GrSearchReport gr_search(const PatternGraph& G, const PatternGraph& H, int k, HostKind kind,
                         int n_min, int n_max, int threads = 1);

struct TableRanges {
  int complete_t_min = 4;
  int complete_t_max = 7;
  int bipartite_t_min = 3;
  int bipartite_t_max = 5;
  std::vector<int> offsets{-1, -2};
  int threads = 1;
};

struct VerificationRow {
  std::string family;
  int offset = 0;
  int t = 0;
  // Closed form at this t; the H hypotheses are reported separately.
  std::optional<std::uint64_t> formula;
  std::uint64_t search = 0;
  bool agree = false;
  std::string witness_file;
  bool hypotheses = false;
  std::string branch;
  std::string H;
};

struct VerificationReport {
  std::vector<VerificationRow> rows;
  std::vector<EdgeColoring> witnesses;
  bool all_agree() const;
};

// The monochromatic pattern used for a table cell: the star with 2 - offset
// edges, which meets the edge-count minimum of every multiplicity theorem.
PatternGraph conforming_H(int offset);

// Cells of both tables: complete K13, P4 (t >= 4), P4plus, P5 (t >= 5);
// bipartite P4, P5, K13 (t >= 3).
VerificationReport verify_tables(const TableRanges& ranges = {});

struct ThresholdRow {
  int k = 0;
  bool all_rainbow = false;
  std::uint64_t classes_examined = 0;
  std::optional<EdgeColoring> counterexample;
};

struct ThresholdReport {
  HostGraph host = HostGraph::complete(2);
  std::string pattern;
  std::vector<ThresholdRow> rows;
  std::optional<int> expected_threshold;
  // Least T with every k in [T, m] all-rainbow.
  std::optional<int> observed_threshold;
  bool confirmed = false;
  std::optional<EdgeColoring> witness;
  std::string witness_source;
  bool witness_rainbow_free = false;
};

inline constexpr int kMaxThresholdComplete = 5;
inline constexpr int kMaxThresholdBipartite = 3;

// Proposition thresholds: complete P5 n+1, K13 ceil((n+3)/2); bipartite P4
// n+1, P5 and K13 n+2. Other pairs report the observed threshold only.
std::optional<int> expected_rainbow_threshold(HostKind kind, int n, RainbowTarget target);

ThresholdReport rainbow_threshold_check(const HostGraph& host, RainbowTarget target,
                                        int threads = 1);

}  // namespace gallai
