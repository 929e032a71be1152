#include "gallai/search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>
#include <tuple>

#include "gallai/error.hpp"
#include "gallai/structures.hpp"

namespace gallai {

namespace {

// Runs body(i) for i in [0, count) on up to `threads` workers.
template <typename Body>
void parallel_for(std::size_t count, int threads, Body&& body) {
  const int workers =
      static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

HostGraph make_host(HostKind kind, int n) {
  return kind == HostKind::Complete ? HostGraph::complete(n) : HostGraph::bipartite(n);
}

// A non-bipartite pattern has no copies in K_{n,n}.
CopyList copies_in(const HostGraph& host, const PatternGraph& p) {
  if (host.is_bipartite() && !p.is_bipartite()) return CopyList(p.edge_count(), {});
  return enumerate_copies(host, p);
}

// Index of the first class failing `good`, or count when all pass.
template <typename Pred>
std::size_t first_failure(std::size_t count, int threads, Pred&& good) {
  std::vector<char> ok(count, 1);
  parallel_for(count, threads, [&](std::size_t i) { ok[i] = good(i) ? 1 : 0; });
  return static_cast<std::size_t>(std::find(ok.begin(), ok.end(), 0) - ok.begin());
}

}  // namespace

SearchReport gm_search(const std::vector<ColoringClass>& classes, const CopyList& g_copies,
                       const CopyList& h_copies, int threads, bool keep_classes) {
  if (classes.empty()) throw ValidationError("gm_search: no exact colorings to examine");
  std::vector<std::uint64_t> rainbow(classes.size());
  std::vector<std::uint64_t> mono(classes.size());
  parallel_for(classes.size(), threads, [&](std::size_t i) {
    const auto& colors = classes[i].representative.colors;
    rainbow[i] = rainbow_count(colors, g_copies);
    mono[i] = mono_count(colors, h_copies);
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < classes.size(); ++i) {
    if (rainbow[i] + mono[i] < rainbow[best] + mono[best]) best = i;
  }
  SearchReport report;
  report.value = rainbow[best] + mono[best];
  report.witness = classes[best].representative;
  report.witness_rainbow = rainbow[best];
  report.witness_mono = mono[best];
  report.classes_examined = classes.size();
  if (keep_classes) {
    std::vector<ClassEvaluation> evals;
    evals.reserve(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
      evals.push_back({classes[i].representative, classes[i].orbit_size, rainbow[i], mono[i],
                       rainbow[i] + mono[i]});
    }
    report.per_class = std::move(evals);
  }
  return report;
}

SearchReport gm_search(const PatternGraph& G, const PatternGraph& H, int k, HostKind kind, int n,
                       const SearchOptions& options) {
  const HostGraph host = make_host(kind, n);
  const auto classes =
      enumerate_exact_colorings(host, k, EnumerationOptions{options.profile, options.threads});
  return gm_search(classes, copies_in(host, G), copies_in(host, H), options.threads,
                   options.keep_classes);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Good: return "Good";
    case Verdict::Bad: return "Bad";
    default: return "Infeasible";
  }
}

GrSearchReport gr_search(const PatternGraph& G, const PatternGraph& H, int k, HostKind kind,
                         int n_min, int n_max, int threads) {
  if (k < 1) throw ValidationError("gr_search: k must be positive, got " + std::to_string(k));
  if (n_min > n_max) throw ValidationError("gr_search: empty n range");
  GrSearchReport report;
  for (int n = n_min; n <= n_max; ++n) {
    const HostGraph host = make_host(kind, n);
    GrRow row;
    row.n = n;
    if (k > host.edge_count()) {
      report.rows.push_back(std::move(row));
      continue;
    }
    const auto classes = enumerate_exact_colorings(host, k, EnumerationOptions{{}, threads});
    const CopyList g = copies_in(host, G);
    const CopyList h = copies_in(host, H);
    const std::size_t bad = first_failure(classes.size(), threads, [&](std::size_t i) {
      const auto& colors = classes[i].representative.colors;
      return has_rainbow(colors, g) || has_mono(colors, h);
    });
    row.classes_examined = classes.size();
    if (bad == classes.size()) {
      row.verdict = Verdict::Good;
    } else {
      row.verdict = Verdict::Bad;
      row.counterexample = classes[bad].representative;
    }
    report.rows.push_back(std::move(row));
  }
  for (auto it = report.rows.rbegin(); it != report.rows.rend(); ++it) {
    if (it->verdict != Verdict::Good) break;
    report.least_good = it->n;
  }
  return report;
}

bool VerificationReport::all_agree() const {
  return std::all_of(rows.begin(), rows.end(), [](const VerificationRow& r) { return r.agree; });
}

PatternGraph conforming_H(int offset) {
  if (offset > 0 || offset < -2) {
    throw ValidationError("offset must be 0, -1 or -2, got " + std::to_string(offset));
  }
  return star_graph(2 - offset);
}

VerificationReport verify_tables(const TableRanges& ranges) {
  struct Family {
    HostKind setting;
    RainbowTarget target;
  };
  const std::vector<Family> families{
      {HostKind::Complete, RainbowTarget::K13},         {HostKind::Complete, RainbowTarget::P4},
      {HostKind::Complete, RainbowTarget::P4Plus},      {HostKind::Complete, RainbowTarget::P5},
      {HostKind::CompleteBipartite, RainbowTarget::P4}, {HostKind::CompleteBipartite, RainbowTarget::P5},
      {HostKind::CompleteBipartite, RainbowTarget::K13},
  };

  std::map<std::tuple<HostKind, int, int>, std::vector<ColoringClass>> class_cache;
  std::map<std::tuple<HostKind, int, std::string>, CopyList> copy_cache;
  auto copies_for = [&](const HostGraph& host, const PatternGraph& p) -> const CopyList& {
    const auto key = std::make_tuple(host.kind(), host.n(), p.name());
    auto it = copy_cache.find(key);
    if (it == copy_cache.end()) it = copy_cache.emplace(key, copies_in(host, p)).first;
    return it->second;
  };

  VerificationReport report;
  for (const int offset : ranges.offsets) {
    const PatternGraph H = conforming_H(offset);
    for (const auto& fam : families) {
      const bool complete = fam.setting == HostKind::Complete;
      const int t_min = complete ? ranges.complete_t_min : ranges.bipartite_t_min;
      const int t_max = complete ? ranges.complete_t_max : ranges.bipartite_t_max;
      for (int t = t_min; t <= t_max; ++t) {
        const auto closed = gm_closed_form(fam.setting, fam.target, t, offset);
        if (!closed) continue;
        const std::int64_t k = k_for(fam.setting, t);
        const int colors = static_cast<int>(k) + offset;
        const HostGraph host = make_host(fam.setting, t);

        const auto key = std::make_tuple(fam.setting, t, colors);
        auto it = class_cache.find(key);
        if (it == class_cache.end()) {
          it = class_cache
                   .emplace(key, enumerate_exact_colorings(host, colors,
                                                           EnumerationOptions{{}, ranges.threads}))
                   .first;
        }
        const SearchReport found =
            gm_search(it->second, copies_for(host, target_pattern(fam.target)),
                      copies_for(host, H), ranges.threads);

        VerificationRow row;
        row.family = std::string(complete ? "" : "bi-") + std::string(target_name(fam.target));
        row.offset = offset;
        row.t = t;
        row.formula = closed->value;
        row.search = found.value;
        row.agree = found.value == closed->value;
        row.branch = closed->branch;
        row.H = H.name();
        row.hypotheses = gm_formula(FormulaQuery{fam.setting, fam.target, k, offset, H})
                             .hypotheses_hold();
        report.rows.push_back(std::move(row));
        report.witnesses.push_back(found.witness);
      }
    }
  }
  return report;
}

std::optional<int> expected_rainbow_threshold(HostKind kind, int n, RainbowTarget target) {
  if (kind == HostKind::Complete) {
    if (target == RainbowTarget::P5) return n + 1;
    if (target == RainbowTarget::K13) return (n + 4) / 2;
    return std::nullopt;
  }
  if (target == RainbowTarget::P4) return n + 1;
  if (target == RainbowTarget::P5 || target == RainbowTarget::K13) return n + 2;
  return std::nullopt;
}

namespace {

// Structure-based coloring with k colors and no rainbow target, if one of the
// standard recipes applies.
std::optional<EdgeColoring> structure_witness(const HostGraph& host, RainbowTarget target, int k) {
  const int n = host.n();
  std::optional<StructureSpec> spec;
  if (!host.is_bipartite()) {
    if (target == RainbowTarget::K13 && n - 2 * (k - 1) >= 0) {
      std::vector<int> sizes{n - 2 * (k - 1)};
      sizes.insert(sizes.end(), k - 1, 2);
      spec = structure1(sizes);
    } else if (target == RainbowTarget::P5 && k - 1 <= n - 1) {
      std::vector<int> colors;
      for (int c = 2; c <= k; ++c) colors.push_back(c);
      colors.resize(n - 1, 1);
      spec = structure2(n, 0, colors);
    }
  } else if (k - 1 <= n) {
    std::vector<int> sizes{n - (k - 1)};
    sizes.insert(sizes.end(), k - 1, 1);
    if (target == RainbowTarget::P4 && sizes[0] >= 1) {
      spec = structure3(sizes);
    } else if (target == RainbowTarget::P5 && n >= 2) {
      spec = structure4(1, n - 1, sizes);
    } else if (target == RainbowTarget::K13) {
      spec = structure5(sizes, sizes);
    }
  }
  if (!spec) return std::nullopt;
  try {
    EdgeColoring c = generate_structure(*spec);
    if (c.k == k) return c;
  } catch (const ValidationError&) {
  }
  return std::nullopt;
}

}  // namespace

ThresholdReport rainbow_threshold_check(const HostGraph& host, RainbowTarget target, int threads) {
  const int limit = host.is_bipartite() ? kMaxThresholdBipartite : kMaxThresholdComplete;
  if (host.n() > limit) {
    throw GuardError("threshold guard: " + host.descriptor() + " exceeds n <= " +
                     std::to_string(limit));
  }
  const PatternGraph p = target_pattern(target);
  const CopyList copies = copies_in(host, p);
  const HostSymmetry symmetry(host);
  const int m = host.edge_count();

  ThresholdReport report;
  report.host = host;
  report.pattern = std::string(target_name(target));
  for (int k = 2; k <= m; ++k) {
    const auto classes = enumerate_exact_colorings(symmetry, k, EnumerationOptions{{}, threads});
    const std::size_t bad = first_failure(classes.size(), threads, [&](std::size_t i) {
      return has_rainbow(classes[i].representative.colors, copies);
    });
    ThresholdRow row;
    row.k = k;
    row.classes_examined = classes.size();
    row.all_rainbow = bad == classes.size();
    if (!row.all_rainbow) row.counterexample = classes[bad].representative;
    report.rows.push_back(std::move(row));
  }
  for (auto it = report.rows.rbegin(); it != report.rows.rend(); ++it) {
    if (!it->all_rainbow) break;
    report.observed_threshold = it->k;
  }
  report.expected_threshold = expected_rainbow_threshold(host.kind(), host.n(), target);
  report.confirmed = report.expected_threshold.has_value() &&
                     report.observed_threshold == report.expected_threshold;

  const std::optional<int> anchor =
      report.expected_threshold ? report.expected_threshold : report.observed_threshold;
  if (anchor && *anchor - 1 >= 2 && *anchor - 1 <= m) {
    const int k = *anchor - 1;
    if (auto built = structure_witness(host, target, k)) {
      report.witness = std::move(built);
      report.witness_source = "structure";
    } else if (report.rows[k - 2].counterexample) {
      report.witness = report.rows[k - 2].counterexample;
      report.witness_source = "search";
    }
    if (report.witness) report.witness_rainbow_free = !has_rainbow(report.witness->colors, copies);
  }
  return report;
}

}  // namespace gallai
