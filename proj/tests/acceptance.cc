#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gallai/coloring.hpp"
#include "gallai/counting.hpp"
#include "gallai/proof_cases.hpp"
#include "gallai/search.hpp"
#include "gallai/structures.hpp"

using namespace gallai;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& line) {
    if (pass) detail << "\n";
    pass = false;
    detail << "    " << line << "\n";
  }
};

int failures = 0;

void criterion(int id, const char* title, double budget_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > budget_seconds) {
    std::ostringstream msg;
    msg << "took " << secs << " s, budget " << budget_seconds << " s";
    o.fail(msg.str());
  }
  if (!o.pass) ++failures;
  std::printf("%s criterion %d: %s (%.2f s)%s", o.pass ? "PASS" : "FAIL", id, title, secs,
              o.pass ? "\n" : "");
  if (!o.pass) std::printf("%s", o.detail.str().c_str());
  std::fflush(stdout);
}

std::string cell(const VerificationRow& r) {
  std::ostringstream s;
  s << r.family << " offset " << r.offset << " t=" << r.t << ": formula "
    << (r.formula ? std::to_string(*r.formula) : "-") << ", search " << r.search;
  return s.str();
}

const VerificationRow* find_row(const VerificationReport& r, const std::string& family, int offset,
                                int t) {
  for (const auto& row : r.rows) {
    if (row.family == family && row.offset == offset && row.t == t) return &row;
  }
  return nullptr;
}

void expect_literal(Outcome& o, const VerificationReport& r, const std::string& family, int offset,
                    int t, std::uint64_t literal) {
  const VerificationRow* row = find_row(r, family, offset, t);
  if (!row) {
    o.fail("missing cell " + family + " offset " + std::to_string(offset) + " t=" + std::to_string(t));
    return;
  }
  if (row->formula != literal || row->search != literal) {
    o.fail("literal " + std::to_string(literal) + " not reproduced at " + cell(*row));
  }
}

void check_table(Outcome& o, const VerificationReport& r, bool require_hypotheses) {
  for (const auto& row : r.rows) {
    if (!row.agree) o.fail("disagree at " + cell(row) + " [" + row.branch + "]");
    if (require_hypotheses && !row.hypotheses) o.fail("H hypotheses fail at " + cell(row));
  }
}

// Copies containing each unordered pair of edges, tallied in one pass.
std::map<std::pair<int, int>, std::uint64_t> pair_tally(const CopyList& copies) {
  std::map<std::pair<int, int>, std::uint64_t> tally;
  for (std::size_t i = 0; i < copies.size(); ++i) {
    const auto row = copies[i];
    for (std::size_t a = 0; a < row.size(); ++a) {
      for (std::size_t b = a + 1; b < row.size(); ++b) ++tally[{row[a], row[b]}];
    }
  }
  return tally;
}

EdgeColoring random_coloring(const HostGraph& host, std::mt19937& rng) {
  const int m = host.edge_count();
  const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(m));
  std::vector<int> colors(m);
  for (int e = 0; e < m; ++e) colors[e] = e < k ? e + 1 : static_cast<int>(rng() % k) + 1;
  std::shuffle(colors.begin(), colors.end(), rng);
  return EdgeColoring{host, k, colors};
}

bool partition_identity(const CountReport& r) { return r.rainbow + r.other + r.mono_total() == r.total; }

}  // namespace

int main() {
  criterion(1, "Fox-formula equivalence", 5, [](Outcome& o) {
    for (const char* name : {"P2", "P3", "P4", "P5", "K13", "P4plus", "K3", "S3plus"}) {
      const PatternGraph p = builtin_pattern(name);
      for (int n = std::max(2, p.vertex_count()); n <= 8; ++n) {
        const auto fox = fox_count(n, p);
        const auto brute = enumerate_copies(HostGraph::complete(n), p).size();
        if (fox != brute) {
          o.fail(std::string(name) + " n=" + std::to_string(n) + ": fox " + std::to_string(fox) +
                 ", enumeration " + std::to_string(brute));
        }
      }
    }
  });

  criterion(2, "Counting-lemma equivalence", 10, [](Outcome& o) {
    struct Family {
      HostKind kind;
      RainbowTarget target;
      int t_min;
      int t_max;
    };
    const std::vector<Family> families{
        {HostKind::Complete, RainbowTarget::P4, 4, 9},
        {HostKind::Complete, RainbowTarget::P5, 5, 9},
        {HostKind::Complete, RainbowTarget::P4Plus, 5, 9},
        {HostKind::CompleteBipartite, RainbowTarget::P4, 3, 8},
        {HostKind::CompleteBipartite, RainbowTarget::P5, 3, 8},
    };
    for (const auto& f : families) {
      for (int t = f.t_min; t <= f.t_max; ++t) {
        const HostGraph host = f.kind == HostKind::Complete ? HostGraph::complete(t)
                                                            : HostGraph::bipartite(t);
        const auto tally = pair_tally(enumerate_copies(host, target_pattern(f.target)));
        std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> first_mismatch;
        for (int a = 0; a < host.edge_count(); ++a) {
          for (int b = a + 1; b < host.edge_count(); ++b) {
            const auto it = tally.find({a, b});
            const std::uint64_t oracle = it == tally.end() ? 0 : it->second;
            const std::uint64_t lemma = count_containing(host, f.target, EdgeId{a}, EdgeId{b});
            if (lemma == oracle) continue;
            const std::string cls = host.edges_adjacent(EdgeId{a}, EdgeId{b}) ? "adjacent" : "disjoint";
            first_mismatch.emplace(cls, std::make_pair(lemma, oracle));
          }
        }
        for (const auto& [cls, values] : first_mismatch) {
          o.fail(std::string(target_name(f.target)) + " on " + host.descriptor() + " " + cls +
                 " edges: lemma " + std::to_string(values.first) + ", oracle " +
                 std::to_string(values.second));
        }
      }
    }
  });

  criterion(3, "GM table reproduction, complete hosts", 120, [](Outcome& o) {
    TableRanges ranges;
    ranges.bipartite_t_min = 1;
    ranges.bipartite_t_max = 0;
    const VerificationReport r = verify_tables(ranges);
    check_table(o, r, true);
    expect_literal(o, r, "K13", -1, 4, 3);
    expect_literal(o, r, "K13", -1, 5, 18);
    expect_literal(o, r, "K13", -2, 4, 1);
    expect_literal(o, r, "K13", -2, 5, 14);
    expect_literal(o, r, "P4", -1, 4, 8);
    expect_literal(o, r, "P4", -2, 4, 4);
    expect_literal(o, r, "P5", -2, 5, 38);
    expect_literal(o, r, "P5", -2, 6, 288);
    if (r.rows.size() != 28) o.fail("expected 28 cells, got " + std::to_string(r.rows.size()));
  });

  criterion(4, "bi-GM table reproduction, bipartite hosts", 120, [](Outcome& o) {
    TableRanges ranges;
    ranges.complete_t_min = 1;
    ranges.complete_t_max = 0;
    const VerificationReport r = verify_tables(ranges);
    check_table(o, r, false);
    expect_literal(o, r, "bi-K13", -1, 3, 5);
    expect_literal(o, r, "bi-K13", -1, 4, 30);
    expect_literal(o, r, "bi-K13", -2, 3, 4);
    expect_literal(o, r, "bi-K13", -2, 4, 28);
    expect_literal(o, r, "bi-K13", -2, 5, 93);
    if (r.rows.size() != 18) o.fail("expected 18 cells, got " + std::to_string(r.rows.size()));
  });

  criterion(5, "Offset-0 corollaries", 10, [](Outcome& o) {
    TableRanges ranges;
    ranges.offsets = {0};
    const VerificationReport r = verify_tables(ranges);
    check_table(o, r, true);
    expect_literal(o, r, "P5", 0, 5, 60);
    expect_literal(o, r, "bi-K13", 0, 4, 32);
    for (const auto& row : r.rows) {
      const HostGraph host =
          row.family.rfind("bi-", 0) == 0 ? HostGraph::bipartite(row.t) : HostGraph::complete(row.t);
      const std::string name = row.family.rfind("bi-", 0) == 0 ? row.family.substr(3) : row.family;
      const auto copies = enumerate_copies(host, builtin_pattern(name)).size();
      if (row.search != copies) o.fail("offset 0 value is not the copy count at " + cell(row));
    }
  });

  criterion(6, "Structural biconditional", 180, [](Outcome& o) {
    auto sweep = [&](const HostGraph& host, int k_min, const PatternGraph& p, int structure) {
      const HostSymmetry symmetry(host);
      for (int k = k_min; k <= host.edge_count(); ++k) {
        const CopyList copies = enumerate_copies(host, p);
        std::uint64_t bad = 0;
        std::string example;
        for (const auto& c : enumerate_exact_colorings(symmetry, k, EnumerationOptions{{}, 4})) {
          const bool rainbow_free = !has_rainbow(c.representative.colors, copies);
          const StructureVerdict v = classify_structure(c.representative);
          const bool matched = v.matched == structure;
          if (rainbow_free != matched) {
            if (bad++ == 0) {
              for (int x : c.representative.colors) example += std::to_string(x) + " ";
            }
          }
        }
        if (bad) {
          o.fail(host.descriptor() + " k=" + std::to_string(k) + ": " + std::to_string(bad) +
                 " classes break the biconditional, e.g. " + example);
        }
      }
    };
    sweep(HostGraph::complete(4), 4, star_graph(3), 1);
    sweep(HostGraph::complete(5), 4, star_graph(3), 1);
    sweep(HostGraph::bipartite(3), 3, path_graph(4), 3);
  });

  criterion(7, "Threshold propositions", 180, [](Outcome& o) {
    struct Case {
      HostGraph host;
      RainbowTarget target;
      int threshold;
    };
    const std::vector<Case> cases{
        {HostGraph::complete(5), RainbowTarget::P5, 6},
        {HostGraph::complete(5), RainbowTarget::K13, 4},
        {HostGraph::bipartite(3), RainbowTarget::P4, 4},
        {HostGraph::bipartite(3), RainbowTarget::P5, 5},
        {HostGraph::bipartite(3), RainbowTarget::K13, 5},
    };
    for (const auto& c : cases) {
      const ThresholdReport r = rainbow_threshold_check(c.host, c.target, 4);
      const std::string what = std::string(target_name(c.target)) + " on " + c.host.descriptor();
      if (r.observed_threshold != c.threshold || !r.confirmed) {
        o.fail(what + ": observed " +
               (r.observed_threshold ? std::to_string(*r.observed_threshold) : "none") +
               ", expected " + std::to_string(c.threshold));
      }
      if (!r.witness || r.witness->k != c.threshold - 1 || !r.witness_rainbow_free) {
        o.fail(what + ": no rainbow-free witness at k=" + std::to_string(c.threshold - 1));
      }
    }
  });

  criterion(8, "Proof-internal f-values", 5, [](Outcome& o) {
    struct Case {
      bool bipartite;
      int i;
      int t;
      std::uint64_t value;
    };
    const std::vector<Case> cases{
        {false, 4, 5, 14}, {false, 1, 6, 60}, {false, 2, 7, 136}, {true, 4, 5, 93}, {true, 3, 4, 28}};
    for (const auto& c : cases) {
      const EdgeColoring coloring = c.bipartite ? bipartite_star_case_coloring(c.i, c.t)
                                                : complete_star_case_coloring(c.i, c.t);
      const std::uint64_t counted = count_colored(coloring, star_graph(3)).rainbow;
      const std::uint64_t formula = c.bipartite ? bipartite_star_case(c.i, c.t)
                                                : complete_star_case(c.i, c.t);
      if (counted != c.value || formula != c.value) {
        o.fail(std::string(c.bipartite ? "bipartite" : "complete") + " f" + std::to_string(c.i) +
               "(" + std::to_string(c.t) + "): counted " + std::to_string(counted) + ", formula " +
               std::to_string(formula) + ", expected " + std::to_string(c.value));
      }
    }
  });

  criterion(9, "Property suite", 60, [](Outcome& o) {
    const HostGraph k4 = HostGraph::complete(4);
    for (int k = 3; k <= 6; ++k) {
      BigCount sum = 0;
      for (const auto& c : enumerate_exact_colorings(k4, k)) sum += c.orbit_size;
      if (sum != factorial(k) * stirling2(6, k)) {
        o.fail("orbit sum on K_4 at k=" + std::to_string(k) + " is " + to_decimal(sum));
      }
    }

    std::mt19937 rng(20261015);
    const std::vector<HostGraph> hosts{HostGraph::complete(4), HostGraph::complete(5),
                                       HostGraph::complete(6), HostGraph::bipartite(3)};
    const std::vector<std::string> names{"P2", "P3", "P4", "P5", "K13", "P4plus", "K3", "S3plus"};
    for (int trial = 0; trial < 100; ++trial) {
      const HostGraph& host = hosts[trial % hosts.size()];
      const EdgeColoring c = random_coloring(host, rng);
      std::vector<int> relabel(c.k);
      for (int i = 0; i < c.k; ++i) relabel[i] = i + 1;
      std::shuffle(relabel.begin(), relabel.end(), rng);
      const auto autos = host_automorphisms(host);
      const Permutation& g = autos[rng() % autos.size()];
      const EdgeColoring moved = apply_automorphism(c, g);
      const EdgeColoring renamed = relabel_colors(c, relabel);
      for (const auto& name : names) {
        const PatternGraph p = builtin_pattern(name);
        if (host.is_bipartite() && !p.is_bipartite()) continue;
        const CountReport base = count_colored(c, p);
        const CountReport after_g = count_colored(moved, p);
        const CountReport after_r = count_colored(renamed, p);
        std::map<int, std::uint64_t> expected_mono;
        for (const auto& [color, n] : base.mono) expected_mono[relabel[color - 1]] = n;
        if (!(after_g == base)) o.fail("automorphism changed counts, trial " + std::to_string(trial) + " " + name);
        if (after_r.total != base.total || after_r.rainbow != base.rainbow ||
            after_r.other != base.other || after_r.mono != expected_mono) {
          o.fail("relabeling changed counts, trial " + std::to_string(trial) + " " + name);
        }
        if (!partition_identity(base) || !partition_identity(after_g) || !partition_identity(after_r)) {
          o.fail("partition identity broken, trial " + std::to_string(trial) + " " + name);
        }
      }
    }
    for (int k = 1; k <= 6; ++k) {
      for (const auto& cls : enumerate_exact_colorings(k4, k)) {
        for (const auto& name : names) {
          if (!partition_identity(count_colored(cls.representative, builtin_pattern(name)))) {
            o.fail("partition identity broken on a K_4 class with k=" + std::to_string(k));
          }
        }
      }
    }
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
