#include "gallai/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "gallai/counting.hpp"
#include "gallai/error.hpp"
#include "gallai/formulas.hpp"
#include "gallai/search.hpp"
#include "gallai/structures.hpp"

namespace gallai {

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "table") return Format::Table;
  throw ValidationError("format must be json, csv or table, got \"" + name + "\"");
}

std::string emit_report(const Report& report, Format format) {
  switch (format) {
    case Format::Json: return dump_json(report.json);
    case Format::Csv: return report.csv;
    default: return report.table;
  }
}

namespace {

// Raised when a theorem's hypotheses do not cover the query; the report is
// still emitted before exiting with the validation code.
struct HypothesisFailure {
  Report report;
  std::string message;
};

struct Options {
  std::string host;
  std::string pattern;
  std::string coloring;
  std::string edges;
  std::string H;
  std::string profile;
  std::string format = "json";
  std::string out;
  std::string structure;
  std::string setting = "complete";
  std::string quantity = "gm";
  std::string witness_dir;
  std::optional<int> k;
  std::optional<int> t;
  int offset = 0;
  int threads = 1;
  std::optional<int> n_min;
  std::optional<int> n_max;
  bool per_class = false;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError(std::string("malformed ") + what + " \"" + text + "\"");
    }
  }
  if (values.empty()) throw ValidationError(std::string("empty ") + what);
  return values;
}

HostKind parse_setting(const std::string& s) {
  if (s == "complete") return HostKind::Complete;
  if (s == "bipartite") return HostKind::CompleteBipartite;
  throw ValidationError("setting must be complete or bipartite, got \"" + s + "\"");
}

std::string setting_name(HostKind kind) {
  return kind == HostKind::Complete ? "complete" : "bipartite";
}

template <typename T>
const T& need(const std::optional<T>& value, const char* flag) {
  if (!value) throw ValidationError(std::string("missing required flag ") + flag);
  return *value;
}

const std::string& need(const std::string& value, const char* flag) {
  if (value.empty()) throw ValidationError(std::string("missing required flag ") + flag);
  return value;
}

Json big_json(BigCount v) {
  if (v <= UINT64_MAX) return Json(static_cast<std::uint64_t>(v));
  return Json(to_decimal(v));
}

std::string colors_text(const std::vector<int>& colors) {
  std::string s;
  for (std::size_t i = 0; i < colors.size(); ++i) s += (i ? "," : "") + std::to_string(colors[i]);
  return s;
}

std::string kv_csv(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::string out = "key,value\n";
  for (const auto& [k, v] : rows) out += k + "," + v + "\n";
  return out;
}

std::string kv_table(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::vector<std::vector<std::string>> body;
  for (const auto& [k, v] : rows) body.push_back({k, v});
  return format_table({"field", "value"}, body);
}

Report kv_report(Json json, const std::vector<std::pair<std::string, std::string>>& rows) {
  return Report{std::move(json), kv_csv(rows), kv_table(rows)};
}

std::string report_csv(const CountReport& r) {
  std::string out = "total,rainbow,other,mono_total\n";
  out += std::to_string(r.total) + "," + std::to_string(r.rainbow) + "," +
         std::to_string(r.other) + "," + std::to_string(r.mono_total()) + "\n";
  return out;
}

std::string report_table(const CountReport& r) {
  std::vector<std::vector<std::string>> body{{"total", std::to_string(r.total)},
                                             {"rainbow", std::to_string(r.rainbow)},
                                             {"other", std::to_string(r.other)}};
  for (const auto& [color, count] : r.mono) {
    body.push_back({"mono color " + std::to_string(color), std::to_string(count)});
  }
  return format_table({"copies", "count"}, body);
}

Json hypotheses_json(const std::vector<HypothesisCheck>& checks) {
  Json out = Json::array();
  for (const auto& h : checks) out.push_back(Json{{"condition", h.condition}, {"passed", h.passed}});
  return out;
}

std::optional<RainbowTarget> maybe_target(const std::string& name) {
  try {
    return parse_target(name);
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

// Commands.

Report cmd_count_copies(const Options& o) {
  const HostGraph host = HostGraph::parse(need(o.host, "--host"));
  const PatternGraph p = load_pattern(need(o.pattern, "--pattern"));
  const CopyList copies = enumerate_copies(host, p);
  Json j{{"host", host.descriptor()}, {"pattern", p.name()}, {"count", copies.size()}};
  std::vector<std::pair<std::string, std::string>> rows{
      {"host", host.descriptor()}, {"pattern", p.name()}, {"count", std::to_string(copies.size())}};
  if (!host.is_bipartite()) {
    const auto fox = fox_count(host.n(), p);
    j["fox"] = fox;
    rows.emplace_back("fox", std::to_string(fox));
  } else {
    j["fox"] = nullptr;
  }
  return kv_report(std::move(j), rows);
}

Report cmd_count_containing(const Options& o) {
  const HostGraph host = HostGraph::parse(need(o.host, "--host"));
  const PatternGraph p = load_pattern(need(o.pattern, "--pattern"));
  const std::vector<int> edges = parse_int_list(need(o.edges, "--edges"), "edge list");
  for (int e : edges) {
    if (e < 0 || e >= host.edge_count()) {
      throw ValidationError("edge " + std::to_string(e) + " out of range 0.." +
                            std::to_string(host.edge_count() - 1));
    }
  }
  const std::uint64_t oracle = count_containing_oracle(host, p, edges);
  Json j{{"host", host.descriptor()}, {"pattern", p.name()}, {"edges", edges}, {"oracle", oracle}};
  std::vector<std::pair<std::string, std::string>> rows;
  std::optional<std::uint64_t> lemma;
  if (edges.size() == 2 && edges[0] != edges[1]) {
    const bool adjacent = host.edges_adjacent(EdgeId{edges[0]}, EdgeId{edges[1]});
    j["adjacent"] = adjacent;
    if (const auto target = maybe_target(p.name())) {
      try {
        lemma = count_containing(host, *target, EdgeId{edges[0]}, EdgeId{edges[1]});
      } catch (const ValidationError&) {
      }
    }
    rows.emplace_back("adjacent", adjacent ? "true" : "false");
  }
  j["lemma"] = lemma ? Json(*lemma) : Json(nullptr);
  j["agree"] = lemma ? Json(*lemma == oracle) : Json(nullptr);
  rows.insert(rows.begin(), {"lemma", lemma ? std::to_string(*lemma) : "-"});
  rows.emplace_back("oracle", std::to_string(oracle));
  return kv_report(std::move(j), rows);
}

Report cmd_count_colored(const Options& o) {
  const EdgeColoring c = load_coloring(need(o.coloring, "--coloring"));
  const PatternGraph p = load_pattern(need(o.pattern, "--pattern"));
  const CountReport r = count_colored(c, p);
  return Report{count_report_to_json(r), report_csv(r), report_table(r)};
}

Report cmd_classify(const Options& o) {
  const EdgeColoring c = load_coloring(need(o.coloring, "--coloring"));
  std::optional<PatternGraph> probe;
  if (!o.pattern.empty()) probe = load_pattern(o.pattern);
  const StructureVerdict v = classify_structure(c, probe);
  Json j{{"matched", v.matched ? Json(*v.matched) : Json(nullptr)},
         {"witness", v.witness ? structure_to_json(*v.witness) : Json(nullptr)},
         {"all_matches", v.all_matches},
         {"rainbow_copy", v.rainbow_copy ? Json(*v.rainbow_copy) : Json(nullptr)}};
  std::string matches;
  for (int id : v.all_matches) matches += (matches.empty() ? "" : " ") + std::to_string(id);
  std::vector<std::pair<std::string, std::string>> rows{
      {"matched", v.matched ? "structure " + std::to_string(*v.matched) : "none"},
      {"all_matches", matches.empty() ? "-" : matches}};
  if (v.rainbow_copy) rows.emplace_back("rainbow_copy", colors_text(*v.rainbow_copy));
  return kv_report(std::move(j), rows);
}

Report cmd_generate_structure(const Options& o) {
  const StructureSpec spec =
      structure_from_json(parse_json(read_file(need(o.structure, "--structure"))));
  const EdgeColoring c = generate_structure(spec);
  return kv_report(coloring_to_json(c), {{"host", c.host.descriptor()},
                                         {"k", std::to_string(c.k)},
                                         {"colors", "\"" + colors_text(c.colors) + "\""}});
}

std::optional<ClassProfile> profile_option(const Options& o) {
  if (o.profile.empty()) return std::nullopt;
  return normalize_profile(parse_int_list(o.profile, "profile"));
}

Report cmd_enumerate(const Options& o) {
  const HostGraph host = HostGraph::parse(need(o.host, "--host"));
  const int k = need(o.k, "--k");
  const auto classes =
      enumerate_exact_colorings(host, k, EnumerationOptions{profile_option(o), o.threads});
  Json list = Json::array();
  BigCount orbit_total = 0;
  std::string csv = "index,colors,stabilizer,partition_orbit,orbit_size\n";
  std::vector<std::vector<std::string>> body;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    orbit_total += c.orbit_size;
    list.push_back(Json{{"colors", c.representative.colors},
                        {"stabilizer", c.stabilizer},
                        {"partition_orbit", c.partition_orbit},
                        {"orbit_size", big_json(c.orbit_size)}});
    const std::vector<std::string> row{std::to_string(i), colors_text(c.representative.colors),
                                       std::to_string(c.stabilizer),
                                       std::to_string(c.partition_orbit), to_decimal(c.orbit_size)};
    csv += row[0] + ",\"" + row[1] + "\"," + row[2] + "," + row[3] + "," + row[4] + "\n";
    body.push_back(row);
  }
  Json j{{"host", host.descriptor()},
         {"k", k},
         {"classes", list},
         {"count", classes.size()},
         {"orbit_total", big_json(orbit_total)}};
  std::string table = format_table({"#", "colors", "stabilizer", "partition orbit", "orbit"}, body);
  table += "classes " + std::to_string(classes.size()) + ", colorings " + to_decimal(orbit_total) + "\n";
  return Report{std::move(j), csv, table};
}

Report cmd_gr(const Options& o) {
  const HostKind kind = parse_setting(o.setting);
  const PatternGraph G = load_pattern(need(o.pattern, "--pattern"));
  const PatternGraph H = load_pattern(need(o.H, "--H"));
  const int k = need(o.k, "--k");
  const GrSearchReport r =
      gr_search(G, H, k, kind, need(o.n_min, "--n-min"), need(o.n_max, "--n-max"), o.threads);

  Json rows = Json::array();
  std::string csv = "n,verdict,classes\n";
  std::vector<std::vector<std::string>> body;
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"n", row.n},
                        {"verdict", verdict_name(row.verdict)},
                        {"classes_examined", row.classes_examined},
                        {"counterexample", row.counterexample ? coloring_to_json(*row.counterexample)
                                                              : Json(nullptr)}});
    csv += std::to_string(row.n) + "," + verdict_name(row.verdict) + "," +
           std::to_string(row.classes_examined) + "\n";
    body.push_back({std::to_string(row.n), verdict_name(row.verdict),
                    std::to_string(row.classes_examined)});
  }
  Json j{{"setting", setting_name(kind)},
         {"G", G.name()},
         {"H", H.name()},
         {"k", k},
         {"rows", rows},
         {"least_good", r.least_good ? Json(*r.least_good) : Json(nullptr)},
         {"scope", r.scope}};
  std::string table = format_table({"n", "verdict", "classes"}, body);
  table += "least good N = " + (r.least_good ? std::to_string(*r.least_good) : std::string("none")) +
           " (" + r.scope + " up to n = " + std::to_string(r.rows.back().n) + ")\n";
  if (const auto target = maybe_target(G.name())) {
    const FormulaResult f = gr_formula(FormulaQuery{kind, *target, k, 0, H});
    j["formula"] = f.value ? Json(*f.value) : Json(nullptr);
    j["formula_branch"] = f.branch;
    j["formula_hypotheses"] = hypotheses_json(f.hypotheses);
    if (f.value) table += "formula " + std::to_string(*f.value) + " (" + f.branch + ")\n";
  }
  return Report{std::move(j), csv, table};
}

Report cmd_gm(const Options& o) {
  const HostGraph host = HostGraph::parse(need(o.host, "--host"));
  const PatternGraph G = load_pattern(need(o.pattern, "--pattern"));
  const PatternGraph H = load_pattern(need(o.H, "--H"));
  const int k = need(o.k, "--k");
  SearchReport r = gm_search(G, H, k, host.kind(), host.n(),
                             SearchOptions{profile_option(o), o.threads, o.per_class});

  // Cross-check against the closed form when the query is a table cell.
  const std::int64_t full = k_for(host.kind(), host.n());
  const std::int64_t offset = k - full;
  const auto target = maybe_target(G.name());
  std::optional<FormulaResult> formula;
  if (target && offset <= 0 && offset >= -2) {
    try {
      formula = gm_formula(FormulaQuery{host.kind(), *target, full, static_cast<int>(offset), H});
    } catch (const ValidationError&) {
    }
  }
  if (formula && formula->value) {
    r.formula_value = formula->value;
    r.formula_agreement = *formula->value == r.value;
  }

  Json j{{"host", host.descriptor()},
         {"G", G.name()},
         {"H", H.name()},
         {"k", k},
         {"value", r.value},
         {"witness", coloring_to_json(r.witness)},
         {"witness_rainbow", r.witness_rainbow},
         {"witness_mono", r.witness_mono},
         {"classes_examined", r.classes_examined},
         {"formula", r.formula_value ? Json(*r.formula_value) : Json(nullptr)},
         {"formula_agreement", r.formula_agreement ? Json(*r.formula_agreement) : Json(nullptr)}};
  if (formula) j["formula_hypotheses"] = hypotheses_json(formula->hypotheses);
  if (r.per_class) {
    Json per = Json::array();
    for (const auto& e : *r.per_class) {
      per.push_back(Json{{"colors", e.representative.colors},
                         {"orbit_size", big_json(e.orbit_size)},
                         {"rainbow", e.rainbow},
                         {"mono", e.mono},
                         {"total", e.total}});
    }
    j["per_class"] = per;
  }
  std::vector<std::pair<std::string, std::string>> rows{
      {"value", std::to_string(r.value)},
      {"witness rainbow G", std::to_string(r.witness_rainbow)},
      {"witness mono H", std::to_string(r.witness_mono)},
      {"classes examined", std::to_string(r.classes_examined)},
      {"witness colors", "\"" + colors_text(r.witness.colors) + "\""}};
  if (r.formula_value) {
    rows.emplace_back("formula", std::to_string(*r.formula_value));
    rows.emplace_back("agree", *r.formula_agreement ? "true" : "false");
  }
  return kv_report(std::move(j), rows);
}

Report cmd_formula(const Options& o) {
  const HostKind kind = parse_setting(o.setting);
  const RainbowTarget target = parse_target(need(o.pattern, "--pattern"));
  std::optional<PatternGraph> H;
  if (!o.H.empty()) H = load_pattern(o.H);
  std::int64_t k = 0;
  if (o.t) {
    k = k_for(kind, *o.t);
  } else {
    k = need(o.k, "--k or --t");
  }
  FormulaResult f;
  if (o.quantity == "gm") {
    f = gm_formula(FormulaQuery{kind, target, k, o.offset, H});
  } else if (o.quantity == "gr") {
    f = gr_formula(FormulaQuery{kind, target, k, o.offset, H});
  } else {
    throw ValidationError("quantity must be gm or gr, got \"" + o.quantity + "\"");
  }
  Json j{{"quantity", o.quantity},
         {"setting", setting_name(kind)},
         {"pattern", std::string(target_name(target))},
         {"k", k},
         {"offset", o.offset},
         {"H", H ? Json(H->name()) : Json(nullptr)},
         {"value", f.value ? Json(*f.value) : Json(nullptr)},
         {"branch", f.branch},
         {"hypotheses", hypotheses_json(f.hypotheses)}};
  if (const auto t = t_for(kind, k)) j["t"] = *t;
  std::vector<std::pair<std::string, std::string>> rows{
      {"value", f.value ? std::to_string(*f.value) : "-"}, {"branch", "\"" + f.branch + "\""}};
  std::string failed;
  for (const auto& h : f.hypotheses) {
    rows.emplace_back("\"" + h.condition + "\"", h.passed ? "pass" : "FAIL");
    if (!h.passed) failed += (failed.empty() ? "" : "; ") + h.condition;
  }
  Report report = kv_report(std::move(j), rows);
  if (!f.value) throw HypothesisFailure{std::move(report), "hypotheses not satisfied: " + failed};
  return report;
}

std::string witness_name(const VerificationRow& r) {
  return r.family + "_k" + std::to_string(r.offset) + "_t" + std::to_string(r.t) + ".json";
}

Report cmd_verify_tables(const Options& o) {
  TableRanges ranges;
  ranges.threads = o.threads;
  if (o.t) {
    ranges.complete_t_max = std::min(ranges.complete_t_max, *o.t);
    ranges.bipartite_t_max = std::min(ranges.bipartite_t_max, *o.t);
  }
  VerificationReport r = verify_tables(ranges);
  if (!o.witness_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(o.witness_dir, ec);
    if (ec) throw ValidationError("cannot create " + o.witness_dir + ": " + ec.message());
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      const std::string path = (std::filesystem::path(o.witness_dir) / witness_name(r.rows[i])).string();
      write_file(path, dump_json(coloring_to_json(r.witnesses[i])));
      r.rows[i].witness_file = path;
    }
  }
  return Report{verification_to_json(r.rows), verification_to_csv(r.rows),
                verification_to_table(r.rows)};
}

Report cmd_threshold(const Options& o) {
  const HostGraph host = HostGraph::parse(need(o.host, "--host"));
  const RainbowTarget target = parse_target(need(o.pattern, "--pattern"));
  const ThresholdReport r = rainbow_threshold_check(host, target, o.threads);
  Json rows = Json::array();
  std::string csv = "k,all_rainbow,classes\n";
  std::vector<std::vector<std::string>> body;
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"k", row.k},
                        {"all_rainbow", row.all_rainbow},
                        {"classes_examined", row.classes_examined},
                        {"counterexample", row.counterexample ? coloring_to_json(*row.counterexample)
                                                              : Json(nullptr)}});
    csv += std::to_string(row.k) + "," + (row.all_rainbow ? "true" : "false") + "," +
           std::to_string(row.classes_examined) + "\n";
    body.push_back({std::to_string(row.k), row.all_rainbow ? "yes" : "no",
                    std::to_string(row.classes_examined)});
  }
  auto opt = [](const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); };
  Json j{{"host", host.descriptor()},
         {"pattern", r.pattern},
         {"rows", rows},
         {"expected_threshold", opt(r.expected_threshold)},
         {"observed_threshold", opt(r.observed_threshold)},
         {"confirmed", r.confirmed},
         {"witness", r.witness ? coloring_to_json(*r.witness) : Json(nullptr)},
         {"witness_source", r.witness_source},
         {"witness_rainbow_free", r.witness_rainbow_free}};
  auto text = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
  std::string table = format_table({"k", "all rainbow", "classes"}, body);
  table += "expected " + text(r.expected_threshold) + ", observed " + text(r.observed_threshold) +
           (r.confirmed ? ", confirmed" : ", not confirmed") + "\n";
  if (r.witness) {
    table += "witness at k = " + std::to_string(r.witness->k) + " (" + r.witness_source + "): " +
             colors_text(r.witness->colors) + (r.witness_rainbow_free ? "" : " (has rainbow copy)") +
             "\n";
  }
  return Report{std::move(j), csv, table};
}

constexpr const char* kFooter =
    "Hosts: Kn:<n> is K_n, Knn:<n> is K_{n,n}.\n"
    "Edge indices are 0-based: lexicographic pairs for K_n, i*n+j for (u_i, v_j) in K_{n,n}.\n"
    "Colors in coloring files are 1-based, 1..k, listed by edge index.\n"
    "Exit codes: 0 success, 2 validation/hypothesis/guard failure, 1 internal error.";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rainbow and monochromatic subgraph counting, Gallai-Ramsey search and formulas",
               "gallai"};
  app.footer(kFooter);
  app.require_subcommand(1);
  Options o;

  enum class Flag {
    Host, Pattern, Coloring, Edges, K, T, Offset, H, Profile, Structure, Setting, Quantity,
    NRange, WitnessDir, PerClass
  };
  std::map<std::string, std::function<Report(const Options&)>> handlers;
  auto add = [&](const std::string& name, const std::string& description,
                 std::initializer_list<Flag> flags, std::function<Report(const Options&)> handler) {
    CLI::App* sub = app.add_subcommand(name, description);
    for (Flag f : flags) {
      switch (f) {
        case Flag::Host: sub->add_option("--host", o.host, "Kn:<n> or Knn:<n>"); break;
        case Flag::Pattern: sub->add_option("--pattern", o.pattern, "builtin name or pattern JSON file"); break;
        case Flag::Coloring: sub->add_option("--coloring", o.coloring, "coloring JSON file"); break;
        case Flag::Edges: sub->add_option("--edges", o.edges, "comma-separated 0-based edge indices"); break;
        case Flag::K: sub->add_option("--k", o.k, "number of colors"); break;
        case Flag::T: sub->add_option("--t", o.t, "t with k = C(t,2) or k = t^2"); break;
        case Flag::Offset:
          sub->add_option("--offset", o.offset, "0, -1 or -2")->check(CLI::Range(-2, 0));
          break;
        case Flag::H: sub->add_option("--H", o.H, "monochromatic pattern: builtin name or JSON file"); break;
        case Flag::Profile: sub->add_option("--profile", o.profile, "color class sizes, e.g. 2,1,1"); break;
        case Flag::Structure: sub->add_option("--structure", o.structure, "structure spec JSON file"); break;
        case Flag::Setting:
          sub->add_option("--setting", o.setting, "complete or bipartite")
              ->check(CLI::IsMember({"complete", "bipartite"}));
          break;
        case Flag::Quantity:
          sub->add_option("--quantity", o.quantity, "gm or gr")->check(CLI::IsMember({"gm", "gr"}));
          break;
        case Flag::NRange:
          sub->add_option("--n-min", o.n_min, "smallest host size");
          sub->add_option("--n-max", o.n_max, "largest host size");
          break;
        case Flag::WitnessDir: sub->add_option("--witness-dir", o.witness_dir, "directory for witness colorings"); break;
        case Flag::PerClass: sub->add_flag("--per-class", o.per_class, "include every class in the report"); break;
      }
    }
    sub->add_option("--format", o.format, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--out", o.out, "write the report to this path instead of stdout");
    sub->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    handlers[name] = std::move(handler);
  };

  add("count-copies", "count copies of a pattern in a host", {Flag::Host, Flag::Pattern},
      cmd_count_copies);
  add("count-containing", "copies through given edges, by lemma and by enumeration",
      {Flag::Host, Flag::Pattern, Flag::Edges}, cmd_count_containing);
  add("count-colored", "rainbow, monochromatic and other copies under a coloring",
      {Flag::Coloring, Flag::Pattern}, cmd_count_colored);
  add("classify", "match a coloring against colored structures 1-5",
      {Flag::Coloring, Flag::Pattern}, cmd_classify);
  add("generate-structure", "build the coloring of a structure spec", {Flag::Structure},
      cmd_generate_structure);
  add("enumerate", "canonical exact k-colorings of a host", {Flag::Host, Flag::K, Flag::Profile},
      cmd_enumerate);
  add("gr", "Gallai-Ramsey search over a range of host sizes",
      {Flag::Setting, Flag::Pattern, Flag::H, Flag::K, Flag::NRange}, cmd_gr);
  add("gm", "Gallai-Ramsey multiplicity by exhaustive search",
      {Flag::Host, Flag::Pattern, Flag::H, Flag::K, Flag::Profile, Flag::PerClass}, cmd_gm);
  add("formula", "closed-form gr/bgr or GM/bi-GM value",
      {Flag::Setting, Flag::Pattern, Flag::K, Flag::T, Flag::Offset, Flag::H, Flag::Quantity},
      cmd_formula);
  add("verify-tables", "formula against search for every table cell",
      {Flag::T, Flag::WitnessDir}, cmd_verify_tables);
  add("threshold", "all-rainbow thresholds for every k on a small host",
      {Flag::Host, Flag::Pattern}, cmd_threshold);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  CLI::App* chosen = app.get_subcommands().front();
  auto emit = [&](const Report& report) {
    const std::string text = emit_report(report, parse_format(o.format));
    if (o.out.empty()) {
      out << text;
    } else {
      write_file(o.out, text);
    }
  };
  try {
    emit(handlers.at(chosen->get_name())(o));
    return kExitOk;
  } catch (const HypothesisFailure& f) {
    try {
      emit(f.report);
    } catch (const ValidationError&) {
    }
    err << "error: " << f.message << "\n";
    return kExitInvalid;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace gallai
