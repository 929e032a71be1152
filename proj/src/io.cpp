#include "gallai/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "gallai/error.hpp"

namespace gallai {

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw ValidationError("cannot write " + path);
}

namespace {

// Field access that reports schema problems as validation errors.
template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("bad field \"") + key + "\": " + e.what());
  }
}

template <typename T>
T field_or(const Json& j, const char* key, T fallback) {
  if (!j.is_object() || !j.contains(key) || j.at(key).is_null()) return fallback;
  return field<T>(j, key);
}

const char* side_name(Side s) { return s == Side::U ? "U" : "V"; }

Side parse_side(const std::string& s) {
  if (s == "U") return Side::U;
  if (s == "V") return Side::V;
  throw ValidationError("side must be \"U\" or \"V\", got \"" + s + "\"");
}

}  // namespace

Json coloring_to_json(const EdgeColoring& c) {
  return Json{{"host", c.host.descriptor()}, {"k", c.k}, {"colors", c.colors}};
}

EdgeColoring coloring_from_json(const Json& j) {
  EdgeColoring c{HostGraph::parse(field<std::string>(j, "host")), field<int>(j, "k"),
                 field<std::vector<int>>(j, "colors")};
  require_valid(c);
  return c;
}

EdgeColoring load_coloring(const std::string& path) {
  return coloring_from_json(parse_json(read_file(path)));
}

Json pattern_to_json(const PatternGraph& p) {
  Json edges = Json::array();
  for (const auto& [a, b] : p.edges()) edges.push_back({a, b});
  return Json{{"vertices", p.vertex_count()},
              {"edges", edges},
              {"bipartition", p.bipartition() ? Json(*p.bipartition()) : Json(nullptr)},
              {"name", p.name().empty() ? Json(nullptr) : Json(p.name())}};
}

PatternGraph pattern_from_json(const Json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : field<std::vector<std::vector<int>>>(j, "edges")) {
    if (e.size() != 2) throw ValidationError("pattern edges must be [a, b] pairs");
    edges.emplace_back(e[0], e[1]);
  }
  std::optional<std::vector<int>> bipartition;
  if (j.contains("bipartition") && !j.at("bipartition").is_null()) {
    bipartition = field<std::vector<int>>(j, "bipartition");
  }
  return PatternGraph(field<int>(j, "vertices"), std::move(edges), std::move(bipartition),
                      field_or<std::string>(j, "name", ""));
}

PatternGraph load_pattern(const std::string& name_or_path) {
  try {
    return builtin_pattern(name_or_path);
  } catch (const ValidationError&) {
    if (!std::filesystem::is_regular_file(name_or_path)) {
      throw ValidationError("unknown pattern \"" + name_or_path +
                            "\": neither a builtin name nor a readable file");
    }
  }
  return pattern_from_json(parse_json(read_file(name_or_path)));
}

Json structure_to_json(const StructureSpec& s) {
  Json one = Json::array();
  for (const auto& [a, b] : s.one_edges) one.push_back({a, b});
  return Json{{"id", s.id},
              {"n", s.n},
              {"parts", s.parts},
              {"one_edges", one},
              {"center", s.center},
              {"center_colors", s.center_colors},
              {"u_side", side_name(s.u_side)},
              {"u_parts", s.u_parts},
              {"u1", s.u1},
              {"u2", s.u2},
              {"v_parts", s.v_parts}};
}

StructureSpec structure_from_json(const Json& j) {
  using Parts = std::vector<std::vector<int>>;
  StructureSpec s;
  s.id = field<int>(j, "id");
  s.n = field<int>(j, "n");
  s.parts = field_or<Parts>(j, "parts", {});
  for (const auto& e : field_or<Parts>(j, "one_edges", {})) {
    if (e.size() != 2) throw ValidationError("one_edges entries must be pairs");
    s.one_edges.emplace_back(e[0], e[1]);
  }
  s.center = field_or<int>(j, "center", 0);
  s.center_colors = field_or<std::vector<int>>(j, "center_colors", {});
  s.u_side = parse_side(field_or<std::string>(j, "u_side", "U"));
  s.u_parts = field_or<Parts>(j, "u_parts", {});
  s.u1 = field_or<std::vector<int>>(j, "u1", {});
  s.u2 = field_or<std::vector<int>>(j, "u2", {});
  s.v_parts = field_or<Parts>(j, "v_parts", {});
  return s;
}

Json count_report_to_json(const CountReport& r) {
  Json mono = Json::object();
  for (const auto& [color, count] : r.mono) mono[std::to_string(color)] = count;
  return Json{{"total", r.total}, {"rainbow", r.rainbow}, {"mono", mono}, {"other", r.other}};
}

CountReport count_report_from_json(const Json& j) {
  CountReport r;
  r.total = field<std::uint64_t>(j, "total");
  r.rainbow = field<std::uint64_t>(j, "rainbow");
  r.other = field<std::uint64_t>(j, "other");
  const Json mono = field<Json>(j, "mono");
  for (const auto& item : mono.items()) {
    const std::string key = item.key();
    try {
      r.mono[std::stoi(key)] = item.value().get<std::uint64_t>();
    } catch (const std::exception&) {
      throw ValidationError("bad mono entry \"" + key + "\"");
    }
  }
  return r;
}

Json verification_to_json(const std::vector<VerificationRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"family", r.family},
                       {"offset", r.offset},
                       {"t", r.t},
                       {"formula", r.formula ? Json(*r.formula) : Json(nullptr)},
                       {"search", r.search},
                       {"agree", r.agree},
                       {"witness_file", r.witness_file},
                       {"hypotheses", r.hypotheses},
                       {"branch", r.branch},
                       {"H", r.H}});
  }
  return out;
}

std::vector<VerificationRow> verification_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("verification report must be a JSON array");
  std::vector<VerificationRow> rows;
  for (const auto& item : j) {
    VerificationRow r;
    r.family = field<std::string>(item, "family");
    r.offset = field<int>(item, "offset");
    r.t = field<int>(item, "t");
    if (item.contains("formula") && !item.at("formula").is_null()) {
      r.formula = field<std::uint64_t>(item, "formula");
    }
    r.search = field<std::uint64_t>(item, "search");
    r.agree = field<bool>(item, "agree");
    r.witness_file = field_or<std::string>(item, "witness_file", "");
    r.hypotheses = field_or<bool>(item, "hypotheses", false);
    r.branch = field_or<std::string>(item, "branch", "");
    r.H = field_or<std::string>(item, "H", "");
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string verification_to_csv(const std::vector<VerificationRow>& rows) {
  std::string out(kVerificationCsvHeader);
  out += "\n";
  for (const auto& r : rows) {
    out += r.family + "," + std::to_string(r.offset) + "," + std::to_string(r.t) + "," +
           (r.formula ? std::to_string(*r.formula) : "") + "," + std::to_string(r.search) + "," +
           (r.agree ? "true" : "false") + "\n";
  }
  return out;
}

std::string format_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string cell = c < cells.size() ? cells[c] : "";
      s += cell;
      if (c + 1 < width.size()) s += std::string(width[c] - cell.size() + 2, ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s + "\n";
  };
  std::string out = line(header);
  std::size_t total = 0;
  for (std::size_t c = 0; c < width.size(); ++c) total += width[c] + (c + 1 < width.size() ? 2 : 0);
  out += std::string(total, '-') + "\n";
  for (const auto& row : rows) out += line(row);
  return out;
}

namespace {

std::string offset_label(bool bipartite, int offset) {
  std::string base = bipartite ? "bi-GM" : "GM";
  if (offset == 0) return base + "_k";
  return base + "_{k" + std::to_string(offset) + "}";
}

int family_rank(const std::string& family) {
  static const std::vector<std::string> order{"K13",   "P4plus", "P4",    "P5",
                                              "bi-K13", "bi-P4", "bi-P5"};
  const auto it = std::find(order.begin(), order.end(), family);
  return static_cast<int>(it - order.begin());
}

}  // namespace

std::string verification_to_table(const std::vector<VerificationRow>& rows) {
  std::string out;
  for (const bool bipartite : {false, true}) {
    std::vector<int> offsets;
    std::map<std::pair<int, std::string>, std::map<int, std::map<int, const VerificationRow*>>> grid;
    for (const auto& r : rows) {
      if ((r.family.rfind("bi-", 0) == 0) != bipartite) continue;
      if (std::find(offsets.begin(), offsets.end(), r.offset) == offsets.end()) {
        offsets.push_back(r.offset);
      }
      grid[{family_rank(r.family), r.family}][r.t][r.offset] = &r;
    }
    if (grid.empty()) continue;
    std::sort(offsets.begin(), offsets.end(), std::greater<>());

    std::vector<std::string> header{"G", "t"};
    for (int o : offsets) {
      header.push_back(offset_label(bipartite, o) + " formula");
      header.push_back("search");
    }
    std::vector<std::vector<std::string>> body;
    for (const auto& [family_key, by_t] : grid) {
      bool first = true;
      for (const auto& [t, by_offset] : by_t) {
        std::vector<std::string> line{first ? family_key.second : "", std::to_string(t)};
        first = false;
        for (int o : offsets) {
          const auto it = by_offset.find(o);
          if (it == by_offset.end()) {
            line.insert(line.end(), {"", ""});
            continue;
          }
          const VerificationRow& r = *it->second;
          line.push_back(r.formula ? std::to_string(*r.formula) : "-");
          line.push_back(std::to_string(r.search) + (r.agree ? "" : " *"));
        }
        body.push_back(std::move(line));
      }
    }
    if (!out.empty()) out += "\n";
    out += bipartite ? "Bipartite Gallai-Ramsey multiplicity, k = t^2\n"
                     : "Gallai-Ramsey multiplicity, k = C(t,2)\n";
    out += format_table(header, body);
  }
  if (std::any_of(rows.begin(), rows.end(), [](const VerificationRow& r) { return !r.agree; })) {
    out += "\n* search differs from formula\n";
  }
  return out;
}

}  // namespace gallai
