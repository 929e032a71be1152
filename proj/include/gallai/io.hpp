#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gallai/coloring.hpp"
#include "gallai/counting.hpp"
#include "gallai/pattern.hpp"
#include "gallai/search.hpp"
#include "gallai/structures.hpp"

namespace gallai {

using Json = nlohmann::json;

// Object keys are kept sorted, so every dump is byte-stable.
std::string dump_json(const Json& j);
Json parse_json(std::string_view text);

std::string read_file(const std::string& path);
// Throws ValidationError when the path cannot be written.
void write_file(const std::string& path, std::string_view contents);

// {"host": "Kn:5", "k": 9, "colors": [...]}, colors 1-based in edge order.
Json coloring_to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const Json& j);
EdgeColoring load_coloring(const std::string& path);

// {"vertices": n, "edges": [[a,b],...], "bipartition": [...] | null, "name": ... | null}
Json pattern_to_json(const PatternGraph& p);
PatternGraph pattern_from_json(const Json& j);
// A builtin name, or else a pattern file.
PatternGraph load_pattern(const std::string& name_or_path);

Json structure_to_json(const StructureSpec& s);
StructureSpec structure_from_json(const Json& j);

// {"total", "rainbow", "mono": {"<color>": count}, "other"}
Json count_report_to_json(const CountReport& r);
CountReport count_report_from_json(const Json& j);

// Verification cells as {family, offset, t, formula, search, agree,
// witness_file}, plus branch, H and hypotheses.
Json verification_to_json(const std::vector<VerificationRow>& rows);
std::vector<VerificationRow> verification_from_json(const Json& j);

inline constexpr std::string_view kVerificationCsvHeader = "family,offset,t,formula,search,agree";
std::string verification_to_csv(const std::vector<VerificationRow>& rows);
// Two blocks laid out like the published tables: one row per (G, t), the
// k-1 and k-2 columns side by side, each as formula / search.
std::string verification_to_table(const std::vector<VerificationRow>& rows);

// Column-padded plain table.
std::string format_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows);

}  // namespace gallai
