#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gallai/io.hpp"

namespace gallai {

enum class Format { Json, Csv, Table };

Format parse_format(const std::string& name);

// One engine result in all three output forms.
struct Report {
  Json json;
  std::string csv;
  std::string table;
};

std::string emit_report(const Report& report, Format format);

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalid = 2;

// Entry point behind the gallai executable; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gallai
