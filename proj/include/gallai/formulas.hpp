#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gallai/host.hpp"
#include "gallai/pattern.hpp"

namespace gallai {

// For multiplicities k is C(t,2) (complete) or t^2 (bipartite) and the query
// is about k + offset colors; for gr, the color count is k + offset as well.
struct FormulaQuery {
  HostKind setting = HostKind::Complete;
  RainbowTarget target = RainbowTarget::K13;
  std::int64_t k = 0;
  int offset = 0;
  std::optional<PatternGraph> H;
};

struct HypothesisCheck {
  std::string condition;
  bool passed = false;

  friend bool operator==(const HypothesisCheck&, const HypothesisCheck&) = default;
};

struct FormulaResult {
  // Present only when every hypothesis passed.
  std::optional<std::uint64_t> value;
  std::string branch;
  std::vector<HypothesisCheck> hypotheses;

  bool hypotheses_hold() const;
};

struct ClosedForm {
  std::uint64_t value = 0;
  std::string branch;
};

// t with k = C(t,2) (complete) or k = t^2 (bipartite), if any.
std::optional<int> t_for(HostKind setting, std::int64_t k);
std::int64_t k_for(HostKind setting, int t);

FormulaResult gr_formula(const FormulaQuery& q);
FormulaResult gm_formula(const FormulaQuery& q);

// The multiplicity expression on its stated t range, without any H check.
// std::nullopt outside the range; ValidationError for unsupported targets.
std::optional<ClosedForm> gm_closed_form(HostKind setting, RainbowTarget target, int t,
                                         int offset);

}  // namespace gallai
