#include "gallai/formulas.hpp"

#include <algorithm>

#include "gallai/combinatorics.hpp"
#include "gallai/error.hpp"

namespace gallai {

namespace {

__extension__ using Wide = __int128;

std::uint64_t narrow(Wide v) {
  if (v < 0 || v > static_cast<Wide>(UINT64_MAX)) {
    throw GuardError("formula value outside the unsigned 64-bit range");
  }
  return static_cast<std::uint64_t>(v);
}

Wide C(std::int64_t a, std::int64_t b) { return static_cast<Wide>(binomial(a, b)); }

void check_offset(int offset) {
  if (offset != 0 && offset != -1 && offset != -2) {
    throw ValidationError("offset must be 0, -1 or -2, got " + std::to_string(offset));
  }
}

std::string bound_name(HostKind setting, RainbowTarget target, std::int64_t colors) {
  if (setting == HostKind::Complete) return "Kmulti_" + std::to_string(colors - 1) + "x2";
  if (target == RainbowTarget::P4) return "K1_" + std::to_string(colors);
  return "K1_" + std::to_string(colors / 2);
}

void add(std::vector<HypothesisCheck>& hyps, std::string condition, bool passed) {
  hyps.push_back({std::move(condition), passed});
}

void check_bound(std::vector<HypothesisCheck>& hyps, HostKind setting, RainbowTarget target,
                 std::int64_t colors, const std::optional<PatternGraph>& H) {
  const std::string condition = "H subgraph of " + bound_name(setting, target, colors);
  bool passed = false;
  if (H) {
    // fits_bound trims the bound to |V(H)|, so clamping huge k is harmless.
    try {
      passed = fits_bound(setting, target, static_cast<int>(std::min<std::int64_t>(colors, 1 << 20)), *H);
    } catch (const ValidationError&) {
      passed = false;
    }
  }
  add(hyps, condition, passed);
}

void check_edges(std::vector<HypothesisCheck>& hyps, const std::optional<PatternGraph>& H,
                 int minimum) {
  add(hyps, "|E(H)| >= " + std::to_string(minimum), H && H->edge_count() >= minimum);
}

void require_supported(HostKind setting, RainbowTarget target) {
  if (setting == HostKind::CompleteBipartite && target == RainbowTarget::P4Plus) {
    throw ValidationError("no bipartite result for rainbow P4plus");
  }
}

}  // namespace

bool FormulaResult::hypotheses_hold() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const HypothesisCheck& h) { return h.passed; });
}

std::optional<int> t_for(HostKind setting, std::int64_t k) {
  if (k < 1) return std::nullopt;
  const std::int64_t t =
      setting == HostKind::Complete ? least_complete_order(k) : ceil_sqrt(k);
  return k_for(setting, static_cast<int>(t)) == k ? std::optional<int>(static_cast<int>(t))
                                                  : std::nullopt;
}

std::int64_t k_for(HostKind setting, int t) {
  const std::int64_t tt = t;
  return setting == HostKind::Complete ? tt * (tt - 1) / 2 : tt * tt;
}

FormulaResult gr_formula(const FormulaQuery& q) {
  check_offset(q.offset);
  require_supported(q.setting, q.target);
  const std::int64_t colors = q.k + q.offset;
  FormulaResult r;
  auto& hyps = r.hypotheses;
  std::uint64_t value = 0;
  if (q.setting == HostKind::Complete) {
    const auto radical = static_cast<std::uint64_t>(least_complete_order(std::max<std::int64_t>(colors, 1)));
    switch (q.target) {
      case RainbowTarget::K13:
        add(hyps, "k >= 4", colors >= 4);
        check_bound(hyps, q.setting, q.target, colors, q.H);
        value = radical;
        r.branch = "least n with C(n,2) >= k";
        break;
      case RainbowTarget::P4Plus:
        add(hyps, "k >= 5", colors >= 5);
        check_bound(hyps, q.setting, q.target, colors, q.H);
        if (colors <= 6) {
          value = 5;
          r.branch = "5 <= k <= 6: 5";
        } else {
          value = radical;
          r.branch = "k >= 7: least n with C(n,2) >= k";
        }
        break;
      case RainbowTarget::P4:
        add(hyps, "k >= 4", colors >= 4);
        value = radical;
        r.branch = "least n with C(n,2) >= k";
        break;
      case RainbowTarget::P5: {
        add(hyps, "k >= 5", colors >= 5);
        add(hyps, "H provided", q.H.has_value());
        if (!q.H) break;
        const std::int64_t v = q.H->vertex_count();
        add(hyps, "k >= |V(H)|", colors >= v);
        if (colors >= v + 1) {
          value = std::max<std::uint64_t>(radical, 5);
          r.branch = "k >= |V(H)|+1: max(least n with C(n,2) >= k, 5)";
        } else if (!q.H->is_complete()) {
          value = static_cast<std::uint64_t>(v + 1);
          r.branch = "k = |V(H)|, H not complete: |V(H)|+1";
        } else {
          value = static_cast<std::uint64_t>((v - 1) * (v - 1) + 1);
          r.branch = "k = |V(H)|, H complete: (|V(H)|-1)^2+1";
        }
        break;
      }
    }
  } else {
    const auto root = static_cast<std::uint64_t>(ceil_sqrt(std::max<std::int64_t>(colors, 1)));
    add(hyps, q.target == RainbowTarget::P4 ? "k >= 3" : "k >= 5",
        colors >= (q.target == RainbowTarget::P4 ? 3 : 5));
    check_bound(hyps, q.setting, q.target, colors, q.H);
    value = root;
    r.branch = "ceil(sqrt(k))";
  }
  if (r.hypotheses_hold()) r.value = value;
  return r;
}

std::optional<ClosedForm> gm_closed_form(HostKind setting, RainbowTarget target, int t,
                                         int offset) {
  check_offset(offset);
  require_supported(setting, target);
  const std::int64_t T = t;
  auto form = [](Wide v, std::string branch) {
    return std::optional<ClosedForm>(ClosedForm{narrow(v), std::move(branch)});
  };
  if (setting == HostKind::Complete) {
    switch (target) {
      case RainbowTarget::K13:
        if (t < 4) return std::nullopt;
        if (offset == 0) return form(T * C(T - 1, 3), "t C(t-1,3)");
        if (offset == -1) {
          if (t == 4) return form(3, "t = 4: 3");
          if (t == 5) return form(18, "t = 5: 18");
          return form((T - 1) * C(T - 1, 3) + C(T - 3, 3) + 2 * C(T - 3, 2),
                      "t >= 6: (t-1)C(t-1,3)+C(t-3,3)+2C(t-3,2)");
        }
        if (t == 4) return form(1, "t = 4: 1");
        if (t == 5) return form(14, "t = 5: 14");
        return form((T - 3) * C(T - 1, 3) + 3 * C(T - 3, 3) + 6 * C(T - 3, 2),
                    "t >= 6: (t-3)C(t-1,3)+3C(t-3,3)+6C(t-3,2)");
      case RainbowTarget::P4Plus:
        if (t < 5) return std::nullopt;
        if (offset == 0) return form(60 * C(T, 5), "60C(t,5)");
        if (offset == -1) return form(60 * C(T, 5) - 5 * (T - 3) * (T - 4), "60C(t,5)-5(t-3)(t-4)");
        return form(60 * C(T, 5) - 15 * (T - 3) * (T - 4), "60C(t,5)-15(t-3)(t-4)");
      case RainbowTarget::P4:
        if (t < 4) return std::nullopt;
        if (offset == 0) return form(12 * C(T, 4), "12C(t,4)");
        if (offset == -1) {
          if (t == 4) return form(8, "t = 4: 8");
          return form(12 * C(T, 4) - 2 * (T - 3), "t >= 5: 12C(t,4)-2(t-3)");
        }
        if (t == 4) return form(4, "t = 4: 4");
        return form(12 * C(T, 4) - 6 * (T - 3), "t >= 5: 12C(t,4)-6(t-3)");
      case RainbowTarget::P5:
        if (t < 5) return std::nullopt;
        if (offset == 0) return form(60 * C(T, 5), "60C(t,5)");
        if (offset == -1) {
          if (t <= 6) return form(60 * C(T, 5) - 12 * (T - 4), "5 <= t <= 6: 60C(t,5)-12(t-4)");
          return form(60 * C(T, 5) - 3 * (T - 3) * (T - 4), "t >= 7: 60C(t,5)-3(t-3)(t-4)");
        }
        if (t == 5) return form(38, "t = 5: 38");
        if (t == 6) return form(288, "t = 6: 288");
        return form(60 * C(T, 5) - 9 * (T - 3) * (T - 4), "t >= 7: 60C(t,5)-9(t-3)(t-4)");
    }
  } else {
    switch (target) {
      case RainbowTarget::P4: {
        if (t < (offset == -2 ? 3 : 2)) return std::nullopt;
        const Wide base = T * T * (T - 1) * (T - 1);
        if (offset == 0) return form(base, "t^2(t-1)^2");
        if (offset == -1) return form(base - 2 * (T - 1), "t^2(t-1)^2-2(t-1)");
        return form(base - 6 * (T - 1), "t^2(t-1)^2-6(t-1)");
      }
      case RainbowTarget::P5: {
        if (t < 3) return std::nullopt;
        const Wide base = T * T * (T - 1) * (T - 1) * (T - 2);
        if (offset == 0) return form(base, "t^2(t-1)^2(t-2)");
        if (offset == -1) return form(base - 3 * (T - 1) * (T - 2), "t^2(t-1)^2(t-2)-3(t-1)(t-2)");
        return form(base - 9 * (T - 1) * (T - 2), "t^2(t-1)^2(t-2)-9(t-1)(t-2)");
      }
      case RainbowTarget::K13:
        if (t < 3) return std::nullopt;
        if (offset == 0) return form(2 * T * C(T, 3), "2t C(t,3)");
        if (offset == -1) {
          if (t == 3) return form(5, "t = 3: 5");
          if (t == 4) return form(30, "t = 4: 30");
          return form((2 * T - 1) * C(T, 3) + C(T - 2, 3) + 2 * C(T - 2, 2),
                      "t >= 5: (2t-1)C(t,3)+C(t-2,3)+2C(t-2,2)");
        }
        if (t == 3) return form(4, "t = 3: 4");
        if (t == 4) return form(28, "t = 4: 28");
        if (t == 5) return form(93, "t = 5: 93");
        return form((2 * T - 1) * C(T, 3) + C(T - 3, 3) + 3 * C(T - 3, 2),
                    "t >= 6: (2t-1)C(t,3)+C(t-3,3)+3C(t-3,2)");
      case RainbowTarget::P4Plus:
        break;
    }
  }
  return std::nullopt;
}

FormulaResult gm_formula(const FormulaQuery& q) {
  check_offset(q.offset);
  require_supported(q.setting, q.target);
  FormulaResult r;
  auto& hyps = r.hypotheses;
  const auto t = t_for(q.setting, q.k);
  add(hyps, q.setting == HostKind::Complete ? "k = C(t,2) for an integer t" : "k = t^2 for an integer t",
      t.has_value());
  const std::int64_t colors = q.k + q.offset;
  const int min_edges = 2 - q.offset;
  if (q.setting == HostKind::Complete) {
    switch (q.target) {
      case RainbowTarget::K13:
        add(hyps, "k >= 6", q.k >= 6);
        check_bound(hyps, q.setting, q.target, colors, q.H);
        break;
      case RainbowTarget::P4Plus:
        add(hyps, "k >= 10", q.k >= 10);
        check_bound(hyps, q.setting, q.target, colors, q.H);
        break;
      case RainbowTarget::P4:
        add(hyps, "k >= 6", q.k >= 6);
        break;
      case RainbowTarget::P5: {
        const std::int64_t v = q.H ? q.H->vertex_count() : 0;
        add(hyps, "k >= max(|V(H)|+" + std::to_string(1 - q.offset) + ", 10)",
            q.H && q.k >= std::max<std::int64_t>(v + 1 - q.offset, 10));
        break;
      }
    }
  } else {
    const std::int64_t min_k = (q.target == RainbowTarget::P4 && q.offset > -2) ? 4 : 9;
    add(hyps, "k >= " + std::to_string(min_k), q.k >= min_k);
    check_bound(hyps, q.setting, q.target, colors, q.H);
  }
  check_edges(hyps, q.H, min_edges);
  if (t) {
    if (auto form = gm_closed_form(q.setting, q.target, *t, q.offset)) {
      r.branch = form->branch;
      if (r.hypotheses_hold()) r.value = form->value;
    }
  }
  return r;
}

}  // namespace gallai
