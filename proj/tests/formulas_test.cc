#include <gtest/gtest.h>

#include "gallai/error.hpp"
#include "gallai/formulas.hpp"

using namespace gallai;

namespace {

FormulaQuery query(HostKind s, RainbowTarget g, std::int64_t k, int offset,
                   std::optional<PatternGraph> H) {
  return FormulaQuery{s, g, k, offset, std::move(H)};
}

}  // namespace

TEST(Formulas, TAndK) {
  EXPECT_EQ(t_for(HostKind::Complete, 10), 5);
  EXPECT_EQ(t_for(HostKind::CompleteBipartite, 16), 4);
  EXPECT_FALSE(t_for(HostKind::Complete, 11).has_value());
  EXPECT_EQ(k_for(HostKind::Complete, 7), 21);
  EXPECT_EQ(k_for(HostKind::CompleteBipartite, 5), 25);
}

TEST(Formulas, GrExamples) {
  EXPECT_EQ(gr_formula(query(HostKind::Complete, RainbowTarget::K13, 6, 0, star_graph(3))).value, 4u);
  EXPECT_EQ(gr_formula(query(HostKind::Complete, RainbowTarget::P4Plus, 5, 0, star_graph(3))).value,
            5u);
  EXPECT_EQ(
      gr_formula(query(HostKind::CompleteBipartite, RainbowTarget::P4, 3, 0, star_graph(3))).value,
      2u);
}

TEST(Formulas, GrRadicalIsLeastOrder) {
  for (std::int64_t k = 4; k <= 400; ++k) {
    const auto r = gr_formula(query(HostKind::Complete, RainbowTarget::K13, k, 0, star_graph(3)));
    ASSERT_TRUE(r.value.has_value()) << k;
    const auto n = static_cast<std::int64_t>(*r.value);
    EXPECT_GE(n * (n - 1) / 2, k);
    EXPECT_LT((n - 1) * (n - 2) / 2, k);
  }
}

TEST(Formulas, GmTableValues) {
  auto gm = [](HostKind s, RainbowTarget g, int t, int offset) {
    return gm_formula(query(s, g, k_for(s, t), offset, star_graph(2 - offset))).value;
  };
  EXPECT_EQ(gm(HostKind::Complete, RainbowTarget::K13, 4, -1), 3u);
  EXPECT_EQ(gm(HostKind::Complete, RainbowTarget::K13, 5, -1), 18u);
  EXPECT_EQ(gm(HostKind::Complete, RainbowTarget::K13, 4, -2), 1u);
  EXPECT_EQ(gm(HostKind::Complete, RainbowTarget::K13, 5, -2), 14u);
  EXPECT_EQ(gm(HostKind::Complete, RainbowTarget::K13, 7, -1), 136u);
  EXPECT_EQ(gm(HostKind::Complete, RainbowTarget::P4, 4, -1), 8u);
  EXPECT_EQ(gm(HostKind::Complete, RainbowTarget::P4, 4, -2), 4u);
  EXPECT_EQ(gm(HostKind::Complete, RainbowTarget::P4, 5, -1), 56u);
  EXPECT_EQ(gm(HostKind::Complete, RainbowTarget::P5, 5, -2), 38u);
  EXPECT_EQ(gm(HostKind::Complete, RainbowTarget::P5, 6, -2), 288u);
  EXPECT_EQ(gm(HostKind::Complete, RainbowTarget::P5, 7, -1), 60u * 21 - 3 * 4 * 3);
  EXPECT_EQ(gm(HostKind::Complete, RainbowTarget::P4Plus, 6, -1), 360u - 5 * 3 * 2);
  EXPECT_EQ(gm(HostKind::CompleteBipartite, RainbowTarget::K13, 4, -1), 30u);
  EXPECT_EQ(gm(HostKind::CompleteBipartite, RainbowTarget::K13, 4, -2), 28u);
  EXPECT_EQ(gm(HostKind::CompleteBipartite, RainbowTarget::K13, 5, -2), 93u);
  EXPECT_EQ(gm(HostKind::CompleteBipartite, RainbowTarget::P5, 4, -1), 270u);
  EXPECT_EQ(gm(HostKind::CompleteBipartite, RainbowTarget::P4, 3, -1), 32u);
}

TEST(Formulas, OffsetZeroCorollaries) {
  auto gm0 = [](HostKind s, RainbowTarget g, int t) {
    return gm_formula(query(s, g, k_for(s, t), 0, star_graph(2))).value;
  };
  EXPECT_EQ(gm0(HostKind::Complete, RainbowTarget::K13, 6), 60u);
  EXPECT_EQ(gm0(HostKind::Complete, RainbowTarget::P4, 5), 60u);
  EXPECT_EQ(gm0(HostKind::Complete, RainbowTarget::P5, 5), 60u);
  EXPECT_EQ(gm0(HostKind::CompleteBipartite, RainbowTarget::K13, 4), 32u);
  EXPECT_EQ(gm0(HostKind::CompleteBipartite, RainbowTarget::P4, 3), 36u);
  EXPECT_EQ(gm0(HostKind::CompleteBipartite, RainbowTarget::P5, 3), 36u);
}

TEST(Formulas, HypothesesAreStrict) {
  const auto few_edges =
      gm_formula(query(HostKind::Complete, RainbowTarget::K13, 10, -2, path_graph(3)));
  EXPECT_FALSE(few_edges.value.has_value());
  EXPECT_FALSE(few_edges.hypotheses_hold());
  const auto too_wide =
      gm_formula(query(HostKind::CompleteBipartite, RainbowTarget::P5, 16, -1, star_graph(8)));
  EXPECT_FALSE(too_wide.value.has_value());
  const auto not_square =
      gm_formula(query(HostKind::CompleteBipartite, RainbowTarget::P5, 15, -1, star_graph(3)));
  EXPECT_FALSE(not_square.value.has_value());
  EXPECT_THROW(gm_formula(query(HostKind::CompleteBipartite, RainbowTarget::P4Plus, 16, -1,
                                star_graph(3))),
               ValidationError);
}

TEST(Formulas, ClosedFormRanges) {
  EXPECT_FALSE(gm_closed_form(HostKind::Complete, RainbowTarget::P5, 4, -1).has_value());
  EXPECT_FALSE(gm_closed_form(HostKind::Complete, RainbowTarget::P4Plus, 4, -2).has_value());
  const auto k13 = gm_closed_form(HostKind::Complete, RainbowTarget::K13, 6, -2);
  ASSERT_TRUE(k13.has_value());
  EXPECT_EQ(k13->value, 51u);
  EXPECT_FALSE(k13->branch.empty());
}
