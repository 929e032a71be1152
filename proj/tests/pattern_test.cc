#include <gtest/gtest.h>

#include "gallai/error.hpp"
#include "gallai/pattern.hpp"

using namespace gallai;

TEST(Pattern, RejectsInvalidGraphs) {
  EXPECT_THROW(PatternGraph(3, {{0, 0}}), ValidationError);
  EXPECT_THROW(PatternGraph(3, {{0, 1}, {1, 0}}), ValidationError);
  EXPECT_THROW(PatternGraph(3, {{0, 1}}), ValidationError);
  EXPECT_THROW(PatternGraph(2, {{0, 2}}), ValidationError);
  EXPECT_THROW(PatternGraph(2, {{0, 1}}, std::vector<int>{0, 0}), ValidationError);
}

TEST(Pattern, BuiltinsHaveExpectedShape) {
  EXPECT_EQ(builtin_pattern("P2").edge_count(), 1);
  EXPECT_EQ(builtin_pattern("P5").vertex_count(), 5);
  EXPECT_EQ(builtin_pattern("K13").edge_count(), 3);
  EXPECT_EQ(builtin_pattern("P4plus").edge_count(), 4);
  EXPECT_EQ(builtin_pattern("P4plus").vertex_count(), 5);
  EXPECT_EQ(builtin_pattern("K3").edge_count(), 3);
  EXPECT_EQ(builtin_pattern("S3plus").edge_count(), 4);
  EXPECT_EQ(builtin_pattern("K1_5").edge_count(), 5);
  EXPECT_EQ(builtin_pattern("Kmulti_3x2").edge_count(), 12);
  EXPECT_EQ(builtin_pattern("M3").vertex_count(), 6);
  EXPECT_THROW(builtin_pattern("Q7"), ValidationError);
}

TEST(Pattern, BipartiteTags) {
  EXPECT_TRUE(builtin_pattern("P4plus").is_bipartite());
  EXPECT_TRUE(builtin_pattern("K13").bipartition().has_value());
  EXPECT_FALSE(builtin_pattern("K3").is_bipartite());
  EXPECT_TRUE(builtin_pattern("K3").is_complete());
}

TEST(Pattern, AutomorphismOrders) {
  EXPECT_EQ(aut_order(builtin_pattern("P4")), 2u);
  EXPECT_EQ(aut_order(builtin_pattern("K13")), 6u);
  EXPECT_EQ(aut_order(builtin_pattern("K3")), 6u);
  EXPECT_EQ(aut_order(builtin_pattern("P4plus")), 2u);
  EXPECT_EQ(aut_order(builtin_pattern("S3plus")), 2u);
}

TEST(Pattern, CopiesInSmallHosts) {
  EXPECT_EQ(enumerate_copies(HostGraph::complete(4), builtin_pattern("K3")).size(), 4u);
  EXPECT_EQ(enumerate_copies(HostGraph::complete(4), builtin_pattern("P4")).size(), 12u);
  EXPECT_EQ(enumerate_copies(HostGraph::bipartite(2), builtin_pattern("P4")).size(), 4u);
  EXPECT_EQ(enumerate_copies(HostGraph::bipartite(3), builtin_pattern("K13")).size(), 6u);
  EXPECT_THROW(enumerate_copies(HostGraph::bipartite(3), builtin_pattern("K3")), ValidationError);
}

TEST(Pattern, CopiesAreSortedAndDistinct) {
  const CopyList copies = enumerate_copies(HostGraph::complete(5), builtin_pattern("P4plus"));
  for (std::size_t i = 0; i < copies.size(); ++i) {
    const auto row = copies[i];
    for (std::size_t j = 1; j < row.size(); ++j) EXPECT_LT(row[j - 1], row[j]);
    if (i > 0) {
      const auto prev = copies[i - 1];
      EXPECT_TRUE(std::lexicographical_compare(prev.begin(), prev.end(), row.begin(), row.end()));
    }
  }
}

TEST(Pattern, SubgraphContainment) {
  EXPECT_TRUE(contains_subgraph(multipartite_graph(5, 2), star_graph(3)));
  EXPECT_TRUE(contains_subgraph(complete_graph(4), path_graph(4)));
  EXPECT_FALSE(contains_subgraph(star_graph(3), path_graph(4)));
  EXPECT_FALSE(contains_subgraph(multipartite_graph(2, 2), complete_graph(3)));
}

TEST(Pattern, BoundGraphs) {
  EXPECT_FALSE(bound_graph(HostKind::Complete, RainbowTarget::P4, 10).has_value());
  EXPECT_EQ(bound_graph(HostKind::Complete, RainbowTarget::K13, 6)->vertex_count(), 10);
  EXPECT_EQ(bound_graph(HostKind::CompleteBipartite, RainbowTarget::P5, 15)->edge_count(), 7);
  EXPECT_TRUE(fits_bound(HostKind::CompleteBipartite, RainbowTarget::P5, 15, star_graph(7)));
  EXPECT_FALSE(fits_bound(HostKind::CompleteBipartite, RainbowTarget::P5, 15, star_graph(8)));
  EXPECT_TRUE(fits_bound(HostKind::Complete, RainbowTarget::K13, 1000000, star_graph(9)));
  EXPECT_THROW(bound_graph(HostKind::CompleteBipartite, RainbowTarget::P4Plus, 9), ValidationError);
}

TEST(Pattern, TargetNames) {
  for (auto t : {RainbowTarget::P4, RainbowTarget::P5, RainbowTarget::K13, RainbowTarget::P4Plus}) {
    EXPECT_EQ(parse_target(target_name(t)), t);
  }
  EXPECT_THROW(parse_target("K3"), ValidationError);
}
