#include <gtest/gtest.h>

#include <set>

#include "gallai/combinatorics.hpp"
#include "gallai/error.hpp"
#include "gallai/host.hpp"

using namespace gallai;

TEST(Combinatorics, BinomialBasics) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(5, 0), 1u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(3, -1), 0u);
  EXPECT_EQ(binomial(60, 30), 118264581564861424ull);
  EXPECT_THROW(binomial(200, 100), GuardError);
}

TEST(Combinatorics, SaturatingForms) {
  EXPECT_EQ(saturating_binomial(2, 3), 0u);
  EXPECT_EQ(saturating_binomial(4, 3), 4u);
  EXPECT_EQ(saturating_difference(2, 5), 0);
  EXPECT_EQ(saturating_difference(7, 5), 2);
}

TEST(Combinatorics, StirlingAndFactorial) {
  EXPECT_EQ(stirling2(6, 3), static_cast<BigCount>(90));
  EXPECT_EQ(stirling2(10, 1), static_cast<BigCount>(1));
  EXPECT_EQ(stirling2(4, 5), static_cast<BigCount>(0));
  EXPECT_EQ(factorial(5), static_cast<BigCount>(120));
  EXPECT_EQ(to_decimal(factorial(25)), "15511210043330985984000000");
}

TEST(Combinatorics, RadicalsByIntegerScan) {
  for (std::int64_t k = 1; k <= 10000; ++k) {
    std::int64_t n = 1;
    while (n * (n - 1) / 2 < k) ++n;
    ASSERT_EQ(least_complete_order(k), n) << k;
    std::int64_t r = 1;
    while (r * r < k) ++r;
    ASSERT_EQ(ceil_sqrt(k), r) << k;
  }
}

TEST(Host, CompleteEdgeOrderIsLexicographic) {
  const HostGraph h = HostGraph::complete(4);
  EXPECT_EQ(h.edge_count(), 6);
  EXPECT_EQ(h.flat_endpoints(0), std::make_pair(0, 1));
  EXPECT_EQ(h.flat_endpoints(2), std::make_pair(0, 3));
  EXPECT_EQ(h.flat_endpoints(5), std::make_pair(2, 3));
  EXPECT_EQ(h.edge_index(VertexId{1}, VertexId{2}).value, 3);
  EXPECT_EQ(h.edge_index(VertexId{2}, VertexId{1}).value, 3);
}

TEST(Host, BipartiteEdgeOrderIsRowMajor) {
  const HostGraph h = HostGraph::bipartite(3);
  EXPECT_EQ(h.edge_count(), 9);
  EXPECT_EQ(h.edge_index(VertexId{1, Side::U}, VertexId{2, Side::V}).value, 5);
  const auto [u, v] = h.endpoints(EdgeId{7});
  EXPECT_EQ(u, (VertexId{2, Side::U}));
  EXPECT_EQ(v, (VertexId{1, Side::V}));
  EXPECT_THROW(h.edge_index(VertexId{0, Side::U}, VertexId{1, Side::U}), ValidationError);
}

TEST(Host, Adjacency) {
  const HostGraph h = HostGraph::complete(5);
  EXPECT_TRUE(h.edges_adjacent(EdgeId{0}, EdgeId{1}));
  EXPECT_FALSE(h.edges_adjacent(EdgeId{0}, EdgeId{h.edge_index(VertexId{2}, VertexId{3}).value}));
}

TEST(Host, ParseDescriptors) {
  EXPECT_EQ(HostGraph::parse("Kn:5"), HostGraph::complete(5));
  EXPECT_EQ(HostGraph::parse("Knn:3"), HostGraph::bipartite(3));
  EXPECT_EQ(HostGraph::parse("Kn:5").descriptor(), "Kn:5");
  EXPECT_THROW(HostGraph::parse("K5"), ValidationError);
  EXPECT_THROW(HostGraph::parse("Kn:x"), ValidationError);
  EXPECT_THROW(HostGraph::parse("Kn:1"), ValidationError);
}

TEST(Host, AutomorphismGroupOrders) {
  EXPECT_EQ(host_automorphisms(HostGraph::complete(4)).size(), 24u);
  EXPECT_EQ(host_automorphisms(HostGraph::bipartite(3)).size(), 72u);
  EXPECT_EQ(host_automorphism_count(HostGraph::bipartite(4)), 1152u);
  EXPECT_THROW(host_automorphisms(HostGraph::complete(9)), GuardError);
}

TEST(Host, InducedEdgePermutationsAreBijections) {
  const HostGraph h = HostGraph::bipartite(3);
  for (const auto& p : host_automorphisms(h)) {
    const auto image = induced_edge_permutation(h, p);
    EXPECT_EQ(std::set<int>(image.begin(), image.end()).size(), 9u);
  }
}
