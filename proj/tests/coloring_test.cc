#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gallai/coloring.hpp"
#include "gallai/error.hpp"

using namespace gallai;

TEST(Coloring, ValidateReportsEveryProblem) {
  const HostGraph h = HostGraph::complete(3);
  EXPECT_TRUE(validate(EdgeColoring{h, 2, {1, 2, 2}}).empty());
  EXPECT_EQ(validate(EdgeColoring{h, 3, {1, 2, 2}}).size(), 1u);
  EXPECT_FALSE(validate(EdgeColoring{h, 2, {1, 2}}).empty());
  EXPECT_FALSE(validate(EdgeColoring{h, 2, {1, 2, 5}}).empty());
  EXPECT_FALSE(validate(EdgeColoring{h, 4, {1, 2, 3}}).empty());
  EXPECT_THROW(require_valid(EdgeColoring{h, 2, {0, 1, 2}}), ValidationError);
}

TEST(Coloring, Profiles) {
  EXPECT_EQ(profiles_for(6, 4), (std::vector<ClassProfile>{{3, 1, 1, 1}, {2, 2, 1, 1}}));
  EXPECT_EQ(profiles_for(6, 5), (std::vector<ClassProfile>{{2, 1, 1, 1, 1}}));
  EXPECT_TRUE(profiles_for(3, 4).empty());
  EXPECT_EQ(labeled_partition_count(6, {2, 1, 1, 1, 1}), static_cast<BigCount>(15));
  EXPECT_EQ(labeled_partition_count(6, {2, 2, 1, 1}), static_cast<BigCount>(45));
  EXPECT_EQ(profile_of(EdgeColoring{HostGraph::complete(3), 2, {2, 1, 2}}), (ClassProfile{2, 1}));
}

TEST(Coloring, FirstOccurrenceRelabel) {
  const std::vector<int> colors{3, 3, 1, 2, 1};
  EXPECT_EQ(first_occurrence_relabel(colors), (std::vector<int>{1, 1, 2, 3, 2}));
}

TEST(Coloring, CanonicalFormIsInvariant) {
  const HostGraph h = HostGraph::complete(4);
  std::mt19937 rng(7);
  const auto autos = host_automorphisms(h);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> colors(6);
    for (int e = 0; e < 6; ++e) colors[e] = e < 3 ? e + 1 : static_cast<int>(rng() % 3) + 1;
    std::shuffle(colors.begin(), colors.end(), rng);
    const EdgeColoring c{h, 3, colors};
    const EdgeColoring base = canonicalize(c);
    const auto& p = autos[rng() % autos.size()];
    EXPECT_EQ(canonicalize(apply_automorphism(c, p)), base);
    EXPECT_EQ(canonicalize(relabel_colors(c, {2, 3, 1})), base);
  }
}

TEST(Coloring, TwoClassesForOneRepeatedPairOnK4) {
  const auto classes = enumerate_exact_colorings(HostGraph::complete(4), 5,
                                                 EnumerationOptions{ClassProfile{2, 1, 1, 1, 1}, 1});
  ASSERT_EQ(classes.size(), 2u);
  std::multiset<std::uint64_t> orbits{classes[0].partition_orbit, classes[1].partition_orbit};
  EXPECT_EQ(orbits, (std::multiset<std::uint64_t>{3, 12}));
}

TEST(Coloring, OrbitSumsMatchStirlingOnK4) {
  const HostGraph h = HostGraph::complete(4);
  for (int k = 1; k <= 6; ++k) {
    BigCount sum = 0;
    for (const auto& c : enumerate_exact_colorings(h, k)) sum += c.orbit_size;
    EXPECT_EQ(sum, factorial(k) * stirling2(6, k)) << "k=" << k;
  }
}

TEST(Coloring, OrbitSumsMatchStirlingOnK33) {
  const HostGraph h = HostGraph::bipartite(3);
  for (int k : {2, 5, 8}) {
    BigCount sum = 0;
    for (const auto& c : enumerate_exact_colorings(h, k)) sum += c.orbit_size;
    EXPECT_EQ(sum, factorial(k) * stirling2(9, k)) << "k=" << k;
  }
}

TEST(Coloring, EnumerationIsThreadIndependent) {
  const HostGraph h = HostGraph::complete(5);
  const auto one = enumerate_exact_colorings(h, 4, EnumerationOptions{{}, 1});
  const auto four = enumerate_exact_colorings(h, 4, EnumerationOptions{{}, 4});
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].representative, four[i].representative);
    EXPECT_EQ(one[i].orbit_size, four[i].orbit_size);
  }
}

TEST(Coloring, RepresentativesAreCanonicalAndSorted) {
  const HostGraph h = HostGraph::complete(5);
  const auto classes = enumerate_exact_colorings(h, 7);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    EXPECT_EQ(canonicalize(classes[i].representative), classes[i].representative);
    if (i > 0) EXPECT_LT(classes[i - 1].representative.colors, classes[i].representative.colors);
  }
}

TEST(Coloring, Guards) {
  EXPECT_THROW(check_enumeration(HostGraph::complete(8), 27, std::nullopt), GuardError);
  EXPECT_THROW(check_enumeration(HostGraph::complete(7), 10, std::nullopt), GuardError);
  EXPECT_NO_THROW(check_enumeration(HostGraph::complete(7), 19, std::nullopt));
  EXPECT_THROW(check_enumeration(HostGraph::bipartite(6), 35, std::nullopt), GuardError);
  EXPECT_THROW(check_enumeration(HostGraph::complete(4), 7, std::nullopt), ValidationError);
  EXPECT_THROW(check_enumeration(HostGraph::complete(4), 3, ClassProfile{5, 1}), ValidationError);
}
