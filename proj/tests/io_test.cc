#include <gtest/gtest.h>

#include <filesystem>

#include "gallai/error.hpp"
#include "gallai/io.hpp"

using namespace gallai;

TEST(Io, ColoringRoundtrip) {
  const EdgeColoring c{HostGraph::complete(5), 9, {1, 1, 2, 3, 4, 5, 6, 7, 8, 9}};
  const std::string text = dump_json(coloring_to_json(c));
  EXPECT_EQ(coloring_from_json(parse_json(text)), c);
  EXPECT_NE(text.find("\"host\": \"Kn:5\""), std::string::npos);
}

TEST(Io, ColoringRejectsInvalid) {
  EXPECT_THROW(coloring_from_json(parse_json(R"({"host":"Kn:3","k":2,"colors":[1,1,1]})")),
               ValidationError);
  EXPECT_THROW(coloring_from_json(parse_json(R"({"host":"Kn:3","colors":[1,2,1]})")),
               ValidationError);
  EXPECT_THROW(parse_json("{"), ValidationError);
}

TEST(Io, PatternRoundtrip) {
  for (const char* name : {"P4plus", "K3", "Kmulti_3x2", "M2"}) {
    const PatternGraph p = builtin_pattern(name);
    EXPECT_EQ(pattern_from_json(parse_json(dump_json(pattern_to_json(p)))), p) << name;
  }
  const PatternGraph anon = pattern_from_json(
      parse_json(R"({"vertices":3,"edges":[[0,1],[1,2]],"bipartition":null,"name":null})"));
  EXPECT_EQ(anon.edge_count(), 2);
  EXPECT_FALSE(anon.bipartition().has_value());
}

TEST(Io, LoadPatternFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "gallai_io_pattern.json";
  write_file(path.string(), dump_json(pattern_to_json(path_graph(4))));
  EXPECT_EQ(load_pattern(path.string()).edge_count(), 3);
  std::filesystem::remove(path);
  EXPECT_THROW(load_pattern("no_such_pattern"), ValidationError);
}

TEST(Io, StructureRoundtrip) {
  StructureSpec s = structure5({0, 1, 2}, {1, 1, 1});
  s.one_edges = {{1, 2}};
  s.u_side = Side::V;
  EXPECT_EQ(structure_from_json(parse_json(dump_json(structure_to_json(s)))), s);
}

TEST(Io, CountReportRoundtrip) {
  CountReport r;
  r.total = 10;
  r.rainbow = 4;
  r.mono = {{1, 2}, {3, 1}};
  r.other = 3;
  const Json j = count_report_to_json(r);
  EXPECT_EQ(count_report_from_json(j), r);
  EXPECT_EQ(j.at("mono").at("3"), 1);
}

TEST(Io, KeysAreSorted) {
  const std::string text = dump_json(count_report_to_json(CountReport{}));
  EXPECT_LT(text.find("\"mono\""), text.find("\"other\""));
  EXPECT_LT(text.find("\"other\""), text.find("\"rainbow\""));
  EXPECT_LT(text.find("\"rainbow\""), text.find("\"total\""));
}

TEST(Io, VerificationFormats) {
  VerificationRow row;
  row.family = "K13";
  row.offset = -1;
  row.t = 5;
  row.formula = 18;
  row.search = 18;
  row.agree = true;
  row.witness_file = "w.json";
  const std::vector<VerificationRow> rows{row};
  EXPECT_EQ(verification_to_csv({}), "family,offset,t,formula,search,agree\n");
  EXPECT_EQ(verification_to_csv(rows), "family,offset,t,formula,search,agree\nK13,-1,5,18,18,true\n");
  const auto back = verification_from_json(parse_json(dump_json(verification_to_json(rows))));
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].formula, 18u);
  EXPECT_EQ(back[0].witness_file, "w.json");
  const std::string table = verification_to_table(rows);
  EXPECT_NE(table.find("GM_{k-1} formula"), std::string::npos);
  EXPECT_NE(table.find("K13"), std::string::npos);
}

TEST(Io, WriteFailure) {
  EXPECT_THROW(write_file("/nonexistent_dir/x/y.json", "{}"), ValidationError);
}
