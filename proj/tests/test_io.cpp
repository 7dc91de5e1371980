#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "zgraph/constructions.hpp"
#include "zgraph/io.hpp"
#include "zgraph/zgen.hpp"

using namespace zgraph;

namespace {

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream os(path);
  os << text;
  return path;
}

}  // namespace

TEST_CASE("parse Cayley-table text") {
  const ParsedGroup p =
      parse_group_text("2\n0 1\n1 0\n", GroupFileFormat::cayley, "c2");
  CHECK(p.group.order() == 2);
  CHECK(p.source_kind == "file");
}

TEST_CASE("parse permutation text") {
  const ParsedGroup p = parse_group_text("(0 1)\n(0 1 2)\n",
                                         GroupFileFormat::permutations, "s3");
  CHECK(p.group.order() == 6);
  CHECK(p.source_kind == "permutations");
}

TEST_CASE("parse zparams text") {
  const ParsedGroup p =
      parse_group_text("15:4:2\n", GroupFileFormat::zparams, "g");
  CHECK(p.group.order() == 60);
  CHECK(p.source_kind == "zparams");
}

TEST_CASE("format sniffing") {
  CHECK(parse_group_text("2\n0 1\n1 0\n", GroupFileFormat::auto_detect, "g")
            .format == GroupFileFormat::cayley);
  CHECK(parse_group_text("(0 1)\n", GroupFileFormat::auto_detect, "g").format ==
        GroupFileFormat::permutations);
  CHECK(parse_group_text("7:3:2\n", GroupFileFormat::auto_detect, "g").format ==
        GroupFileFormat::zparams);
}

TEST_CASE("format by extension") {
  const auto tbl = write_temp("g1.tbl", "2\n0 1\n1 0\n");
  CHECK(parse_group_file(tbl).format == GroupFileFormat::cayley);
  const auto perms = write_temp("g2.perms", "(0 1 2)\n");
  CHECK(parse_group_file(perms).format == GroupFileFormat::permutations);
  const auto zp = write_temp("g3.zparams", "7:3:2\n");
  const ParsedGroup p = parse_group_file(zp);
  CHECK(p.format == GroupFileFormat::zparams);
  CHECK(p.group.order() == 21);
  std::filesystem::remove(tbl);
  std::filesystem::remove(perms);
  std::filesystem::remove(zp);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(
      parse_group_text("2\n0 1\n1 x\n", GroupFileFormat::cayley, "g"),
      "line 3: expected 2 entries in table row", ParseError);
  CHECK_THROWS_WITH_AS(
      parse_group_text("2\n0 1\n", GroupFileFormat::cayley, "g"),
      "expected 2 table rows, got 1", ParseError);
  CHECK_THROWS_AS(
      parse_group_text("(0 1\n", GroupFileFormat::permutations, "g"),
      ParseError);
  CHECK_THROWS_AS(parse_group_text("", GroupFileFormat::zparams, "g"),
                  ParseError);
  CHECK_THROWS_AS(parse_group_file("/no/such/file.tbl"), IoError);
}

TEST_CASE("validation errors surface through parsing") {
  CHECK_THROWS_AS(
      parse_group_text("2\n0 1\n1 1\n", GroupFileFormat::cayley, "g"),
      NotLatinSquare);
}

TEST_CASE("Cayley tables round-trip to isomorphic groups") {
  for (const FiniteGroup& g :
       {realize({7, 3, 2}), dihedral_group(4), dicyclic_group(3)}) {
    std::ostringstream os;
    write_cayley_table(g, os);
    const ParsedGroup back =
        parse_group_text(os.str(), GroupFileFormat::cayley, g.name());
    CHECK(isomorphism_oracle(g, back.group));
  }
}

TEST_CASE("group report JSON record") {
  const GroupReport r = analyze(cyclic_group(6));
  const auto j = nlohmann::json::parse(report_json_line(r));
  CHECK(j.at("schema") == 1);
  CHECK(j.at("record") == "group");
  CHECK(j.at("name") == "C6");
  CHECK(j.at("order") == 6);
  CHECK(j.at("z_group") == true);
  CHECK(j.at("frobenius") == false);
  CHECK(j.at("center_order") == 6);
  CHECK(j.at("graphs").at("cyclic").at("vertices") == 5);
  CHECK(j.at("graphs").at("cyclic").at("diameter").at("kind") == "finite");
  CHECK(j.at("graphs").at("cyclic").at("diameter").at("value") == 1);
  CHECK(j.at("graphs").at("commuting").is_null());
  CHECK(j.at("theorems").size() == 10);
  for (const auto& t : j.at("theorems")) {
    CHECK(t.contains("id"));
    CHECK(t.contains("applicable"));
  }
}

TEST_CASE("suite summary JSON record") {
  std::vector<GroupSource> corpus;
  corpus.push_back({"constructor", [] { return dihedral_group(3); }});
  std::vector<GroupReport> reports;
  const SuiteReport suite = run_suite(corpus, {}, &reports, "one group");
  const auto j = nlohmann::json::parse(summary_json_line(suite));
  CHECK(j.at("record") == "summary");
  CHECK(j.at("corpus") == "one group");
  CHECK(j.at("groups") == 1);
  CHECK(j.at("theorems").at("A").at("failed") == 0);
  CHECK(j.at("failures").empty());
  CHECK(j.contains("duration_ms"));

  std::ostringstream os;
  write_suite_report(os, reports, suite);
  std::istringstream is(os.str());
  std::string line;
  int lines = 0;
  while (std::getline(is, line)) {
    ++lines;
    CHECK_NOTHROW(nlohmann::json::parse(line));
  }
  CHECK(lines == 2);
}

TEST_CASE("error reports serialize with the error field") {
  GroupReport r;
  r.name = "broken";
  r.order = 0;
  r.source = "file";
  r.error = "bad fixture";
  const auto j = nlohmann::json::parse(report_json_line(r));
  CHECK(j.at("error") == "bad fixture");
  CHECK_FALSE(j.contains("theorems"));
}
