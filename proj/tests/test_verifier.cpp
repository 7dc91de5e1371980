#include <doctest.h>

#include <algorithm>

#include "zgraph/constructions.hpp"
#include "zgraph/io.hpp"
#include "zgraph/verifier.hpp"
#include "zgraph/zgen.hpp"

using namespace zgraph;

namespace {

TheoremCheck find_check(const GroupReport& report, TheoremId id) {
  for (const TheoremCheck& t : report.theorems)
    if (t.id == id) return t;
  REQUIRE(false);
  return {};
}

}  // namespace

TEST_CASE("theorem id round trip") {
  for (TheoremId id : kAllTheorems)
    CHECK(theorem_id_from_string(theorem_name(id)) == id);
  CHECK_THROWS_AS(theorem_id_from_string("NOPE"), UnknownTheoremId);
}

TEST_CASE("theorem A on a Frobenius Z-group") {
  const TheoremCheck t = check_theorem(realize({7, 3, 2}), TheoremId::A);
  CHECK(t.applicable);
  CHECK(t.passed);
}

TEST_CASE("theorem A is inapplicable to non-Z-groups") {
  const TheoremCheck t = check_theorem(dicyclic_group(2), TheoremId::A);
  CHECK_FALSE(t.applicable);
}

TEST_CASE("theorems B and C on the diameter-4 order-60 group") {
  const AnalysisContext ctx = build_context(realize({15, 4, 2}));
  const TheoremCheck b = check_theorem(ctx, TheoremId::B);
  CHECK(b.applicable);
  CHECK(b.passed);
  const TheoremCheck c = check_theorem(ctx, TheoremId::C);
  CHECK(c.applicable);
  CHECK(c.passed);  // trivial center and diameter 4 > 2
  const TheoremCheck comm = check_theorem(ctx, TheoremId::COMM);
  CHECK(comm.applicable);
  CHECK(comm.passed);
}

TEST_CASE("theorem C passes on C2 through the one-vertex convention") {
  const TheoremCheck t = check_theorem(cyclic_group(2), TheoremId::C);
  CHECK(t.applicable);
  CHECK(t.passed);  // diameter finite(0) <= 2 and center nontrivial
}

TEST_CASE("NILP on Q8") {
  const TheoremCheck t = check_theorem(dicyclic_group(2), TheoremId::NILP);
  CHECK(t.applicable);
  CHECK(t.passed);
}

TEST_CASE("GD applies exactly to centerless nonabelian Z-groups") {
  CHECK(check_theorem(dihedral_group(3), TheoremId::GD).applicable);
  CHECK(check_theorem(dihedral_group(3), TheoremId::GD).passed);
  CHECK_FALSE(check_theorem(cyclic_group(6), TheoremId::GD).applicable);
  CHECK_FALSE(check_theorem(dicyclic_group(3), TheoremId::GD).applicable);
}

TEST_CASE("COMM never applies to Frobenius groups") {
  CHECK_FALSE(check_theorem(dihedral_group(3), TheoremId::COMM).applicable);
  CHECK_FALSE(check_theorem(realize({7, 3, 2}), TheoremId::COMM).applicable);
}

TEST_CASE("analysis rejects the trivial group") {
  CHECK_THROWS_AS(build_context(cyclic_group(1)), InvalidParameter);
}

TEST_CASE("analyze C6") {
  const GroupReport r = analyze(cyclic_group(6));
  CHECK(r.is_z_group);
  CHECK_FALSE(r.is_frobenius);
  CHECK(r.center_order == 6);
  CHECK(r.derived_order == 1);
  CHECK(r.cyclic.vertices == 5);
  CHECK(r.cyclic.diam == DiameterResult::finite(1));
  CHECK(r.cyclic.dominating == 5);
  CHECK_FALSE(r.commuting.has_value());
  CHECK(r.failed_checks() == 0);
}

TEST_CASE("analyze S3") {
  const GroupReport r = analyze(dihedral_group(3));
  CHECK(r.is_z_group);
  CHECK(r.is_frobenius);
  CHECK(r.cyclic.diam == DiameterResult::disconnected());
  CHECK(find_check(r, TheoremId::A).passed);
  CHECK(r.failed_checks() == 0);
}

TEST_CASE("analyze Q8") {
  const GroupReport r = analyze(dicyclic_group(2));
  CHECK_FALSE(r.is_z_group);
  CHECK_FALSE(find_check(r, TheoremId::A).applicable);
  CHECK(find_check(r, TheoremId::DOM).applicable);
  CHECK(find_check(r, TheoremId::DOM).passed);
  CHECK(r.cyclic.dominating == 1);
  CHECK(r.failed_checks() == 0);
}

TEST_CASE("corrupting the cyclic graph trips the checks with a witness") {
  VerifyConfig cfg;
  AnalysisContext ctx = build_context(cyclic_group(6), cfg);
  ctx.delta.toggle_edge(0, 1);  // remove the edge g ~ g^2
  bool failed = false;
  for (TheoremId id : kAllTheorems) {
    const TheoremCheck t = check_theorem(ctx, id, cfg);
    if (t.applicable && !t.passed) {
      failed = true;
      CHECK(!t.witness.empty());
    }
  }
  CHECK(failed);
}

TEST_CASE("run_suite over a small corpus") {
  std::vector<GroupSource> corpus;
  corpus.push_back({"constructor", [] { return dihedral_group(3); }});
  corpus.push_back({"constructor", [] { return dicyclic_group(2); }});
  corpus.push_back({"constructor", [] { return cyclic_group(6); }});
  corpus.push_back({"constructor", [] { return dicyclic_group(3); }});
  std::vector<GroupReport> reports;
  const SuiteReport suite = run_suite(corpus, {}, &reports, "smoke");
  CHECK(suite.group_count == 4);
  CHECK(suite.failed_total() == 0);
  CHECK(reports.size() == 4);
  // sorted by (order, name)
  CHECK(std::is_sorted(reports.begin(), reports.end(),
                       [](const GroupReport& a, const GroupReport& b) {
                         return std::tie(a.order, a.name) <
                                std::tie(b.order, b.name);
                       }));
  int applicable_A = 0;
  for (const auto& [name, totals] : suite.per_theorem)
    if (name == "A") applicable_A = totals.applicable;
  CHECK(applicable_A == 3);  // Q8 is not a Z-group
}

TEST_CASE("negative control reports failures with witnesses") {
  VerifyConfig cfg;
  cfg.negative_control = true;
  std::vector<GroupSource> corpus;
  corpus.push_back({"constructor", [] { return cyclic_group(6); }});
  corpus.push_back({"constructor", [] { return cyclic_group(12); }});
  const SuiteReport suite = run_suite(corpus, cfg, nullptr, "negative");
  CHECK(suite.failed_total() >= 1);
  for (const SuiteFailure& f : suite.failures) CHECK(!f.witness.empty());
}

TEST_CASE("per-group errors become failures, not crashes") {
  std::vector<GroupSource> corpus;
  corpus.push_back({"constructor", [] { return cyclic_group(6); }});
  corpus.push_back(
      {"file", []() -> FiniteGroup { throw ParseError("bad fixture"); }});
  const SuiteReport suite = run_suite(corpus, {}, nullptr, "errors");
  CHECK(suite.group_count == 2);
  REQUIRE(suite.failed_total() == 1);
  CHECK(suite.failures[0].theorem == "error");
}

TEST_CASE("suite reports are identical across parallelism levels") {
  const std::vector<GroupSource> corpus = default_corpus(2, 24);
  VerifyConfig serial;
  serial.jobs = 1;
  VerifyConfig parallel;
  parallel.jobs = 4;
  std::vector<GroupReport> a, b;
  const SuiteReport sa = run_suite(corpus, serial, &a, "det");
  const SuiteReport sb = run_suite(corpus, parallel, &b, "det");
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(report_json_line(a[i]) == report_json_line(b[i]));
  CHECK(sa.failed_total() == sb.failed_total());
  for (std::size_t i = 0; i < sa.per_theorem.size(); ++i) {
    CHECK(sa.per_theorem[i].second.applicable ==
          sb.per_theorem[i].second.applicable);
    CHECK(sa.per_theorem[i].second.passed == sb.per_theorem[i].second.passed);
  }
}

TEST_CASE("DOM and D agree whenever both are applicable") {
  for (const FiniteGroup& g :
       {cyclic_group(6), dihedral_group(3), dicyclic_group(2),
        dicyclic_group(3), symmetric_group(4), alternating_group(4),
        direct_product(cyclic_group(2), cyclic_group(4)), realize({5, 4, 2})}) {
    const AnalysisContext ctx = build_context(g);
    const TheoremCheck dom = check_theorem(ctx, TheoremId::DOM);
    const TheoremCheck d = check_theorem(ctx, TheoremId::D);
    CHECK(dom.passed == d.passed);
  }
}

TEST_CASE("default_corpus composition") {
  const auto corpus = default_corpus(2, 30);
  int zparams = 0, constructors = 0, permutations = 0;
  for (const GroupSource& s : corpus) {
    if (s.kind == "zparams") ++zparams;
    if (s.kind == "constructor") ++constructors;
    if (s.kind == "permutations") ++permutations;
  }
  CHECK(zparams > 30);
  CHECK(constructors == 10 + 7 + 63 + 3);
  CHECK(permutations == 4);

  const auto bare = default_corpus(2, 30, false);
  CHECK(static_cast<int>(bare.size()) == zparams);
}
