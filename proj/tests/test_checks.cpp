#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "permrel/checks.hpp"
#include "permrel/errors.hpp"

using namespace permrel;

namespace {

RunConfig cfg(int n, int l, std::vector<std::string> perms) {
  RunConfig c;
  c.n = n;
  c.l = l;
  c.perms = std::move(perms);
  return c;
}

nlohmann::json results_only(const Report& r) {
  nlohmann::json j = nlohmann::json::array();
  for (const CheckResult& e : r.results) {
    nlohmann::json o;
    o["check"] = e.check;
    o["status"] = e.status;
    o["data"] = e.data;
    j.push_back(o);
  }
  return j;
}

}  // namespace

TEST_CASE("classify report") {
  const Report r = run_classify(cfg(3, 2, {"(1 2 3)"}));
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0].status == "pass");
  CHECK(r.results[0].data["semi_regular"] == true);
  CHECK(r.results[0].data["abelian"] == true);
  CHECK(r.results[0].data["transitive"] == true);
  CHECK(r.results[0].data["cancellative_predicted"] == true);
  CHECK(report_exit_code(r) == 0);

  const Report free_r = run_classify(cfg(3, 2, {}));
  CHECK(free_r.results[0].data["free"] == true);
}

TEST_CASE("verify bundle passes on the swap presentation") {
  RunConfig c = cfg(2, 2, {"(1 2)"});
  const Report r = run_verify(c);
  CHECK(r.all_pass());
  CHECK(report_exit_code(r) == 0);
  // deterministic modulo timings
  const Report again = run_verify(c);
  CHECK(results_only(r) == results_only(again));
}

TEST_CASE("verify reports the non-embedding witness for the full symmetric group") {
  RunConfig c = cfg(3, 2, {"(1 2)", "(1 3)"});
  c.length_bound = 5;
  const Report r = run_verify(c);
  bool saw_embedding = false;
  for (const CheckResult& e : r.results) {
    if (e.check != "embedding") continue;
    saw_embedding = true;
    CHECK(e.status == "pass");  // collapse expected for a non-abelian group
    CHECK(e.data["non_embedding_witnessed"] == true);
    REQUIRE(e.witness.has_value());
    CHECK((*e.witness)["kind"] == "equal_in_group_distinct_in_monoid");
  }
  CHECK(saw_embedding);
  CHECK(r.all_pass());
}

TEST_CASE("verify in parallel matches sequential") {
  RunConfig c = cfg(3, 2, {"(1 2 3)"});
  const Report seq = run_verify(c);
  c.parallel = true;
  const Report par = run_verify(c);
  CHECK(results_only(seq) == results_only(par));
}

TEST_CASE("growth verdicts") {
  {
    const Report r = run_growth(cfg(3, 2, {"(1 2 3)"}));
    REQUIRE(r.results.size() == 1);
    CHECK(r.results[0].status == "pass");
    CHECK(r.results[0].data["verdict"] == "gk_dimension_1");
  }
  {
    const Report r = run_growth(cfg(3, 2, {"(1 2)"}));
    CHECK(r.results[0].status == "pass");
    CHECK(r.results[0].data["verdict"] == "exponential");
  }
}

TEST_CASE("word problem reports") {
  {
    const Report r = run_wp(cfg(2, 2, {"(1 2)"}), "x1 x2", "x2 x1", "monoid");
    CHECK(r.results[0].data["equal"] == true);
  }
  {
    const Report r = run_wp(cfg(2, 2, {"(1 2)"}), "x1", "x2", "monoid");
    CHECK(r.results[0].data["equal"] == false);
  }
  {
    const Report r = run_wp(cfg(2, 2, {"(1 2)"}), "x1 x2", "x2 x1", "group");
    CHECK(r.results[0].data["equal"] == true);
  }
  CHECK_THROWS_AS(run_wp(cfg(2, 2, {"(1 2)"}), "x1", "x2", "ring"), ParseError);
}

TEST_CASE("revcheck reports") {
  {
    const Report r = run_revcheck({"ab", "abab"}, 6);
    CHECK(r.results[0].status == "pass");
    CHECK(r.results[0].data["reversible_up_to_depth"] == true);
    CHECK(r.results[0].data["cyclic_envelope"] == "ab");
  }
  {
    const Report r = run_revcheck({"ab", "ba"}, 5);
    CHECK(r.results[0].data["reversible_up_to_depth"] == false);
    REQUIRE(r.results[0].witness.has_value());
    CHECK((*r.results[0].witness)["s"] == "ab");
    CHECK((*r.results[0].witness)["t"] == "ba");
  }
}

TEST_CASE("text and json renderings carry the same verdicts") {
  const Report r = run_verify(cfg(2, 2, {"(1 2)"}));
  const std::string text = render_text(r);
  const std::string json_text = render_json(r);
  const auto parsed = nlohmann::json::parse(json_text);
  CHECK(parsed["schema_version"] == kReportSchemaVersion);
  CHECK(parsed["overall"] == (r.all_pass() ? "pass" : "fail"));
  CHECK(parsed["results"].size() == r.results.size());
  for (const CheckResult& e : r.results) {
    CHECK(text.find("[" + e.status + "] " + e.check) != std::string::npos);
    bool found = false;
    for (const auto& je : parsed["results"])
      if (je["check"] == e.check && je["status"] == e.status) found = true;
    CHECK(found);
  }
  CHECK(text.find(r.all_pass() ? "overall: PASS" : "overall: FAIL") != std::string::npos);
}

TEST_CASE("config files fill in unset fields") {
  const std::string path = "permrel_test_config.tmp";
  {
    std::ofstream out(path);
    out << "# sample configuration\n";
    out << "n = 3\n";
    out << "l = 2\n";
    out << "perm = (1 2 3)\n";
    out << "length_bound = 5\n";
    out << "seed = 42\n";
    out << "format = json\n";
  }
  RunConfig c;
  load_config_file(c, path);
  CHECK(c.n == 3);
  CHECK(c.l == 2);
  CHECK(c.perms == std::vector<std::string>{"(1 2 3)"});
  CHECK(c.length_bound == 5);
  CHECK(c.seed == 42);
  CHECK(c.format == "json");
  std::remove(path.c_str());

  RunConfig bad;
  CHECK_THROWS_AS(load_config_file(bad, "no_such_file.cfg"), ParseError);
}

TEST_CASE("run configs reject malformed input") {
  CHECK_THROWS_AS(run_classify(cfg(0, 2, {})), ParseError);
  CHECK_THROWS_AS(run_classify(cfg(3, 1, {})), ParseError);
  CHECK_THROWS_AS(run_classify(cfg(3, 2, {"(1 9)"})), ParseError);
}
