#include <string>

#include "campanato/harness.hpp"
#include "doctest.h"

using namespace campanato;

namespace {

GridConfig quick_grid() {
  GridConfig g;
  g.circle_nodes = 1024;
  g.arc_depth = 6;
  g.w_angles = 16;
  g.disk_angles = 128;
  g.area_angles = 64;
  g.radial_panels = 8;
  return g;
}

JobConfig job(const std::string& text) {
  JobConfig j = job_from_json(parse_json(text, "test"), "test");
  j.grid = quick_grid();
  return j;
}

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("norm job on a constant reports zero") {
  const Report r = run_job(job(R"({"task": "norm", "rows": [
      {"seminorm": "campanato", "function": {"type": "constant", "c": 3}},
      {"seminorm": "lp_star", "function": {"type": "constant", "c": [1, 2]}}]})"));
  REQUIRE(r.body["rows"].size() == 2);
  CHECK(r.body["rows"][0]["value"].get<double>() < 1e-13);
  CHECK(r.body["rows"][1]["value"].get<double>() == 0.0);
  CHECK(exit_status(r) == 0);
}

TEST_CASE("identical configs give identical bodies") {
  const std::string text = R"({"task": "compose", "rows": [
      {"criterion": "thm43i", "map": {"type": "polynomial", "coeffs": [0, 0.5]}},
      {"criterion": "splitting", "function": {"type": "monomial", "n": 2}, "map": {"type": "identity"}}]})";
  const Report a = run_job(job(text));
  const Report b = run_job(job(text));
  CHECK(a.body.dump() == b.body.dump());
  REQUIRE(a.tables.size() == b.tables.size());
  for (std::size_t k = 0; k < a.tables.size(); ++k) CHECK(to_csv(a.tables[k]) == to_csv(b.tables[k]));
}

TEST_CASE("a failing row does not stop the batch") {
  const Report r = run_job(job(R"({"task": "compose", "rows": [
      {"criterion": "nevanlinna", "map": {"type": "polynomial", "coeffs": [0, 0, 1]}, "w": 0},
      {"criterion": "nevanlinna", "map": {"type": "polynomial", "coeffs": [0, 0, 1]}, "w": 0.25}]})"));
  REQUIRE(r.body["rows"].size() == 2);
  CHECK(r.body["rows"][0].contains("error"));
  CHECK(r.body["rows"][1]["value"].get<double>() == doctest::Approx(1.3862943611198906));
  CHECK(r.row_errors == 1);
  CHECK(exit_status(r) == 1);
}

TEST_CASE("config errors name the offending field") {
  CHECK(error_of([] { job(R"({"task": "norm", "rows": [{"function": {"type": "cauchy", "b": 2}}]})"); }).empty());
  const std::string bad_b = error_of([] {
    run_job(job(R"({"task": "norm", "rows": [{"function": {"type": "monomial", "n": 1}},
                                          {"function": {"type": "cauchy", "b": 2}}]})"));
  });
  CHECK(bad_b.find("rows[1].function") != std::string::npos);
  const std::string bad_type = error_of([] {
    run_job(job(R"({"task": "norm", "rows": [{"function": {"type": "spline"}}]})"));
  });
  CHECK(bad_type.find("rows[0].function.type") != std::string::npos);
  CHECK(error_of([] { job(R"({"task": "integrate", "rows": []})"); }).find("task") != std::string::npos);
  CHECK(error_of([] { job(R"({"task": "norm", "rows": [], "extra": 1})"); }).find("extra") != std::string::npos);
  CHECK(error_of([] { parse_json("{\"task\": ", "cfg.json"); }).find("cfg.json") != std::string::npos);
  CHECK(error_of([] {
          job_from_json(parse_json(R"({"task": "norm", "grid": {"circle_nodes": -4}, "rows": []})", "g"), "g");
        }).find("circle_nodes") != std::string::npos);
}

TEST_CASE("verify jobs") {
  CHECK_THROWS_AS(run_job(job(R"({"task": "verify", "rows": [{"suite": "everything"}]})")), ConfigError);
  CHECK_THROWS_AS(run_suite("everything", quick_grid()), ConfigError);
  JobConfig j = job(R"({"task": "verify", "rows": [{"check": "lemma42", "maps": [{"type": "identity"},
                                                   {"type": "polynomial", "coeffs": [0, 0, 1]}]}]})");
  j.grid = GridConfig{};
  const Report r = run_job(j);
  CHECK(r.failed_checks == 0);
  CHECK(exit_status(r) == 0);
  const Report core = run_job(job(R"({"task": "verify", "rows": [{"suite": "core"}]})"));
  CHECK(core.body["rows"][0]["details"]["checks"].size() >= 3);
}

TEST_CASE("refinement appends convergence columns") {
  JobConfig j = job(R"({"task": "norm", "refine": true, "rows": [
      {"seminorm": "bloch", "function": {"type": "monomial", "n": 1}}]})");
  const Report r = run_job(j);
  CHECK(r.body["rows"][0]["converged"].get<bool>());
  CHECK(r.tables[0].header.back() == "converged");
  CHECK(r.tables[0].rows[0].size() == r.tables[0].header.size());
}

TEST_CASE("csv quoting") {
  Table t{"report", {"a", "b"}, {{"x,y", "say \"hi\""}}};
  CHECK(to_csv(t) == "a,b\n\"x,y\",\"say \"\"hi\"\"\"\n");
}
