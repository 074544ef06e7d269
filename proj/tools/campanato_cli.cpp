#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "campanato/harness.hpp"

namespace {

struct Options {
  std::string config;
  std::string out;
  std::optional<int> circle, radial, depth, disk_angles, area_angles;
  std::optional<double> delta;
  bool refine = false;
  std::string suite;
  std::optional<int> criterion;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config, "JSON job file");
  cmd->add_option("--out", o.out, "directory for report.json and CSV tables");
  cmd->add_option("--grid-circle", o.circle, "boundary nodes N");
  cmd->add_option("--grid-radial", o.radial, "radial panels J");
  cmd->add_option("--arc-depth", o.depth, "dyadic arc depth K");
  cmd->add_option("--delta-min", o.delta, "smallest distance to the boundary");
  cmd->add_option("--disk-angles", o.disk_angles, "angular nodes of the box grid");
  cmd->add_option("--area-angles", o.area_angles, "angular nodes of the area grid");
  cmd->add_flag("--refine", o.refine, "also run on the doubled grid and append convergence columns");
}

campanato::JobConfig build_job(const std::string& task, const Options& o) {
  using namespace campanato;
  Json doc;
  if (!o.config.empty()) {
    std::ifstream file(o.config);
    if (!file) throw ConfigError(o.config + ": cannot open config file");
    std::stringstream text;
    text << file.rdbuf();
    doc = parse_json(text.str(), o.config);
    if (!doc.is_object()) throw ConfigError(o.config + ": config must be an object");
    if (!doc.contains("task")) doc["task"] = task;
    if (doc["task"] != task) throw ConfigError(o.config + ".task: '" + doc["task"].dump() + "' does not match subcommand '" + task + "'");
  } else if (task == "verify") {
    doc = Json{{"task", task}, {"rows", Json::array()}};
  } else {
    throw ConfigError("--config: required for the " + task + " subcommand");
  }
  if (task == "verify") {
    if (!o.suite.empty()) doc["rows"].push_back(Json{{"suite", o.suite}});
    if (o.criterion) doc["rows"].push_back(Json{{"criterion", *o.criterion}});
    if (doc["rows"].empty()) doc["rows"].push_back(Json{{"suite", "all"}});
  }
  JobConfig job = job_from_json(doc, o.config.empty() ? "cli" : o.config);
  if (o.circle) job.grid.circle_nodes = *o.circle;
  if (o.radial) job.grid.radial_panels = *o.radial;
  if (o.depth) job.grid.arc_depth = *o.depth;
  if (o.delta) job.grid.delta_min = *o.delta;
  if (o.disk_angles) job.grid.disk_angles = *o.disk_angles;
  if (o.area_angles) job.grid.area_angles = *o.area_angles;
  job.refine = job.refine || o.refine;
  job.grid.validate();
  return job;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Campanato space seminorms, Carleson measures and composition criteria"};
  app.require_subcommand(1);
  Options opts;
  for (const char* name : {"norm", "carleson", "compose", "distance", "verify"}) {
    CLI::App* cmd = app.add_subcommand(name);
    add_common(cmd, opts);
    if (std::string(name) == "verify") {
      cmd->add_option("--suite", opts.suite, "core | seminorm-equivalence | carleson | composition | all");
      cmd->add_option("--criterion", opts.criterion, "single acceptance criterion 1..11");
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const std::string task = app.get_subcommands().front()->get_name();
  try {
    const campanato::JobConfig job = build_job(task, opts);
    const campanato::Report report = campanato::run_job(job);
    if (opts.out.empty()) {
      std::cout << report.body.dump(2) << "\n";
    } else {
      campanato::write_report(report, opts.out);
    }
    for (const auto& t : report.tables) {
      if (t.name != "checks") continue;
      for (const auto& r : t.rows) std::cerr << r[2] << " " << r[0] << " " << r[1] << " | " << r[5] << "\n";
    }
    std::cerr << task << ": " << report.body["summary"]["rows"] << " rows, " << report.row_errors << " row errors, "
              << report.failed_checks << " failed checks\n";
    return campanato::exit_status(report);
  } catch (const campanato::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
