#include "campanato/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include "campanato/carleson.hpp"
#include "campanato/composition.hpp"
#include "campanato/fourier.hpp"
#include "campanato/thresholds.hpp"

namespace campanato {

namespace {

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join_flags(Flag f) {
  std::string out;
  for (const auto& n : flag_names(f)) out += (out.empty() ? "" : "|") + n;
  return out;
}

std::string witness_text(const Json& w) {
  if (w.is_null()) return "";
  if (w.contains("arc")) return "arc(" + num(w["arc"]["center"]) + ";" + num(w["arc"]["length"]) + ")";
  if (w.contains("point")) {
    const Json& p = w["point"];
    return p.is_array() ? "z(" + num(p[0]) + ";" + num(p[1]) + ")" : "z(" + num(p) + ";0)";
  }
  return w.dump();
}

Json witness_of(const SeminormReport& r) {
  if (r.arc) return Json{{"arc", to_json(*r.arc)}};
  if (r.point) return Json{{"point", complex_to_json(*r.point)}};
  return nullptr;
}

struct Outcome {
  double value = std::numeric_limits<double>::quiet_NaN();
  Json witness = nullptr;
  Flag flags = Flag::None;
  Json extra = Json::object();
  bool passed = true;
  std::size_t failed_checks = 0;
  // (table name, cells) appended after the row's own entry
  std::vector<std::pair<std::string, std::vector<std::string>>> lines;
};

Outcome from_report(const SeminormReport& r) {
  Outcome o;
  o.value = r.value;
  o.witness = witness_of(r);
  o.flags = r.flags;
  if (!r.level_maxima.empty()) o.extra["level_maxima"] = r.level_maxima;
  return o;
}

using RowFn = std::function<Outcome(const GridConfig&, std::size_t index)>;

struct Prepared {
  std::string kind;
  Json inputs;
  RowFn run;
};

// ------------------------------------------------------------------- norm

Prepared prepare_norm(const JsonReader& row) {
  const std::string kind = row.string_or("seminorm", "campanato");
  const FunctionSpec f = function_from_json(row.at("function"));
  const double p = row.number_or("p", 2.0);
  const double eta = row.number_or("eta", 1.0);
  const IndexParams ip = [&] {
    try {
      return IndexParams(p, eta);
    } catch (const Error& e) {
      row.fail(e.what());
    }
  }();
  const double alpha = row.number_or("alpha", ip.alpha());
  RowFn run;
  if (kind == "hardy") {
    run = [f, p](const GridConfig& g, std::size_t) {
      Outcome o;
      o.value = hardy_norm(f, p, CircleGrid(g.circle_nodes), f.finite_on_boundary() ? 0.0 : g.delta_min);
      return o;
    };
  } else if (kind == "campanato") {
    run = [f, ip](const GridConfig& g, std::size_t) {
      const CircleGrid circle(g.circle_nodes);
      return from_report(campanato_seminorm(BoundarySamples::of(f, circle), ip, ArcFamily(g.arc_depth, g.circle_nodes)));
    };
  } else if (kind == "mobius") {
    run = [f, ip](const GridConfig& g, std::size_t) { return from_report(mobius_seminorm(f, ip, WGrid(g), g)); };
  } else if (kind == "lp_star" || kind == "lp_star_harmonic") {
    const LpVariant variant = kind == "lp_star" ? LpVariant::Analytic : LpVariant::Harmonic;
    run = [f, ip, variant](const GridConfig& g, std::size_t) {
      return from_report(lp_star_seminorm(f, ip, ArcFamily(g.arc_depth, g.circle_nodes), RadialGrid(g), variant));
    };
  } else if (kind == "bloch") {
    run = [f, alpha](const GridConfig& g, std::size_t) {
      return from_report(bloch_norm(f, alpha, DiskGrid(g, g.disk_angles)));
    };
  } else {
    row.at("seminorm").fail("unknown seminorm '" + kind + "'");
  }
  Json inputs{{"seminorm", kind}, {"function", to_json(f)}, {"p", p}, {"eta", eta}};
  if (kind == "bloch") inputs["alpha"] = alpha;
  return {kind, inputs, run};
}

// --------------------------------------------------------------- carleson

Prepared prepare_carleson(const JsonReader& row) {
  const std::string op = row.string_or("operation", "norm");
  const Density rho = density_from_json(row.at("density"));
  const double eta = row.number_or("eta", 1.0);
  Json inputs{{"operation", op}, {"density", to_json(rho)}};
  RowFn run;
  if (op == "norm") {
    if (!(eta > 0.0)) row.at("eta").fail("must be > 0");
    inputs["eta"] = eta;
    run = [rho, eta](const GridConfig& g, std::size_t) {
      const DiskGrid disk(g, g.disk_angles);
      return from_report(carleson_norm(rho, eta, ArcFamily(g.arc_depth, g.disk_angles), disk));
    };
  } else if (op == "box_mass") {
    const Arc arc = arc_from_json(row.at("arc"));
    inputs["arc"] = to_json(arc);
    run = [rho, arc](const GridConfig& g, std::size_t) {
      Outcome o;
      o.value = box_mass(rho, CarlesonBox{arc}, DiskGrid(g, g.disk_angles));
      o.witness = Json{{"arc", to_json(arc)}};
      return o;
    };
  } else if (op == "t_ab") {
    const double a = row.number_or("a", 1.0);
    const double b = row.number_or("b", 1.0);
    const Complex z = row.has("z") ? row.at("z").complex() : Complex{};
    inputs.update(Json{{"a", a}, {"b", b}, {"z", complex_to_json(z)}});
    run = [rho, a, b, z](const GridConfig& g, std::size_t) {
      Outcome o;
      o.value = t_ab_apply(a, b, rho, z, DiskGrid(g, g.area_angles));
      o.witness = Json{{"point", complex_to_json(z)}};
      return o;
    };
  } else if (op == "lemma31") {
    const double a = row.number_or("a", 1.0);
    const double b = row.number_or("b", 2.0);
    inputs.update(Json{{"a", a}, {"b", b}, {"eta", eta}});
    run = [rho, a, b, eta](const GridConfig& g, std::size_t) {
      const Lemma31Grids grids = Lemma31Grids::from(g);
      const Lemma31Result r = lemma31_ratio(rho, a, b, eta, grids.arcs, grids.eval, grids.area);
      Outcome o;
      o.value = r.ratio;
      o.flags = r.flags;
      o.extra = Json{{"numerator", r.numerator}, {"denominator", r.denominator}};
      return o;
    };
  } else {
    row.at("operation").fail("unknown operation '" + op + "'");
  }
  return {op, inputs, run};
}

// ---------------------------------------------------------------- compose

std::vector<std::string> criterion_line(std::size_t index, const std::string& kind, Complex w, double weight,
                                        double norm_factor, double product) {
  return {std::to_string(index), kind, num(w.real()), num(w.imag()), num(weight), num(norm_factor), num(product)};
}

Prepared prepare_compose(const JsonReader& row) {
  const std::string kind = row.string_or("criterion", "stanton");
  const SelfMapSpec phi = row.has("map") ? self_map_from_json(row.at("map")) : SelfMapSpec::identity();
  const double p = row.number_or("p", 2.0);
  const double eta = row.number_or("eta", 1.0);
  const double lambda = row.number_or("lambda", eta);
  const double alpha = row.number_or("alpha", 1.0);
  Json inputs{{"criterion", kind}, {"map", to_json(phi)}, {"p", p}};
  auto need_function = [&]() {
    const FunctionSpec f = function_from_json(row.at("function"));
    inputs["function"] = to_json(f);
    return f;
  };
  RowFn run;
  if (kind == "stanton") {
    const FunctionSpec f = need_function();
    run = [f, phi, p](const GridConfig& g, std::size_t) {
      const StantonResult s = stanton_norm(f, phi, p, DiskGrid(g, g.area_angles));
      Outcome o;
      o.value = s.value;
      o.flags = s.flags;
      o.extra = Json{{"area_term", s.area_term}, {"skipped_mass", s.skipped_mass}};
      return o;
    };
  } else if (kind == "nevanlinna") {
    const Complex w = row.at("w").complex();
    inputs["w"] = complex_to_json(w);
    run = [phi, w](const GridConfig&, std::size_t) {
      const CountingSample s = counting_sample(phi, w);
      Outcome o;
      o.value = s.value;
      o.flags = s.flags;
      o.witness = Json{{"point", complex_to_json(w)}};
      Json pre = Json::array();
      for (const auto& r : s.preimages) pre.push_back(Json{{"z", complex_to_json(r.z)}, {"multiplicity", r.multiplicity}});
      o.extra["preimages"] = pre;
      return o;
    };
  } else if (kind == "lemma42") {
    run = [phi](const GridConfig& g, std::size_t) {
      const Lemma42Report r = lemma42_checks(phi, DiskGrid(g, g.area_angles), CircleGrid(g.circle_nodes), g.delta_min);
      Outcome o;
      o.value = r.gap;
      o.flags = r.flags;
      o.witness = Json{{"point", complex_to_json(r.witness)}};
      o.extra = Json{{"norm_sq", r.norm_sq}, {"area_side", r.area_side}, {"max_ratio", r.max_ratio},
                     {"nodes_checked", r.nodes_checked}};
      return o;
    };
  } else if (kind == "splitting") {
    const FunctionSpec f = need_function();
    run = [f, phi, p](const GridConfig& g, std::size_t) {
      Outcome o;
      o.value = splitting_ratio(f, phi, p, CircleGrid(g.circle_nodes));
      return o;
    };
  } else if (kind == "hardy") {
    run = [phi, p](const GridConfig& g, std::size_t) {
      Outcome o;
      o.value = hardy_norm(phi, p, CircleGrid(g.circle_nodes));
      return o;
    };
  } else if (kind == "thm42") {
    inputs.update(Json{{"eta", eta}, {"lambda", lambda}});
    run = [phi, p, eta, lambda, kind](const GridConfig& g, std::size_t index) {
      Outcome o = from_report(thm42_criterion(phi, p, eta, lambda, WGrid(g), g));
      const Complex w = o.witness.is_null() ? Complex{} : JsonReader(o.witness["point"], "witness").complex();
      const double omw = (1.0 - std::abs(w)) * (1.0 + std::abs(w));
      const double weight = std::pow(omw, (1.0 - lambda) / 2.0) / std::pow(phi.one_minus_abs2(w, omw), (1.0 - eta) / p);
      o.lines.push_back({"criterion", criterion_line(index, kind, w, weight, o.value / weight, o.value)});
      return o;
    };
  } else if (kind == "thm43i") {
    inputs.update(Json{{"eta", eta}, {"alpha", alpha}});
    run = [phi, p, eta, alpha, kind](const GridConfig& g, std::size_t index) {
      Outcome o = from_report(thm43i_criterion(phi, alpha, p, eta, DiskGrid(g, g.disk_angles)));
      const Complex w = JsonReader(o.witness["point"], "witness").complex();
      const double omw = (1.0 - std::abs(w)) * (1.0 + std::abs(w));
      const double weight = std::pow(omw, alpha) / std::pow(phi.one_minus_abs2(w, omw), (p + 1.0 - eta) / p);
      o.lines.push_back({"criterion", criterion_line(index, kind, w, weight, std::abs(phi.derivative(w)), o.value)});
      return o;
    };
  } else if (kind == "thm43ii") {
    inputs.update(Json{{"eta", eta}, {"alpha", alpha}});
    run = [phi, p, eta, alpha](const GridConfig& g, std::size_t) {
      return from_report(thm43ii_criterion(phi, alpha, p, eta, ArcFamily(g.arc_depth, g.circle_nodes), RadialGrid(g)));
    };
  } else if (kind == "bloch_pair") {
    const int base = row.integer_or("base", thresholds::kBlochPairBase);
    inputs.update(Json{{"alpha", alpha}, {"base", base}});
    run = [alpha, base](const GridConfig& g, std::size_t) {
      const BlochPair pair = bloch_pair(alpha, DiskGrid(g, g.disk_angles), base);
      Outcome o;
      o.value = pair.certificate.ratio();
      o.witness = Json{{"point", complex_to_json(pair.certificate.argmin)}};
      o.extra = Json{{"min", pair.certificate.min}, {"max", pair.certificate.max},
                     {"f1", to_json(pair.f1)}, {"f2", to_json(pair.f2)}};
      return o;
    };
  } else {
    row.at("criterion").fail("unknown criterion '" + kind + "'");
  }
  if (kind == "bloch_pair") inputs.erase("map");
  return {kind, inputs, run};
}

// --------------------------------------------------------------- distance

Prepared prepare_distance(const JsonReader& row) {
  FunctionSpec f = function_from_json(row.at("function"));
  const double eta = row.number_or("eta", 1.0);
  const bool normalize = row.has("normalize_bloch") && row.at("normalize_bloch").boolean();
  std::vector<double> eps;
  if (row.has("eps")) {
    const JsonReader list = row.at("eps");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const double e = list.at(k).number();
      if (!(e > 0.0)) list.at(k).fail("eps must be > 0");
      eps.push_back(e);
    }
  }
  const int iterations = row.integer_or("iterations", 20);
  if (iterations < 1) row.at("iterations").fail("must be >= 1");
  Json inputs{{"function", to_json(f)}, {"eta", eta}, {"normalize_bloch", normalize}};
  if (!eps.empty()) inputs["eps"] = eps;
  RowFn run = [f, eta, normalize, eps, iterations](const GridConfig& g, std::size_t index) {
    const ProfileGrids grids = ProfileGrids::from(g);
    FunctionSpec target = f;
    if (normalize) {
      const double b = bloch_norm(f, 0.5 * (3.0 - eta), grids.base).value;
      if (b == 0.0) throw DegenerateError("distance: Bloch norm vanishes, cannot normalize");
      target = FunctionSpec::scale(1.0 / b, f);
    }
    const DistanceEstimate est = distance_estimate(target, eta, grids, iterations);
    Outcome o;
    o.value = est.value;
    if (est.transition) o.flags |= Flag::Divergent;
    o.extra = Json{{"transition", est.transition}, {"eps_low", est.eps_low}, {"eps_high", est.eps_high}};
    const std::vector<ProfileRow> rows = eps.empty() ? est.probes : distance_profile(target, eta, eps, grids);
    for (const auto& r : rows) {
      const Json w = r.witness ? Json{{"arc", to_json(*r.witness)}} : Json(nullptr);
      o.lines.push_back({"distance",
                         {std::to_string(index), num(r.eps), num(r.norm), num(r.refined_norm), join_flags(r.flag),
                          witness_text(w)}});
    }
    return o;
  };
  return {"distance", inputs, run};
}

// ----------------------------------------------------------------- verify

Outcome checks_outcome(const std::vector<CheckResult>& checks) {
  Outcome o;
  Json list = Json::array();
  for (const auto& c : checks) {
    list.push_back(to_json(c));
    if (!c.passed) ++o.failed_checks;
    o.lines.push_back({"checks", {c.id, c.name, c.passed ? "PASS" : "FAIL", num(c.value), num(c.threshold), c.detail}});
  }
  o.value = static_cast<double>(o.failed_checks);
  o.passed = o.failed_checks == 0;
  o.extra["checks"] = list;
  return o;
}

Prepared prepare_verify(const JsonReader& row) {
  if (row.has("suite")) {
    const std::string name = row.at("suite").string();
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) row.at("suite").fail("unknown suite '" + name + "'");
    return {"suite", Json{{"suite", name}},
            [name](const GridConfig& g, std::size_t) { return checks_outcome(run_suite(name, g)); }};
  }
  if (row.has("criterion")) {
    const int k = row.at("criterion").integer();
    if (k < 1 || k > kAcceptanceCount) row.at("criterion").fail("must lie in [1, 11]");
    return {"criterion", Json{{"criterion", k}},
            [k](const GridConfig& g, std::size_t) { return checks_outcome({acceptance_criterion(k, g)}); }};
  }
  if (row.has("check")) {
    const std::string name = row.at("check").string();
    if (name != "lemma42") row.at("check").fail("unknown check '" + name + "'");
    std::vector<SelfMapSpec> maps;
    Json specs = Json::array();
    const JsonReader list = row.at("maps");
    for (std::size_t k = 0; k < list.size(); ++k) {
      maps.push_back(self_map_from_json(list.at(k)));
      specs.push_back(to_json(maps.back()));
    }
    const double tol = row.number_or("tolerance", 1e-4);
    return {"lemma42", Json{{"check", name}, {"maps", specs}, {"tolerance", tol}},
            [maps, tol](const GridConfig& g, std::size_t) {
              std::vector<CheckResult> out;
              const DiskGrid disk(g, g.area_angles);
              const CircleGrid circle(g.circle_nodes);
              for (std::size_t k = 0; k < maps.size(); ++k) {
                CheckResult c;
                c.id = "lemma42[" + std::to_string(k) + "]";
                c.name = "identity gap";
                c.threshold = tol;
                try {
                  const Lemma42Report r = lemma42_checks(maps[k], disk, circle, g.delta_min);
                  c.value = r.gap;
                  c.passed = r.gap <= tol;
                  c.detail = "norm_sq " + num(r.norm_sq) + ", area side " + num(r.area_side);
                } catch (const Error& e) {
                  c.detail = std::string("error: ") + e.what();
                }
                out.push_back(c);
              }
              return checks_outcome(out);
            }};
  }
  row.fail("verify rows need one of suite, criterion, check");
}

Prepared prepare(Task task, const JsonReader& row) {
  if (!row.value().is_object()) row.fail("row must be an object");
  switch (task) {
    case Task::Norm: return prepare_norm(row);
    case Task::Carleson: return prepare_carleson(row);
    case Task::Compose: return prepare_compose(row);
    case Task::Distance: return prepare_distance(row);
    case Task::Verify: return prepare_verify(row);
  }
  row.fail("unreachable task");
}

const std::vector<std::string>& table_header(const std::string& name, bool refine) {
  static const std::vector<std::string> kReport{"index", "kind", "value", "witness", "flags", "error"};
  static const std::vector<std::string> kReportRefined{"index",         "kind",          "value",    "witness", "flags",
                                                       "error",         "refined_value", "relative_change", "converged"};
  static const std::vector<std::string> kDistance{"row", "eps", "norm", "refined_norm", "flag", "witness"};
  static const std::vector<std::string> kCriterion{"row", "criterion", "w_re", "w_im", "weight_factor", "norm_factor",
                                                   "product"};
  static const std::vector<std::string> kChecks{"id", "name", "status", "value", "threshold", "detail"};
  if (name == "report") return refine ? kReportRefined : kReport;
  if (name == "distance") return kDistance;
  if (name == "criterion") return kCriterion;
  return kChecks;
}

Table& table(Report& report, const std::string& name, bool refine) {
  for (auto& t : report.tables) {
    if (t.name == name) return t;
  }
  report.tables.push_back(Table{name, table_header(name, refine), {}});
  return report.tables.back();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const char* task_name(Task t) {
  switch (t) {
    case Task::Norm: return "norm";
    case Task::Carleson: return "carleson";
    case Task::Compose: return "compose";
    case Task::Distance: return "distance";
    case Task::Verify: return "verify";
  }
  return "?";
}

Task parse_task(const std::string& name, const std::string& path) {
  for (Task t : {Task::Norm, Task::Carleson, Task::Compose, Task::Distance, Task::Verify}) {
    if (name == task_name(t)) return t;
  }
  throw ConfigError(path + ": unknown task '" + name + "'");
}

JobConfig job_from_json(const Json& doc, const std::string& origin) {
  const JsonReader in(doc, origin);
  if (!doc.is_object()) in.fail("config must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "task" && key != "grid" && key != "refine" && key != "rows") in.fail("unknown field '" + key + "'");
  }
  JobConfig job;
  job.task = parse_task(in.at("task").string(), in.at("task").path());
  if (in.has("grid")) job.grid = grid_from_json(in.at("grid"));
  if (in.has("refine")) job.refine = in.at("refine").boolean();
  const JsonReader rows = in.at("rows");
  if (!doc["rows"].is_array()) rows.fail("must be an array");
  job.rows = doc["rows"];
  return job;
}

JobConfig load_job(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ConfigError(path + ": cannot open config file");
  std::stringstream text;
  text << file.rdbuf();
  return job_from_json(parse_json(text.str(), path), path);
}

Report run_job(const JobConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  config.grid.validate();
  std::vector<Prepared> prepared;
  for (std::size_t k = 0; k < config.rows.size(); ++k) {
    prepared.push_back(prepare(config.task, JsonReader(config.rows[k], "rows[" + std::to_string(k) + "]")));
  }
  const GridConfig fine = config.grid.refined();

  Report report;
  Json rows = Json::array();
  table(report, "report", config.refine);
  for (std::size_t k = 0; k < prepared.size(); ++k) {
    const Prepared& p = prepared[k];
    Json row{{"index", k}, {"kind", p.kind}, {"inputs", p.inputs}};
    std::vector<std::string> cells{std::to_string(k), p.kind};
    try {
      Outcome o = p.run(config.grid, k);
      row["value"] = o.value;
      row["witness"] = o.witness;
      row["flags"] = flag_names(o.flags);
      if (!o.extra.empty()) row["details"] = o.extra;
      if (o.failed_checks > 0 || !o.passed) row["passed"] = false;
      report.failed_checks += o.failed_checks;
      cells.insert(cells.end(), {num(o.value), witness_text(o.witness), join_flags(o.flags), ""});
      if (config.refine && config.task != Task::Verify) {
        try {
          const Outcome r = p.run(fine, k);
          const double change = o.value == r.value ? 0.0
                                                   : std::abs(r.value - o.value) /
                                                         std::max(std::abs(o.value), std::abs(r.value));
          const bool converged = change < thresholds::kRefinementTolerance;
          row["refined_value"] = r.value;
          row["relative_change"] = change;
          row["converged"] = converged;
          cells.insert(cells.end(), {num(r.value), num(change), converged ? "true" : "false"});
        } catch (const Error& e) {
          row["refined_error"] = e.what();
          cells.insert(cells.end(), {"", "", "false"});
        }
      } else if (config.refine) {
        cells.insert(cells.end(), {"", "", ""});
      }
      for (auto& [name, line] : o.lines) table(report, name, config.refine).rows.push_back(line);
    } catch (const ConfigError&) {
      throw;
    } catch (const Error& e) {
      ++report.row_errors;
      row["value"] = nullptr;
      row["flags"] = Json::array();
      row["error"] = e.what();
      cells.insert(cells.end(), {"", "", "", e.what()});
      if (config.refine) cells.insert(cells.end(), {"", "", ""});
    }
    table(report, "report", config.refine).rows.push_back(cells);
    rows.push_back(row);
  }
  report.body = Json{{"task", task_name(config.task)},
                     {"refine", config.refine},
                     {"rows", rows},
                     {"summary", Json{{"rows", prepared.size()},
                                      {"row_errors", report.row_errors},
                                      {"failed_checks", report.failed_checks}}}};
  report.provenance = Json{{"version", kVersion},
                           {"grid", to_json(config.grid)},
                           {"wall_time_s", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  if (config.refine) report.provenance["refined_grid"] = to_json(fine);
  return report;
}

std::string to_csv(const Table& t) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_cell(cells[i]);
    out += "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return out;
}

void write_report(const Report& report, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path base(dir);
  std::ofstream(base / "report.json") << Json{{"body", report.body}, {"provenance", report.provenance}}.dump(2) << "\n";
  for (const auto& t : report.tables) std::ofstream(base / (t.name + ".csv")) << to_csv(t);
}

int exit_status(const Report& report) { return report.failed_checks > 0 || report.row_errors > 0 ? 1 : 0; }

}  // namespace campanato
