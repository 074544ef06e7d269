#pragma once

#include <string>
#include <vector>

#include "campanato/checks.hpp"
#include "campanato/serialization.hpp"

namespace campanato {

enum class Task { Norm, Carleson, Compose, Distance, Verify };

const char* task_name(Task t);
/// ConfigError for anything outside norm | carleson | compose | distance | verify.
Task parse_task(const std::string& name, const std::string& path = "task");

struct JobConfig {
  Task task = Task::Norm;
  GridConfig grid;
  bool refine = false;
  Json rows = Json::array();
};

/// Reads {"task", "grid", "refine", "rows"}; unknown top-level keys are rejected.
JobConfig job_from_json(const Json& doc, const std::string& origin);
JobConfig load_job(const std::string& path);

struct Table {
  std::string name;  // file stem: report, distance, criterion, checks
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  Json body;        // deterministic for a fixed config
  Json provenance;  // grid, version, wall time
  std::vector<Table> tables;
  std::size_t row_errors = 0;
  std::size_t failed_checks = 0;
};

/// Parses every row first (ConfigError aborts), then runs them in order.
/// Module errors are recorded on their row and never stop the batch.
Report run_job(const JobConfig& config);

/// report.json plus one CSV per table, in `dir` (created if missing).
void write_report(const Report& report, const std::string& dir);

std::string to_csv(const Table& table);

/// 0 when nothing failed, 1 on check failures or row errors.
int exit_status(const Report& report);

inline constexpr const char* kVersion = "1.0.0";

}  // namespace campanato
