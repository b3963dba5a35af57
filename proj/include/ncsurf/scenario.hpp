#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ncsurf {

enum class Task {
  ReesReport,
  GluingIdeal,
  GlueCheck,
  ConeRestrict,
  PoleBounds,
  EmbedSearch,
  Example1Checks,
  Example2Checks,
  All,
};

enum class OutputFormat { Table, Structured };

std::string_view task_name(Task t);
std::optional<Task> parse_task(std::string_view name);
const std::vector<Task>& all_tasks();

inline constexpr std::string_view kDefaultFamily = "x*y, x^m, y^m";

struct Scenario {
  Task task = Task::All;
  int max_degree = 20;
  std::optional<std::string> family;
  OutputFormat format = OutputFormat::Table;
};

struct CheckRecord {
  std::string name;
  std::string inputs;
  std::string expected;
  std::string computed;
  bool pass = false;
  std::string note;  // free-form remark, e.g. a flagged discrepancy
};

struct Report {
  Scenario scenario;
  std::vector<CheckRecord> records;

  // Records a check that passes iff expected == computed.
  void expect(std::string name, std::string inputs, std::string expected, std::string computed,
              std::string note = {});
  bool passed() const;
  std::size_t failures() const;
};

// Throws ncsurf::Error or std::invalid_argument for an invalid scenario.
Report run(const Scenario& scenario);

void write_table(std::ostream& out, const Report& report);
// One tab-separated record per line with fields in the order name, inputs,
// expected, computed, verdict and an optional trailing note.
void write_structured(std::ostream& out, const Report& report);
void write_report(std::ostream& out, const Report& report);

}  // namespace ncsurf
