#include "ncsurf/app.hpp"

#include <CLI11.hpp>

#include <fstream>

#include "ncsurf/errors.hpp"
#include "ncsurf/scenario.hpp"

namespace ncsurf {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for log pluricanonical sections on normal crossing surfaces", "ncsurf"};

  std::string task = "all";
  Scenario sc;
  std::string family;
  std::string format = "table";
  std::string out_path;

  std::vector<std::string> task_names;
  for (Task t : all_tasks()) task_names.emplace_back(task_name(t));
  task_names.emplace_back(task_name(Task::All));

  app.add_option("--task", task, "Task to run")->check(CLI::IsMember(task_names));
  app.add_option("--max-degree", sc.max_degree, "Largest weight m to examine")
      ->check(CLI::PositiveNumber);
  app.add_option("--family", family, "Graded monomial family, e.g. \"x*y, x^m, y^m\"");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "structured"}));
  app.add_option("--out", out_path, "Write the report to a file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "ncsurf: " << e.what() << '\n';
    return kExitUsage;
  }

  sc.task = *parse_task(task);
  sc.format = format == "structured" ? OutputFormat::Structured : OutputFormat::Table;
  if (!family.empty()) sc.family = family;
  if (sc.task == Task::ReesReport && !sc.family) {
    err << "ncsurf: --task rees-report requires --family\n";
    return kExitUsage;
  }

  Report report;
  try {
    report = run(sc);
  } catch (const ParseError& e) {
    err << "ncsurf: invalid family: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "ncsurf: " << e.what() << '\n';
    return kExitUsage;
  }

  if (out_path.empty()) {
    write_report(out, report);
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "ncsurf: cannot open " << out_path << '\n';
      return kExitUsage;
    }
    write_report(file, report);
    if (!file.flush()) {
      err << "ncsurf: failed writing " << out_path << '\n';
      return kExitUsage;
    }
  }
  return report.passed() ? kExitPass : kExitCheckFailed;
}

}  // namespace ncsurf
