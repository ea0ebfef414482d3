#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "lvo/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"lattice vertex operator checks"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "run verification suites on a model config");
  std::string config_path;
  std::vector<std::string> suites;
  std::string out_path, tables_path;
  bool as_json = false, with_timings = false, serial = false;
  int threads = 0;
  check->add_option("config", config_path, "model configuration file")->required();
  check->add_option("--suite", suites, "suite name (repeatable); default: config selection");
  check->add_option("--out", out_path, "write the report to a file instead of stdout");
  check->add_flag("--json", as_json, "emit the JSON report");
  check->add_flag("--timings", with_timings, "include per-check timings in the JSON report");
  check->add_option("--tables", tables_path,
                    "also dump grade/character tables as JSON to this file");
  check->add_flag("--serial", serial, "run every kernel on the serial reference lane");
  check->add_option("--threads", threads, "OpenMP thread cap (0 = library default)");

  CLI11_PARSE(app, argc, argv);

  lvo::par::Exec ex = serial ? lvo::par::Exec::serial : lvo::par::Exec::openmp;
  lvo::par::max_threads() = threads;

  try {
    lvo::ModelConfig cfg = lvo::parse_config_file(config_path);
    if (!suites.empty()) cfg.suites = suites;
    if (const char* budget = std::getenv("LVO_STATE_BUDGET")) {
      cfg.state_budget = (size_t)std::atoll(budget);
    }
    lvo::Lattice lat = lvo::build_config_lattice(cfg);

    if (!tables_path.empty()) {
      std::ofstream tout(tables_path);
      if (!tout) {
        std::cerr << "cannot write " << tables_path << "\n";
        return 2;
      }
      tout << lvo::model_tables_json(cfg, lat, ex);
    }

    std::vector<lvo::Report> reports = lvo::run_selected_suites(cfg, lat, ex);
    std::string text =
        as_json ? lvo::to_json(reports, cfg.echo, with_timings) : lvo::to_text(reports);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        return 2;
      }
      out << text;
    }
    for (const auto& r : reports)
      if (!r.all_pass()) return 1;
    return 0;
  } catch (const lvo::Error& e) {
    std::cerr << lvo::err_name(e.code) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
