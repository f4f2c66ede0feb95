#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "accelqed/run.hpp"

namespace {

int run_subcommand(const std::string& name, const std::string& config_path,
                   const std::string& out, const std::string& format, int threads) {
  std::ifstream in(config_path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open config: " << config_path << "\n";
    return 1;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    accelqed::cli::RunConfig cfg = accelqed::cli::parse_config(ss.str());
    if (!out.empty()) {
      if (!cfg.output) cfg.output.emplace();
      cfg.output->path = out;
    }
    if (!format.empty()) {
      if (!cfg.output)
        throw std::runtime_error("--format given without an output path");
      cfg.output->format = format == "json" ? accelqed::cli::OutputSpec::Format::json
                                            : accelqed::cli::OutputSpec::Format::csv;
    }
    const auto exec = threads == 1 ? accelqed::sweep::Execution::serial
                                   : accelqed::sweep::Execution::parallel;
    return accelqed::cli::run(cfg, name, exec, threads).exit_status;
  } catch (const accelqed::cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radiative shifts and dispersion interactions of uniformly "
               "accelerated atoms"};
  app.set_version_flag("--version", accelqed::cli::version_string());

  std::string config_path, out, format;
  int threads = 0;
  int chosen = -1;
  const char* names[] = {"unruh", "lamb", "wall", "pair", "sweep"};
  for (int i = 0; i < 5; ++i) {
    auto* sub = app.add_subcommand(names[i]);
    sub->add_option("--config", config_path, "JSON config file")->required();
    sub->add_option("--out", out, "output path (overrides config)");
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--threads", threads, "worker threads (1 = serial)");
    sub->callback([&chosen, i] { chosen = i; });
  }
  app.require_subcommand(1);
  CLI11_PARSE(app, argc, argv);
  return run_subcommand(names[chosen], config_path, out, format, threads);
}
