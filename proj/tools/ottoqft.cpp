// ottoqft: sweeps, single points and oracle verification for the delta-coupled
// detector Otto cycle.
//
//   ottoqft sweep  --config <path> [--set k=v]... [--jobs N]
//   ottoqft point  [--config <path>] --set k=v ...
//   ottoqft verify [--config <path>] [--set k=v]...
//
// Exit status: 0 success, 1 validation error, 2 verification failure, 3 I/O error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ottoqft/ottoqft.hpp"

namespace {

enum Exit { kOk = 0, kValidation = 1, kVerification = 2, kIo = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ottoqft::Error(ottoqft::ErrorKind::io, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ottoqft::SweepSpec load(const std::string& config_path, std::vector<std::string> sets, const char* forced_mode) {
  const std::string text = config_path.empty() ? std::string{} : read_file(config_path);
  if (forced_mode) sets.insert(sets.begin(), std::string("mode = ") + forced_mode);
  return ottoqft::parse_config(text, sets);
}

void emit(const ottoqft::SweepSpec& spec, const std::string& text) {
  if (spec.output_path.empty())
    std::cout << text;
  else
    ottoqft::write_text_file(spec.output_path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delta-coupled detector quantum Otto cycle: sweeps and oracle checks"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> sets;
  unsigned jobs = ottoqft::default_jobs();

  auto* sweep = app.add_subcommand("sweep", "Evaluate a curve-tau2 or grid-couplings sweep to CSV");
  sweep->add_option("--config", config_path, "key = value configuration file")->required();
  sweep->add_option("--set", sets, "override a configuration key (k=v)");
  sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* point = app.add_subcommand("point", "Print the stroke ledger of a single cycle");
  point->add_option("--config", config_path, "key = value configuration file");
  point->add_option("--set", sets, "configuration key (k=v)");

  auto* verify = app.add_subcommand("verify", "Run every oracle cross-check");
  verify->add_option("--config", config_path, "key = value configuration file");
  verify->add_option("--set", sets, "override a tolerance or sample size (k=v)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep) {
      const auto spec = load(config_path, sets, nullptr);
      if (spec.mode != ottoqft::SweepMode::curve_tau2 && spec.mode != ottoqft::SweepMode::grid_couplings)
        throw ottoqft::Error(ottoqft::ErrorKind::validation, "sweep needs mode curve-tau2 or grid-couplings");
      emit(spec, ottoqft::run_sweep(spec, jobs));
      return kOk;
    }
    if (*point) {
      const auto spec = load(config_path, sets, "single-point");
      emit(spec, ottoqft::format_point(ottoqft::run_point(spec)));
      return kOk;
    }
    const auto spec = load(config_path, sets, "verify");
    const auto report = ottoqft::run_verify(spec.verify);
    emit(spec, report.text());
    return report.all_passed() ? kOk : kVerification;
  } catch (const ottoqft::Error& e) {
    std::cerr << "ottoqft: " << e.what() << '\n';
    return e.kind() == ottoqft::ErrorKind::io ? kIo : kValidation;
  } catch (const std::exception& e) {
    std::cerr << "ottoqft: " << e.what() << '\n';
    return kValidation;
  }
}
