#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using viewcx::cli::RunConfig;

void add_common_flags(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--budget", config.budget, "simplex budget")->check(CLI::PositiveNumber);
  cmd->add_option("--threads", config.threads, "enumeration threads")
      ->check(CLI::Range(1, 256));
  cmd->add_option("--cache-dir", config.cache_dir, "complex cache directory");
  cmd->add_option("-o,--out", config.output_path, "output file (default: stdout)");
}

void add_kind_flag(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--kind", config.kind, "complex kind")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, viewcx::ComplexKind>{
              {"view", viewcx::ComplexKind::view},
              {"chromatic", viewcx::ComplexKind::chromatic}},
          CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"view complexes: builds, interval partitions, verified collapses"};
  app.require_subcommand(1);

  RunConfig config;
  if (const char* env = std::getenv("VIEWCX_CACHE_DIR")) config.cache_dir = env;

  CLI::App* build = app.add_subcommand("build", "build View^n or chi(Delta^n)");
  build->add_option("--n", config.n, "ambient parameter")->required()->check(CLI::Range(1, 15));
  add_kind_flag(build, config);
  build->add_option("--format", config.format, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, viewcx::cli::OutputFormat>{
              {"summary", viewcx::cli::OutputFormat::summary},
              {"json", viewcx::cli::OutputFormat::json},
              {"dot", viewcx::cli::OutputFormat::dot}},
          CLI::ignore_case));
  build->add_flag("--hasse", config.hasse, "emit the face-poset Hasse diagram with --format dot");
  add_common_flags(build, config);

  CLI::App* collapse = app.add_subcommand("collapse", "emit a verified collapsing sequence");
  collapse->add_option("--n", config.n, "ambient parameter")
      ->required()
      ->check(CLI::Range(1, 15));
  add_kind_flag(collapse, config);
  collapse->add_option("--mode", config.mode, "collapse mode")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, viewcx::CollapseMode>{
              {"plain", viewcx::CollapseMode::plain},
              {"equivariant", viewcx::CollapseMode::equivariant}},
          CLI::ignore_case));
  collapse->add_option("--target", config.target, "collapse target")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, viewcx::CollapseTarget>{
              {"chromatic", viewcx::CollapseTarget::chromatic},
              {"void", viewcx::CollapseTarget::to_void}},
          CLI::ignore_case));
  add_common_flags(collapse, config);

  CLI::App* verify = app.add_subcommand("verify", "replay and check a sequence file");
  std::string sequence_file;
  verify->add_option("sequence", sequence_file, "collapse sequence JSON")->required();
  add_common_flags(verify, config);

  CLI::App* oracle = app.add_subcommand("oracle", "cross-validate against executions");
  oracle->add_option("--n", config.n, "ambient parameter")->required()->check(CLI::Range(1, 5));
  add_common_flags(oracle, config);

  CLI::App* stats = app.add_subcommand("stats", "per-n structure table");
  stats->add_option("--n", config.n, "largest n")->required()->check(CLI::Range(1, 15));
  stats->add_option("--from", config.stats_from, "smallest n")->check(CLI::Range(1, 15));
  add_common_flags(stats, config);

  CLI11_PARSE(app, argc, argv);

  if (build->parsed()) return viewcx::cli::cmd_build(config, std::cout, std::cerr);
  if (collapse->parsed()) {
    if (collapse->count("--target") == 0 && config.kind == viewcx::ComplexKind::chromatic)
      config.target = viewcx::CollapseTarget::to_void;
    return viewcx::cli::cmd_collapse(config, std::cout, std::cerr);
  }
  if (verify->parsed())
    return viewcx::cli::cmd_verify(sequence_file, config, std::cout, std::cerr);
  if (oracle->parsed()) return viewcx::cli::cmd_oracle(config, std::cout, std::cerr);
  if (stats->parsed()) return viewcx::cli::cmd_stats(config, std::cout, std::cerr);
  return 0;
}
