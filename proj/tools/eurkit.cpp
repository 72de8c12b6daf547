#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "eurkit/cli.hpp"
#include "eurkit/version.hpp"

int main(int argc, char** argv) {
  eurkit::CliConfig cfg;
  if (const char* dir = std::getenv("EURKIT_OUT_DIR")) cfg.out_dir = dir;

  CLI::App app{"Entropic uncertainty bounds for multiple projective measurements "
               "on bipartite states"};
  app.set_version_flag("--version",
                       std::string(eurkit::kToolName) + " " +
                           std::string(eurkit::kToolVersion));
  app.require_subcommand(1);

  const std::map<std::string, eurkit::OrderMode> order_map{
      {"given", eurkit::OrderMode::Given}, {"optimal", eurkit::OrderMode::Optimal}};

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_path,
                    "Output file (default: $EURKIT_OUT_DIR/<command default>, "
                    "else stdout)");
  };

  CLI::App* werner = app.add_subcommand(
      "werner", "Sweep the Werner family under the three Pauli bases (CSV)");
  werner->add_option("--grid", cfg.grid, "Number of p grid points")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
  add_out(werner);

  CLI::App* bell = app.add_subcommand(
      "bell", "Sweep the Bell-diagonal slice r=(1-2p,-p,-p) under the Pauli bases");
  bell->add_option("--grid", cfg.grid, "Number of p grid points")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
  add_out(bell);

  CLI::App* random = app.add_subcommand(
      "random", "Random-state ensemble under the built-in MUB set (CSV)");
  random->add_option("--dim", cfg.dim, "Local dimension, 2 or 3")
      ->capture_default_str();
  random->add_option("--samples", cfg.samples,
                     "Sample count (0 = default: 10000 for dim 2, 1000 for dim 3)")
      ->capture_default_str();
  random->add_option("--seed", cfg.seed, "Master seed for the per-sample streams")
      ->capture_default_str()
      ->envname("EURKIT_SEED");
  random->add_option("--threads", cfg.threads,
                     "Worker threads (output is identical for any value)")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, std::size_t{256}));
  add_out(random);

  CLI::App* bounds = app.add_subcommand(
      "bounds", "Evaluate every bound for a state JSON and a bases JSON");
  bounds->add_option("--state", cfg.state_path, "Density-matrix JSON file")
      ->required();
  bounds->add_option("--bases", cfg.bases_path, "JSON array of basis objects")
      ->required();
  bounds
      ->add_option("--order", cfg.order_mode,
                   "Basis ordering for f: given, or optimal (minimizes f, N <= 6)")
      ->transform(CLI::CheckedTransformer(order_map, CLI::ignore_case))
      ->default_str("given");
  add_out(bounds);

  CLI::App* mub = app.add_subcommand(
      "mub", "Print the built-in MUB set for the given dimension as a bases JSON");
  mub->add_option("--dim", cfg.dim, "Local dimension, 2 or 3")
      ->capture_default_str();
  add_out(mub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (app.got_subcommand(werner)) cfg.command = eurkit::Command::Werner;
  else if (app.got_subcommand(bell)) cfg.command = eurkit::Command::Bell;
  else if (app.got_subcommand(random)) cfg.command = eurkit::Command::Random;
  else if (app.got_subcommand(bounds)) cfg.command = eurkit::Command::Bounds;
  else cfg.command = eurkit::Command::Mub;

  return eurkit::run(cfg, std::cout, std::cerr);
}
