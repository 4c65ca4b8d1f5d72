#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "simapprox/cli.hpp"

int main(int argc, char** argv) {
  using namespace simapprox;
  CLI::App app{"Certified simultaneous translation approximants"};
  app.require_subcommand(1);

  std::string config, out_path;
  auto* build = app.add_subcommand("build", "Build a series from a config and write an archive");
  build->add_option("--config", config, "JSON config")->required();
  build->add_option("--out", out_path, "archive to write")->required();

  std::string archive;
  std::optional<int> grid;
  auto* verify = app.add_subcommand("verify", "Re-check every certificate in an archive");
  verify->add_option("archive", archive)->required();
  verify->add_option("--grid", grid, "mesh points per axis (default: the config's grid)");

  ExtractRequest req;
  std::optional<int> assert_k;
  auto* extract = app.add_subcommand("extract", "Common index sequence for a target g");
  extract->add_option("archive", archive)->required();
  extract->add_option("--g", req.g, "coefficients, lowest degree first: a JSON array or comma-separated reals")
      ->required();
  extract->add_option("--horizon", req.horizon, "largest level n")->required();
  extract->add_option("--assert-k", assert_k, "skip the distance certificate and use this target index");
  extract->add_option("--assert-distance", req.assert_distance, "asserted sup |g - p_k| on D(0, n)");

  std::string z;
  auto* eval = app.add_subcommand("eval", "Evaluate the archived series");
  eval->add_option("archive", archive)->required();
  eval->add_option("--z", z, "re,im")->required();

  std::string disc;
  int n = 0;
  auto* grid_cmd = app.add_subcommand("export-grid", "Write f over the bounding square of a disc as CSV");
  grid_cmd->add_option("archive", archive)->required();
  grid_cmd->add_option("--disc", disc, "cx,cy,r")->required();
  grid_cmd->add_option("--n", n, "points per axis")->required();
  grid_cmd->add_option("--out", out_path, "CSV to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (*build) return cmd_build(config, out_path, std::cout, std::cerr);
  if (*verify) return cmd_verify(archive, grid, std::cout, std::cerr);
  if (*extract) {
    req.assert_k = assert_k;
    return cmd_extract(archive, req, std::cout, std::cerr);
  }
  if (*eval) return cmd_eval(archive, z, std::cout, std::cerr);
  return cmd_export_grid(archive, disc, n, out_path, std::cout, std::cerr);
}
