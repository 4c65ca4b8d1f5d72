#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "simapprox/errors.hpp"

namespace simapprox {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitScanExhausted = 3,
  kExitCap = 4,
  kExitVerifyFailed = 5,
  kExitExtraction = 6,
  kExitIo = 7,
};

int exit_code_for(ErrorCode code);

int cmd_build(const std::string& config_path, const std::string& out_path, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& archive_path, std::optional<int> grid, std::ostream& out, std::ostream& err);

struct ExtractRequest {
  std::string g;  // coefficient text
  int horizon = 2;
  std::optional<int> assert_k;  // escape hatch: uncertified distance for a non-polynomial g
  double assert_distance = 0.0;
};
int cmd_extract(const std::string& archive_path, const ExtractRequest& request, std::ostream& out,
                std::ostream& err);
int cmd_eval(const std::string& archive_path, const std::string& z, std::ostream& out, std::ostream& err);
int cmd_export_grid(const std::string& archive_path, const std::string& disc, int n, const std::string& out_path,
                    std::ostream& out, std::ostream& err);

}  // namespace simapprox
