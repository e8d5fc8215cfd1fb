#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "viewcx/complex.hpp"
#include "viewcx/collapse.hpp"

namespace viewcx::cli {

enum class OutputFormat { summary, json, dot };

/// Settings shared by the subcommands. The cache directory comes from the
/// flag, else the VIEWCX_CACHE_DIR environment variable; empty disables
/// caching.
struct RunConfig {
  int n = 2;
  ComplexKind kind = ComplexKind::view;
  CollapseMode mode = CollapseMode::plain;
  CollapseTarget target = CollapseTarget::chromatic;
  std::int64_t budget = 50'000'000;
  int threads = 1;
  std::string cache_dir;
  std::string output_path;
  OutputFormat format = OutputFormat::summary;
  int stats_from = 1;
  bool hasse = false;
};

/// Exit codes: 0 success, 1 verification/validation failure, 2 resource
/// limit, 3 I/O failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitResource = 2;
inline constexpr int kExitIo = 3;

int cmd_build(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_collapse(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& sequence_file, const RunConfig& config, std::ostream& out,
               std::ostream& err);
int cmd_oracle(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_stats(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace viewcx::cli
