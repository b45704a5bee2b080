#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tesserae::cli {

enum class Format { kText, kJson };

struct RunConfig {
  std::string command;
  std::string tiles;
  int width = 4;
  int length = 12;
  std::size_t grid = 1024;
  std::string beta = "ln2/2";
  Format format = Format::kText;
  bool dot = false;
  std::size_t max_cells = 64;  // oracle cap, from TESSERAE_MAX_CELLS
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBadTiles = 2;
inline constexpr int kExitNoTilings = 3;

const std::vector<std::string>& commands();

// Parses argv into a config. On --help or a usage error, returns nullopt and
// sets exit_code (0 or 1) after writing the message to out/err.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code);

// Runs one command and writes its report to out; errors go to err.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace tesserae::cli
