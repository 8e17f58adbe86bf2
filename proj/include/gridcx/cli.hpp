#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "gridcx/export.hpp"
#include "gridcx/pathsafe.hpp"

namespace gridcx {

inline constexpr int kExitOk = 0;
/** Runtime failures: unreadable files, unknown keys, semantic errors. */
inline constexpr int kExitError = 1;
/** Malformed gridworld text or bundle JSON. */
inline constexpr int kExitParse = 2;
/** State or cube budget exhausted. */
inline constexpr int kExitBudget = 3;
/** Bad command-line arguments. */
inline constexpr int kExitUsage = 64;

/**
 * Budget resolution: an explicit request wins, otherwise the GRIDCX_BUDGET
 * environment variable (when set to a positive integer), otherwise the
 * default exploration budget.
 */
std::size_t effective_budget(std::size_t requested);

struct BuildOptions {
  std::string grid_file;
  int max_cube_dim = 4;
  std::size_t budget = 0;
  std::string out_path;
  /** Disable dances: assemble the original complex instead. */
  bool original = false;
};
int cmd_build(const BuildOptions& opts, std::ostream& out, std::ostream& err);

struct TableOptions {
  int width = 3;
  int height = 3;
  int agents_from = 0;
  /** -1 selects the number of open cells. */
  int agents_to = -1;
  std::size_t budget = 0;
  std::string out_path;
};
int cmd_table(const TableOptions& opts, std::ostream& out, std::ostream& err);

struct CheckLinksOptions {
  std::string grid_file;
  bool audit = false;
  std::size_t budget = 0;
};
int cmd_check_links(const CheckLinksOptions& opts, std::ostream& out,
                    std::ostream& err);

struct PatternScanOptions {
  std::string grid_file;
};
int cmd_pattern_scan(const PatternScanOptions& opts, std::ostream& out,
                     std::ostream& err);

struct PathOptions {
  std::string grid_file;
  /** Empty selects the key of the parsed initial state. */
  std::string from_key;
  std::string to_key;
  std::size_t budget = 0;
};
int cmd_path(const PathOptions& opts, std::ostream& out, std::ostream& err);

struct ExportDotOptions {
  std::string bundle_file;
  bool color_by_generator = false;
  std::string out_path;
};
int cmd_export_dot(const ExportDotOptions& opts, std::ostream& out,
                   std::ostream& err);

}  // namespace gridcx
