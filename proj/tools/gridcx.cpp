#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "gridcx/cli.hpp"

namespace {

bool parse_range(const std::string& text, int& lo, int& hi) {
  try {
    const auto pos = text.find("..");
    if (pos == std::string::npos) {
      lo = hi = std::stoi(text);
      return true;
    }
    lo = std::stoi(text.substr(0, pos));
    hi = std::stoi(text.substr(pos + 2));
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

bool parse_room(const std::string& text, int& width, int& height) {
  try {
    const auto pos = text.find('x');
    if (pos == std::string::npos) {
      return false;
    }
    width = std::stoi(text.substr(0, pos));
    height = std::stoi(text.substr(pos + 1));
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gridworld state complexes: exploration, link checks, planning"};
  app.require_subcommand(1);

  gridcx::BuildOptions build;
  CLI::App* build_cmd =
      app.add_subcommand("build", "explore a gridworld and export its complex as JSON");
  build_cmd->add_option("grid", build.grid_file, "gridworld text file")->required();
  build_cmd->add_option("--max-cube-dim", build.max_cube_dim,
                        "largest cube dimension to assemble (default 4)");
  build_cmd->add_option("--budget", build.budget,
                        "state/cube budget (default GRIDCX_BUDGET or built-in)");
  build_cmd->add_option("--out", build.out_path, "output file (default stdout)");
  build_cmd->add_flag("--original", build.original,
                      "assemble the original complex (no dance squares)");

  gridcx::TableOptions table;
  std::string room_text = "3x3";
  std::string agents_text;
  CLI::App* table_cmd =
      app.add_subcommand("table", "emit the census CSV for a rectangular room");
  table_cmd->add_option("--room", room_text, "room size WxH (default 3x3)");
  table_cmd->add_option("--agents", agents_text,
                        "agent count or range lo..hi (default 0..cells)");
  table_cmd->add_option("--budget", table.budget, "per-row state budget");
  table_cmd->add_option("--out", table.out_path, "output file (default stdout)");

  gridcx::CheckLinksOptions check;
  CLI::App* check_cmd = app.add_subcommand(
      "check-links", "run the flag condition at every reachable state");
  check_cmd->add_option("grid", check.grid_file, "gridworld text file")->required();
  check_cmd->add_flag("--audit", check.audit, "extend the check to dimensions 4-5");
  check_cmd->add_option("--budget", check.budget, "state budget");

  gridcx::PatternScanOptions scan;
  CLI::App* scan_cmd = app.add_subcommand(
      "pattern-scan", "list knight/bishop placements in the given state");
  scan_cmd->add_option("grid", scan.grid_file, "gridworld text file")->required();

  gridcx::PathOptions path;
  CLI::App* path_cmd =
      app.add_subcommand("path", "shortest generator sequence between two states");
  path_cmd->add_option("grid", path.grid_file, "gridworld text file")->required();
  path_cmd->add_option("--from", path.from_key,
                       "start state key (default: the parsed state)");
  path_cmd->add_option("--to", path.to_key, "target state key")->required();
  path_cmd->add_option("--budget", path.budget, "state budget");

  gridcx::ExportDotOptions dot;
  CLI::App* dot_cmd =
      app.add_subcommand("export-dot", "render a bundle's state graph as Graphviz");
  dot_cmd->add_option("bundle", dot.bundle_file, "bundle JSON file")->required();
  dot_cmd->add_flag("--color-by-generator", dot.color_by_generator,
                    "maroon moves, orange push/pulls");
  dot_cmd->add_option("--out", dot.out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return gridcx::kExitUsage;
  }

  if (build_cmd->parsed()) {
    return gridcx::cmd_build(build, std::cout, std::cerr);
  }
  if (table_cmd->parsed()) {
    if (!parse_room(room_text, table.width, table.height)) {
      std::cerr << "bad --room value \"" << room_text << "\" (expected WxH)\n";
      return gridcx::kExitUsage;
    }
    if (!agents_text.empty() &&
        !parse_range(agents_text, table.agents_from, table.agents_to)) {
      std::cerr << "bad --agents value \"" << agents_text
                << "\" (expected k or lo..hi)\n";
      return gridcx::kExitUsage;
    }
    return gridcx::cmd_table(table, std::cout, std::cerr);
  }
  if (check_cmd->parsed()) {
    return gridcx::cmd_check_links(check, std::cout, std::cerr);
  }
  if (scan_cmd->parsed()) {
    return gridcx::cmd_pattern_scan(scan, std::cout, std::cerr);
  }
  if (path_cmd->parsed()) {
    return gridcx::cmd_path(path, std::cout, std::cerr);
  }
  if (dot_cmd->parsed()) {
    return gridcx::cmd_export_dot(dot, std::cout, std::cerr);
  }
  return gridcx::kExitUsage;
}
