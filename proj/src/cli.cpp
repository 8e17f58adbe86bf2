#include "gridcx/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace gridcx {

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return std::nullopt;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int write_output(const std::string& text, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
  if (out_path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    err << "cannot write file: " << out_path << "\n";
    return kExitError;
  }
  file << text;
  return file ? kExitOk : kExitError;
}

int report_parse_error(const ParseError& e, std::ostream& err) {
  err << e.what() << "\n";
  return kExitParse;
}

int report_budget_error(const BudgetExceeded& e, std::ostream& err) {
  err << e.what() << "\n";
  return kExitBudget;
}

std::optional<Parsed> load_grid(const std::string& path, std::ostream& err,
                                int& code) {
  const auto text = read_file(path);
  if (!text) {
    err << "cannot read file: " << path << "\n";
    code = kExitError;
    return std::nullopt;
  }
  try {
    return parse_grid(*text);
  } catch (const ParseError& e) {
    code = report_parse_error(e, err);
    return std::nullopt;
  }
}

}  // namespace

std::size_t effective_budget(std::size_t requested) {
  if (requested != 0) {
    return requested;
  }
  if (const char* env = std::getenv("GRIDCX_BUDGET"); env != nullptr) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      return static_cast<std::size_t>(value);
    }
  }
  return kDefaultBudget;
}

int cmd_build(const BuildOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.max_cube_dim < 2) {
    err << "--max-cube-dim must be at least 2\n";
    return kExitUsage;
  }
  int code = kExitOk;
  const auto parsed = load_grid(opts.grid_file, err, code);
  if (!parsed) {
    return code;
  }
  const std::size_t budget = effective_budget(opts.budget);
  try {
    StateGraph sg = explore(parsed->grid, parsed->state, budget);
    StateComplex cx =
        build_complex(sg, opts.max_cube_dim, !opts.original, budget);
    ExportBundle bundle{std::move(cx), {}, {}};
    if (opts.max_cube_dim >= 4) {
      bundle = make_bundle(std::move(bundle.complex));
    }
    return write_output(bundle_to_json(bundle), opts.out_path, out, err);
  } catch (const BudgetExceeded& e) {
    return report_budget_error(e, err);
  }
}

int cmd_table(const TableOptions& opts, std::ostream& out, std::ostream& err) {
  if (opts.width < 1 || opts.height < 1) {
    err << "room dimensions must be positive\n";
    return kExitUsage;
  }
  const int cells = opts.width * opts.height;
  const int hi = opts.agents_to < 0 ? cells : opts.agents_to;
  if (opts.agents_from < 0 || hi < opts.agents_from || hi > cells) {
    err << "bad agent range " << opts.agents_from << ".." << hi
        << " (expected 0 <= from <= to <= " << cells << ")\n";
    return kExitUsage;
  }

  const Gridworld room = make_room(opts.width, opts.height);
  const std::size_t budget = effective_budget(opts.budget);

  std::vector<std::future<std::string>> rows;
  for (int k = opts.agents_from; k <= hi; ++k) {
    rows.push_back(std::async(std::launch::async, [room, k, budget]() {
      try {
        return table_row(room, k, budget).csv();
      } catch (const BudgetExceeded&) {
        return std::to_string(k) + ",budget_exceeded,,,,,,";
      }
    }));
  }

  std::string text = csv_header() + "\n";
  for (auto& row : rows) {
    text += row.get();
    text += '\n';
  }
  return write_output(text, opts.out_path, out, err);
}

int cmd_check_links(const CheckLinksOptions& opts, std::ostream& out,
                    std::ostream& err) {
  int code = kExitOk;
  const auto parsed = load_grid(opts.grid_file, err, code);
  if (!parsed) {
    return code;
  }
  const std::size_t budget = effective_budget(opts.budget);
  try {
    const StateGraph sg = explore(parsed->grid, parsed->state, budget);
    const StateComplex cx =
        build_complex(sg, opts.audit ? 6 : 4, true, budget);
    std::size_t failing = 0;
    std::size_t total = 0;
    std::size_t limited = 0;
    std::size_t audit_extras = 0;
    std::ostringstream body;
    for (int v = 0; v < sg.vertex_count(); ++v) {
      const DefectReport report = check_link(build_link(cx, v), opts.audit);
      limited += report.dim3_limited ? 1 : 0;
      audit_extras += report.audit_empty_4 + report.audit_empty_5;
      if (report.npc) {
        continue;
      }
      ++failing;
      total += report.failure_count;
      body << "state " << v << " \"" << report.key << "\": "
           << report.failure_count << " failures (" << report.empty_two.size()
           << " empty 2-simplices, " << report.empty_three.size()
           << " empty 3-simplices)\n";
    }
    body << "checked " << sg.vertex_count() << " states: " << failing
         << " failing, " << total << " total failures\n";
    if (opts.audit) {
      body << "audit (dims 4-5): " << audit_extras << " extra defects\n";
    }
    if (limited > 0) {
      body << "note: " << limited
           << " states carry objects; coverage above dimension 3 is partial\n";
    }
    out << body.str();
    return kExitOk;
  } catch (const BudgetExceeded& e) {
    return report_budget_error(e, err);
  }
}

int cmd_pattern_scan(const PatternScanOptions& opts, std::ostream& out,
                     std::ostream& err) {
  int code = kExitOk;
  const auto parsed = load_grid(opts.grid_file, err, code);
  if (!parsed) {
    return code;
  }
  try {
    const auto hits = pattern_scan(parsed->grid, parsed->state);
    for (const PatternHit& hit : hits) {
      if (hit.kind == PatternKind::Knight) {
        out << "knight: dancer " << to_string(hit.dancer) << " square@"
            << to_string(hit.dance_anchor) << " mover " << to_string(hit.mover)
            << " conflict " << to_string(hit.conflict) << "\n";
      } else {
        out << "bishop: dancers " << to_string(hit.dancer) << ","
            << to_string(hit.second_dancer) << " squares@"
            << to_string(hit.dance_anchor) << ","
            << to_string(hit.second_anchor) << " conflict "
            << to_string(hit.conflict) << "\n";
      }
    }
    out << "hits: " << hits.size() << "\n";
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitError;
  }
}

int cmd_path(const PathOptions& opts, std::ostream& out, std::ostream& err) {
  int code = kExitOk;
  const auto parsed = load_grid(opts.grid_file, err, code);
  if (!parsed) {
    return code;
  }
  const std::size_t budget = effective_budget(opts.budget);
  try {
    const StateGraph sg = explore(parsed->grid, parsed->state, budget);
    const std::string from =
        opts.from_key.empty() ? parsed->state.key() : opts.from_key;
    const Path path = shortest_path(sg, from, opts.to_key);
    out << "length " << path.length() << "\n";
    out << path.keys.front() << "\n";
    for (std::size_t i = 0; i < path.generators.size(); ++i) {
      out << path.keys[i + 1] << " via " << describe(path.generators[i])
          << "\n";
    }
    return kExitOk;
  } catch (const BudgetExceeded& e) {
    return report_budget_error(e, err);
  } catch (const PlanError& e) {
    err << e.what() << "\n";
    return kExitError;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitError;
  }
}

int cmd_export_dot(const ExportDotOptions& opts, std::ostream& out,
                   std::ostream& err) {
  const auto text = read_file(opts.bundle_file);
  if (!text) {
    err << "cannot read file: " << opts.bundle_file << "\n";
    return kExitError;
  }
  try {
    const ExportBundle bundle = bundle_from_json(*text);
    return write_output(dot_export(bundle.complex.graph(), opts.color_by_generator),
                        opts.out_path, out, err);
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitParse;
  }
}

}  // namespace gridcx
