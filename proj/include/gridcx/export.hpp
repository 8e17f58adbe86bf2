#pragma once

#include <string>
#include <vector>

#include "gridcx/analysis.hpp"
#include "gridcx/links.hpp"

namespace gridcx {

/**
 * Everything one run produces: the complex (which owns the state graph),
 * the per-state defect reports, and optional census rows.  The gridworld is
 * echoed through the text of the exploration root (vertex 0).
 */
struct ExportBundle {
  StateComplex complex;
  std::vector<DefectReport> defects;
  std::vector<StatsRow> stats;
};

/** Builds the bundle for a complex, running the flag check at every state. */
ExportBundle make_bundle(StateComplex cx);

/**
 * Deterministic JSON with format_version 1.  Vertices are listed by id and
 * all cross-references (edges, squares, cubes, defects) use those ids, so a
 * bundle is self-contained and round-trips byte-identically.
 */
std::string bundle_to_json(const ExportBundle& bundle);

/** Inverse of bundle_to_json; throws std::invalid_argument on bad input. */
ExportBundle bundle_from_json(const std::string& text);

/**
 * Graphviz export of the state graph (undirected).  Nodes are the canonical
 * state keys; with color_by_generator, move edges are maroon and push/pull
 * edges orange.
 */
std::string dot_export(const StateGraph& sg, bool color_by_generator = false);

std::string csv_header();
std::string csv_row(const StatsRow& row);

}  // namespace gridcx
