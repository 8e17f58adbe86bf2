#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gridcx/complex.hpp"

namespace gridcx {

/**
 * The link of a state: the directions available there.  One vertex per
 * admissible generator; one k-simplex per corner of each (k+1)-cube
 * incident to the state.  A dance witnessing such a cube contributes the
 * two constituent moves touching the agent's current corner.
 */
struct LinkComplex {
  int base = -1;
  std::string key;
  std::vector<Generator> vertices;
  /** simplices[d-1] holds the dimension-d simplices (sorted index lists). */
  std::vector<std::vector<std::vector<int>>> simplices;
  int cap = 0;

  const std::vector<std::vector<int>>& of_dim(int dim) const {
    return simplices.at(static_cast<size_t>(dim - 1));
  }

  bool has_simplex(const std::vector<int>& sorted_ids) const;
};

/**
 * Flag-condition verdict for one link: triangles of the 1-skeleton with no
 * filling 2-simplex, and quadruples with all four triangle faces filled but
 * no 3-simplex.  States with objects carry dim3_limited because the
 * sufficiency of checking dimensions 2-3 is only established for agent-only
 * boards; the audit fields extend the same test to dimensions 4-5.
 */
struct DefectReport {
  int vertex = -1;
  std::string key;
  std::vector<std::array<int, 3>> empty_two;
  std::vector<std::array<int, 4>> empty_three;
  std::size_t failure_count = 0;
  bool npc = true;
  bool dim3_limited = false;
  bool audited = false;
  std::size_t audit_empty_4 = 0;
  std::size_t audit_empty_5 = 0;
};

/** Requires a complex built with max_dim >= 4. */
LinkComplex build_link(const StateComplex& cx, int v);
LinkComplex build_link(const StateComplex& cx, const std::string& key);

/** Flag check over the link; audit extends it to dimensions 4-5. */
DefectReport check_link(const LinkComplex& lk, bool audit = false);

enum class PatternKind : std::uint8_t { Knight = 0, Bishop = 1 };

/**
 * A geometric witness for a link defect.  Knight: a dancing agent plus a
 * second agent one orthogonal step from the corner diagonally opposite the
 * dancer (the two agents differ by a knight move).  Bishop: two dancing
 * agents whose 2x2 squares overlap in exactly one cell, diagonally opposite
 * both (a 2-step bishop move apart).  Unused cells hold row/col -1.
 */
struct PatternHit {
  PatternKind kind = PatternKind::Knight;
  Cell dancer{-1, -1};
  Cell dance_anchor{-1, -1};
  Cell second_dancer{-1, -1};
  Cell second_anchor{-1, -1};
  Cell mover{-1, -1};
  Cell conflict{-1, -1};
  std::vector<Cell> cells;

  auto operator<=>(const PatternHit&) const = default;
};

/**
 * Scans one agent-only state for knight and bishop placements, deduplicated
 * by (kind, cell set).  Throws std::invalid_argument when objects appear.
 */
std::vector<PatternHit> pattern_scan(const Gridworld& g, const State& s);

struct CoverageOptions {
  bool audit = false;
  /** Check at most this many states (0 = all), sampled with the fixed seed. */
  std::size_t sample = 0;
  std::uint32_t seed = 24125;
  std::size_t budget = kDefaultBudget;
};

/** Cross-validation tallies for the defect/pattern equivalence sweep. */
struct CoverageReport {
  std::size_t states_checked = 0;
  std::size_t failing_states = 0;
  std::size_t pattern_states = 0;
  std::size_t failing_without_hit = 0;
  std::size_t hits_without_failing = 0;
  std::size_t total_failures = 0;
  std::size_t audit_extra_defects = 0;
  bool audited = false;
  /** Every flag-condition failure has a pattern witness. */
  bool direction_holds = true;
  /** Every pattern witness sits at a failing state (measured, not assumed). */
  bool converse_holds = true;
};

/**
 * Explores from s0, builds the complex (max_dim 6 when auditing, else 4),
 * and compares check_link against pattern_scan state by state.
 */
CoverageReport verify_coverage(const Gridworld& g, const State& s0,
                               const CoverageOptions& opts = {});

}  // namespace gridcx
