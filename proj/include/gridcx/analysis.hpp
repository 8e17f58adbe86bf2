#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <vector>

#include "gridcx/links.hpp"

namespace gridcx {

using BigInt = boost::multiprecision::cpp_int;

/** Exact binomial coefficient; zero when k > n. */
BigInt binomial(unsigned n, unsigned k);

/**
 * Number of labellings of `cells` open cells with `agents` agents and
 * `objects` objects: C(cells, agents) * C(cells - agents, objects).
 * Throws std::invalid_argument when agents + objects > cells.
 */
BigInt state_count(unsigned cells, unsigned agents, unsigned objects);

/** Round half up; both arguments must be positive. */
long long round_percent(std::size_t part, std::size_t whole);

/** Mean scaled by 100 and rounded half up to an integer. */
long long round_hundredths(std::size_t total, std::size_t count);

/** One census row: one agent count over a fixed room. */
struct StatsRow {
  int agents = 0;
  std::size_t states = 0;
  long long pct_npc = 0;
  std::size_t dances = 0;
  std::size_t commuting_moves = 0;
  std::size_t fail_total = 0;
  long long fail_mean_hundredths = 0;
  std::size_t fail_max = 0;

  /** Mean to two decimals with trailing zeros trimmed: "0", "0.5", "0.89". */
  std::string mean_text() const;
  std::string csv() const;
};

/** A state with agents on the first k open cells (row-major). */
State place_agents(const Gridworld& g, int k);

/**
 * Explores the k-agent system over g, builds the modified complex, runs the
 * flag check at every state, and aggregates the census row.
 */
StatsRow table_row(const Gridworld& g, int k, std::size_t budget = kDefaultBudget);

struct SymmetryRow {
  int agents = 0;
  std::size_t states = 0;
  std::size_t dances = 0;
  std::size_t commuting_moves = 0;
  std::size_t fail_total = 0;
};

/**
 * Inverting labels (agents <-> floors) maps k-agent states to (n-k)-agent
 * states and preserves moves, so those state graphs are isomorphic and have
 * equally many commuting squares.  Dances need a spare floor, so dance
 * counts pair up across a different axis (k <-> n-2-k) and failure totals
 * need not be symmetric at all.
 */
struct SymmetryReport {
  int cells = 0;
  std::vector<SymmetryRow> rows;
  bool states_symmetric = true;
  bool commuting_symmetric = true;
  bool dances_shifted_symmetric = true;
  bool failures_symmetric = true;
  bool inversion_isomorphism = true;
};

SymmetryReport symmetry_report(const Gridworld& g,
                               std::size_t budget = kDefaultBudget);

}  // namespace gridcx
