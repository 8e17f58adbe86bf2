#include <doctest.h>

#include <sstream>

#include "gridcx/analysis.hpp"

using namespace gridcx;

TEST_SUITE("analysis") {

TEST_CASE("binomials: values, symmetry, and a thirty-digit coefficient") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(9, 2) == 36);
  CHECK(binomial(9, 7) == 36);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(100, 50).str() == "100891344545564193334812497256");
}

TEST_CASE("the hundred-cell fifty-agent count reads as 1.008e29") {
  const BigInt count = state_count(100, 50, 0);
  const std::string digits = count.str();
  CHECK(digits.size() == 30);
  CHECK(digits.substr(0, 4) == "1008");
}

TEST_CASE("state counts multiply agent and object placements") {
  CHECK(state_count(9, 2, 0) == 36);
  CHECK(state_count(9, 1, 1) == 72);
  CHECK(state_count(6, 2, 2) == 90);
  CHECK(state_count(4, 4, 0) == 1);
  CHECK_THROWS_AS(state_count(4, 3, 2), std::invalid_argument);
}

TEST_CASE("half-up rounding for percentages and hundredths") {
  CHECK(round_percent(26, 36) == 72);   // 72.22 down
  CHECK(round_percent(28, 36) == 78);   // 77.77 up
  CHECK(round_percent(1, 8) == 13);     // 12.5 exactly half goes up
  CHECK(round_percent(6, 6) == 100);
  CHECK(round_percent(0, 5) == 0);
  CHECK(round_hundredths(32, 36) == 89);  // 0.888...
  CHECK(round_hundredths(18, 36) == 50);
  CHECK(round_hundredths(16, 84) == 19);
  CHECK(round_hundredths(1, 200) == 1);   // 0.005 rounds up to 0.01
  CHECK_THROWS_AS(round_percent(1, 0), std::invalid_argument);
}

TEST_CASE("mean text trims trailing zeros") {
  StatsRow row;
  row.fail_mean_hundredths = 0;
  CHECK(row.mean_text() == "0");
  row.fail_mean_hundredths = 50;
  CHECK(row.mean_text() == "0.5");
  row.fail_mean_hundredths = 89;
  CHECK(row.mean_text() == "0.89");
  row.fail_mean_hundredths = 219;
  CHECK(row.mean_text() == "2.19");
  row.fail_mean_hundredths = 200;
  CHECK(row.mean_text() == "2");
  row.fail_mean_hundredths = 5;
  CHECK(row.mean_text() == "0.05");
}

TEST_CASE("agent placement fills the first open cells") {
  const Parsed parsed = parse_grid("#..\n...\n");
  const State s = place_agents(parsed.grid, 2);
  CHECK(s.key() == "AA...");
  CHECK_THROWS_AS(place_agents(parsed.grid, 6), std::invalid_argument);
}

TEST_CASE("census row for the empty and full 3x3 room") {
  const Gridworld g = make_room(3, 3);
  const StatsRow empty = table_row(g, 0);
  CHECK(empty.states == 1);
  CHECK(empty.pct_npc == 100);
  CHECK(empty.csv() == "0,1,100,0,0,0,0,0");
  const StatsRow full = table_row(g, 9);
  CHECK(full.states == 1);
  CHECK(full.dances == 0);
  CHECK(full.commuting_moves == 0);
  CHECK(full.csv() == "9,1,100,0,0,0,0,0");
}

TEST_CASE("3x3 dance and commuting columns follow the closed forms") {
  // In the open 3x3 room a dance square needs one agent in a fixed 2x2
  // block (4 blocks) and the other k-1 agents in the remaining 5 cells;
  // commuting squares pick one of 44 admissible generator pairs, with the
  // remaining k-2 agents over 5 free cells.  Both derived independently of
  // the library's assembly.
  const Gridworld g = make_room(3, 3);
  for (int k = 0; k <= 9; ++k) {
    const StatsRow row = table_row(g, k);
    const BigInt dances = 4 * binomial(5, static_cast<unsigned>(k - 1));
    const BigInt commuting = 44 * binomial(5, static_cast<unsigned>(k - 2));
    CAPTURE(k);
    CHECK(BigInt(row.dances) == (k >= 1 ? dances : 0));
    CHECK(BigInt(row.commuting_moves) == (k >= 2 ? commuting : 0));
    CHECK(BigInt(row.states) == binomial(9, static_cast<unsigned>(k)));
  }
}

TEST_CASE("six-agent 3x3 census row") {
  const StatsRow row = table_row(make_room(3, 3), 6);
  CHECK(row.csv() == "6,84,86,4,220,16,0.19,2");
}

TEST_CASE("census aggregates are placement-independent") {
  const Gridworld g = make_room(3, 3);
  const StatsRow canonical = table_row(g, 2);
  // Recompute from a different (still reachable) starting placement.
  const Parsed parsed = parse_grid("...\n.A.\n..A\n");
  const StateGraph sg = explore(parsed.grid, parsed.state);
  CHECK(static_cast<std::size_t>(sg.vertex_count()) == canonical.states);
  const StateComplex cx = build_complex(sg, 4, true);
  CHECK(cx.dance_square_count() == canonical.dances);
  CHECK(cx.commuting_square_count() == canonical.commuting_moves);
  std::size_t total = 0;
  for (int v = 0; v < sg.vertex_count(); ++v) {
    total += check_link(build_link(cx, v)).failure_count;
  }
  CHECK(total == canonical.fail_total);
}

TEST_CASE("label inversion: 3x3 symmetry profile") {
  const SymmetryReport report = symmetry_report(make_room(3, 3));
  CHECK(report.cells == 9);
  CHECK(report.states_symmetric);
  CHECK(report.commuting_symmetric);
  CHECK(report.dances_shifted_symmetric);
  CHECK(report.inversion_isomorphism);
  // Dances need a free square, so failures concentrate at low densities.
  CHECK_FALSE(report.failures_symmetric);
  CHECK(report.rows[2].dances == 20);
  CHECK(report.rows[7].dances == 0);
  CHECK(report.rows[2].commuting_moves == report.rows[7].commuting_moves);
  CHECK(report.rows[2].fail_total > 0);
  CHECK(report.rows[7].fail_total == 0);
}

TEST_CASE("label inversion on a walled board") {
  const Parsed parsed = parse_grid(".#.\n...\n");
  const SymmetryReport report = symmetry_report(parsed.grid);
  CHECK(report.states_symmetric);
  CHECK(report.commuting_symmetric);
  CHECK(report.inversion_isomorphism);
}

}  // TEST_SUITE
