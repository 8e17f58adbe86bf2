#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "gridcx/complex.hpp"

using namespace gridcx;

namespace {

StateComplex complex_for(const std::string& text, int max_dim = 4,
                         bool with_dances = true) {
  const Parsed parsed = parse_grid(text);
  const StateGraph sg = explore(parsed.grid, parsed.state);
  return build_complex(sg, max_dim, with_dances);
}

std::map<std::pair<int, int>, std::size_t> cube_census(const StateComplex& cx) {
  std::map<std::pair<int, int>, std::size_t> census;  // (l, m) -> count
  for (const Cube& cube : cx.cubes()) {
    ++census[{cube.l, cube.m}];
  }
  return census;
}

}  // namespace

TEST_SUITE("complex") {

TEST_CASE("2x2 with two agents: six 4-cycles, two commuting squares") {
  const Parsed parsed = parse_grid("AA\n..\n");
  const StateGraph sg = explore(parsed.grid, parsed.state);
  const SquareScan scan = scan_squares(sg);
  CHECK(scan.four_cycles == 6);
  REQUIRE(scan.squares.size() == 2);
  for (const Square& sq : scan.squares) {
    CHECK(sq.kind == SquareKind::Commuting);
    CHECK(disjoint_support(PlanItem{sq.gen_a}, PlanItem{sq.gen_b}));
    // Opposite sides of a commuting square use the same two moves.
    const std::set<Cell> support_a(sq.gen_a.cells.begin(),
                                   sq.gen_a.cells.begin() + 2);
    CHECK(support_a.size() == 2);
  }
  const StateComplex cx = build_complex(sg, 4, true);
  CHECK(cx.dance_square_count() == 0);
  CHECK(cx.commuting_square_count() == 2);
  CHECK(cx.cubes().size() == 2);
}

TEST_CASE("2x2 with one agent: a single dance square, none without dances") {
  const Parsed parsed = parse_grid("A.\n..\n");
  const StateGraph sg = explore(parsed.grid, parsed.state);
  CHECK(count_four_cycles(sg) == 1);

  const StateComplex modified = build_complex(sg, 4, true);
  CHECK(modified.dance_square_count() == 1);
  CHECK(modified.commuting_square_count() == 0);
  REQUIRE(modified.cubes().size() == 1);
  CHECK(modified.cubes()[0].dim == 2);
  CHECK(modified.cubes()[0].m == 1);
  CHECK(modified.cubes()[0].vertices.size() == 4);

  const StateComplex original = original_complex(sg);
  CHECK(original.squares().empty());
  CHECK(original.cubes().empty());
  CHECK_FALSE(original.dances_enabled());
}

TEST_CASE("3x3 with two agents matches the square census") {
  const StateComplex cx = complex_for("AA.\n...\n...\n");
  CHECK(cx.dance_square_count() == 20);
  CHECK(cx.commuting_square_count() == 44);
}

TEST_CASE("square cycles are genuine and canonically oriented") {
  const StateComplex cx = complex_for("AA.\n...\n...\n");
  const StateGraph& sg = cx.graph();
  std::set<std::pair<int, int>> adjacent;
  for (const Edge& e : sg.edges()) {
    adjacent.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  for (const Square& sq : cx.squares()) {
    const auto& cy = sq.cycle;
    CHECK(std::set<int>(cy.begin(), cy.end()).size() == 4);
    CHECK(cy[0] == *std::min_element(cy.begin(), cy.end()));
    CHECK(cy[1] < cy[3]);  // smaller neighbor first
    for (int i = 0; i < 4; ++i) {
      const int a = cy[static_cast<size_t>(i)];
      const int b = cy[static_cast<size_t>((i + 1) % 4)];
      CHECK(adjacent.count({std::min(a, b), std::max(a, b)}) == 1);
    }
  }
}

TEST_CASE("dance square count equals admissible dance placements over four") {
  // Each dance square is discovered once per circuit of four states.
  for (const char* text : {"A..\n...\n...\n", "AA.\n...\n...\n", "AAA\n...\n...\n"}) {
    const Parsed parsed = parse_grid(text);
    const StateGraph sg = explore(parsed.grid, parsed.state);
    std::size_t placements = 0;
    for (int v = 0; v < sg.vertex_count(); ++v) {
      placements += enumerate_dances(sg.grid(), sg.state_of(v)).size();
    }
    const StateComplex cx = build_complex(sg, 4, true);
    CHECK(cx.dance_square_count() * 4 == placements);
  }
}

TEST_CASE("a dance and a disjoint move assemble a 3-cube") {
  const StateComplex cx = complex_for("A..A\n....\n");
  const auto census = cube_census(cx);
  REQUIRE(census.count({1, 1}) == 1);
  const auto it = std::find_if(cx.cubes().begin(), cx.cubes().end(),
                               [](const Cube& c) { return c.l == 1 && c.m == 1; });
  REQUIRE(it != cx.cubes().end());
  CHECK(it->dim == 3);
  CHECK(it->vertices.size() == 8);
  CHECK(std::is_sorted(it->vertices.begin(), it->vertices.end()));
  CHECK(it->base == it->vertices.front());
}

TEST_CASE("two disjoint dances assemble a 4-cube of sixteen states") {
  const StateComplex cx = complex_for("A.A.\n....\n");
  const auto census = cube_census(cx);
  REQUIRE(census.count({0, 2}) >= 1);
  for (const Cube& cube : cx.cubes()) {
    if (cube.m == 2) {
      CHECK(cube.dim == 4);
      CHECK(cube.l == 0);
      CHECK(cube.vertices.size() == 16);
    }
  }
}

TEST_CASE("max_dim caps assembly") {
  const StateComplex capped = complex_for("A.A.\n....\n", 3);
  for (const Cube& cube : capped.cubes()) {
    CHECK(cube.dim <= 3);
  }
  CHECK(cube_census(capped).count({0, 2}) == 0);
}

TEST_CASE("invariants hold across representative systems") {
  for (const char* text : {"AA\n..\n", "A..\n..A\n", "AA.\n...\n...\n",
                           "A..A\n....\n", "AO...\n", "AO...\n....A\n"}) {
    const StateComplex cx = complex_for(text);
    CHECK(check_complex_invariants(cx).empty());
    CHECK(cx.anomalies().empty());
  }
}

TEST_CASE("squares with push/pull witnesses occur and validate") {
  const StateComplex cx = complex_for("AO...\n....A\n");
  bool pushpull_square = false;
  for (const Square& sq : cx.squares()) {
    if (sq.kind == SquareKind::Commuting &&
        (sq.gen_a.kind == GenKind::PushPull || sq.gen_b.kind == GenKind::PushPull)) {
      pushpull_square = true;
    }
  }
  CHECK(pushpull_square);
}

TEST_CASE("a lone corridor system has no squares at all") {
  const StateComplex cx = complex_for("AO..\n");
  CHECK(cx.squares().empty());
  CHECK(cx.cubes().empty());
  CHECK(count_four_cycles(cx.graph()) == 0);
}

TEST_CASE("cube budget exhaustion throws") {
  const Parsed parsed = parse_grid("AA.\n...\n...\n");
  const StateGraph sg = explore(parsed.grid, parsed.state);
  CHECK_THROWS_AS(build_complex(sg, 4, true, 10), BudgetExceeded);
}

TEST_CASE("from_parts round-trips a complex") {
  const StateComplex cx = complex_for("A..\n..A\n");
  std::vector<std::string> keys = cx.graph().keys();
  std::vector<Edge> edges(cx.graph().edges().begin(), cx.graph().edges().end());
  StateGraph sg = StateGraph::from_parts(cx.graph().grid(), keys, edges);
  std::vector<Square> squares(cx.squares().begin(), cx.squares().end());
  std::vector<Cube> cubes(cx.cubes().begin(), cx.cubes().end());
  const StateComplex copy = StateComplex::from_parts(
      std::move(sg), cx.max_dim(), cx.dances_enabled(), squares, cubes);
  CHECK(copy.cubes().size() == cx.cubes().size());
  CHECK(copy.dance_square_count() == cx.dance_square_count());
  CHECK(check_complex_invariants(copy).empty());
}

}  // TEST_SUITE
