#include <doctest.h>

#include <algorithm>

#include "gridcx/grid.hpp"

using namespace gridcx;

TEST_SUITE("grid") {

TEST_CASE("parses a one-row board") {
  const Parsed parsed = parse_grid("A.\n");
  CHECK(parsed.grid.width() == 2);
  CHECK(parsed.grid.height() == 1);
  CHECK(parsed.grid.cell_count() == 2);
  CHECK(parsed.state.key() == "A.");
}

TEST_CASE("parses without a trailing newline") {
  const Parsed parsed = parse_grid("AO.");
  CHECK(parsed.grid.cell_count() == 3);
  CHECK(parsed.state.key() == "AO.");
}

TEST_CASE("open cells are indexed row-major, walls excluded") {
  const Parsed parsed = parse_grid("A#.\n..O\n");
  CHECK(parsed.grid.cell_count() == 5);
  CHECK(parsed.grid.index_of(Cell{0, 0}) == 0);
  CHECK(parsed.grid.index_of(Cell{0, 1}) == -1);  // wall
  CHECK(parsed.grid.index_of(Cell{0, 2}) == 1);
  CHECK(parsed.grid.index_of(Cell{1, 0}) == 2);
  CHECK(parsed.grid.index_of(Cell{1, 2}) == 4);
  CHECK(parsed.grid.is_open(Cell{0, 0}));
  CHECK_FALSE(parsed.grid.is_open(Cell{0, 1}));
  CHECK_FALSE(parsed.grid.is_open(Cell{2, 0}));  // out of bounds
  CHECK(parsed.state.key() == "A...O");
}

TEST_CASE("serialization round-trips boards with walls and objects") {
  const std::string text = "A#.\n..O\n";
  const Parsed parsed = parse_grid(text);
  CHECK(serialize(parsed.grid, parsed.state) == text);

  const std::string room = "...\n.A.\n..O\n";
  const Parsed parsed2 = parse_grid(room);
  CHECK(serialize(parsed2.grid, parsed2.state) == room);
}

TEST_CASE("rejects invalid characters with line and column") {
  try {
    parse_grid("..\n.X\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.col() == 2);
    CHECK(std::string(e.what()).find("invalid character 'X'") != std::string::npos);
  }
}

TEST_CASE("rejects ragged rows at the first offending position") {
  try {
    parse_grid("..\n...\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.col() == 3);
  }
}

TEST_CASE("rejects empty input and all-wall boards") {
  CHECK_THROWS_AS(parse_grid(""), ParseError);
  CHECK_THROWS_AS(parse_grid("\n"), ParseError);
  CHECK_THROWS_AS(parse_grid("##\n##\n"), ParseError);
}

TEST_CASE("neighbor lists follow north, west, east, south order") {
  const Gridworld g = make_room(3, 3);
  const int centre = g.index_of(Cell{1, 1});
  const auto& nbrs = g.neighbors(centre);
  REQUIRE(nbrs.size() == 4);
  CHECK(g.cell_at(nbrs[0]) == Cell{0, 1});
  CHECK(g.cell_at(nbrs[1]) == Cell{1, 0});
  CHECK(g.cell_at(nbrs[2]) == Cell{1, 2});
  CHECK(g.cell_at(nbrs[3]) == Cell{2, 1});
  CHECK(g.neighbors(g.index_of(Cell{0, 0})).size() == 2);
}

TEST_CASE("corridor ends have one neighbor") {
  const Gridworld g = make_room(5, 1);
  CHECK(g.neighbors(0).size() == 1);
  CHECK(g.neighbors(4).size() == 1);
}

TEST_CASE("neighbor relation is symmetric") {
  const Parsed parsed = parse_grid(".#.\n...\n.#.\n");
  const Gridworld& g = parsed.grid;
  for (int u = 0; u < g.cell_count(); ++u) {
    for (int v : g.neighbors(u)) {
      const auto& back = g.neighbors(v);
      CHECK(std::find(back.begin(), back.end(), u) != back.end());
    }
  }
}

TEST_CASE("collinear triple counts for small rooms") {
  CHECK(make_room(5, 1).collinear_triples().size() == 6);
  CHECK(make_room(2, 2).collinear_triples().size() == 0);
  CHECK(make_room(3, 3).collinear_triples().size() == 12);
}

TEST_CASE("collinear triples are straight runs of open cells") {
  const Parsed parsed = parse_grid("...\n.#.\n...\n");
  for (const auto& t : parsed.grid.collinear_triples()) {
    for (const Cell& cell : t) {
      CHECK(parsed.grid.is_open(cell));
    }
    const int row_step = t[1].row - t[0].row;
    const int col_step = t[1].col - t[0].col;
    CHECK(t[2].row - t[1].row == row_step);
    CHECK(t[2].col - t[1].col == col_step);
    CHECK(std::abs(row_step) + std::abs(col_step) == 1);
  }
  // The centre wall kills every run through the middle, leaving the border
  // rows and columns: four runs, each in both orientations.
  CHECK(parsed.grid.collinear_triples().size() == 8);
}

TEST_CASE("walls block triples behind and beyond a corridor pair") {
  CHECK(parse_grid("#AO#\n").grid.collinear_triples().size() == 0);
}

TEST_CASE("state rejects bad labels and bad sizes") {
  CHECK_THROWS_AS(State("AX"), std::invalid_argument);
  State s("A.");
  CHECK_THROWS_AS(s.set(0, 'x'), std::invalid_argument);
  s.set(0, kFloor);
  CHECK(s.key() == "..");
}

TEST_CASE("agent and object tallies") {
  const State s("AO.A.");
  CHECK(agent_count(s) == 2);
  CHECK(object_count(s) == 1);
}

TEST_CASE("make_room rejects non-positive dimensions") {
  CHECK_THROWS_AS(make_room(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_room(3, -1), std::invalid_argument);
}

}  // TEST_SUITE
