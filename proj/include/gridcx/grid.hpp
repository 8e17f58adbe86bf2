#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridcx {

/** Board position, zero-indexed from the top-left corner of the gridworld. */
struct Cell {
  int row = 0;
  int col = 0;

  auto operator<=>(const Cell&) const = default;
};

/** Renders a cell as "(row,col)". */
std::string to_string(const Cell& cell);

/** Raised when gridworld text is malformed; line and column are 1-indexed. */
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& message);

  int line() const noexcept { return line_; }
  int col() const noexcept { return col_; }

 private:
  int line_;
  int col_;
};

constexpr char kFloor = '.';
constexpr char kAgent = 'A';
constexpr char kObject = 'O';
constexpr char kWall = '#';

/**
 * Static geometry of a rectangular board: which cells are walls, adjacency
 * between open cells, and the ordered straight-line triples that push/pull
 * rearrangements act on.  Open cells receive dense indices in row-major
 * order; everything dynamic (the labelling) lives in State.
 */
class Gridworld {
 public:
  Gridworld(int width, int height, std::vector<std::uint8_t> walls);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }

  /** Number of open (non-wall) cells. */
  int cell_count() const noexcept { return static_cast<int>(cells_.size()); }

  /** Open cells in row-major order; positions match dense indices. */
  const std::vector<Cell>& cells() const noexcept { return cells_; }

  bool in_bounds(const Cell& cell) const noexcept;

  /** True for in-bounds, non-wall cells. */
  bool is_open(const Cell& cell) const noexcept;

  /** Dense row-major index of an open cell, or -1 if closed or out of bounds. */
  int index_of(const Cell& cell) const noexcept;

  const Cell& cell_at(int index) const { return cells_.at(index); }

  /** Dense indices of the orthogonally adjacent open cells. */
  const std::vector<int>& neighbors(int index) const {
    return neighbors_.at(index);
  }

  /**
   * Ordered runs of three consecutive open cells along a row or column.
   * Every run contributes both orientations, so a triple and its reverse are
   * distinct entries.
   */
  const std::vector<std::array<Cell, 3>>& collinear_triples() const noexcept {
    return triples_;
  }

  bool operator==(const Gridworld&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> walls_;
  std::vector<int> cell_index_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::array<Cell, 3>> triples_;
};

/**
 * A labelling of the open cells of a gridworld with agents, objects, and
 * floor.  Stored as a row-major string over open cells, which doubles as the
 * canonical state key used by exploration and export.
 */
class State {
 public:
  State() = default;

  /** Takes the row-major label string; rejects anything but '.', 'A', 'O'. */
  explicit State(std::string labels);

  const std::string& key() const noexcept { return labels_; }

  int size() const noexcept { return static_cast<int>(labels_.size()); }

  char at(int index) const { return labels_.at(static_cast<size_t>(index)); }

  void set(int index, char label);

  auto operator<=>(const State&) const = default;

 private:
  std::string labels_;
};

struct Parsed {
  Gridworld grid;
  State state;
};

/** Parses gridworld text ('.', 'A', 'O', '#') into geometry plus labelling. */
Parsed parse_grid(const std::string& text);

/** Renders the labelling back to rectangular text, walls included. */
std::string serialize(const Gridworld& grid, const State& state);

/** All-floor rectangular board; throws std::invalid_argument on empty sizes. */
Gridworld make_room(int width, int height);

int agent_count(const State& state);
int object_count(const State& state);

}  // namespace gridcx
