#include "gridcx/grid.hpp"

#include <algorithm>

namespace gridcx {

std::string to_string(const Cell& cell) {
  return "(" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ")";
}

ParseError::ParseError(int line, int col, const std::string& message)
    : std::runtime_error("parse error at line " + std::to_string(line) +
                         ", column " + std::to_string(col) + ": " + message),
      line_(line),
      col_(col) {}

Gridworld::Gridworld(int width, int height, std::vector<std::uint8_t> walls)
    : width_(width), height_(height), walls_(std::move(walls)) {
  if (width_ <= 0 || height_ <= 0) {
    throw std::invalid_argument("gridworld dimensions must be positive");
  }
  if (walls_.size() != static_cast<size_t>(width_) * static_cast<size_t>(height_)) {
    throw std::invalid_argument("wall mask size does not match dimensions");
  }

  cell_index_.assign(walls_.size(), -1);
  for (int r = 0; r < height_; ++r) {
    for (int c = 0; c < width_; ++c) {
      const size_t flat = static_cast<size_t>(r) * width_ + c;
      if (!walls_[flat]) {
        cell_index_[flat] = static_cast<int>(cells_.size());
        cells_.push_back(Cell{r, c});
      }
    }
  }

  neighbors_.resize(cells_.size());
  static constexpr int kSteps[4][2] = {{-1, 0}, {0, -1}, {0, 1}, {1, 0}};
  for (size_t i = 0; i < cells_.size(); ++i) {
    for (const auto& step : kSteps) {
      const Cell next{cells_[i].row + step[0], cells_[i].col + step[1]};
      const int j = index_of(next);
      if (j >= 0) {
        neighbors_[i].push_back(j);
      }
    }
  }

  for (int r = 0; r < height_; ++r) {
    for (int c = 0; c + 2 < width_; ++c) {
      const Cell a{r, c}, b{r, c + 1}, d{r, c + 2};
      if (is_open(a) && is_open(b) && is_open(d)) {
        triples_.push_back({a, b, d});
        triples_.push_back({d, b, a});
      }
    }
  }
  for (int r = 0; r + 2 < height_; ++r) {
    for (int c = 0; c < width_; ++c) {
      const Cell a{r, c}, b{r + 1, c}, d{r + 2, c};
      if (is_open(a) && is_open(b) && is_open(d)) {
        triples_.push_back({a, b, d});
        triples_.push_back({d, b, a});
      }
    }
  }
}

bool Gridworld::in_bounds(const Cell& cell) const noexcept {
  return cell.row >= 0 && cell.row < height_ && cell.col >= 0 &&
         cell.col < width_;
}

bool Gridworld::is_open(const Cell& cell) const noexcept {
  return in_bounds(cell) &&
         !walls_[static_cast<size_t>(cell.row) * width_ + cell.col];
}

int Gridworld::index_of(const Cell& cell) const noexcept {
  if (!in_bounds(cell)) {
    return -1;
  }
  return cell_index_[static_cast<size_t>(cell.row) * width_ + cell.col];
}

State::State(std::string labels) : labels_(std::move(labels)) {
  for (size_t i = 0; i < labels_.size(); ++i) {
    const char ch = labels_[i];
    if (ch != kFloor && ch != kAgent && ch != kObject) {
      throw std::invalid_argument(std::string("invalid state label '") + ch +
                                  "' at offset " + std::to_string(i));
    }
  }
}

void State::set(int index, char label) {
  if (label != kFloor && label != kAgent && label != kObject) {
    throw std::invalid_argument(std::string("invalid state label '") + label +
                                "'");
  }
  labels_.at(static_cast<size_t>(index)) = label;
}

Parsed parse_grid(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (const char ch : text) {
    if (ch == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) {
    lines.push_back(current);
  }
  if (lines.empty()) {
    throw ParseError(1, 1, "empty gridworld text");
  }

  const size_t width = lines.front().size();
  if (width == 0) {
    throw ParseError(1, 1, "empty gridworld row");
  }
  for (size_t r = 0; r < lines.size(); ++r) {
    if (lines[r].size() != width) {
      const size_t col = std::min(lines[r].size(), width) + 1;
      throw ParseError(static_cast<int>(r + 1), static_cast<int>(col),
                       "inconsistent row length");
    }
  }

  std::vector<std::uint8_t> walls(width * lines.size(), 0);
  std::string labels;
  for (size_t r = 0; r < lines.size(); ++r) {
    for (size_t c = 0; c < width; ++c) {
      const char ch = lines[r][c];
      switch (ch) {
        case kWall:
          walls[r * width + c] = 1;
          break;
        case kFloor:
        case kAgent:
        case kObject:
          labels.push_back(ch);
          break;
        default:
          throw ParseError(static_cast<int>(r + 1), static_cast<int>(c + 1),
                           std::string("invalid character '") + ch + "'");
      }
    }
  }
  if (labels.empty()) {
    throw ParseError(1, 1, "gridworld has no open cells");
  }

  Gridworld grid(static_cast<int>(width), static_cast<int>(lines.size()),
                 std::move(walls));
  return Parsed{std::move(grid), State(std::move(labels))};
}

std::string serialize(const Gridworld& grid, const State& state) {
  if (state.size() != grid.cell_count()) {
    throw std::invalid_argument("state size does not match gridworld");
  }
  std::string out;
  out.reserve(static_cast<size_t>(grid.height()) * (grid.width() + 1));
  for (int r = 0; r < grid.height(); ++r) {
    for (int c = 0; c < grid.width(); ++c) {
      const int idx = grid.index_of(Cell{r, c});
      out.push_back(idx < 0 ? kWall : state.at(idx));
    }
    out.push_back('\n');
  }
  return out;
}

Gridworld make_room(int width, int height) {
  if (width <= 0 || height <= 0) {
    throw std::invalid_argument("room dimensions must be positive");
  }
  return Gridworld(width, height,
                   std::vector<std::uint8_t>(
                       static_cast<size_t>(width) * static_cast<size_t>(height), 0));
}

int agent_count(const State& state) {
  return static_cast<int>(
      std::count(state.key().begin(), state.key().end(), kAgent));
}

int object_count(const State& state) {
  return static_cast<int>(
      std::count(state.key().begin(), state.key().end(), kObject));
}

}  // namespace gridcx
