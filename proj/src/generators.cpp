#include "gridcx/generators.hpp"

#include <algorithm>
#include <utility>

namespace gridcx {

namespace {

bool orthogonally_adjacent(const Cell& a, const Cell& b) {
  const int dr = a.row - b.row;
  const int dc = a.col - b.col;
  return (dr == 0 && (dc == 1 || dc == -1)) ||
         (dc == 0 && (dr == 1 || dr == -1));
}

bool straight_consecutive(const Cell& a, const Cell& b, const Cell& c) {
  return orthogonally_adjacent(a, b) && b.row - a.row == c.row - b.row &&
         b.col - a.col == c.col - b.col;
}

}  // namespace

NotAdmissible::NotAdmissible(const Cell& cell, const std::string& message)
    : std::runtime_error(message + " at cell " + gridcx::to_string(cell)),
      cell_(cell) {}

Generator make_move(const Cell& a, const Cell& b) {
  if (a == b) {
    throw std::invalid_argument("move cells must be distinct");
  }
  Generator gen;
  gen.kind = GenKind::Move;
  gen.len = 2;
  gen.cells = {std::min(a, b), std::max(a, b), Cell{}};
  return gen;
}

Generator make_pushpull(const Cell& a, const Cell& b, const Cell& c) {
  if (a == b || b == c || a == c) {
    throw std::invalid_argument("push/pull cells must be distinct");
  }
  Generator gen;
  gen.kind = GenKind::PushPull;
  gen.len = 3;
  gen.cells = {a, b, c};
  return gen;
}

std::vector<Cell> support(const Generator& gen) {
  return std::vector<Cell>(gen.cells.begin(), gen.cells.begin() + gen.len);
}

std::string describe(const Generator& gen) {
  std::string out = gen.kind == GenKind::Move ? "move{" : "pushpull{";
  for (int i = 0; i < gen.len; ++i) {
    if (i > 0) {
      out += ",";
    }
    out += to_string(gen.cells[static_cast<size_t>(i)]);
  }
  out += "}";
  return out;
}

std::array<Cell, 4> Dance::cells() const {
  return {Cell{anchor.row, anchor.col}, Cell{anchor.row, anchor.col + 1},
          Cell{anchor.row + 1, anchor.col + 1},
          Cell{anchor.row + 1, anchor.col}};
}

std::array<Generator, 4> Dance::constituent_moves() const {
  const auto corner = cells();
  return {make_move(corner[0], corner[1]), make_move(corner[1], corner[2]),
          make_move(corner[2], corner[3]), make_move(corner[3], corner[0])};
}

std::string describe(const Dance& dance) {
  return "dance{" + to_string(dance.anchor) + "}";
}

std::vector<Cell> support(const PlanItem& item) {
  if (const auto* gen = std::get_if<Generator>(&item)) {
    return support(*gen);
  }
  const auto corner = std::get<Dance>(item).cells();
  return std::vector<Cell>(corner.begin(), corner.end());
}

std::string describe(const PlanItem& item) {
  if (const auto* gen = std::get_if<Generator>(&item)) {
    return describe(*gen);
  }
  return describe(std::get<Dance>(item));
}

bool is_admissible(const Gridworld& g, const State& s, const Generator& gen) {
  for (int i = 0; i < gen.len; ++i) {
    if (!g.is_open(gen.cells[static_cast<size_t>(i)])) {
      return false;
    }
  }
  if (gen.kind == GenKind::Move) {
    if (gen.len != 2 || !orthogonally_adjacent(gen.cells[0], gen.cells[1])) {
      return false;
    }
    const char x = s.at(g.index_of(gen.cells[0]));
    const char y = s.at(g.index_of(gen.cells[1]));
    return (x == kAgent && y == kFloor) || (x == kFloor && y == kAgent);
  }
  if (gen.len != 3 ||
      !straight_consecutive(gen.cells[0], gen.cells[1], gen.cells[2])) {
    return false;
  }
  const char x = s.at(g.index_of(gen.cells[0]));
  const char y = s.at(g.index_of(gen.cells[1]));
  const char z = s.at(g.index_of(gen.cells[2]));
  return (x == kAgent && y == kObject && z == kFloor) ||
         (x == kFloor && y == kAgent && z == kObject);
}

bool is_admissible(const Gridworld& g, const State& s, const Dance& dance) {
  int agents = 0;
  for (const Cell& cell : dance.cells()) {
    if (!g.is_open(cell)) {
      return false;
    }
    const char label = s.at(g.index_of(cell));
    if (label == kAgent) {
      ++agents;
    } else if (label != kFloor) {
      return false;
    }
  }
  return agents == 1;
}

bool is_admissible(const Gridworld& g, const State& s, const PlanItem& item) {
  if (const auto* gen = std::get_if<Generator>(&item)) {
    return is_admissible(g, s, *gen);
  }
  return is_admissible(g, s, std::get<Dance>(item));
}

namespace {

[[noreturn]] void throw_generator_mismatch(const Gridworld& g, const State& s,
                                           const Generator& gen) {
  const std::string what = describe(gen) + " is not admissible";
  for (int i = 0; i < gen.len; ++i) {
    if (!g.is_open(gen.cells[static_cast<size_t>(i)])) {
      throw NotAdmissible(gen.cells[static_cast<size_t>(i)],
                          what + " (cell not open)");
    }
  }
  if (gen.kind == GenKind::Move) {
    if (!orthogonally_adjacent(gen.cells[0], gen.cells[1])) {
      throw NotAdmissible(gen.cells[0], what + " (cells not adjacent)");
    }
    const char x = s.at(g.index_of(gen.cells[0]));
    const char y = s.at(g.index_of(gen.cells[1]));
    if (x != kAgent && x != kFloor) {
      throw NotAdmissible(gen.cells[0], what);
    }
    if ((x == kAgent && y != kFloor) || (x == kFloor && y != kAgent)) {
      throw NotAdmissible(gen.cells[1], what);
    }
    throw NotAdmissible(gen.cells[0], what);
  }
  if (!straight_consecutive(gen.cells[0], gen.cells[1], gen.cells[2])) {
    throw NotAdmissible(gen.cells[0], what + " (cells not in a line)");
  }
  const char x = s.at(g.index_of(gen.cells[0]));
  const char y = s.at(g.index_of(gen.cells[1]));
  if (x == kAgent) {
    if (y != kObject) {
      throw NotAdmissible(gen.cells[1], what);
    }
    throw NotAdmissible(gen.cells[2], what);
  }
  if (x == kFloor) {
    if (y != kAgent) {
      throw NotAdmissible(gen.cells[1], what);
    }
    throw NotAdmissible(gen.cells[2], what);
  }
  throw NotAdmissible(gen.cells[0], what);
}

[[noreturn]] void throw_dance_mismatch(const Gridworld& g, const State& s,
                                       const Dance& dance) {
  const std::string what = describe(dance) + " is not admissible";
  const auto corner = dance.cells();
  for (const Cell& cell : corner) {
    if (!g.is_open(cell)) {
      throw NotAdmissible(cell, what + " (cell not open)");
    }
  }
  int agents = 0;
  for (const Cell& cell : corner) {
    const char label = s.at(g.index_of(cell));
    if (label == kObject) {
      throw NotAdmissible(cell, what + " (object in dance square)");
    }
    if (label == kAgent && ++agents == 2) {
      throw NotAdmissible(cell, what + " (second agent in dance square)");
    }
  }
  throw NotAdmissible(corner[0], what + " (no agent in dance square)");
}

}  // namespace

State apply(const Gridworld& g, const State& s, const Generator& gen) {
  if (!is_admissible(g, s, gen)) {
    throw_generator_mismatch(g, s, gen);
  }
  State out = s;
  if (gen.kind == GenKind::Move) {
    const int a = g.index_of(gen.cells[0]);
    const int b = g.index_of(gen.cells[1]);
    const char x = out.at(a);
    out.set(a, out.at(b));
    out.set(b, x);
    return out;
  }
  const int a = g.index_of(gen.cells[0]);
  const int b = g.index_of(gen.cells[1]);
  const int c = g.index_of(gen.cells[2]);
  if (out.at(a) == kAgent) {
    out.set(a, kFloor);
    out.set(b, kAgent);
    out.set(c, kObject);
  } else {
    out.set(a, kAgent);
    out.set(b, kObject);
    out.set(c, kFloor);
  }
  return out;
}

State apply(const Gridworld& g, const State& s, const PlanItem& item) {
  if (const auto* gen = std::get_if<Generator>(&item)) {
    return apply(g, s, *gen);
  }
  const Dance& dance = std::get<Dance>(item);
  State out = s;
  for (const Generator& step : dance_circuit(g, s, dance)) {
    out = apply(g, out, step);
  }
  return out;
}

int dance_corner(const Gridworld& g, const State& s, const Dance& dance) {
  if (!is_admissible(g, s, dance)) {
    throw_dance_mismatch(g, s, dance);
  }
  const auto corner = dance.cells();
  for (int i = 0; i < 4; ++i) {
    if (s.at(g.index_of(corner[static_cast<size_t>(i)])) == kAgent) {
      return i;
    }
  }
  throw NotAdmissible(corner[0], "dance square has no agent");
}

State with_dance_corner(const Gridworld& g, const State& s, const Dance& dance,
                        int corner) {
  if (corner < 0 || corner > 3) {
    throw std::invalid_argument("dance corner must be in 0..3");
  }
  if (!is_admissible(g, s, dance)) {
    throw_dance_mismatch(g, s, dance);
  }
  State out = s;
  const auto cells = dance.cells();
  for (const Cell& cell : cells) {
    out.set(g.index_of(cell), kFloor);
  }
  out.set(g.index_of(cells[static_cast<size_t>(corner)]), kAgent);
  return out;
}

std::array<Generator, 4> dance_circuit(const Gridworld& g, const State& s,
                                       const Dance& dance) {
  const int start = dance_corner(g, s, dance);
  const auto corner = dance.cells();
  std::array<Generator, 4> steps{};
  for (int i = 0; i < 4; ++i) {
    const int from = (start + i) % 4;
    const int to = (start + i + 1) % 4;
    steps[static_cast<size_t>(i)] =
        make_move(corner[static_cast<size_t>(from)],
                  corner[static_cast<size_t>(to)]);
  }
  return steps;
}

std::vector<Generator> enumerate_moves(const Gridworld& g, const State& s) {
  std::vector<Generator> out;
  for (int i = 0; i < g.cell_count(); ++i) {
    for (const int j : g.neighbors(i)) {
      if (j <= i) {
        continue;
      }
      const char x = s.at(i);
      const char y = s.at(j);
      if ((x == kAgent && y == kFloor) || (x == kFloor && y == kAgent)) {
        out.push_back(make_move(g.cell_at(i), g.cell_at(j)));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Generator> enumerate_pushpulls(const Gridworld& g,
                                           const State& s) {
  std::vector<Generator> out;
  for (const auto& triple : g.collinear_triples()) {
    const char x = s.at(g.index_of(triple[0]));
    const char y = s.at(g.index_of(triple[1]));
    const char z = s.at(g.index_of(triple[2]));
    if ((x == kAgent && y == kObject && z == kFloor) ||
        (x == kFloor && y == kAgent && z == kObject)) {
      out.push_back(make_pushpull(triple[0], triple[1], triple[2]));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Generator> enumerate_generators(const Gridworld& g,
                                            const State& s) {
  std::vector<Generator> out = enumerate_moves(g, s);
  std::vector<Generator> pushes = enumerate_pushpulls(g, s);
  out.insert(out.end(), pushes.begin(), pushes.end());
  return out;
}

std::vector<Dance> enumerate_dances(const Gridworld& g, const State& s) {
  std::vector<Dance> out;
  for (int r = 0; r + 1 < g.height(); ++r) {
    for (int c = 0; c + 1 < g.width(); ++c) {
      const Dance dance{Cell{r, c}};
      if (is_admissible(g, s, dance)) {
        out.push_back(dance);
      }
    }
  }
  return out;
}

bool disjoint_support(const PlanItem& a, const PlanItem& b) {
  const std::vector<Cell> sa = support(a);
  const std::vector<Cell> sb = support(b);
  for (const Cell& x : sa) {
    for (const Cell& y : sb) {
      if (x == y) {
        return false;
      }
    }
  }
  return true;
}

bool commutes(const Gridworld& g, const State& s,
              const std::vector<PlanItem>& items) {
  for (const PlanItem& item : items) {
    if (!is_admissible(g, s, item)) {
      if (const auto* gen = std::get_if<Generator>(&item)) {
        throw_generator_mismatch(g, s, *gen);
      }
      throw_dance_mismatch(g, s, std::get<Dance>(item));
    }
  }
  for (size_t i = 0; i < items.size(); ++i) {
    for (size_t j = i + 1; j < items.size(); ++j) {
      if (!disjoint_support(items[i], items[j])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace gridcx
