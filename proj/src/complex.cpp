#include "gridcx/complex.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_set>

namespace gridcx {

namespace {

std::int64_t pair_key(int a, int b, int n) {
  if (a > b) {
    std::swap(a, b);
  }
  return static_cast<std::int64_t>(a) * n + b;
}

std::string pack_vertices(const std::vector<int>& vertices) {
  std::string out;
  out.resize(vertices.size() * sizeof(int));
  std::memcpy(out.data(), vertices.data(), out.size());
  return out;
}

/**
 * Expands all combinations of generator locals and dance corners reachable
 * from `base`, returning the sorted vertex ids.  Returns an empty vector and
 * fills `error` when a combination leaves the graph or collapses.
 */
std::vector<int> product_vertices(const StateGraph& sg, const State& base,
                                  const std::vector<Generator>& gens,
                                  const std::vector<Dance>& dances,
                                  std::string* error) {
  const Gridworld& g = sg.grid();
  std::vector<State> states = {base};
  for (const Generator& gen : gens) {
    const size_t count = states.size();
    for (size_t i = 0; i < count; ++i) {
      states.push_back(apply(g, states[i], gen));
    }
  }
  for (const Dance& dance : dances) {
    std::vector<State> next;
    next.reserve(states.size() * 4);
    for (const State& s : states) {
      for (int corner = 0; corner < 4; ++corner) {
        next.push_back(with_dance_corner(g, s, dance, corner));
      }
    }
    states = std::move(next);
  }
  std::vector<int> vertices;
  vertices.reserve(states.size());
  for (const State& s : states) {
    const int id = sg.id_of(s.key());
    if (id < 0) {
      if (error != nullptr) {
        *error = "combination state " + s.key() + " is not in the graph";
      }
      return {};
    }
    vertices.push_back(id);
  }
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    if (error != nullptr) {
      *error = "combination states collapsed onto each other";
    }
    return {};
  }
  return vertices;
}

}  // namespace

SquareScan scan_squares(const StateGraph& sg) {
  SquareScan out;
  const int n = sg.vertex_count();
  std::unordered_map<std::int64_t, Generator> edge_gen;
  edge_gen.reserve(sg.edges().size() * 2);
  for (const Edge& e : sg.edges()) {
    edge_gen.emplace(pair_key(e.u, e.v, n), e.gen);
  }

  for (int u = 0; u < n; ++u) {
    std::vector<int> higher;
    for (const auto& [w, edge_index] : sg.neighbors_of(u)) {
      (void)edge_index;
      if (w > u) {
        higher.push_back(w);
      }
    }
    std::sort(higher.begin(), higher.end());
    for (size_t i = 0; i < higher.size(); ++i) {
      for (size_t j = i + 1; j < higher.size(); ++j) {
        const int x = higher[i];
        const int y = higher[j];
        std::vector<int> commons;
        for (const auto& [w, edge_index] : sg.neighbors_of(x)) {
          (void)edge_index;
          if (w > u && w != y &&
              edge_gen.find(pair_key(w, y, n)) != edge_gen.end()) {
            commons.push_back(w);
          }
        }
        std::sort(commons.begin(), commons.end());
        for (const int w : commons) {
          ++out.four_cycles;
          const Generator& e_ux = edge_gen.at(pair_key(u, x, n));
          const Generator& e_xw = edge_gen.at(pair_key(x, w, n));
          const Generator& e_wy = edge_gen.at(pair_key(w, y, n));
          const Generator& e_yu = edge_gen.at(pair_key(y, u, n));

          Square sq;
          sq.cycle = {u, x, w, y};
          if (e_ux == e_wy && e_xw == e_yu && e_ux != e_xw &&
              disjoint_support(PlanItem(e_ux), PlanItem(e_xw))) {
            sq.kind = SquareKind::Commuting;
            sq.gen_a = std::min(e_ux, e_xw);
            sq.gen_b = std::max(e_ux, e_xw);
            out.squares.push_back(sq);
            continue;
          }

          const std::array<Generator, 4> around = {e_ux, e_xw, e_wy, e_yu};
          bool all_moves = true;
          for (const Generator& gen : around) {
            if (gen.kind != GenKind::Move) {
              all_moves = false;
            }
          }
          if (!all_moves) {
            continue;
          }
          std::vector<Cell> cells;
          for (const Generator& gen : around) {
            cells.push_back(gen.cells[0]);
            cells.push_back(gen.cells[1]);
          }
          std::sort(cells.begin(), cells.end());
          cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
          if (cells.size() != 4) {
            continue;
          }
          const Cell anchor = cells.front();
          const Dance dance{anchor};
          auto corners = dance.cells();
          std::sort(corners.begin(), corners.end());
          if (!std::equal(corners.begin(), corners.end(), cells.begin())) {
            continue;
          }
          std::array<Generator, 4> sides = dance.constituent_moves();
          std::array<Generator, 4> found = around;
          std::sort(sides.begin(), sides.end());
          std::sort(found.begin(), found.end());
          if (sides != found) {
            continue;
          }
          bool admissible_everywhere = true;
          for (const int vertex : sq.cycle) {
            if (!is_admissible(sg.grid(), sg.state_of(vertex), dance)) {
              admissible_everywhere = false;
              break;
            }
          }
          if (!admissible_everywhere) {
            continue;
          }
          sq.kind = SquareKind::Dance;
          sq.dance = dance;
          out.squares.push_back(sq);
        }
      }
    }
  }
  return out;
}

std::vector<Square> find_squares(const StateGraph& sg) {
  return scan_squares(sg).squares;
}

std::size_t count_four_cycles(const StateGraph& sg) {
  return scan_squares(sg).four_cycles;
}

std::size_t StateComplex::dance_square_count() const {
  std::size_t count = 0;
  for (const Square& sq : squares_) {
    if (sq.kind == SquareKind::Dance) {
      ++count;
    }
  }
  return count;
}

std::size_t StateComplex::commuting_square_count() const {
  std::size_t count = 0;
  for (const Square& sq : squares_) {
    if (sq.kind == SquareKind::Commuting) {
      ++count;
    }
  }
  return count;
}

void StateComplex::index_cubes() {
  cubes_at_.assign(static_cast<size_t>(graph_.vertex_count()), {});
  for (size_t ci = 0; ci < cubes_.size(); ++ci) {
    for (const int v : cubes_[ci].vertices) {
      cubes_at_[static_cast<size_t>(v)].push_back(static_cast<int>(ci));
    }
  }
}

StateComplex StateComplex::from_parts(StateGraph graph, int max_dim,
                                      bool dances_enabled,
                                      std::vector<Square> squares,
                                      std::vector<Cube> cubes) {
  if (max_dim < 2) {
    throw std::invalid_argument("max_dim must be at least 2");
  }
  StateComplex cx(std::move(graph));
  cx.max_dim_ = max_dim;
  cx.dances_enabled_ = dances_enabled;
  const int n = cx.graph_.vertex_count();
  for (const Square& sq : squares) {
    for (const int v : sq.cycle) {
      if (v < 0 || v >= n) {
        throw std::invalid_argument("square vertex out of range");
      }
    }
  }
  for (const Cube& cube : cubes) {
    if (cube.dim != cube.l + 2 * cube.m || cube.dim < 2 ||
        cube.dim > max_dim) {
      throw std::invalid_argument("cube dimension mismatch");
    }
    if (cube.vertices.size() != (static_cast<size_t>(1) << cube.dim)) {
      throw std::invalid_argument("cube vertex count mismatch");
    }
    for (const int v : cube.vertices) {
      if (v < 0 || v >= n) {
        throw std::invalid_argument("cube vertex out of range");
      }
    }
  }
  cx.squares_ = std::move(squares);
  cx.cubes_ = std::move(cubes);
  cx.index_cubes();
  return cx;
}

StateComplex build_complex(const StateGraph& sg, int max_dim, bool with_dances,
                           std::size_t cube_budget) {
  if (max_dim < 2) {
    throw std::invalid_argument("max_dim must be at least 2");
  }
  StateComplex cx(sg);
  cx.max_dim_ = max_dim;
  cx.dances_enabled_ = with_dances;

  SquareScan scan = scan_squares(cx.graph_);
  for (Square& sq : scan.squares) {
    if (with_dances || sq.kind == SquareKind::Commuting) {
      cx.squares_.push_back(sq);
    }
  }

  const Gridworld& g = cx.graph_.grid();
  std::unordered_map<std::string, int> seen;

  for (int v = 0; v < cx.graph_.vertex_count(); ++v) {
    const State base = cx.graph_.state_of(v);
    const std::vector<Generator> gens = enumerate_generators(g, base);
    const std::vector<Dance> dances =
        with_dances ? enumerate_dances(g, base) : std::vector<Dance>();

    std::vector<PlanItem> items;
    std::vector<int> weights;
    items.reserve(gens.size() + dances.size());
    for (const Generator& gen : gens) {
      items.emplace_back(gen);
      weights.push_back(1);
    }
    for (const Dance& dance : dances) {
      items.emplace_back(dance);
      weights.push_back(2);
    }
    const size_t item_count = items.size();
    std::vector<std::vector<char>> disjoint(item_count,
                                            std::vector<char>(item_count, 0));
    for (size_t i = 0; i < item_count; ++i) {
      for (size_t j = i + 1; j < item_count; ++j) {
        disjoint[i][j] = disjoint[j][i] =
            disjoint_support(items[i], items[j]) ? 1 : 0;
      }
    }

    std::vector<int> chosen;
    auto emit = [&]() {
      Cube cube;
      for (const int idx : chosen) {
        if (weights[static_cast<size_t>(idx)] == 1) {
          cube.gens.push_back(std::get<Generator>(items[static_cast<size_t>(idx)]));
        } else {
          cube.dances.push_back(std::get<Dance>(items[static_cast<size_t>(idx)]));
        }
      }
      cube.l = static_cast<int>(cube.gens.size());
      cube.m = static_cast<int>(cube.dances.size());
      cube.dim = cube.l + 2 * cube.m;
      std::string error;
      cube.vertices =
          product_vertices(cx.graph_, base, cube.gens, cube.dances, &error);
      if (cube.vertices.empty()) {
        cx.anomalies_.push_back("cube assembly at " + base.key() + ": " +
                                error);
        return;
      }
      if (cube.vertices.front() != v) {
        return;
      }
      cube.base = v;
      const std::string packed = pack_vertices(cube.vertices);
      const auto it = seen.find(packed);
      if (it != seen.end()) {
        const Cube& other = cx.cubes_[static_cast<size_t>(it->second)];
        if (other.gens != cube.gens || other.dances != cube.dances) {
          cx.anomalies_.push_back(
              "two witness sets share a vertex set at base " + base.key());
        }
        return;
      }
      if (cx.cubes_.size() >= cube_budget) {
        throw BudgetExceeded(cx.cubes_.size(), cube_budget);
      }
      seen.emplace(packed, static_cast<int>(cx.cubes_.size()));
      cx.cubes_.push_back(std::move(cube));
    };

    auto dfs = [&](auto&& self, size_t start, int dim_used) -> void {
      for (size_t i = start; i < item_count; ++i) {
        if (dim_used + weights[i] > max_dim) {
          continue;
        }
        bool ok = true;
        for (const int prev : chosen) {
          if (!disjoint[static_cast<size_t>(prev)][i]) {
            ok = false;
            break;
          }
        }
        if (!ok) {
          continue;
        }
        chosen.push_back(static_cast<int>(i));
        if (dim_used + weights[i] >= 2) {
          emit();
        }
        self(self, i + 1, dim_used + weights[i]);
        chosen.pop_back();
      }
    };
    dfs(dfs, 0, 0);
  }

  cx.index_cubes();
  return cx;
}

StateComplex original_complex(const StateGraph& sg, int max_dim,
                              std::size_t cube_budget) {
  return build_complex(sg, max_dim, false, cube_budget);
}

std::vector<std::string> check_complex_invariants(const StateComplex& cx) {
  std::vector<std::string> out;
  const StateGraph& sg = cx.graph();
  const Gridworld& g = sg.grid();
  const int n = sg.vertex_count();

  std::unordered_set<std::int64_t> edge_set;
  for (const Edge& e : sg.edges()) {
    if (e.u == e.v) {
      out.push_back("self-loop at vertex " + std::to_string(e.u));
      continue;
    }
    edge_set.insert(pair_key(e.u, e.v, n));
    const State su = sg.state_of(e.u);
    const State sv = sg.state_of(e.v);
    if (!is_admissible(g, su, e.gen) || !is_admissible(g, sv, e.gen)) {
      out.push_back("edge generator " + describe(e.gen) +
                    " is not admissible at both endpoints");
      continue;
    }
    if (apply(g, su, e.gen).key() != sv.key() ||
        apply(g, sv, e.gen).key() != su.key()) {
      out.push_back("edge generator " + describe(e.gen) +
                    " does not exchange its endpoints");
    }
  }

  std::unordered_map<std::string, int> by_vertices;
  for (size_t ci = 0; ci < cx.cubes().size(); ++ci) {
    const Cube& cube = cx.cubes()[ci];
    const std::string where = " (cube " + std::to_string(ci) + ")";
    if (cube.dim != cube.l + 2 * cube.m) {
      out.push_back("dimension does not match decomposition" + where);
      continue;
    }
    if (cube.vertices.size() != (static_cast<size_t>(1) << cube.dim) ||
        !std::is_sorted(cube.vertices.begin(), cube.vertices.end()) ||
        std::adjacent_find(cube.vertices.begin(), cube.vertices.end()) !=
            cube.vertices.end()) {
      out.push_back("vertex list is not a sorted set of 2^dim ids" + where);
      continue;
    }
    if (cube.base != cube.vertices.front()) {
      out.push_back("base is not the minimum vertex" + where);
    }
    std::vector<PlanItem> witnesses;
    for (const Generator& gen : cube.gens) {
      witnesses.emplace_back(gen);
    }
    for (const Dance& dance : cube.dances) {
      witnesses.emplace_back(dance);
    }
    for (size_t i = 0; i < witnesses.size(); ++i) {
      for (size_t j = i + 1; j < witnesses.size(); ++j) {
        if (!disjoint_support(witnesses[i], witnesses[j])) {
          out.push_back("witness supports overlap" + where);
        }
      }
    }
    bool admissible_all = true;
    for (const int v : cube.vertices) {
      const State s = sg.state_of(v);
      for (const PlanItem& item : witnesses) {
        if (!is_admissible(g, s, item)) {
          admissible_all = false;
        }
      }
    }
    if (!admissible_all) {
      out.push_back("witness not admissible at every cube vertex" + where);
      continue;
    }
    std::string error;
    const std::vector<int> rebuilt = product_vertices(
        sg, sg.state_of(cube.base), cube.gens, cube.dances, &error);
    if (rebuilt != cube.vertices) {
      out.push_back("witness product does not reproduce the vertex set" +
                    where);
      continue;
    }
    const auto [it, inserted] =
        by_vertices.emplace(pack_vertices(cube.vertices), static_cast<int>(ci));
    if (!inserted) {
      out.push_back("vertex set shared with cube " + std::to_string(it->second) +
                    where);
    }
  }

  for (size_t ci = 0; ci < cx.cubes().size(); ++ci) {
    const Cube& cube = cx.cubes()[ci];
    const std::string where = " (cube " + std::to_string(ci) + ")";
    const State base = sg.state_of(cube.base);

    auto check_face = [&](const State& face_base,
                          const std::vector<Generator>& gens,
                          const std::vector<Dance>& dances) {
      std::string error;
      const std::vector<int> face =
          product_vertices(sg, face_base, gens, dances, &error);
      if (face.empty() && !(gens.empty() && dances.empty())) {
        out.push_back("face product failed: " + error + where);
        return;
      }
      const int face_dim =
          static_cast<int>(gens.size()) + 2 * static_cast<int>(dances.size());
      if (face_dim >= 2) {
        if (by_vertices.find(pack_vertices(face)) == by_vertices.end()) {
          out.push_back("missing face of dimension " +
                        std::to_string(face_dim) + where);
        }
      } else if (face_dim == 1) {
        if (edge_set.find(pair_key(face[0], face[1], n)) == edge_set.end()) {
          out.push_back("missing edge face" + where);
        }
      }
    };

    for (size_t gi = 0; gi < cube.gens.size(); ++gi) {
      std::vector<Generator> rest = cube.gens;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(gi));
      check_face(base, rest, cube.dances);
      check_face(apply(g, base, cube.gens[gi]), rest, cube.dances);
    }
    for (size_t di = 0; di < cube.dances.size(); ++di) {
      std::vector<Dance> rest = cube.dances;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(di));
      const Dance& dance = cube.dances[di];
      for (int corner = 0; corner < 4; ++corner) {
        std::vector<Generator> gens = cube.gens;
        const auto cells = dance.cells();
        gens.push_back(make_move(cells[static_cast<size_t>(corner)],
                                 cells[static_cast<size_t>((corner + 1) % 4)]));
        std::sort(gens.begin(), gens.end());
        check_face(with_dance_corner(g, base, dance, corner), gens, rest);
      }
    }
  }

  std::vector<std::pair<std::string, SquareKind>> square_sets;
  for (const Square& sq : cx.squares()) {
    std::vector<int> ids(sq.cycle.begin(), sq.cycle.end());
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
      out.push_back("square cycle repeats a vertex");
      continue;
    }
    for (int i = 0; i < 4; ++i) {
      if (edge_set.find(pair_key(sq.cycle[static_cast<size_t>(i)],
                                 sq.cycle[static_cast<size_t>((i + 1) % 4)],
                                 n)) == edge_set.end()) {
        out.push_back("square cycle edge missing from graph");
      }
    }
    square_sets.emplace_back(pack_vertices(ids), sq.kind);
  }
  std::vector<std::pair<std::string, SquareKind>> cube_sets;
  for (const Cube& cube : cx.cubes()) {
    if (cube.dim != 2) {
      continue;
    }
    cube_sets.emplace_back(pack_vertices(cube.vertices),
                           cube.m == 1 ? SquareKind::Dance
                                       : SquareKind::Commuting);
  }
  std::sort(square_sets.begin(), square_sets.end());
  std::sort(cube_sets.begin(), cube_sets.end());
  if (square_sets != cube_sets) {
    out.push_back("classified squares and dimension-2 cubes disagree");
  }

  for (const std::string& note : cx.anomalies()) {
    out.push_back("assembly anomaly: " + note);
  }
  return out;
}

}  // namespace gridcx
