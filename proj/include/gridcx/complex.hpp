#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "gridcx/exploration.hpp"
#include "gridcx/generators.hpp"

namespace gridcx {

enum class SquareKind : std::uint8_t { Commuting = 0, Dance = 1 };

/**
 * A filled 2-cell of the complex, classified from a 4-cycle of the state
 * graph.  Commuting squares are witnessed by two support-disjoint
 * generators appearing on opposite cycle edges; dance squares by a single
 * dance whose four corner labellings are the cycle's states.  The cycle is
 * stored canonically: minimum vertex first, continuing toward its smaller
 * cycle neighbor.
 */
struct Square {
  std::array<int, 4> cycle{};
  SquareKind kind = SquareKind::Commuting;
  Generator gen_a;
  Generator gen_b;
  Dance dance;
};

/**
 * An n-cube spanned at some state by l generators and m dances with
 * pairwise disjoint supports, n = l + 2m.  Every witness is admissible at
 * every cube vertex; the 2^n vertices are all combinations of generator
 * locals and dance corners.  Vertices are sorted; base is the minimum.
 */
struct Cube {
  int dim = 0;
  int l = 0;
  int m = 0;
  int base = 0;
  std::vector<Generator> gens;
  std::vector<Dance> dances;
  std::vector<int> vertices;
};

struct SquareScan {
  std::vector<Square> squares;
  std::size_t four_cycles = 0;
};

/** Classifies every 4-cycle; returns the fillable ones plus the raw count. */
SquareScan scan_squares(const StateGraph& sg);

/** Fillable squares only (commuting and dance); unfillable cycles omitted. */
std::vector<Square> find_squares(const StateGraph& sg);

/** Total number of 4-cycles in the state graph, fillable or not. */
std::size_t count_four_cycles(const StateGraph& sg);

/**
 * The cubical complex over a state graph: classified squares plus all cubes
 * of dimension 2..max_dim, deduplicated by vertex set.  With dances
 * disabled the same construction yields the original (dance-free) complex.
 */
class StateComplex {
 public:
  const StateGraph& graph() const noexcept { return graph_; }
  int max_dim() const noexcept { return max_dim_; }
  bool dances_enabled() const noexcept { return dances_enabled_; }

  const std::vector<Square>& squares() const noexcept { return squares_; }
  const std::vector<Cube>& cubes() const noexcept { return cubes_; }

  /** Indices into cubes() of the cubes incident to vertex v. */
  const std::vector<int>& cubes_at(int v) const {
    return cubes_at_.at(static_cast<size_t>(v));
  }

  std::size_t dance_square_count() const;
  std::size_t commuting_square_count() const;

  /** Notes about anything irregular met during assembly (expected empty). */
  const std::vector<std::string>& anomalies() const noexcept {
    return anomalies_;
  }

  /** Rebuilds a complex from exported parts; validates index ranges. */
  static StateComplex from_parts(StateGraph graph, int max_dim,
                                 bool dances_enabled,
                                 std::vector<Square> squares,
                                 std::vector<Cube> cubes);

  friend StateComplex build_complex(const StateGraph& sg, int max_dim,
                                    bool with_dances, std::size_t cube_budget);

 private:
  explicit StateComplex(StateGraph graph) : graph_(std::move(graph)) {}

  void index_cubes();

  StateGraph graph_;
  int max_dim_ = 0;
  bool dances_enabled_ = true;
  std::vector<Square> squares_;
  std::vector<Cube> cubes_;
  std::vector<std::vector<int>> cubes_at_;
  std::vector<std::string> anomalies_;
};

/**
 * Assembles the complex with dances filled (the modified construction).
 * Cubes are discovered per state from support-disjoint admissible sets and
 * deduplicated by vertex set; throws BudgetExceeded past cube_budget.
 */
StateComplex build_complex(const StateGraph& sg, int max_dim = 4,
                           bool with_dances = true,
                           std::size_t cube_budget = kDefaultBudget);

/** The dance-free construction (m = 0 everywhere, dance squares unfilled). */
StateComplex original_complex(const StateGraph& sg, int max_dim = 4,
                              std::size_t cube_budget = kDefaultBudget);

/**
 * Independent structural audit: edge soundness, cube vertex counts, witness
 * disjointness and admissibility, face closure, vertex-set uniqueness, and
 * square/dim-2-cube agreement.  Returns human-readable violations.
 */
std::vector<std::string> check_complex_invariants(const StateComplex& cx);

}  // namespace gridcx
