#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gridcx/grid.hpp"

namespace gridcx {

enum class GenKind : std::uint8_t { Move = 0, PushPull = 1 };

/**
 * Raised when a rearrangement is applied at a state whose labels do not
 * match either of its local patterns; carries the first offending cell.
 */
class NotAdmissible : public std::runtime_error {
 public:
  NotAdmissible(const Cell& cell, const std::string& message);

  const Cell& cell() const noexcept { return cell_; }

 private:
  Cell cell_;
};

/**
 * A local rearrangement of the board.  A Move carries an agent between two
 * adjacent cells (support stored sorted; the two local patterns are
 * agent/floor and floor/agent).  A PushPull shifts an agent together with an
 * adjacent object along an ordered straight triple of cells (locals
 * agent/object/floor and floor/agent/object); the reversed triple is a
 * distinct generator.  Both kinds relabel exactly their support, and both
 * are involutions: applying one twice restores the state.
 */
struct Generator {
  GenKind kind = GenKind::Move;
  int len = 0;
  std::array<Cell, 3> cells{};

  auto operator<=>(const Generator&) const = default;
};

/** Move over two cells; stores them sorted. Rejects equal cells. */
Generator make_move(const Cell& a, const Cell& b);

/** PushPull over an ordered straight triple. Rejects repeated cells. */
Generator make_pushpull(const Cell& a, const Cell& b, const Cell& c);

/** Cells the generator touches, in stored order. */
std::vector<Cell> support(const Generator& gen);

/** Human-readable form, e.g. "move{(0,0),(0,1)}". */
std::string describe(const Generator& gen);

/**
 * One agent circling the four cells of a 2x2 subgrid; the anchor is the
 * top-left cell.  A dance has four local patterns (agent in one corner,
 * floor in the rest), no net effect on the state, and four constituent
 * Moves: the edges of the circuit top-left -> top-right -> bottom-right ->
 * bottom-left.  Unlike a generator, a dance relabels nothing overall.
 */
struct Dance {
  Cell anchor;

  auto operator<=>(const Dance&) const = default;

  /** Corner cells in circuit order: tl, tr, br, bl. */
  std::array<Cell, 4> cells() const;

  /** The four Moves along the circuit edges, in circuit order. */
  std::array<Generator, 4> constituent_moves() const;
};

std::string describe(const Dance& dance);

/** A generator or a dance, as scheduled by planners and cube assembly. */
using PlanItem = std::variant<Generator, Dance>;

std::vector<Cell> support(const PlanItem& item);
std::string describe(const PlanItem& item);

/** Moves admissible at s, sorted by support cells. */
std::vector<Generator> enumerate_moves(const Gridworld& g, const State& s);

/** PushPulls admissible at s, sorted by their ordered triples. */
std::vector<Generator> enumerate_pushpulls(const Gridworld& g, const State& s);

/** All admissible generators at s: Moves first, then PushPulls. */
std::vector<Generator> enumerate_generators(const Gridworld& g,
                                            const State& s);

/** Dances admissible at s (one agent, three floors), by anchor. */
std::vector<Dance> enumerate_dances(const Gridworld& g, const State& s);

bool is_admissible(const Gridworld& g, const State& s, const Generator& gen);
bool is_admissible(const Gridworld& g, const State& s, const Dance& dance);
bool is_admissible(const Gridworld& g, const State& s, const PlanItem& item);

/** Relabels the generator's support to its other local pattern. */
State apply(const Gridworld& g, const State& s, const Generator& gen);

/**
 * Runs the dance's full circuit, which returns the agent to its corner; the
 * result equals s.  Throws NotAdmissible when the dance does not apply.
 */
State apply(const Gridworld& g, const State& s, const PlanItem& item);

/** Which corner (0..3 in circuit order) of the dance holds the agent at s. */
int dance_corner(const Gridworld& g, const State& s, const Dance& dance);

/** Copy of s with the dance's agent placed on the given corner instead. */
State with_dance_corner(const Gridworld& g, const State& s, const Dance& dance,
                        int corner);

/**
 * The four constituent moves in execution order for running the circuit
 * from the agent's current corner.
 */
std::array<Generator, 4> dance_circuit(const Gridworld& g, const State& s,
                                       const Dance& dance);

bool disjoint_support(const PlanItem& a, const PlanItem& b);

/**
 * True iff the items' supports are pairwise disjoint.  Every item must be
 * admissible at s; otherwise NotAdmissible is thrown.
 */
bool commutes(const Gridworld& g, const State& s,
              const std::vector<PlanItem>& items);

}  // namespace gridcx
