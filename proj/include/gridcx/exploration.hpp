#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gridcx/generators.hpp"
#include "gridcx/grid.hpp"

namespace gridcx {

/** Raised when exploration or assembly outgrows its configured budget. */
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t explored, std::size_t budget);

  std::size_t explored() const noexcept { return explored_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t explored_;
  std::size_t budget_;
};

inline constexpr std::size_t kDefaultBudget = 5'000'000;

/** An undirected transition: endpoints u < v and the generator joining them. */
struct Edge {
  int u = 0;
  int v = 0;
  Generator gen;

  auto operator<=>(const Edge&) const = default;
};

/**
 * The reachable state graph: vertices are canonical state keys in
 * breadth-first discovery order, edges record the generator realizing each
 * transition.  Immutable once built; safe to share across threads.
 */
class StateGraph {
 public:
  const Gridworld& grid() const noexcept { return grid_; }

  int vertex_count() const noexcept { return static_cast<int>(keys_.size()); }

  const std::string& key_of(int v) const { return keys_.at(static_cast<size_t>(v)); }

  /** Vertex id for a canonical key, or -1 when absent. */
  int id_of(std::string_view key) const;

  State state_of(int v) const { return State(key_of(v)); }

  const std::vector<std::string>& keys() const noexcept { return keys_; }

  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /** Incident (neighbor vertex, edge index) pairs in discovery order. */
  const std::vector<std::vector<std::pair<int, int>>>& adjacency() const noexcept {
    return adjacency_;
  }

  const std::vector<std::pair<int, int>>& neighbors_of(int v) const {
    return adjacency_.at(static_cast<size_t>(v));
  }

  /** Rebuilds a graph from exported parts; validates endpoints and keys. */
  static StateGraph from_parts(Gridworld grid, std::vector<std::string> keys,
                               std::vector<Edge> edges);

  friend StateGraph explore(const Gridworld& g, const State& s0,
                            std::size_t budget);

 private:
  explicit StateGraph(Gridworld grid) : grid_(std::move(grid)) {}

  int intern(const std::string& key);
  void add_edge(int u, int v, const Generator& gen);

  struct KeyHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view key) const noexcept {
      return std::hash<std::string_view>{}(key);
    }
  };

  Gridworld grid_;
  std::vector<std::string> keys_;
  std::unordered_map<std::string, int, KeyHash, std::equal_to<>> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

/** Canonical vertex key: the row-major label string over open cells. */
std::string canonical_key(const State& s);

/**
 * Breadth-first closure of s0 under all admissible generators.  Vertex ids
 * follow discovery order; throws BudgetExceeded when more than `budget`
 * states are found.
 */
StateGraph explore(const Gridworld& g, const State& s0,
                   std::size_t budget = kDefaultBudget);

}  // namespace gridcx
