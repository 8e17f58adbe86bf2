#include "gridcx/exploration.hpp"

namespace gridcx {

BudgetExceeded::BudgetExceeded(std::size_t explored, std::size_t budget)
    : std::runtime_error("budget exceeded: found " + std::to_string(explored) +
                         " states with budget " + std::to_string(budget) +
                         " and more remain"),
      explored_(explored),
      budget_(budget) {}

int StateGraph::id_of(std::string_view key) const {
  const auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

int StateGraph::intern(const std::string& key) {
  const auto [it, inserted] = index_.try_emplace(key, static_cast<int>(keys_.size()));
  if (inserted) {
    keys_.push_back(key);
    adjacency_.emplace_back();
  }
  return it->second;
}

void StateGraph::add_edge(int u, int v, const Generator& gen) {
  const int edge_index = static_cast<int>(edges_.size());
  edges_.push_back(Edge{u, v, gen});
  adjacency_[static_cast<size_t>(u)].emplace_back(v, edge_index);
  adjacency_[static_cast<size_t>(v)].emplace_back(u, edge_index);
}

StateGraph StateGraph::from_parts(Gridworld grid, std::vector<std::string> keys,
                                  std::vector<Edge> edges) {
  StateGraph sg(std::move(grid));
  for (const std::string& key : keys) {
    if (static_cast<int>(key.size()) != sg.grid_.cell_count()) {
      throw std::invalid_argument("vertex key length does not match gridworld");
    }
    if (sg.intern(key) != static_cast<int>(sg.keys_.size()) - 1) {
      throw std::invalid_argument("duplicate vertex key: " + key);
    }
  }
  for (const Edge& edge : edges) {
    if (edge.u < 0 || edge.v < 0 || edge.u >= sg.vertex_count() ||
        edge.v >= sg.vertex_count() || edge.u == edge.v) {
      throw std::invalid_argument("edge endpoints out of range");
    }
    sg.add_edge(edge.u, edge.v, edge.gen);
  }
  return sg;
}

std::string canonical_key(const State& s) { return s.key(); }

StateGraph explore(const Gridworld& g, const State& s0, std::size_t budget) {
  if (s0.size() != g.cell_count()) {
    throw std::invalid_argument("state size does not match gridworld");
  }
  StateGraph sg(g);
  sg.intern(s0.key());
  if (budget < 1) {
    throw BudgetExceeded(1, budget);
  }
  for (int u = 0; u < sg.vertex_count(); ++u) {
    const State current = sg.state_of(u);
    for (const Generator& gen : enumerate_generators(g, current)) {
      const State next = apply(g, current, gen);
      if (sg.id_of(next.key()) < 0 && sg.keys_.size() >= budget) {
        throw BudgetExceeded(sg.keys_.size(), budget);
      }
      const int w = sg.intern(next.key());
      if (w > u) {
        sg.add_edge(u, w, gen);
      }
    }
  }
  return sg;
}

}  // namespace gridcx
