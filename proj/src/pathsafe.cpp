#include "gridcx/pathsafe.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <variant>

namespace gridcx {

Path shortest_path(const StateGraph& sg, const std::string& from,
                   const std::string& to) {
  const int src = sg.id_of(from);
  if (src < 0) {
    throw std::invalid_argument("unknown state key \"" + from + "\"");
  }
  const int dst = sg.id_of(to);
  if (dst < 0) {
    throw std::invalid_argument("unknown state key \"" + to + "\"");
  }

  constexpr int kUnreached = -1;
  std::vector<int> dist(static_cast<size_t>(sg.vertex_count()), kUnreached);
  std::deque<int> frontier;
  dist[static_cast<size_t>(dst)] = 0;
  frontier.push_back(dst);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop_front();
    for (const auto& [w, edge] : sg.neighbors_of(u)) {
      if (dist[static_cast<size_t>(w)] == kUnreached) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
        frontier.push_back(w);
      }
    }
  }
  if (dist[static_cast<size_t>(src)] == kUnreached) {
    throw PlanError("no path from \"" + from + "\" to \"" + to + "\"");
  }

  Path path;
  path.keys.push_back(sg.key_of(src));
  int u = src;
  while (u != dst) {
    int best = -1;
    int best_edge = -1;
    for (const auto& [w, edge] : sg.neighbors_of(u)) {
      if (dist[static_cast<size_t>(w)] != dist[static_cast<size_t>(u)] - 1) {
        continue;
      }
      if (best < 0 || sg.key_of(w) < sg.key_of(best)) {
        best = w;
        best_edge = edge;
      }
    }
    path.generators.push_back(sg.edges()[static_cast<size_t>(best_edge)].gen);
    path.keys.push_back(sg.key_of(best));
    u = best;
  }
  return path;
}

namespace {

bool item_admissible(const Gridworld& g, const State& s, const PlanItem& item) {
  return std::visit([&](const auto& x) { return is_admissible(g, s, x); }, item);
}

/** Per-state lookup: link vertices plus the vertex sets of empty simplices. */
struct SafetyTable {
  std::vector<Generator> vertices;
  std::vector<std::vector<int>> empty_sets;
};

SafetyTable safety_table(const StateComplex& cx, int v) {
  const LinkComplex lk = build_link(cx, v);
  const DefectReport report = check_link(lk);
  SafetyTable table;
  table.vertices = lk.vertices;
  for (const auto& t : report.empty_two) {
    table.empty_sets.push_back({t[0], t[1], t[2]});
  }
  for (const auto& q : report.empty_three) {
    table.empty_sets.push_back({q[0], q[1], q[2], q[3]});
  }
  return table;
}

/** Canonical request order: dances by anchor first, then generators. */
std::deque<PlanItem> canonical_queue(const std::vector<PlanItem>& requested) {
  std::vector<Dance> dances;
  std::vector<Generator> gens;
  for (const PlanItem& item : requested) {
    if (const auto* dance = std::get_if<Dance>(&item)) {
      dances.push_back(*dance);
    } else {
      gens.push_back(std::get<Generator>(item));
    }
  }
  std::sort(dances.begin(), dances.end());
  std::sort(gens.begin(), gens.end());
  std::deque<PlanItem> queue;
  for (const Dance& dance : dances) {
    queue.emplace_back(dance);
  }
  for (const Generator& gen : gens) {
    queue.emplace_back(gen);
  }
  return queue;
}

}  // namespace

ParallelPlan plan_parallel(const StateComplex& cx, const std::string& key,
                           const std::vector<PlanItem>& requested) {
  const StateGraph& sg = cx.graph();
  const Gridworld& g = sg.grid();
  const int start = sg.id_of(key);
  if (start < 0) {
    throw std::invalid_argument("unknown state key \"" + key + "\"");
  }
  State s = sg.state_of(start);
  for (const PlanItem& item : requested) {
    apply(g, s, item);  // throws NotAdmissible with the offending cell
  }

  ParallelPlan plan;
  std::deque<PlanItem> remaining = canonical_queue(requested);
  std::map<int, SafetyTable> cache;

  while (!remaining.empty()) {
    const int here = sg.id_of(s.key());
    if (here < 0) {
      throw std::logic_error("plan execution left the explored state graph");
    }
    auto [entry, inserted] = cache.try_emplace(here);
    if (inserted) {
      entry->second = safety_table(cx, here);
    }
    const SafetyTable& table = entry->second;

    std::vector<PlanItem> batch;
    std::vector<int> batch_gens;
    std::deque<PlanItem> deferred;
    for (PlanItem& item : remaining) {
      if (!item_admissible(g, s, item)) {
        deferred.push_back(std::move(item));
        continue;
      }
      const bool disjoint =
          std::all_of(batch.begin(), batch.end(), [&](const PlanItem& other) {
            return disjoint_support(item, other);
          });
      if (!disjoint) {
        deferred.push_back(std::move(item));
        continue;
      }
      if (const auto* gen = std::get_if<Generator>(&item); gen != nullptr) {
        auto it = std::lower_bound(table.vertices.begin(), table.vertices.end(),
                                   *gen);
        const int id = static_cast<int>(it - table.vertices.begin());
        std::vector<int> candidate = batch_gens;
        candidate.insert(std::upper_bound(candidate.begin(), candidate.end(), id),
                         id);
        const bool unsafe =
            candidate.size() >= 2 &&
            std::any_of(table.empty_sets.begin(), table.empty_sets.end(),
                        [&](const std::vector<int>& empty) {
                          return std::includes(empty.begin(), empty.end(),
                                               candidate.begin(),
                                               candidate.end());
                        });
        if (unsafe) {
          deferred.push_back(std::move(item));
          continue;
        }
        batch_gens = std::move(candidate);
      }
      batch.push_back(std::move(item));
    }
    if (batch.empty()) {
      throw PlanError("request " + describe(deferred.front()) +
                      " is not admissible when its batch executes");
    }
    s = execute_batch(g, s, batch);
    plan.batches.push_back(std::move(batch));
    remaining = std::move(deferred);
  }
  return plan;
}

State execute_batch(const Gridworld& g, const State& s,
                    const std::vector<PlanItem>& batch) {
  for (size_t i = 0; i < batch.size(); ++i) {
    for (size_t j = i + 1; j < batch.size(); ++j) {
      if (!disjoint_support(batch[i], batch[j])) {
        throw std::invalid_argument("batch items " + describe(batch[i]) +
                                    " and " + describe(batch[j]) + " overlap");
      }
    }
  }
  State result = s;
  for (const PlanItem& item : batch) {
    result = apply(g, result, item);
  }
  return result;
}

State execute_plan(const Gridworld& g, const State& s, const ParallelPlan& plan) {
  State result = s;
  for (const auto& batch : plan.batches) {
    result = execute_batch(g, result, batch);
  }
  return result;
}

}  // namespace gridcx
