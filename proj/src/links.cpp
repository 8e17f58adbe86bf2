#include "gridcx/links.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace gridcx {

namespace {

int vertex_index(const std::vector<Generator>& vertices, const Generator& gen) {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), gen);
  if (it == vertices.end() || *it != gen) {
    throw std::logic_error("cube witness is not an admissible generator at its own vertex");
  }
  return static_cast<int>(it - vertices.begin());
}

/** The two circuit moves a dance contributes at the agent's current corner. */
std::array<Generator, 2> dance_link_moves(const Gridworld& g, const State& s,
                                          const Dance& dance) {
  const int corner = dance_corner(g, s, dance);
  const auto cells = dance.cells();
  return {make_move(cells[static_cast<size_t>(corner)],
                    cells[static_cast<size_t>((corner + 1) % 4)]),
          make_move(cells[static_cast<size_t>((corner + 3) % 4)],
                    cells[static_cast<size_t>(corner)])};
}

}  // namespace

bool LinkComplex::has_simplex(const std::vector<int>& sorted_ids) const {
  const int dim = static_cast<int>(sorted_ids.size()) - 1;
  if (dim == 0) {
    return sorted_ids[0] >= 0 && sorted_ids[0] < static_cast<int>(vertices.size());
  }
  if (dim < 0 || dim > cap) {
    return false;
  }
  const auto& level = simplices[static_cast<size_t>(dim - 1)];
  return std::binary_search(level.begin(), level.end(), sorted_ids);
}

LinkComplex build_link(const StateComplex& cx, int v) {
  const StateGraph& sg = cx.graph();
  if (cx.max_dim() < 4) {
    throw std::invalid_argument(
        "link construction requires a complex built with max_dim >= 4");
  }
  if (v < 0 || v >= sg.vertex_count()) {
    throw std::invalid_argument("unknown vertex id " + std::to_string(v));
  }

  LinkComplex lk;
  lk.base = v;
  lk.key = sg.key_of(v);
  const State s = sg.state_of(v);
  lk.vertices = enumerate_generators(sg.grid(), s);
  lk.cap = std::min(cx.max_dim() - 1, 5);
  lk.simplices.assign(static_cast<size_t>(lk.cap), {});

  std::vector<std::set<std::vector<int>>> found(static_cast<size_t>(lk.cap));
  for (int cube_idx : cx.cubes_at(v)) {
    const Cube& cube = cx.cubes()[static_cast<size_t>(cube_idx)];
    const int dim = cube.dim - 1;
    if (dim < 1 || dim > lk.cap) {
      continue;
    }
    std::vector<int> ids;
    ids.reserve(static_cast<size_t>(cube.dim));
    for (const Generator& gen : cube.gens) {
      ids.push_back(vertex_index(lk.vertices, gen));
    }
    for (const Dance& dance : cube.dances) {
      for (const Generator& gen : dance_link_moves(sg.grid(), s, dance)) {
        ids.push_back(vertex_index(lk.vertices, gen));
      }
    }
    std::sort(ids.begin(), ids.end());
    found[static_cast<size_t>(dim - 1)].insert(std::move(ids));
  }
  for (int d = 1; d <= lk.cap; ++d) {
    auto& level = lk.simplices[static_cast<size_t>(d - 1)];
    level.assign(found[static_cast<size_t>(d - 1)].begin(),
                 found[static_cast<size_t>(d - 1)].end());
  }
  return lk;
}

LinkComplex build_link(const StateComplex& cx, const std::string& key) {
  const int v = cx.graph().id_of(key);
  if (v < 0) {
    throw std::invalid_argument("unknown vertex key \"" + key + "\"");
  }
  return build_link(cx, v);
}

DefectReport check_link(const LinkComplex& lk, bool audit) {
  if (audit && lk.cap < 5) {
    throw std::invalid_argument(
        "audit requires a complex built with max_dim >= 6");
  }

  DefectReport report;
  report.vertex = lk.base;
  report.key = lk.key;
  report.audited = audit;
  report.dim3_limited = lk.key.find(kObject) != std::string::npos;

  const int nv = static_cast<int>(lk.vertices.size());
  std::vector<std::vector<char>> adj(static_cast<size_t>(nv),
                                     std::vector<char>(static_cast<size_t>(nv), 0));
  if (lk.cap >= 1) {
    for (const auto& edge : lk.of_dim(1)) {
      adj[static_cast<size_t>(edge[0])][static_cast<size_t>(edge[1])] = 1;
      adj[static_cast<size_t>(edge[1])][static_cast<size_t>(edge[0])] = 1;
    }
  }

  const size_t max_clique = audit ? 6 : 4;
  std::vector<int> clique;
  std::vector<int> face;

  // A clique is an empty simplex when every proper face one dimension down
  // is present in the link but the clique itself is not.
  auto classify = [&]() {
    if (lk.has_simplex(clique)) {
      return;
    }
    const size_t size = clique.size();
    if (size > 3) {
      for (size_t omit = 0; omit < size; ++omit) {
        face.clear();
        for (size_t i = 0; i < size; ++i) {
          if (i != omit) {
            face.push_back(clique[i]);
          }
        }
        if (!lk.has_simplex(face)) {
          return;
        }
      }
    }
    switch (size) {
      case 3:
        report.empty_two.push_back({clique[0], clique[1], clique[2]});
        break;
      case 4:
        report.empty_three.push_back({clique[0], clique[1], clique[2], clique[3]});
        break;
      case 5:
        ++report.audit_empty_4;
        break;
      default:
        ++report.audit_empty_5;
        break;
    }
  };

  auto extend = [&](auto&& self, const std::vector<int>& cands) -> void {
    for (size_t idx = 0; idx < cands.size(); ++idx) {
      const int w = cands[idx];
      clique.push_back(w);
      if (clique.size() >= 3) {
        classify();
      }
      if (clique.size() < max_clique) {
        std::vector<int> next;
        for (size_t j = idx + 1; j < cands.size(); ++j) {
          if (adj[static_cast<size_t>(w)][static_cast<size_t>(cands[j])]) {
            next.push_back(cands[j]);
          }
        }
        if (!next.empty()) {
          self(self, next);
        }
      }
      clique.pop_back();
    }
  };

  for (int v = 0; v < nv; ++v) {
    clique.assign(1, v);
    std::vector<int> cands;
    for (int w = v + 1; w < nv; ++w) {
      if (adj[static_cast<size_t>(v)][static_cast<size_t>(w)]) {
        cands.push_back(w);
      }
    }
    extend(extend, cands);
  }

  report.failure_count = report.empty_two.size() + report.empty_three.size();
  report.npc = report.failure_count == 0;
  return report;
}

namespace {

Cell diagonal_opposite(const Dance& dance, int corner) {
  return dance.cells()[static_cast<size_t>((corner + 2) % 4)];
}

void push_hit(std::vector<PatternHit>& hits,
              std::set<std::pair<int, std::vector<Cell>>>& seen, PatternHit hit) {
  std::sort(hit.cells.begin(), hit.cells.end());
  auto mark = std::make_pair(static_cast<int>(hit.kind), hit.cells);
  if (seen.insert(std::move(mark)).second) {
    hits.push_back(std::move(hit));
  }
}

}  // namespace

std::vector<PatternHit> pattern_scan(const Gridworld& g, const State& s) {
  if (object_count(s) > 0) {
    throw std::invalid_argument("pattern scan requires an agent-only state");
  }

  std::vector<PatternHit> hits;
  std::set<std::pair<int, std::vector<Cell>>> seen;

  struct ActiveDance {
    Dance dance;
    int corner = 0;
    Cell agent;
    Cell opposite;
  };
  std::vector<ActiveDance> active;
  for (const Dance& dance : enumerate_dances(g, s)) {
    ActiveDance entry;
    entry.dance = dance;
    entry.corner = dance_corner(g, s, dance);
    entry.agent = dance.cells()[static_cast<size_t>(entry.corner)];
    entry.opposite = diagonal_opposite(dance, entry.corner);
    active.push_back(entry);
  }

  for (const ActiveDance& entry : active) {
    const auto square = entry.dance.cells();
    const int opp_idx = g.index_of(entry.opposite);
    for (int nb : g.neighbors(opp_idx)) {
      const Cell mover = g.cell_at(nb);
      if (std::find(square.begin(), square.end(), mover) != square.end()) {
        continue;
      }
      if (s.at(nb) != kAgent) {
        continue;
      }
      PatternHit hit;
      hit.kind = PatternKind::Knight;
      hit.dancer = entry.agent;
      hit.dance_anchor = entry.dance.anchor;
      hit.mover = mover;
      hit.conflict = entry.opposite;
      hit.cells.assign(square.begin(), square.end());
      hit.cells.push_back(mover);
      push_hit(hits, seen, std::move(hit));
    }
  }

  for (size_t i = 0; i < active.size(); ++i) {
    for (size_t j = i + 1; j < active.size(); ++j) {
      const auto square_a = active[i].dance.cells();
      const auto square_b = active[j].dance.cells();
      std::vector<Cell> shared;
      for (const Cell& cell : square_a) {
        if (std::find(square_b.begin(), square_b.end(), cell) != square_b.end()) {
          shared.push_back(cell);
        }
      }
      if (shared.size() != 1 || shared[0] != active[i].opposite ||
          shared[0] != active[j].opposite) {
        continue;
      }
      PatternHit hit;
      hit.kind = PatternKind::Bishop;
      hit.dancer = active[i].agent;
      hit.dance_anchor = active[i].dance.anchor;
      hit.second_dancer = active[j].agent;
      hit.second_anchor = active[j].dance.anchor;
      hit.conflict = shared[0];
      hit.cells.assign(square_a.begin(), square_a.end());
      for (const Cell& cell : square_b) {
        if (cell != shared[0]) {
          hit.cells.push_back(cell);
        }
      }
      push_hit(hits, seen, std::move(hit));
    }
  }

  return hits;
}

CoverageReport verify_coverage(const Gridworld& g, const State& s0,
                               const CoverageOptions& opts) {
  if (object_count(s0) > 0) {
    throw std::invalid_argument(
        "the defect/pattern equivalence only applies to agent-only gridworlds");
  }
  const StateGraph sg = explore(g, s0, opts.budget);
  const int max_dim = opts.audit ? 6 : 4;
  const StateComplex cx = build_complex(sg, max_dim, true, opts.budget);

  std::vector<int> targets(static_cast<size_t>(sg.vertex_count()));
  std::iota(targets.begin(), targets.end(), 0);
  if (opts.sample > 0 && targets.size() > opts.sample) {
    std::mt19937 rng(opts.seed);
    for (size_t i = 0; i < opts.sample; ++i) {
      const size_t span = targets.size() - i;
      std::swap(targets[i], targets[i + static_cast<size_t>(rng() % span)]);
    }
    targets.resize(opts.sample);
    std::sort(targets.begin(), targets.end());
  }

  CoverageReport report;
  report.audited = opts.audit;
  for (int v : targets) {
    const LinkComplex lk = build_link(cx, v);
    const DefectReport defects = check_link(lk, opts.audit);
    const auto hits = pattern_scan(g, sg.state_of(v));
    const bool failing = !defects.npc;
    const bool witnessed = !hits.empty();
    ++report.states_checked;
    report.failing_states += failing ? 1 : 0;
    report.pattern_states += witnessed ? 1 : 0;
    report.total_failures += defects.failure_count;
    report.audit_extra_defects += defects.audit_empty_4 + defects.audit_empty_5;
    if (failing && !witnessed) {
      ++report.failing_without_hit;
      report.direction_holds = false;
    }
    if (witnessed && !failing) {
      ++report.hits_without_failing;
      report.converse_holds = false;
    }
  }
  return report;
}

}  // namespace gridcx
