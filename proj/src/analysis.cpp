#include "gridcx/analysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace gridcx {

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt state_count(unsigned cells, unsigned agents, unsigned objects) {
  if (agents + objects > cells) {
    throw std::invalid_argument("more agents and objects than open cells");
  }
  return binomial(cells, agents) * binomial(cells - agents, objects);
}

long long round_percent(std::size_t part, std::size_t whole) {
  if (whole == 0) {
    throw std::invalid_argument("percentage of an empty population");
  }
  const unsigned long long num = 200ULL * part + whole;
  return static_cast<long long>(num / (2ULL * whole));
}

long long round_hundredths(std::size_t total, std::size_t count) {
  if (count == 0) {
    throw std::invalid_argument("mean of an empty population");
  }
  const unsigned long long num = 200ULL * total + count;
  return static_cast<long long>(num / (2ULL * count));
}

std::string StatsRow::mean_text() const {
  const long long whole = fail_mean_hundredths / 100;
  const long long frac = fail_mean_hundredths % 100;
  std::string text = std::to_string(whole);
  if (frac == 0) {
    return text;
  }
  text += '.';
  if (frac % 10 == 0) {
    text += static_cast<char>('0' + frac / 10);
  } else {
    text += static_cast<char>('0' + frac / 10);
    text += static_cast<char>('0' + frac % 10);
  }
  return text;
}

std::string StatsRow::csv() const {
  std::string row = std::to_string(agents);
  row += ',';
  row += std::to_string(states);
  row += ',';
  row += std::to_string(pct_npc);
  row += ',';
  row += std::to_string(dances);
  row += ',';
  row += std::to_string(commuting_moves);
  row += ',';
  row += std::to_string(fail_total);
  row += ',';
  row += mean_text();
  row += ',';
  row += std::to_string(fail_max);
  return row;
}

State place_agents(const Gridworld& g, int k) {
  if (k < 0 || k > g.cell_count()) {
    throw std::invalid_argument("cannot place " + std::to_string(k) +
                                " agents on " + std::to_string(g.cell_count()) +
                                " open cells");
  }
  std::string labels(static_cast<size_t>(g.cell_count()), kFloor);
  std::fill(labels.begin(), labels.begin() + k, kAgent);
  return State(std::move(labels));
}

StatsRow table_row(const Gridworld& g, int k, std::size_t budget) {
  const State s0 = place_agents(g, k);
  const StateGraph sg = explore(g, s0, budget);
  const StateComplex cx = build_complex(sg, 4, true, budget);

  StatsRow row;
  row.agents = k;
  row.states = static_cast<std::size_t>(sg.vertex_count());
  row.dances = cx.dance_square_count();
  row.commuting_moves = cx.commuting_square_count();

  std::size_t failing = 0;
  for (int v = 0; v < sg.vertex_count(); ++v) {
    const DefectReport report = check_link(build_link(cx, v));
    if (!report.npc) {
      ++failing;
    }
    row.fail_total += report.failure_count;
    row.fail_max = std::max(row.fail_max, report.failure_count);
  }
  row.pct_npc = round_percent(row.states - failing, row.states);
  row.fail_mean_hundredths = round_hundredths(row.fail_total, row.states);
  return row;
}

namespace {

std::string invert_labels(std::string key) {
  for (char& c : key) {
    if (c == kAgent) {
      c = kFloor;
    } else if (c == kFloor) {
      c = kAgent;
    }
  }
  return key;
}

/** Whether agent<->floor relabelling maps one state graph onto the other. */
bool inversion_maps_graph(const StateGraph& a, const StateGraph& b) {
  if (a.vertex_count() != b.vertex_count() ||
      a.edges().size() != b.edges().size()) {
    return false;
  }
  std::vector<int> image(static_cast<size_t>(a.vertex_count()), -1);
  for (int v = 0; v < a.vertex_count(); ++v) {
    const int w = b.id_of(invert_labels(a.key_of(v)));
    if (w < 0) {
      return false;
    }
    image[static_cast<size_t>(v)] = w;
  }
  std::unordered_set<long long> adjacency;
  const long long n = b.vertex_count();
  for (const Edge& e : b.edges()) {
    const long long lo = std::min(e.u, e.v);
    const long long hi = std::max(e.u, e.v);
    adjacency.insert(lo * n + hi);
  }
  for (const Edge& e : a.edges()) {
    const long long lo = std::min(image[static_cast<size_t>(e.u)],
                                  image[static_cast<size_t>(e.v)]);
    const long long hi = std::max(image[static_cast<size_t>(e.u)],
                                  image[static_cast<size_t>(e.v)]);
    if (adjacency.find(lo * n + hi) == adjacency.end()) {
      return false;
    }
  }
  return true;
}

}  // namespace

SymmetryReport symmetry_report(const Gridworld& g, std::size_t budget) {
  const int n = g.cell_count();
  SymmetryReport report;
  report.cells = n;

  for (int k = 0; k <= n; ++k) {
    const StatsRow stats = table_row(g, k, budget);
    SymmetryRow row;
    row.agents = k;
    row.states = stats.states;
    row.dances = stats.dances;
    row.commuting_moves = stats.commuting_moves;
    row.fail_total = stats.fail_total;
    report.rows.push_back(row);
  }

  for (int k = 0; k <= n; ++k) {
    const SymmetryRow& lhs = report.rows[static_cast<size_t>(k)];
    const SymmetryRow& rhs = report.rows[static_cast<size_t>(n - k)];
    report.states_symmetric &= lhs.states == rhs.states;
    report.commuting_symmetric &= lhs.commuting_moves == rhs.commuting_moves;
    report.failures_symmetric &= lhs.fail_total == rhs.fail_total;
    if (n - 2 - k >= 0) {
      report.dances_shifted_symmetric &=
          lhs.dances == report.rows[static_cast<size_t>(n - 2 - k)].dances;
    }
  }

  for (int k = 0; 2 * k <= n; ++k) {
    const StateGraph low = explore(g, place_agents(g, k), budget);
    const StateGraph high = explore(g, place_agents(g, n - k), budget);
    report.inversion_isomorphism &= inversion_maps_graph(low, high);
  }
  return report;
}

}  // namespace gridcx
