#include "gridcx/export.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace gridcx {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json cell_to_json(const Cell& cell) {
  return ordered_json::array({cell.row, cell.col});
}

Cell cell_from_json(const ordered_json& j) {
  return Cell{j.at(0).get<int>(), j.at(1).get<int>()};
}

ordered_json generator_to_json(const Generator& gen) {
  ordered_json j;
  j["kind"] = gen.kind == GenKind::Move ? "move" : "pushpull";
  ordered_json cells = ordered_json::array();
  for (int i = 0; i < gen.len; ++i) {
    cells.push_back(cell_to_json(gen.cells[static_cast<size_t>(i)]));
  }
  j["cells"] = cells;
  return j;
}

Generator generator_from_json(const ordered_json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const auto& cells = j.at("cells");
  if (kind == "move") {
    return make_move(cell_from_json(cells.at(0)), cell_from_json(cells.at(1)));
  }
  if (kind == "pushpull") {
    return make_pushpull(cell_from_json(cells.at(0)), cell_from_json(cells.at(1)),
                         cell_from_json(cells.at(2)));
  }
  throw std::invalid_argument("unknown generator kind \"" + kind + "\"");
}

ordered_json square_to_json(const Square& sq) {
  ordered_json j;
  j["kind"] = sq.kind == SquareKind::Dance ? "dance" : "commuting";
  j["cycle"] = ordered_json::array({sq.cycle[0], sq.cycle[1], sq.cycle[2], sq.cycle[3]});
  if (sq.kind == SquareKind::Dance) {
    j["anchor"] = cell_to_json(sq.dance.anchor);
  } else {
    j["generators"] =
        ordered_json::array({generator_to_json(sq.gen_a), generator_to_json(sq.gen_b)});
  }
  return j;
}

Square square_from_json(const ordered_json& j) {
  Square sq;
  const auto& cycle = j.at("cycle");
  for (size_t i = 0; i < 4; ++i) {
    sq.cycle[i] = cycle.at(i).get<int>();
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "dance") {
    sq.kind = SquareKind::Dance;
    sq.dance = Dance{cell_from_json(j.at("anchor"))};
  } else if (kind == "commuting") {
    sq.kind = SquareKind::Commuting;
    sq.gen_a = generator_from_json(j.at("generators").at(0));
    sq.gen_b = generator_from_json(j.at("generators").at(1));
  } else {
    throw std::invalid_argument("unknown square kind \"" + kind + "\"");
  }
  return sq;
}

ordered_json cube_to_json(const Cube& cube) {
  ordered_json j;
  j["dim"] = cube.dim;
  j["l"] = cube.l;
  j["m"] = cube.m;
  j["base"] = cube.base;
  j["vertices"] = cube.vertices;
  ordered_json gens = ordered_json::array();
  for (const Generator& gen : cube.gens) {
    gens.push_back(generator_to_json(gen));
  }
  j["generators"] = gens;
  ordered_json dances = ordered_json::array();
  for (const Dance& dance : cube.dances) {
    dances.push_back(cell_to_json(dance.anchor));
  }
  j["dances"] = dances;
  return j;
}

Cube cube_from_json(const ordered_json& j) {
  Cube cube;
  cube.dim = j.at("dim").get<int>();
  cube.l = j.at("l").get<int>();
  cube.m = j.at("m").get<int>();
  cube.base = j.at("base").get<int>();
  cube.vertices = j.at("vertices").get<std::vector<int>>();
  for (const auto& gen : j.at("generators")) {
    cube.gens.push_back(generator_from_json(gen));
  }
  for (const auto& anchor : j.at("dances")) {
    cube.dances.push_back(Dance{cell_from_json(anchor)});
  }
  return cube;
}

ordered_json defect_to_json(const StateComplex& cx, const DefectReport& report) {
  ordered_json j;
  j["vertex"] = report.vertex;
  j["npc"] = report.npc;
  j["dim3_limited"] = report.dim3_limited;
  j["audited"] = report.audited;
  j["failure_count"] = report.failure_count;
  ordered_json verts = ordered_json::array();
  for (const Generator& gen :
       enumerate_generators(cx.graph().grid(), cx.graph().state_of(report.vertex))) {
    verts.push_back(generator_to_json(gen));
  }
  j["link_vertices"] = verts;
  ordered_json e2 = ordered_json::array();
  for (const auto& t : report.empty_two) {
    e2.push_back(ordered_json::array({t[0], t[1], t[2]}));
  }
  j["empty_2"] = e2;
  ordered_json e3 = ordered_json::array();
  for (const auto& q : report.empty_three) {
    e3.push_back(ordered_json::array({q[0], q[1], q[2], q[3]}));
  }
  j["empty_3"] = e3;
  j["audit_empty_4"] = report.audit_empty_4;
  j["audit_empty_5"] = report.audit_empty_5;
  return j;
}

DefectReport defect_from_json(const std::vector<std::string>& keys,
                              const ordered_json& j) {
  DefectReport report;
  report.vertex = j.at("vertex").get<int>();
  if (report.vertex < 0 || report.vertex >= static_cast<int>(keys.size())) {
    throw std::invalid_argument("defect entry references an unknown vertex");
  }
  report.key = keys[static_cast<size_t>(report.vertex)];
  report.npc = j.at("npc").get<bool>();
  report.dim3_limited = j.at("dim3_limited").get<bool>();
  report.audited = j.at("audited").get<bool>();
  report.failure_count = j.at("failure_count").get<std::size_t>();
  for (const auto& t : j.at("empty_2")) {
    report.empty_two.push_back(
        {t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
  }
  for (const auto& q : j.at("empty_3")) {
    report.empty_three.push_back({q.at(0).get<int>(), q.at(1).get<int>(),
                                  q.at(2).get<int>(), q.at(3).get<int>()});
  }
  report.audit_empty_4 = j.at("audit_empty_4").get<std::size_t>();
  report.audit_empty_5 = j.at("audit_empty_5").get<std::size_t>();
  return report;
}

ordered_json stats_to_json(const StatsRow& row) {
  ordered_json j;
  j["agents"] = row.agents;
  j["states"] = row.states;
  j["pct_npc"] = row.pct_npc;
  j["dances"] = row.dances;
  j["commuting_moves"] = row.commuting_moves;
  j["fail_total"] = row.fail_total;
  j["fail_mean_hundredths"] = row.fail_mean_hundredths;
  j["fail_max"] = row.fail_max;
  return j;
}

StatsRow stats_from_json(const ordered_json& j) {
  StatsRow row;
  row.agents = j.at("agents").get<int>();
  row.states = j.at("states").get<std::size_t>();
  row.pct_npc = j.at("pct_npc").get<long long>();
  row.dances = j.at("dances").get<std::size_t>();
  row.commuting_moves = j.at("commuting_moves").get<std::size_t>();
  row.fail_total = j.at("fail_total").get<std::size_t>();
  row.fail_mean_hundredths = j.at("fail_mean_hundredths").get<long long>();
  row.fail_max = j.at("fail_max").get<std::size_t>();
  return row;
}

}  // namespace

ExportBundle make_bundle(StateComplex cx) {
  ExportBundle bundle{std::move(cx), {}, {}};
  for (int v = 0; v < bundle.complex.graph().vertex_count(); ++v) {
    bundle.defects.push_back(check_link(build_link(bundle.complex, v)));
  }
  return bundle;
}

std::string bundle_to_json(const ExportBundle& bundle) {
  const StateComplex& cx = bundle.complex;
  const StateGraph& sg = cx.graph();

  ordered_json j;
  j["format_version"] = 1;
  ordered_json grid;
  grid["width"] = sg.grid().width();
  grid["height"] = sg.grid().height();
  grid["text"] = serialize(sg.grid(), sg.state_of(0));
  j["gridworld"] = grid;
  j["max_cube_dim"] = cx.max_dim();
  j["dances_enabled"] = cx.dances_enabled();
  j["vertices"] = sg.keys();

  ordered_json edges = ordered_json::array();
  for (const Edge& e : sg.edges()) {
    ordered_json entry;
    entry["u"] = e.u;
    entry["v"] = e.v;
    entry["generator"] = generator_to_json(e.gen);
    edges.push_back(entry);
  }
  j["edges"] = edges;

  ordered_json squares = ordered_json::array();
  for (const Square& sq : cx.squares()) {
    squares.push_back(square_to_json(sq));
  }
  j["squares"] = squares;

  ordered_json cubes = ordered_json::array();
  for (const Cube& cube : cx.cubes()) {
    cubes.push_back(cube_to_json(cube));
  }
  j["cubes"] = cubes;

  ordered_json defects = ordered_json::array();
  for (const DefectReport& report : bundle.defects) {
    defects.push_back(defect_to_json(cx, report));
  }
  j["defects"] = defects;

  ordered_json stats = ordered_json::array();
  for (const StatsRow& row : bundle.stats) {
    stats.push_back(stats_to_json(row));
  }
  j["stats"] = stats;

  return j.dump(2) + "\n";
}

ExportBundle bundle_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed bundle JSON: ") + e.what());
  }
  try {
    if (j.at("format_version").get<int>() != 1) {
      throw std::invalid_argument("unsupported bundle format_version");
    }
    Parsed parsed = parse_grid(j.at("gridworld").at("text").get<std::string>());
    const auto keys = j.at("vertices").get<std::vector<std::string>>();
    std::vector<Edge> edges;
    for (const auto& entry : j.at("edges")) {
      Edge e;
      e.u = entry.at("u").get<int>();
      e.v = entry.at("v").get<int>();
      e.gen = generator_from_json(entry.at("generator"));
      edges.push_back(e);
    }
    StateGraph sg = StateGraph::from_parts(parsed.grid, keys, edges);

    std::vector<Square> squares;
    for (const auto& entry : j.at("squares")) {
      squares.push_back(square_from_json(entry));
    }
    std::vector<Cube> cubes;
    for (const auto& entry : j.at("cubes")) {
      cubes.push_back(cube_from_json(entry));
    }
    StateComplex cx = StateComplex::from_parts(
        std::move(sg), j.at("max_cube_dim").get<int>(),
        j.at("dances_enabled").get<bool>(), std::move(squares), std::move(cubes));

    ExportBundle bundle{std::move(cx), {}, {}};
    for (const auto& entry : j.at("defects")) {
      bundle.defects.push_back(defect_from_json(keys, entry));
    }
    for (const auto& entry : j.at("stats")) {
      bundle.stats.push_back(stats_from_json(entry));
    }
    return bundle;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed bundle JSON: ") + e.what());
  }
}

std::string dot_export(const StateGraph& sg, bool color_by_generator) {
  std::ostringstream out;
  out << "graph state_graph {\n";
  for (int v = 0; v < sg.vertex_count(); ++v) {
    out << "  \"" << sg.key_of(v) << "\";\n";
  }
  for (const Edge& e : sg.edges()) {
    out << "  \"" << sg.key_of(e.u) << "\" -- \"" << sg.key_of(e.v) << "\"";
    if (color_by_generator) {
      out << " [color=" << (e.gen.kind == GenKind::Move ? "maroon" : "orange")
          << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string csv_header() {
  return "agents,states,pct_npc,dances,commuting_moves,fail_total,fail_mean,"
         "fail_max";
}

std::string csv_row(const StatsRow& row) { return row.csv(); }

}  // namespace gridcx
