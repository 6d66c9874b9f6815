#include "twins/report.hpp"

namespace twins {

using nlohmann::json;

RunReport make_run_report(const std::string& algorithm, const Graph& g, const TwinPair& result,
                          std::optional<double> bound, json trace, double wall_time_ms) {
  RunReport r;
  r.algorithm = algorithm;
  r.n = g.vertex_count();
  r.e = g.edge_count();
  r.result = make_twin_pair(g, result.a, result.b);  // recount, never trust callers
  r.size = r.result.size();
  r.disc = r.result.disc;
  r.bound = bound;
  if (bound) r.bound_satisfied = static_cast<double>(r.disc) <= *bound + 1e-9;
  r.trace = std::move(trace);
  r.wall_time_ms = wall_time_ms;
  return r;
}

json to_json(const TwinPair& p) {
  return json{{"a", p.a}, {"b", p.b}, {"edges_a", p.edges_a}, {"edges_b", p.edges_b},
              {"disc", p.disc}};
}

json to_json(const RunReport& r) {
  json j{{"algorithm", r.algorithm},
         {"n", r.n},
         {"e", r.e},
         {"a", r.result.a},
         {"b", r.result.b},
         {"size", r.size},
         {"disc", r.disc},
         {"bound", r.bound ? json(*r.bound) : json(nullptr)},
         {"bound_satisfied", r.bound_satisfied ? json(*r.bound_satisfied) : json(nullptr)},
         {"trace", r.trace},
         {"wall_time_ms", r.wall_time_ms}};
  return j;
}

RunReport run_report_from_json(const json& j) {
  RunReport r;
  r.algorithm = j.at("algorithm").get<std::string>();
  r.n = j.at("n").get<int>();
  r.e = j.at("e").get<long long>();
  r.result.a = j.at("a").get<VertexSet>();
  r.result.b = j.at("b").get<VertexSet>();
  r.size = j.at("size").get<long long>();
  r.disc = j.at("disc").get<long long>();
  r.result.disc = r.disc;
  if (!j.at("bound").is_null()) r.bound = j.at("bound").get<double>();
  if (!j.at("bound_satisfied").is_null()) r.bound_satisfied = j.at("bound_satisfied").get<bool>();
  r.trace = j.at("trace");
  r.wall_time_ms = j.at("wall_time_ms").get<double>();
  return r;
}

json to_json(const GenSpec& s) {
  return json{{"family", to_string(s.family)}, {"n", s.n},           {"p", s.p},
              {"m", s.m},                      {"criterion", s.criterion}, {"seed", s.seed}};
}

GenSpec gen_spec_from_json(const json& j) {
  GenSpec s;
  s.family = family_from_string(j.at("family").get<std::string>());
  s.n = j.at("n").get<int>();
  s.p = j.at("p").get<double>();
  s.m = j.at("m").get<int>();
  s.criterion = j.at("criterion").get<int>();
  s.seed = j.at("seed").get<uint64_t>();
  return s;
}

json to_json(const BenchReport& r) {
  json hist = json::object();
  for (const auto& [size, count] : r.size_histogram) hist[std::to_string(size)] = count;
  return json{{"family", to_json(r.family)},
              {"samples", r.samples},
              {"perfect_twin_fraction", r.perfect_twin_fraction},
              {"size_histogram", hist},
              {"seed", r.seed}};
}

BenchReport bench_report_from_json(const json& j) {
  BenchReport r;
  r.family = gen_spec_from_json(j.at("family"));
  r.samples = j.at("samples").get<int>();
  r.perfect_twin_fraction = j.at("perfect_twin_fraction").get<double>();
  for (const auto& [key, value] : j.at("size_histogram").items())
    r.size_histogram[std::stoi(key)] = value.get<long long>();
  r.seed = j.at("seed").get<uint64_t>();
  return r;
}

json to_json(const AlmostTwinsTrace& t) {
  json blocks = json::array();
  for (const auto& blk : t.blocks)
    blocks.push_back(json{{"a", blk.a}, {"b", blk.b}, {"eps", blk.eps}});
  return json{{"k", t.k},
              {"blocks", blocks},
              {"leftover", t.leftover},
              {"branch", to_string(t.branch)},
              {"bound", t.bound},
              {"achieved_disc", t.achieved_disc}};
}

json to_json(const SparseTrace& t) {
  json matching = json::array();
  for (auto [u, v] : t.matching) matching.push_back(json::array({u, v}));
  return json{{"f", t.f},
              {"x_threshold", t.x_threshold},
              {"l", t.l},
              {"high_set", t.high_set},
              {"matching", matching},
              {"singles", t.singles},
              {"untouched", t.untouched},
              {"gamma", t.gamma},
              {"bound", t.bound},
              {"status", t.status},
              {"reserve_exhausted", t.reserve_exhausted},
              {"not_twins", t.not_twins}};
}

json to_json(const MoveRecord& m) {
  return json{{"x", m.x}, {"y", m.y}, {"to_x_side", m.to_x_side}, {"to_y_side", m.to_y_side}};
}

json to_json(const TraceStep& s) {
  switch (s.kind) {
    case TraceStep::Kind::move:
      return json{{"kind", "move"}, {"move", to_json(s.move)}};
    case TraceStep::Kind::swap_sides:
      return json{{"kind", "swap_sides"}};
    case TraceStep::Kind::color_group: {
      json unc = json::array(), col = json::array();
      for (auto [v, side] : s.uncolor) unc.push_back(json::array({v, std::string(1, side)}));
      for (auto [v, side] : s.color) col.push_back(json::array({v, std::string(1, side)}));
      return json{{"kind", "color_group"}, {"uncolor", unc}, {"color", col}};
    }
  }
  return json::object();
}

json to_json(const GoodTwinsTrace& t) {
  json levels = json::array();
  for (const auto& lvl : t.levels) {
    json steps = json::array();
    for (const auto& s : lvl.steps) steps.push_back(to_json(s));
    levels.push_back(json{{"u", lvl.u},
                          {"removed_leaves", lvl.removed_leaves},
                          {"case", lvl.case_label},
                          {"role_swap", lvl.role_swap},
                          {"steps", steps}});
  }
  return json{{"levels", levels}};
}

GoodTwinsTrace good_twins_trace_from_json(const json& j) {
  GoodTwinsTrace t;
  for (const auto& lvl : j.at("levels")) {
    LevelTrace lt;
    lt.u = lvl.at("u").get<Vertex>();
    lt.removed_leaves = lvl.at("removed_leaves").get<VertexSet>();
    lt.case_label = lvl.at("case").get<std::string>();
    lt.role_swap = lvl.at("role_swap").get<bool>();
    for (const auto& sj : lvl.at("steps")) {
      TraceStep step;
      std::string kind = sj.at("kind").get<std::string>();
      if (kind == "move") {
        step.kind = TraceStep::Kind::move;
        step.move.x = sj.at("move").at("x").get<Vertex>();
        step.move.y = sj.at("move").at("y").get<Vertex>();
        step.move.to_x_side = sj.at("move").at("to_x_side").get<VertexSet>();
        step.move.to_y_side = sj.at("move").at("to_y_side").get<VertexSet>();
      } else if (kind == "swap_sides") {
        step.kind = TraceStep::Kind::swap_sides;
      } else {
        step.kind = TraceStep::Kind::color_group;
        for (const auto& e : sj.at("uncolor"))
          step.uncolor.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<std::string>()[0]);
        for (const auto& e : sj.at("color"))
          step.color.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<std::string>()[0]);
      }
      lt.steps.push_back(std::move(step));
    }
    t.levels.push_back(std::move(lt));
  }
  return t;
}

json to_json(const AssemblyTrace& t) {
  json iso = json::array();
  for (auto [u, v] : t.isolated_edges) iso.push_back(json::array({u, v}));
  return json{{"isolated_edges", iso},
              {"s1", t.s1},
              {"s2", t.s2},
              {"s3", t.s3},
              {"case_taken", t.case_taken},
              {"dropped", t.dropped},
              {"good_twins", to_json(t.good_trace)}};
}

}  // namespace twins
