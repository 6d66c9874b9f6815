#include "twins/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "twins/discrepancy.hpp"
#include "twins/exact_criteria.hpp"
#include "twins/forest.hpp"
#include "twins/generators.hpp"
#include "twins/oracle.hpp"
#include "twins/sparse.hpp"

namespace twins {

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAlgorithm = 1;
constexpr int kExitUsage = 2;

Graph load_graph(const std::string& path, std::istream& in) {
  if (path == "-") return parse_graph(in);
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  return parse_graph(file);
}

VertexSet parse_vertex_list(const std::string& csv) {
  VertexSet out;
  std::istringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

void emit(std::ostream& out, const RunReport& report, const std::string& format) {
  if (format == "text") {
    out << report.algorithm << ": n=" << report.n << " e=" << report.e
        << " size=" << report.size << " disc=" << report.disc;
    if (report.bound) out << " bound=" << *report.bound;
    out << "\n";
    out << "a:";
    for (Vertex v : report.result.a) out << ' ' << v;
    out << "\nb:";
    for (Vertex v : report.result.b) out << ' ' << v;
    out << "\n";
  } else {
    out << to_json(report).dump() << "\n";
  }
}

json criterion_report_json(const CriterionReport& rep) {
  json classes = json::array();
  for (auto [deg, size] : rep.class_sizes) classes.push_back(json::array({deg, size}));
  json pairs = json::array();
  for (auto [v, w] : rep.consecutive_pairs) pairs.push_back(json::array({v, w}));
  return json{{"satisfied", rep.satisfied},
              {"reason", rep.reason},
              {"min_degree", rep.min_degree},
              {"max_degree", rep.max_degree},
              {"missing_degrees", rep.missing_degrees},
              {"class_sizes", classes},
              {"odd_class_count", rep.odd_class_count},
              {"consecutive_pair_count", rep.consecutive_pair_count},
              {"consecutive_pairs", pairs}};
}

}  // namespace

BenchReport bench_gnp(int n, double p, int samples, uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("bench_gnp: samples must be >= 1");
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("bench_gnp: n must be even and >= 2");
  BenchReport rep;
  rep.family = GenSpec{Family::gnp, n, p, 0, 0, seed};
  rep.samples = samples;
  rep.seed = seed;
  SplitMix64 stream(seed);
  std::vector<uint64_t> sample_seeds(samples);
  for (auto& s : sample_seeds) s = stream.next();
  int perfect = 0;
  for (int i = 0; i < samples; ++i) {
    Graph g = gen_gnp(n, p, sample_seeds[i]);
    PerfectTwinsResult res = find_perfect_twins(g);
    if (res.found) {
      ++perfect;
      rep.size_histogram[res.pair.size()]++;
    } else {
      // No perfect split found; record the best valid pair the extraction
      // branch yields, or 0 when even that is unbalanced.
      auto [pair, trace] = almost_twins_extraction(g);
      rep.size_histogram[pair.disc == 0 ? pair.size() : 0]++;
    }
    if (n <= 14) {
      OracleResult oracle = exact_t(g);
      if (res.found && oracle.t != n / 2)
        throw std::logic_error("bench_gnp: perfect twins reported but oracle disagrees");
    }
  }
  rep.perfect_twin_fraction = static_cast<double>(perfect) / samples;
  return rep;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in) {
  CLI::App app{"twins: constructing equal-size vertex sets inducing equally many edges"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

  std::string file = "-";
  std::string a_list, b_list;
  uint64_t seed = 0;
  int cap = 14;
  int gen_n = 0, gen_m = 1, gen_criterion = 1;
  double gen_p = 0.5;
  std::string gen_family = "gnp";
  int bench_n = 20, bench_samples = 100;
  double bench_p = 0.5;

  auto* check_cmd = app.add_subcommand("check", "validate a candidate twin pair");
  check_cmd->add_option("file", file, "edge-list file or - for stdin");
  check_cmd->add_option("--a", a_list, "comma-separated vertex list")->required();
  check_cmd->add_option("--b", b_list, "comma-separated vertex list")->required();

  auto* exact_cmd = app.add_subcommand("exact", "exhaustive oracle for t(G)");
  exact_cmd->add_option("file", file, "edge-list file or - for stdin");
  exact_cmd->add_option("--cap", cap, "refuse graphs with more vertices than this");

  auto* approx_cmd = app.add_subcommand("approx", "almost-twins, both branches");
  approx_cmd->add_option("file", file, "edge-list file or - for stdin");

  auto* sparse_cmd = app.add_subcommand("sparse", "sparse-graph twin pipeline");
  sparse_cmd->add_option("file", file, "edge-list file or - for stdin");

  auto* criteria_cmd = app.add_subcommand("criteria", "perfect-twin criteria and construction");
  criteria_cmd->add_option("file", file, "edge-list file or - for stdin");

  auto* forest_cmd = app.add_subcommand("forest", "twins of size >= ceil(n/2)-1 in a forest");
  forest_cmd->add_option("file", file, "edge-list file or - for stdin");

  auto* gen_cmd = app.add_subcommand("gen", "emit a generated graph as edge-list text");
  gen_cmd->add_option("--family", gen_family, "gnp|star|forest|odd_cliques|criterion");
  gen_cmd->add_option("--n", gen_n, "vertex count");
  gen_cmd->add_option("--p", gen_p, "edge probability for gnp");
  gen_cmd->add_option("--m", gen_m, "clique count for odd_cliques");
  gen_cmd->add_option("--criterion", gen_criterion, "criterion index 1..4");
  gen_cmd->add_option("--seed", seed, "generator seed");

  auto* bench_cmd = app.add_subcommand("bench", "perfect-twin frequency on G(n,p)");
  bench_cmd->add_option("--n", bench_n, "vertex count (even)");
  bench_cmd->add_option("--p", bench_p, "edge probability");
  bench_cmd->add_option("--samples", bench_samples, "sample count");
  bench_cmd->add_option("--seed", seed, "harness seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*check_cmd) {
      Graph g = load_graph(file, in);
      TwinCheck res = check_twins(g, parse_vertex_list(a_list), parse_vertex_list(b_list));
      json violations = json::array();
      for (TwinViolation v : res.violations) violations.push_back(to_string(v));
      if (format == "text") {
        out << (res.valid ? "valid" : "invalid") << "\n";
        for (const auto& v : violations) out << "violation: " << v.get<std::string>() << "\n";
      } else {
        out << json{{"algorithm", "check"}, {"valid", res.valid}, {"violations", violations}}
                   .dump()
            << "\n";
      }
      return kExitOk;
    }
    if (*exact_cmd) {
      Graph g = load_graph(file, in);
      OracleResult res = exact_t(g, cap);
      if (format == "text") {
        out << "t=" << res.t << "\n";
      } else {
        out << json{{"t", res.t}, {"a", res.witness.a}, {"b", res.witness.b}}.dump() << "\n";
      }
      return kExitOk;
    }
    if (*approx_cmd) {
      Graph g = load_graph(file, in);
      Timer timer;
      AlmostTwinsBest best = almost_twins_best(g);
      const AlmostTwinsTrace& chosen = best.chosen == AlmostTwinsBranch::extraction
                                           ? best.extraction
                                           : best.local_search;
      json trace{{"branch", to_string(best.chosen)},
                 {"extraction", to_json(best.extraction)},
                 {"local_search", to_json(best.local_search)}};
      RunReport report = make_run_report("approx", g, best.pair, chosen.bound,
                                         std::move(trace), timer.ms());
      emit(out, report, format);
      return kExitOk;
    }
    if (*sparse_cmd) {
      Graph g = load_graph(file, in);
      Timer timer;
      auto [pair, trace] = sparse_twins(g);
      RunReport report = make_run_report("sparse", g, pair,
                                         trace.bound > 0 ? std::optional<double>(trace.bound)
                                                         : std::nullopt,
                                         to_json(trace), timer.ms());
      emit(out, report, format);
      return trace.not_twins ? kExitAlgorithm : kExitOk;
    }
    if (*criteria_cmd) {
      Graph g = load_graph(file, in);
      Timer timer;
      PerfectTwinsResult res = find_perfect_twins(g);
      json rep = criterion_report_json(res.report);
      rep["algorithm"] = "criteria";
      rep["found"] = res.found;
      rep["method"] = res.method;
      if (res.found) {
        RunReport report = make_run_report("criteria", g, res.pair, 0.0, rep, timer.ms());
        emit(out, report, format);
      } else if (format == "text") {
        out << "no criterion construction found\n";
      } else {
        out << rep.dump() << "\n";
      }
      return kExitOk;
    }
    if (*forest_cmd) {
      Graph g = load_graph(file, in);
      Timer timer;
      auto [pair, trace] = forest_twins(g);
      double bound = (g.vertex_count() + 1) / 2 - 1;
      RunReport report = make_run_report("forest", g, pair, bound, to_json(trace), timer.ms());
      report.bound_satisfied = report.size >= bound;
      emit(out, report, format);
      return kExitOk;
    }
    if (*gen_cmd) {
      GenSpec spec;
      spec.family = family_from_string(gen_family);
      spec.n = gen_n;
      spec.p = gen_p;
      spec.m = gen_m;
      spec.criterion = gen_criterion;
      spec.seed = seed;
      out << format_graph(generate(spec));
      return kExitOk;
    }
    if (*bench_cmd) {
      BenchReport rep = bench_gnp(bench_n, bench_p, bench_samples, seed);
      if (format == "text") {
        out << "perfect_twin_fraction=" << rep.perfect_twin_fraction << "\n";
      } else {
        out << to_json(rep).dump() << "\n";
      }
      return kExitOk;
    }
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitAlgorithm;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitAlgorithm;
  }
  return kExitUsage;
}

}  // namespace twins
