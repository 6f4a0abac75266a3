#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cc/exact.hpp"
#include "cc/experiment.hpp"
#include "cc/generators.hpp"
#include "cc/graph_io.hpp"
#include "cc/lp_relaxation.hpp"
#include "cc/triangle_analysis.hpp"

namespace {

// a certification run fails when the scan finds a configuration with
// alg - rho*lp above this threshold
constexpr double kCertifyTol = 1e-9;

struct CliOptions {
  // gen
  std::string generator;
  int n = 0;
  int k = 2;
  double flip_prob = 0.0;
  // shared
  std::uint64_t seed = 0;
  int trials = 1000;
  double grid_step = 0.005;
  double rho = 2.06;
  double feas_tol = 1e-7;
  double opt_tol = 1e-6;
  std::string out_dir;
  bool serial = false;
  // certify
  double fn_a = 0.19;
  double fn_b = 0.5095;
  bool identity = false;
  // file args
  std::string graph_path;
  std::string config_path;
  int max_n = 12;
  bool trials_given = false;
  bool seed_given = false;
};

std::filesystem::path prepare_out_dir(const std::string& dir) {
  std::filesystem::path p(dir);
  std::filesystem::create_directories(p);
  return p;
}

int cmd_gen(const CliOptions& o) {
  cc::SignedGraph g = [&] {
    if (o.generator == "planted") {
      return cc::gen_planted(o.n, o.k, o.flip_prob, o.seed).graph;
    }
    if (o.generator == "gap_star") return cc::gen_gap_star(o.n);
    if (o.generator == "single_negative_edge") {
      return cc::gen_single_negative_edge(o.n);
    }
    throw std::invalid_argument("unknown generator '" + o.generator +
                                "' (planted, gap_star, single_negative_edge)");
  }();
  if (o.out_dir.empty()) {
    cc::write_graph(g, std::cout);
  } else {
    const auto p = prepare_out_dir(o.out_dir) / "instance.graph";
    cc::write_graph_file(g, p.string());
    std::cout << p.string() << "\n";
  }
  return 0;
}

int cmd_solve_lp(const CliOptions& o) {
  const cc::SignedGraph g = cc::read_graph_file(o.graph_path);
  cc::LpOptions lpo;
  lpo.feas_tol = o.feas_tol;
  lpo.opt_tol = o.opt_tol;
  lpo.parallel_separation = !o.serial;
  const cc::LpSolution lp = cc::solve_relaxation(g, lpo);
  std::cout << "n=" << g.size() << " lp_value=" << lp.value
            << " rounds=" << lp.rounds << " pivots=" << lp.pivots
            << " rows=" << lp.constraints_used
            << " max_violation=" << lp.max_violation << "\n";
  if (!o.out_dir.empty()) {
    const auto p = prepare_out_dir(o.out_dir) / "metric.txt";
    std::ofstream out(p);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    cc::write_metric(lp.metric, out);
    std::cout << p.string() << "\n";
  }
  return 0;
}

int cmd_run(CliOptions& o) {
  cc::ExperimentConfig cfg = cc::parse_config_file(o.config_path);
  if (o.seed_given) cfg.seed = o.seed;
  if (o.trials_given) cfg.trials = o.trials;
  const cc::ExperimentReport report =
      cc::run_experiment(cfg, !o.serial, &std::cerr);
  const auto dir = prepare_out_dir(o.out_dir.empty() ? "." : o.out_dir);
  {
    std::ofstream csv(dir / "report.csv");
    if (!csv) throw std::runtime_error("cannot write report.csv");
    cc::write_report_csv(report, csv);
  }
  {
    std::ofstream js(dir / "report.json");
    if (!js) throw std::runtime_error("cannot write report.json");
    cc::write_report_json(report, js);
  }
  for (std::size_t i = 0; i < report.instances.size(); ++i) {
    const cc::InstanceReport& ir = report.instances[i];
    for (const cc::CellStats& cell : ir.cells) {
      std::cout << "instance=" << i << " n=" << ir.n
                << " algo=" << cell.algorithm << " trials=" << cell.trials
                << " mean=" << cell.mean_cost << " se=" << cell.std_error
                << " lp=" << ir.lp_value << " packing=" << ir.packing_value;
      if (ir.has_exact) std::cout << " opt=" << ir.exact_cost;
      std::cout << "\n";
    }
  }
  std::cout << (dir / "report.csv").string() << " "
            << (dir / "report.json").string() << "\n";
  return 0;
}

void lengths_json(nlohmann::ordered_json& obj, const char* key,
                  const cc::TriangleLengths& l) {
  obj[key] = {l.x, l.y, l.z};
}

int cmd_certify(const CliOptions& o) {
  cc::RoundingFunctions fns =
      o.identity ? cc::RoundingFunctions::identity()
                 : cc::RoundingFunctions{o.fn_a, o.fn_b, false};
  const cc::ScanResult scan =
      cc::scan_ratio(fns, o.rho, o.grid_step, !o.serial);
  for (const cc::ScanRecord& rec : scan.per_signature) {
    std::cout << "sig=" << cc::signature_name(rec.sig)
              << " max_diff=" << rec.difference << " at=(" << rec.at.x << ","
              << rec.at.y << "," << rec.at.z << ")";
    if (rec.ratio_defined) {
      std::cout << " max_ratio=" << rec.max_ratio << " at=(" << rec.ratio_at.x
                << "," << rec.ratio_at.y << "," << rec.ratio_at.z << ")";
    }
    std::cout << "\n";
  }
  std::cout << "rho=" << scan.rho << " grid_step=" << scan.grid_step
            << " max_difference=" << scan.max_difference
            << " max_ratio=" << scan.max_ratio << "\n";
  if (!o.out_dir.empty()) {
    nlohmann::ordered_json root;
    root["rho"] = scan.rho;
    root["grid_step"] = scan.grid_step;
    root["identity"] = o.identity;
    root["a"] = fns.a;
    root["b"] = fns.b;
    root["max_difference"] = scan.max_difference;
    root["max_ratio"] = scan.max_ratio;
    root["worst_signature"] =
        cc::signature_name(scan.per_signature[scan.worst_signature].sig);
    root["certified"] = scan.max_difference <= kCertifyTol;
    nlohmann::ordered_json sigs = nlohmann::ordered_json::array();
    for (const cc::ScanRecord& rec : scan.per_signature) {
      nlohmann::ordered_json one;
      one["signature"] = cc::signature_name(rec.sig);
      one["max_difference"] = rec.difference;
      lengths_json(one, "difference_at", rec.at);
      one["alg"] = rec.alg;
      one["lp"] = rec.lp;
      if (rec.ratio_defined) {
        one["max_ratio"] = rec.max_ratio;
        lengths_json(one, "ratio_at", rec.ratio_at);
      } else {
        one["max_ratio"] = nullptr;
      }
      sigs.push_back(std::move(one));
    }
    root["signatures"] = std::move(sigs);
    const auto p = prepare_out_dir(o.out_dir) / "scan.json";
    std::ofstream out(p);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << root.dump(2) << "\n";
    std::cout << p.string() << "\n";
  }
  if (scan.max_difference > kCertifyTol) {
    const cc::ScanRecord& w = scan.per_signature[scan.worst_signature];
    std::cout << "VIOLATION sig=" << cc::signature_name(w.sig) << " at=("
              << w.at.x << "," << w.at.y << "," << w.at.z
              << ") alg=" << w.alg << " lp=" << w.lp
              << " diff=" << w.difference << "\n";
    return 3;
  }
  std::cout << "certified rho=" << scan.rho << "\n";
  return 0;
}

int cmd_gap_demo(const CliOptions& o) {
  cc::LpOptions lpo;
  lpo.feas_tol = o.feas_tol;
  lpo.opt_tol = o.opt_tol;
  lpo.parallel_separation = !o.serial;
  const cc::GapDemoResult r = cc::gap_demo(o.n, lpo);
  std::cout << "leaves=" << r.leaves << " lp_value=" << r.lp_value
            << " opt=" << r.opt_cost
            << (r.opt_exact ? " (brute-forced)" : " (witness-backed)")
            << " ratio=" << r.ratio
            << " bound=" << 2.0 - 2.0 / static_cast<double>(r.leaves)
            << " rounds=" << r.lp_rounds << " pivots=" << r.lp_pivots << "\n";
  return 0;
}

int cmd_exact(const CliOptions& o) {
  const cc::SignedGraph g = cc::read_graph_file(o.graph_path);
  const cc::ExactResult res = cc::exact_opt(g, o.max_n);
  std::cout << "n=" << g.size() << " opt=" << res.cost.total()
            << " positive_mistakes=" << res.cost.positive_mistakes
            << " negative_mistakes=" << res.cost.negative_mistakes
            << " clusters=" << res.clustering.cluster_count() << "\n";
  cc::write_clustering(res.clustering, std::cout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"correlation clustering solver and benchmark suite"};
  app.require_subcommand(1);
  CliOptions o;

  CLI::App* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("generator", o.generator,
                  "planted | gap_star | single_negative_edge")
      ->required();
  gen->add_option("--n", o.n, "vertex count (gap_star: leaf count)")
      ->required();
  gen->add_option("--k", o.k, "planted cluster count");
  gen->add_option("--flip-prob", o.flip_prob, "planted flip probability");
  gen->add_option("--seed", o.seed, "generation seed");
  gen->add_option("--out", o.out_dir, "output directory");

  CLI::App* solve = app.add_subcommand("solve-lp", "solve the relaxation");
  solve->add_option("graph", o.graph_path, "instance file")->required();
  solve->add_option("--feas-tol", o.feas_tol, "triangle violation tolerance");
  solve->add_option("--opt-tol", o.opt_tol, "simplex objective tolerance");
  solve->add_option("--out", o.out_dir, "directory for metric.txt");
  solve->add_flag("--serial", o.serial, "disable parallel separation");

  CLI::App* run = app.add_subcommand("run", "run an experiment config");
  run->add_option("config", o.config_path, "experiment config file")
      ->required();
  run->add_option("--seed", o.seed, "override config seed");
  run->add_option("--trials", o.trials, "override config trials");
  run->add_option("--out", o.out_dir, "report directory (default .)");
  run->add_flag("--serial", o.serial, "run trials serially");

  CLI::App* certify = app.add_subcommand(
      "certify", "grid-certify alg <= rho * lp on single triangles");
  certify->add_option("--rho", o.rho, "ratio to certify");
  certify->add_option("--grid-step", o.grid_step, "scan resolution");
  certify->add_option("--a", o.fn_a, "lower threshold of f_plus");
  certify->add_option("--b", o.fn_b, "upper threshold of f_plus");
  certify->add_flag("--identity", o.identity,
                    "use identity rounding functions");
  certify->add_option("--out", o.out_dir, "directory for scan.json");
  certify->add_flag("--serial", o.serial, "disable parallel scan");

  CLI::App* gap = app.add_subcommand("gap-demo", "integrality gap instance");
  gap->add_option("n", o.n, "leaf count")->required();
  gap->add_option("--feas-tol", o.feas_tol, "triangle violation tolerance");
  gap->add_option("--opt-tol", o.opt_tol, "simplex objective tolerance");
  gap->add_flag("--serial", o.serial, "disable parallel separation");

  CLI::App* exact = app.add_subcommand("exact", "brute-force optimum");
  exact->add_option("graph", o.graph_path, "instance file")->required();
  exact->add_option("--max-n", o.max_n, "refusal threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  o.seed_given = run->count("--seed") > 0;
  o.trials_given = run->count("--trials") > 0;

  try {
    if (gen->parsed()) return cmd_gen(o);
    if (solve->parsed()) return cmd_solve_lp(o);
    if (run->parsed()) return cmd_run(o);
    if (certify->parsed()) return cmd_certify(o);
    if (gap->parsed()) return cmd_gap_demo(o);
    if (exact->parsed()) return cmd_exact(o);
  } catch (const cc::LpBudgetError& e) {
    std::cerr << "error: " << e.what() << " (best value " << e.best_value
              << ", max violation " << e.max_violation << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
