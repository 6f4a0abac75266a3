#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cc/lp_relaxation.hpp"
#include "cc/signed_graph.hpp"

namespace cc {

struct InstanceSpec {
  std::string generator;  // planted | gap_star | single_negative_edge | file
  int n = 0;              // planted: vertices; gap_star: leaves; edge: vertices
  int k = 0;              // planted only
  double flip_prob = 0.0;
  std::uint64_t seed = 0;  // planted generation seed
  bool seed_set = false;   // when false, derived from base seed and index
  std::string path;        // generator == file
};

struct AlgorithmSpec {
  std::string name;           // kwik | cgw | cmsy | cmsy-identity | bbc | exact
  double delta = 1.0 / 44.0;  // bbc only
  double a = 0.19;            // cmsy only
  double b = 0.5095;          // cmsy only
};

struct ExperimentConfig {
  int trials = 1;
  std::uint64_t seed = 0;
  double feas_tol = 1e-7;
  double opt_tol = 1e-6;
  int exact_max_n = 12;  // exact reference computed when n fits
  std::vector<InstanceSpec> instances;
  std::vector<AlgorithmSpec> algorithms;
};

// Config text: '#' comments, blank lines, [experiment] / [instance] /
// [algorithm] section headers, key = value lines. [instance] and [algorithm]
// repeat; every parse error carries its 1-based line number.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);

struct CellStats {
  std::string algorithm;
  int trials = 0;
  double mean_cost = 0.0;
  double std_error = 0.0;
  std::int64_t min_cost = 0;
  std::int64_t max_cost = 0;
  bool has_ratio_vs_lp = false;
  double ratio_vs_lp = 0.0;
  bool has_ratio_vs_opt = false;
  double ratio_vs_opt = 0.0;
};

struct InstanceReport {
  InstanceSpec spec;  // seed resolved
  int n = 0;          // actual vertex count of the materialized graph
  double lp_value = 0.0;
  double packing_value = 0.0;
  bool has_exact = false;
  std::int64_t exact_cost = 0;
  std::vector<CellStats> cells;  // one per configured algorithm, in order
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<InstanceReport> instances;
};

// Executes every (instance, algorithm, trial) cell with the per-cell seed
// cell_seed(config.seed, instance index, algorithm name, trial index). Trials
// run in parallel when requested; the fold over trial indices is fixed, so
// parallel and serial runs produce identical reports. Progress and wall-time
// notes go to `log` (when given), never into the report.
ExperimentReport run_experiment(const ExperimentConfig& config,
                                bool parallel = true,
                                std::ostream* log = nullptr);

// byte-deterministic CSV (header comment `# cc-report v1`) and JSON twin
void write_report_csv(const ExperimentReport& report, std::ostream& out);
void write_report_json(const ExperimentReport& report, std::ostream& out);

struct GapDemoResult {
  int leaves = 0;
  double lp_value = 0.0;
  std::int64_t opt_cost = 0;  // n-1; brute-forced when leaves+1 <= 12
  bool opt_exact = false;     // true when brute-forced
  double ratio = 0.0;         // opt_cost / lp_value
  int lp_rounds = 0;
  std::int64_t lp_pivots = 0;
};

// Star construction with a positive center: its optimum costs exactly
// leaves-1 while the relaxation pays about leaves/2, so the ratio approaches
// 2 from below as the star grows.
GapDemoResult gap_demo(int leaves, const LpOptions& opt = {});

}  // namespace cc
