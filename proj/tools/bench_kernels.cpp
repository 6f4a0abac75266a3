// Times the parallel kernels against their serial reference paths and checks
// that both produce identical results: the triangle grid scan, the LP
// separation sweep, and the Monte-Carlo trial loop.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cc/experiment.hpp"
#include "cc/generators.hpp"
#include "cc/lp_relaxation.hpp"
#include "cc/rng.hpp"
#include "cc/triangle_analysis.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void report(const std::string& name, double serial_s, double parallel_s,
            bool identical) {
  std::cout << std::left << std::setw(10) << name << " serial "
            << std::setw(9) << serial_s << " s  parallel " << std::setw(9)
            << parallel_s << " s  speedup "
            << (parallel_s > 0 ? serial_s / parallel_s : 0.0) << "x  identical "
            << (identical ? "yes" : "NO") << "\n";
}

bool same_lengths(const cc::TriangleLengths& a, const cc::TriangleLengths& b) {
  return a.x == b.x && a.y == b.y && a.z == b.z;
}

bool same_scan(const cc::ScanResult& a, const cc::ScanResult& b) {
  if (a.max_difference != b.max_difference || a.max_ratio != b.max_ratio ||
      a.worst_signature != b.worst_signature) {
    return false;
  }
  for (int s = 0; s < 8; ++s) {
    const cc::ScanRecord& ra = a.per_signature[s];
    const cc::ScanRecord& rb = b.per_signature[s];
    if (ra.difference != rb.difference || !same_lengths(ra.at, rb.at) ||
        ra.ratio_defined != rb.ratio_defined ||
        ra.max_ratio != rb.max_ratio ||
        (ra.ratio_defined && !same_lengths(ra.ratio_at, rb.ratio_at))) {
      return false;
    }
  }
  return true;
}

bool same_separation(const cc::SeparationResult& a,
                     const cc::SeparationResult& b) {
  if (a.max_violation != b.max_violation || a.cuts.size() != b.cuts.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.cuts.size(); ++i) {
    if (a.cuts[i].id != b.cuts[i].id ||
        a.cuts[i].violation != b.cuts[i].violation) {
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parallel kernels vs serial reference"};
  double step = 0.02;
  int sep_n = 40;
  int trials = 20000;
  std::uint64_t seed = 12345;
  app.add_option("--step", step, "scan grid step");
  app.add_option("--sep-n", sep_n, "separation instance size");
  app.add_option("--trials", trials, "Monte-Carlo trials");
  app.add_option("--seed", seed, "base seed");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  bool all_ok = true;

  {
    const cc::RoundingFunctions fns = cc::RoundingFunctions::quadratic();
    auto t0 = clock_type::now();
    const cc::ScanResult serial = cc::scan_ratio(fns, 2.06, step, false);
    const double ts = seconds_since(t0);
    t0 = clock_type::now();
    const cc::ScanResult parallel = cc::scan_ratio(fns, 2.06, step, true);
    const double tp = seconds_since(t0);
    const bool ok = same_scan(serial, parallel);
    all_ok = all_ok && ok;
    report("scan", ts, tp, ok);
  }

  {
    const cc::SignedGraph g =
        cc::gen_planted(sep_n, 3, 0.3, seed).graph;
    cc::Rng rng(cc::mix_seed(seed, 1));
    std::vector<double> x(g.pair_count());
    for (double& v : x) v = rng.uniform_double();
    auto t0 = clock_type::now();
    const cc::SeparationResult serial =
        cc::separate_triangles(g.size(), x, 1e-7, false);
    const double ts = seconds_since(t0);
    t0 = clock_type::now();
    const cc::SeparationResult parallel =
        cc::separate_triangles(g.size(), x, 1e-7, true);
    const double tp = seconds_since(t0);
    const bool ok = same_separation(serial, parallel);
    all_ok = all_ok && ok;
    report("separate", ts, tp, ok);
  }

  {
    cc::ExperimentConfig cfg;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.instances.push_back(
        {"single_negative_edge", 16, 0, 0.0, 0, false, ""});
    cfg.algorithms.push_back({"kwik", 1.0 / 44.0, 0.19, 0.5095});
    cfg.algorithms.push_back({"bbc", 1.0 / 44.0, 0.19, 0.5095});
    auto t0 = clock_type::now();
    const cc::ExperimentReport serial = cc::run_experiment(cfg, false);
    const double ts = seconds_since(t0);
    t0 = clock_type::now();
    const cc::ExperimentReport parallel = cc::run_experiment(cfg, true);
    const double tp = seconds_since(t0);
    std::ostringstream a, b;
    cc::write_report_csv(serial, a);
    cc::write_report_csv(parallel, b);
    const bool ok = a.str() == b.str();
    all_ok = all_ok && ok;
    report("trials", ts, tp, ok);
  }

  if (!all_ok) {
    std::cerr << "kernel outputs differ between serial and parallel paths\n";
    return 1;
  }
  return 0;
}
