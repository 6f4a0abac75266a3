#include "cc/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "cc/bbc.hpp"
#include "cc/exact.hpp"
#include "cc/generators.hpp"
#include "cc/graph_io.hpp"
#include "cc/packing.hpp"
#include "cc/rng.hpp"
#include "cc/rounding.hpp"

namespace cc {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

long long parse_int(const std::string& value, int line, const std::string& key) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "key '" + key + "': expected integer, got '" +
                               value + "'");
  }
}

std::uint64_t parse_u64(const std::string& value, int line,
                        const std::string& key) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(value, &used);
    if (used != value.size() || value.front() == '-') {
      throw std::invalid_argument("trailing");
    }
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "key '" + key +
                               "': expected unsigned integer, got '" + value +
                               "'");
  }
}

double parse_real(const std::string& value, int line, const std::string& key) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "key '" + key + "': expected number, got '" +
                               value + "'");
  }
}

struct InstanceKeys {
  bool n = false, k = false, flip = false, seed = false, path = false;
};
struct AlgorithmKeys {
  bool delta = false, a = false, b = false;
};

const char* const kKnownAlgorithms[] = {"kwik", "cgw",  "cmsy",
                                        "cmsy-identity", "bbc", "exact"};

bool algorithm_known(const std::string& name) {
  for (const char* k : kKnownAlgorithms) {
    if (name == k) return true;
  }
  return false;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

void validate_instance(const InstanceSpec& spec, const InstanceKeys& keys,
                       std::size_t index) {
  const std::string where = "instance " + std::to_string(index) + ": ";
  if (spec.generator == "planted") {
    require(keys.n && keys.k && keys.flip,
            where + "planted needs n, k and flip_prob");
    require(!keys.path, where + "key 'path' not valid for planted");
    require(spec.n >= 1, where + "n must be at least 1");
    require(spec.k >= 1 && spec.k <= spec.n, where + "k must be in [1, n]");
    require(spec.flip_prob >= 0.0 && spec.flip_prob <= 1.0,
            where + "flip_prob must be in [0, 1]");
  } else if (spec.generator == "gap_star") {
    require(keys.n, where + "gap_star needs n (the leaf count)");
    require(!keys.k && !keys.flip && !keys.seed && !keys.path,
            where + "gap_star accepts only n");
    require(spec.n >= 1, where + "n must be at least 1");
  } else if (spec.generator == "single_negative_edge") {
    require(keys.n, where + "single_negative_edge needs n");
    require(!keys.k && !keys.flip && !keys.seed && !keys.path,
            where + "single_negative_edge accepts only n");
    require(spec.n >= 2, where + "n must be at least 2");
  } else if (spec.generator == "file") {
    require(keys.path, where + "file needs path");
    require(!keys.n && !keys.k && !keys.flip && !keys.seed,
            where + "file accepts only path");
  } else {
    throw std::invalid_argument(where + "unknown generator '" +
                                spec.generator + "'");
  }
}

void validate_algorithm(const AlgorithmSpec& spec, const AlgorithmKeys& keys,
                        std::size_t index) {
  const std::string where = "algorithm " + std::to_string(index) + ": ";
  require(algorithm_known(spec.name),
          where + "unknown algorithm '" + spec.name + "'");
  if (spec.name == "bbc") {
    BbcParams{spec.delta}.validate();
  } else {
    require(!keys.delta, where + "key 'delta' only valid for bbc");
  }
  if (spec.name == "cmsy") {
    RoundingFunctions{spec.a, spec.b, false}.validate();
  } else {
    require(!keys.a && !keys.b, where + "keys 'a'/'b' only valid for cmsy");
  }
}

void validate_config(const ExperimentConfig& cfg) {
  require(cfg.trials >= 1, "config: trials must be at least 1");
  require(cfg.feas_tol > 0.0, "config: feas_tol must be positive");
  require(cfg.opt_tol > 0.0, "config: opt_tol must be positive");
  require(cfg.exact_max_n >= 1, "config: exact_max_n must be at least 1");
  require(!cfg.instances.empty(), "config: at least one [instance] required");
  require(!cfg.algorithms.empty(), "config: at least one [algorithm] required");
  for (std::size_t i = 0; i < cfg.algorithms.size(); ++i) {
    for (std::size_t j = i + 1; j < cfg.algorithms.size(); ++j) {
      require(cfg.algorithms[i].name != cfg.algorithms[j].name,
              "config: duplicate algorithm '" + cfg.algorithms[i].name + "'");
    }
  }
}

}  // namespace

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  enum class Section { none, experiment, instance, algorithm };
  Section section = Section::none;
  bool seen_experiment = false;
  std::vector<InstanceKeys> ikeys;
  std::vector<AlgorithmKeys> akeys;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ParseError(lineno, "unterminated section header '" + line + "'");
      }
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (name == "experiment") {
        if (seen_experiment) {
          throw ParseError(lineno, "duplicate [experiment] section");
        }
        seen_experiment = true;
        section = Section::experiment;
      } else if (name == "instance") {
        cfg.instances.emplace_back();
        ikeys.emplace_back();
        section = Section::instance;
      } else if (name == "algorithm") {
        cfg.algorithms.emplace_back();
        akeys.emplace_back();
        section = Section::algorithm;
      } else {
        throw ParseError(lineno, "unknown section '" + name + "'");
      }
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(lineno, "expected 'key = value', got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ParseError(lineno, "expected 'key = value', got '" + line + "'");
    }
    switch (section) {
      case Section::none:
        throw ParseError(lineno, "key '" + key + "' outside any section");
      case Section::experiment:
        if (key == "trials") {
          cfg.trials = static_cast<int>(parse_int(value, lineno, key));
        } else if (key == "seed") {
          cfg.seed = parse_u64(value, lineno, key);
        } else if (key == "feas_tol") {
          cfg.feas_tol = parse_real(value, lineno, key);
        } else if (key == "opt_tol") {
          cfg.opt_tol = parse_real(value, lineno, key);
        } else if (key == "exact_max_n") {
          cfg.exact_max_n = static_cast<int>(parse_int(value, lineno, key));
        } else {
          throw ParseError(lineno, "unknown [experiment] key '" + key + "'");
        }
        break;
      case Section::instance: {
        InstanceSpec& spec = cfg.instances.back();
        InstanceKeys& seen = ikeys.back();
        if (key == "generator") {
          spec.generator = value;
        } else if (key == "n") {
          spec.n = static_cast<int>(parse_int(value, lineno, key));
          seen.n = true;
        } else if (key == "k") {
          spec.k = static_cast<int>(parse_int(value, lineno, key));
          seen.k = true;
        } else if (key == "flip_prob") {
          spec.flip_prob = parse_real(value, lineno, key);
          seen.flip = true;
        } else if (key == "seed") {
          spec.seed = parse_u64(value, lineno, key);
          spec.seed_set = true;
          seen.seed = true;
        } else if (key == "path") {
          spec.path = value;
          seen.path = true;
        } else {
          throw ParseError(lineno, "unknown [instance] key '" + key + "'");
        }
        break;
      }
      case Section::algorithm: {
        AlgorithmSpec& spec = cfg.algorithms.back();
        AlgorithmKeys& seen = akeys.back();
        if (key == "name") {
          spec.name = value;
        } else if (key == "delta") {
          spec.delta = parse_real(value, lineno, key);
          seen.delta = true;
        } else if (key == "a") {
          spec.a = parse_real(value, lineno, key);
          seen.a = true;
        } else if (key == "b") {
          spec.b = parse_real(value, lineno, key);
          seen.b = true;
        } else {
          throw ParseError(lineno, "unknown [algorithm] key '" + key + "'");
        }
        break;
      }
    }
  }
  for (std::size_t i = 0; i < cfg.instances.size(); ++i) {
    if (cfg.instances[i].generator.empty()) {
      throw std::invalid_argument("instance " + std::to_string(i) +
                                  ": generator missing");
    }
    validate_instance(cfg.instances[i], ikeys[i], i);
  }
  for (std::size_t i = 0; i < cfg.algorithms.size(); ++i) {
    if (cfg.algorithms[i].name.empty()) {
      throw std::invalid_argument("algorithm " + std::to_string(i) +
                                  ": name missing");
    }
    validate_algorithm(cfg.algorithms[i], akeys[i], i);
  }
  validate_config(cfg);
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file: " + path);
  }
  return parse_config(in);
}

namespace {

SignedGraph materialize(const InstanceSpec& spec) {
  if (spec.generator == "planted") {
    return gen_planted(spec.n, spec.k, spec.flip_prob, spec.seed).graph;
  }
  if (spec.generator == "gap_star") return gen_gap_star(spec.n);
  if (spec.generator == "single_negative_edge") {
    return gen_single_negative_edge(spec.n);
  }
  if (spec.generator == "file") return read_graph_file(spec.path);
  throw std::invalid_argument("unknown generator '" + spec.generator + "'");
}

bool needs_metric(const std::string& name) {
  return name == "cgw" || name == "cmsy" || name == "cmsy-identity";
}

std::int64_t one_trial(const SignedGraph& g, const FractionalMetric* metric,
                       const AlgorithmSpec& algo, std::uint64_t seed,
                       double feas_tol) {
  if (algo.name == "kwik") {
    return disagreement_cost(g, kwik_cluster(g, seed)).total();
  }
  if (algo.name == "cgw") {
    return disagreement_cost(g, cgw_round(g, *metric, seed, feas_tol)).total();
  }
  if (algo.name == "cmsy") {
    const RoundingFunctions fns{algo.a, algo.b, false};
    return disagreement_cost(g, cmsy_round(g, *metric, fns, seed, feas_tol))
        .total();
  }
  if (algo.name == "cmsy-identity") {
    return disagreement_cost(g, cmsy_round(g, *metric,
                                           RoundingFunctions::identity(), seed,
                                           feas_tol))
        .total();
  }
  if (algo.name == "bbc") {
    return disagreement_cost(g, bbc_cautious(g, BbcParams{algo.delta}, seed))
        .total();
  }
  throw std::logic_error("one_trial: unhandled algorithm " + algo.name);
}

CellStats fold_costs(const std::string& name,
                     const std::vector<std::int64_t>& costs) {
  CellStats cell;
  cell.algorithm = name;
  cell.trials = static_cast<int>(costs.size());
  double sum = 0.0;
  cell.min_cost = costs[0];
  cell.max_cost = costs[0];
  for (std::int64_t c : costs) {
    sum += static_cast<double>(c);
    cell.min_cost = std::min(cell.min_cost, c);
    cell.max_cost = std::max(cell.max_cost, c);
  }
  cell.mean_cost = sum / static_cast<double>(costs.size());
  if (costs.size() > 1) {
    double ss = 0.0;
    for (std::int64_t c : costs) {
      const double d = static_cast<double>(c) - cell.mean_cost;
      ss += d * d;
    }
    const double variance = ss / static_cast<double>(costs.size() - 1);
    cell.std_error =
        std::sqrt(variance / static_cast<double>(costs.size()));
  }
  return cell;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config, bool parallel,
                                std::ostream* log) {
  validate_config(config);
  for (const AlgorithmSpec& a : config.algorithms) {
    require(algorithm_known(a.name), "unknown algorithm '" + a.name + "'");
  }
  using clock = std::chrono::steady_clock;
  ExperimentReport report;
  report.config = config;
  bool want_metric = false;
  for (const AlgorithmSpec& a : config.algorithms) {
    if (needs_metric(a.name)) want_metric = true;
  }
  (void)want_metric;  // the report itself always needs the LP value
  for (std::size_t i = 0; i < config.instances.size(); ++i) {
    const auto t0 = clock::now();
    InstanceSpec spec = config.instances[i];
    if (spec.generator == "planted" && !spec.seed_set) {
      spec.seed = mix_seed(config.seed, static_cast<std::uint64_t>(i));
      spec.seed_set = true;
    }
    const SignedGraph g = materialize(spec);
    InstanceReport ir;
    ir.spec = spec;
    ir.n = g.size();

    LpOptions lpo;
    lpo.feas_tol = config.feas_tol;
    lpo.opt_tol = config.opt_tol;
    lpo.parallel_separation = parallel;
    const LpSolution lp = solve_relaxation(g, lpo);
    ir.lp_value = lp.value;

    const PackingBound packing = packing_lower_bound(g);
    ir.packing_value = packing.value;

    if (g.size() <= config.exact_max_n) {
      ir.has_exact = true;
      ir.exact_cost = exact_opt(g, config.exact_max_n).cost.total();
    }

    for (const AlgorithmSpec& algo : config.algorithms) {
      CellStats cell;
      if (algo.name == "exact") {
        const std::int64_t value =
            ir.has_exact ? ir.exact_cost
                         : exact_opt(g, config.exact_max_n).cost.total();
        cell.algorithm = algo.name;
        cell.trials = 1;
        cell.mean_cost = static_cast<double>(value);
        cell.std_error = 0.0;
        cell.min_cost = value;
        cell.max_cost = value;
      } else {
        std::vector<std::int64_t> costs(
            static_cast<std::size_t>(config.trials), 0);
        const FractionalMetric* metric =
            needs_metric(algo.name) ? &lp.metric : nullptr;
        const int trials = config.trials;
        if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
          for (int t = 0; t < trials; ++t) {
            costs[t] = one_trial(
                g, metric, algo,
                cell_seed(config.seed, i, algo.name,
                          static_cast<std::uint64_t>(t)),
                config.feas_tol);
          }
        } else {
          for (int t = 0; t < trials; ++t) {
            costs[t] = one_trial(
                g, metric, algo,
                cell_seed(config.seed, i, algo.name,
                          static_cast<std::uint64_t>(t)),
                config.feas_tol);
          }
        }
        cell = fold_costs(algo.name, costs);
      }
      if (ir.lp_value > 0.0) {
        cell.has_ratio_vs_lp = true;
        cell.ratio_vs_lp = cell.mean_cost / ir.lp_value;
      }
      if (ir.has_exact && ir.exact_cost > 0) {
        cell.has_ratio_vs_opt = true;
        cell.ratio_vs_opt =
            cell.mean_cost / static_cast<double>(ir.exact_cost);
      }
      ir.cells.push_back(std::move(cell));
    }
    if (log) {
      const double ms = std::chrono::duration<double, std::milli>(
                            clock::now() - t0)
                            .count();
      (*log) << "[instance " << i << "] generator=" << spec.generator
             << " n=" << ir.n << " lp=" << ir.lp_value
             << " packing=" << ir.packing_value;
      if (ir.has_exact) (*log) << " opt=" << ir.exact_cost;
      (*log) << " rounds=" << lp.rounds << " pivots=" << lp.pivots << " ("
             << ms << " ms)\n";
    }
    report.instances.push_back(std::move(ir));
  }
  return report;
}

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool is_planted(const InstanceSpec& spec) { return spec.generator == "planted"; }

}  // namespace

void write_report_csv(const ExperimentReport& report, std::ostream& out) {
  out << "# cc-report v1\n";
  out << "instance,generator,n,k,flip_prob,instance_seed,algorithm,trials,"
         "lp_value,packing_bound,exact_opt,mean_cost,std_error,min_cost,"
         "max_cost,ratio_vs_lp,ratio_vs_opt\n";
  for (std::size_t i = 0; i < report.instances.size(); ++i) {
    const InstanceReport& ir = report.instances[i];
    std::string prefix = std::to_string(i) + "," + ir.spec.generator + "," +
                         std::to_string(ir.n) + ",";
    if (is_planted(ir.spec)) {
      prefix += std::to_string(ir.spec.k) + "," +
                fmt_double(ir.spec.flip_prob) + "," +
                std::to_string(ir.spec.seed);
    } else {
      prefix += ",,";
    }
    for (const CellStats& cell : ir.cells) {
      out << prefix << "," << cell.algorithm << "," << cell.trials << ","
          << fmt_double(ir.lp_value) << "," << fmt_double(ir.packing_value)
          << ",";
      if (ir.has_exact) out << ir.exact_cost;
      out << "," << fmt_double(cell.mean_cost) << ","
          << fmt_double(cell.std_error) << "," << cell.min_cost << ","
          << cell.max_cost << ",";
      if (cell.has_ratio_vs_lp) out << fmt_double(cell.ratio_vs_lp);
      out << ",";
      if (cell.has_ratio_vs_opt) out << fmt_double(cell.ratio_vs_opt);
      out << "\n";
    }
  }
}

void write_report_json(const ExperimentReport& report, std::ostream& out) {
  nlohmann::ordered_json root;
  root["version"] = "cc-report v1";
  root["config"] = {{"trials", report.config.trials},
                    {"seed", report.config.seed},
                    {"feas_tol", report.config.feas_tol},
                    {"opt_tol", report.config.opt_tol},
                    {"exact_max_n", report.config.exact_max_n}};
  nlohmann::ordered_json instances = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < report.instances.size(); ++i) {
    const InstanceReport& ir = report.instances[i];
    nlohmann::ordered_json row;
    row["index"] = i;
    row["generator"] = ir.spec.generator;
    row["n"] = ir.n;
    if (is_planted(ir.spec)) {
      row["k"] = ir.spec.k;
      row["flip_prob"] = ir.spec.flip_prob;
      row["instance_seed"] = ir.spec.seed;
    }
    if (ir.spec.generator == "file") row["path"] = ir.spec.path;
    row["lp_value"] = ir.lp_value;
    row["packing_bound"] = ir.packing_value;
    if (ir.has_exact) {
      row["exact_opt"] = ir.exact_cost;
    } else {
      row["exact_opt"] = nullptr;
    }
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const CellStats& cell : ir.cells) {
      nlohmann::ordered_json c;
      c["name"] = cell.algorithm;
      c["trials"] = cell.trials;
      c["mean_cost"] = cell.mean_cost;
      c["std_error"] = cell.std_error;
      c["min_cost"] = cell.min_cost;
      c["max_cost"] = cell.max_cost;
      if (cell.has_ratio_vs_lp) {
        c["ratio_vs_lp"] = cell.ratio_vs_lp;
      } else {
        c["ratio_vs_lp"] = nullptr;
      }
      if (cell.has_ratio_vs_opt) {
        c["ratio_vs_opt"] = cell.ratio_vs_opt;
      } else {
        c["ratio_vs_opt"] = nullptr;
      }
      cells.push_back(std::move(c));
    }
    row["algorithms"] = std::move(cells);
    instances.push_back(std::move(row));
  }
  root["instances"] = std::move(instances);
  out << root.dump(2) << "\n";
}

GapDemoResult gap_demo(int leaves, const LpOptions& opt) {
  if (leaves < 2) {
    throw std::invalid_argument("gap_demo: need at least 2 leaves");
  }
  const SignedGraph g = gen_gap_star(leaves);
  const LpSolution lp = solve_relaxation(g, opt);
  GapDemoResult r;
  r.leaves = leaves;
  r.lp_value = lp.value;
  r.lp_rounds = lp.rounds;
  r.lp_pivots = lp.pivots;
  if (g.size() <= 12) {
    r.opt_cost = exact_opt(g).cost.total();
    r.opt_exact = true;
  } else {
    // witness: the center keeps one leaf, everything else is a singleton;
    // this costs exactly leaves-1 and no clustering does better
    std::vector<int> labels(static_cast<std::size_t>(g.size()), 0);
    for (int v = 2; v < g.size(); ++v) labels[v] = v - 1;
    r.opt_cost = disagreement_cost(g, Clustering::from_labels(labels)).total();
    r.opt_exact = false;
  }
  r.ratio = static_cast<double>(r.opt_cost) / r.lp_value;
  return r;
}

}  // namespace cc
