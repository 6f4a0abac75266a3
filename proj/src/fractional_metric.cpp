#include "cc/fractional_metric.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "cc/graph_io.hpp"

namespace cc {

FractionalMetric::FractionalMetric(int n, double fill) : n_(n) {
  if (n < 1) throw std::invalid_argument("FractionalMetric: n must be >= 1");
  data_.assign(static_cast<std::size_t>(n) * n, fill);
  for (int u = 0; u < n; ++u) data_[static_cast<std::size_t>(u) * n + u] = 0.0;
}

void FractionalMetric::check_vertex(int u) const {
  if (u < 0 || u >= n_) {
    throw std::out_of_range("FractionalMetric: vertex " + std::to_string(u) +
                            " out of range [0," + std::to_string(n_) + ")");
  }
}

double FractionalMetric::at(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return data_[static_cast<std::size_t>(u) * n_ + v];
}

void FractionalMetric::set(int u, int v, double x) {
  set_entry(u, v, x);
  set_entry(v, u, x);
}

void FractionalMetric::set_entry(int u, int v, double x) {
  check_vertex(u);
  check_vertex(v);
  data_[static_cast<std::size_t>(u) * n_ + v] = x;
}

MetricCheck verify_metric(const FractionalMetric& m, double tol) {
  MetricCheck r;
  const int n = m.size();
  for (int u = 0; u < n; ++u) {
    const double d = std::fabs(m.at(u, u));
    if (d > r.worst_diagonal) r.worst_diagonal = d;
    if (d > tol) ++r.diagonal_violations;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const double x = m.at(u, v);
      const double b = std::max(-x, x - 1.0);
      if (b > r.worst_bound) r.worst_bound = b;
      if (b > tol) ++r.bound_violations;
      if (u < v) {
        const double s = std::fabs(x - m.at(v, u));
        if (s > r.worst_symmetry) r.worst_symmetry = s;
        if (s > tol) ++r.symmetry_violations;
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (v == u) continue;
      for (int w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        const double viol = m.at(u, w) - m.at(u, v) - m.at(v, w);
        if (viol > r.worst_triangle) {
          r.worst_triangle = viol;
          r.worst_triangle_at = {u, v, w};
        }
        if (viol > tol) ++r.triangle_violations;
      }
    }
  }
  r.feasible = r.worst_bound <= tol && r.worst_symmetry <= tol &&
               r.worst_diagonal <= tol && r.worst_triangle <= tol;
  return r;
}

FractionalMetric metric_from_clustering(const Clustering& c) {
  FractionalMetric m(c.size(), 1.0);
  for (int u = 0; u < c.size(); ++u) {
    for (int v = 0; v < c.size(); ++v) {
      if (c.cluster_of(u) == c.cluster_of(v)) m.set_entry(u, v, 0.0);
    }
  }
  return m;
}

double objective_value(const SignedGraph& g, const FractionalMetric& m) {
  if (g.size() != m.size()) {
    throw std::invalid_argument("objective_value: graph has " +
                                std::to_string(g.size()) + " vertices, metric " +
                                std::to_string(m.size()));
  }
  double total = 0.0;
  for (int v = 1; v < g.size(); ++v) {
    for (int u = 0; u < v; ++u) {
      const double x = m.at(u, v);
      total += g.positive(u, v) ? x : 1.0 - x;
    }
  }
  return total;
}

namespace {

bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

FractionalMetric read_metric(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no)) {
    throw ParseError(1, "missing 'cc-metric <n>' header");
  }
  std::istringstream header(line);
  std::string magic;
  int n = 0;
  if (!(header >> magic >> n) || magic != "cc-metric") {
    throw ParseError(line_no, "expected 'cc-metric <n>' header, got '" + line + "'");
  }
  std::string extra;
  if (header >> extra) {
    throw ParseError(line_no, "unexpected trailing token '" + extra + "'");
  }
  if (n < 1) throw ParseError(line_no, "vertex count must be >= 1");

  FractionalMetric m(n, 0.0);
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  const long long pairs = static_cast<long long>(n) * (n - 1) / 2;
  long long filled = 0;
  while (filled < pairs) {
    if (!next_content_line(in, line, line_no)) {
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (!seen[static_cast<std::size_t>(u) * n + v]) {
            throw ParseError(line_no, "incomplete metric: missing pair {" +
                                          std::to_string(u) + "," +
                                          std::to_string(v) + "}");
          }
        }
      }
    }
    std::istringstream ss(line);
    int u = 0, v = 0;
    double x = 0.0;
    if (!(ss >> u >> v >> x)) {
      throw ParseError(line_no, "expected '<u> <v> <x>', got '" + line + "'");
    }
    if (ss >> extra) {
      throw ParseError(line_no, "unexpected trailing token '" + extra + "'");
    }
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError(line_no, "pair {" + std::to_string(u) + "," +
                                    std::to_string(v) + "} out of range");
    }
    if (u >= v) {
      throw ParseError(line_no, "pair must satisfy u < v, got {" +
                                    std::to_string(u) + "," + std::to_string(v) + "}");
    }
    if (!(x >= 0.0 && x <= 1.0)) {
      throw ParseError(line_no, "value " + std::to_string(x) + " outside [0,1]");
    }
    if (seen[static_cast<std::size_t>(u) * n + v]) {
      throw ParseError(line_no, "duplicate pair {" + std::to_string(u) + "," +
                                    std::to_string(v) + "}");
    }
    seen[static_cast<std::size_t>(u) * n + v] = 1;
    m.set(u, v, x);
    ++filled;
  }
  if (next_content_line(in, line, line_no)) {
    throw ParseError(line_no, "unexpected content after all pairs: '" + line + "'");
  }
  return m;
}

FractionalMetric read_metric_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return read_metric(in);
}

void write_metric(const FractionalMetric& m, std::ostream& out) {
  out << "cc-metric " << m.size() << "\n";
  char buf[64];
  for (int u = 0; u < m.size(); ++u) {
    for (int v = u + 1; v < m.size(); ++v) {
      std::snprintf(buf, sizeof buf, "%.17g", m.at(u, v));
      out << u << " " << v << " " << buf << "\n";
    }
  }
}

void write_metric_file(const FractionalMetric& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_metric(m, out);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace cc
