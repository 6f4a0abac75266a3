#include "cc/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace cc {

namespace {

// returns false at EOF; skips blank lines and '#' comments
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

[[noreturn]] void fail_trailing(int line_no, std::istringstream& ss) {
  std::string extra;
  ss >> extra;
  throw ParseError(line_no, "unexpected trailing token '" + extra + "'");
}

bool has_trailing(std::istringstream& ss) {
  std::string extra;
  return static_cast<bool>(ss >> extra);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

SignedGraph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no)) {
    throw ParseError(1, "missing 'cc-graph <n>' header");
  }
  std::istringstream header(line);
  std::string magic;
  int n = 0;
  if (!(header >> magic >> n) || magic != "cc-graph") {
    throw ParseError(line_no, "expected 'cc-graph <n>' header, got '" + line + "'");
  }
  if (has_trailing(header)) {
    std::istringstream again(line);
    again >> magic >> n;
    fail_trailing(line_no, again);
  }
  if (n < 1) throw ParseError(line_no, "vertex count must be >= 1");

  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<Sign> labels(pairs, Sign::positive);
  std::vector<char> seen(pairs, 0);
  std::size_t filled = 0;
  SignedGraph index_helper(n);  // for pair_index arithmetic

  while (filled < pairs) {
    if (!next_content_line(in, line, line_no)) {
      for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
          if (!seen[index_helper.pair_index(u, v)]) {
            throw ParseError(line_no, "incomplete graph: missing pair {" +
                                          std::to_string(u) + "," +
                                          std::to_string(v) + "} (" +
                                          std::to_string(pairs - filled) +
                                          " pair(s) absent)");
          }
        }
      }
    }
    std::istringstream ss(line);
    int u = 0, v = 0;
    std::string sign;
    if (!(ss >> u >> v >> sign)) {
      throw ParseError(line_no, "expected '<u> <v> <+|->', got '" + line + "'");
    }
    if (has_trailing(ss)) {
      std::istringstream again(line);
      again >> u >> v >> sign;
      fail_trailing(line_no, again);
    }
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError(line_no, "pair {" + std::to_string(u) + "," +
                                    std::to_string(v) + "} out of range [0," +
                                    std::to_string(n) + ")");
    }
    if (u >= v) {
      throw ParseError(line_no, "pair must satisfy u < v, got {" +
                                    std::to_string(u) + "," + std::to_string(v) + "}");
    }
    if (sign != "+" && sign != "-") {
      throw ParseError(line_no, "sign must be '+' or '-', got '" + sign + "'");
    }
    const std::size_t idx = index_helper.pair_index(u, v);
    if (seen[idx]) {
      throw ParseError(line_no, "duplicate pair {" + std::to_string(u) + "," +
                                    std::to_string(v) + "}");
    }
    seen[idx] = 1;
    labels[idx] = sign == "+" ? Sign::positive : Sign::negative;
    ++filled;
  }
  if (next_content_line(in, line, line_no)) {
    throw ParseError(line_no, "unexpected content after all " +
                                  std::to_string(pairs) + " pairs: '" + line + "'");
  }
  return SignedGraph(n, std::move(labels));
}

SignedGraph read_graph_file(const std::string& path) {
  auto in = open_input(path);
  return read_graph(in);
}

void write_graph(const SignedGraph& g, std::ostream& out) {
  out << "cc-graph " << g.size() << "\n";
  for (int u = 0; u < g.size(); ++u) {
    for (int v = u + 1; v < g.size(); ++v) {
      out << u << " " << v << " " << (g.positive(u, v) ? "+" : "-") << "\n";
    }
  }
}

void write_graph_file(const SignedGraph& g, const std::string& path) {
  auto out = open_output(path);
  write_graph(g, out);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

Clustering read_clustering(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no)) {
    throw ParseError(1, "missing 'cc-clustering <n> <k>' header");
  }
  std::istringstream header(line);
  std::string magic;
  int n = 0, k = 0;
  if (!(header >> magic >> n >> k) || magic != "cc-clustering") {
    throw ParseError(line_no,
                     "expected 'cc-clustering <n> <k>' header, got '" + line + "'");
  }
  if (has_trailing(header)) {
    std::istringstream again(line);
    again >> magic >> n >> k;
    fail_trailing(line_no, again);
  }
  if (n < 1) throw ParseError(line_no, "vertex count must be >= 1");
  if (k < 1 || k > n) throw ParseError(line_no, "cluster count must be in [1,n]");

  std::vector<int> assignment(static_cast<std::size_t>(n), -1);
  int filled = 0;
  while (filled < n) {
    if (!next_content_line(in, line, line_no)) {
      for (int v = 0; v < n; ++v) {
        if (assignment[v] < 0) {
          throw ParseError(line_no, "missing assignment for vertex " +
                                        std::to_string(v));
        }
      }
    }
    std::istringstream ss(line);
    int v = 0, c = 0;
    if (!(ss >> v >> c)) {
      throw ParseError(line_no, "expected '<vertex> <cluster-id>', got '" + line + "'");
    }
    if (has_trailing(ss)) {
      std::istringstream again(line);
      again >> v >> c;
      fail_trailing(line_no, again);
    }
    if (v < 0 || v >= n) {
      throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
    }
    if (c < 0 || c >= k) {
      throw ParseError(line_no, "cluster id " + std::to_string(c) +
                                    " out of range [0," + std::to_string(k) + ")");
    }
    if (assignment[v] >= 0) {
      throw ParseError(line_no, "vertex " + std::to_string(v) + " assigned twice");
    }
    assignment[v] = c;
    ++filled;
  }
  if (next_content_line(in, line, line_no)) {
    throw ParseError(line_no, "unexpected content after all assignments: '" + line + "'");
  }
  try {
    return Clustering(std::move(assignment), k);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

Clustering read_clustering_file(const std::string& path) {
  auto in = open_input(path);
  return read_clustering(in);
}

void write_clustering(const Clustering& c, std::ostream& out) {
  out << "cc-clustering " << c.size() << " " << c.cluster_count() << "\n";
  for (int v = 0; v < c.size(); ++v) out << v << " " << c.cluster_of(v) << "\n";
}

void write_clustering_file(const Clustering& c, const std::string& path) {
  auto out = open_output(path);
  write_clustering(c, out);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace cc
