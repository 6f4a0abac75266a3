#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cc/signed_graph.hpp"

namespace cc {

// parse failure in any of the text formats; line is 1-based
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Graph format: header "cc-graph <n>", then n(n-1)/2 lines "<u> <v> <+|->"
// with u < v, in any order. Blank lines and '#' comments are skipped.
// Every pair must appear exactly once; validation is eager.
SignedGraph read_graph(std::istream& in);
SignedGraph read_graph_file(const std::string& path);
void write_graph(const SignedGraph& g, std::ostream& out);
void write_graph_file(const SignedGraph& g, const std::string& path);

// Clustering format: header "cc-clustering <n> <k>", then n lines
// "<vertex> <cluster-id>"; ids must be dense in [0,k) with every id used.
Clustering read_clustering(std::istream& in);
Clustering read_clustering_file(const std::string& path);
void write_clustering(const Clustering& c, std::ostream& out);
void write_clustering_file(const Clustering& c, const std::string& path);

}  // namespace cc
