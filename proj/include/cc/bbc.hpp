#pragma once

#include <cstdint>
#include <vector>

#include "cc/signed_graph.hpp"

namespace cc {

struct BbcParams {
  double delta = 1.0 / 44.0;
  void validate() const;  // requires 0 < delta <= 1/44
};

// v is delta-good with respect to a nonempty vertex set C when it keeps at
// least a (1-delta) fraction of C among its positive neighbors and has at
// most delta*|C| positive neighbors outside C. Counting runs over the whole
// vertex set and N+(v) includes v itself.
bool is_delta_good(const SignedGraph& g, int v, const std::vector<int>& cluster,
                   double delta);

// every member of C is delta-good with respect to C
bool is_delta_clean(const SignedGraph& g, const std::vector<int>& cluster,
                    double delta);

// For each cluster, the delta/3-bad members are identified upfront; a cluster
// where they reach a delta/3 fraction dissolves to singletons, otherwise only
// the bad members leave as singletons. Every surviving non-singleton cluster
// is delta-clean, whatever the input clustering was.
Clustering clean_up(const SignedGraph& g, const Clustering& c, double delta);

// Cautious carving: a seeded-uniform pivot v (drawn among active vertices not
// yet parked as future singletons) grows A = N+(v) among active vertices; the
// least-index 3delta-bad member of A is peeled repeatedly until none remains;
// then every active 7delta-good vertex is absorbed in one batch and A is
// carved off. An empty A parks v as a future singleton instead; a parked
// vertex can still be absorbed by a later batch. Non-singleton clusters come
// out in creation order, parked singletons last.
Clustering bbc_cautious(const SignedGraph& g, const BbcParams& params,
                        std::uint64_t seed);

}  // namespace cc
