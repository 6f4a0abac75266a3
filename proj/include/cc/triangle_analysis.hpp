#pragma once

#include <array>
#include <string>

#include "cc/rounding.hpp"
#include "cc/signed_graph.hpp"

namespace cc {

// Sign vector of a labelled triple {u,v,w}; each entry is the sign of the
// edge opposite the named vertex, listed as (vw, uw, uv).
struct TriangleSignature {
  Sign vw = Sign::positive;
  Sign uw = Sign::positive;
  Sign uv = Sign::positive;
  bool operator==(const TriangleSignature&) const = default;
};

// scan order: index bit 2 = vw, bit 1 = uw, bit 0 = uv, set bit = negative,
// so index 0 is +++ and index 7 is ---
std::array<TriangleSignature, 8> all_signatures();
int signature_index(const TriangleSignature& sig);
std::string signature_name(const TriangleSignature& sig);  // e.g. "+--"

// edge lengths of the triple: x = x_vw, y = x_uw, z = x_uv
struct TriangleLengths {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// all three in [0,1] and pairwise triangle inequalities within tol
bool lengths_valid(const TriangleLengths& l, double tol = 1e-12);

enum class Pivot { u, v, w };

// Probability that the edge opposite `pivot` ends up violated when `pivot` is
// chosen, under independent joins with probability 1 - f(length): a positive
// edge pays f1 + f2 - 2*f1*f2 (exactly one endpoint joins), a negative edge
// pays (1-f1)*(1-f2) (both join).
double pivot_cost(const TriangleSignature& sig, const TriangleLengths& l,
                  Pivot pivot, const RoundingFunctions& fns);

// Fractional charge assigned to that edge in the same event: its objective
// contribution (length on a positive edge, 1 - length on a negative one)
// scaled by 1 - f1*f2, the probability that at least one endpoint joins.
double pivot_lp(const TriangleSignature& sig, const TriangleLengths& l,
                Pivot pivot, const RoundingFunctions& fns);

// sums of the three pivot terms
double alg_sigma(const TriangleSignature& sig, const TriangleLengths& l,
                 const RoundingFunctions& fns);
double lp_sigma(const TriangleSignature& sig, const TriangleLengths& l,
                const RoundingFunctions& fns);

// points with lp at or below this floor are excluded from ratio reporting
inline constexpr double kRatioLpFloor = 1e-9;

struct ScanRecord {
  TriangleSignature sig;
  // argmax of alg - rho*lp, ties to the lexicographically least (x,y,z)
  TriangleLengths at;
  double alg = 0.0;
  double lp = 0.0;
  double difference = 0.0;
  // max alg/lp over points with lp > kRatioLpFloor, same tie-break
  bool ratio_defined = false;
  TriangleLengths ratio_at;
  double ratio_alg = 0.0;
  double ratio_lp = 0.0;
  double max_ratio = 0.0;
};

struct ScanResult {
  double rho = 0.0;
  double grid_step = 0.0;
  std::array<ScanRecord, 8> per_signature;
  int worst_signature = 0;  // argmax of difference, ties to the lower index
  double max_difference = 0.0;
  double max_ratio = 0.0;  // over signatures with a defined ratio
};

// Exhaustive scan of alg - rho*lp over all 8 signatures and every grid triple
// (multiples of grid_step, endpoint 1 included) satisfying the triangle
// inequality, followed by a refinement pass at grid_step/10 in a +-grid_step
// neighborhood of each signature's argmax. The parallel and serial paths
// return identical results.
ScanResult scan_ratio(const RoundingFunctions& fns, double rho,
                      double grid_step, bool parallel = true);

}  // namespace cc
