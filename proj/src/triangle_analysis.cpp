#include "cc/triangle_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace cc {

std::array<TriangleSignature, 8> all_signatures() {
  std::array<TriangleSignature, 8> out;
  for (int s = 0; s < 8; ++s) {
    out[s].vw = (s & 4) ? Sign::negative : Sign::positive;
    out[s].uw = (s & 2) ? Sign::negative : Sign::positive;
    out[s].uv = (s & 1) ? Sign::negative : Sign::positive;
  }
  return out;
}

int signature_index(const TriangleSignature& sig) {
  return ((sig.vw == Sign::negative) ? 4 : 0) +
         ((sig.uw == Sign::negative) ? 2 : 0) +
         ((sig.uv == Sign::negative) ? 1 : 0);
}

std::string signature_name(const TriangleSignature& sig) {
  std::string out(3, '+');
  if (sig.vw == Sign::negative) out[0] = '-';
  if (sig.uw == Sign::negative) out[1] = '-';
  if (sig.uv == Sign::negative) out[2] = '-';
  return out;
}

bool lengths_valid(const TriangleLengths& l, double tol) {
  const bool in_box = l.x >= -tol && l.x <= 1.0 + tol && l.y >= -tol &&
                      l.y <= 1.0 + tol && l.z >= -tol && l.z <= 1.0 + tol;
  return in_box && l.x <= l.y + l.z + tol && l.y <= l.x + l.z + tol &&
         l.z <= l.x + l.y + tol;
}

namespace {

inline double charge_cost(bool target_negative, double f1, double f2) {
  return target_negative ? (1.0 - f1) * (1.0 - f2)
                         : f1 + f2 - 2.0 * f1 * f2;
}

inline double charge_lp(bool target_negative, double len, double f1,
                        double f2) {
  const double hit = 1.0 - f1 * f2;
  return target_negative ? (1.0 - len) * hit : len * hit;
}

struct EdgeValues {
  bool x_neg, y_neg, z_neg;
  double fx, fy, fz;  // sign-matched f applied to each edge length
};

EdgeValues edge_values(const TriangleSignature& sig, const TriangleLengths& l,
                       const RoundingFunctions& fns) {
  EdgeValues e;
  e.x_neg = sig.vw == Sign::negative;
  e.y_neg = sig.uw == Sign::negative;
  e.z_neg = sig.uv == Sign::negative;
  e.fx = e.x_neg ? fns.f_minus(l.x) : fns.f_plus(l.x);
  e.fy = e.y_neg ? fns.f_minus(l.y) : fns.f_plus(l.y);
  e.fz = e.z_neg ? fns.f_minus(l.z) : fns.f_plus(l.z);
  return e;
}

// pivot w charges edge uv with witnesses (uw, vw); pivot v charges uw with
// (uv, vw); pivot u charges vw with (uv, uw)
inline double alg_from(const EdgeValues& e, const TriangleLengths&) {
  return charge_cost(e.z_neg, e.fy, e.fx) + charge_cost(e.y_neg, e.fz, e.fx) +
         charge_cost(e.x_neg, e.fz, e.fy);
}

inline double lp_from(const EdgeValues& e, const TriangleLengths& l) {
  return charge_lp(e.z_neg, l.z, e.fy, e.fx) +
         charge_lp(e.y_neg, l.y, e.fz, e.fx) +
         charge_lp(e.x_neg, l.x, e.fz, e.fy);
}

}  // namespace

double pivot_cost(const TriangleSignature& sig, const TriangleLengths& l,
                  Pivot pivot, const RoundingFunctions& fns) {
  const EdgeValues e = edge_values(sig, l, fns);
  switch (pivot) {
    case Pivot::w:
      return charge_cost(e.z_neg, e.fy, e.fx);
    case Pivot::v:
      return charge_cost(e.y_neg, e.fz, e.fx);
    case Pivot::u:
      return charge_cost(e.x_neg, e.fz, e.fy);
  }
  throw std::invalid_argument("pivot_cost: bad pivot");
}

double pivot_lp(const TriangleSignature& sig, const TriangleLengths& l,
                Pivot pivot, const RoundingFunctions& fns) {
  const EdgeValues e = edge_values(sig, l, fns);
  switch (pivot) {
    case Pivot::w:
      return charge_lp(e.z_neg, l.z, e.fy, e.fx);
    case Pivot::v:
      return charge_lp(e.y_neg, l.y, e.fz, e.fx);
    case Pivot::u:
      return charge_lp(e.x_neg, l.x, e.fz, e.fy);
  }
  throw std::invalid_argument("pivot_lp: bad pivot");
}

double alg_sigma(const TriangleSignature& sig, const TriangleLengths& l,
                 const RoundingFunctions& fns) {
  return alg_from(edge_values(sig, l, fns), l);
}

double lp_sigma(const TriangleSignature& sig, const TriangleLengths& l,
                const RoundingFunctions& fns) {
  return lp_from(edge_values(sig, l, fns), l);
}

namespace {

struct PlanePartial {
  bool any = false;
  int iy = 0, iz = 0;
  double alg = 0.0, lp = 0.0, difference = 0.0;
  bool ratio_defined = false;
  int riy = 0, riz = 0;
  double ratio_alg = 0.0, ratio_lp = 0.0, ratio = 0.0;
};

// one (signature, ix) plane: lexicographically least argmax within the plane
PlanePartial scan_plane(const TriangleSignature& sig,
                        const std::vector<double>& grid,
                        const std::vector<double>& fgrid_pos,
                        const std::vector<double>& fgrid_neg, int ix,
                        double rho) {
  const int m = static_cast<int>(grid.size());
  PlanePartial best;
  EdgeValues e;
  e.x_neg = sig.vw == Sign::negative;
  e.y_neg = sig.uw == Sign::negative;
  e.z_neg = sig.uv == Sign::negative;
  TriangleLengths l;
  l.x = grid[ix];
  e.fx = e.x_neg ? fgrid_neg[ix] : fgrid_pos[ix];
  for (int iy = 0; iy < m; ++iy) {
    l.y = grid[iy];
    e.fy = e.y_neg ? fgrid_neg[iy] : fgrid_pos[iy];
    for (int iz = 0; iz < m; ++iz) {
      l.z = grid[iz];
      if (l.x > l.y + l.z + 1e-12 || l.y > l.x + l.z + 1e-12 ||
          l.z > l.x + l.y + 1e-12) {
        continue;
      }
      e.fz = e.z_neg ? fgrid_neg[iz] : fgrid_pos[iz];
      const double alg = alg_from(e, l);
      const double lp = lp_from(e, l);
      const double diff = alg - rho * lp;
      if (!best.any || diff > best.difference) {
        best.any = true;
        best.iy = iy;
        best.iz = iz;
        best.alg = alg;
        best.lp = lp;
        best.difference = diff;
      }
      if (lp > kRatioLpFloor) {
        const double ratio = alg / lp;
        if (!best.ratio_defined || ratio > best.ratio) {
          best.ratio_defined = true;
          best.riy = iy;
          best.riz = iz;
          best.ratio_alg = alg;
          best.ratio_lp = lp;
          best.ratio = ratio;
        }
      }
    }
  }
  return best;
}

void refine_difference(ScanRecord& rec, const RoundingFunctions& fns,
                       double rho, double step) {
  const double fine = step / 10.0;
  const TriangleLengths base = rec.at;
  for (int dx = -10; dx <= 10; ++dx) {
    for (int dy = -10; dy <= 10; ++dy) {
      for (int dz = -10; dz <= 10; ++dz) {
        TriangleLengths l{std::clamp(base.x + fine * dx, 0.0, 1.0),
                          std::clamp(base.y + fine * dy, 0.0, 1.0),
                          std::clamp(base.z + fine * dz, 0.0, 1.0)};
        if (!lengths_valid(l)) continue;
        const double alg = alg_sigma(rec.sig, l, fns);
        const double lp = lp_sigma(rec.sig, l, fns);
        const double diff = alg - rho * lp;
        if (diff > rec.difference) {
          rec.at = l;
          rec.alg = alg;
          rec.lp = lp;
          rec.difference = diff;
        }
      }
    }
  }
}

void refine_ratio(ScanRecord& rec, const RoundingFunctions& fns, double step) {
  if (!rec.ratio_defined) return;
  const double fine = step / 10.0;
  const TriangleLengths base = rec.ratio_at;
  for (int dx = -10; dx <= 10; ++dx) {
    for (int dy = -10; dy <= 10; ++dy) {
      for (int dz = -10; dz <= 10; ++dz) {
        TriangleLengths l{std::clamp(base.x + fine * dx, 0.0, 1.0),
                          std::clamp(base.y + fine * dy, 0.0, 1.0),
                          std::clamp(base.z + fine * dz, 0.0, 1.0)};
        if (!lengths_valid(l)) continue;
        const double alg = alg_sigma(rec.sig, l, fns);
        const double lp = lp_sigma(rec.sig, l, fns);
        if (lp <= kRatioLpFloor) continue;
        const double ratio = alg / lp;
        if (ratio > rec.max_ratio) {
          rec.ratio_at = l;
          rec.ratio_alg = alg;
          rec.ratio_lp = lp;
          rec.max_ratio = ratio;
        }
      }
    }
  }
}

}  // namespace

ScanResult scan_ratio(const RoundingFunctions& fns, double rho,
                      double grid_step, bool parallel) {
  fns.validate();
  if (!(grid_step > 0.0)) {
    throw std::invalid_argument("scan_ratio: grid_step must be positive");
  }
  if (!(rho >= 0.0)) {
    throw std::invalid_argument("scan_ratio: rho must be nonnegative");
  }
  const int m = static_cast<int>(std::ceil(1.0 / grid_step - 1e-12));
  std::vector<double> grid(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) grid[i] = std::min(i * grid_step, 1.0);
  grid[m] = 1.0;
  std::vector<double> fpos(grid.size()), fneg(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    fpos[i] = fns.f_plus(grid[i]);
    fneg[i] = fns.f_minus(grid[i]);
  }

  const std::array<TriangleSignature, 8> sigs = all_signatures();
  const int npoints = m + 1;
  const int ntasks = 8 * npoints;
  std::vector<PlanePartial> partial(static_cast<std::size_t>(ntasks));
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int t = 0; t < ntasks; ++t) {
      partial[t] = scan_plane(sigs[t / npoints], grid, fpos, fneg,
                              t % npoints, rho);
    }
  } else {
    for (int t = 0; t < ntasks; ++t) {
      partial[t] = scan_plane(sigs[t / npoints], grid, fpos, fneg,
                              t % npoints, rho);
    }
  }

  ScanResult out;
  out.rho = rho;
  out.grid_step = grid_step;
  for (int s = 0; s < 8; ++s) {
    ScanRecord rec;
    rec.sig = sigs[s];
    bool any = false;
    for (int ix = 0; ix < npoints; ++ix) {
      const PlanePartial& p = partial[static_cast<std::size_t>(s) * npoints + ix];
      if (!p.any) continue;
      if (!any || p.difference > rec.difference) {
        any = true;
        rec.at = {grid[ix], grid[p.iy], grid[p.iz]};
        rec.alg = p.alg;
        rec.lp = p.lp;
        rec.difference = p.difference;
      }
      if (p.ratio_defined && (!rec.ratio_defined || p.ratio > rec.max_ratio)) {
        rec.ratio_defined = true;
        rec.ratio_at = {grid[ix], grid[p.riy], grid[p.riz]};
        rec.ratio_alg = p.ratio_alg;
        rec.ratio_lp = p.ratio_lp;
        rec.max_ratio = p.ratio;
      }
    }
    if (!any) {
      throw std::logic_error("scan_ratio: empty grid plane");
    }
    refine_difference(rec, fns, rho, grid_step);
    refine_ratio(rec, fns, grid_step);
    out.per_signature[s] = rec;
  }

  out.worst_signature = 0;
  out.max_difference = out.per_signature[0].difference;
  for (int s = 1; s < 8; ++s) {
    if (out.per_signature[s].difference > out.max_difference) {
      out.worst_signature = s;
      out.max_difference = out.per_signature[s].difference;
    }
  }
  bool ratio_any = false;
  for (int s = 0; s < 8; ++s) {
    const ScanRecord& rec = out.per_signature[s];
    if (rec.ratio_defined && (!ratio_any || rec.max_ratio > out.max_ratio)) {
      ratio_any = true;
      out.max_ratio = rec.max_ratio;
    }
  }
  return out;
}

}  // namespace cc
