#include "cc/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cc {

namespace {

constexpr double kPivTol = 1e-11;    // smallest pivot magnitude taken via update
constexpr double kDegenTol = 1e-12;  // step below this counts as degenerate
constexpr double kInf = std::numeric_limits<double>::infinity();

enum VarState : int { kAtLower = 0, kAtUpper = 1, kBasic = 2 };

struct Leaving {
  double ratio = kInf;
  double magnitude = 0.0;  // |pivot| used for stability preference
  long long id = -1;       // least-index tie-break key
  int kind = -1;           // 0 flip, 1 basic structural, 2 non-tight row slack
  int pos = -1;            // J position (kind 1) or row index (kind 2)
};

struct Solver {
  const std::vector<double>& cost;
  const std::vector<double>& lower;
  const std::vector<double>& upper;
  const std::vector<SimplexRow>& rows;
  const std::vector<std::vector<int>>& col_rows;
  const SimplexOptions& opt;

  int nvars;
  int nrows;

  std::vector<int> status;     // per structural variable
  std::vector<double> xval;    // current point
  std::vector<char> tight;     // per row: slack nonbasic (at zero)
  std::vector<int> S;          // tight rows, kernel row order
  std::vector<int> J;          // basic structural columns, kernel column order
  std::vector<int> pos_in_S;   // row -> kernel position or -1
  std::vector<int> pos_in_J;   // var -> kernel position or -1
  std::vector<double> Minv;    // k*k row-major inverse of kernel G[S, J]
  std::vector<double> rowval;  // a_i . x per row
  std::vector<double> z;       // basic structural values, aligned with J
  std::vector<double> y;       // duals on tight rows, aligned with S
  std::vector<double> acc;     // scatter buffer: sum_s y_s * a_{s,j}

  std::int64_t pivots = 0;
  int since_refactor = 0;
  int stall = 0;
  bool bland = false;
  bool just_refactored = false;

  int k() const { return static_cast<int>(J.size()); }

  double coef_in_row(int row, int var) const {
    for (const auto& [c, a] : rows[row].terms) {
      if (c == var) return a;
    }
    return 0.0;
  }

  void refactor() {
    const int kk = k();
    std::vector<double> m(static_cast<std::size_t>(kk) * kk, 0.0);
    for (int r = 0; r < kk; ++r) {
      for (const auto& [c, a] : rows[S[r]].terms) {
        const int p = pos_in_J[c];
        if (p >= 0) m[static_cast<std::size_t>(r) * kk + p] = a;
      }
    }
    // Gauss-Jordan with partial pivoting into the identity
    std::vector<double> inv(static_cast<std::size_t>(kk) * kk, 0.0);
    for (int i = 0; i < kk; ++i) inv[static_cast<std::size_t>(i) * kk + i] = 1.0;
    for (int col = 0; col < kk; ++col) {
      int piv = col;
      double best = std::fabs(m[static_cast<std::size_t>(col) * kk + col]);
      for (int r = col + 1; r < kk; ++r) {
        const double cand = std::fabs(m[static_cast<std::size_t>(r) * kk + col]);
        if (cand > best) {
          best = cand;
          piv = r;
        }
      }
      if (best < 1e-12) throw std::runtime_error("simplex: singular kernel");
      if (piv != col) {
        for (int c = 0; c < kk; ++c) {
          std::swap(m[static_cast<std::size_t>(piv) * kk + c],
                    m[static_cast<std::size_t>(col) * kk + c]);
          std::swap(inv[static_cast<std::size_t>(piv) * kk + c],
                    inv[static_cast<std::size_t>(col) * kk + c]);
        }
      }
      const double scale = 1.0 / m[static_cast<std::size_t>(col) * kk + col];
      for (int c = 0; c < kk; ++c) {
        m[static_cast<std::size_t>(col) * kk + c] *= scale;
        inv[static_cast<std::size_t>(col) * kk + c] *= scale;
      }
      for (int r = 0; r < kk; ++r) {
        if (r == col) continue;
        const double f = m[static_cast<std::size_t>(r) * kk + col];
        if (f == 0.0) continue;
        for (int c = 0; c < kk; ++c) {
          m[static_cast<std::size_t>(r) * kk + c] -=
              f * m[static_cast<std::size_t>(col) * kk + c];
          inv[static_cast<std::size_t>(r) * kk + c] -=
              f * inv[static_cast<std::size_t>(col) * kk + c];
        }
      }
    }
    Minv = std::move(inv);
    since_refactor = 0;
    just_refactored = true;
  }

  // recompute basic values, row activities and duals from the kernel inverse
  void recompute() {
    const int kk = k();
    z.assign(kk, 0.0);
    if (kk > 0) {
      std::vector<double> rhs_s(kk, 0.0);
      for (int r = 0; r < kk; ++r) {
        double v = rows[S[r]].rhs;
        for (const auto& [c, a] : rows[S[r]].terms) {
          if (status[c] != kBasic) v -= a * xval[c];
        }
        rhs_s[r] = v;
      }
      for (int p = 0; p < kk; ++p) {
        double s = 0.0;
        const double* mrow = &Minv[static_cast<std::size_t>(p) * kk];
        for (int r = 0; r < kk; ++r) s += mrow[r] * rhs_s[r];
        z[p] = s;
        xval[J[p]] = s;
      }
    }
    for (int i = 0; i < nrows; ++i) {
      double s = 0.0;
      for (const auto& [c, a] : rows[i].terms) s += a * xval[c];
      rowval[i] = s;
    }
    y.assign(kk, 0.0);
    for (int p = 0; p < kk; ++p) {
      const double cj = cost[J[p]];
      if (cj == 0.0) continue;
      const double* mrow = &Minv[static_cast<std::size_t>(p) * kk];
      for (int r = 0; r < kk; ++r) y[r] += mrow[r] * cj;
    }
    std::fill(acc.begin(), acc.end(), 0.0);
    for (int r = 0; r < kk; ++r) {
      const double yr = y[r];
      if (yr == 0.0) continue;
      for (const auto& [c, a] : rows[S[r]].terms) acc[c] += yr * a;
    }
  }

  // entering variable: id < nvars is a structural column, id = nvars + row is
  // the slack of a tight row. Returns -1 at optimality.
  long long pick_entering() const {
    long long best_id = -1;
    double best_attr = opt.rc_tol;
    for (int j = 0; j < nvars; ++j) {
      if (status[j] == kBasic) continue;
      const double rc = cost[j] - acc[j];
      double attr = 0.0;
      if (status[j] == kAtLower && rc < -opt.rc_tol && upper[j] > lower[j]) {
        attr = -rc;
      } else if (status[j] == kAtUpper && rc > opt.rc_tol && upper[j] > lower[j]) {
        attr = rc;
      }
      if (attr <= 0.0) continue;
      if (bland) return j;  // ascending scan: first hit is least index
      if (attr > best_attr) {
        best_attr = attr;
        best_id = j;
      }
    }
    // slacks of tight rows, eligible when their dual is negative
    long long best_slack_id = -1;
    double best_slack_attr = bland ? opt.rc_tol : best_attr;
    for (int r = 0; r < k(); ++r) {
      const double rc = y[r];
      if (rc >= -opt.rc_tol) continue;
      const long long id = static_cast<long long>(nvars) + S[r];
      const double attr = -rc;
      if (bland) {
        if (best_slack_id < 0 || id < best_slack_id) best_slack_id = id;
      } else if (attr > best_slack_attr ||
                 (attr == best_slack_attr && best_slack_id >= 0 && id < best_slack_id)) {
        best_slack_attr = attr;
        best_slack_id = id;
      }
    }
    if (bland) return best_slack_id >= 0 ? best_slack_id : best_id;
    if (best_slack_id >= 0 && best_slack_attr > best_attr) return best_slack_id;
    return best_id;
  }

  // ratio test over a direction given as dz/dt for basic structurals (delta)
  // and the entering column's own contribution; fills the leaving choice
  Leaving ratio_test(const std::vector<double>& delta, int entering_var, double d,
                     double own_range) const {
    std::vector<Leaving> cands;
    if (own_range < kInf) {
      Leaving f;
      f.ratio = own_range;
      f.magnitude = kInf;  // a bound flip needs no kernel update; prefer it
      f.id = entering_var;
      f.kind = 0;
      cands.push_back(f);
    }
    for (int p = 0; p < k(); ++p) {
      const double dp = delta[p];
      double t, room;
      if (dp > kPivTol) {
        room = upper[J[p]] - z[p];
        t = room / dp;
      } else if (dp < -kPivTol) {
        room = z[p] - lower[J[p]];
        t = room / (-dp);
      } else {
        continue;
      }
      if (t < 0.0) t = 0.0;
      Leaving l;
      l.ratio = t;
      l.magnitude = std::fabs(dp);
      l.id = J[p];
      l.kind = 1;
      l.pos = p;
      cands.push_back(l);
    }
    for (int i = 0; i < nrows; ++i) {
      if (tight[i]) continue;
      double ds = 0.0;
      for (const auto& [c, a] : rows[i].terms) {
        if (c == entering_var) {
          ds += d * a;
        } else if (pos_in_J[c] >= 0) {
          ds += a * delta[pos_in_J[c]];
        }
      }
      if (ds >= -kPivTol) continue;
      double slack = rowval[i] - rows[i].rhs;
      if (slack < 0.0) slack = 0.0;
      Leaving l;
      l.ratio = slack / (-ds);
      l.magnitude = -ds;
      l.id = static_cast<long long>(nvars) + i;
      l.kind = 2;
      l.pos = i;
      cands.push_back(l);
    }
    if (cands.empty()) return Leaving{};
    double tmin = kInf;
    for (const auto& c : cands) tmin = std::min(tmin, c.ratio);
    const double window = tmin + 1e-12 * (1.0 + tmin);
    Leaving best;
    bool have = false;
    for (const auto& c : cands) {
      if (c.ratio > window) continue;
      if (!have) {
        best = c;
        have = true;
        continue;
      }
      if (bland) {
        if (c.id < best.id) best = c;
      } else if (c.magnitude > best.magnitude ||
                 (c.magnitude == best.magnitude && c.id < best.id)) {
        best = c;
      }
    }
    best.ratio = tmin < 0.0 ? 0.0 : tmin;
    return best;
  }

  void eta_column_update(int p, const std::vector<double>& w) {
    // kernel column p replaced; w = Minv * new_column, pivot w[p]
    const int kk = k();
    const double wp = w[p];
    double* prow = &Minv[static_cast<std::size_t>(p) * kk];
    const double inv_wp = 1.0 / wp;
    for (int c = 0; c < kk; ++c) prow[c] *= inv_wp;
    for (int r = 0; r < kk; ++r) {
      if (r == p) continue;
      const double f = w[r];
      if (f == 0.0) continue;
      double* rrow = &Minv[static_cast<std::size_t>(r) * kk];
      for (int c = 0; c < kk; ++c) rrow[c] -= f * prow[c];
    }
  }

  void expand_kernel(int new_row, int new_var, const std::vector<double>& w) {
    // append row new_row and column new_var; w = Minv * (new column over S)
    const int kk = k();
    std::vector<double> v(kk, 0.0);  // new row over existing J
    for (const auto& [c, a] : rows[new_row].terms) {
      const int p = pos_in_J[c];
      if (p >= 0) v[p] = a;
    }
    const double corner = coef_in_row(new_row, new_var);
    double schur = corner;
    for (int p = 0; p < kk; ++p) schur -= v[p] * w[p];

    S.push_back(new_row);
    tight[new_row] = 1;
    pos_in_S[new_row] = kk;
    J.push_back(new_var);
    pos_in_J[new_var] = kk;
    status[new_var] = kBasic;

    if (std::fabs(schur) < kPivTol) {
      refactor();
      return;
    }
    std::vector<double> rvec(kk, 0.0);  // v^T * Minv
    for (int p = 0; p < kk; ++p) {
      if (v[p] == 0.0) continue;
      const double* mrow = &Minv[static_cast<std::size_t>(p) * kk];
      for (int c = 0; c < kk; ++c) rvec[c] += v[p] * mrow[c];
    }
    const int nk = kk + 1;
    std::vector<double> next(static_cast<std::size_t>(nk) * nk, 0.0);
    const double inv_schur = 1.0 / schur;
    for (int r = 0; r < kk; ++r) {
      const double* mrow = &Minv[static_cast<std::size_t>(r) * kk];
      double* nrow = &next[static_cast<std::size_t>(r) * nk];
      const double wr = w[r] * inv_schur;
      for (int c = 0; c < kk; ++c) nrow[c] = mrow[c] + wr * rvec[c];
      nrow[kk] = -w[r] * inv_schur;
    }
    double* last = &next[static_cast<std::size_t>(kk) * nk];
    for (int c = 0; c < kk; ++c) last[c] = -rvec[c] * inv_schur;
    last[kk] = inv_schur;
    Minv = std::move(next);
  }

  void shrink_kernel(int p, int q) {
    // drop kernel column position p (variable leaves basis) and row position q
    // (row leaves the tight set); requires Minv[p][q] away from zero
    const int kk = k();
    const int var = J[p];
    const int row = S[q];
    const double piv = Minv[static_cast<std::size_t>(p) * kk + q];

    auto drop_structs = [&]() {
      J.erase(J.begin() + p);
      pos_in_J[var] = -1;
      for (int l = p; l < static_cast<int>(J.size()); ++l) pos_in_J[J[l]] = l;
      S.erase(S.begin() + q);
      tight[row] = 0;
      pos_in_S[row] = -1;
      for (int l = q; l < static_cast<int>(S.size()); ++l) pos_in_S[S[l]] = l;
    };

    if (std::fabs(piv) < kPivTol) {
      drop_structs();
      refactor();
      return;
    }
    const int nk = kk - 1;
    std::vector<double> next(static_cast<std::size_t>(nk) * nk, 0.0);
    const double* prow = &Minv[static_cast<std::size_t>(p) * kk];
    for (int r = 0, nr = 0; r < kk; ++r) {
      if (r == p) continue;
      const double* mrow = &Minv[static_cast<std::size_t>(r) * kk];
      const double f = mrow[q] / piv;
      double* nrow = &next[static_cast<std::size_t>(nr) * nk];
      for (int c = 0, nc = 0; c < kk; ++c) {
        if (c == q) continue;
        nrow[nc] = mrow[c] - f * prow[c];
        ++nc;
      }
      ++nr;
    }
    Minv = std::move(next);
    drop_structs();
  }

  void replace_tight_row(int q, int new_row) {
    // kernel row position q swaps from row S[q] to new_row
    const int kk = k();
    const int old_row = S[q];
    std::vector<double> dvec(kk, 0.0);
    for (const auto& [c, a] : rows[new_row].terms) {
      const int p = pos_in_J[c];
      if (p >= 0) dvec[p] += a;
    }
    for (const auto& [c, a] : rows[old_row].terms) {
      const int p = pos_in_J[c];
      if (p >= 0) dvec[p] -= a;
    }
    std::vector<double> cq(kk);
    for (int r = 0; r < kk; ++r) cq[r] = Minv[static_cast<std::size_t>(r) * kk + q];
    double denom = 1.0;
    for (int p = 0; p < kk; ++p) denom += dvec[p] * cq[p];

    S[q] = new_row;
    tight[old_row] = 0;
    pos_in_S[old_row] = -1;
    tight[new_row] = 1;
    pos_in_S[new_row] = q;

    if (std::fabs(denom) < kPivTol) {
      refactor();
      return;
    }
    std::vector<double> rvec(kk, 0.0);
    for (int p = 0; p < kk; ++p) {
      if (dvec[p] == 0.0) continue;
      const double* mrow = &Minv[static_cast<std::size_t>(p) * kk];
      for (int c = 0; c < kk; ++c) rvec[c] += dvec[p] * mrow[c];
    }
    const double inv_denom = 1.0 / denom;
    for (int r = 0; r < kk; ++r) {
      const double f = cq[r] * inv_denom;
      if (f == 0.0) continue;
      double* mrow = &Minv[static_cast<std::size_t>(r) * kk];
      for (int c = 0; c < kk; ++c) mrow[c] -= f * rvec[c];
    }
  }

  void after_basis_change() {
    ++since_refactor;
    just_refactored = false;
    if (since_refactor >= opt.refactor_every) refactor();
  }

  SimplexResult run() {
    SimplexResult out;
    for (;;) {
      if (opt.max_pivots >= 0 && pivots >= opt.max_pivots) {
        out.status = SimplexStatus::pivot_limit;
        break;
      }
      recompute();
      const long long enter = pick_entering();
      if (enter < 0) {
        // re-verify optimality on a freshly factorized kernel before claiming it
        if (!just_refactored && k() > 0) {
          refactor();
          continue;
        }
        out.status = SimplexStatus::optimal;
        break;
      }
      just_refactored = false;

      const int kk = k();
      std::vector<double> delta(kk, 0.0);
      Leaving leave;
      if (enter < nvars) {
        const int j = static_cast<int>(enter);
        const double d = status[j] == kAtLower ? 1.0 : -1.0;
        std::vector<double> w(kk, 0.0);
        for (int row : col_rows[j]) {
          const int r = pos_in_S[row];
          if (r < 0) continue;
          const double a = coef_in_row(row, j);
          if (a == 0.0) continue;
          for (int p = 0; p < kk; ++p) {
            w[p] += Minv[static_cast<std::size_t>(p) * kk + r] * a;
          }
        }
        for (int p = 0; p < kk; ++p) delta[p] = -d * w[p];
        leave = ratio_test(delta, j, d, upper[j] - lower[j]);
        if (leave.kind < 0) {
          throw std::runtime_error("simplex: unbounded direction (numerical)");
        }
        ++pivots;
        if (leave.ratio <= kDegenTol) {
          if (++stall > opt.stall_limit) bland = true;
        } else {
          stall = 0;
          bland = false;
        }
        if (leave.kind == 0) {
          status[j] = status[j] == kAtLower ? kAtUpper : kAtLower;
          xval[j] = status[j] == kAtUpper ? upper[j] : lower[j];
        } else if (leave.kind == 1) {
          const int p = leave.pos;
          const int b = J[p];
          const bool hit_upper = delta[p] > 0.0;
          status[b] = hit_upper ? kAtUpper : kAtLower;
          xval[b] = hit_upper ? upper[b] : lower[b];
          pos_in_J[b] = -1;
          if (std::fabs(w[p]) < kPivTol) {
            J[p] = j;
            pos_in_J[j] = p;
            status[j] = kBasic;
            refactor();
          } else {
            eta_column_update(p, w);
            J[p] = j;
            pos_in_J[j] = p;
            status[j] = kBasic;
          }
          after_basis_change();
        } else {
          expand_kernel(leave.pos, j, w);
          after_basis_change();
        }
      } else {
        // slack of tight row enters: the row leaves the tight set
        const int row_enter = static_cast<int>(enter - nvars);
        const int q = pos_in_S[row_enter];
        for (int p = 0; p < kk; ++p) {
          delta[p] = Minv[static_cast<std::size_t>(p) * kk + q];
        }
        leave = ratio_test(delta, -1, 0.0, kInf);
        if (leave.kind < 0) {
          throw std::runtime_error("simplex: unbounded slack direction (numerical)");
        }
        ++pivots;
        if (leave.ratio <= kDegenTol) {
          if (++stall > opt.stall_limit) bland = true;
        } else {
          stall = 0;
          bland = false;
        }
        if (leave.kind == 1) {
          const int p = leave.pos;
          const int b = J[p];
          const bool hit_upper = delta[p] > 0.0;
          status[b] = hit_upper ? kAtUpper : kAtLower;
          xval[b] = hit_upper ? upper[b] : lower[b];
          shrink_kernel(p, q);
          after_basis_change();
        } else {
          replace_tight_row(q, leave.pos);
          after_basis_change();
        }
      }
    }

    recompute();
    out.x = xval;
    double obj = 0.0;
    for (int j = 0; j < nvars; ++j) obj += cost[j] * xval[j];
    out.objective = obj;
    out.pivots = pivots;
    return out;
  }
};

}  // namespace

BoundedSimplex::BoundedSimplex(std::vector<double> cost, std::vector<double> lower,
                               std::vector<double> upper)
    : cost_(std::move(cost)), lower_(std::move(lower)), upper_(std::move(upper)) {
  if (cost_.size() != lower_.size() || cost_.size() != upper_.size()) {
    throw std::invalid_argument("BoundedSimplex: cost/bound size mismatch");
  }
  for (std::size_t j = 0; j < cost_.size(); ++j) {
    if (!(lower_[j] <= upper_[j])) {
      throw std::invalid_argument("BoundedSimplex: crossed bounds at column " +
                                  std::to_string(j));
    }
  }
  col_rows_.resize(cost_.size());
}

void BoundedSimplex::add_row(SimplexRow row) {
  const int i = static_cast<int>(rows_.size());
  for (const auto& [col, coef] : row.terms) {
    (void)coef;
    if (col < 0 || col >= var_count()) {
      throw std::invalid_argument("BoundedSimplex: row column out of range");
    }
    col_rows_[col].push_back(i);
  }
  rows_.push_back(std::move(row));
}

SimplexResult BoundedSimplex::solve(const std::vector<bool>& start_at_upper,
                                    const SimplexOptions& opt) const {
  if (static_cast<int>(start_at_upper.size()) != var_count()) {
    throw std::invalid_argument("BoundedSimplex: start assignment size mismatch");
  }
  Solver s{cost_, lower_, upper_, rows_, col_rows_, opt,
           var_count(), row_count(), {}, {}, {}, {}, {}, {}, {}, {},
           {}, {}, {}, {}};
  s.status.resize(s.nvars);
  s.xval.resize(s.nvars);
  for (int j = 0; j < s.nvars; ++j) {
    s.status[j] = start_at_upper[j] ? kAtUpper : kAtLower;
    s.xval[j] = start_at_upper[j] ? upper_[j] : lower_[j];
  }
  s.tight.assign(s.nrows, 0);
  s.pos_in_S.assign(s.nrows, -1);
  s.pos_in_J.assign(s.nvars, -1);
  s.rowval.assign(s.nrows, 0.0);
  s.acc.assign(s.nvars, 0.0);
  for (int i = 0; i < s.nrows; ++i) {
    double v = 0.0;
    for (const auto& [c, a] : rows_[i].terms) v += a * s.xval[c];
    if (v < rows_[i].rhs - 1e-9) {
      throw std::invalid_argument(
          "BoundedSimplex: start assignment violates row " + std::to_string(i));
    }
  }
  return s.run();
}

}  // namespace cc
