#include "hlwsim/pf_solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hlwsim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_dims(const Matrix& capacity, const Association& assoc) {
  if (capacity.rows() != assoc.chi.rows() || capacity.cols() != assoc.chi.cols()) {
    throw std::invalid_argument("capacity and association dimensions differ");
  }
}

std::vector<int> excluded_ues_of(const Matrix& c, const Association& assoc) {
  std::vector<int> out;
  for (int j = 0; j < assoc.n_ues(); ++j) {
    bool any = false;
    for (int i = 0; i < assoc.n_aps(); ++i) {
      if (assoc.connected(i, j) && c(i, j) > 0.0) {
        any = true;
        break;
      }
    }
    if (!any) out.push_back(j);
  }
  return out;
}

// Water-filling for one AP: maximize sum_j log(a_j + rho_j * c_j) over the
// unit budget intersected with [0,1]^n, all c_j > 0. Writes rho.
void water_fill(const std::vector<double>& a, const std::vector<double>& c,
                std::vector<double>& rho) {
  const int n = static_cast<int>(a.size());
  rho.assign(n, 0.0);
  if (n == 0) return;
  if (n == 1) {
    rho[0] = 1.0;  // no competition: the whole budget is optimal
    return;
  }

  auto fill_at = [&](double nu, std::vector<double>& out) {
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
      out[j] = std::clamp(1.0 / nu - a[j] / c[j], 0.0, 1.0);
      sum += out[j];
    }
    return sum;
  };

  double lo = 1e-12;
  double hi = static_cast<double>(n) + 1.0;
  for (int j = 0; j < n; ++j) {
    if (a[j] > 0.0) hi = std::max(hi, c[j] / a[j] + 1.0);
  }

  std::vector<double> tmp(n);
  if (fill_at(lo, tmp) <= 1.0) {
    rho = tmp;  // budget slack even at a vanishing dual level
    return;
  }
  for (int iter = 0; iter < 100 && hi - lo > 1e-12; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (fill_at(mid, tmp) >= 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  fill_at(0.5 * (lo + hi), rho);

  // Exact dual level for the clamp pattern found by bisection; removes the
  // bisection-window error so symmetric instances come out exact.
  double ratio_sum = 0.0;
  int n_interior = 0, n_one = 0;
  for (int j = 0; j < n; ++j) {
    if (rho[j] >= 1.0 - 1e-9) {
      ++n_one;
    } else if (rho[j] > 1e-9) {
      ++n_interior;
      ratio_sum += a[j] / c[j];
    }
  }
  if (n_interior > 0) {
    const double denom = 1.0 - n_one + ratio_sum;
    if (denom > 0.0) {
      const double nu_exact = n_interior / denom;
      bool consistent = true;
      for (int j = 0; j < n && consistent; ++j) {
        const double v = 1.0 / nu_exact - a[j] / c[j];
        if (rho[j] >= 1.0 - 1e-9) {
          consistent = v >= 1.0 - 1e-6;
        } else if (rho[j] > 1e-9) {
          consistent = v > -1e-9 && v < 1.0 + 1e-9;
        } else {
          consistent = v <= 1e-6;
        }
      }
      if (consistent) {
        for (int j = 0; j < n; ++j) {
          if (rho[j] >= 1.0 - 1e-9) {
            rho[j] = 1.0;
          } else if (rho[j] > 1e-9) {
            rho[j] = std::clamp(1.0 / nu_exact - a[j] / c[j], 0.0, 1.0);
          }
        }
      }
    }
  }

  double sum = 0.0;
  for (double v : rho) sum += v;
  if (sum > 1.0) {
    for (double& v : rho) v /= sum;
  }
}

}  // namespace

double pf_utility(const Matrix& capacity, const Association& assoc, const Matrix& rho) {
  check_dims(capacity, assoc);
  const std::vector<int> excluded = excluded_ues_of(capacity, assoc);
  std::vector<bool> skip(assoc.n_ues(), false);
  for (int j : excluded) skip[j] = true;

  double total = 0.0;
  for (int j = 0; j < assoc.n_ues(); ++j) {
    if (skip[j]) continue;
    double r = 0.0;
    for (int i = 0; i < assoc.n_aps(); ++i) {
      if (assoc.connected(i, j)) r += rho(i, j) * capacity(i, j);
    }
    if (r <= 0.0) return -kInf;
    total += std::log(r);
  }
  return total;
}

SolveReport solve_pf(const Matrix& capacity, const Association& assoc,
                     const SolveOptions& opts) {
  check_dims(capacity, assoc);
  const int n_a = assoc.n_aps();
  const int n_u = assoc.n_ues();

  SolveReport report;
  report.excluded_ues = excluded_ues_of(capacity, assoc);
  std::vector<bool> excluded(n_u, false);
  for (int j : report.excluded_ues) excluded[j] = true;

  // Connected UEs per AP, and the positive-capacity subset that competes.
  std::vector<std::vector<int>> conn(n_a), competing(n_a);
  for (int i = 0; i < n_a; ++i) {
    for (int j = 0; j < n_u; ++j) {
      if (!assoc.connected(i, j)) continue;
      conn[i].push_back(j);
      if (capacity(i, j) > 0.0 && !excluded[j]) competing[i].push_back(j);
    }
  }

  // Equal split over connected links: strictly interior, avoids log(0).
  Matrix rho = Matrix::Zero(n_a, n_u);
  for (int i = 0; i < n_a; ++i) {
    if (conn[i].empty()) continue;
    const double share = 1.0 / static_cast<double>(conn[i].size());
    for (int j : conn[i]) rho(i, j) = share;
  }

  Vector throughput = Vector::Zero(n_u);
  for (int j = 0; j < n_u; ++j) {
    for (int i = 0; i < n_a; ++i) {
      if (assoc.connected(i, j)) throughput(j) += rho(i, j) * capacity(i, j);
    }
  }

  auto utility_now = [&]() {
    double u = 0.0;
    for (int j = 0; j < n_u; ++j) {
      if (!excluded[j]) u += std::log(throughput(j));
    }
    return u;
  };

  double u_prev = utility_now();
  report.utility_trace.push_back(u_prev);

  std::vector<double> a, c, w;
  double residual = kInf;
  int sweeps_done = 0;
  for (int sweep = 1; sweep <= opts.max_sweeps; ++sweep) {
    sweeps_done = sweep;
    for (int i = 0; i < n_a; ++i) {
      if (conn[i].empty()) continue;
      // Links that never pay off carry no allocation.
      for (int j : conn[i]) {
        if (capacity(i, j) <= 0.0 || excluded[j]) {
          throughput(j) -= rho(i, j) * capacity(i, j);
          rho(i, j) = 0.0;
        }
      }
      const auto& comp = competing[i];
      if (comp.empty()) continue;

      a.clear();
      c.clear();
      for (int j : comp) {
        a.push_back(std::max(0.0, throughput(j) - rho(i, j) * capacity(i, j)));
        c.push_back(capacity(i, j));
      }
      water_fill(a, c, w);
      for (size_t t = 0; t < comp.size(); ++t) {
        const int j = comp[t];
        rho(i, j) = w[t];
        throughput(j) = a[t] + w[t] * c[t];
      }
    }

    const double u = utility_now();
    report.utility_trace.push_back(u);
    const bool stalled = u - u_prev < opts.utility_tol;
    u_prev = u;
    if (stalled) {
      residual = kkt_residual(capacity, assoc, rho);
      if (residual <= opts.kkt_tol) {
        report.converged = true;
        break;
      }
    }
  }

  if (!std::isfinite(residual)) residual = kkt_residual(capacity, assoc, rho);
  report.allocation.rho = std::move(rho);
  report.utility = u_prev;
  report.kkt_residual = residual;
  report.iterations = sweeps_done;
  return report;
}

double kkt_residual(const Matrix& capacity, const Association& assoc, const Matrix& rho) {
  check_dims(capacity, assoc);
  const int n_a = assoc.n_aps();
  const int n_u = assoc.n_ues();

  Vector throughput = Vector::Zero(n_u);
  for (int j = 0; j < n_u; ++j) {
    for (int i = 0; i < n_a; ++i) {
      if (assoc.connected(i, j)) throughput(j) += rho(i, j) * capacity(i, j);
    }
  }

  double res = 0.0;
  // Primal feasibility: box bounds and the association support.
  for (int i = 0; i < n_a; ++i) {
    for (int j = 0; j < n_u; ++j) {
      if (!assoc.connected(i, j)) {
        res = std::max(res, std::abs(rho(i, j)));
      } else {
        res = std::max(res, std::max(0.0, -rho(i, j)));
        res = std::max(res, std::max(0.0, rho(i, j) - 1.0));
      }
    }
  }

  const std::vector<int> excluded = excluded_ues_of(capacity, assoc);
  std::vector<bool> skip(n_u, false);
  for (int j : excluded) skip[j] = true;

  for (int i = 0; i < n_a; ++i) {
    std::vector<double> interior, zeros, ones;
    double load = 0.0;
    bool has_competitor = false;
    for (int j = 0; j < n_u; ++j) {
      if (!assoc.connected(i, j)) continue;
      load += rho(i, j);
      if (capacity(i, j) <= 0.0 || skip[j]) {
        // Zero marginal utility: the optimal coefficient here is exactly zero.
        res = std::max(res, std::abs(rho(i, j)));
        continue;
      }
      has_competitor = true;
      if (throughput(j) <= 0.0) {
        res = std::max(res, 1.0);  // positive-capacity UE starved entirely
        continue;
      }
      const double g = capacity(i, j) / throughput(j);
      if (rho(i, j) <= 1e-9) {
        zeros.push_back(g);
      } else if (rho(i, j) >= 1.0 - 1e-9) {
        ones.push_back(g);
      } else {
        interior.push_back(g);
      }
    }
    if (!has_competitor) continue;

    // The budget binds at any optimum with a positive-capacity competitor.
    res = std::max(res, std::abs(load - 1.0));

    // Dual level: interior coefficients must share the marginal utility; a
    // zero (one) coefficient must sit below (above) it.
    double nu = 0.0;
    if (!interior.empty()) {
      for (double g : interior) nu += g;
      nu /= static_cast<double>(interior.size());
    } else {
      const double lo = zeros.empty() ? 0.0 : *std::max_element(zeros.begin(), zeros.end());
      const double hi = ones.empty() ? kInf : *std::min_element(ones.begin(), ones.end());
      if (std::isinf(hi)) {
        nu = lo;
      } else if (lo <= hi) {
        nu = 0.5 * (lo + hi);
      } else {
        nu = 0.5 * (hi + lo);  // inconsistent bracket; violations surface below
      }
    }
    if (nu <= 0.0) continue;
    for (double g : interior) res = std::max(res, std::abs(g - nu) / nu);
    for (double g : zeros) res = std::max(res, std::max(0.0, g - nu) / nu);
    for (double g : ones) res = std::max(res, std::max(0.0, nu - g) / nu);
  }
  return res;
}

namespace {

// Grid points for one AP: coordinates are multiples of `step` inside
// [lo_t, hi_t], total at most 1 (+eps). Emitted as full coefficient vectors.
void enumerate_ap_grid(size_t t, double step, const std::vector<double>& lo,
                       const std::vector<double>& hi, double remaining,
                       std::vector<double>& point, std::vector<std::vector<double>>& out) {
  if (t == lo.size()) {
    out.push_back(point);
    return;
  }
  const double lo_t = std::max(0.0, lo[t]);
  const double hi_t = std::min({1.0, hi[t], remaining});
  const long k_lo = static_cast<long>(std::ceil(lo_t / step - 1e-9));
  const long k_hi = static_cast<long>(std::floor(hi_t / step + 1e-9));
  for (long k = k_lo; k <= k_hi; ++k) {
    point[t] = static_cast<double>(k) * step;
    enumerate_ap_grid(t + 1, step, lo, hi, remaining - point[t], point, out);
  }
}

}  // namespace

SolveReport brute_force_pf(const Matrix& capacity, const Association& assoc,
                           double grid_step) {
  check_dims(capacity, assoc);
  const int n_a = assoc.n_aps();
  const int n_u = assoc.n_ues();
  if (n_a > 3 || n_u > 3) {
    throw std::invalid_argument("brute_force_pf: guarded to N_a <= 3, N_u <= 3");
  }
  if (!(grid_step > 0.0 && grid_step <= 1.0)) {
    throw std::invalid_argument("brute_force_pf: grid_step must be in (0, 1]");
  }

  SolveReport report;
  report.excluded_ues = excluded_ues_of(capacity, assoc);
  std::vector<bool> counted(n_u, true);
  for (int j : report.excluded_ues) counted[j] = false;

  // Only positive-capacity links of counted UEs carry coefficients; putting
  // grid mass anywhere else can never improve the objective.
  std::vector<std::vector<int>> ap_ues(n_a);
  for (int i = 0; i < n_a; ++i) {
    for (int j = 0; j < n_u; ++j) {
      if (assoc.connected(i, j) && capacity(i, j) > 0.0 && counted[j]) {
        ap_ues[i].push_back(j);
      }
    }
  }

  Matrix best_rho = Matrix::Zero(n_a, n_u);
  double best = -kInf;
  long long evaluated = 0;
  std::vector<std::vector<std::vector<double>>> ap_points(n_a);

  auto run_level = [&](double step, const std::vector<std::vector<double>>& lo,
                       const std::vector<std::vector<double>>& hi) {
    for (int i = 0; i < n_a; ++i) {
      ap_points[i].clear();
      std::vector<double> point(ap_ues[i].size(), 0.0);
      if (ap_ues[i].empty()) {
        ap_points[i].push_back({});
      } else {
        enumerate_ap_grid(0, step, lo[i], hi[i], 1.0 + 1e-9, point, ap_points[i]);
      }
    }

    Vector throughput = Vector::Zero(n_u);
    std::vector<int> choice(n_a, 0), best_choice(n_a, -1);
    std::function<void(int)> dfs = [&](int ap) {
      if (ap == n_a) {
        ++evaluated;
        double u = 0.0;
        for (int j = 0; j < n_u; ++j) {
          if (!counted[j]) continue;
          if (throughput(j) <= 0.0) return;
          u += std::log(throughput(j));
        }
        if (u > best) {
          best = u;
          best_choice = choice;
        }
        return;
      }
      const auto& ues = ap_ues[ap];
      for (int p = 0; p < static_cast<int>(ap_points[ap].size()); ++p) {
        const auto& v = ap_points[ap][p];
        for (size_t t = 0; t < ues.size(); ++t) {
          throughput(ues[t]) += v[t] * capacity(ap, ues[t]);
        }
        choice[ap] = p;
        dfs(ap + 1);
        for (size_t t = 0; t < ues.size(); ++t) {
          throughput(ues[t]) -= v[t] * capacity(ap, ues[t]);
        }
      }
    };
    dfs(0);

    if (best_choice[0] >= 0) {
      for (int i = 0; i < n_a; ++i) {
        const auto& ues = ap_ues[i];
        if (ues.empty()) continue;
        const auto& v = ap_points[i][best_choice[i]];
        for (size_t t = 0; t < ues.size(); ++t) best_rho(i, ues[t]) = v[t];
      }
    }
  };

  auto full_grid_count = [&](double step) {
    const double k = std::floor(1.0 / step + 1e-9) + 1.0;
    double total = 1.0;
    for (int i = 0; i < n_a; ++i) {
      total *= std::pow(k, static_cast<double>(ap_ues[i].size()));
      if (total > 1e18) return 1e18;
    }
    return total;
  };

  std::vector<std::vector<double>> lo(n_a), hi(n_a);
  for (int i = 0; i < n_a; ++i) {
    lo[i].assign(ap_ues[i].size(), 0.0);
    hi[i].assign(ap_ues[i].size(), 1.0);
  }

  constexpr double kEvalBudget = 2e6;
  if (full_grid_count(grid_step) <= kEvalBudget) {
    run_level(grid_step, lo, hi);
  } else {
    // Coarse-to-fine: exhaustive at 0.1, then re-enumerate a one-step box
    // around the incumbent at 5x finer resolution until grid_step is reached.
    double step = 0.1;
    run_level(step, lo, hi);
    while (step > grid_step) {
      const double prev = step;
      step = std::max(grid_step, step / 5.0);
      for (int i = 0; i < n_a; ++i) {
        const auto& ues = ap_ues[i];
        for (size_t t = 0; t < ues.size(); ++t) {
          lo[i][t] = best_rho(i, ues[t]) - prev;
          hi[i][t] = best_rho(i, ues[t]) + prev;
        }
      }
      run_level(step, lo, hi);
    }
  }

  report.allocation.rho = std::move(best_rho);
  report.utility = best;
  report.kkt_residual = kkt_residual(capacity, assoc, report.allocation.rho);
  report.iterations = static_cast<int>(std::min<long long>(evaluated, (1ll << 31) - 1));
  report.converged = true;
  report.utility_trace.push_back(best);
  return report;
}

}  // namespace hlwsim
