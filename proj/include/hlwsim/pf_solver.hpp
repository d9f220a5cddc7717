#pragma once

#include <vector>

#include "hlwsim/assoc.hpp"
#include "hlwsim/types.hpp"

namespace hlwsim {

// Time-resource coefficients rho in [0,1], N_a x N_u, zero off the
// association support, column loads per AP bounded by 1.
struct AllocationMatrix {
  Matrix rho;
};

struct SolveOptions {
  double utility_tol = 1e-8;  // minimum per-sweep utility improvement
  double kkt_tol = 1e-6;
  int max_sweeps = 10000;
};

struct SolveReport {
  AllocationMatrix allocation;
  double utility = 0.0;        // sum of log throughputs (nats), excluded UEs omitted
  double kkt_residual = 0.0;
  int iterations = 0;          // sweeps (solver) or evaluated points (brute force)
  bool converged = false;
  std::vector<int> excluded_ues;      // UEs with no positive-capacity connected link
  std::vector<double> utility_trace;  // utility after each sweep; non-decreasing
};

// Proportional-fairness allocation: maximizes sum_j log(sum_i rho*C) under
// per-AP unit budgets and box constraints. Block-coordinate ascent over APs;
// each AP subproblem solved in closed form by water-filling with the dual
// level found by bisection. UEs with no positive-capacity link are excluded
// from the objective and forced to zero.
SolveReport solve_pf(const Matrix& capacity, const Association& assoc,
                     const SolveOptions& opts = {});

// Independent oracle: exhaustive search of per-AP simplex grids. Full product
// enumeration when the point count is affordable, otherwise coarse-to-fine
// exhaustive refinement around the incumbent (sound for the concave
// objective; every level only improves the utility found). Guarded to
// N_a <= 3, N_u <= 3.
SolveReport brute_force_pf(const Matrix& capacity, const Association& assoc,
                           double grid_step);

// Maximum stationarity/complementarity/feasibility violation of rho for the
// program above. Stationarity is measured relative to the per-AP dual level
// estimated from interior coefficients; budget-tightness and box violations
// enter as absolute values.
double kkt_residual(const Matrix& capacity, const Association& assoc, const Matrix& rho);

// Objective value of an allocation: sum of log throughputs over UEs that have
// at least one positive-capacity connected link. -inf if any such UE ends up
// with zero throughput.
double pf_utility(const Matrix& capacity, const Association& assoc, const Matrix& rho);

}  // namespace hlwsim
