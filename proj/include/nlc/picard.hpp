#pragma once

#include <utility>
#include <vector>

#include "nlc/compressible.hpp"
#include "nlc/state.hpp"

namespace nlc {

/// Frozen coefficients V = (xi, v, m) for one time slice of the linearized
/// system.
struct LinearizationInput {
    ScalarField xi;  // frozen density, must stay in the |xi - 1| < 1/2 regime
    VectorField v;   // frozen transport velocity
    Field3 m;        // frozen source of |grad m|^2 in the director equation

    static LinearizationInput from_state(const CompressibleState& s) {
        return LinearizationInput{s.rho, s.u, s.n};
    }
};

/// Time-indexed V, piecewise linear between snapshots. A single snapshot
/// means frozen constant-in-time coefficients.
class VTrajectory {
  public:
    VTrajectory(std::vector<double> times, std::vector<LinearizationInput> snaps);
    static VTrajectory constant(LinearizationInput v);
    static VTrajectory from_states(const std::vector<CompressibleState>& traj);

    LinearizationInput eval(double t) const;
    const std::vector<double>& times() const { return times_; }

  private:
    std::vector<double> times_;
    std::vector<LinearizationInput> snaps_;
};

/// Integrates the linearized system U = Lambda(V):
///   rho_t + (v.grad)rho + xi div u = 0
///   u_t + (v.grad)u + lambda^2 (P'(xi)/xi) grad rho
///     = (mu/xi) Lap u + ((kappa+mu)/xi) grad div u - (nu/xi) sum_i Lap n_i grad n_i
///   n_t + (v.grad)n = theta (Lap n + |grad m|^2 n)
/// with the same IMEX machinery as the nonlinear solver (coefficients frozen
/// per step). Returns the trajectory sampled at every step.
std::vector<CompressibleState> linearized_step(const VTrajectory& V,
                                               const CompressibleState& U_init,
                                               const StepControl& ctl);

/// Successive-difference record of the fixed-point iteration, in the metric
/// sup_t (||lambda(rho_i - rho_{i-1})||^2 + ||u_i - u_{i-1}||^2 +
/// ||n_i - n_{i-1}||_1^2).
struct ContractionReport {
    int iterates = 0;
    std::vector<double> diff_norms;
    std::vector<double> ratios;
    double tau_estimate = 0.0;
    bool non_contraction = false;  // metric grew 3 consecutive iterations
    double t0 = 0.0;
};

/// Picard iteration V_{i+1} = Lambda(V_i) from the constant-in-time extension
/// of U0. Stops at k_max iterations or once the metric falls below tol.
/// Divergence is reported in the ContractionReport, not thrown.
std::pair<std::vector<CompressibleState>, ContractionReport> picard_iterate(
    const CompressibleState& U0, double T0, int k_max, const StepControl& ctl,
    double tol = 1e-10);

}  // namespace nlc
