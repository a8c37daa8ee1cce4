#pragma once

#include <functional>
#include <vector>

#include "nlc/state.hpp"

namespace nlc {

/// Time derivatives (d rho, d u, d n) of a compressible state.
struct CompressibleRHS {
    ScalarField d_rho;
    VectorField d_u;
    Field3 d_n;
};

enum class Scheme { imex_bdf2, imex_euler, explicit_rk4_reference };

Scheme scheme_from_string(const std::string& s);
std::string to_string(Scheme s);

struct StepControl {
    double dt = 1e-4;
    double t_end = 0.1;
    Scheme scheme = Scheme::imex_bdf2;
    bool renormalize_director = true;
    bool dealias = true;
    long observer_stride = 1;

    void validate() const;
};

/// Per-step diagnostics surfaced to observers.
struct StepDiagnostics {
    /// max||n|-1| of the updated director before the per-step projection
    /// (with renormalization off: of the director as-is).
    double unit_drift = 0.0;
};

/// Elastic forcing sum_i (Delta n_i) grad n_i, products dealiased. Equal to
/// div(grad n (x) grad n - 1/2 |grad n|^2 I) for band-limited n.
VectorField ericksen_stress_div(const Field3& n, bool do_dealias = true);

/// Right side of the nonconservative system. Throws regime_error when
/// rho <= 0 or |rho - 1| >= 1/2.
CompressibleRHS eval_rhs_nonconservative(const CompressibleState& state, bool do_dealias = true);

/// Conservative-form momentum evaluation converted to d u via
/// du = [(rho u)_t - u rho_t]/rho. Cross-check oracle for the form above.
CompressibleRHS eval_rhs_conservative(const CompressibleState& state, bool do_dealias = true);

/// One time step. IMEX schemes treat the linearized acoustic pair
/// (lambda^2 P'(1) grad(rho-1), div u) and all Laplacians implicitly via exact
/// per-mode solves; advection and the remaining nonlinearities are explicit.
/// imex_bdf2 without history falls back to one imex_euler step.
CompressibleState step(const CompressibleState& state, const StepControl& ctl,
                       StepDiagnostics* diag = nullptr);

using CompressibleObserver =
    std::function<void(const CompressibleState&, const StepDiagnostics&, long step)>;

/// Integrates to t_end (the step count is snapped so it divides t_end
/// exactly). Observers fire at ctl.observer_stride, always including the
/// initial and final states; the returned trajectory matches the observer
/// times. Blow-up (NaN/Inf) raises blowup_error carrying time and step.
std::vector<CompressibleState> run(const CompressibleState& initial, const StepControl& ctl,
                                   const std::vector<CompressibleObserver>& observers = {});

/// Largest stable dt for the explicit RK4 reference on this state.
double rk4_stable_dt(const CompressibleState& state, bool dealiased_band = true);

}  // namespace nlc
