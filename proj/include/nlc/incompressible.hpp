#pragma once

#include <functional>
#include <vector>

#include "nlc/compressible.hpp"
#include "nlc/state.hpp"

namespace nlc {

/// Time derivatives of the limit system; d_u is divergence-free.
struct IncompressibleRHS {
    VectorField d_u;
    Field3 d_n;
};

/// d_u = P[-(u.grad)u + mu Lap u - nu sum_i (Lap n_i) grad n_i]; the gradient
/// part nu grad(|grad n|^2/2) of the Ericksen force is annihilated by the
/// projection and folded into the pressure. d_n = -(u.grad)n +
/// theta(Lap n + |grad n|^2 n). Throws precondition_error if u is not
/// divergence-free.
IncompressibleRHS eval_rhs_incompressible(const IncompressibleState& state,
                                          bool do_dealias = true);

/// Diagnostic pressure: solves -Lap p = div[(u.grad)u + nu sum_i (Lap n_i) grad n_i]
/// with mean-zero normalization. Never used by the time step.
ScalarField recover_pressure(const IncompressibleState& state, bool do_dealias = true);

IncompressibleState step_incompressible(const IncompressibleState& state, const StepControl& ctl,
                                        StepDiagnostics* diag = nullptr);

using IncompressibleObserver =
    std::function<void(const IncompressibleState&, const StepDiagnostics&, long step)>;

std::vector<IncompressibleState> run_incompressible(
    const IncompressibleState& initial, const StepControl& ctl,
    const std::vector<IncompressibleObserver>& observers = {});

}  // namespace nlc
