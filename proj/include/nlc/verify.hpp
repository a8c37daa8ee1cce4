#pragma once

#include <cstdint>

#include "nlc/compressible.hpp"
#include "nlc/state.hpp"

namespace nlc {

/// Relative L^2 discrepancy between the two routes of the Ericksen stress
/// identity, sum_i (Lap n_i) grad n_i vs div(grad n (x) grad n - 1/2 |grad n|^2 I),
/// evaluated with dealiased products on a seeded smooth unit director. The
/// director is sampled per grid (unit pointwise, spectrally decaying), so the
/// discrepancy measures the truncation tail and falls under grid refinement.
double stress_identity_discrepancy(const Grid& g, std::uint64_t seed);

/// Independent evaluation of the divergence form div(grad n (x) grad n -
/// 1/2 |grad n|^2 I); test oracle for ericksen_stress_div.
VectorField ericksen_stress_div_tensor_form(const Field3& n, bool do_dealias = true);

struct EnergyLawResult {
    double residual = 0.0;        // |E(T) + cumulative dissipation - E(0)|
    double mass_rel_drift = 0.0;  // |int rho(T) - int rho(0)| / int rho(0)
    double max_unit_drift = 0.0;
    double max_div_u = 0.0;  // incompressible runs only
};

/// Discrete compressible energy budget over one run from well-prepared data.
EnergyLawResult compressible_energy_law(const Grid& g, const ModelParams& prm, double delta0,
                                        std::uint64_t seed, double dt, double t_end,
                                        Scheme scheme, double amplitude = 1.0);

/// Discrete incompressible energy budget from (Taylor-Green, default director).
EnergyLawResult incompressible_energy_law(const Grid& g, const ModelParams& prm, double dt,
                                          double t_end, Scheme scheme, double amplitude = 1.0);

}  // namespace nlc
