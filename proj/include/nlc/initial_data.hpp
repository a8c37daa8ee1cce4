#pragma once

#include <cstdint>

#include "nlc/state.hpp"

namespace nlc {

/// Taylor-Green-type divergence-free velocity (2D and 3D variants).
VectorField taylor_green_velocity(const Grid& g, double amplitude = 1.0);

/// Smooth non-constant unit director (cos phi, sin phi, 0) with band-limited
/// phase phi(x).
DirectorField default_director(const Grid& g);

/// Seeded random band-limited scalar field: modes with 0 < max_j |f_j| <= band,
/// amplitudes ~ N(0,1)/(1+|f|^2). Deterministic in the engine state.
ScalarField random_band_limited(const Grid& g, std::uint64_t seed, int band = 4);

/// Pointwise n/|n|. Requires |n| >= 0.5 everywhere (degeneracy_error below).
DirectorField normalize_director(const Field3& n);

/// Initial data for the compressible system, perturbed off (1, u0, n0) so the
/// three well-prepared bounds
///   ||rho-1||_s = lambda^-2 delta0,  ||u-u0||_{s+1} = lambda^-1 delta0,
///   ||grad(n-n0)||_s = lambda^-1 delta0
/// hold with equality (the director bound via a short fixed-point rescale of
/// the perturbation amplitude, since the constraint is measured after
/// normalization). Perturbations live in the lowest `band` wavenumbers so the
/// measured norms are resolution-independent. Deterministic for a fixed seed.
CompressibleState well_prepared_initial_data(const Grid& g, const ModelParams& params,
                                             double delta0, std::uint64_t seed,
                                             const VectorField& u0, const DirectorField& n0,
                                             int s = 3, int band = 4);

}  // namespace nlc
