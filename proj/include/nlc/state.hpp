#pragma once

#include "nlc/field.hpp"
#include "nlc/pressure.hpp"

namespace nlc {

/// Physical coefficients. mu, nu, theta > 0; 2 mu + N kappa >= 0; lambda >= 1.
/// The viscosities are lambda-independent constants.
struct ModelParams {
    double mu = 1.0;       // shear viscosity
    double kappa = 0.0;    // bulk viscosity
    double nu = 1.0;       // elastic coefficient
    double theta = 1.0;    // director relaxation
    double lambda = 10.0;  // penalization parameter
    double gamma = 2.0;    // pressure exponent

    PressureLaw pressure_law() const { return PressureLaw{gamma}; }
    void validate(int dim) const;
};

/// Snapshot of the compressible system: U = (rho, u, n) at one time.
struct CompressibleState {
    double time = 0.0;
    ScalarField rho;
    VectorField u;
    DirectorField n;
    ModelParams params;

    const Grid& grid() const { return rho.grid; }
    /// Regime checks for the nonconservative form: rho > 0, |rho - 1| < 1/2,
    /// director within unit_tol of S^2. Throws regime_error / domain_error.
    void validate(double unit_tol = default_unit_tol) const;
};

/// Snapshot of the limit system: divergence-free u, unit n, mean-zero p.
struct IncompressibleState {
    double time = 0.0;
    VectorField u;
    DirectorField n;
    ScalarField p;
    ModelParams params;

    const Grid& grid() const { return u.grid; }
    void validate(double div_tol = 1e-10, double unit_tol = default_unit_tol) const;
};

}  // namespace nlc
