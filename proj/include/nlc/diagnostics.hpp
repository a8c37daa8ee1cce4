#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nlc/state.hpp"

namespace nlc {

/// The paper-style order-s energies. E_s carries the lambda^2 density
/// weighting; the tilded versions weight the density part by P'(rho)/rho and
/// the velocity part by rho. The director contribution counts gradient shells
/// 1 <= |alpha| <= s (the zeroth shell of a unit field is the constant domain
/// volume, so equilibrium measures zero). F_s replaces the director sum by
/// sum_(|beta| <= s-1) ||grad grad^beta n||^2.
struct EnergyFunctionals {
    double e_s = 0.0;
    double e_s_tilde = 0.0;
    double f_s = 0.0;
    double f_s_tilde = 0.0;
    int s = 0;
};

EnergyFunctionals energy_functionals(const CompressibleState& state, int s);

/// Parts of the modulated (relative) energy between a compressible state and
/// an incompressible reference at the same time.
struct ModulatedEnergy {
    double velocity_part = 0.0;   // 1/2 int |sqrt(rho) u^lam - u|^2
    double director_l2 = 0.0;     // nu/2 int |n^lam - n|^2
    double director_grad = 0.0;   // nu/2 int |grad n^lam - grad n|^2
    double pi_lambda = 0.0;       // int lambda^2 [Q(rho) - P(1)(rho - 1)]

    double total() const { return velocity_part + director_l2 + director_grad + pi_lambda; }
};

ModulatedEnergy modulated_energy(const CompressibleState& comp, const IncompressibleState& incomp);

/// Ordinary least squares of log(error) against log(lambda).
/// Requires >= 3 points with positive errors.
std::pair<double, double> fit_rate(const std::vector<std::pair<double, double>>& points);

// Scalar energy pieces shared by observers and acceptance checks.
double kinetic_energy(const CompressibleState& s);          // int 1/2 rho |u|^2
double kinetic_energy(const IncompressibleState& s);        // int 1/2 |u|^2
double elastic_energy(const Grid& g, const Field3& n, double nu);  // nu/2 int |grad n|^2
double acoustic_energy(const CompressibleState& s);         // lambda^2 int Q(rho)
/// mu ||grad u||^2 + (kappa+mu) ||div u||^2 + nu theta ||Lap n + |grad n|^2 n||^2
double dissipation_rate(const CompressibleState& s);
/// mu ||grad u||^2 + nu theta ||Lap n + |grad n|^2 n||^2
double dissipation_rate(const IncompressibleState& s);

}  // namespace nlc
