#pragma once

#include "nlc/field.hpp"

namespace nlc {

/// Barotropic pressure law P(rho) = rho^gamma, gamma > 1, so P'(rho) > 0 for
/// rho > 0. Q is the associated potential rho * int_1^rho P(z)/z^2 dz, which
/// has the closed form rho (rho^(gamma-1) - 1)/(gamma - 1).
struct PressureLaw {
    double gamma = 2.0;

    double p(double rho) const;
    double p_prime(double rho) const;
    double p_second(double rho) const;
    double q(double rho) const;
};

// Pointwise field versions; nonpositive density raises domain_error naming
// the offending cell.
ScalarField pressure(const ScalarField& rho, const PressureLaw& law);
ScalarField p_prime(const ScalarField& rho, const PressureLaw& law);
ScalarField p_second(const ScalarField& rho, const PressureLaw& law);
ScalarField q_potential(const ScalarField& rho, const PressureLaw& law);

}  // namespace nlc
