#include "nlc/pressure.hpp"

#include <cmath>
#include <string>

#include "nlc/errors.hpp"

namespace nlc {

namespace {

void require_positive(const ScalarField& rho, const char* what) {
    for (std::size_t i = 0; i < rho.size(); ++i)
        if (!(rho[i] > 0.0))
            throw domain_error(std::string(what) + ": nonpositive density " +
                               std::to_string(rho[i]) + " at cell " + std::to_string(i));
}

template <typename F>
ScalarField map_field(const ScalarField& rho, F&& f) {
    ScalarField r = rho;
    for (double& v : r.values) v = f(v);
    return r;
}

}  // namespace

double PressureLaw::p(double rho) const { return std::pow(rho, gamma); }

double PressureLaw::p_prime(double rho) const { return gamma * std::pow(rho, gamma - 1.0); }

double PressureLaw::p_second(double rho) const {
    return gamma * (gamma - 1.0) * std::pow(rho, gamma - 2.0);
}

double PressureLaw::q(double rho) const {
    // rho * int_1^rho z^(gamma-2) dz
    return rho * (std::pow(rho, gamma - 1.0) - 1.0) / (gamma - 1.0);
}

ScalarField pressure(const ScalarField& rho, const PressureLaw& law) {
    require_positive(rho, "pressure");
    return map_field(rho, [&](double r) { return law.p(r); });
}

ScalarField p_prime(const ScalarField& rho, const PressureLaw& law) {
    require_positive(rho, "p_prime");
    return map_field(rho, [&](double r) { return law.p_prime(r); });
}

ScalarField p_second(const ScalarField& rho, const PressureLaw& law) {
    require_positive(rho, "p_second");
    return map_field(rho, [&](double r) { return law.p_second(r); });
}

ScalarField q_potential(const ScalarField& rho, const PressureLaw& law) {
    require_positive(rho, "q_potential");
    return map_field(rho, [&](double r) { return law.q(r); });
}

}  // namespace nlc
