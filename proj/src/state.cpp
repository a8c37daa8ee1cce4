#include "nlc/state.hpp"

#include <cmath>
#include <string>

#include "nlc/errors.hpp"
#include "nlc/spectral.hpp"

namespace nlc {

void ModelParams::validate(int dim) const {
    if (!(mu > 0.0) || !(nu > 0.0) || !(theta > 0.0))
        throw domain_error("ModelParams: mu, nu, theta must be positive");
    if (2.0 * mu + dim * kappa < 0.0)
        throw domain_error("ModelParams: 2*mu + N*kappa must be nonnegative");
    if (!(lambda >= 1.0)) throw domain_error("ModelParams: lambda must be >= 1");
    if (!(gamma > 1.0)) throw domain_error("ModelParams: gamma must be > 1");
}

void CompressibleState::validate(double unit_tol) const {
    params.validate(grid().dim);
    require_same_grid(rho.grid, u.grid, "CompressibleState");
    require_same_grid(rho.grid, n.grid, "CompressibleState");
    if (!all_finite(rho) || !all_finite(u) || !all_finite(n))
        throw numeric_error("CompressibleState: non-finite fields");
    double dev = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (!(rho[i] > 0.0))
            throw domain_error("CompressibleState: nonpositive density at cell " +
                               std::to_string(i));
        dev = std::max(dev, std::fabs(rho[i] - 1.0));
    }
    if (dev >= 0.5)
        throw regime_error("CompressibleState: |rho - 1| = " + std::to_string(dev) +
                           " leaves the nonconservative-form regime");
    check_unit_constraint(n, unit_tol);
}

void IncompressibleState::validate(double div_tol, double unit_tol) const {
    params.validate(grid().dim);
    require_same_grid(u.grid, n.grid, "IncompressibleState");
    require_same_grid(u.grid, p.grid, "IncompressibleState");
    if (!all_finite(u) || !all_finite(n) || !all_finite(p))
        throw numeric_error("IncompressibleState: non-finite fields");
    double dmax = max_abs(divergence(u));
    if (dmax > div_tol)
        throw precondition_error("IncompressibleState: ||div u||_inf = " +
                                 std::to_string(dmax));
    double mean = integrate(p) / p.grid.volume();
    if (std::fabs(mean) > 1e-10)
        throw precondition_error("IncompressibleState: pressure mean " + std::to_string(mean));
    check_unit_constraint(n, unit_tol);
}

}  // namespace nlc
