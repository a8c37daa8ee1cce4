#include "nlc/verify.hpp"

#include <cmath>

#include "nlc/diagnostics.hpp"
#include "nlc/incompressible.hpp"
#include "nlc/initial_data.hpp"
#include "nlc/observers.hpp"
#include "nlc/spectral.hpp"

namespace nlc {

VectorField ericksen_stress_div_tensor_form(const Field3& n, bool do_dealias) {
    const Grid& g = n.grid;
    const int d = g.dim;
    std::array<VectorField, 3> grads;
    for (int i = 0; i < 3; ++i) grads[static_cast<std::size_t>(i)] = gradient(n.comp[static_cast<std::size_t>(i)]);

    // T_jl = sum_i dj n_i dl n_i - 1/2 delta_jl |grad n|^2
    std::vector<std::vector<ScalarField>> T(static_cast<std::size_t>(d),
                                            std::vector<ScalarField>(static_cast<std::size_t>(d)));
    for (int j = 0; j < d; ++j)
        for (int l = 0; l < d; ++l) {
            ScalarField t(g);
            for (int i = 0; i < 3; ++i)
                for (std::size_t x = 0; x < t.size(); ++x)
                    t[x] += grads[static_cast<std::size_t>(i)].comp[static_cast<std::size_t>(j)][x] *
                            grads[static_cast<std::size_t>(i)].comp[static_cast<std::size_t>(l)][x];
            if (j == l) {
                for (std::size_t x = 0; x < t.size(); ++x) {
                    double gns = 0.0;
                    for (int i = 0; i < 3; ++i)
                        for (int m = 0; m < d; ++m) {
                            double v = grads[static_cast<std::size_t>(i)].comp[static_cast<std::size_t>(m)][x];
                            gns += v * v;
                        }
                    t[x] -= 0.5 * gns;
                }
            }
            T[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)] = do_dealias ? dealias(t) : t;
        }

    VectorField f(g);
    for (int j = 0; j < d; ++j)
        for (int l = 0; l < d; ++l)
            axpy(1.0, derivative(T[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)], l),
                 f.comp[static_cast<std::size_t>(j)]);
    return f;
}

namespace {

DirectorField seeded_unit_director(const Grid& g, std::uint64_t seed) {
    Field3 raw = default_director(g);
    for (int c = 0; c < 3; ++c)
        axpy(0.35, random_band_limited(g, seed + static_cast<std::uint64_t>(c), 2), raw.comp[c]);
    return normalize_director(raw);
}

}  // namespace

double stress_identity_discrepancy(const Grid& g, std::uint64_t seed) {
    DirectorField n = seeded_unit_director(g, seed);
    VectorField direct = ericksen_stress_div(n, true);
    VectorField tensor = ericksen_stress_div_tensor_form(n, true);
    double num = sobolev_norm(direct - tensor, 0);
    double den = sobolev_norm(direct, 0);
    return num / den;
}

EnergyLawResult compressible_energy_law(const Grid& g, const ModelParams& prm, double delta0,
                                        std::uint64_t seed, double dt, double t_end,
                                        Scheme scheme, double amplitude) {
    CompressibleState init = well_prepared_initial_data(
        g, prm, delta0, seed, taylor_green_velocity(g, amplitude), default_director(g));

    StepControl ctl;
    ctl.dt = dt;
    ctl.t_end = t_end;
    ctl.scheme = scheme;
    ctl.observer_stride = 1;

    CompressibleEnergyObserver obs;
    double mass0 = integrate(init.rho);
    run(init, ctl, {[&](const CompressibleState& s, const StepDiagnostics& d, long k) {
        obs(s, d, k);
    }});

    EnergyLawResult r;
    r.residual = std::fabs(obs.residual());
    r.mass_rel_drift = std::fabs(obs.mass() - mass0) / std::fabs(mass0);
    r.max_unit_drift = obs.max_unit_drift();
    return r;
}

EnergyLawResult incompressible_energy_law(const Grid& g, const ModelParams& prm, double dt,
                                          double t_end, Scheme scheme, double amplitude) {
    IncompressibleState init;
    init.u = taylor_green_velocity(g, amplitude);
    init.n = default_director(g);
    init.p = ScalarField(g);
    init.params = prm;

    StepControl ctl;
    ctl.dt = dt;
    ctl.t_end = t_end;
    ctl.scheme = scheme;
    ctl.observer_stride = 1;

    IncompressibleEnergyObserver obs;
    run_incompressible(init, ctl, {[&](const IncompressibleState& s, const StepDiagnostics& d,
                                       long k) { obs(s, d, k); }});

    EnergyLawResult r;
    r.residual = std::fabs(obs.residual());
    r.max_unit_drift = obs.max_unit_drift();
    r.max_div_u = obs.max_div_u();
    return r;
}

}  // namespace nlc
