#include "nlc/incompressible.hpp"

#include <cmath>
#include <string>

#include "nlc/errors.hpp"
#include "nlc/initial_data.hpp"
#include "nlc/spectral.hpp"

namespace nlc {

namespace {

void require_solenoidal(const VectorField& u, const char* what, double tol = 1e-8) {
    double dmax = max_abs(divergence(u));
    if (dmax > tol)
        throw precondition_error(std::string(what) + ": ||div u||_inf = " + std::to_string(dmax));
}

struct Nonlin {
    VectorField u;  // already Leray-projected
    Field3 n;
};

Nonlin explicit_terms(const IncompressibleState& s, bool deal) {
    const ModelParams& prm = s.params;
    Nonlin N;
    N.u = -1.0 * advect(s.u, s.u, deal);
    axpy(-prm.nu, ericksen_stress_div(s.n, deal), N.u);
    N.u = leray_project(N.u);

    N.n = -1.0 * advect(s.u, s.n, deal);
    ScalarField gns = grad_norm_squared(s.n, deal);
    for (int c = 0; c < 3; ++c) {
        ScalarField proj = multiply(gns, s.n.comp[c]);
        if (deal) proj = dealias(proj);
        axpy(prm.theta, proj, N.n.comp[c]);
    }
    return N;
}

class Integrator {
  public:
    Integrator(IncompressibleState init, StepControl ctl) : ctl_(ctl), cur_(std::move(init)) {
        ctl_.validate();
        cur_.params.validate(cur_.grid().dim);
        if (ctl_.scheme == Scheme::explicit_rk4_reference)
            throw config_error("explicit_rk4_reference is a compressible-only diagnostic scheme");
    }

    const IncompressibleState& state() const { return cur_; }

    StepDiagnostics advance() {
        const double dt = ctl_.dt;
        const Grid& g = cur_.grid();
        Nonlin nl = explicit_terms(cur_, ctl_.dealias);
        const bool bdf2 = ctl_.scheme == Scheme::imex_bdf2 && have_history_;
        const double a = bdf2 ? 1.5 : 1.0;

        VectorField ru = cur_.u;
        Field3 rn = cur_.n;
        if (bdf2) {
            ru = 2.0 * ru;
            axpy(-0.5, prev_.u, ru);
            axpy(2.0 * dt, nl.u, ru);
            axpy(-dt, nl_prev_.u, ru);
            rn = 2.0 * rn;
            axpy(-0.5, prev_.n, rn);
            axpy(2.0 * dt, nl.n, rn);
            axpy(-dt, nl_prev_.n, rn);
        } else {
            axpy(dt, nl.u, ru);
            axpy(dt, nl.n, rn);
        }

        IncompressibleState next;
        next.params = cur_.params;
        next.time = cur_.time + dt;
        next.p = cur_.p;  // carried along; recover_pressure refreshes on demand

        // diffusion implicit: per-mode diagonal division, then re-project
        next.u = VectorField(g);
        for (int j = 0; j < g.dim; ++j) {
            Spectrum s = to_spectrum(ru.comp[static_cast<std::size_t>(j)]);
            const ModeTable table(g);
            for_each_mode(table, [&](std::size_t idx, const std::array<double, 3>&,
                                     const std::array<double, 3>&, double k2, double, bool) {
                s.c[idx] /= (a + dt * cur_.params.mu * k2);
            });
            next.u.comp[static_cast<std::size_t>(j)] = to_field(s);
        }
        next.u = leray_project(next.u);

        next.n = Field3(g);
        for (int c = 0; c < 3; ++c) {
            Spectrum s = to_spectrum(rn.comp[c]);
            const ModeTable table(g);
            for_each_mode(table, [&](std::size_t idx, const std::array<double, 3>&,
                                     const std::array<double, 3>&, double k2, double, bool) {
                s.c[idx] /= (a + dt * cur_.params.theta * k2);
            });
            next.n.comp[c] = to_field(s);
        }

        StepDiagnostics diag;
        diag.unit_drift = unit_deviation(next.n);
        if (ctl_.renormalize_director) next.n = normalize_director(next.n);

        ++steps_;
        if (!all_finite(next.u) || !all_finite(next.n))
            throw blowup_error("incompressible run blew up (NaN/Inf) at t = " +
                                   std::to_string(next.time),
                               next.time, steps_);

        prev_ = std::move(cur_);
        nl_prev_ = std::move(nl);
        have_history_ = true;
        cur_ = std::move(next);
        return diag;
    }

  private:
    StepControl ctl_;
    IncompressibleState cur_, prev_;
    Nonlin nl_prev_;
    bool have_history_ = false;
    long steps_ = 0;
};

}  // namespace

IncompressibleRHS eval_rhs_incompressible(const IncompressibleState& state, bool do_dealias) {
    require_solenoidal(state.u, "incompressible rhs");
    Nonlin N = explicit_terms(state, do_dealias);
    IncompressibleRHS rhs{std::move(N.u), std::move(N.n)};
    // linear parts
    axpy(state.params.mu, leray_project(laplacian(state.u)), rhs.d_u);
    axpy(state.params.theta, laplacian(state.n), rhs.d_n);
    return rhs;
}

ScalarField recover_pressure(const IncompressibleState& state, bool do_dealias) {
    VectorField force = advect(state.u, state.u, do_dealias);
    axpy(state.params.nu, ericksen_stress_div(state.n, do_dealias), force);
    return solve_poisson_neg(divergence(force));
}

IncompressibleState step_incompressible(const IncompressibleState& state, const StepControl& ctl,
                                        StepDiagnostics* diag) {
    Integrator integ(state, ctl);
    StepDiagnostics d = integ.advance();
    if (diag) *diag = d;
    return integ.state();
}

std::vector<IncompressibleState> run_incompressible(
    const IncompressibleState& initial, const StepControl& ctl,
    const std::vector<IncompressibleObserver>& observers) {
    ctl.validate();
    initial.validate();
    std::vector<IncompressibleState> traj;
    StepDiagnostics diag0;
    for (const auto& ob : observers) ob(initial, diag0, 0);
    traj.push_back(initial);
    if (ctl.t_end <= 0.0) return traj;

    long nsteps = std::max<long>(1, std::lround(ctl.t_end / ctl.dt));
    StepControl eff = ctl;
    eff.dt = ctl.t_end / static_cast<double>(nsteps);

    Integrator integ(initial, eff);
    for (long k = 1; k <= nsteps; ++k) {
        StepDiagnostics diag = integ.advance();
        if (k % eff.observer_stride == 0 || k == nsteps) {
            for (const auto& ob : observers) ob(integ.state(), diag, k);
            traj.push_back(integ.state());
        }
    }
    return traj;
}

}  // namespace nlc
