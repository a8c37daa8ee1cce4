#include "nlc/compressible.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "imex_detail.hpp"
#include "nlc/errors.hpp"
#include "nlc/initial_data.hpp"
#include "nlc/spectral.hpp"

namespace nlc {

Scheme scheme_from_string(const std::string& s) {
    if (s == "imex_bdf2") return Scheme::imex_bdf2;
    if (s == "imex_euler") return Scheme::imex_euler;
    if (s == "explicit_rk4_reference" || s == "rk4") return Scheme::explicit_rk4_reference;
    throw config_error("unknown scheme: " + s);
}

std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::imex_bdf2: return "imex_bdf2";
        case Scheme::imex_euler: return "imex_euler";
        default: return "explicit_rk4_reference";
    }
}

void StepControl::validate() const {
    if (!(dt > 0.0)) throw domain_error("StepControl: dt must be positive");
    if (t_end < 0.0) throw domain_error("StepControl: t_end must be nonnegative");
    if (t_end > 0.0 && dt > t_end * (1.0 + 1e-12))
        throw domain_error("StepControl: dt exceeds t_end");
    if (observer_stride < 1) throw domain_error("StepControl: observer_stride must be >= 1");
}

VectorField ericksen_stress_div(const Field3& n, bool do_dealias) {
    VectorField acc(n.grid);
    for (int i = 0; i < 3; ++i) {
        ScalarField lap = laplacian(n.comp[i]);
        VectorField grd = gradient(n.comp[i]);
        for (int j = 0; j < n.grid.dim; ++j)
            for (std::size_t x = 0; x < lap.size(); ++x)
                acc.comp[static_cast<std::size_t>(j)][x] += lap[x] * grd.comp[static_cast<std::size_t>(j)][x];
    }
    return do_dealias ? dealias(acc) : acc;
}

namespace {

void require_regime(const ScalarField& rho, const char* what) {
    double dev = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        if (!(rho[i] > 0.0))
            throw regime_error(std::string(what) + ": nonpositive density at cell " +
                               std::to_string(i));
        dev = std::max(dev, std::fabs(rho[i] - 1.0));
    }
    if (dev >= 0.5)
        throw regime_error(std::string(what) + ": |rho-1| = " + std::to_string(dev) +
                           " >= 1/2, outside the nonconservative regime");
}

ScalarField sigma_of(const CompressibleState& s) {
    ScalarField sig = s.rho;
    for (double& v : sig.values) v -= 1.0;
    return sig;
}

/// Explicit (nonlinearly coupled) part of the nonconservative right side;
/// the remaining linear acoustic/viscous part is handled per mode.
struct Nonlin {
    ScalarField sig;
    VectorField u;
    Field3 n;
};

Nonlin explicit_terms(const CompressibleState& s, bool deal) {
    require_regime(s.rho, "compressible rhs");
    const Grid& g = s.grid();
    const PressureLaw law = s.params.pressure_law();
    const double lam2 = s.params.lambda * s.params.lambda;
    const double pp1 = law.p_prime(1.0);

    Nonlin N;
    ScalarField sig = sigma_of(s);

    // mass: -div(sigma u)
    VectorField su(g);
    for (int j = 0; j < g.dim; ++j) {
        su.comp[static_cast<std::size_t>(j)] = multiply(sig, s.u.comp[static_cast<std::size_t>(j)]);
        if (deal) su.comp[static_cast<std::size_t>(j)] = dealias(su.comp[static_cast<std::size_t>(j)]);
    }
    N.sig = -1.0 * divergence(su);

    // momentum
    N.u = -1.0 * advect(s.u, s.u, deal);

    ScalarField inv_rho = s.rho;
    for (double& v : inv_rho.values) v = 1.0 / v;
    ScalarField inv_rho_m1 = inv_rho;
    for (double& v : inv_rho_m1.values) v -= 1.0;

    // nonlinear pressure remainder lambda^2 (P'(rho)/rho - P'(1)) grad sigma
    // (identically zero for gamma = 2)
    ScalarField pcoef(g);
    for (std::size_t i = 0; i < pcoef.size(); ++i)
        pcoef[i] = lam2 * (law.p_prime(s.rho[i]) * inv_rho[i] - pp1);
    VectorField gsig = gradient(sig);
    VectorField lap_u = laplacian(s.u);
    VectorField gdiv = gradient(divergence(s.u));
    VectorField eric = ericksen_stress_div(s.n, deal);
    const double mu = s.params.mu, kpm = s.params.kappa + s.params.mu, nu = s.params.nu;
    for (int j = 0; j < g.dim; ++j) {
        std::size_t ju = static_cast<std::size_t>(j);
        ScalarField term = multiply(pcoef, gsig.comp[ju]);
        axpy(-mu, multiply(inv_rho_m1, lap_u.comp[ju]), term);
        axpy(-kpm, multiply(inv_rho_m1, gdiv.comp[ju]), term);
        axpy(nu, multiply(inv_rho, eric.comp[ju]), term);
        if (deal) term = dealias(term);
        axpy(-1.0, term, N.u.comp[ju]);
    }

    // director: -(u.grad)n + theta |grad n|^2 n
    N.n = -1.0 * advect(s.u, s.n, deal);
    ScalarField gns = grad_norm_squared(s.n, deal);
    for (int c = 0; c < 3; ++c) {
        ScalarField proj = multiply(gns, s.n.comp[c]);
        if (deal) proj = dealias(proj);
        axpy(s.params.theta, proj, N.n.comp[c]);
    }
    return N;
}

/// Linear (implicitly treated) part applied spectrally; used for the public
/// RHS and the RK4 reference.
void add_linear_part(const CompressibleState& s, CompressibleRHS& rhs) {
    const double lam2pp1 = s.params.lambda * s.params.lambda * s.params.pressure_law().p_prime(1.0);
    ScalarField sig = sigma_of(s);
    ScalarField div_u = divergence(s.u);
    axpy(-1.0, div_u, rhs.d_rho);
    VectorField gsig = gradient(sig);
    VectorField lap_u = laplacian(s.u);
    VectorField gdiv = gradient(div_u);
    for (int j = 0; j < s.grid().dim; ++j) {
        std::size_t ju = static_cast<std::size_t>(j);
        axpy(-lam2pp1, gsig.comp[ju], rhs.d_u.comp[ju]);
        axpy(s.params.mu, lap_u.comp[ju], rhs.d_u.comp[ju]);
        axpy(s.params.kappa + s.params.mu, gdiv.comp[ju], rhs.d_u.comp[ju]);
    }
    Field3 lap_n = laplacian(s.n);
    axpy(s.params.theta, lap_n, rhs.d_n);
}

double explicit_pressure_cap(const CompressibleState& s) {
    const PressureLaw law = s.params.pressure_law();
    const double pp1 = law.p_prime(1.0);
    double rmax = 0.0;
    for (std::size_t i = 0; i < s.rho.size(); ++i)
        rmax = std::max(rmax, std::fabs(law.p_prime(s.rho[i]) / s.rho[i] - pp1));
    if (rmax == 0.0) return std::numeric_limits<double>::infinity();
    double kmax = 0.0;
    for (int j = 0; j < s.grid().dim; ++j)
        kmax = std::max(kmax, two_pi / s.grid().length[static_cast<std::size_t>(j)] *
                                  (s.grid().sizes[static_cast<std::size_t>(j)] / 3));
    // remainder behaves like an extra acoustic speed lambda * sqrt(rmax)
    return 0.5 / (s.params.lambda * std::sqrt(rmax) * kmax);
}

class Integrator {
  public:
    Integrator(CompressibleState init, StepControl ctl) : ctl_(ctl), cur_(std::move(init)) {
        ctl_.validate();
        cur_.params.validate(cur_.grid().dim);
        if (ctl_.scheme == Scheme::explicit_rk4_reference) {
            double cap = rk4_stable_dt(cur_, ctl_.dealias);
            if (ctl_.dt > cap)
                throw stability_error("explicit_rk4_reference: dt = " + std::to_string(ctl_.dt) +
                                      " exceeds stability bound " + std::to_string(cap));
        } else {
            double cap = explicit_pressure_cap(cur_);
            if (ctl_.dt > cap)
                throw stability_error("imex: dt exceeds explicit pressure-remainder cap " +
                                      std::to_string(cap));
        }
    }

    const CompressibleState& state() const { return cur_; }

    StepDiagnostics advance() {
        StepDiagnostics diag;
        if (ctl_.scheme == Scheme::explicit_rk4_reference)
            advance_rk4(diag);
        else
            advance_imex(diag);
        ++steps_;
        if (!all_finite(cur_.rho) || !all_finite(cur_.u) || !all_finite(cur_.n))
            throw blowup_error("compressible run blew up (NaN/Inf) at t = " +
                                   std::to_string(cur_.time),
                               cur_.time, steps_);
        return diag;
    }

  private:
    void finish_director(CompressibleState& next, StepDiagnostics& diag) {
        diag.unit_drift = unit_deviation(next.n);
        if (ctl_.renormalize_director) next.n = normalize_director(next.n);
    }

    void advance_imex(StepDiagnostics& diag) {
        const double dt = ctl_.dt;
        const Grid& g = cur_.grid();
        Nonlin nl = explicit_terms(cur_, ctl_.dealias);
        const bool bdf2 = ctl_.scheme == Scheme::imex_bdf2 && have_history_;
        const double a = bdf2 ? 1.5 : 1.0;

        ScalarField rsig = sigma_of(cur_);
        VectorField ru = cur_.u;
        Field3 rn = cur_.n;
        if (bdf2) {
            rsig = 2.0 * rsig;
            axpy(-0.5, sigma_of(prev_), rsig);
            axpy(2.0 * dt, nl.sig, rsig);
            axpy(-dt, nl_prev_.sig, rsig);
            ru = 2.0 * ru;
            axpy(-0.5, prev_.u, ru);
            axpy(2.0 * dt, nl.u, ru);
            axpy(-dt, nl_prev_.u, ru);
            rn = 2.0 * rn;
            axpy(-0.5, prev_.n, rn);
            axpy(2.0 * dt, nl.n, rn);
            axpy(-dt, nl_prev_.n, rn);
        } else {
            axpy(dt, nl.sig, rsig);
            axpy(dt, nl.u, ru);
            axpy(dt, nl.n, rn);
        }

        Spectrum ssig = to_spectrum(rsig);
        std::vector<Spectrum> su(static_cast<std::size_t>(g.dim));
        for (int j = 0; j < g.dim; ++j) su[static_cast<std::size_t>(j)] = to_spectrum(ru.comp[static_cast<std::size_t>(j)]);
        std::array<Spectrum, 3> sn;
        for (int c = 0; c < 3; ++c) sn[static_cast<std::size_t>(c)] = to_spectrum(rn.comp[static_cast<std::size_t>(c)]);

        detail::implicit_solve(g, cur_.params, a, dt, ssig, su, sn);

        CompressibleState next;
        next.params = cur_.params;
        next.time = cur_.time + dt;
        next.rho = to_field(ssig);
        for (double& v : next.rho.values) v += 1.0;
        next.u = VectorField(g);
        for (int j = 0; j < g.dim; ++j) next.u.comp[static_cast<std::size_t>(j)] = to_field(su[static_cast<std::size_t>(j)]);
        next.n = Field3(g);
        for (int c = 0; c < 3; ++c) next.n.comp[static_cast<std::size_t>(c)] = to_field(sn[static_cast<std::size_t>(c)]);
        finish_director(next, diag);

        prev_ = std::move(cur_);
        nl_prev_ = std::move(nl);
        have_history_ = true;
        cur_ = std::move(next);
    }

    CompressibleState state_axpy(const CompressibleState& base, double c,
                                 const CompressibleRHS& k) const {
        CompressibleState r = base;
        axpy(c, k.d_rho, r.rho);
        axpy(c, k.d_u, r.u);
        axpy(c, k.d_n, r.n);
        return r;
    }

    void advance_rk4(StepDiagnostics& diag) {
        const double dt = ctl_.dt;
        CompressibleRHS k1 = eval_rhs_nonconservative(cur_, ctl_.dealias);
        CompressibleState s2 = state_axpy(cur_, 0.5 * dt, k1);
        CompressibleRHS k2 = eval_rhs_nonconservative(s2, ctl_.dealias);
        CompressibleState s3 = state_axpy(cur_, 0.5 * dt, k2);
        CompressibleRHS k3 = eval_rhs_nonconservative(s3, ctl_.dealias);
        CompressibleState s4 = state_axpy(cur_, dt, k3);
        CompressibleRHS k4 = eval_rhs_nonconservative(s4, ctl_.dealias);

        CompressibleState next = cur_;
        next.time = cur_.time + dt;
        const double w = dt / 6.0;
        axpy(w, k1.d_rho, next.rho);
        axpy(2.0 * w, k2.d_rho, next.rho);
        axpy(2.0 * w, k3.d_rho, next.rho);
        axpy(w, k4.d_rho, next.rho);
        axpy(w, k1.d_u, next.u);
        axpy(2.0 * w, k2.d_u, next.u);
        axpy(2.0 * w, k3.d_u, next.u);
        axpy(w, k4.d_u, next.u);
        axpy(w, k1.d_n, next.n);
        axpy(2.0 * w, k2.d_n, next.n);
        axpy(2.0 * w, k3.d_n, next.n);
        axpy(w, k4.d_n, next.n);
        finish_director(next, diag);
        cur_ = std::move(next);
    }

    StepControl ctl_;
    CompressibleState cur_, prev_;
    Nonlin nl_prev_;
    bool have_history_ = false;
    long steps_ = 0;
};

}  // namespace

CompressibleRHS eval_rhs_nonconservative(const CompressibleState& state, bool do_dealias) {
    Nonlin N = explicit_terms(state, do_dealias);
    CompressibleRHS rhs{std::move(N.sig), std::move(N.u), std::move(N.n)};
    add_linear_part(state, rhs);
    return rhs;
}

CompressibleRHS eval_rhs_conservative(const CompressibleState& state, bool do_dealias) {
    require_regime(state.rho, "compressible rhs (conservative)");
    const Grid& g = state.grid();
    const int d = g.dim;
    const ModelParams& prm = state.params;
    const PressureLaw law = prm.pressure_law();
    auto dl = [&](ScalarField f) { return do_dealias ? dealias(f) : f; };

    VectorField m(g);  // momentum rho u
    for (int j = 0; j < d; ++j)
        m.comp[static_cast<std::size_t>(j)] = dl(multiply(state.rho, state.u.comp[static_cast<std::size_t>(j)]));

    CompressibleRHS rhs;
    rhs.d_rho = -1.0 * divergence(m);

    ScalarField P(g);
    for (std::size_t i = 0; i < P.size(); ++i) P[i] = law.p(state.rho[i]);
    P = dl(P);
    VectorField gradP = gradient(P);
    VectorField lap_u = laplacian(state.u);
    VectorField gdiv = gradient(divergence(state.u));
    VectorField eric = ericksen_stress_div(state.n, do_dealias);

    ScalarField inv_rho = state.rho;
    for (double& v : inv_rho.values) v = 1.0 / v;

    rhs.d_u = VectorField(g);
    const double lam2 = prm.lambda * prm.lambda;
    for (int j = 0; j < d; ++j) {
        std::size_t ju = static_cast<std::size_t>(j);
        ScalarField dm(g);  // (rho u_j)_t
        for (int l = 0; l < d; ++l)
            axpy(-1.0, derivative(dl(multiply(m.comp[ju], state.u.comp[static_cast<std::size_t>(l)])), l), dm);
        axpy(-lam2, gradP.comp[ju], dm);
        axpy(prm.mu, lap_u.comp[ju], dm);
        axpy(prm.kappa + prm.mu, gdiv.comp[ju], dm);
        axpy(-prm.nu, eric.comp[ju], dm);
        // du = (dm - u drho)/rho
        ScalarField num = dm - multiply(state.u.comp[ju], rhs.d_rho);
        rhs.d_u.comp[ju] = dl(multiply(num, inv_rho));
    }

    rhs.d_n = Field3(g);
    Field3 lap_n = laplacian(state.n);
    axpy(prm.theta, lap_n, rhs.d_n);
    axpy(-1.0, advect(state.u, state.n, do_dealias), rhs.d_n);
    ScalarField gns = grad_norm_squared(state.n, do_dealias);
    for (int c = 0; c < 3; ++c)
        axpy(prm.theta, dl(multiply(gns, state.n.comp[static_cast<std::size_t>(c)])), rhs.d_n.comp[static_cast<std::size_t>(c)]);
    return rhs;
}

double rk4_stable_dt(const CompressibleState& state, bool dealiased_band) {
    const Grid& g = state.grid();
    double k2max = 0.0, kmax = 0.0;
    for (int j = 0; j < g.dim; ++j) {
        int m = g.sizes[static_cast<std::size_t>(j)];
        int f = dealiased_band ? m / 3 : m / 2;
        double kj = two_pi / g.length[static_cast<std::size_t>(j)] * f;
        k2max += kj * kj;
        kmax = std::max(kmax, kj);
    }
    double knorm = std::sqrt(k2max);
    const ModelParams& p = state.params;
    double acoustic = p.lambda * std::sqrt(p.pressure_law().p_prime(1.0)) * knorm;
    double transport = max_abs(state.u) * knorm;
    double imag_rate = acoustic + transport;
    double real_rate = std::max({2.0 * p.mu + p.kappa, p.mu, p.theta}) * k2max;
    double dt_imag = imag_rate > 0.0 ? 2.82 / imag_rate : std::numeric_limits<double>::infinity();
    double dt_real = real_rate > 0.0 ? 2.78 / real_rate : std::numeric_limits<double>::infinity();
    return std::min(dt_imag, dt_real);
}

CompressibleState step(const CompressibleState& state, const StepControl& ctl,
                       StepDiagnostics* diag) {
    Integrator integ(state, ctl);
    StepDiagnostics d = integ.advance();
    if (diag) *diag = d;
    return integ.state();
}

std::vector<CompressibleState> run(const CompressibleState& initial, const StepControl& ctl,
                                   const std::vector<CompressibleObserver>& observers) {
    ctl.validate();
    initial.validate();
    std::vector<CompressibleState> traj;
    StepDiagnostics diag0;
    for (const auto& ob : observers) ob(initial, diag0, 0);
    traj.push_back(initial);
    if (ctl.t_end <= 0.0) return traj;

    long nsteps = std::max<long>(1, std::lround(ctl.t_end / ctl.dt));
    StepControl eff = ctl;
    eff.dt = ctl.t_end / static_cast<double>(nsteps);

    Integrator integ(initial, eff);
    for (long k = 1; k <= nsteps; ++k) {
        StepDiagnostics diag;
        try {
            diag = integ.advance();
        } catch (const blowup_error&) {
            throw;
        } catch (const regime_error& e) {
            throw regime_error(std::string(e.what()) + " (step " + std::to_string(k) + ", t = " +
                               std::to_string(initial.time + k * eff.dt) + ")");
        }
        if (k % eff.observer_stride == 0 || k == nsteps) {
            for (const auto& ob : observers) ob(integ.state(), diag, k);
            traj.push_back(integ.state());
        }
    }
    return traj;
}

}  // namespace nlc
