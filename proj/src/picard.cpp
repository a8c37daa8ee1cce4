#include "nlc/picard.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "imex_detail.hpp"
#include "nlc/errors.hpp"
#include "nlc/initial_data.hpp"
#include "nlc/spectral.hpp"

namespace nlc {

VTrajectory::VTrajectory(std::vector<double> times, std::vector<LinearizationInput> snaps)
    : times_(std::move(times)), snaps_(std::move(snaps)) {
    if (times_.empty() || times_.size() != snaps_.size())
        throw shape_error("VTrajectory: times/snapshots mismatch");
    for (std::size_t i = 1; i < times_.size(); ++i)
        if (!(times_[i] > times_[i - 1])) throw shape_error("VTrajectory: times not increasing");
}

VTrajectory VTrajectory::constant(LinearizationInput v) {
    return VTrajectory({0.0}, {std::move(v)});
}

VTrajectory VTrajectory::from_states(const std::vector<CompressibleState>& traj) {
    std::vector<double> times;
    std::vector<LinearizationInput> snaps;
    times.reserve(traj.size());
    snaps.reserve(traj.size());
    for (const auto& s : traj) {
        times.push_back(s.time);
        snaps.push_back(LinearizationInput::from_state(s));
    }
    return VTrajectory(std::move(times), std::move(snaps));
}

LinearizationInput VTrajectory::eval(double t) const {
    if (snaps_.size() == 1 || t <= times_.front()) return snaps_.front();
    if (t >= times_.back()) return snaps_.back();
    std::size_t hi = 1;
    while (times_[hi] < t) ++hi;
    std::size_t lo = hi - 1;
    double w = (t - times_[lo]) / (times_[hi] - times_[lo]);
    if (w <= 0.0) return snaps_[lo];
    if (w >= 1.0) return snaps_[hi];
    LinearizationInput r = snaps_[lo];
    r.xi = (1.0 - w) * r.xi;
    axpy(w, snaps_[hi].xi, r.xi);
    r.v = (1.0 - w) * r.v;
    axpy(w, snaps_[hi].v, r.v);
    r.m = (1.0 - w) * r.m;
    axpy(w, snaps_[hi].m, r.m);
    return r;
}

namespace {

void require_xi_regime(const ScalarField& xi) {
    double dev = 0.0;
    for (std::size_t i = 0; i < xi.size(); ++i) {
        if (!(xi[i] > 0.0))
            throw precondition_error("linearized_step: nonpositive frozen density");
        dev = std::max(dev, std::fabs(xi[i] - 1.0));
    }
    if (dev >= 0.5)
        throw precondition_error("linearized_step: |xi - 1| = " + std::to_string(dev) + " >= 1/2");
}

struct Nonlin {
    ScalarField sig;
    VectorField u;
    Field3 n;
};

// Frozen-coefficient explicit terms: everything except the constant-coefficient
// acoustic pair and the Laplacians.
Nonlin explicit_terms_linearized(const LinearizationInput& V, const CompressibleState& U,
                                 bool deal) {
    require_xi_regime(V.xi);
    const Grid& g = U.grid();
    const ModelParams& prm = U.params;
    const PressureLaw law = prm.pressure_law();
    const double lam2 = prm.lambda * prm.lambda;
    const double pp1 = law.p_prime(1.0);

    Nonlin N;
    ScalarField sig = U.rho;
    for (double& v : sig.values) v -= 1.0;

    // rho: -(v.grad)sigma - (xi - 1) div u
    N.sig = -1.0 * advect(V.v, sig, deal);
    ScalarField xim1 = V.xi;
    for (double& v : xim1.values) v -= 1.0;
    ScalarField coupling = multiply(xim1, divergence(U.u));
    if (deal) coupling = dealias(coupling);
    axpy(-1.0, coupling, N.sig);

    // u: -(v.grad)u - lam^2 (P'(xi)/xi - P'(1)) grad sigma
    //    + mu (1/xi - 1) Lap u + (kappa+mu)(1/xi - 1) grad div u - (nu/xi) Lap n . grad n
    N.u = -1.0 * advect(V.v, U.u, deal);
    ScalarField inv_xi = V.xi;
    for (double& v : inv_xi.values) v = 1.0 / v;
    ScalarField inv_xi_m1 = inv_xi;
    for (double& v : inv_xi_m1.values) v -= 1.0;
    ScalarField pcoef(g);
    for (std::size_t i = 0; i < pcoef.size(); ++i)
        pcoef[i] = lam2 * (law.p_prime(V.xi[i]) * inv_xi[i] - pp1);
    VectorField gsig = gradient(sig);
    VectorField lap_u = laplacian(U.u);
    VectorField gdiv = gradient(divergence(U.u));
    VectorField eric = ericksen_stress_div(U.n, deal);
    for (int j = 0; j < g.dim; ++j) {
        std::size_t ju = static_cast<std::size_t>(j);
        ScalarField term = multiply(pcoef, gsig.comp[ju]);
        axpy(-prm.mu, multiply(inv_xi_m1, lap_u.comp[ju]), term);
        axpy(-(prm.kappa + prm.mu), multiply(inv_xi_m1, gdiv.comp[ju]), term);
        axpy(prm.nu, multiply(inv_xi, eric.comp[ju]), term);
        if (deal) term = dealias(term);
        axpy(-1.0, term, N.u.comp[ju]);
    }

    // n: -(v.grad)n + theta |grad m|^2 n   (the frozen source, not |grad n|^2)
    N.n = -1.0 * advect(V.v, U.n, deal);
    ScalarField gms = grad_norm_squared(V.m, deal);
    for (int c = 0; c < 3; ++c) {
        ScalarField proj = multiply(gms, U.n.comp[c]);
        if (deal) proj = dealias(proj);
        axpy(prm.theta, proj, N.n.comp[c]);
    }
    return N;
}

}  // namespace

std::vector<CompressibleState> linearized_step(const VTrajectory& V,
                                               const CompressibleState& U_init,
                                               const StepControl& ctl) {
    ctl.validate();
    const Grid& g = U_init.grid();
    std::vector<CompressibleState> traj{U_init};
    if (ctl.t_end <= 0.0) return traj;
    long nsteps = std::max<long>(1, std::lround(ctl.t_end / ctl.dt));
    const double dt = ctl.t_end / static_cast<double>(nsteps);

    CompressibleState cur = U_init, prev;
    Nonlin nl_prev;
    bool have_history = false;
    traj.reserve(static_cast<std::size_t>(nsteps) + 1);

    for (long k = 1; k <= nsteps; ++k) {
        LinearizationInput Vk = V.eval(cur.time);
        Nonlin nl = explicit_terms_linearized(Vk, cur, ctl.dealias);
        const bool bdf2 = ctl.scheme == Scheme::imex_bdf2 && have_history;
        const double a = bdf2 ? 1.5 : 1.0;

        ScalarField rsig = cur.rho;
        for (double& v : rsig.values) v -= 1.0;
        VectorField ru = cur.u;
        Field3 rn = cur.n;
        if (bdf2) {
            ScalarField psig = prev.rho;
            for (double& v : psig.values) v -= 1.0;
            rsig = 2.0 * rsig;
            axpy(-0.5, psig, rsig);
            axpy(2.0 * dt, nl.sig, rsig);
            axpy(-dt, nl_prev.sig, rsig);
            ru = 2.0 * ru;
            axpy(-0.5, prev.u, ru);
            axpy(2.0 * dt, nl.u, ru);
            axpy(-dt, nl_prev.u, ru);
            rn = 2.0 * rn;
            axpy(-0.5, prev.n, rn);
            axpy(2.0 * dt, nl.n, rn);
            axpy(-dt, nl_prev.n, rn);
        } else {
            axpy(dt, nl.sig, rsig);
            axpy(dt, nl.u, ru);
            axpy(dt, nl.n, rn);
        }

        Spectrum ssig = to_spectrum(rsig);
        std::vector<Spectrum> su(static_cast<std::size_t>(g.dim));
        for (int j = 0; j < g.dim; ++j)
            su[static_cast<std::size_t>(j)] = to_spectrum(ru.comp[static_cast<std::size_t>(j)]);
        std::array<Spectrum, 3> sn;
        for (int c = 0; c < 3; ++c) sn[static_cast<std::size_t>(c)] = to_spectrum(rn.comp[static_cast<std::size_t>(c)]);
        detail::implicit_solve(g, cur.params, a, dt, ssig, su, sn);

        CompressibleState next;
        next.params = cur.params;
        next.time = cur.time + dt;
        next.rho = to_field(ssig);
        for (double& v : next.rho.values) v += 1.0;
        next.u = VectorField(g);
        for (int j = 0; j < g.dim; ++j)
            next.u.comp[static_cast<std::size_t>(j)] = to_field(su[static_cast<std::size_t>(j)]);
        next.n = Field3(g);
        for (int c = 0; c < 3; ++c) next.n.comp[static_cast<std::size_t>(c)] = to_field(sn[static_cast<std::size_t>(c)]);
        if (ctl.renormalize_director) next.n = normalize_director(next.n);

        if (!all_finite(next.rho) || !all_finite(next.u) || !all_finite(next.n))
            throw blowup_error("linearized run blew up at t = " + std::to_string(next.time),
                               next.time, k);

        prev = std::move(cur);
        nl_prev = std::move(nl);
        have_history = true;
        cur = next;
        traj.push_back(std::move(next));
    }
    return traj;
}

namespace {

// Lemma-2.3 style distance between trajectories on shared sample times.
double picard_metric(const std::vector<CompressibleState>& a,
                     const std::vector<CompressibleState>& b) {
    if (a.size() != b.size()) throw shape_error("picard metric: trajectory length mismatch");
    double sup = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double lam = a[i].params.lambda;
        double drho = sobolev_norm(a[i].rho - b[i].rho, 0);
        double du = sobolev_norm(a[i].u - b[i].u, 0);
        double dn = sobolev_norm(a[i].n - b[i].n, 1);
        sup = std::max(sup, lam * lam * drho * drho + du * du + dn * dn);
    }
    return sup;
}

}  // namespace

std::pair<std::vector<CompressibleState>, ContractionReport> picard_iterate(
    const CompressibleState& U0, double T0, int k_max, const StepControl& ctl, double tol) {
    if (!(T0 > 0.0)) throw domain_error("picard_iterate: T0 must be positive");
    U0.validate();
    StepControl eff = ctl;
    eff.t_end = T0;

    ContractionReport rep;
    rep.t0 = T0;

    // iterate 0: constant-in-time extension of U0
    long nsteps = std::max<long>(1, std::lround(T0 / eff.dt));
    double dt = T0 / static_cast<double>(nsteps);
    std::vector<CompressibleState> traj_prev;
    for (long k = 0; k <= nsteps; ++k) {
        CompressibleState s = U0;
        s.time = U0.time + k * dt;
        traj_prev.push_back(std::move(s));
    }

    VTrajectory V = VTrajectory::constant(LinearizationInput::from_state(U0));
    std::vector<CompressibleState> traj;
    int grow_streak = 0;
    for (int i = 1; i <= k_max; ++i) {
        traj = linearized_step(V, U0, eff);
        rep.iterates = i;
        double d = picard_metric(traj, traj_prev);
        if (!rep.diff_norms.empty()) {
            double prev_d = rep.diff_norms.back();
            if (prev_d > 0.0) {
                double ratio = d / prev_d;
                rep.ratios.push_back(ratio);
                rep.tau_estimate = std::max(rep.tau_estimate, ratio);
                grow_streak = ratio > 1.0 ? grow_streak + 1 : 0;
            }
        }
        rep.diff_norms.push_back(d);
        if (d < tol) break;
        if (grow_streak >= 3) {
            rep.non_contraction = true;
            break;
        }
        traj_prev = traj;
        V = VTrajectory::from_states(traj);
    }
    return {std::move(traj), std::move(rep)};
}

}  // namespace nlc
