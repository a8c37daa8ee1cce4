#include "nlc/diagnostics.hpp"

#include <cmath>
#include <string>

#include "nlc/errors.hpp"
#include "nlc/spectral.hpp"

namespace nlc {

namespace {

// Enumerates multi-indices |alpha| <= s in a fixed order.
std::vector<std::array<int, 3>> multi_indices(int dim, int s) {
    std::vector<std::array<int, 3>> out;
    for (int total = 0; total <= s; ++total) {
        if (dim == 2) {
            for (int a0 = total; a0 >= 0; --a0) out.push_back({a0, total - a0, 0});
        } else {
            for (int a0 = total; a0 >= 0; --a0)
                for (int a1 = total - a0; a1 >= 0; --a1) out.push_back({a0, a1, total - a0 - a1});
        }
    }
    return out;
}

// grad^alpha f via the derivative wavenumbers (Nyquist zeroed), matching
// repeated application of derivative().
ScalarField derivative_multi(const ScalarField& f, const std::array<int, 3>& alpha) {
    const ModeTable t(f.grid);
    Spectrum s = to_spectrum(f);
    const std::complex<double> iu(0.0, 1.0);
    for_each_mode(t, [&](std::size_t idx, const std::array<double, 3>&,
                         const std::array<double, 3>& kd, double, double, bool) {
        std::complex<double> fac(1.0, 0.0);
        for (int j = 0; j < f.grid.dim; ++j)
            for (int a = 0; a < alpha[static_cast<std::size_t>(j)]; ++a)
                fac *= iu * kd[static_cast<std::size_t>(j)];
        s.c[idx] *= fac;
    });
    return to_field(s);
}

double weighted_sq_integral(const ScalarField& w, const ScalarField& f) {
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += w[i] * f[i] * f[i];
    return acc * f.grid.cell_volume();
}

}  // namespace

EnergyFunctionals energy_functionals(const CompressibleState& state, int s) {
    const Grid& g = state.grid();
    const double lam2 = state.params.lambda * state.params.lambda;
    const PressureLaw law = state.params.pressure_law();

    EnergyFunctionals out;
    out.s = s;

    ScalarField sig = state.rho;
    for (double& v : sig.values) v -= 1.0;

    // spectral parts (flat weights)
    {
        const ModeTable t(g);
        Spectrum ssig = to_spectrum(sig);
        std::vector<Spectrum> su;
        for (int j = 0; j < g.dim; ++j) su.push_back(to_spectrum(state.u.comp[static_cast<std::size_t>(j)]));
        std::array<Spectrum, 3> sn;
        for (int c = 0; c < 3; ++c) sn[static_cast<std::size_t>(c)] = to_spectrum(state.n.comp[static_cast<std::size_t>(c)]);

        double acc_es = 0.0, acc_fs = 0.0, acc_n_es = 0.0, acc_n_fs = 0.0;
        for_each_mode(t, [&](std::size_t idx, const std::array<double, 3>& k,
                             const std::array<double, 3>&, double k2, double mult, bool) {
            double ws = sobolev_weight(k, g.dim, s);
            double wsm1 = sobolev_weight(k, g.dim, s - 1);
            double usum = 0.0;
            for (const auto& suj : su) usum += std::norm(suj.c[idx]);
            double nsum = 0.0;
            for (const auto& snc : sn) nsum += std::norm(snc.c[idx]);
            acc_es += mult * ws * (lam2 * std::norm(ssig.c[idx]) + usum);
            acc_fs += mult * ws * (lam2 * std::norm(ssig.c[idx]) + usum);
            acc_n_es += mult * (ws - 1.0) * nsum;       // gradient shells only
            acc_n_fs += mult * k2 * wsm1 * nsum;        // ||grad grad^beta n||^2
        });
        const double vol = g.volume();
        out.e_s = 0.5 * vol * (acc_es + acc_n_es);
        out.f_s = 0.5 * vol * (acc_fs + acc_n_fs);
        // tilded director parts coincide with the flat ones
        out.e_s_tilde = 0.5 * vol * acc_n_es;
        out.f_s_tilde = 0.5 * vol * acc_n_fs;
    }

    // tilded rho/u parts need the pointwise weights P'(rho)/rho and rho
    ScalarField wrho(g), wu = state.rho;
    for (std::size_t i = 0; i < wrho.size(); ++i)
        wrho[i] = law.p_prime(state.rho[i]) / state.rho[i];
    for (const auto& alpha : multi_indices(g.dim, s)) {
        ScalarField dsig = derivative_multi(sig, alpha);
        double part = lam2 * weighted_sq_integral(wrho, dsig);
        for (int j = 0; j < g.dim; ++j)
            part += weighted_sq_integral(wu, derivative_multi(state.u.comp[static_cast<std::size_t>(j)], alpha));
        out.e_s_tilde += 0.5 * part;
        out.f_s_tilde += 0.5 * part;
    }
    return out;
}

ModulatedEnergy modulated_energy(const CompressibleState& comp,
                                 const IncompressibleState& incomp) {
    require_same_grid(comp.grid(), incomp.grid(), "modulated_energy");
    if (std::fabs(comp.time - incomp.time) > 1e-12 * (1.0 + std::fabs(comp.time)))
        throw precondition_error("modulated_energy: time mismatch " + std::to_string(comp.time) +
                                 " vs " + std::to_string(incomp.time));
    const Grid& g = comp.grid();
    const double cellvol = g.cell_volume();
    const double nu = comp.params.nu;
    const double lam2 = comp.params.lambda * comp.params.lambda;
    const PressureLaw law = comp.params.pressure_law();
    const double p1 = law.p(1.0);

    ModulatedEnergy me;
    for (std::size_t i = 0; i < comp.rho.size(); ++i) {
        double sr = std::sqrt(comp.rho[i]);
        double dv = 0.0;
        for (int j = 0; j < g.dim; ++j) {
            double d = sr * comp.u.comp[static_cast<std::size_t>(j)][i] - incomp.u.comp[static_cast<std::size_t>(j)][i];
            dv += d * d;
        }
        me.velocity_part += 0.5 * dv;
        double dn = 0.0;
        for (int c = 0; c < 3; ++c) {
            double d = comp.n.comp[static_cast<std::size_t>(c)][i] - incomp.n.comp[static_cast<std::size_t>(c)][i];
            dn += d * d;
        }
        me.director_l2 += 0.5 * nu * dn;
        me.pi_lambda += lam2 * (law.q(comp.rho[i]) - p1 * (comp.rho[i] - 1.0));
    }
    me.velocity_part *= cellvol;
    me.director_l2 *= cellvol;
    me.pi_lambda *= cellvol;

    double dgrad = 0.0;
    for (int c = 0; c < 3; ++c)
        dgrad += integral_grad_squared(comp.n.comp[static_cast<std::size_t>(c)] - incomp.n.comp[static_cast<std::size_t>(c)]);
    me.director_grad = 0.5 * nu * dgrad;
    return me;
}

std::pair<double, double> fit_rate(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) throw domain_error("fit_rate: need at least 3 points");
    const std::size_t n = points.size();
    double sx = 0.0, sy = 0.0;
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(points[i].first > 0.0) || !(points[i].second > 0.0))
            throw domain_error("fit_rate: nonpositive lambda or error");
        xs[i] = std::log(points[i].first);
        ys[i] = std::log(points[i].second);
        sx += xs[i];
        sy += ys[i];
    }
    double xbar = sx / n, ybar = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - xbar) * (xs[i] - xbar);
        sxy += (xs[i] - xbar) * (ys[i] - ybar);
    }
    double slope = sxy / sxx;
    double intercept = ybar - slope * xbar;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = ys[i] - (intercept + slope * xs[i]);
        ss_res += r * r;
    }
    double sigma2 = ss_res / static_cast<double>(n - 2);
    return {slope, std::sqrt(sigma2 / sxx)};
}

double kinetic_energy(const CompressibleState& s) {
    double acc = 0.0;
    for (std::size_t i = 0; i < s.rho.size(); ++i) {
        double u2 = 0.0;
        for (int j = 0; j < s.grid().dim; ++j) {
            double v = s.u.comp[static_cast<std::size_t>(j)][i];
            u2 += v * v;
        }
        acc += 0.5 * s.rho[i] * u2;
    }
    return acc * s.grid().cell_volume();
}

double kinetic_energy(const IncompressibleState& s) {
    double acc = 0.0;
    for (std::size_t i = 0; i < s.u.comp[0].size(); ++i) {
        double u2 = 0.0;
        for (int j = 0; j < s.grid().dim; ++j) {
            double v = s.u.comp[static_cast<std::size_t>(j)][i];
            u2 += v * v;
        }
        acc += 0.5 * u2;
    }
    return acc * s.grid().cell_volume();
}

double elastic_energy(const Grid&, const Field3& n, double nu) {
    return 0.5 * nu * integral_grad_squared(n);
}

double acoustic_energy(const CompressibleState& s) {
    const PressureLaw law = s.params.pressure_law();
    double acc = 0.0;
    for (std::size_t i = 0; i < s.rho.size(); ++i) acc += law.q(s.rho[i]);
    return s.params.lambda * s.params.lambda * acc * s.grid().cell_volume();
}

namespace {

// ||Lap n + |grad n|^2 n||^2 with the same dealiased products as the solvers
double director_tension_sq(const Field3& n) {
    Field3 w = laplacian(n);
    ScalarField gns = grad_norm_squared(n, true);
    double acc = 0.0;
    for (int c = 0; c < 3; ++c) {
        ScalarField proj = dealias(multiply(gns, n.comp[static_cast<std::size_t>(c)]));
        ScalarField wc = w.comp[static_cast<std::size_t>(c)] + proj;
        acc += integrate(multiply(wc, wc));
    }
    return acc;
}

}  // namespace

double dissipation_rate(const CompressibleState& s) {
    const ModelParams& p = s.params;
    ScalarField div_u = divergence(s.u);
    return p.mu * integral_grad_squared(s.u) +
           (p.kappa + p.mu) * integrate(multiply(div_u, div_u)) +
           p.nu * p.theta * director_tension_sq(s.n);
}

double dissipation_rate(const IncompressibleState& s) {
    const ModelParams& p = s.params;
    return p.mu * integral_grad_squared(s.u) + p.nu * p.theta * director_tension_sq(s.n);
}

}  // namespace nlc
