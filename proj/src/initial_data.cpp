#include "nlc/initial_data.hpp"

#include <cmath>
#include <random>
#include <string>

#include "nlc/errors.hpp"
#include "nlc/spectral.hpp"

namespace nlc {

VectorField taylor_green_velocity(const Grid& g, double amplitude) {
    VectorField u(g);
    if (g.dim == 2) {
        fill(u.comp[0], std::function<double(double, double)>([amplitude](double x, double y) {
                 return amplitude * std::sin(x) * std::cos(y);
             }));
        fill(u.comp[1], std::function<double(double, double)>([amplitude](double x, double y) {
                 return -amplitude * std::cos(x) * std::sin(y);
             }));
    } else {
        fill(u.comp[0], std::function<double(double, double, double)>(
                            [amplitude](double x, double y, double z) {
                                return amplitude * std::sin(x) * std::cos(y) * std::cos(z);
                            }));
        fill(u.comp[1], std::function<double(double, double, double)>(
                            [amplitude](double x, double y, double z) {
                                return -amplitude * std::cos(x) * std::sin(y) * std::cos(z);
                            }));
        // third component zero
    }
    return u;
}

DirectorField default_director(const Grid& g) {
    DirectorField n(g);
    auto phi = [](double x, double y) { return 0.5 * std::sin(x) + 0.4 * std::cos(2.0 * y); };
    if (g.dim == 2) {
        fill(n.comp[0], std::function<double(double, double)>(
                            [&](double x, double y) { return std::cos(phi(x, y)); }));
        fill(n.comp[1], std::function<double(double, double)>(
                            [&](double x, double y) { return std::sin(phi(x, y)); }));
    } else {
        fill(n.comp[0], std::function<double(double, double, double)>(
                            [&](double x, double y, double) { return std::cos(phi(x, y)); }));
        fill(n.comp[1], std::function<double(double, double, double)>(
                            [&](double x, double y, double) { return std::sin(phi(x, y)); }));
    }
    return n;
}

namespace {

struct Mode {
    int f[3];
    double amp;
    double phase;
};

// Fixed lexicographic half-space enumeration keeps the draw order, and hence
// the field, reproducible for a given seed.
std::vector<Mode> draw_modes(int dim, std::mt19937_64& eng, int band) {
    std::normal_distribution<double> amp(0.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, two_pi);
    std::vector<Mode> modes;
    int lo2 = dim == 3 ? -band : 0, hi2 = dim == 3 ? band : 0;
    for (int f0 = -band; f0 <= band; ++f0)
        for (int f1 = -band; f1 <= band; ++f1)
            for (int f2 = lo2; f2 <= hi2; ++f2) {
                bool positive = f0 > 0 || (f0 == 0 && f1 > 0) || (f0 == 0 && f1 == 0 && f2 > 0);
                if (!positive) continue;
                double fsq = double(f0) * f0 + double(f1) * f1 + double(f2) * f2;
                Mode m;
                m.f[0] = f0;
                m.f[1] = f1;
                m.f[2] = f2;
                m.amp = amp(eng) / (1.0 + fsq);
                m.phase = phase(eng);
                modes.push_back(m);
            }
    return modes;
}

ScalarField synth(const Grid& g, const std::vector<Mode>& modes) {
    ScalarField r(g);
    double h0 = g.length[0] / g.sizes[0], h1 = g.length[1] / g.sizes[1],
           h2 = g.dim == 3 ? g.length[2] / g.sizes[2] : 0.0;
    int n2 = g.dim == 3 ? g.sizes[2] : 1;
    for (int i0 = 0; i0 < g.sizes[0]; ++i0)
        for (int i1 = 0; i1 < g.sizes[1]; ++i1)
            for (int i2 = 0; i2 < n2; ++i2) {
                double x0 = i0 * h0, x1 = i1 * h1, x2 = i2 * h2;
                double v = 0.0;
                for (const Mode& m : modes)
                    v += m.amp * std::cos(m.f[0] * x0 + m.f[1] * x1 + m.f[2] * x2 + m.phase);
                r[g.index(i0, i1, i2)] = v;
            }
    return r;
}

double grad_sobolev_norm(const Field3& w, int s) {
    double acc = 0.0;
    for (int i = 0; i < 3; ++i) {
        double nrm = sobolev_norm(gradient(w.comp[i]), s);
        acc += nrm * nrm;
    }
    return std::sqrt(acc);
}

}  // namespace

ScalarField random_band_limited(const Grid& g, std::uint64_t seed, int band) {
    std::mt19937_64 eng(seed);
    return synth(g, draw_modes(g.dim, eng, band));
}

DirectorField normalize_director(const Field3& n) {
    if (!all_finite(n)) throw numeric_error("normalize_director: non-finite input");
    DirectorField r = n;
    const std::size_t nc = n.grid.cells();
    for (std::size_t i = 0; i < nc; ++i) {
        double mag = std::sqrt(n.comp[0][i] * n.comp[0][i] + n.comp[1][i] * n.comp[1][i] +
                               n.comp[2][i] * n.comp[2][i]);
        if (mag < 0.5)
            throw degeneracy_error("normalize_director: |n| = " + std::to_string(mag) +
                                   " at cell " + std::to_string(i));
        for (int c = 0; c < 3; ++c) r.comp[c][i] = n.comp[c][i] / mag;
    }
    return r;
}

CompressibleState well_prepared_initial_data(const Grid& g, const ModelParams& params,
                                             double delta0, std::uint64_t seed,
                                             const VectorField& u0, const DirectorField& n0,
                                             int s, int band) {
    params.validate(g.dim);
    require_same_grid(u0.grid, g, "well_prepared_initial_data");
    require_same_grid(n0.grid, g, "well_prepared_initial_data");
    if (delta0 < 0.0) throw domain_error("well_prepared_initial_data: delta0 < 0");
    double div0 = max_abs(divergence(u0));
    if (div0 > 1e-10)
        throw precondition_error("well_prepared_initial_data: u0 not divergence-free, ||div u0||_inf = " +
                                 std::to_string(div0));
    check_unit_constraint(n0);

    CompressibleState st;
    st.time = 0.0;
    st.params = params;
    st.rho = ScalarField(g);
    for (double& v : st.rho.values) v = 1.0;
    st.u = u0;
    st.n = n0;
    if (delta0 == 0.0) return st;

    const double lam = params.lambda;
    std::mt19937_64 eng(seed);

    // density: ||rho - 1||_s = lambda^-2 delta0 exactly
    {
        ScalarField gpert = synth(g, draw_modes(g.dim, eng, band));
        double target = delta0 / (lam * lam);
        double nrm = sobolev_norm(gpert, s);
        axpy(target / nrm, gpert, st.rho);
    }

    // velocity: ||u - u0||_{s+1} = lambda^-1 delta0 exactly
    {
        VectorField gu(g);
        for (int j = 0; j < g.dim; ++j) gu.comp[static_cast<std::size_t>(j)] = synth(g, draw_modes(g.dim, eng, band));
        double target = delta0 / lam;
        double nrm = sobolev_norm(gu, s + 1);
        axpy(target / nrm, gu, st.u);
    }

    // director: ||grad(n(0) - n0)||_s = lambda^-1 delta0, measured after the
    // projection onto S^2, so the amplitude is found by a short fixed point.
    {
        Field3 gn(g);
        for (int c = 0; c < 3; ++c) gn.comp[c] = synth(g, draw_modes(g.dim, eng, band));
        double target = delta0 / lam;
        double c_amp = target / grad_sobolev_norm(gn, s);
        DirectorField cand;
        for (int it = 0; it < 5; ++it) {
            Field3 raw = n0;
            axpy(c_amp, gn, raw);
            try {
                cand = normalize_director(raw);
            } catch (const degeneracy_error&) {
                throw precondition_error(
                    "well_prepared_initial_data: director perturbation too large, |n0 + pert| < 0.5");
            }
            double measured = grad_sobolev_norm(cand - n0, s);
            if (std::fabs(measured - target) <= 1e-13 * target) break;
            c_amp *= target / measured;
        }
        st.n = cand;
    }
    return st;
}

}  // namespace nlc
