#include "nlc/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>

#include "nlc/errors.hpp"

namespace nlc {

namespace {

struct Plans {
    fftw_plan r2c = nullptr;
    fftw_plan c2r = nullptr;
};

std::size_t complex_count(const Grid& g) {
    std::size_t n = 1;
    for (int j = 0; j < g.dim - 1; ++j) n *= static_cast<std::size_t>(g.sizes[static_cast<std::size_t>(j)]);
    return n * static_cast<std::size_t>(g.sizes[static_cast<std::size_t>(g.dim - 1)] / 2 + 1);
}

// Plan cache. FFTW_ESTIMATE keeps plan creation deterministic; FFTW_UNALIGNED
// lets us execute on ordinary std::vector storage.
Plans& plans_for(const Grid& g) {
    static std::map<std::array<int, 4>, Plans> cache;
    static std::mutex mu;
    std::array<int, 4> key{g.dim, g.sizes[0], g.sizes[1], g.sizes[2]};
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    int n[3] = {g.sizes[0], g.sizes[1], g.sizes[2]};
    double* rbuf = fftw_alloc_real(g.cells());
    fftw_complex* cbuf = fftw_alloc_complex(complex_count(g));
    Plans p;
    p.r2c = fftw_plan_dft_r2c(g.dim, n, rbuf, cbuf, FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.c2r = fftw_plan_dft_c2r(g.dim, n, cbuf, rbuf, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(rbuf);
    fftw_free(cbuf);
    return cache.emplace(key, p).first->second;
}

const ModeTable& mode_table(const Grid& g) {
    static std::map<std::array<int, 4>, ModeTable> cache;
    static std::mutex mu;
    std::array<int, 4> key{g.dim, g.sizes[0], g.sizes[1], g.sizes[2]};
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, ModeTable(g)).first->second;
}

}  // namespace

// sum over multi-indices |alpha| <= s of prod_j k_j^(2 alpha_j)
double sobolev_weight(const std::array<double, 3>& k, int dim, int s) {
    double h[32] = {1.0};       // h[m]: contribution of processed axes at order m
    double tmp[32];
    for (int j = 0; j < dim; ++j) {
        double k2 = k[static_cast<std::size_t>(j)] * k[static_cast<std::size_t>(j)];
        for (int m = 0; m <= s; ++m) {
            double acc = 0.0, p = 1.0;
            for (int a = 0; a <= m; ++a) {
                acc += p * h[m - a];
                p *= k2;
            }
            tmp[m] = acc;
        }
        for (int m = 0; m <= s; ++m) h[m] = tmp[m];
    }
    double w = 0.0;
    for (int m = 0; m <= s; ++m) w += h[m];
    return w;
}

ModeTable::ModeTable(const Grid& g) : grid(g) {
    int ext[3] = {1, 1, 1};
    for (int j = 0; j < g.dim; ++j) {
        int m = g.sizes[static_cast<std::size_t>(j)];
        ext[j] = (j == g.dim - 1) ? m / 2 + 1 : m;
        int cut = m / 3;
        for (int i = 0; i < ext[j]; ++i) {
            int f = (i <= m / 2) ? i : i - m;
            double kv = two_pi / g.length[static_cast<std::size_t>(j)] * f;
            k[j].push_back(kv);
            kd[j].push_back(f == m / 2 ? 0.0 : kv);
            keep[j].push_back(std::abs(f) <= cut ? 1 : 0);
        }
    }
    n0 = ext[0];
    n1 = ext[1];
    n2 = ext[2];
    if (g.dim == 2) {
        k[2] = {0.0};
        kd[2] = {0.0};
        keep[2] = {1};
    }
}

Spectrum to_spectrum(const ScalarField& f) {
    Plans& p = plans_for(f.grid);
    Spectrum s;
    s.grid = f.grid;
    s.c.assign(complex_count(f.grid), {});
    std::vector<double> rcopy(f.values);
    fftw_execute_dft_r2c(p.r2c, rcopy.data(), reinterpret_cast<fftw_complex*>(s.c.data()));
    const double inv = 1.0 / static_cast<double>(f.grid.cells());
    for (auto& z : s.c) z *= inv;
    return s;
}

ScalarField to_field(const Spectrum& s) {
    Plans& p = plans_for(s.grid);
    ScalarField f(s.grid);
    std::vector<std::complex<double>> ccopy(s.c);  // c2r destroys its input
    fftw_execute_dft_c2r(p.c2r, reinterpret_cast<fftw_complex*>(ccopy.data()), f.values.data());
    return f;
}

VectorField gradient(const ScalarField& f) {
    require_finite(f, "gradient");
    const ModeTable& t = mode_table(f.grid);
    Spectrum s = to_spectrum(f);
    VectorField g(f.grid);
    const std::complex<double> iu(0.0, 1.0);
    for (int j = 0; j < f.grid.dim; ++j) {
        Spectrum d;
        d.grid = f.grid;
        d.c.resize(s.c.size());
        for_each_mode(t, [&](std::size_t idx, const std::array<double, 3>&,
                             const std::array<double, 3>& kd, double, double, bool) {
            d.c[idx] = iu * kd[static_cast<std::size_t>(j)] * s.c[idx];
        });
        g.comp[static_cast<std::size_t>(j)] = to_field(d);
    }
    return g;
}

ScalarField derivative(const ScalarField& f, int axis) {
    require_finite(f, "derivative");
    const ModeTable& t = mode_table(f.grid);
    Spectrum s = to_spectrum(f);
    const std::complex<double> iu(0.0, 1.0);
    for_each_mode(t, [&](std::size_t idx, const std::array<double, 3>&,
                         const std::array<double, 3>& kd, double, double, bool) {
        s.c[idx] *= iu * kd[static_cast<std::size_t>(axis)];
    });
    return to_field(s);
}

ScalarField divergence(const VectorField& v) {
    for (const auto& c : v.comp) require_same_grid(c.grid, v.grid, "divergence");
    const ModeTable& t = mode_table(v.grid);
    Spectrum acc;
    acc.grid = v.grid;
    acc.c.assign(complex_count(v.grid), {});
    const std::complex<double> iu(0.0, 1.0);
    for (int j = 0; j < v.grid.dim; ++j) {
        Spectrum s = to_spectrum(v.comp[static_cast<std::size_t>(j)]);
        for_each_mode(t, [&](std::size_t idx, const std::array<double, 3>&,
                             const std::array<double, 3>& kd, double, double, bool) {
            acc.c[idx] += iu * kd[static_cast<std::size_t>(j)] * s.c[idx];
        });
    }
    return to_field(acc);
}

ScalarField laplacian(const ScalarField& f) {
    const ModeTable& t = mode_table(f.grid);
    Spectrum s = to_spectrum(f);
    for_each_mode(t, [&](std::size_t idx, const std::array<double, 3>&,
                         const std::array<double, 3>&, double k2, double, bool) {
        s.c[idx] *= -k2;
    });
    return to_field(s);
}

VectorField laplacian(const VectorField& v) {
    VectorField r(v.grid);
    for (std::size_t j = 0; j < v.comp.size(); ++j) r.comp[j] = laplacian(v.comp[j]);
    return r;
}

Field3 laplacian(const Field3& n) {
    Field3 r(n.grid);
    for (int j = 0; j < 3; ++j) r.comp[j] = laplacian(n.comp[j]);
    return r;
}

VectorField leray_project(const VectorField& v) {
    const Grid& g = v.grid;
    const ModeTable& t = mode_table(g);
    std::vector<Spectrum> s(static_cast<std::size_t>(g.dim));
    for (int j = 0; j < g.dim; ++j) s[static_cast<std::size_t>(j)] = to_spectrum(v.comp[static_cast<std::size_t>(j)]);
    for_each_mode(t, [&](std::size_t idx, const std::array<double, 3>&,
                         const std::array<double, 3>& kd, double, double, bool) {
        double kd2 = kd[0] * kd[0] + kd[1] * kd[1] + kd[2] * kd[2];
        if (kd2 == 0.0) return;  // mean mode (and Nyquist lines) pass through
        std::complex<double> dot(0.0, 0.0);
        for (int j = 0; j < g.dim; ++j) dot += kd[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(j)].c[idx];
        dot /= kd2;
        for (int j = 0; j < g.dim; ++j) s[static_cast<std::size_t>(j)].c[idx] -= kd[static_cast<std::size_t>(j)] * dot;
    });
    VectorField r(g);
    for (int j = 0; j < g.dim; ++j) r.comp[static_cast<std::size_t>(j)] = to_field(s[static_cast<std::size_t>(j)]);
    return r;
}

ScalarField dealias(const ScalarField& f) {
    const ModeTable& t = mode_table(f.grid);
    Spectrum s = to_spectrum(f);
    for_each_mode(t, [&](std::size_t idx, const std::array<double, 3>&,
                         const std::array<double, 3>&, double, double, bool kept) {
        if (!kept) s.c[idx] = 0.0;
    });
    return to_field(s);
}

VectorField dealias(const VectorField& v) {
    VectorField r(v.grid);
    for (std::size_t j = 0; j < v.comp.size(); ++j) r.comp[j] = dealias(v.comp[j]);
    return r;
}

Field3 dealias(const Field3& n) {
    Field3 r(n.grid);
    for (int j = 0; j < 3; ++j) r.comp[j] = dealias(n.comp[j]);
    return r;
}

double sobolev_norm(const ScalarField& f, int s) {
    if (s < 0 || s > 16) throw domain_error("sobolev_norm: order out of range");
    int msize = f.grid.sizes[0];
    for (int j = 1; j < f.grid.dim; ++j) msize = std::min(msize, f.grid.sizes[static_cast<std::size_t>(j)]);
    if (s > msize / 4)
        std::fprintf(stderr, "nlc: warning: H^%d norm on a %d-point axis exceeds resolvable smoothness\n",
                     s, msize);
    const ModeTable& t = mode_table(f.grid);
    Spectrum sp = to_spectrum(f);
    double acc = 0.0;
    for_each_mode(t, [&](std::size_t idx, const std::array<double, 3>& k,
                         const std::array<double, 3>&, double, double mult, bool) {
        acc += mult * sobolev_weight(k, f.grid.dim, s) * std::norm(sp.c[idx]);
    });
    return std::sqrt(acc * f.grid.volume());
}

double sobolev_norm(const VectorField& v, int s) {
    double acc = 0.0;
    for (const auto& c : v.comp) {
        double n = sobolev_norm(c, s);
        acc += n * n;
    }
    return std::sqrt(acc);
}

double sobolev_norm(const Field3& n, int s) {
    double acc = 0.0;
    for (const auto& c : n.comp) {
        double x = sobolev_norm(c, s);
        acc += x * x;
    }
    return std::sqrt(acc);
}

double integral_grad_squared(const ScalarField& f) {
    const ModeTable& t = mode_table(f.grid);
    Spectrum sp = to_spectrum(f);
    double acc = 0.0;
    for_each_mode(t, [&](std::size_t idx, const std::array<double, 3>&,
                         const std::array<double, 3>& kd, double, double mult, bool) {
        double kd2 = kd[0] * kd[0] + kd[1] * kd[1] + kd[2] * kd[2];
        acc += mult * kd2 * std::norm(sp.c[idx]);
    });
    return acc * f.grid.volume();
}

double integral_grad_squared(const VectorField& v) {
    double acc = 0.0;
    for (const auto& c : v.comp) acc += integral_grad_squared(c);
    return acc;
}

double integral_grad_squared(const Field3& n) {
    double acc = 0.0;
    for (const auto& c : n.comp) acc += integral_grad_squared(c);
    return acc;
}

double integrate(const ScalarField& f) {
    double acc = 0.0;
    for (double v : f.values) acc += v;
    return acc * f.grid.cell_volume();
}

double spectral_energy(const ScalarField& f) {
    const ModeTable& t = mode_table(f.grid);
    Spectrum sp = to_spectrum(f);
    double acc = 0.0;
    for_each_mode(t, [&](std::size_t idx, const std::array<double, 3>&,
                         const std::array<double, 3>&, double, double mult, bool) {
        acc += mult * std::norm(sp.c[idx]);
    });
    return acc;
}

ScalarField solve_poisson_neg(const ScalarField& rhs) {
    const ModeTable& t = mode_table(rhs.grid);
    Spectrum s = to_spectrum(rhs);
    for_each_mode(t, [&](std::size_t idx, const std::array<double, 3>&,
                         const std::array<double, 3>&, double k2, double, bool) {
        if (k2 == 0.0)
            s.c[idx] = 0.0;  // mean-zero normalization
        else
            s.c[idx] /= k2;
    });
    return to_field(s);
}

ScalarField advect(const VectorField& u, const ScalarField& f, bool do_dealias) {
    require_same_grid(u.grid, f.grid, "advect");
    VectorField gf = gradient(f);
    ScalarField r(f.grid);
    for (int j = 0; j < f.grid.dim; ++j)
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] += u.comp[static_cast<std::size_t>(j)][i] * gf.comp[static_cast<std::size_t>(j)][i];
    return do_dealias ? dealias(r) : r;
}

VectorField advect(const VectorField& u, const VectorField& v, bool do_dealias) {
    VectorField r(v.grid);
    for (std::size_t j = 0; j < v.comp.size(); ++j) r.comp[j] = advect(u, v.comp[j], do_dealias);
    return r;
}

Field3 advect(const VectorField& u, const Field3& n, bool do_dealias) {
    Field3 r(n.grid);
    for (int j = 0; j < 3; ++j) r.comp[j] = advect(u, n.comp[j], do_dealias);
    return r;
}

ScalarField grad_norm_squared(const Field3& n, bool do_dealias) {
    ScalarField r(n.grid);
    for (int i = 0; i < 3; ++i) {
        VectorField gi = gradient(n.comp[i]);
        for (int j = 0; j < n.grid.dim; ++j)
            for (std::size_t x = 0; x < r.size(); ++x)
                r[x] += gi.comp[static_cast<std::size_t>(j)][x] * gi.comp[static_cast<std::size_t>(j)][x];
    }
    return do_dealias ? dealias(r) : r;
}

}  // namespace nlc
