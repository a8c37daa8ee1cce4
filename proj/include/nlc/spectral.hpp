#pragma once

#include <complex>
#include <vector>

#include "nlc/field.hpp"
#include "nlc/grid.hpp"

namespace nlc {

/// Normalized half-complex spectrum of a real field.
///
/// Canonical mode ordering (fixed so results are bitwise reproducible):
/// row-major over storage indices (i0, i1[, i2]) with the LAST axis halved to
/// 0..M/2 (Hermitian redundancy removed there only). Storage index i on a
/// full axis maps to integer frequency f = i for i <= M/2 and f = i - M
/// otherwise, i.e. the frequency set is {-M/2+1, ..., M/2} with the positive
/// Nyquist convention. Coefficients are forward-normalized by 1/(number of
/// cells), so f(x) = sum_k c_k exp(i k.x).
struct Spectrum {
    Grid grid;
    std::vector<std::complex<double>> c;
};

Spectrum to_spectrum(const ScalarField& f);
ScalarField to_field(const Spectrum& s);

/// Per-axis mode bookkeeping for iterating a half-complex layout.
struct ModeTable {
    explicit ModeTable(const Grid& g);

    Grid grid;
    int n0 = 1, n1 = 1, n2 = 1;      // storage extents (last one already halved)
    // Per storage index and axis: true wavenumber, derivative wavenumber
    // (zero at Nyquist: odd-derivative convention), 2/3-rule keep flag.
    std::vector<double> k[3];
    std::vector<double> kd[3];
    std::vector<char> keep[3];

    std::size_t modes() const {
        return static_cast<std::size_t>(n0) * static_cast<std::size_t>(n1) *
               static_cast<std::size_t>(n2);
    }
};

/// Iterates all stored modes in canonical order. fn receives
/// (flat_index, kvec, kdvec, k_squared, hermitian_multiplicity, kept).
template <typename F>
void for_each_mode(const ModeTable& t, F&& fn) {
    const int dim = t.grid.dim;
    std::size_t idx = 0;
    for (int i0 = 0; i0 < t.n0; ++i0) {
        for (int i1 = 0; i1 < t.n1; ++i1) {
            if (dim == 2) {
                // axis 1 is the halved axis
                std::array<double, 3> k{t.k[0][i0], t.k[1][i1], 0.0};
                std::array<double, 3> kd{t.kd[0][i0], t.kd[1][i1], 0.0};
                double k2 = k[0] * k[0] + k[1] * k[1];
                double mult = (i1 == 0 || i1 == t.n1 - 1) ? 1.0 : 2.0;
                bool kept = t.keep[0][i0] && t.keep[1][i1];
                fn(idx++, k, kd, k2, mult, kept);
            } else {
                for (int i2 = 0; i2 < t.n2; ++i2) {
                    std::array<double, 3> k{t.k[0][i0], t.k[1][i1], t.k[2][i2]};
                    std::array<double, 3> kd{t.kd[0][i0], t.kd[1][i1], t.kd[2][i2]};
                    double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
                    double mult = (i2 == 0 || i2 == t.n2 - 1) ? 1.0 : 2.0;
                    bool kept = t.keep[0][i0] && t.keep[1][i1] && t.keep[2][i2];
                    fn(idx++, k, kd, k2, mult, kept);
                }
            }
        }
    }
}

// ---- Differential operators (exact on the trigonometric interpolant) ----

VectorField gradient(const ScalarField& f);
ScalarField derivative(const ScalarField& f, int axis);
ScalarField divergence(const VectorField& v);
ScalarField laplacian(const ScalarField& f);
VectorField laplacian(const VectorField& v);
Field3 laplacian(const Field3& n);

/// L^2-orthogonal projection onto divergence-free fields, per mode
/// I - k k^T / |k|^2. Preserves the mean mode; idempotent.
VectorField leray_project(const VectorField& v);

/// Two-thirds rule: zeroes every mode with any |k_j| > sizes_j / 3. Idempotent.
ScalarField dealias(const ScalarField& f);
VectorField dealias(const VectorField& v);
Field3 dealias(const Field3& n);

// ---- Norms and integrals (deterministic reduction order) ----

/// Spectral weight sum_(|alpha| <= s) prod_j k_j^(2 alpha_j) of one mode.
double sobolev_weight(const std::array<double, 3>& k, int dim, int s);

/// H^s norm (sum over all multi-indices |alpha| <= s of squared L^2 norms of
/// partial derivatives), evaluated spectrally. s = 0 gives the L^2 norm.
double sobolev_norm(const ScalarField& f, int s);
double sobolev_norm(const VectorField& v, int s);
double sobolev_norm(const Field3& n, int s);

/// integral of |grad f|^2 over the torus (Dirichlet energy x2).
double integral_grad_squared(const ScalarField& f);
double integral_grad_squared(const VectorField& v);
double integral_grad_squared(const Field3& n);

/// Cell-volume-weighted sum; exact for band-limited integrands.
double integrate(const ScalarField& f);

/// sum_k multiplicity * |f_k|^2 (Parseval partner of integrate(f*f)/volume).
double spectral_energy(const ScalarField& f);

/// Solves -Laplace(p) = rhs with mean-zero p. rhs must have zero mean.
ScalarField solve_poisson_neg(const ScalarField& rhs);

// ---- Composite helpers used by every dynamics module ----

/// (u . grad) f with the product dealiased (optional).
ScalarField advect(const VectorField& u, const ScalarField& f, bool do_dealias = true);
VectorField advect(const VectorField& u, const VectorField& v, bool do_dealias = true);
Field3 advect(const VectorField& u, const Field3& n, bool do_dealias = true);

/// sum_i |grad n_i|^2 pointwise (dealiased product).
ScalarField grad_norm_squared(const Field3& n, bool do_dealias = true);

}  // namespace nlc
