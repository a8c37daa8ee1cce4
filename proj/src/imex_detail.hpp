#pragma once

// Internal: exact per-mode implicit solves shared by the nonlinear and
// linearized IMEX integrators. Solves (a I - dt Lhat(k)) x = r where Lhat is
// the constant-coefficient acoustic-viscous block
//   sigma' = -i k. u
//   u'     = -i k lambda^2 P'(1) sigma - mu |k|^2 u - (kappa+mu) k (k.u)
// plus the diagonal director diffusion n' = -theta |k|^2 n.

#include <array>
#include <complex>
#include <vector>

#include "nlc/spectral.hpp"
#include "nlc/state.hpp"

namespace nlc::detail {

/// In-place Gaussian elimination with partial pivoting, n <= 4.
inline void solve_small(std::complex<double>* A, std::complex<double>* b, int n) {
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(A[col * n + col]);
        for (int r = col + 1; r < n; ++r) {
            double v = std::abs(A[r * n + col]);
            if (v > best) {
                best = v;
                piv = r;
            }
        }
        if (piv != col) {
            for (int c = col; c < n; ++c) std::swap(A[col * n + c], A[piv * n + c]);
            std::swap(b[col], b[piv]);
        }
        for (int r = col + 1; r < n; ++r) {
            std::complex<double> f = A[r * n + col] / A[col * n + col];
            if (f == std::complex<double>(0.0, 0.0)) continue;
            for (int c = col; c < n; ++c) A[r * n + c] -= f * A[col * n + c];
            b[r] -= f * b[col];
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        std::complex<double> acc = b[r];
        for (int c = r + 1; c < n; ++c) acc -= A[r * n + c] * b[c];
        b[r] = acc / A[r * n + r];
    }
}

inline void implicit_solve(const Grid& g, const ModelParams& prm, double a, double dt,
                           Spectrum& sig, std::vector<Spectrum>& u, std::array<Spectrum, 3>& n) {
    const ModeTable table(g);
    const int d = g.dim;
    const double lam2pp1 = prm.lambda * prm.lambda * prm.pressure_law().p_prime(1.0);
    const double mu = prm.mu, kpm = prm.kappa + prm.mu, theta = prm.theta;
    const std::complex<double> iu(0.0, 1.0);

    for_each_mode(table, [&](std::size_t idx, const std::array<double, 3>&,
                             const std::array<double, 3>& kd, double k2, double, bool) {
        for (int c = 0; c < 3; ++c) n[static_cast<std::size_t>(c)].c[idx] /= (a + dt * theta * k2);

        std::complex<double> A[16], b[4];
        A[0] = a;
        b[0] = sig.c[idx];
        for (int j = 0; j < d; ++j) {
            A[j + 1] = iu * dt * kd[static_cast<std::size_t>(j)];
            A[(j + 1) * (d + 1)] = iu * dt * lam2pp1 * kd[static_cast<std::size_t>(j)];
            for (int l = 0; l < d; ++l)
                A[(j + 1) * (d + 1) + l + 1] =
                    (j == l ? a + dt * mu * k2 : 0.0) +
                    dt * kpm * kd[static_cast<std::size_t>(j)] * kd[static_cast<std::size_t>(l)];
            b[j + 1] = u[static_cast<std::size_t>(j)].c[idx];
        }
        solve_small(A, b, d + 1);
        sig.c[idx] = b[0];
        for (int j = 0; j < d; ++j) u[static_cast<std::size_t>(j)].c[idx] = b[j + 1];
    });
}

}  // namespace nlc::detail
