#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nlc/compressible.hpp"
#include "nlc/state.hpp"

namespace nlc {

struct SweepConfig {
    std::vector<double> lambdas{10.0, 20.0, 40.0, 80.0, 160.0};
    std::vector<int> grid_sizes{64, 64};
    std::vector<double> grid_length{};  // empty: 2 pi per axis
    int s = 3;
    double delta0 = 0.05;
    std::uint64_t seed = 1234;
    double mu = 1.0, kappa = 0.0, nu = 1.0, theta = 1.0, gamma = 2.0;
    double dt = 2e-4;
    double t_end = 0.1;
    Scheme scheme = Scheme::imex_bdf2;
    std::string profile = "taylor_green";  // taylor_green | rest
    double amplitude = 1.0;                // base-velocity amplitude
    std::string out_dir;                   // empty: no files written
    bool floor_probe = true;               // refinement probe for the exclusion rule
};

/// Per-lambda Theorem-2.3 quantities measured at t_end (plus the time
/// integrals accumulated along the run) and modulated-energy tracking.
struct RatePoint {
    double lambda = 0.0;
    double e_combined = 0.0;       // lam ||rho-1||_s^2 + ||u-u_inc||^2 + ||n-n_inc||_2^2
    double rho_weighted = 0.0;     // lam ||rho-1||_s^2
    double grad_rho_hs2 = 0.0;     // ||grad(rho-1)||_{s-2}^2
    double time_integrated_u = 0.0;  // int_0^T ||u-u_inc||_1^2
    double time_integrated_n = 0.0;  // int_0^T ||n-n_inc||_3^2
    bool valid = true;
    std::string note;
    // modulated-energy bookkeeping along the run
    double min_modulated_part = 0.0;
    double pi0 = 0.0;
    double rho0_dev_l2_sq = 0.0;  // ||rho(0) - 1||^2
    double max_qpp0 = 0.0;        // max over cells of Q''(rho(0))
};

struct FittedSlope {
    std::string quantity;
    double slope = 0.0;
    double stderr_ = 0.0;
    double expected = 0.0;
    int points_used = 0;
};

struct RateReport {
    std::vector<RatePoint> points;
    std::vector<FittedSlope> slopes;  // e_combined, rho_weighted, grad_rho_hs2
    std::map<std::string, double> floors;
    std::vector<std::string> excluded;  // "quantity:lambda" dropped by the floor rule
};

/// Runs the incompressible reference once from (u0, n0) and one compressible
/// run per lambda from well-prepared data, then fits log-log slopes. Blown-up
/// runs are flagged in the report, not thrown. With out_dir set, writes
/// rates.csv, slopes.csv and per-run observer CSVs (byte-stable for a fixed
/// config and seed).
RateReport sweep_lambda(const SweepConfig& cfg);

}  // namespace nlc
