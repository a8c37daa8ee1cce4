#include "nlc/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include "nlc/diagnostics.hpp"
#include "nlc/errors.hpp"
#include "nlc/incompressible.hpp"
#include "nlc/initial_data.hpp"
#include "nlc/io.hpp"
#include "nlc/observers.hpp"
#include "nlc/spectral.hpp"

namespace nlc {

namespace {

struct BaseData {
    VectorField u0;
    DirectorField n0;
};

BaseData base_profile(const Grid& g, const SweepConfig& cfg) {
    BaseData b;
    if (cfg.profile == "taylor_green") {
        b.u0 = taylor_green_velocity(g, cfg.amplitude);
    } else if (cfg.profile == "rest") {
        b.u0 = VectorField(g);
    } else {
        throw config_error("sweep: unknown init profile '" + cfg.profile + "'");
    }
    b.n0 = default_director(g);
    return b;
}

ModelParams params_for(const SweepConfig& cfg, double lambda) {
    ModelParams p;
    p.mu = cfg.mu;
    p.kappa = cfg.kappa;
    p.nu = cfg.nu;
    p.theta = cfg.theta;
    p.gamma = cfg.gamma;
    p.lambda = lambda;
    return p;
}

double grad_hs_sq(const ScalarField& f, int s) {
    VectorField g = gradient(f);
    double n = sobolev_norm(g, s);
    return n * n;
}

/// Everything measured for one lambda against the stored reference trajectory.
RatePoint measure_lambda(const SweepConfig& cfg, const Grid& g, const BaseData& base,
                         const std::vector<IncompressibleState>& ref, double lambda,
                         std::ostream* obs_csv) {
    RatePoint pt;
    pt.lambda = lambda;

    ModelParams prm = params_for(cfg, lambda);
    CompressibleState init =
        well_prepared_initial_data(g, prm, cfg.delta0, cfg.seed, base.u0, base.n0, cfg.s);

    {
        ScalarField sig0 = init.rho;
        for (double& v : sig0.values) v -= 1.0;
        double l2 = sobolev_norm(sig0, 0);
        pt.rho0_dev_l2_sq = l2 * l2;
        const PressureLaw law = prm.pressure_law();
        for (double v : init.rho.values)
            pt.max_qpp0 = std::max(pt.max_qpp0, law.p_prime(v) / v);
    }

    StepControl ctl;
    ctl.dt = cfg.dt;
    ctl.t_end = cfg.t_end;
    ctl.scheme = cfg.scheme;
    ctl.observer_stride = 1;

    CompressibleEnergyObserver energy_obs(obs_csv);
    double iu = 0.0, in = 0.0, gu_prev = 0.0, gn_prev = 0.0, t_prev = 0.0;
    double min_part = std::numeric_limits<double>::infinity();
    bool first = true;

    CompressibleObserver probe = [&](const CompressibleState& s, const StepDiagnostics& d,
                                     long step) {
        energy_obs(s, d, step);
        const IncompressibleState& r = ref[static_cast<std::size_t>(step)];
        ModulatedEnergy me = modulated_energy(s, r);
        min_part = std::min({min_part, me.velocity_part, me.director_l2, me.director_grad,
                             me.pi_lambda});
        if (step == 0) pt.pi0 = me.pi_lambda;
        double gu = sobolev_norm(s.u - r.u, 1);
        double gn = sobolev_norm(s.n - r.n, 3);
        gu *= gu;
        gn *= gn;
        if (!first) {
            iu += 0.5 * (s.time - t_prev) * (gu + gu_prev);
            in += 0.5 * (s.time - t_prev) * (gn + gn_prev);
        }
        first = false;
        t_prev = s.time;
        gu_prev = gu;
        gn_prev = gn;
        if (step == static_cast<long>(ref.size()) - 1) {
            ScalarField sig = s.rho;
            for (double& v : sig.values) v -= 1.0;
            double rho_s = sobolev_norm(sig, cfg.s);
            double du = sobolev_norm(s.u - r.u, 0);
            double dn = sobolev_norm(s.n - r.n, 2);
            pt.rho_weighted = lambda * rho_s * rho_s;
            pt.e_combined = pt.rho_weighted + du * du + dn * dn;
            pt.grad_rho_hs2 = grad_hs_sq(sig, cfg.s - 2);
        }
    };

    try {
        run(init, ctl, {probe});
        pt.time_integrated_u = iu;
        pt.time_integrated_n = in;
        pt.min_modulated_part = min_part;
    } catch (const blowup_error& e) {
        pt.valid = false;
        pt.note = e.what();
    } catch (const regime_error& e) {
        pt.valid = false;
        pt.note = e.what();
    }
    return pt;
}

std::vector<IncompressibleState> reference_run(const SweepConfig& cfg, const Grid& g,
                                               const BaseData& base, std::ostream* obs_csv) {
    IncompressibleState init;
    init.time = 0.0;
    init.u = base.u0;
    init.n = base.n0;
    init.p = ScalarField(g);
    init.params = params_for(cfg, 1.0);

    StepControl ctl;
    ctl.dt = cfg.dt;
    ctl.t_end = cfg.t_end;
    ctl.scheme = cfg.scheme;
    ctl.observer_stride = 1;

    std::vector<IncompressibleObserver> obs;
    IncompressibleEnergyObserver energy_obs(obs_csv);
    obs.push_back([&](const IncompressibleState& s, const StepDiagnostics& d, long step) {
        energy_obs(s, d, step);
    });
    return run_incompressible(init, ctl, obs);
}

struct QuantitySpec {
    std::string name;
    double expected;
    double RatePoint::*member;
};

const QuantitySpec kQuantities[] = {
    {"e_combined", -1.0, &RatePoint::e_combined},
    {"rho_weighted", -1.0, &RatePoint::rho_weighted},
    {"grad_rho_hs2", -4.0, &RatePoint::grad_rho_hs2},
};

}  // namespace

RateReport sweep_lambda(const SweepConfig& cfg) {
    if (cfg.lambdas.empty()) throw config_error("sweep: empty lambda list");
    Grid g = Grid::make(cfg.grid_sizes, cfg.grid_length);
    BaseData base = base_profile(g, cfg);

    namespace fs = std::filesystem;
    const bool writing = !cfg.out_dir.empty();
    if (writing) fs::create_directories(cfg.out_dir);

    auto open_csv = [&](const std::string& name) -> std::ofstream {
        return std::ofstream(cfg.out_dir + "/" + name);
    };

    RateReport rep;

    std::ofstream inc_csv;
    if (writing) inc_csv = open_csv("incompressible.csv");
    std::vector<IncompressibleState> ref =
        reference_run(cfg, g, base, writing ? &inc_csv : nullptr);

    for (double lam : cfg.lambdas) {
        std::ofstream comp_csv;
        char lam_label[32];
        std::snprintf(lam_label, sizeof(lam_label), "%g", lam);
        if (writing) comp_csv = open_csv(std::string("comp_lambda_") + lam_label + ".csv");
        rep.points.push_back(
            measure_lambda(cfg, g, base, ref, lam, writing ? &comp_csv : nullptr));
    }

    // Spatial-floor probe: repeat the largest lambda on a refined grid; the
    // initial data is band-limited so it is the same continuum data.
    if (cfg.floor_probe) {
        double lam_max = *std::max_element(cfg.lambdas.begin(), cfg.lambdas.end());
        const RatePoint* coarse = nullptr;
        for (const auto& p : rep.points)
            if (p.lambda == lam_max && p.valid) coarse = &p;
        if (coarse) {
            SweepConfig fine_cfg = cfg;
            fine_cfg.out_dir.clear();
            fine_cfg.floor_probe = false;
            for (auto& m : fine_cfg.grid_sizes) m *= 2;
            Grid gf = Grid::make(fine_cfg.grid_sizes, fine_cfg.grid_length);
            BaseData basef = base_profile(gf, fine_cfg);
            std::vector<IncompressibleState> reff = reference_run(fine_cfg, gf, basef, nullptr);
            RatePoint fine = measure_lambda(fine_cfg, gf, basef, reff, lam_max, nullptr);
            if (fine.valid) {
                for (const auto& q : kQuantities)
                    rep.floors[q.name] = std::fabs(coarse->*(q.member) - fine.*(q.member));
            }
        }
    }

    // fits with the floor-exclusion protocol
    for (const auto& q : kQuantities) {
        std::vector<std::pair<double, double>> pts;
        for (const auto& p : rep.points)
            if (p.valid && p.*(q.member) > 0.0) pts.push_back({p.lambda, p.*(q.member)});
        std::sort(pts.begin(), pts.end());
        auto fl = rep.floors.find(q.name);
        if (fl != rep.floors.end() && pts.size() > 3 &&
            pts.back().second <= 10.0 * fl->second) {
            rep.excluded.push_back(q.name + ":" + fmt_g17(pts.back().first));
            pts.pop_back();
        }
        FittedSlope fsl;
        fsl.quantity = q.name;
        fsl.expected = q.expected;
        fsl.points_used = static_cast<int>(pts.size());
        if (pts.size() >= 3) {
            auto [slope, se] = fit_rate(pts);
            fsl.slope = slope;
            fsl.stderr_ = se;
        } else {
            fsl.slope = std::numeric_limits<double>::quiet_NaN();
            fsl.stderr_ = std::numeric_limits<double>::quiet_NaN();
        }
        rep.slopes.push_back(fsl);
    }

    if (writing) {
        std::ofstream rates = open_csv("rates.csv");
        rates << "lambda,E_combined,rho_weighted,grad_rho_hs2,time_integrated_u,"
                 "time_integrated_n\n";
        for (const auto& p : rep.points) {
            if (!p.valid) continue;
            rates << fmt_g17(p.lambda) << ',' << fmt_g17(p.e_combined) << ','
                  << fmt_g17(p.rho_weighted) << ',' << fmt_g17(p.grad_rho_hs2) << ','
                  << fmt_g17(p.time_integrated_u) << ',' << fmt_g17(p.time_integrated_n) << '\n';
        }
        bool any_failed = false;
        for (const auto& p : rep.points) any_failed |= !p.valid;
        if (any_failed) {
            std::ofstream fails = open_csv("failures.csv");
            fails << "lambda,note\n";
            for (const auto& p : rep.points)
                if (!p.valid) fails << fmt_g17(p.lambda) << ",\"" << p.note << "\"\n";
        }
        std::ofstream slopes = open_csv("slopes.csv");
        slopes << "quantity,slope,stderr,expected,points_used\n";
        for (const auto& s : rep.slopes)
            slopes << s.quantity << ',' << fmt_g17(s.slope) << ',' << fmt_g17(s.stderr_) << ','
                   << fmt_g17(s.expected) << ',' << s.points_used << '\n';
    }
    return rep;
}

}  // namespace nlc
