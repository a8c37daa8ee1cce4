#include "nlc/observers.hpp"

#include <cmath>

#include "nlc/io.hpp"
#include "nlc/spectral.hpp"

namespace nlc {

CompressibleEnergyObserver::CompressibleEnergyObserver(std::ostream* os) : os_(os) {
    if (os_)
        *os_ << "t,mass,kinetic,elastic,acoustic,dissipation_cum,energy_residual,unit_drift,"
                "max_rho_dev\n";
}

void CompressibleEnergyObserver::operator()(const CompressibleState& s, const StepDiagnostics& d,
                                            long) {
    double kin = kinetic_energy(s);
    double ela = elastic_energy(s.grid(), s.n, s.params.nu);
    double aco = acoustic_energy(s);
    double rate = dissipation_rate(s);
    double energy = kin + ela + aco;
    if (first_) {
        e0_ = energy;
        first_ = false;
    } else {
        diss_cum_ += 0.5 * (s.time - prev_t_) * (rate + prev_rate_);
    }
    prev_t_ = s.time;
    prev_rate_ = rate;
    residual_ = energy + diss_cum_ - e0_;
    max_drift_ = std::max(max_drift_, d.unit_drift);
    mass_ = integrate(s.rho);
    double rho_dev = 0.0;
    for (double v : s.rho.values) rho_dev = std::max(rho_dev, std::fabs(v - 1.0));
    if (os_)
        *os_ << fmt_g17(s.time) << ',' << fmt_g17(mass_) << ',' << fmt_g17(kin) << ','
             << fmt_g17(ela) << ',' << fmt_g17(aco) << ',' << fmt_g17(diss_cum_) << ','
             << fmt_g17(residual_) << ',' << fmt_g17(d.unit_drift) << ',' << fmt_g17(rho_dev)
             << '\n';
}

IncompressibleEnergyObserver::IncompressibleEnergyObserver(std::ostream* os) : os_(os) {
    if (os_) *os_ << "t,kinetic,elastic,dissipation_cum,energy_residual,div_u_max,unit_drift\n";
}

void IncompressibleEnergyObserver::operator()(const IncompressibleState& s,
                                              const StepDiagnostics& d, long) {
    double kin = kinetic_energy(s);
    double ela = elastic_energy(s.grid(), s.n, s.params.nu);
    double rate = dissipation_rate(s);
    double energy = kin + ela;
    if (first_) {
        e0_ = energy;
        first_ = false;
    } else {
        diss_cum_ += 0.5 * (s.time - prev_t_) * (rate + prev_rate_);
    }
    prev_t_ = s.time;
    prev_rate_ = rate;
    residual_ = energy + diss_cum_ - e0_;
    double divmax = max_abs(divergence(s.u));
    max_div_ = std::max(max_div_, divmax);
    max_drift_ = std::max(max_drift_, d.unit_drift);
    if (os_)
        *os_ << fmt_g17(s.time) << ',' << fmt_g17(kin) << ',' << fmt_g17(ela) << ','
             << fmt_g17(diss_cum_) << ',' << fmt_g17(residual_) << ',' << fmt_g17(divmax) << ','
             << fmt_g17(d.unit_drift) << '\n';
}

}  // namespace nlc
