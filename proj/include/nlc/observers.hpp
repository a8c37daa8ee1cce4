#pragma once

#include <ostream>

#include "nlc/compressible.hpp"
#include "nlc/diagnostics.hpp"
#include "nlc/incompressible.hpp"

namespace nlc {

/// Tracks the discrete energy budget of a compressible run and optionally
/// writes one CSV row per observation:
///   t,mass,kinetic,elastic,acoustic,dissipation_cum,energy_residual,unit_drift,max_rho_dev
/// Dissipation is accumulated by the trapezoid rule over observed times, so
/// feed it every step (observer_stride = 1) for budget checks.
class CompressibleEnergyObserver {
  public:
    explicit CompressibleEnergyObserver(std::ostream* os = nullptr);
    void operator()(const CompressibleState& s, const StepDiagnostics& d, long step);

    double residual() const { return residual_; }
    double dissipation_cum() const { return diss_cum_; }
    double initial_energy() const { return e0_; }
    double max_unit_drift() const { return max_drift_; }
    double mass() const { return mass_; }

  private:
    std::ostream* os_;
    bool first_ = true;
    double e0_ = 0.0, prev_t_ = 0.0, prev_rate_ = 0.0;
    double diss_cum_ = 0.0, residual_ = 0.0, max_drift_ = 0.0, mass_ = 0.0;
};

/// Incompressible counterpart:
///   t,kinetic,elastic,dissipation_cum,energy_residual,div_u_max,unit_drift
class IncompressibleEnergyObserver {
  public:
    explicit IncompressibleEnergyObserver(std::ostream* os = nullptr);
    void operator()(const IncompressibleState& s, const StepDiagnostics& d, long step);

    double residual() const { return residual_; }
    double max_div_u() const { return max_div_; }
    double max_unit_drift() const { return max_drift_; }

  private:
    std::ostream* os_;
    bool first_ = true;
    double e0_ = 0.0, prev_t_ = 0.0, prev_rate_ = 0.0;
    double diss_cum_ = 0.0, residual_ = 0.0, max_div_ = 0.0, max_drift_ = 0.0;
};

}  // namespace nlc
