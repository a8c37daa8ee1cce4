#pragma once

#include <stdexcept>
#include <string>

namespace nlc {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Field shapes or grids do not match.
struct shape_error : error {
    using error::error;
};

/// Non-finite values where finite input is required.
struct numeric_error : error {
    using error::error;
};

/// Pointwise value outside the mathematical domain (e.g. nonpositive density).
struct domain_error : error {
    using error::error;
};

/// A stated precondition does not hold (non-solenoidal base velocity, ...).
struct precondition_error : error {
    using error::error;
};

/// Director normalization impossible: |n| too close to zero somewhere.
struct degeneracy_error : error {
    using error::error;
};

/// State left the |rho - 1| < 1/2 regime where the nonconservative form is valid.
struct regime_error : error {
    using error::error;
};

/// Requested explicit time step violates the scheme's stability bound.
struct stability_error : error {
    using error::error;
};

/// NaN/Inf appeared during time integration; carries the failure time.
struct blowup_error : error {
    blowup_error(const std::string& msg, double t, long step)
        : error(msg), time(t), step(step) {}
    double time;
    long step;
};

/// Malformed configuration file or unknown key.
struct config_error : error {
    using error::error;
};

}  // namespace nlc
