#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nlc/state.hpp"

namespace nlc {

/// Formats a double so it round-trips bit-exactly through parsing (%.17g).
std::string fmt_g17(double v);

// ---- Field snapshot format ----
//
// Header line:
//   NLC1 dim=<d> sizes=<m1,..> length=<l1,..> time=<t> lambda=<lam>
// followed by raw little-endian float64 payload in the order
//   rho, u_1..u_d, n_1..n_3 [, p]
// (p present iff the trailing bytes exist). Round trips bit-exactly.

struct Snapshot {
    Grid grid;
    double time = 0.0;
    double lambda = 0.0;
    ScalarField rho;
    VectorField u;
    Field3 n;
    std::optional<ScalarField> p;
};

void write_snapshot(const std::string& path, const Snapshot& snap);
Snapshot read_snapshot(const std::string& path);

Snapshot to_snapshot(const CompressibleState& s);
Snapshot to_snapshot(const IncompressibleState& s, bool include_pressure = true);

// ---- Structured key-value config ----
//
// Lines of `key = value`; '#' starts a comment. Unknown keys are an error so
// typos do not silently fall back to defaults.

class Config {
  public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text);

    bool has(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    long get_long(const std::string& key, long fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    std::vector<double> get_doubles(const std::string& key,
                                    const std::vector<double>& fallback) const;
    std::vector<int> get_ints(const std::string& key, const std::vector<int>& fallback) const;

    /// Throws config_error if any key was never read (catches typos).
    void check_all_consumed() const;

  private:
    std::map<std::string, std::string> kv_;
    mutable std::map<std::string, bool> seen_;
};

}  // namespace nlc
