#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace nlc {

inline constexpr double two_pi = 6.283185307179586476925286766559;

/// Uniform periodic grid on the torus [0, L1) x ... x [0, Ld), d = 2 or 3.
///
/// Sample counts must be even powers of two and >= 8 per axis. The per-axis
/// integer frequency set is {-M/2+1, ..., M/2} (the positive Nyquist
/// convention), scaled by 2*pi/length.
struct Grid {
    int dim = 2;
    std::array<int, 3> sizes{1, 1, 1};       // unused axes hold 1
    std::array<double, 3> length{two_pi, two_pi, two_pi};

    static Grid make(const std::vector<int>& sizes,
                     const std::vector<double>& length = {});

    std::size_t cells() const;
    double volume() const;
    double cell_volume() const;

    /// Wavenumber along `axis` for storage index i (FFT ordering).
    double wavenumber(int axis, int index) const;
    /// Full wavenumber array for one axis, in storage order.
    std::vector<double> wavenumbers(int axis) const;

    /// Row-major flat index; the last axis is contiguous.
    std::size_t index(int i0, int i1, int i2 = 0) const;

    bool operator==(const Grid& o) const {
        return dim == o.dim && sizes == o.sizes && length == o.length;
    }
};

}  // namespace nlc
