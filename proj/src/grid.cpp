#include "nlc/grid.hpp"

#include <stdexcept>
#include <string>

#include "nlc/errors.hpp"

namespace nlc {

namespace {
bool power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }
}  // namespace

Grid Grid::make(const std::vector<int>& sizes, const std::vector<double>& length) {
    Grid g;
    if (sizes.size() != 2 && sizes.size() != 3)
        throw shape_error("Grid: dim must be 2 or 3, got " + std::to_string(sizes.size()));
    g.dim = static_cast<int>(sizes.size());
    for (int j = 0; j < g.dim; ++j) {
        int m = sizes[static_cast<std::size_t>(j)];
        if (m < 8 || m % 2 != 0 || !power_of_two(m))
            throw shape_error("Grid: sizes must be even powers of two >= 8, got " +
                              std::to_string(m));
        g.sizes[static_cast<std::size_t>(j)] = m;
    }
    if (!length.empty()) {
        if (length.size() != sizes.size())
            throw shape_error("Grid: length/sizes rank mismatch");
        for (int j = 0; j < g.dim; ++j) {
            double l = length[static_cast<std::size_t>(j)];
            if (!(l > 0.0)) throw domain_error("Grid: nonpositive domain extent");
            g.length[static_cast<std::size_t>(j)] = l;
        }
    }
    return g;
}

std::size_t Grid::cells() const {
    std::size_t n = 1;
    for (int j = 0; j < dim; ++j) n *= static_cast<std::size_t>(sizes[static_cast<std::size_t>(j)]);
    return n;
}

double Grid::volume() const {
    double v = 1.0;
    for (int j = 0; j < dim; ++j) v *= length[static_cast<std::size_t>(j)];
    return v;
}

double Grid::cell_volume() const { return volume() / static_cast<double>(cells()); }

double Grid::wavenumber(int axis, int index) const {
    int m = sizes[static_cast<std::size_t>(axis)];
    int f = index <= m / 2 ? index : index - m;
    return two_pi / length[static_cast<std::size_t>(axis)] * static_cast<double>(f);
}

std::vector<double> Grid::wavenumbers(int axis) const {
    int m = sizes[static_cast<std::size_t>(axis)];
    std::vector<double> k(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) k[static_cast<std::size_t>(i)] = wavenumber(axis, i);
    return k;
}

std::size_t Grid::index(int i0, int i1, int i2) const {
    if (dim == 2) return static_cast<std::size_t>(i0) * sizes[1] + static_cast<std::size_t>(i1);
    return (static_cast<std::size_t>(i0) * sizes[1] + static_cast<std::size_t>(i1)) * sizes[2] +
           static_cast<std::size_t>(i2);
}

}  // namespace nlc
