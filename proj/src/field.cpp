#include "nlc/field.hpp"

#include <cmath>
#include <string>

#include "nlc/errors.hpp"

namespace nlc {

bool all_finite(const ScalarField& f) {
    for (double v : f.values)
        if (!std::isfinite(v)) return false;
    return true;
}

bool all_finite(const VectorField& v) {
    for (const auto& c : v.comp)
        if (!all_finite(c)) return false;
    return true;
}

bool all_finite(const Field3& n) {
    for (const auto& c : n.comp)
        if (!all_finite(c)) return false;
    return true;
}

void require_finite(const ScalarField& f, const char* what) {
    if (!all_finite(f)) throw numeric_error(std::string(what) + ": non-finite input values");
}

void require_same_grid(const Grid& a, const Grid& b, const char* what) {
    if (!(a == b)) throw shape_error(std::string(what) + ": grid mismatch");
}

double unit_deviation(const Field3& n) {
    double dev = 0.0;
    const std::size_t nc = n.grid.cells();
    for (std::size_t i = 0; i < nc; ++i) {
        double r = std::sqrt(n.comp[0][i] * n.comp[0][i] + n.comp[1][i] * n.comp[1][i] +
                             n.comp[2][i] * n.comp[2][i]);
        dev = std::max(dev, std::fabs(r - 1.0));
    }
    return dev;
}

void check_unit_constraint(const Field3& n, double tol) {
    if (!all_finite(n)) throw numeric_error("director: non-finite values");
    double dev = unit_deviation(n);
    if (dev > tol)
        throw domain_error("director: unit constraint violated, max||n|-1| = " +
                           std::to_string(dev));
}

void fill(ScalarField& f, const std::function<double(double, double)>& fn2) {
    const Grid& g = f.grid;
    double h0 = g.length[0] / g.sizes[0], h1 = g.length[1] / g.sizes[1];
    for (int i0 = 0; i0 < g.sizes[0]; ++i0)
        for (int i1 = 0; i1 < g.sizes[1]; ++i1)
            f[g.index(i0, i1)] = fn2(i0 * h0, i1 * h1);
}

void fill(ScalarField& f, const std::function<double(double, double, double)>& fn3) {
    const Grid& g = f.grid;
    double h0 = g.length[0] / g.sizes[0], h1 = g.length[1] / g.sizes[1],
           h2 = g.length[2] / g.sizes[2];
    for (int i0 = 0; i0 < g.sizes[0]; ++i0)
        for (int i1 = 0; i1 < g.sizes[1]; ++i1)
            for (int i2 = 0; i2 < g.sizes[2]; ++i2)
                f[g.index(i0, i1, i2)] = fn3(i0 * h0, i1 * h1, i2 * h2);
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a.grid, b.grid, "operator+");
    ScalarField r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a.grid, b.grid, "operator-");
    ScalarField r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

ScalarField operator*(double s, const ScalarField& a) {
    ScalarField r = a;
    for (double& v : r.values) v *= s;
    return r;
}

ScalarField multiply(const ScalarField& a, const ScalarField& b) {
    require_same_grid(a.grid, b.grid, "multiply");
    ScalarField r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] *= b[i];
    return r;
}

void axpy(double a, const ScalarField& x, ScalarField& y) {
    require_same_grid(x.grid, y.grid, "axpy");
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

VectorField operator+(const VectorField& a, const VectorField& b) {
    VectorField r = a;
    for (std::size_t j = 0; j < r.comp.size(); ++j) r.comp[j] = a.comp[j] + b.comp[j];
    return r;
}

VectorField operator-(const VectorField& a, const VectorField& b) {
    VectorField r = a;
    for (std::size_t j = 0; j < r.comp.size(); ++j) r.comp[j] = a.comp[j] - b.comp[j];
    return r;
}

VectorField operator*(double s, const VectorField& a) {
    VectorField r = a;
    for (auto& c : r.comp) c = s * c;
    return r;
}

void axpy(double a, const VectorField& x, VectorField& y) {
    for (std::size_t j = 0; j < y.comp.size(); ++j) axpy(a, x.comp[j], y.comp[j]);
}

Field3 operator+(const Field3& a, const Field3& b) {
    Field3 r = a;
    for (int j = 0; j < 3; ++j) r.comp[j] = a.comp[j] + b.comp[j];
    return r;
}

Field3 operator-(const Field3& a, const Field3& b) {
    Field3 r = a;
    for (int j = 0; j < 3; ++j) r.comp[j] = a.comp[j] - b.comp[j];
    return r;
}

Field3 operator*(double s, const Field3& a) {
    Field3 r = a;
    for (auto& c : r.comp) c = s * c;
    return r;
}

void axpy(double a, const Field3& x, Field3& y) {
    for (int j = 0; j < 3; ++j) axpy(a, x.comp[j], y.comp[j]);
}

double max_abs(const ScalarField& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::fabs(v));
    return m;
}

double max_abs(const VectorField& v) {
    double m = 0.0;
    for (const auto& c : v.comp) m = std::max(m, max_abs(c));
    return m;
}

double max_abs(const Field3& n) {
    double m = 0.0;
    for (const auto& c : n.comp) m = std::max(m, max_abs(c));
    return m;
}

}  // namespace nlc
