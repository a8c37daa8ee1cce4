#pragma once

#include <array>
#include <functional>
#include <vector>

#include "nlc/grid.hpp"

namespace nlc {

/// Real-space samples of a scalar function on a Grid.
struct ScalarField {
    Grid grid;
    std::vector<double> values;

    ScalarField() = default;
    explicit ScalarField(const Grid& g) : grid(g), values(g.cells(), 0.0) {}

    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }
    std::size_t size() const { return values.size(); }
};

/// Velocity-type field: one scalar component per space dimension.
struct VectorField {
    Grid grid;
    std::vector<ScalarField> comp;

    VectorField() = default;
    explicit VectorField(const Grid& g) : grid(g), comp(static_cast<std::size_t>(g.dim), ScalarField(g)) {}

    int dim() const { return grid.dim; }
};

/// Director-type field: exactly 3 components regardless of grid dimension
/// (the target sphere is S^2 even on the 2-torus). Also used for derived
/// quantities like Laplacians of directors, which are not unit length.
struct Field3 {
    Grid grid;
    std::array<ScalarField, 3> comp;

    Field3() = default;
    explicit Field3(const Grid& g) : grid(g), comp{ScalarField(g), ScalarField(g), ScalarField(g)} {}
};

/// A Field3 contractually on the unit sphere; see check_unit_constraint.
using DirectorField = Field3;

inline constexpr double default_unit_tol = 1e-8;

// Scan helpers. Throw numeric_error / shape_error on violation.
bool all_finite(const ScalarField& f);
bool all_finite(const VectorField& v);
bool all_finite(const Field3& n);
void require_finite(const ScalarField& f, const char* what);
void require_same_grid(const Grid& a, const Grid& b, const char* what);

/// Max over cells of | |n(x)| - 1 |.
double unit_deviation(const Field3& n);
/// Throws numeric/constraint errors if n is further than tol from S^2 anywhere.
void check_unit_constraint(const Field3& n, double tol = default_unit_tol);

// Elementwise arithmetic used throughout the solvers.
void fill(ScalarField& f, const std::function<double(double, double)>& fn2);   // 2D
void fill(ScalarField& f, const std::function<double(double, double, double)>& fn3);  // 3D

ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(double s, const ScalarField& a);
ScalarField multiply(const ScalarField& a, const ScalarField& b);
void axpy(double a, const ScalarField& x, ScalarField& y);  // y += a*x

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a, const VectorField& b);
VectorField operator*(double s, const VectorField& a);
void axpy(double a, const VectorField& x, VectorField& y);

Field3 operator+(const Field3& a, const Field3& b);
Field3 operator-(const Field3& a, const Field3& b);
Field3 operator*(double s, const Field3& a);
void axpy(double a, const Field3& x, Field3& y);

double max_abs(const ScalarField& f);
double max_abs(const VectorField& v);
double max_abs(const Field3& n);

}  // namespace nlc
