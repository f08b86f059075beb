#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mss4/chart.hpp"

namespace mss4 {

/// Rectangular nodal lattice carrying both height functions and a fixed-node
/// mask. Boundary (masked) values never change during optimization.
struct GridField {
    int nx = 0, ny = 0;
    double x0 = 0.0, y0 = 0.0;
    double hx = 0.0, hy = 0.0;
    std::vector<double> f, g;            // row-major, index j * nx + i
    std::vector<std::uint8_t> fixed;     // nonzero = held fixed

    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
    double x_at(int i) const { return x0 + i * hx; }
    double y_at(int j) const { return y0 + j * hy; }
    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
};

/// Uniform grid over [xmin, xmax] x [ymin, ymax] with the rectangle boundary
/// marked fixed and all values zero.
GridField make_grid(double xmin, double xmax, double ymin, double ymax, int nx, int ny);

/// Copy chart values onto the fixed nodes (typically the boundary).
void set_boundary_from_chart(GridField& grid, const Chart& chart);

/// Copy chart values onto every node (reference interpolant).
void fill_from_chart(GridField& grid, const Chart& chart);

/// Fill free nodes by transfinite interpolation of the current rectangle
/// boundary values.
void transfinite_init(GridField& grid);

/// Discrete area: per cell, the area element from bilinear cell gradients at
/// 2x2 Gauss points, in the quartic form
/// omega^2 = 1 + |grad f|^2 + |grad g|^2 + (fx gy - fy gx)^2.
double discrete_area(const GridField& grid);

struct AreaGradient {
    std::vector<double> df, dg;  // zero on fixed nodes
    double max_abs() const;
};

/// Exact gradient of discrete_area with respect to the free nodal values
/// (analytic differentiation of the discrete functional).
AreaGradient area_gradient(const GridField& grid);

struct SolveParams {
    int max_iter = 20000;
    double tol = 1e-8;              // sup-norm of the gradient
    std::string step_rule = "bb";   // "bb" or "fixed"
    double armijo_c = 1e-4;
};

struct SolveReport {
    int iterations = 0;
    double final_area = 0.0;
    double final_gradient_norm = 0.0;
    bool converged = false;
    bool area_monotone = true;  // accepted steps never increased the area
    double wall_time_s = 0.0;
    std::string note;
};

/// Gradient descent with Armijo backtracking on the free nodes; the "bb"
/// step rule seeds each line search with a Barzilai-Borwein step. Accepted
/// steps are monotone in area by construction. Deterministic for fixed
/// inputs. A non-finite area is reported in the note, never thrown.
SolveReport solve(GridField& grid, const SolveParams& params = {});

// Grid file formats: CSV rows "x,y,f,g" with a header line (row-major,
// i fastest), and JSON with metadata plus row-major arrays.
void write_grid_csv(const GridField& grid, std::ostream& out);
GridField read_grid_csv(std::istream& in);
void write_grid_json(const GridField& grid, std::ostream& out);
GridField read_grid_json(std::istream& in);

}  // namespace mss4
