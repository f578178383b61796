#pragma once

// Independent oracle: three-point finite differences for -psi'' + U psi = eps psi
// on a uniform grid with Dirichlet ends, plus Hermite functions and node counts.

#include <Eigen/Core>

#include "trirep/potential.hpp"

namespace trirep {

struct GridSolution {
    double x_min = 0;
    double x_max = 0;
    double h = 0;
    Eigen::VectorXd x;             // includes both pinned end points
    Eigen::VectorXd eigenvalues;   // ascending, E0 units
    Eigen::MatrixXd eigenvectors;  // one column per level, trapezoid-normalized
};

struct GridOptions {
    bool check_boundary = true;  // domain-too-small detection
};

/// Lowest k eigenpairs. Half-line models treat x_min as the Dirichlet cutoff
/// and skip the boundary check there. Throws DomainError if h^2 max|U| >= 0.1
/// or an eigenvector has more than 1e-6 of its maximum next to an end.
GridSolution grid_solve(const PotentialModel& model, double x_min, double x_max, double h, int k,
                        const GridOptions& options = {});

struct GridSettings {
    double x_min;
    double x_max;
    double h;
};

/// Domain and spacing used by the verification runs; x_min is the cutoff for
/// half-line models.
GridSettings default_grid(const PotentialModel& model);

/// Number of grid eigenvalues below `threshold` (Sturm count, no eigenvectors).
int grid_levels_below(const PotentialModel& model, double x_min, double x_max, double h, double threshold);

struct CutoffStudy {
    GridSolution coarse;  // cutoff 2 x_cut
    GridSolution fine;    // cutoff x_cut
    double max_relative_change = 0;
};

/// Half-line solve repeated with the cutoff halved.
CutoffStudy cutoff_halving(const PotentialModel& model, double x_cut, double x_max, double h, int k);

/// Strict sign changes, ignoring entries below 1e-9 of the largest magnitude.
int node_count(const Eigen::VectorXd& v);

/// Normalized Hermite function (2^n n! sqrt(pi))^{-1/2} H_n(x) e^{-x^2/2}.
double hermite_function(int n, double x);

}  // namespace trirep
