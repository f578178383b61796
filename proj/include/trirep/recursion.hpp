#pragma once

// Energy-dependent three-term recursions A_n d_n + B_n d_{n-1} + C_n d_{n+1} = 0
// for each solvable case, the upward solver, the diagonal-representation scan,
// and the J-matrix computed directly by quadrature.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "trirep/basis.hpp"
#include "trirep/potential.hpp"

namespace trirep {

/// How f_n (coefficients of the normalized basis) relate to d_n.
enum class CoefficientScaling {
    gamma_ratio,          // f_n = sqrt(Gamma(n+1) / (lambda Gamma(n+nu+1))) d_n
    inverse_gamma_ratio,  // f_n = sqrt(Gamma(n+nu+1) / (lambda Gamma(n+1))) d_n
    alternating_norm,     // f_n = (-1)^n A_n d_n with A_n the Jacobi basis norm
};

using Generator = std::function<double(int, double)>;

struct RecursionCoefficients {
    Generator A;  // diagonal
    Generator B;  // couples d_{n-1}
    Generator C;  // couples d_{n+1}
    CoefficientScaling scaling = CoefficientScaling::gamma_ratio;
    BasisSpec basis;
    std::optional<double> fixed_epsilon;
    std::string epsilon_constraint = "none";
    // The symmetric J-matrix equals this factor times the symmetrized rows.
    double symmetric_factor = 1;
    bool diagonal_limit = false;
    std::string label;
};

enum class Representation { symmetric_f, nonsymmetric_d };

/// J_{n,n} = diag(n, eps), J_{n,n+1} = J_{n+1,n} = offdiag(n, eps).
struct EnergyDependentTridiagonal {
    Generator diag;
    Generator offdiag;
    Representation representation = Representation::symmetric_f;
    std::optional<double> fixed_epsilon;
    std::string epsilon_constraint = "none";
};

/// [(a+1)(2n+nu+1) - eps] d_n - (a-1)[(n+nu) d_{n-1} + (n+1) d_{n+1}] = 0, with 2 alpha = nu + 1/2.
RecursionCoefficients build_oscillator_case1(double nu, double a);

/// Continuous dual Hahn type recursion with 2 alpha = nu + 3/2; eps enters every coefficient.
RecursionCoefficients build_oscillator_case2(double nu, double b);

/// Morse recursion with nu = 2 alpha and eps = -nu^2/4, written as
/// -2[(b+1/4)(n+(nu+1)/2) + a/2] d_n + (b-1/4)[(n+nu) d_{n-1} + (n+1) d_{n+1}] = 0.
RecursionCoefficients build_morse(double a, double b, double nu);

/// Rosen-Morse recursion with (alpha, beta) = ((nu+1)/2, mu/2) and eps = -mu^2.
RecursionCoefficients build_rosen_morse(double A, double B, double mu, double nu);

/// f_n / d_n for the recursion's scaling.
double coefficient_scale(const RecursionCoefficients& rc, int n);

EnergyDependentTridiagonal symmetric_form(const RecursionCoefficients& rc);

/// size x size symmetric J-matrix from the analytic coefficients.
Eigen::MatrixXd analytic_jmatrix(const RecursionCoefficients& rc, double epsilon, int size);

struct CoefficientSeries {
    Eigen::VectorXd d;
    Eigen::VectorXd f;
    int truncation = 0;
    double tail_estimate = 0;  // |f_{N-1}| / max |f|
    std::optional<int> terminated_at;
};

/// d_0 = 1, d_{-1} = 0, d_{n+1} = -(A_n d_n + B_n d_{n-1}) / C_n. In the
/// diagonal limit returns d_n = delta_{n, n0} where A_{n0}(eps) = 0.
/// A vanishing C_n with a consistent row n ends the series with zeros.
CoefficientSeries solve_recursion(const RecursionCoefficients& rc, double epsilon, int truncation);

using Parameters = std::vector<std::pair<std::string, double>>;

struct LevelCandidate {
    RecursionCoefficients rc;
    double epsilon;
    Parameters parameters;
};

using ParamSolver = std::function<std::optional<LevelCandidate>(int n)>;

struct DiagonalLevel {
    int n;
    Parameters parameters;
    double epsilon;
};

/// Levels n < n_limit for which the solver's candidate makes the
/// representation decouple after row n: b_n = 0 with a vanishing (n+1)-block
/// determinant. Candidates that fail the check are dropped.
std::vector<DiagonalLevel> diagonalization_scan(const ParamSolver& solver, int n_limit,
                                                Representation representation = Representation::nonsymmetric_d);

enum class EpsilonEmbedding { linear_diagonal };

/// Eigenvalues (ascending) of the N x N truncation, for recursions where eps
/// enters only as -eps on the diagonal. Otherwise throws UnsupportedError.
Eigen::VectorXd truncated_eigenvalues(const RecursionCoefficients& rc, int truncation,
                                      EpsilonEmbedding embedding = EpsilonEmbedding::linear_diagonal);

/// <phi_m | (H - eps) | phi_n> by Gauss quadrature in y using analytic basis
/// derivatives. Throws AccuracyError if rule doubling disagrees.
double numeric_jmatrix(const PotentialModel& model, const BasisSpec& spec, const CoordinateMap& map, double epsilon,
                       int m, int n, int nodes = 64);

Eigen::MatrixXd numeric_jmatrix_block(const PotentialModel& model, const BasisSpec& spec, const CoordinateMap& map,
                                      double epsilon, int size, int nodes = 64);

/// max over |m - n| >= 2 of |J_mn| divided by max |J|.
double off_band_ratio(const Eigen::MatrixXd& j);

}  // namespace trirep
