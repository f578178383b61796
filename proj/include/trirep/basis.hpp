#pragma once

// Square-integrable Laguerre and Jacobi bases, the three coordinate maps from
// the real line, and their integration measures.

#include <functional>

#include <Eigen/Core>

#include "trirep/orthopoly.hpp"
#include "trirep/quadrature.hpp"

namespace trirep {

enum class BasisKind { laguerre, jacobi };

/// phi_n(y) = A_n y^alpha e^{-y/2} L_n^nu(y), or
/// phi_n(y) = A_n (1+y)^alpha (1-y)^beta P_n^{(mu,nu)}(y).
struct BasisSpec {
    BasisKind kind = BasisKind::laguerre;
    double alpha = 0;
    double beta = 0;
    double nu = 0;
    double mu = 0;
    double lambda = 1;

    static BasisSpec laguerre(double alpha, double nu, double lambda = 1);
    static BasisSpec jacobi(double alpha, double beta, double mu, double nu, double lambda = 1);

    void validate() const;
};

enum class MapKind { oscillator, morse, rosen_morse };

/// y = (lambda x)^2, y = mu_scale e^{-lambda x} or y = tanh(lambda x).
struct CoordinateMap {
    MapKind kind = MapKind::oscillator;
    double lambda = 1;
    double mu_scale = 1;

    static CoordinateMap oscillator(double lambda = 1);
    static CoordinateMap morse(double mu_scale, double lambda = 1);
    static CoordinateMap rosen_morse(double lambda = 1);

    void validate() const;
    double to_y(double x) const;
    /// The non-negative branch for the oscillator map.
    double to_x(double y) const;
    /// (dy/d(lambda x))^2 and d^2y/d(lambda x)^2 expressed through y.
    double y_prime_squared(double y) const;
    double y_second(double y) const;
    Interval image() const;
};

/// log A_n. Throws OverflowError if A_n is not representable.
double basis_log_norm(const BasisSpec& spec, int n);
double basis_norm(const BasisSpec& spec, int n);

/// The envelope y^alpha e^{-y/2} or (1+y)^alpha (1-y)^beta.
double basis_envelope(const BasisSpec& spec, double y);

/// The polynomial L_n^nu(y) or P_n^{(mu,nu)}(y), with first two derivatives.
Derivatives<double> basis_polynomial(const BasisSpec& spec, int n, double y);

double basis_eval(const BasisSpec& spec, int n, double y);

/// phi_n and its first two y-derivatives, for y strictly inside the support.
Derivatives<double> basis_derivatives(const BasisSpec& spec, int n, double y);

/// d(lambda x)/dy style Jacobian so that the integral over x becomes one over y.
double measure_factor(const CoordinateMap& map, double y);

struct MatrixElement {
    double value = 0;
    double error = 0;
    bool order_sufficient = true;  // false if the polynomial degree exceeds the rule
};

/// Gauss rule matching phi_m phi_n times the map's measure. When
/// `absorb_inverse` is set the rule exponent is lowered by one where
/// admissible so that a 1/y (or 1/(1 -+ y)) factor stays integrable.
struct MeasureRule {
    WeightFamily weight;
    // density of envelope^2 * measure relative to the rule weight
    std::function<double(double)> residual;
};
MeasureRule measure_rule(const BasisSpec& spec, const CoordinateMap& map, bool absorb_inverse);

/// <phi_m | op(y) | phi_n> under the map's measure; op defaults to 1.
/// `op_degree` is the polynomial degree of op, used for the exactness flag.
MatrixElement matrix_element(const BasisSpec& spec, const CoordinateMap& map, int m, int n,
                             const std::function<double(double)>& op = {}, int op_degree = 0, int nodes = 64);

MatrixElement overlap(const BasisSpec& spec, const CoordinateMap& map, int m, int n, int nodes = 64);

enum class TransformDirection { f_to_d, d_to_f };

/// f_n = sqrt(Gamma(n+1) / (lambda Gamma(n+nu+1))) d_n, elementwise.
Eigen::VectorXd coeff_transform(const Eigen::VectorXd& sequence, const BasisSpec& spec, TransformDirection direction);

/// Integral of h over the real line computed in the mapped variable. The
/// oscillator map folds x, so h must be even there; odd parts are rejected.
IntegralEstimate mapped_integral(const CoordinateMap& map, const std::function<double(double)>& h_of_x,
                                 const AdaptiveOptions& options = {});

}  // namespace trirep
