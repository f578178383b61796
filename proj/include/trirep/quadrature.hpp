#pragma once

// Gauss rules generated from three-term recurrence coefficients (Golub-Welsch
// Jacobi matrix, nodes by Sturm bisection) and adaptive Gauss-Kronrod
// integration for non-polynomial weights.

#include <functional>
#include <limits>
#include <string>
#include <variant>

#include <Eigen/Core>

#include "trirep/orthopoly.hpp"

namespace trirep {

using WeightFamily = std::variant<Laguerre<double>, Jacobi<double>>;

struct QuadratureRule {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
    int exactness_degree = 0;
    std::string weight_id;
};

/// N-point Gauss rule for the Laguerre or Jacobi weight; exact to degree 2N-1.
QuadratureRule gauss_rule(const WeightFamily& weight, int n_nodes);

/// Zeroth moment of the weight.
double zeroth_moment(const WeightFamily& weight);

/// Integral of the weight times a polynomial p, sum w_i p(x_i).
double apply_rule(const QuadratureRule& rule, const std::function<double(double)>& f);

struct IntegralEstimate {
    double value = 0;
    double error = 0;
};

struct Interval {
    double lo;
    double hi;  // may be +infinity; lo may be -infinity
};

struct AdaptiveOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-11;
    int max_subdivisions = 4000;
};

/// Adaptive Gauss-Kronrod 7/15. Infinite ends are mapped onto finite ones.
/// Throws AccuracyError when the error target is not reached.
IntegralEstimate integrate_adaptive(const std::function<double(double)>& f, Interval support,
                                    const AdaptiveOptions& options = {});

/// Rule-based integration: the integral of weight(y) h(y). The error
/// estimate is the difference between the N-node and 2N-node rules.
struct GaussSpec {
    WeightFamily weight;
    int nodes = 64;
    double tolerance = 1e-9;  // relative to the sum of |weight * integrand|
};

using IntegrationMethod = std::variant<GaussSpec, AdaptiveOptions>;

/// Integral of f g measure over the support. With a GaussSpec the rule's
/// weight is implied, so `measure` is the density relative to that weight
/// and the support is the weight's own.
IntegralEstimate overlap_integral(const std::function<double(double)>& f, const std::function<double(double)>& g,
                                  const std::function<double(double)>& measure, Interval support,
                                  const IntegrationMethod& method);

} // namespace trirep
