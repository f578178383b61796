#pragma once

// The solvable potential families, in units of E0 = hbar^2 lambda^2 / 2m with
// lambda = 1.

#include <string>
#include <variant>

#include "trirep/basis.hpp"

namespace trirep {

/// U = a x^2.
struct HarmonicOscillator {
    double a = 1;
};

/// U = a x^2 + b / x^2 with b = nu^2 - 1/4.
struct OscillatorInverseSquareCase1 {
    double a = 1;
    double b = 0.75;
};

/// U = x^2 + b / x^2.
struct OscillatorInverseSquareCase2 {
    double b = -0.5;
};

/// U = A e^{-x} + B e^{-2x}; mu_scale is the mu of y = mu e^{-x}.
struct GeneralizedMorse {
    double A = -6;
    double B = 1;
    double mu_scale = 2;
};

/// U = A - A tanh x + B / cosh^2 x.
struct RosenMorse {
    double A = 1;
    double B = -2;
};

using PotentialModel =
    std::variant<HarmonicOscillator, OscillatorInverseSquareCase1, OscillatorInverseSquareCase2, GeneralizedMorse,
                 RosenMorse>;

/// Throws DomainError naming the violated invariant.
void validate(const PotentialModel& model);

std::string model_name(const PotentialModel& model);

double potential_eval(const PotentialModel& model, double x);

/// The model's coordinate map (lambda = 1).
CoordinateMap model_map(const PotentialModel& model);

/// U as a function of the mapped variable y.
double potential_in_y(const PotentialModel& model, double y);

/// True if the potential is singular at x = 0 and the problem lives on x > 0.
bool half_line(const PotentialModel& model);

}  // namespace trirep
