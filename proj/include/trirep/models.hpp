#pragma once

// Closed-form spectra, wavefunction series and the named-polynomial
// coefficient routes for the solvable models.

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "trirep/potential.hpp"
#include "trirep/recursion.hpp"

namespace trirep {

/// even: nu = -1/2, odd: nu = +1/2 (oscillator only).
enum class Parity { even, odd };
/// Sign in front of sqrt(1/4 + b) for the inverse-square case 1.
enum class Branch { plus, minus };

struct ModelOptions {
    Parity parity = Parity::even;
    Branch branch = Branch::plus;
    // Overrides the basis nu where the model leaves it free (case 2, Rosen-Morse).
    std::optional<double> nu;
};

/// Rosen-Morse side values: the single-row formula solved literally
/// for mu, and the closed-form energy expression.
struct RosenMorseComparison {
    double epsilon_row_formula;
    double epsilon_closed_formula;
};

struct Level {
    int n;
    double epsilon;
    Parameters parameters;
    std::optional<RosenMorseComparison> comparison;
};

struct MorseBoundCount {
    int implemented;  // levels with nu = -2(n + a + 1/2) > 0
    int n_max_rule;   // n = 0 .. floor(-2a - 1/2)
};

struct SpectrumResult {
    std::vector<Level> levels;
    std::optional<int> n_max;
    std::optional<MorseBoundCount> morse_count;
    std::vector<std::string> notes;
    std::string units = "E0 = hbar^2 lambda^2 / 2m";
};

struct SpectrumOptions : ModelOptions {
    int count = 4;  // levels requested for the unbounded oscillator spectra
};

/// Levels from the diagonal representation of each model.
SpectrumResult spectrum(const PotentialModel& model, const SpectrumOptions& options = {});

/// Morse dimensionless depth parameter a = A / mu_scale.
MorseBoundCount morse_bound_count(double a);

/// The model as `spectrum` diagonalizes it: Morse with B > 0 and b != 1/4 gets
/// mu_scale = 2 sqrt(B); everything else is returned unchanged.
PotentialModel diagonal_model(const PotentialModel& model);

/// Options that reproduce a level's basis when the series is rebuilt from its eps.
ModelOptions level_options(const PotentialModel& model, const Level& level, ModelOptions options = {});

/// The recursion that governs the expansion coefficients at energy eps.
RecursionCoefficients model_recursion(const PotentialModel& model, double epsilon, const ModelOptions& options = {});

struct WavefunctionSeries {
    BasisSpec spec;
    CoordinateMap map;
    CoefficientSeries coeffs;
    int truncation = 0;
    double tail_estimate = 0;
    bool converged = false;
    bool odd_extension = false;  // odd oscillator parity: value carries sign(x)
    bool half_line = false;
};

/// Sum_{n<N} f_n(eps) phi_n(y(x)) coefficients; un-normalized.
WavefunctionSeries wavefunction_series(const PotentialModel& model, double epsilon, int truncation = 50,
                                       const ModelOptions& options = {}, double tail_threshold = 1e-10);

double evaluate(const WavefunctionSeries& series, double x);

struct WavefunctionValue {
    double value;
    WavefunctionSeries series;
};

WavefunctionValue wavefunction(const PotentialModel& model, double epsilon, int truncation, double x,
                               const ModelOptions& options = {});

struct ClosedFormCoefficients {
    Eigen::VectorXd d;
    std::string family;
};

/// d_0..d_{N-1} from the named polynomial solution of the model's recursion
/// (Pollaczek, hyperbolic Pollaczek or continuous dual Hahn), each evaluated
/// by its own recurrence. Diagonal limits and Rosen-Morse have no such route
/// and throw UnsupportedError.
ClosedFormCoefficients closed_form_coefficients(const PotentialModel& model, double epsilon, int truncation,
                                                const ModelOptions& options = {});

}  // namespace trirep
