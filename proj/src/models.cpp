#include "trirep/models.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

namespace trirep {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

double parity_nu(Parity parity) { return parity == Parity::even ? -0.5 : 0.5; }

double case1_nu(const OscillatorInverseSquareCase1& m, Branch branch) {
    const double root = std::sqrt(0.25 + m.b);
    if (branch == Branch::plus)
        return root;
    if (!(m.b < 0))
        throw DomainError("oscillator + inverse square: the minus branch needs -1/4 < b < 0");
    return -root;
}

std::string format(double v) {
    std::ostringstream os;
    os.precision(15);
    os << v;
    return os.str();
}

// Diagonal oscillator levels in the rescaled variable lambda' = a^{1/4}, where
// the coupling a' is 1.
SpectrumResult oscillator_levels(double a, double nu, int count) {
    SpectrumResult out;
    if (!(a > 0)) {
        out.notes.push_back("a <= 0: the oscillator term does not confine, no bound states");
        return out;
    }
    const double scale = std::sqrt(a);
    const auto rc = build_oscillator_case1(nu, 1);
    ParamSolver solver = [&](int n) -> std::optional<LevelCandidate> {
        return LevelCandidate{rc, 2 * (2 * n + nu + 1), {{"nu", nu}}};
    };
    for (const auto& level : diagonalization_scan(solver, count))
        out.levels.push_back({level.n, scale * level.epsilon, level.parameters, std::nullopt});
    if (a != 1)
        out.notes.push_back("levels computed with lambda' = a^(1/4) lambda, eps = sqrt(a) eps'");
    return out;
}

struct MorseParameters {
    double a;
    double b;
};

MorseParameters morse_parameters(const GeneralizedMorse& m) {
    return {m.A / m.mu_scale, m.B / (m.mu_scale * m.mu_scale)};
}

SpectrumResult morse_levels(const GeneralizedMorse& m) {
    SpectrumResult out;
    auto [a, b] = morse_parameters(m);
    if (std::abs(b - 0.25) > 1e-12) {
        if (!(m.B > 0)) {
            out.notes.push_back("B <= 0: no diagonal representation, no bound states");
            return out;
        }
        const double mu = 2 * std::sqrt(m.B);
        a = m.A / mu;
        out.notes.push_back("mu_scale re-chosen as 2 sqrt(B) = " + format(mu) + " so that b = 1/4");
    }
    const MorseBoundCount count = morse_bound_count(a);
    out.morse_count = count;
    ParamSolver solver = [a](int n) -> std::optional<LevelCandidate> {
        const double nu = -2 * (n + a + 0.5);
        if (!(nu > 0))
            return std::nullopt;
        return LevelCandidate{build_morse(a, 0.25, nu), -nu * nu / 4, {{"nu", nu}}};
    };
    for (const auto& level : diagonalization_scan(solver, std::max(count.implemented, count.n_max_rule) + 1))
        out.levels.push_back({level.n, level.epsilon, level.parameters, std::nullopt});
    if (!out.levels.empty())
        out.n_max = out.levels.back().n;
    if (count.implemented != count.n_max_rule)
        out.notes.push_back("bound-state count: n_max rule floor(-2a - 1/2) gives " +
                            std::to_string(count.n_max_rule) + " levels, normalizability (nu > 0) gives " +
                            std::to_string(count.implemented));
    return out;
}

// Row-n residual of the Rosen-Morse recursion with mu + nu = s held fixed.
double rosen_morse_residual(double A, double B, double s, int n, double mu) {
    const auto rc = build_rosen_morse(A, B, mu, s - mu);
    double prev = 0, cur = 1;
    for (int k = 0; k < n; ++k) {
        const double next = -(rc.A(k, 0) * cur + rc.B(k, 0) * prev) / rc.C(k, 0);
        prev = cur;
        cur = next;
        const double size = std::max(std::abs(prev), std::abs(cur));
        if (size > 1e100) {
            prev /= size;
            cur /= size;
        }
    }
    return rc.A(n, 0) * cur + rc.B(n, 0) * prev;
}

std::optional<double> smallest_root(const std::function<double(double)>& f, double lo, double hi) {
    constexpr int samples = 4000;
    double x0 = lo + (hi - lo) / samples;
    double f0 = f(x0);
    for (int i = 2; i < samples; ++i) {
        const double x1 = lo + (hi - lo) * i / samples;
        const double f1 = f(x1);
        if (f0 == 0)
            return x0;
        if ((f0 < 0) != (f1 < 0)) {
            double a = x0, b = x1, fa = f0;
            for (int it = 0; it < 200 && b - a > 4 * std::numeric_limits<double>::epsilon() * std::abs(b); ++it) {
                const double m = 0.5 * (a + b);
                const double fm = f(m);
                if (fm == 0)
                    return m;
                if ((fm < 0) == (fa < 0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            return 0.5 * (a + b);
        }
        x0 = x1;
        f0 = f1;
    }
    return std::nullopt;
}

SpectrumResult rosen_morse_levels(const RosenMorse& m) {
    SpectrumResult out;
    if (m.B > 0.25) {
        out.notes.push_back("B > 1/4: mu + nu cannot be real, no bound states");
        return out;
    }
    const double gamma = std::sqrt(0.25 - m.B);
    const int n_limit = static_cast<int>(std::floor(gamma - 0.5)) + 1;
    ParamSolver solver = [&](int n) -> std::optional<LevelCandidate> {
        const double s = 2 * gamma - 2 * n - 2;
        if (!(s + 1 > 0))
            return std::nullopt;
        const auto root = smallest_root([&](double mu) { return rosen_morse_residual(m.A, m.B, s, n, mu); }, 0, s + 1);
        if (!root)
            return std::nullopt;
        const double mu = *root, nu = s - mu;
        return LevelCandidate{build_rosen_morse(m.A, m.B, mu, nu), -mu * mu, {{"mu", mu}, {"nu", nu}}};
    };
    for (const auto& level : diagonalization_scan(solver, std::max(n_limit, 0))) {
        const int n = level.n;
        const double s = 2 * gamma - 2 * n - 2;
        const double t = 2 * n + s;
        const double num = m.A - 0.5 * (s + 1) * (s + 1) - (n > 0 ? 2.0 * n * n / t : 0.0);
        const double den = (n > 0 ? 2.0 * n / t : 0.0) - (s + 1);
        const double mu_row = num / den;
        const double g2 = gamma - 2 * (n + 1);
        const double bracket = g2 + (gamma - 2) / g2 * (1 - 2 * m.A / (gamma - 1));
        out.levels.push_back(
            {n, level.epsilon, level.parameters, RosenMorseComparison{-mu_row * mu_row, -0.25 * bracket * bracket}});
    }
    if (!out.levels.empty())
        out.n_max = out.levels.back().n;
    out.notes.push_back("levels solve the recursion's row-n termination at fixed mu + nu; the single-row "
                        "formula and closed-form energy are reported alongside, not asserted");
    return out;
}

}  // namespace

MorseBoundCount morse_bound_count(double a) {
    MorseBoundCount c{0, 0};
    if (!std::isfinite(a))
        throw DomainError("morse_bound_count: a must be finite");
    while (c.implemented + a + 0.5 < 0)
        ++c.implemented;
    const double top = std::floor(-2 * a - 0.5);
    c.n_max_rule = top >= 0 ? static_cast<int>(top) + 1 : 0;
    return c;
}

SpectrumResult spectrum(const PotentialModel& model, const SpectrumOptions& options) {
    validate(model);
    if (options.count < 0)
        throw DomainError("spectrum: count must be non-negative");
    return std::visit(overloaded{
                          [&](const HarmonicOscillator& m) {
                              return oscillator_levels(m.a, parity_nu(options.parity), options.count);
                          },
                          [&](const OscillatorInverseSquareCase1& m) {
                              return oscillator_levels(m.a, case1_nu(m, options.branch), options.count);
                          },
                          [&](const OscillatorInverseSquareCase2&) {
                              SpectrumResult out;
                              out.notes.push_back("b <= -1/4: no diagonal representation, coefficients only");
                              return out;
                          },
                          [&](const GeneralizedMorse& m) { return morse_levels(m); },
                          [&](const RosenMorse& m) { return rosen_morse_levels(m); },
                      },
                      model);
}

PotentialModel diagonal_model(const PotentialModel& model) {
    if (const auto* m = std::get_if<GeneralizedMorse>(&model)) {
        if (m->B > 0 && std::abs(m->B / (m->mu_scale * m->mu_scale) - 0.25) > 1e-12)
            return GeneralizedMorse{m->A, m->B, 2 * std::sqrt(m->B)};
    }
    return model;
}

ModelOptions level_options(const PotentialModel& model, const Level& level, ModelOptions options) {
    if (std::holds_alternative<RosenMorse>(model))
        for (const auto& [key, value] : level.parameters)
            if (key == "nu")
                options.nu = value;
    return options;
}

RecursionCoefficients model_recursion(const PotentialModel& model, double epsilon, const ModelOptions& options) {
    validate(model);
    if (!std::isfinite(epsilon))
        throw DomainError("eps must be finite");
    auto negative_energy = [&](const char* what) {
        if (!(epsilon < 0))
            throw DomainError(std::string(what) + ": eps must be negative so that the basis parameter is real");
    };
    return std::visit(
        overloaded{
            [&](const HarmonicOscillator& m) { return build_oscillator_case1(parity_nu(options.parity), m.a); },
            [&](const OscillatorInverseSquareCase1& m) {
                return build_oscillator_case1(case1_nu(m, options.branch), m.a);
            },
            [&](const OscillatorInverseSquareCase2& m) { return build_oscillator_case2(options.nu.value_or(0), m.b); },
            [&](const GeneralizedMorse& m) {
                negative_energy("Morse");
                const auto [a, b] = morse_parameters(m);
                return build_morse(a, b, 2 * std::sqrt(-epsilon));
            },
            [&](const RosenMorse& m) {
                negative_energy("Rosen-Morse");
                double nu;
                if (options.nu) {
                    nu = *options.nu;
                } else {
                    if (!(2 * m.A - epsilon >= 0))
                        throw DomainError("Rosen-Morse: default nu needs eps <= 2A; pass nu explicitly");
                    nu = std::sqrt(2 * m.A - epsilon) - 1;
                }
                return build_rosen_morse(m.A, m.B, std::sqrt(-epsilon), nu);
            },
        },
        model);
}

WavefunctionSeries wavefunction_series(const PotentialModel& model, double epsilon, int truncation,
                                       const ModelOptions& options, double tail_threshold) {
    const auto rc = model_recursion(model, epsilon, options);
    WavefunctionSeries s;
    s.spec = rc.basis;
    s.map = model_map(model);
    s.coeffs = solve_recursion(rc, epsilon, truncation);
    s.truncation = truncation;
    s.tail_estimate = s.coeffs.tail_estimate;
    s.converged = s.coeffs.terminated_at.has_value() || s.tail_estimate <= tail_threshold;
    s.odd_extension = std::holds_alternative<HarmonicOscillator>(model) && options.parity == Parity::odd;
    s.half_line = half_line(model);
    return s;
}

double evaluate(const WavefunctionSeries& series, double x) {
    if (!std::isfinite(x))
        return 0;
    if (series.half_line && x < 0)
        throw DomainError("wavefunction: this model lives on x > 0");
    const double y = series.map.to_y(x);
    const double envelope = basis_envelope(series.spec, y);
    if (envelope == 0)
        return 0;
    const int size = series.truncation;
    Eigen::VectorXd p = series.spec.kind == BasisKind::laguerre
                            ? laguerre_sequence(Laguerre<double>{series.spec.nu}, size - 1, y)
                            : jacobi_sequence(Jacobi<double>{series.spec.mu, series.spec.nu}, size - 1, y);
    CompensatedSum<double> sum;
    for (int n = 0; n < size; ++n) {
        if (series.coeffs.f(n) != 0)
            sum.add(series.coeffs.f(n) * basis_norm(series.spec, n) * p(n));
    }
    double value = envelope * sum.value();
    if (series.odd_extension && x < 0)
        value = -value;
    return value;
}

WavefunctionValue wavefunction(const PotentialModel& model, double epsilon, int truncation, double x,
                               const ModelOptions& options) {
    auto series = wavefunction_series(model, epsilon, truncation, options);
    const double value = evaluate(series, x);
    return {value, std::move(series)};
}

namespace {

ClosedFormCoefficients oscillator_closed_form(double a, double nu, double epsilon, int truncation) {
    if (a == 1)
        throw UnsupportedError("closed-form coefficients: a = 1 is the diagonal limit");
    const double mu = (nu + 1) / 2;
    ClosedFormCoefficients out;
    if (a > 1) {
        out.d = pollaczek_sequence(Pollaczek<double>{mu, -epsilon / 4, epsilon / 4, PollaczekVariant::hyperbolic},
                                   truncation - 1, (a + 1) / (a - 1));
        out.family = "hyperbolic Pollaczek";
    } else if (a > 0) {
        out.d = pollaczek_sequence(Pollaczek<double>{mu, -epsilon / 4, -epsilon / 4, PollaczekVariant::hyperbolic},
                                   truncation - 1, (1 + a) / (1 - a));
        for (int n = 1; n < truncation; n += 2)
            out.d(n) = -out.d(n);
        out.family = "alternating hyperbolic Pollaczek";
    } else {
        out.d = pollaczek_sequence(Pollaczek<double>{mu, -epsilon / 4, epsilon / 4, PollaczekVariant::trigonometric},
                                   truncation - 1, (a + 1) / (a - 1));
        out.family = "Pollaczek";
    }
    return out;
}

}  // namespace

ClosedFormCoefficients closed_form_coefficients(const PotentialModel& model, double epsilon, int truncation,
                                                const ModelOptions& options) {
    validate(model);
    if (truncation < 1)
        throw DomainError("closed-form coefficients: truncation must be positive");
    return std::visit(
        overloaded{
            [&](const HarmonicOscillator& m) {
                return oscillator_closed_form(m.a, parity_nu(options.parity), epsilon, truncation);
            },
            [&](const OscillatorInverseSquareCase1& m) {
                return oscillator_closed_form(m.a, case1_nu(m, options.branch), epsilon, truncation);
            },
            [&](const OscillatorInverseSquareCase2& m) {
                const double nu = options.nu.value_or(0);
                const double h = (nu + 1) / 2;
                ClosedFormCoefficients out;
                out.d = dual_hahn_sequence(DualHahn<double>(h, h, (2 - epsilon) / 4), truncation - 1,
                                           -(4 * m.b + 1) / 16);
                out.family = "continuous dual Hahn";
                return out;
            },
            [&](const GeneralizedMorse& m) {
                if (!(epsilon < 0))
                    throw DomainError("Morse: eps must be negative so that the basis parameter is real");
                const auto [a, b] = morse_parameters(m);
                if (b == 0.25)
                    throw UnsupportedError("closed-form coefficients: b = 1/4 is the diagonal limit");
                const double mu = (2 * std::sqrt(-epsilon) + 1) / 2;
                ClosedFormCoefficients out;
                if (b <= 0) {
                    out.d = pollaczek_sequence(Pollaczek<double>{mu, a, -a, PollaczekVariant::trigonometric},
                                               truncation - 1, (b + 0.25) / (b - 0.25));
                    out.family = "Pollaczek";
                } else if (b > 0.25) {
                    out.d = pollaczek_sequence(Pollaczek<double>{mu, a, -a, PollaczekVariant::hyperbolic},
                                               truncation - 1, (b + 0.25) / (b - 0.25));
                    out.family = "hyperbolic Pollaczek";
                } else {
                    out.d = pollaczek_sequence(Pollaczek<double>{mu, a, a, PollaczekVariant::hyperbolic},
                                               truncation - 1, (0.25 + b) / (0.25 - b));
                    for (int n = 1; n < truncation; n += 2)
                        out.d(n) = -out.d(n);
                    out.family = "alternating hyperbolic Pollaczek";
                }
                return out;
            },
            [&](const RosenMorse&) -> ClosedFormCoefficients {
                throw UnsupportedError("closed-form coefficients: no named polynomial for the Rosen-Morse recursion");
            },
        },
        model);
}

}  // namespace trirep
