#include "trirep/potential.hpp"

#include <cmath>

namespace trirep {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

void validate(const PotentialModel& model) {
    std::visit(overloaded{
                   [](const HarmonicOscillator& m) {
                       if (!std::isfinite(m.a))
                           throw DomainError("harmonic oscillator: a must be finite");
                   },
                   [](const OscillatorInverseSquareCase1& m) {
                       if (!std::isfinite(m.a))
                           throw DomainError("oscillator + inverse square: a must be finite");
                       if (!(m.b > -0.25))
                           throw DomainError("oscillator + inverse square (case 1): requires b > -1/4");
                       if (m.b == 0)
                           throw DomainError("oscillator + inverse square (case 1): requires b != 0");
                   },
                   [](const OscillatorInverseSquareCase2& m) {
                       if (!(m.b <= -0.25))
                           throw DomainError("oscillator + inverse square (case 2): requires b <= -1/4");
                   },
                   [](const GeneralizedMorse& m) {
                       if (!std::isfinite(m.A) || !std::isfinite(m.B))
                           throw DomainError("generalized Morse: A and B must be finite");
                       if (!(m.mu_scale > 0))
                           throw DomainError("generalized Morse: mu_scale must be positive");
                   },
                   [](const RosenMorse& m) {
                       if (!std::isfinite(m.A) || !std::isfinite(m.B))
                           throw DomainError("Rosen-Morse: A and B must be finite");
                   },
               },
               model);
}

std::string model_name(const PotentialModel& model) {
    return std::visit(overloaded{
                          [](const HarmonicOscillator&) { return std::string("ho"); },
                          [](const OscillatorInverseSquareCase1&) { return std::string("osc-inv-sq-1"); },
                          [](const OscillatorInverseSquareCase2&) { return std::string("osc-inv-sq-2"); },
                          [](const GeneralizedMorse&) { return std::string("morse"); },
                          [](const RosenMorse&) { return std::string("rosen-morse"); },
                      },
                      model);
}

double potential_eval(const PotentialModel& model, double x) {
    validate(model);
    auto inverse_square = [](double x) {
        if (x == 0)
            throw SingularError("potential: inverse-square term is singular at x = 0");
        return 1 / (x * x);
    };
    return std::visit(overloaded{
                          [&](const HarmonicOscillator& m) { return m.a * x * x; },
                          [&](const OscillatorInverseSquareCase1& m) { return m.a * x * x + m.b * inverse_square(x); },
                          [&](const OscillatorInverseSquareCase2& m) { return x * x + m.b * inverse_square(x); },
                          [&](const GeneralizedMorse& m) {
                              if (std::isinf(x) && x > 0)
                                  return 0.0;
                              const double e = std::exp(-x);
                              return m.A * e + m.B * e * e;
                          },
                          [&](const RosenMorse& m) {
                              const double c = std::cosh(x);
                              return m.A - m.A * std::tanh(x) + (std::isinf(c) ? 0.0 : m.B / (c * c));
                          },
                      },
                      model);
}

CoordinateMap model_map(const PotentialModel& model) {
    return std::visit(overloaded{
                          [](const GeneralizedMorse& m) { return CoordinateMap::morse(m.mu_scale); },
                          [](const RosenMorse&) { return CoordinateMap::rosen_morse(); },
                          [](const auto&) { return CoordinateMap::oscillator(); },
                      },
                      model);
}

double potential_in_y(const PotentialModel& model, double y) {
    return std::visit(overloaded{
                          [&](const HarmonicOscillator& m) { return m.a * y; },
                          [&](const OscillatorInverseSquareCase1& m) { return m.a * y + m.b / y; },
                          [&](const OscillatorInverseSquareCase2& m) { return y + m.b / y; },
                          [&](const GeneralizedMorse& m) {
                              const double a = m.A / m.mu_scale, b = m.B / (m.mu_scale * m.mu_scale);
                              return a * y + b * y * y;
                          },
                          [&](const RosenMorse& m) { return m.A * (1 - y) + m.B * (1 - y * y); },
                      },
                      model);
}

bool half_line(const PotentialModel& model) {
    return std::holds_alternative<OscillatorInverseSquareCase1>(model) ||
           std::holds_alternative<OscillatorInverseSquareCase2>(model);
}

}  // namespace trirep
