#include <doctest.h>

#include <cmath>
#include <numbers>

#include "trirep/draws.hpp"
#include "trirep/grid.hpp"
#include "trirep/quadrature.hpp"

using namespace trirep;
using doctest::Approx;

namespace {

constexpr double infinity = std::numeric_limits<double>::infinity();

double polynomial(const std::vector<double>& c, double x) {
    double v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        v = v * x + *it;
    return v;
}

}  // namespace

TEST_CASE("grid oscillator levels") {
    const auto g = grid_solve(HarmonicOscillator{1}, -8, 8, 1.0 / 256, 4);
    for (int k = 0; k < 4; ++k)
        CHECK(std::abs(g.eigenvalues(k) - (2 * k + 1)) < 1e-3);
    for (int k = 0; k < 4; ++k)
        CHECK(node_count(g.eigenvectors.col(k)) == k);
}

TEST_CASE("grid box levels") {
    GridOptions options;
    options.check_boundary = false;
    const auto g = grid_solve(HarmonicOscillator{0}, 0, std::numbers::pi, std::numbers::pi / 2048, 4, options);
    for (int k = 0; k < 4; ++k)
        CHECK(g.eigenvalues(k) == Approx((k + 1) * (k + 1)).epsilon(1e-5));
}

TEST_CASE("grid morse levels and nodes") {
    const GeneralizedMorse morse{-6, 1, 2};
    const auto s = default_grid(morse);
    const auto g = grid_solve(morse, s.x_min, s.x_max, s.h, 3);
    CHECK(g.eigenvalues(0) == Approx(-6.25).epsilon(1e-4));
    CHECK(g.eigenvalues(1) == Approx(-2.25).epsilon(1e-4));
    CHECK(g.eigenvalues(2) == Approx(-0.25).epsilon(1e-3));
    CHECK(node_count(g.eigenvectors.col(2)) == 2);
    CHECK(grid_levels_below(morse, s.x_min, s.x_max, s.h, 0) == 3);
}

TEST_CASE("grid convergence is second order") {
    const HarmonicOscillator ho{1};
    double e[3];
    for (int i = 0; i < 3; ++i)
        e[i] = grid_solve(ho, -8, 8, 1.0 / (32 << i), 2).eigenvalues(1);
    const double ratio = (e[0] - e[1]) / (e[1] - e[2]);
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);
}

TEST_CASE("grid eigenvectors are orthonormal") {
    const auto g = grid_solve(RosenMorse{1, -12}, -15, 40, 1.0 / 64, 3);
    const Eigen::MatrixXd gram = g.h * g.eigenvectors.transpose() * g.eigenvectors;
    CHECK((gram - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("grid rejects a domain that clips the state") {
    CHECK_THROWS_AS(grid_solve(HarmonicOscillator{1}, -2, 2, 1.0 / 64, 3), DomainError);
    CHECK_THROWS_AS(grid_solve(HarmonicOscillator{1}, -8, 8, 1.0, 2), DomainError);
}

TEST_CASE("cutoff halving on the half line") {
    const OscillatorInverseSquareCase1 model{1, 0.75};
    const auto s = default_grid(model);
    const auto study = cutoff_halving(model, s.x_min, 8, s.h, 3);
    CHECK(study.max_relative_change < 1e-3);
    CHECK(study.fine.eigenvalues(0) == Approx(4).epsilon(1e-3));
}

TEST_CASE("node_count examples") {
    Eigen::VectorXd v(7);
    v << 0, 1, -1, 1e-12, -1, 1, 0;
    CHECK(node_count(v) == 2);
    Eigen::VectorXd flat = Eigen::VectorXd::Zero(4);
    CHECK(node_count(flat) == 0);
}

TEST_CASE("hermite_function examples") {
    CHECK(hermite_function(0, 0) == Approx(std::pow(std::numbers::pi, -0.25)).epsilon(1e-15));
    CHECK(hermite_function(1, 1) == Approx(std::sqrt(2.0) * std::pow(std::numbers::pi, -0.25) * std::exp(-0.5)));
    for (int n : {0, 5, 30}) {
        const auto norm = integrate_adaptive([n](double x) { return std::pow(hermite_function(n, x), 2); },
                                             {-infinity, infinity});
        CHECK(norm.value == Approx(1).epsilon(1e-10));
    }
}

TEST_CASE("gauss_rule examples") {
    const auto one = gauss_rule(Laguerre<double>{0}, 1);
    CHECK(one.nodes(0) == Approx(1).epsilon(1e-15));
    CHECK(one.weights(0) == Approx(1).epsilon(1e-15));

    const auto legendre = gauss_rule(Jacobi<double>{0, 0}, 3);
    CHECK(apply_rule(legendre, [](double x) { return std::pow(x, 4); }) == Approx(0.4).epsilon(1e-14));
    CHECK(legendre.exactness_degree == 5);
    CHECK_THROWS_AS(gauss_rule(Laguerre<double>{-1.5}, 4), DomainError);
}

TEST_CASE("property: gauss rules integrate polynomials exactly") {
    Draws draws(501);
    for (int i = 0; i < 20; ++i) {
        const int nodes = draws.integer(2, 12);
        std::vector<double> c(2 * nodes);
        for (auto& v : c)
            v = draws.uniform(-1, 1);
        const double nu = draws.uniform(-0.5, 3);
        // moments of x^nu e^-x are Gamma(k + nu + 1)
        double exact = 0;
        for (std::size_t k = 0; k < c.size(); ++k)
            exact += c[k] * std::tgamma(k + nu + 1);
        const double ruled = apply_rule(gauss_rule(Laguerre<double>{nu}, nodes), [&](double x) { return polynomial(c, x); });
        CHECK(ruled == Approx(exact).epsilon(1e-10));

        const double mu = draws.uniform(0, 2), nj = draws.uniform(0, 2);
        const auto adaptive = integrate_adaptive(
            [&](double x) { return std::pow(1 - x, mu) * std::pow(1 + x, nj) * polynomial(c, x); }, {-1, 1});
        const double jr = apply_rule(gauss_rule(Jacobi<double>{mu, nj}, nodes), [&](double x) { return polynomial(c, x); });
        CHECK(jr == Approx(adaptive.value).epsilon(1e-8));
    }
}

TEST_CASE("overlap_integral examples") {
    auto one = [](double) { return 1.0; };
    auto x = [](double y) { return y; };
    const auto lag = overlap_integral(x, x, one, {0, infinity}, GaussSpec{Laguerre<double>{0}, 16});
    CHECK(lag.value == Approx(2).epsilon(1e-13));
    const auto gauss = overlap_integral(one, one, [](double y) { return std::exp(-y * y); }, {-infinity, infinity},
                                        AdaptiveOptions{});
    CHECK(gauss.value == Approx(std::sqrt(std::numbers::pi)).epsilon(1e-11));
}
