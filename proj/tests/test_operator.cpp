#include <doctest.h>

#include <cmath>

#include "trirep/draws.hpp"
#include "trirep/models.hpp"
#include "trirep/recursion.hpp"

using namespace trirep;
using doctest::Approx;

namespace {

struct DevelopedCase {
    const char* name;
    PotentialModel model;
    RecursionCoefficients rc;
    double epsilon;
};

std::vector<DevelopedCase> developed_cases() {
    return {
        {"oscillator case 1", OscillatorInverseSquareCase1{2, 0.75}, build_oscillator_case1(1, 2), 1.3},
        {"oscillator case 2", OscillatorInverseSquareCase2{-0.5}, build_oscillator_case2(0.3, -0.5), 0.7},
        {"morse", GeneralizedMorse{-6, 0.5, 2}, build_morse(-3, 0.125, 2), -1},
        {"rosen-morse", RosenMorse{1, -2}, build_rosen_morse(1, -2, 0.7, 0.9), -0.49},
    };
}

std::vector<double> scan_energies(const std::vector<DiagonalLevel>& levels) {
    std::vector<double> out;
    for (const auto& l : levels)
        out.push_back(l.epsilon);
    return out;
}

}  // namespace

TEST_CASE("solve_recursion in the diagonal limit") {
    const auto rc = build_oscillator_case1(-0.5, 1);
    REQUIRE(rc.diagonal_limit);
    const auto s = solve_recursion(rc, 1, 10);
    CHECK(s.d(0) == 1);
    CHECK(s.d.tail(9).cwiseAbs().maxCoeff() == 0);
    REQUIRE(s.terminated_at.has_value());
    CHECK(*s.terminated_at == 0);

    const auto t = solve_recursion(rc, 9, 10);
    CHECK(t.d(2) == 1);
    CHECK(std::abs(t.d(0)) + std::abs(t.d(1)) + t.d.tail(7).cwiseAbs().sum() == 0);

    CHECK_THROWS_AS(solve_recursion(rc, 2, 10), RecursionBreakdown);
}

TEST_CASE("solve_recursion enforces the fixed energy") {
    const auto rc = build_morse(-3, 0.125, 2);
    REQUIRE(rc.fixed_epsilon.has_value());
    CHECK(*rc.fixed_epsilon == Approx(-1));
    CHECK_THROWS_AS(solve_recursion(rc, -2, 10), DomainError);
}

TEST_CASE("builders reject parameters outside their domains") {
    CHECK_THROWS_AS(build_rosen_morse(1, -2, -1, 0.5), DomainError);
    CHECK_THROWS_AS(build_morse(-3, 0.25, -1.5), DomainError);
    CHECK_THROWS_AS(build_oscillator_case1(-0.6, 1), DomainError);
    CHECK_THROWS_AS(build_oscillator_case2(-1, 0), DomainError);
}

TEST_CASE("diagonalization_scan examples") {
    SUBCASE("oscillator even parity") {
        const auto rc = build_oscillator_case1(-0.5, 1);
        ParamSolver solver = [&](int n) -> std::optional<LevelCandidate> {
            return LevelCandidate{rc, 2 * (2 * n + 0.5), {{"nu", -0.5}}};
        };
        const auto levels = diagonalization_scan(solver, 5);
        REQUIRE(levels.size() == 5);
        for (int n = 0; n < 5; ++n)
            CHECK(levels[n].epsilon == Approx(4 * n + 1).epsilon(1e-15));
    }
    SUBCASE("a wrong energy is rejected") {
        const auto rc = build_oscillator_case1(-0.5, 1);
        ParamSolver solver = [&](int n) -> std::optional<LevelCandidate> {
            return LevelCandidate{rc, 4.0 * n + 1.5, {}};
        };
        CHECK(diagonalization_scan(solver, 4).empty());
    }
    SUBCASE("morse needs b = 1/4") {
        ParamSolver solver = [](int n) -> std::optional<LevelCandidate> {
            const double nu = -2 * (n - 3 + 0.5);
            if (!(nu > 0))
                return std::nullopt;
            return LevelCandidate{build_morse(-3, 0.25, nu), -nu * nu / 4, {{"nu", nu}}};
        };
        const auto levels = scan_energies(diagonalization_scan(solver, 6));
        REQUIRE(levels.size() == 3);
        CHECK(levels[0] == Approx(-6.25));
        CHECK(levels[1] == Approx(-2.25));
        CHECK(levels[2] == Approx(-0.25));

        ParamSolver off = [](int n) -> std::optional<LevelCandidate> {
            const double nu = -2 * (n - 3 + 0.5);
            if (!(nu > 0))
                return std::nullopt;
            return LevelCandidate{build_morse(-3, 0.2, nu), -nu * nu / 4, {{"nu", nu}}};
        };
        CHECK(diagonalization_scan(off, 6).empty());
    }
}

TEST_CASE("symmetric and nonsymmetric scans agree") {
    std::vector<ParamSolver> solvers;
    solvers.push_back([](int n) -> std::optional<LevelCandidate> {
        return LevelCandidate{build_oscillator_case1(0.5, 1), 2 * (2 * n + 1.5), {}};
    });
    solvers.push_back([](int n) -> std::optional<LevelCandidate> {
        const double nu = -2 * (n - 4.2 + 0.5);
        if (!(nu > 0))
            return std::nullopt;
        return LevelCandidate{build_morse(-4.2, 0.25, nu), -nu * nu / 4, {}};
    });
    const SpectrumResult rm = spectrum(RosenMorse{1, -12});
    REQUIRE(rm.levels.size() == 3);
    solvers.push_back([&](int n) -> std::optional<LevelCandidate> {
        if (n >= static_cast<int>(rm.levels.size()))
            return std::nullopt;
        const auto& p = rm.levels[n].parameters;
        double mu = 0, nu = 0;
        for (const auto& [k, v] : p)
            (k == "mu" ? mu : nu) = v;
        return LevelCandidate{build_rosen_morse(1, -12, mu, nu), -mu * mu, {}};
    });
    for (const auto& solver : solvers) {
        const auto d = scan_energies(diagonalization_scan(solver, 6, Representation::nonsymmetric_d));
        const auto f = scan_energies(diagonalization_scan(solver, 6, Representation::symmetric_f));
        CHECK(!d.empty());
        CHECK(d == f);
    }
}

TEST_CASE("numeric_jmatrix examples") {
    const auto even = build_oscillator_case1(-0.5, 1);
    CHECK(std::abs(numeric_jmatrix(HarmonicOscillator{1}, even.basis, CoordinateMap::oscillator(), 1, 0, 0)) < 1e-8);

    // a = 2, nu = 1/2: the odd oscillator basis
    const auto odd = build_oscillator_case1(0.5, 2);
    const double j01 = numeric_jmatrix(HarmonicOscillator{2}, odd.basis, CoordinateMap::oscillator(), 1.3, 0, 1);
    CHECK(j01 == Approx(-std::sqrt(1.5)).epsilon(1e-10));
    CHECK(analytic_jmatrix(odd, 1.3, 2)(0, 1) == Approx(-std::sqrt(1.5)).epsilon(1e-14));

    for (const auto& c : developed_cases()) {
        CAPTURE(c.name);
        const auto j = numeric_jmatrix_block(c.model, c.rc.basis, model_map(c.model), c.epsilon, 5);
        CHECK(std::abs(j(0, 4)) <= 1e-8 * j.cwiseAbs().maxCoeff());
    }
    CHECK_THROWS_AS(numeric_jmatrix(HarmonicOscillator{1}, even.basis, CoordinateMap::rosen_morse(), 1, 0, 0),
                    DomainError);
}

TEST_CASE("property: tridiagonality with a negative control") {
    for (const auto& c : developed_cases()) {
        CAPTURE(c.name);
        const auto map = model_map(c.model);
        const auto j = numeric_jmatrix_block(c.model, c.rc.basis, map, c.epsilon, 13);
        CHECK(off_band_ratio(j) <= 1e-8);
        const auto a = analytic_jmatrix(c.rc, c.epsilon, 13);
        CHECK((j - a).cwiseAbs().maxCoeff() <= 1e-8 * j.cwiseAbs().maxCoeff());

        BasisSpec perturbed = c.rc.basis;
        perturbed.alpha += 0.1;
        const auto p = numeric_jmatrix_block(c.model, perturbed, map, c.epsilon, 13);
        CHECK(off_band_ratio(p) > 1e-3);
    }
}

TEST_CASE("property: analytic and numeric J-matrix agree over random parameters") {
    Draws draws(301);
    for (int i = 0; i < 6; ++i) {
        const double a = draws.uniform(0.3, 3), b = draws.uniform(0.1, 3), eps = draws.uniform(-3, 8);
        const OscillatorInverseSquareCase1 m{a, b};
        const auto rc = build_oscillator_case1(std::sqrt(0.25 + b), a);
        const auto j = numeric_jmatrix_block(m, rc.basis, model_map(m), eps, 10);
        CHECK((j - analytic_jmatrix(rc, eps, 10)).cwiseAbs().maxCoeff() <= 1e-8 * j.cwiseAbs().maxCoeff());
    }
}

TEST_CASE("truncated eigenvalues interlace and converge") {
    const auto rc = build_oscillator_case1(1, 2);
    for (int n = 4; n < 30; n += 5) {
        const auto small = truncated_eigenvalues(rc, n);
        const auto large = truncated_eigenvalues(rc, n + 1);
        for (int k = 0; k < n; ++k) {
            const double tol = 1e-12 * std::abs(large(n));
            CHECK(large(k) <= small(k) + tol);
            CHECK(small(k) <= large(k + 1) + tol);
        }
    }
    // U = 2 x^2 + 3/(4 x^2): eps_0 = sqrt(2) * 2 (nu + 1) with nu = 1
    CHECK(truncated_eigenvalues(rc, 200)(0) == Approx(4 * std::sqrt(2.0)).epsilon(1e-6));
    CHECK_THROWS_AS(truncated_eigenvalues(build_oscillator_case2(0, -0.5), 10), UnsupportedError);
}

TEST_CASE("symmetric form matches the analytic J-matrix") {
    for (const auto& c : developed_cases()) {
        const auto sf = symmetric_form(c.rc);
        const auto a = analytic_jmatrix(c.rc, c.epsilon, 6);
        for (int n = 0; n < 5; ++n) {
            CHECK(sf.diag(n, c.epsilon) == Approx(a(n, n)).epsilon(1e-14));
            CHECK(sf.offdiag(n, c.epsilon) == Approx(a(n, n + 1)).epsilon(1e-14));
        }
    }
}
