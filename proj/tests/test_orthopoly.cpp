#include <doctest.h>

#include <cmath>
#include <numbers>

#include "trirep/draws.hpp"
#include "trirep/orthopoly.hpp"
#include "trirep/quadrature.hpp"

using namespace trirep;
using doctest::Approx;

namespace {

constexpr double pi = std::numbers::pi;

double rel(double got, double want) { return std::abs(got - want) / std::max(1e-300, std::abs(want)); }

// |Gamma(n + 1 + i y)|^2 and |Gamma(n + 1/2 + i y)|^2 from the reflection-type
// products, independent of the Lanczos series.
double gamma_sq_integer(int n, double y) {
    double v = y == 0 ? 1.0 : pi * y / std::sinh(pi * y);
    for (int k = 1; k <= n; ++k)
        v *= k * k + y * y;
    return v;
}

double gamma_sq_half(int n, double y) {
    double v = pi / std::cosh(pi * y);
    for (int k = 0; k < n; ++k)
        v *= (k + 0.5) * (k + 0.5) + y * y;
    return v;
}

}  // namespace

TEST_CASE("laguerre examples") {
    CHECK(laguerre_eval(Laguerre<double>{0.3}, 0, 7.2) == 1);
    CHECK(laguerre_eval(Laguerre<double>{0}, 1, 2.0) == Approx(-1).epsilon(1e-15));
    CHECK(laguerre_eval(Laguerre<double>{0}, 2, 1.0) == Approx(-0.5).epsilon(1e-15));
    CHECK_THROWS_AS(laguerre_eval(Laguerre<double>{-1.5}, 2, 1.0), DomainError);
}

TEST_CASE("jacobi examples") {
    CHECK(jacobi_eval(Jacobi<double>{1.5, -0.2}, 0, 0.4) == 1);
    CHECK(jacobi_eval(Jacobi<double>{1, 1}, 2, 1.0) == Approx(3).epsilon(1e-14));
}

TEST_CASE("pollaczek examples") {
    const Pollaczek<double> f{1, 0.5, 0};
    CHECK(pollaczek_eval(f, 0, 0.3) == 1);
    CHECK(pollaczek_eval(f, 1, 0.2) == Approx(0.6).epsilon(1e-15));
    CHECK(pollaczek_closed_form(f, 0, 0.3) == Approx(1).epsilon(1e-15));
    CHECK(pollaczek_closed_form(f, 1, 0.2) == Approx(0.6).epsilon(1e-14));

    // exact rational value of the recurrence and of the terminating series
    const Pollaczek<double> h{0.75, -0.5, 0.5, PollaczekVariant::hyperbolic};
    CHECK(rel(pollaczek_eval(h, 3, 1.3), 4.9184375) < 1e-14);
    CHECK(rel(pollaczek_closed_form(h, 3, 1.3), 4.9184375) < 1e-13);

    const Pollaczek<double> g{0.75, 2, -1};
    const double x = std::cos(1.1);
    CHECK(rel(pollaczek_eval(g, 5, x), 0.462099125129452645) < 1e-13);
    CHECK(rel(pollaczek_closed_form(g, 5, x), pollaczek_eval(g, 5, x)) < 1e-10);

    CHECK_THROWS_AS(pollaczek_closed_form(g, 3, 1.0), SingularError);
    CHECK_THROWS_AS(pollaczek_eval(g, 3, 1.5), DomainError);
    CHECK_NOTHROW(pollaczek_eval(g, 3, 1.0));
}

TEST_CASE("dual hahn examples") {
    CHECK(dual_hahn_eval(DualHahn<double>(1, 1, 2), 0, 0.5) == 1);
    CHECK(dual_hahn_eval(DualHahn<double>(1, 1, 2), 1, 0.5) == Approx(0.75).epsilon(1e-15));
    const DualHahn<double> f(0.5, 0.5, 1.5);
    CHECK(rel(dual_hahn_eval(f, 4, 2.0), -0.51981201171875) < 1e-14);
    CHECK(rel(dual_hahn_closed_form(f, 4, 2.0), -0.51981201171875) < 1e-13);
    CHECK_THROWS_AS(dual_hahn_eval(DualHahn<double>(-0.5, 0.5, 1), 3, 1.0), RecursionBreakdown);
}

TEST_CASE("gamma_abs_squared") {
    CHECK(gamma_abs_squared(1.0, 0.0) == Approx(1).epsilon(1e-14));
    CHECK(gamma_abs_squared(2.0, 0.0) == Approx(1).epsilon(1e-14));
    CHECK(rel(gamma_abs_squared(1.0, 1.0), 0.27202905498213316295) < 1e-13);
    CHECK_THROWS_AS(gamma_abs_squared(0.0, 1.0), DomainError);

    Draws draws(11);
    double worst = 0;
    for (int i = 0; i < 200; ++i) {
        const int n = draws.integer(0, 9);
        const double y = draws.uniform(-20, 20);
        worst = std::max(worst, rel(gamma_abs_squared(n + 1.0, y), gamma_sq_integer(n, y)));
        worst = std::max(worst, rel(gamma_abs_squared(n + 0.5, y), gamma_sq_half(n, y)));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("weight examples") {
    CHECK(weight_eval(Laguerre<double>{0}, 0.0) == 1);
    CHECK(weight_eval(Jacobi<double>{0, 0}, 0.5) == 1);
    CHECK(weight_eval(Pollaczek<double>{1, 1, 0}, 0.0) == Approx(2 / pi).epsilon(1e-13));
    CHECK_THROWS_AS(weight_eval(Laguerre<double>{0}, -1.0), DomainError);
    CHECK_THROWS_AS(weight_eval(Jacobi<double>{0, 0}, 1.5), DomainError);
}

TEST_CASE("property: recurrence residuals") {
    Draws draws(101);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        const Laguerre<double> l{draws.uniform(-0.9, 4)};
        const Jacobi<double> j{draws.uniform(-0.9, 4), draws.uniform(-0.9, 4)};
        const double mu = draws.uniform(0.1, 3), a = draws.uniform(0, 3);
        const Pollaczek<double> p{mu, a, draws.uniform(-a, a)};
        const Pollaczek<double> ph{mu, draws.uniform(-2, 2), draws.uniform(-2, 2), PollaczekVariant::hyperbolic};
        const DualHahn<double> d(draws.uniform(0.1, 3), draws.uniform(0.1, 3), draws.uniform(0.1, 3));
        const double xl = draws.uniform(0, 40), xj = draws.uniform(-1, 1), xp = draws.uniform(-1, 1);
        const double xh = draws.uniform(1, 5), x2 = draws.uniform(0, 10);
        for (int n = 0; n <= 30; ++n) {
            worst = std::max(worst, recurrence_residual(l, n, xl));
            worst = std::max(worst, recurrence_residual(j, n, xj));
            worst = std::max(worst, recurrence_residual(p, n, xp));
            worst = std::max(worst, recurrence_residual(ph, n, xh));
            worst = std::max(worst, recurrence_residual(d, n, x2));
        }
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("property: differential relations") {
    Draws draws(102);
    double worst = 0;
    for (int i = 0; i < 60; ++i) {
        const int n = draws.integer(1, 15);
        const Laguerre<double> l{draws.uniform(-0.5, 3)};
        const double x = draws.uniform(0.2, 20);
        const Jacobi<double> j{draws.uniform(-0.5, 3), draws.uniform(-0.5, 3)};
        const double t = draws.uniform(-0.9, 0.9);

        const auto dl = laguerre_derivatives(l, n, x);
        const double hl = 1e-6 * std::max(1.0, x);
        const double fd1 = (laguerre_eval(l, n, x + hl) - laguerre_eval(l, n, x - hl)) / (2 * hl);
        const double fd2 = (laguerre_derivatives(l, n, x + hl).first - laguerre_derivatives(l, n, x - hl).first) / (2 * hl);
        const double scale_l = std::abs(x * dl.second) + std::abs((l.nu + 1 - x) * dl.first) + std::abs(n * dl.value);
        worst = std::max(worst, std::abs(x * fd2 + (l.nu + 1 - x) * fd1 + n * dl.value) / scale_l);

        const auto dj = jacobi_derivatives(j, n, t);
        const double hj = 1e-6;
        const double gd1 = (jacobi_eval(j, n, t + hj) - jacobi_eval(j, n, t - hj)) / (2 * hj);
        const double gd2 = (jacobi_derivatives(j, n, t + hj).first - jacobi_derivatives(j, n, t - hj).first) / (2 * hj);
        const double c1 = j.nu - j.mu - (j.mu + j.nu + 2) * t, c0 = n * (n + j.mu + j.nu + 1);
        const double scale_j = std::abs((1 - t * t) * dj.second) + std::abs(c1 * dj.first) + std::abs(c0 * dj.value);
        worst = std::max(worst, std::abs((1 - t * t) * gd2 + c1 * gd1 + c0 * dj.value) / scale_j);
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("property: jacobi parity is exact") {
    Draws draws(103);
    for (int i = 0; i < 50; ++i) {
        const double mu = draws.uniform(-0.9, 3), nu = draws.uniform(-0.9, 3), x = draws.uniform(-1, 1);
        const auto p = jacobi_sequence(Jacobi<double>{mu, nu}, 20, -x);
        const auto q = jacobi_sequence(Jacobi<double>{nu, mu}, 20, x);
        const double scale = q.cwiseAbs().maxCoeff();
        for (int n = 0; n <= 20; ++n)
            CHECK(std::abs(p(n) - (n % 2 ? -1 : 1) * q(n)) <= 1e-13 * scale);
    }
}

TEST_CASE("property: closed forms equal the recurrences") {
    Draws draws(104);
    double laguerre = 0, jacobi = 0, pollaczek = 0, hyperbolic = 0, dual_hahn = 0;
    for (int i = 0; i < 100; ++i) {
        const Laguerre<double> l{draws.uniform(-0.5, 3)};
        const double xl = draws.uniform(0, 10);
        const Jacobi<double> j{draws.uniform(-0.5, 3), draws.uniform(-0.5, 3)};
        const double xj = draws.uniform(0, 1);  // the other half follows from parity
        const double mu = draws.uniform(0.2, 3), a = draws.uniform(0, 3);
        const Pollaczek<double> p{mu, a, draws.uniform(-a, a)};
        const double xp = std::cos(draws.uniform(0.15, 3.0));
        const Pollaczek<double> ph{mu, draws.uniform(-2, 2), draws.uniform(-2, 2), PollaczekVariant::hyperbolic};
        const double xh = draws.uniform(1.05, 4);
        const DualHahn<double> d(draws.uniform(0.2, 3), draws.uniform(0.2, 3), draws.uniform(0.2, 3));
        const double x2 = draws.uniform(0, 4);
        const auto sl = laguerre_sequence(l, 20, xl);
        const auto sj = jacobi_sequence(j, 20, xj);
        const auto sp = pollaczek_sequence(p, 20, xp);
        const auto sh = pollaczek_sequence(ph, 20, xh);
        const auto sd = dual_hahn_sequence(d, 20, x2);
        for (int n = 0; n <= 20; ++n) {
            // the 1F1 / 2F1 sums cancel badly at high order, so they only back up low orders
            if (n <= 10) {
                laguerre = std::max(laguerre, std::abs(laguerre_closed_form(l, n, xl) - sl(n)) / sl.head(n + 1).cwiseAbs().maxCoeff());
                jacobi = std::max(jacobi, std::abs(jacobi_closed_form(j, n, xj) - sj(n)) / sj.head(n + 1).cwiseAbs().maxCoeff());
            }
            pollaczek = std::max(pollaczek, std::abs(pollaczek_closed_form(p, n, xp) - sp(n)) / sp.head(n + 1).cwiseAbs().maxCoeff());
            hyperbolic = std::max(hyperbolic, std::abs(pollaczek_closed_form(ph, n, xh) - sh(n)) / sh.head(n + 1).cwiseAbs().maxCoeff());
            dual_hahn = std::max(dual_hahn, std::abs(dual_hahn_closed_form(d, n, x2) - sd(n)) / sd.head(n + 1).cwiseAbs().maxCoeff());
        }
    }
    CHECK(laguerre < 1e-9);
    CHECK(jacobi < 1e-9);
    CHECK(pollaczek < 1e-9);
    CHECK(hyperbolic < 1e-9);
    CHECK(dual_hahn < 1e-9);
}

TEST_CASE("pollaczek orthogonality at n = 0 by adaptive integration") {
    const Pollaczek<double> f{1, 1, 0};
    const double v = integrate_adaptive([&](double x) { return weight_eval(f, x); }, {-1, 1}).value;
    CHECK(v == Approx(0.5).epsilon(1e-5));
}

TEST_CASE("hyperbolic weight is rejected where its phase is complex") {
    const Pollaczek<double> f{0.8, 0.3, 0.1, PollaczekVariant::hyperbolic};
    CHECK_THROWS_AS(weight_eval(f, 2.0), DomainError);
}

TEST_CASE("long double evaluation agrees with double") {
    const Pollaczek<long double> fl{0.75L, 2.0L, -1.0L};
    const Pollaczek<double> fd{0.75, 2, -1};
    const double x = std::cos(1.1);
    CHECK(rel(static_cast<double>(pollaczek_eval(fl, 12, static_cast<long double>(x))), pollaczek_eval(fd, 12, x)) < 1e-13);
}
