#pragma once

// Orthogonal polynomial families used by the tridiagonal representations:
// Laguerre, Jacobi, Pollaczek (trigonometric and hyperbolic) and continuous
// dual Hahn. Every evaluator runs the family's own three-term recurrence
// upward in n from p_{-1} = 0, p_0 = 1. The hypergeometric closed forms are
// kept as independent cross-checks and are never used as primary evaluators.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <type_traits>
#include <numbers>

#include <Eigen/Core>

#include "trirep/errors.hpp"
#include "trirep/special.hpp"

namespace trirep {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Value together with first and second derivative.
template <typename Scalar>
struct Derivatives {
    Scalar value;
    Scalar first;
    Scalar second;
};

// ---------------------------------------------------------------------------
// Families

template <typename Scalar = double>
struct Laguerre {
    Scalar nu;

    void validate() const {
        if (!(nu > -1))
            throw DomainError("Laguerre: nu must exceed -1");
    }
};

/// Jacobi P_n^{(mu,nu)}, weight (1-x)^mu (1+x)^nu.
template <typename Scalar = double>
struct Jacobi {
    Scalar mu;
    Scalar nu;

    void validate() const {
        if (!(mu > -1) || !(nu > -1))
            throw DomainError("Jacobi: mu and nu must exceed -1");
    }
};

enum class PollaczekVariant { trigonometric, hyperbolic };

template <typename Scalar = double>
struct Pollaczek {
    Scalar mu;
    Scalar a;
    Scalar b;
    PollaczekVariant variant = PollaczekVariant::trigonometric;

    /// Needed by the recurrence and the closed forms.
    void validate() const {
        if (!(mu > 0))
            throw DomainError("Pollaczek: mu must be positive");
        if (!std::isfinite(a) || !std::isfinite(b))
            throw DomainError("Pollaczek: a and b must be finite");
    }

    /// Needed by the weight and the orthogonality relation.
    void validate_orthogonality() const {
        validate();
        if (variant == PollaczekVariant::trigonometric && !(a >= std::abs(b)))
            throw DomainError("Pollaczek: orthogonality requires a >= |b|");
    }

    void check_argument(Scalar x) const {
        if (variant == PollaczekVariant::trigonometric) {
            if (!(x >= -1 && x <= 1))
                throw DomainError("Pollaczek: argument must lie in [-1, 1]");
        } else if (!(x >= 1)) {
            throw DomainError("hyperbolic Pollaczek: argument must be >= 1");
        }
    }
};

/// Continuous dual Hahn S_n^mu(x^2; a, b). `a` and `b` are either both real or
/// a complex-conjugate pair.
template <typename Scalar = double>
struct DualHahn {
    Scalar mu;
    std::complex<Scalar> a;
    std::complex<Scalar> b;

    DualHahn(Scalar mu_, Scalar a_, Scalar b_) : mu(mu_), a(a_, 0), b(b_, 0) {}
    DualHahn(Scalar mu_, std::complex<Scalar> a_, std::complex<Scalar> b_) : mu(mu_), a(a_), b(b_) {}

    bool conjugate_pair() const { return a.imag() != 0 || b.imag() != 0; }

    void validate() const {
        if (!std::isfinite(mu) || !std::isfinite(a.real()) || !std::isfinite(b.real()))
            throw DomainError("DualHahn: parameters must be finite");
        if (conjugate_pair() && std::abs(a - std::conj(b)) > 0)
            throw DomainError("DualHahn: complex parameters must form a conjugate pair");
    }

    void validate_orthogonality() const {
        validate();
        if (!(mu > 0))
            throw DomainError("DualHahn: mu must be positive");
        if (conjugate_pair()) {
            if (!(a.real() > 0))
                throw DomainError("DualHahn: conjugate pair needs a positive real part");
        } else if (!(a.real() > 0) || !(b.real() > 0)) {
            throw DomainError("DualHahn: a and b must be positive");
        }
    }

    // (n + mu + a)(n + mu + b), real for real or conjugate parameters.
    Scalar upper(int n) const { return ((Scalar(n) + mu + a) * (Scalar(n) + mu + b)).real(); }
    // n (n + a + b - 1)
    Scalar lower(int n) const { return Scalar(n) * (Scalar(n) + (a + b).real() - 1); }
};

// ---------------------------------------------------------------------------
// Laguerre

template <typename Scalar>
Vector<Scalar> laguerre_sequence(const Laguerre<Scalar>& f, int n_max, Scalar x) {
    f.validate();
    if (n_max < 0)
        throw DomainError("laguerre: degree must be non-negative");
    Vector<Scalar> p(n_max + 1);
    p(0) = 1;
    if (n_max >= 1)
        p(1) = f.nu + 1 - x;
    for (int n = 1; n < n_max; ++n)
        p(n + 1) = ((2 * n + f.nu + 1 - x) * p(n) - (n + f.nu) * p(n - 1)) / Scalar(n + 1);
    return p;
}

template <typename Scalar>
Scalar laguerre_eval(const Laguerre<Scalar>& f, int n, Scalar x) {
    return laguerre_sequence(f, n, x)(n);
}

/// L_n, L_n', L_n'' from x L' = n L_n - (n+nu) L_{n-1} and the Laguerre ODE. x > 0.
template <typename Scalar>
Derivatives<Scalar> laguerre_derivatives(const Laguerre<Scalar>& f, int n, Scalar x) {
    if (!(x > 0))
        throw DomainError("laguerre_derivatives: x must be positive");
    const auto p = laguerre_sequence(f, n, x);
    const Scalar value = p(n);
    const Scalar first = n == 0 ? Scalar(0) : (n * value - (n + f.nu) * p(n - 1)) / x;
    const Scalar second = (-(f.nu + 1 - x) * first - n * value) / x;
    return {value, first, second};
}

/// Gamma(n+nu+1)/(Gamma(n+1)Gamma(nu+1)) 1F1(-n; nu+1; x).
template <typename Scalar>
Scalar laguerre_closed_form(const Laguerre<Scalar>& f, int n, Scalar x) {
    f.validate();
    const std::array<Scalar, 1> lower{f.nu + 1};
    const Scalar series = terminating_hypergeometric<Scalar>(n, {}, lower, x);
    return std::exp(std::lgamma(n + f.nu + 1) - std::lgamma(Scalar(n + 1)) - std::lgamma(f.nu + 1)) * series;
}

/// Right-hand side of the Laguerre orthogonality relation.
template <typename Scalar>
Scalar laguerre_norm(const Laguerre<Scalar>& f, int n) {
    return std::exp(std::lgamma(n + f.nu + 1) - std::lgamma(Scalar(n + 1)));
}

template <typename Scalar>
Scalar weight_eval(const Laguerre<Scalar>& f, Scalar x) {
    f.validate();
    if (!(x >= 0))
        throw DomainError("Laguerre weight: x must be non-negative");
    if (x == 0) {
        if (f.nu < 0)
            throw SingularError("Laguerre weight: singular at x = 0 for nu < 0");
        return f.nu == 0 ? Scalar(1) : Scalar(0);
    }
    return std::exp(f.nu * std::log(x) - x);
}

// ---------------------------------------------------------------------------
// Jacobi, from ((1 +- x)/2) P_n = c_n^+- P_n +- d_n P_{n-1} +- e_n P_{n+1}

namespace detail {

template <typename Scalar>
struct JacobiCoefficients {
    Scalar c_plus, c_minus, d, e;
};

template <typename Scalar>
JacobiCoefficients<Scalar> jacobi_coefficients(const Jacobi<Scalar>& f, int n) {
    const Scalar s = f.mu + f.nu;
    JacobiCoefficients<Scalar> k{};
    if (n == 0) {
        // (mu + nu) and (mu + nu + 1) cancel analytically at n = 0.
        k.c_plus = (f.nu + 1) / (s + 2);
        k.c_minus = (f.mu + 1) / (s + 2);
        k.d = 0;
        k.e = 1 / (s + 2);
        return k;
    }
    const Scalar t = 2 * n + s;
    const Scalar common = 2 * n * (n + s + 1);
    k.c_plus = (common + s * (s / 2 + (f.nu - f.mu) / 2 + 1)) / (t * (t + 2));
    k.c_minus = (common + s * (s / 2 - (f.nu - f.mu) / 2 + 1)) / (t * (t + 2));
    k.d = (n + f.mu) * (n + f.nu) / (t * (t + 1));
    k.e = (n + 1) * (n + s + 1) / ((t + 1) * (t + 2));
    return k;
}

} // namespace detail

template <typename Scalar>
Vector<Scalar> jacobi_sequence(const Jacobi<Scalar>& f, int n_max, Scalar x) {
    f.validate();
    if (n_max < 0)
        throw DomainError("jacobi: degree must be non-negative");
    Vector<Scalar> p(n_max + 1);
    p(0) = 1;
    const Scalar half = (1 + x) / 2;
    for (int n = 0; n < n_max; ++n) {
        const auto k = detail::jacobi_coefficients(f, n);
        const Scalar prev = n == 0 ? Scalar(0) : p(n - 1);
        p(n + 1) = ((half - k.c_plus) * p(n) - k.d * prev) / k.e;
    }
    return p;
}

template <typename Scalar>
Scalar jacobi_eval(const Jacobi<Scalar>& f, int n, Scalar x) {
    return jacobi_sequence(f, n, x)(n);
}

/// P_n, P_n', P_n'' from the (1-x^2) P' relation and the Jacobi ODE. |x| < 1.
template <typename Scalar>
Derivatives<Scalar> jacobi_derivatives(const Jacobi<Scalar>& f, int n, Scalar x) {
    if (!(x > -1 && x < 1))
        throw DomainError("jacobi_derivatives: x must lie in (-1, 1)");
    const auto p = jacobi_sequence(f, n, x);
    const Scalar one_minus_x2 = (1 - x) * (1 + x);
    const Scalar value = p(n);
    Scalar first = 0;
    if (n > 0) {
        const Scalar t = 2 * n + f.mu + f.nu;
        first = (-n * (x + (f.nu - f.mu) / t) * value + 2 * (n + f.mu) * (n + f.nu) / t * p(n - 1)) / one_minus_x2;
    }
    const Scalar second =
        (((f.mu + f.nu + 2) * x + f.mu - f.nu) * first - n * (n + f.mu + f.nu + 1) * value) / one_minus_x2;
    return {value, first, second};
}

/// Gamma(n+mu+1)/(Gamma(n+1)Gamma(mu+1)) 2F1(-n, n+mu+nu+1; mu+1; (1-x)/2).
template <typename Scalar>
Scalar jacobi_closed_form(const Jacobi<Scalar>& f, int n, Scalar x) {
    f.validate();
    const std::array<Scalar, 1> upper{n + f.mu + f.nu + 1};
    const std::array<Scalar, 1> lower{f.mu + 1};
    const Scalar series = terminating_hypergeometric<Scalar>(n, upper, lower, (1 - x) / 2);
    return std::exp(std::lgamma(n + f.mu + 1) - std::lgamma(Scalar(n + 1)) - std::lgamma(f.mu + 1)) * series;
}

template <typename Scalar>
Scalar jacobi_norm(const Jacobi<Scalar>& f, int n) {
    const Scalar s = f.mu + f.nu;
    Scalar log_ratio = std::lgamma(n + f.mu + 1) + std::lgamma(n + f.nu + 1) - std::lgamma(Scalar(n + 1));
    Scalar lead = (s + 1) * std::log(Scalar(2)) - std::log(2 * n + s + 1);
    if (n == 0 && std::abs(s + 1) < Scalar(1e-300)) {
        // (2n+s+1) Gamma(n+s+1) -> Gamma(n+s+2) as s -> -1 at n = 0.
        return std::exp((s + 1) * std::log(Scalar(2)) + log_ratio - std::lgamma(s + 2));
    }
    return std::exp(lead + log_ratio - std::lgamma(n + s + 1));
}

template <typename Scalar>
Scalar weight_eval(const Jacobi<Scalar>& f, Scalar x) {
    f.validate();
    if (!(x >= -1 && x <= 1))
        throw DomainError("Jacobi weight: x must lie in [-1, 1]");
    auto factor = [](Scalar base, Scalar power) -> Scalar {
        if (base == 0) {
            if (power < 0)
                throw SingularError("Jacobi weight: singular at an endpoint");
            return power == 0 ? Scalar(1) : Scalar(0);
        }
        return std::pow(base, power);
    };
    return factor(1 - x, f.mu) * factor(1 + x, f.nu);
}

// ---------------------------------------------------------------------------
// Pollaczek, 2[(n + mu + a) x + b] P_n = (n - 1 + 2 mu) P_{n-1} + (n + 1) P_{n+1}

template <typename Scalar>
Vector<Scalar> pollaczek_sequence(const Pollaczek<Scalar>& f, int n_max, Scalar x) {
    f.validate();
    f.check_argument(x);
    if (n_max < 0)
        throw DomainError("pollaczek: degree must be non-negative");
    Vector<Scalar> p(n_max + 1);
    p(0) = 1;
    for (int n = 0; n < n_max; ++n) {
        const Scalar prev = n == 0 ? Scalar(0) : p(n - 1);
        p(n + 1) = (2 * ((n + f.mu + f.a) * x + f.b) * p(n) - (n - 1 + 2 * f.mu) * prev) / Scalar(n + 1);
    }
    return p;
}

template <typename Scalar>
Scalar pollaczek_eval(const Pollaczek<Scalar>& f, int n, Scalar x) {
    return pollaczek_sequence(f, n, x)(n);
}

/// Hypergeometric representation before taking the real part. For the
/// trigonometric variant the imaginary part is round-off.
template <typename Scalar>
std::complex<Scalar> pollaczek_closed_form_complex(const Pollaczek<Scalar>& f, int n, Scalar x) {
    using C = std::complex<Scalar>;
    f.validate();
    f.check_argument(x);
    if (n < 0)
        throw DomainError("pollaczek: degree must be non-negative");
    const Scalar prefactor =
        std::exp(std::lgamma(n + 2 * f.mu) - std::lgamma(Scalar(n + 1)) - std::lgamma(2 * f.mu));
    if (f.variant == PollaczekVariant::trigonometric) {
        const Scalar sin_theta = std::sqrt((1 - x) * (1 + x));
        if (sin_theta == 0)
            throw SingularError("pollaczek_closed_form: sin(theta) = 0 at x = +-1");
        // |z| reaches 2 near theta = pi/2 and the alternating sum cancels, so
        // double arguments are summed in extended precision.
        using W = std::conditional_t<std::is_same_v<Scalar, double>, long double, Scalar>;
        using CW = std::complex<W>;
        const W theta = std::acos(W(x));
        const W y = (W(f.b) + W(f.a) * W(x)) / std::sqrt((1 - W(x)) * (1 + W(x)));
        const CW z = CW(1) - std::exp(CW(0, -2 * theta));
        const std::array<CW, 1> upper{CW(W(f.mu), y)};
        const std::array<CW, 1> lower{CW(2 * W(f.mu), 0)};
        const CW value = std::exp(CW(0, n * theta)) * terminating_hypergeometric<CW>(n, upper, lower, z);
        return prefactor * C(static_cast<Scalar>(value.real()), static_cast<Scalar>(value.imag()));
    }
    const Scalar sinh_theta = std::sqrt((x - 1) * (x + 1));
    if (sinh_theta == 0)
        throw SingularError("pollaczek_closed_form: sinh(theta) = 0 at x = 1");
    const Scalar theta = std::acosh(x);
    const Scalar zeta = (f.b + f.a * x) / sinh_theta;
    const std::array<Scalar, 1> upper{f.mu + zeta};
    const std::array<Scalar, 1> lower{2 * f.mu};
    const Scalar series = terminating_hypergeometric<Scalar>(n, upper, lower, 1 - std::exp(2 * theta));
    return C(prefactor * std::exp(-n * theta) * series, 0);
}

template <typename Scalar>
Scalar pollaczek_closed_form(const Pollaczek<Scalar>& f, int n, Scalar x) {
    return pollaczek_closed_form_complex(f, n, x).real();
}

/// Gamma(n + 2 mu) / ((n + mu + a) Gamma(n + 1)).
template <typename Scalar>
Scalar pollaczek_norm(const Pollaczek<Scalar>& f, int n) {
    return std::exp(std::lgamma(n + 2 * f.mu) - std::lgamma(Scalar(n + 1))) / (n + f.mu + f.a);
}

/// Trigonometric weight (1/pi)(2 sin t)^{2mu-1} e^{(2t - pi) y} |Gamma(mu + i y)|^2.
/// Hyperbolic weight is returned only where its phase is real; see README.
template <typename Scalar>
Scalar weight_eval(const Pollaczek<Scalar>& f, Scalar x) {
    f.validate_orthogonality();
    f.check_argument(x);
    const Scalar pi = std::numbers::pi_v<Scalar>;
    if (f.variant == PollaczekVariant::trigonometric) {
        const Scalar sin_theta = std::sqrt((1 - x) * (1 + x));
        if (sin_theta == 0)
            throw SingularError("Pollaczek weight: singular at x = +-1");
        const Scalar theta = std::acos(x);
        const Scalar y = (f.b + f.a * x) / sin_theta;
        const Scalar log_w = -std::log(pi) + (2 * f.mu - 1) * std::log(2 * sin_theta) + (2 * theta - pi) * y +
                             log_gamma_abs_squared(f.mu, y);
        return std::exp(log_w);
    }
    const Scalar sinh_theta = std::sqrt((x - 1) * (x + 1));
    if (sinh_theta == 0)
        throw SingularError("hyperbolic Pollaczek weight: singular at x = 1");
    const Scalar theta = std::acosh(x);
    const Scalar zeta = (f.b + f.a * x) / sinh_theta;
    // (2i sinh t)^{2mu-1} e^{(2t - i pi) z}: phase pi (mu - 1/2 - z).
    const Scalar phase = pi * (f.mu - Scalar(0.5) - zeta);
    if (std::abs(std::sin(phase)) > Scalar(1e-12))
        throw DomainError("hyperbolic Pollaczek weight is complex for these parameters");
    const Scalar modulus = std::exp(-std::log(pi) + (2 * f.mu - 1) * std::log(2 * sinh_theta) + 2 * theta * zeta +
                                    2 * log_gamma(std::complex<Scalar>(f.mu + zeta, 0)).real());
    return std::cos(phase) * modulus;
}

// ---------------------------------------------------------------------------
// Continuous dual Hahn

template <typename Scalar>
Vector<Scalar> dual_hahn_sequence(const DualHahn<Scalar>& f, int n_max, Scalar x_squared) {
    f.validate();
    if (n_max < 0)
        throw DomainError("dual_hahn: degree must be non-negative");
    Vector<Scalar> p(n_max + 1);
    p(0) = 1;
    for (int n = 0; n < n_max; ++n) {
        const Scalar up = f.upper(n);
        const Scalar lo = f.lower(n);
        if (up == 0)
            throw RecursionBreakdown(n, "dual_hahn: (n + mu + a)(n + mu + b) vanishes");
        const Scalar prev = n == 0 ? Scalar(0) : p(n - 1);
        p(n + 1) = ((up + lo - f.mu * f.mu - x_squared) * p(n) - lo * prev) / up;
    }
    return p;
}

template <typename Scalar>
Scalar dual_hahn_eval(const DualHahn<Scalar>& f, int n, Scalar x_squared) {
    return dual_hahn_sequence(f, n, x_squared)(n);
}

/// 3F2(-n, mu + ix, mu - ix; mu + a, mu + b; 1), summed in real arithmetic.
template <typename Scalar>
Scalar dual_hahn_closed_form(const DualHahn<Scalar>& f, int n, Scalar x_squared) {
    f.validate();
    if (n < 0)
        throw DomainError("dual_hahn: degree must be non-negative");
    CompensatedSum<Scalar> sum;
    Scalar term = 1;
    sum.add(term);
    for (int k = 0; k < n; ++k) {
        const Scalar denom = f.upper(k);
        if (denom == 0)
            throw SingularError("dual_hahn_closed_form: lower parameter hits a non-positive integer");
        term *= Scalar(k - n) * ((f.mu + k) * (f.mu + k) + x_squared) / (denom * Scalar(k + 1));
        sum.add(term);
    }
    return sum.value();
}

/// Gamma(n+1) Gamma(n+a+b) / (Gamma(n+mu+a) Gamma(n+mu+b)).
template <typename Scalar>
Scalar dual_hahn_norm(const DualHahn<Scalar>& f, int n) {
    using C = std::complex<Scalar>;
    const C nn(Scalar(n), 0);
    const Scalar log_value = std::lgamma(Scalar(n + 1)) + log_gamma(nn + f.a + f.b).real() -
                             log_gamma(nn + f.mu + f.a).real() - log_gamma(nn + f.mu + f.b).real();
    return std::exp(log_value);
}

/// (1/2pi) |Gamma(mu+ix) Gamma(a+ix) Gamma(b+ix) / (Gamma(mu+a) Gamma(mu+b) Gamma(2ix))|^2, x >= 0.
template <typename Scalar>
Scalar weight_eval(const DualHahn<Scalar>& f, Scalar x) {
    using C = std::complex<Scalar>;
    f.validate_orthogonality();
    if (!(x >= 0))
        throw DomainError("dual Hahn weight: x must be non-negative");
    if (x == 0)
        return 0;
    const C ix(0, x);
    const Scalar log_num =
        log_gamma(C(f.mu, 0) + ix).real() + log_gamma(f.a + ix).real() + log_gamma(f.b + ix).real();
    const Scalar log_den =
        log_gamma(C(f.mu, 0) + f.a).real() + log_gamma(C(f.mu, 0) + f.b).real() + log_gamma(C(0, 2 * x)).real();
    return std::exp(2 * (log_num - log_den)) / (2 * std::numbers::pi_v<Scalar>);
}

// ---------------------------------------------------------------------------
// Recurrence residuals: plug computed values back into the defining relation.
// Returned relative to the largest term of the relation.

namespace detail {

template <typename Scalar>
Scalar relative_residual(std::initializer_list<Scalar> terms) {
    Scalar sum = 0, largest = 0;
    for (Scalar t : terms) {
        sum += t;
        largest = std::max(largest, std::abs(t));
    }
    return largest == 0 ? Scalar(0) : std::abs(sum) / largest;
}

} // namespace detail

template <typename Scalar>
Scalar recurrence_residual(const Laguerre<Scalar>& f, int n, Scalar x) {
    const auto p = laguerre_sequence(f, n + 1, x);
    const Scalar prev = n == 0 ? Scalar(0) : p(n - 1);
    return detail::relative_residual<Scalar>(
        {-x * p(n), (2 * n + f.nu + 1) * p(n), -(n + f.nu) * prev, -(n + 1) * p(n + 1)});
}

/// Checks both the (1+x)/2 and the (1-x)/2 forms; returns the larger residual.
template <typename Scalar>
Scalar recurrence_residual(const Jacobi<Scalar>& f, int n, Scalar x) {
    const auto p = jacobi_sequence(f, n + 1, x);
    const auto k = detail::jacobi_coefficients(f, n);
    const Scalar prev = n == 0 ? Scalar(0) : p(n - 1);
    const Scalar plus = detail::relative_residual<Scalar>(
        {-(1 + x) / 2 * p(n), k.c_plus * p(n), k.d * prev, k.e * p(n + 1)});
    const Scalar minus = detail::relative_residual<Scalar>(
        {-(1 - x) / 2 * p(n), k.c_minus * p(n), -k.d * prev, -k.e * p(n + 1)});
    return std::max(plus, minus);
}

template <typename Scalar>
Scalar recurrence_residual(const Pollaczek<Scalar>& f, int n, Scalar x) {
    const auto p = pollaczek_sequence(f, n + 1, x);
    const Scalar prev = n == 0 ? Scalar(0) : p(n - 1);
    return detail::relative_residual<Scalar>(
        {2 * (n + f.mu + f.a) * x * p(n), 2 * f.b * p(n), -(n - 1 + 2 * f.mu) * prev, -(n + 1) * p(n + 1)});
}

template <typename Scalar>
Scalar recurrence_residual(const DualHahn<Scalar>& f, int n, Scalar x_squared) {
    const auto p = dual_hahn_sequence(f, n + 1, x_squared);
    const Scalar prev = n == 0 ? Scalar(0) : p(n - 1);
    const Scalar up = f.upper(n), lo = f.lower(n);
    return detail::relative_residual<Scalar>(
        {-x_squared * p(n), up * p(n), lo * p(n), -f.mu * f.mu * p(n), -lo * prev, -up * p(n + 1)});
}

} // namespace trirep
