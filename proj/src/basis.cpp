#include "trirep/basis.hpp"

#include <cmath>
#include <limits>

namespace trirep {

BasisSpec BasisSpec::laguerre(double alpha, double nu, double lambda) {
    BasisSpec s;
    s.kind = BasisKind::laguerre;
    s.alpha = alpha;
    s.nu = nu;
    s.lambda = lambda;
    return s;
}

BasisSpec BasisSpec::jacobi(double alpha, double beta, double mu, double nu, double lambda) {
    BasisSpec s;
    s.kind = BasisKind::jacobi;
    s.alpha = alpha;
    s.beta = beta;
    s.mu = mu;
    s.nu = nu;
    s.lambda = lambda;
    return s;
}

void BasisSpec::validate() const {
    if (!(lambda > 0))
        throw DomainError("basis: lambda must be positive");
    if (!(nu > -1))
        throw DomainError("basis: nu must exceed -1");
    if (!(alpha >= 0))
        throw DomainError("basis: alpha must be non-negative");
    if (kind == BasisKind::jacobi) {
        if (!(mu > -1))
            throw DomainError("basis: mu must exceed -1");
        if (!(beta >= 0))
            throw DomainError("basis: beta must be non-negative");
    }
}

CoordinateMap CoordinateMap::oscillator(double lambda) { return {MapKind::oscillator, lambda, 1}; }
CoordinateMap CoordinateMap::morse(double mu_scale, double lambda) { return {MapKind::morse, lambda, mu_scale}; }
CoordinateMap CoordinateMap::rosen_morse(double lambda) { return {MapKind::rosen_morse, lambda, 1}; }

void CoordinateMap::validate() const {
    if (!(lambda > 0))
        throw DomainError("coordinate map: lambda must be positive");
    if (kind == MapKind::morse && !(mu_scale > 0))
        throw DomainError("coordinate map: mu_scale must be positive");
}

double CoordinateMap::to_y(double x) const {
    switch (kind) {
    case MapKind::oscillator:
        return (lambda * x) * (lambda * x);
    case MapKind::morse:
        return mu_scale * std::exp(-lambda * x);
    case MapKind::rosen_morse:
        return std::tanh(lambda * x);
    }
    return 0;
}

double CoordinateMap::to_x(double y) const {
    switch (kind) {
    case MapKind::oscillator:
        return std::sqrt(y) / lambda;
    case MapKind::morse:
        return -std::log(y / mu_scale) / lambda;
    case MapKind::rosen_morse:
        return std::atanh(y) / lambda;
    }
    return 0;
}

double CoordinateMap::y_prime_squared(double y) const {
    switch (kind) {
    case MapKind::oscillator:
        return 4 * y;
    case MapKind::morse:
        return y * y;
    case MapKind::rosen_morse:
        return (1 - y * y) * (1 - y * y);
    }
    return 0;
}

double CoordinateMap::y_second(double y) const {
    switch (kind) {
    case MapKind::oscillator:
        return 2;
    case MapKind::morse:
        return y;
    case MapKind::rosen_morse:
        return -2 * y * (1 - y * y);
    }
    return 0;
}

Interval CoordinateMap::image() const {
    if (kind == MapKind::rosen_morse)
        return {-1, 1};
    return {0, std::numeric_limits<double>::infinity()};
}

double basis_log_norm(const BasisSpec& spec, int n) {
    spec.validate();
    if (n < 0)
        throw DomainError("basis: index must be non-negative");
    double log_sq;
    if (spec.kind == BasisKind::laguerre) {
        log_sq = std::log(spec.lambda) + std::lgamma(n + 1.0) - std::lgamma(n + spec.nu + 1);
    } else {
        const double s = spec.mu + spec.nu;
        // (2n+s+1) Gamma(n+s+1) collapses to Gamma(s+2) at n = 0.
        const double lead = n == 0 ? std::lgamma(s + 2) : std::log(2 * n + s + 1) + std::lgamma(n + s + 1);
        log_sq = std::log(spec.lambda) + lead + std::lgamma(n + 1.0) - (s + 1) * std::log(2.0) -
                 std::lgamma(n + spec.nu + 1) - std::lgamma(n + spec.mu + 1);
    }
    if (!std::isfinite(log_sq) || std::abs(log_sq) > 2 * 700)
        throw OverflowError("basis: normalization constant overflows");
    return log_sq / 2;
}

double basis_norm(const BasisSpec& spec, int n) { return std::exp(basis_log_norm(spec, n)); }

namespace {

void check_support(const BasisSpec& spec, double y) {
    if (spec.kind == BasisKind::laguerre) {
        if (!(y >= 0))
            throw DomainError("basis: y must be non-negative for the Laguerre basis");
    } else if (!(y >= -1 && y <= 1)) {
        throw DomainError("basis: y must lie in [-1, 1] for the Jacobi basis");
    }
}

double power_factor(double base, double exponent) {
    if (base == 0)
        return exponent == 0 ? 1.0 : 0.0;
    return std::pow(base, exponent);
}

}  // namespace

double basis_envelope(const BasisSpec& spec, double y) {
    check_support(spec, y);
    if (spec.kind == BasisKind::laguerre) {
        if (std::isinf(y))
            return 0;
        return power_factor(y, spec.alpha) * std::exp(-y / 2);
    }
    return power_factor(1 + y, spec.alpha) * power_factor(1 - y, spec.beta);
}

Derivatives<double> basis_polynomial(const BasisSpec& spec, int n, double y) {
    if (spec.kind == BasisKind::laguerre) {
        const Laguerre<double> f{spec.nu};
        if (y > 0)
            return laguerre_derivatives(f, n, y);
        return {laguerre_eval(f, n, y), 0, 0};
    }
    const Jacobi<double> f{spec.mu, spec.nu};
    if (y > -1 && y < 1)
        return jacobi_derivatives(f, n, y);
    return {jacobi_eval(f, n, y), 0, 0};
}

double basis_eval(const BasisSpec& spec, int n, double y) {
    const double log_a = basis_log_norm(spec, n);
    check_support(spec, y);
    if (spec.kind == BasisKind::laguerre && std::isinf(y))
        return 0;
    const double envelope = basis_envelope(spec, y);
    if (envelope == 0)
        return 0;
    const double p = spec.kind == BasisKind::laguerre ? laguerre_eval(Laguerre<double>{spec.nu}, n, y)
                                                      : jacobi_eval(Jacobi<double>{spec.mu, spec.nu}, n, y);
    return std::exp(log_a) * envelope * p;
}

Derivatives<double> basis_derivatives(const BasisSpec& spec, int n, double y) {
    const double a = basis_norm(spec, n);
    double r1, r2;  // u'/u and u''/u for the envelope u
    if (spec.kind == BasisKind::laguerre) {
        if (!(y > 0) || std::isinf(y))
            throw DomainError("basis_derivatives: y must be positive and finite");
        r1 = spec.alpha / y - 0.5;
        r2 = r1 * r1 - spec.alpha / (y * y);
    } else {
        if (!(y > -1 && y < 1))
            throw DomainError("basis_derivatives: y must lie in (-1, 1)");
        r1 = spec.alpha / (1 + y) - spec.beta / (1 - y);
        r2 = r1 * r1 - spec.alpha / ((1 + y) * (1 + y)) - spec.beta / ((1 - y) * (1 - y));
    }
    const auto p = basis_polynomial(spec, n, y);
    const double u = basis_envelope(spec, y);
    return {a * u * p.value, a * u * (p.first + r1 * p.value), a * u * (p.second + 2 * r1 * p.first + r2 * p.value)};
}

double measure_factor(const CoordinateMap& map, double y) {
    map.validate();
    switch (map.kind) {
    case MapKind::oscillator:
        if (!(y >= 0))
            throw DomainError("measure_factor: y outside [0, inf)");
        if (y == 0 || std::isinf(y))
            throw SingularError("measure_factor: singular at the boundary of the mapped interval");
        return 1 / (map.lambda * std::sqrt(y));
    case MapKind::morse:
        if (!(y >= 0))
            throw DomainError("measure_factor: y outside [0, inf)");
        if (y == 0 || std::isinf(y))
            throw SingularError("measure_factor: singular at the boundary of the mapped interval");
        return 1 / (map.lambda * y);
    case MapKind::rosen_morse:
        if (!(y >= -1 && y <= 1))
            throw DomainError("measure_factor: y outside [-1, 1]");
        if (y == -1 || y == 1)
            throw SingularError("measure_factor: singular at the boundary of the mapped interval");
        return 1 / (map.lambda * (1 - y * y));
    }
    return 0;
}

MeasureRule measure_rule(const BasisSpec& spec, const CoordinateMap& map, bool absorb_inverse) {
    spec.validate();
    map.validate();
    const double inv_lambda = 1 / map.lambda;
    if (spec.kind == BasisKind::laguerre) {
        if (map.kind == MapKind::rosen_morse)
            throw DomainError("measure_rule: the Laguerre basis needs a semi-infinite map");
        const double s = 2 * spec.alpha - (map.kind == MapKind::oscillator ? 0.5 : 1.0);
        if (absorb_inverse && s - 1 > -1)
            return {Laguerre<double>{s - 1}, [inv_lambda](double y) { return y * inv_lambda; }};
        if (!(s > -1))
            throw DomainError("measure_rule: basis is not square-integrable under this measure");
        return {Laguerre<double>{s}, [inv_lambda](double) { return inv_lambda; }};
    }
    if (map.kind != MapKind::rosen_morse)
        throw DomainError("measure_rule: the Jacobi basis needs the finite-interval map");
    // (1-y)^{2 beta - 1} (1+y)^{2 alpha - 1}
    double p = 2 * spec.beta - 1, q = 2 * spec.alpha - 1;
    if (!(p > -1) || !(q > -1))
        throw DomainError("measure_rule: basis is not square-integrable under this measure");
    const bool lower_p = absorb_inverse && p - 1 > -1;
    const bool lower_q = absorb_inverse && q - 1 > -1;
    if (lower_p)
        p -= 1;
    if (lower_q)
        q -= 1;
    return {Jacobi<double>{p, q}, [=](double y) {
                double r = inv_lambda;
                if (lower_p)
                    r *= 1 - y;
                if (lower_q)
                    r *= 1 + y;
                return r;
            }};
}

MatrixElement matrix_element(const BasisSpec& spec, const CoordinateMap& map, int m, int n,
                             const std::function<double(double)>& op, int op_degree, int nodes) {
    if (m < 0 || n < 0)
        throw DomainError("matrix_element: indices must be non-negative");
    const MeasureRule rule = measure_rule(spec, map, false);
    const double am = basis_norm(spec, m), an = basis_norm(spec, n);
    auto pm = [&](double y) { return am * basis_polynomial(spec, m, y).value; };
    auto pn = [&](double y) { return an * basis_polynomial(spec, n, y).value; };
    auto density = [&](double y) { return rule.residual(y) * (op ? op(y) : 1.0); };
    const auto estimate = overlap_integral(pm, pn, density, map.image(), GaussSpec{rule.weight, nodes});
    MatrixElement out;
    out.value = estimate.value;
    out.error = estimate.error;
    out.order_sufficient = m + n + op_degree <= 2 * nodes - 1;
    return out;
}

MatrixElement overlap(const BasisSpec& spec, const CoordinateMap& map, int m, int n, int nodes) {
    return matrix_element(spec, map, m, n, {}, 0, nodes);
}

Eigen::VectorXd coeff_transform(const Eigen::VectorXd& sequence, const BasisSpec& spec,
                                TransformDirection direction) {
    if (spec.kind != BasisKind::laguerre)
        throw DomainError("coeff_transform: needs a Laguerre basis");
    spec.validate();
    Eigen::VectorXd out(sequence.size());
    for (Eigen::Index n = 0; n < sequence.size(); ++n) {
        const double log_scale =
            0.5 * (std::lgamma(n + 1.0) - std::log(spec.lambda) - std::lgamma(n + spec.nu + 1));
        const double scale = std::exp(log_scale);
        out(n) = direction == TransformDirection::d_to_f ? sequence(n) * scale : sequence(n) / scale;
    }
    return out;
}

IntegralEstimate mapped_integral(const CoordinateMap& map, const std::function<double(double)>& h_of_x,
                                 const AdaptiveOptions& options) {
    map.validate();
    if (map.kind == MapKind::oscillator) {
        for (double x : {0.137, 0.61, 1.3, 2.9, 4.4}) {
            const double plus = h_of_x(x / map.lambda), minus = h_of_x(-x / map.lambda);
            if (std::abs(plus - minus) > 1e-12 * (std::abs(plus) + std::abs(minus)) + 1e-300)
                throw DomainError("mapped_integral: the folded oscillator measure needs an even integrand");
        }
    }
    auto integrand = [&](double y) {
        if (map.kind == MapKind::rosen_morse ? (y <= -1 || y >= 1) : (y <= 0))
            return 0.0;
        return h_of_x(map.to_x(y)) * measure_factor(map, y);
    };
    return integrate_adaptive(integrand, map.image(), options);
}

}  // namespace trirep
