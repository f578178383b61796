#include "trirep/recursion.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace trirep {

RecursionCoefficients build_oscillator_case1(double nu, double a) {
    if (!(nu >= -0.5))
        throw DomainError("oscillator case 1: nu must be >= -1/2 so that alpha >= 0");
    if (!std::isfinite(a))
        throw DomainError("oscillator case 1: a must be finite");
    RecursionCoefficients rc;
    rc.A = [=](int n, double eps) { return (a + 1) * (2 * n + nu + 1) - eps; };
    rc.B = [=](int n, double) { return -(a - 1) * (n + nu); };
    rc.C = [=](int n, double) { return -(a - 1) * (n + 1); };
    rc.scaling = CoefficientScaling::gamma_ratio;
    rc.basis = BasisSpec::laguerre((nu + 0.5) / 2, nu);
    rc.diagonal_limit = a == 1;
    rc.label = "oscillator case 1";
    return rc;
}

RecursionCoefficients build_oscillator_case2(double nu, double b) {
    if (!(nu > -1))
        throw DomainError("oscillator case 2: nu must exceed -1");
    if (!std::isfinite(b))
        throw DomainError("oscillator case 2: b must be finite");
    RecursionCoefficients rc;
    rc.A = [=](int n, double eps) {
        const double h = (nu + 1) / 2;
        return (n + nu + 1) * (n + nu / 2 + 1 - eps / 4) + n * (n + nu / 2 - eps / 4) - h * h + b / 4 + 1.0 / 16;
    };
    rc.B = [=](int n, double eps) { return -n * (n + nu / 2 - eps / 4); };
    rc.C = [=](int n, double eps) { return -(n + nu + 1) * (n + nu / 2 + 1 - eps / 4); };
    rc.scaling = CoefficientScaling::inverse_gamma_ratio;
    rc.basis = BasisSpec::laguerre((nu + 1.5) / 2, nu);
    rc.symmetric_factor = 4;
    rc.label = "oscillator case 2";
    return rc;
}

RecursionCoefficients build_morse(double a, double b, double nu) {
    if (!(nu > -1))
        throw DomainError("Morse: nu must exceed -1");
    if (!std::isfinite(a) || !std::isfinite(b))
        throw DomainError("Morse: a and b must be finite");
    RecursionCoefficients rc;
    rc.A = [=](int n, double) { return -2 * ((b + 0.25) * (n + (nu + 1) / 2) + a / 2); };
    rc.B = [=](int n, double) { return (b - 0.25) * (n + nu); };
    rc.C = [=](int n, double) { return (b - 0.25) * (n + 1); };
    rc.scaling = CoefficientScaling::gamma_ratio;
    rc.basis = BasisSpec::laguerre(nu / 2, nu);
    rc.fixed_epsilon = -nu * nu / 4;
    rc.epsilon_constraint = "eps = -nu^2/4";
    rc.symmetric_factor = -1;
    rc.diagonal_limit = b == 0.25;
    rc.label = "Morse";
    return rc;
}

namespace {

void check_denominator(double value) {
    if (value == 0)
        throw SingularError("Rosen-Morse: 2n + mu + nu shift vanishes in a denominator");
}

}  // namespace

RecursionCoefficients build_rosen_morse(double A, double B, double mu, double nu) {
    if (!(mu > -1) || !(nu > -1))
        throw DomainError("Rosen-Morse: mu and nu must exceed -1");
    if (!std::isfinite(A) || !std::isfinite(B))
        throw DomainError("Rosen-Morse: A and B must be finite");
    auto bracket = [=](double t) { return B - 0.25 + 0.25 * t * t; };
    RecursionCoefficients rc;
    rc.A = [=](int n, double) {
        const double t = 2 * n + mu + nu;
        double value = 0.5 * (nu + mu + 1) * (nu - mu + 1) - A;
        double ratio;  // (mu^2 - nu^2) / (t (t + 2))
        check_denominator(t + 2);
        if (n == 0) {
            ratio = (mu - nu) / (t + 2);
        } else {
            check_denominator(t);
            value += 2 * n * (n + mu) / t;
            ratio = (mu - nu) * (mu + nu) / (t * (t + 2));
        }
        return value + (ratio - 1) * bracket(t + 2);
    };
    rc.B = [=](int n, double) {
        if (n == 0)
            return 0.0;
        const double t = 2 * n + mu + nu;
        check_denominator(t);
        check_denominator(t + 1);
        return 2 * (n + mu) * (n + nu) / (t * (t + 1)) * bracket(t);
    };
    rc.C = [=](int n, double) {
        const double t = 2 * n + mu + nu;
        check_denominator(t + 2);
        if (n == 0)
            return 2 / (t + 2) * bracket(t + 2);
        check_denominator(t + 1);
        return 2 * (n + 1) * (n + mu + nu + 1) / ((t + 1) * (t + 2)) * bracket(t + 2);
    };
    rc.scaling = CoefficientScaling::alternating_norm;
    rc.basis = BasisSpec::jacobi((nu + 1) / 2, mu / 2, mu, nu);
    rc.fixed_epsilon = -mu * mu;
    rc.epsilon_constraint = "eps = -mu^2";
    rc.symmetric_factor = -1;
    rc.label = "Rosen-Morse";
    return rc;
}

double coefficient_scale(const RecursionCoefficients& rc, int n) {
    const BasisSpec& s = rc.basis;
    switch (rc.scaling) {
    case CoefficientScaling::gamma_ratio:
        return std::exp(0.5 * (std::lgamma(n + 1.0) - std::log(s.lambda) - std::lgamma(n + s.nu + 1)));
    case CoefficientScaling::inverse_gamma_ratio:
        return std::exp(0.5 * (std::lgamma(n + s.nu + 1) - std::log(s.lambda) - std::lgamma(n + 1.0)));
    case CoefficientScaling::alternating_norm: {
        const double t = s.mu + s.nu;
        const double lead = n == 0 ? std::lgamma(t + 2) : std::log(2 * n + t + 1) + std::lgamma(n + t + 1);
        const double log_a = 0.5 * (std::log(s.lambda) + lead + std::lgamma(n + 1.0) - (t + 1) * std::log(2.0) -
                                    std::lgamma(n + s.nu + 1) - std::lgamma(n + s.mu + 1));
        return (n % 2 == 0 ? 1.0 : -1.0) * std::exp(log_a);
    }
    }
    return 1;
}

EnergyDependentTridiagonal symmetric_form(const RecursionCoefficients& rc) {
    EnergyDependentTridiagonal t;
    const double k = rc.symmetric_factor;
    t.diag = [rc, k](int n, double eps) { return k * rc.A(n, eps); };
    t.offdiag = [rc, k](int n, double eps) {
        return k * rc.C(n, eps) * coefficient_scale(rc, n) / coefficient_scale(rc, n + 1);
    };
    t.representation = Representation::symmetric_f;
    t.fixed_epsilon = rc.fixed_epsilon;
    t.epsilon_constraint = rc.epsilon_constraint;
    return t;
}

Eigen::MatrixXd analytic_jmatrix(const RecursionCoefficients& rc, double epsilon, int size) {
    if (size < 1)
        throw DomainError("analytic_jmatrix: size must be positive");
    const auto t = symmetric_form(rc);
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(size, size);
    for (int n = 0; n < size; ++n) {
        j(n, n) = t.diag(n, epsilon);
        if (n + 1 < size)
            j(n, n + 1) = j(n + 1, n) = t.offdiag(n, epsilon);
    }
    return j;
}

CoefficientSeries solve_recursion(const RecursionCoefficients& rc, double epsilon, int truncation) {
    if (truncation < 1)
        throw DomainError("solve_recursion: truncation must be positive");
    if (rc.fixed_epsilon) {
        const double fixed = *rc.fixed_epsilon;
        if (std::abs(epsilon - fixed) > 1e-10 * std::max(1.0, std::abs(fixed)))
            throw DomainError("solve_recursion: this recursion is tied to " + rc.epsilon_constraint);
    }
    CoefficientSeries out;
    out.truncation = truncation;
    out.d = Eigen::VectorXd::Zero(truncation);

    if (rc.diagonal_limit) {
        const double tol = 1e-10 * std::max(1.0, std::abs(epsilon));
        for (int n = 0; n < truncation; ++n) {
            if (std::abs(rc.A(n, epsilon)) <= tol) {
                out.d(n) = 1;
                out.terminated_at = n;
                break;
            }
        }
        if (!out.terminated_at)
            throw RecursionBreakdown(0, "solve_recursion: eps is not a level of the diagonal representation");
    } else {
        out.d(0) = 1;
        // Coefficients can cancel to zero at a level, so tolerances are set by
        // eps and the largest coefficient seen so far.
        double size = 1 + std::abs(epsilon);
        double largest_d = 1;
        for (int n = 0; n + 1 < truncation; ++n) {
            const double a = rc.A(n, epsilon);
            const double b = n > 0 ? rc.B(n, epsilon) : 0.0;
            const double c = rc.C(n, epsilon);
            const double prev = n > 0 ? out.d(n - 1) : 0.0;
            const double row = a * out.d(n) + b * prev;
            size = std::max(size, std::abs(a) + std::abs(b) + std::abs(c));
            largest_d = std::max(largest_d, std::abs(out.d(n)));
            if (std::abs(c) <= 1e-13 * size) {
                if (std::abs(row) <= 1e-9 * size * largest_d) {
                    out.terminated_at = n;
                    break;
                }
                throw RecursionBreakdown(n, "solve_recursion: C_n vanishes");
            }
            out.d(n + 1) = -row / c;
        }
    }

    out.f.resize(truncation);
    for (int n = 0; n < truncation; ++n)
        out.f(n) = out.d(n) == 0 ? 0.0 : coefficient_scale(rc, n) * out.d(n);
    const double largest = out.f.cwiseAbs().maxCoeff();
    out.tail_estimate = largest == 0 ? 0.0 : std::abs(out.f(truncation - 1)) / largest;
    return out;
}

namespace {

bool verify_level_d(const LevelCandidate& c, int n) {
    try {
        const auto series = solve_recursion(c.rc, c.epsilon, n + 2);
        if (!series.terminated_at || *series.terminated_at != n)
            return false;
        return series.d(n) != 0;
    } catch (const RecursionBreakdown&) {
        return false;
    }
}

bool verify_level_f(const LevelCandidate& c, int n) {
    const auto t = symmetric_form(c.rc);
    const Eigen::MatrixXd block = analytic_jmatrix(c.rc, c.epsilon, n + 1);
    const double scale = std::max(1.0, block.cwiseAbs().maxCoeff());
    if (std::abs(t.offdiag(n, c.epsilon)) > 1e-9 * scale)
        return false;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().minCoeff() <= 1e-9 * scale;
}

}  // namespace

std::vector<DiagonalLevel> diagonalization_scan(const ParamSolver& solver, int n_limit, Representation representation) {
    std::vector<DiagonalLevel> levels;
    for (int n = 0; n < n_limit; ++n) {
        const auto candidate = solver(n);
        if (!candidate)
            continue;
        const bool ok = representation == Representation::nonsymmetric_d ? verify_level_d(*candidate, n)
                                                                         : verify_level_f(*candidate, n);
        if (ok)
            levels.push_back({n, candidate->parameters, candidate->epsilon});
    }
    return levels;
}

Eigen::VectorXd truncated_eigenvalues(const RecursionCoefficients& rc, int truncation, EpsilonEmbedding) {
    if (truncation < 1)
        throw DomainError("truncated_eigenvalues: truncation must be positive");
    if (rc.fixed_epsilon)
        throw UnsupportedError("truncated_eigenvalues: eps is fixed by the basis, not a matrix eigenvalue");
    for (double probe : {1.7, -2.3}) {
        for (int n = 0; n < truncation; ++n) {
            const double da = rc.A(n, probe) - rc.A(n, 0) + probe;
            const bool same_b = rc.B(n, probe) == rc.B(n, 0);
            const bool same_c = rc.C(n, probe) == rc.C(n, 0);
            if (std::abs(da) > 1e-12 * (1 + std::abs(rc.A(n, 0))) || !same_b || !same_c)
                throw UnsupportedError("truncated_eigenvalues: eps does not enter linearly on the diagonal only");
        }
    }
    Eigen::VectorXd diag(truncation), sub(std::max(truncation - 1, 0));
    for (int n = 0; n < truncation; ++n)
        diag(n) = rc.A(n, 0);
    for (int n = 0; n + 1 < truncation; ++n)
        sub(n) = rc.C(n, 0) * coefficient_scale(rc, n) / coefficient_scale(rc, n + 1);
    if (truncation == 1)
        return diag;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw Error("truncated_eigenvalues: eigensolver failed");
    return solver.eigenvalues();
}

namespace {

// Polynomial values and first two derivatives for k = 0..size-1 at y.
void polynomial_table(const BasisSpec& spec, int size, double y, Eigen::VectorXd& p, Eigen::VectorXd& dp,
                      Eigen::VectorXd& d2p) {
    p.resize(size);
    dp.resize(size);
    d2p.resize(size);
    if (spec.kind == BasisKind::laguerre) {
        const auto seq = laguerre_sequence(Laguerre<double>{spec.nu}, size - 1, y);
        for (int k = 0; k < size; ++k) {
            p(k) = seq(k);
            dp(k) = k == 0 ? 0.0 : (k * seq(k) - (k + spec.nu) * seq(k - 1)) / y;
            d2p(k) = (-(spec.nu + 1 - y) * dp(k) - k * seq(k)) / y;
        }
        return;
    }
    const auto seq = jacobi_sequence(Jacobi<double>{spec.mu, spec.nu}, size - 1, y);
    const double w = (1 - y) * (1 + y);
    const double mu = spec.mu, nu = spec.nu;
    for (int k = 0; k < size; ++k) {
        p(k) = seq(k);
        if (k == 0) {
            dp(k) = 0;
        } else {
            const double t = 2 * k + mu + nu;
            dp(k) = (-k * (y + (nu - mu) / t) * seq(k) + 2 * (k + mu) * (k + nu) / t * seq(k - 1)) / w;
        }
        d2p(k) = (((mu + nu + 2) * y + mu - nu) * dp(k) - k * (k + mu + nu + 1) * seq(k)) / w;
    }
}

struct BlockResult {
    Eigen::MatrixXd value;
    Eigen::MatrixXd magnitude;
};

BlockResult jmatrix_with_rule(const PotentialModel& model, const BasisSpec& spec, const CoordinateMap& map,
                              const MeasureRule& mrule, double epsilon, int size, int nodes) {
    const QuadratureRule rule = gauss_rule(mrule.weight, nodes);
    Eigen::VectorXd norms(size);
    for (int k = 0; k < size; ++k)
        norms(k) = basis_norm(spec, k);
    Eigen::MatrixXd left(nodes, size), right(nodes, size), right_scale(nodes, size);
    Eigen::VectorXd p, dp, d2p;
    for (int i = 0; i < nodes; ++i) {
        const double y = rule.nodes(i);
        polynomial_table(spec, size, y, p, dp, d2p);
        double r1, r2;
        if (spec.kind == BasisKind::laguerre) {
            r1 = spec.alpha / y - 0.5;
            r2 = r1 * r1 - spec.alpha / (y * y);
        } else {
            r1 = spec.alpha / (1 + y) - spec.beta / (1 - y);
            r2 = r1 * r1 - spec.alpha / ((1 + y) * (1 + y)) - spec.beta / ((1 - y) * (1 - y));
        }
        const double yp2 = map.y_prime_squared(y), ypp = map.y_second(y);
        const double shift = potential_in_y(model, y) - epsilon;
        const double w = rule.weights(i) * mrule.residual(y);
        for (int k = 0; k < size; ++k) {
            const double op = -yp2 * (d2p(k) + 2 * r1 * dp(k) + r2 * p(k)) - ypp * (dp(k) + r1 * p(k)) + shift * p(k);
            // Sum of the term sizes: op itself cancels to roundoff on an exact eigenfunction.
            const double scale = yp2 * (std::abs(d2p(k)) + 2 * std::abs(r1 * dp(k)) + std::abs(r2 * p(k))) +
                                 std::abs(ypp) * (std::abs(dp(k)) + std::abs(r1 * p(k))) +
                                 (std::abs(potential_in_y(model, y)) + std::abs(epsilon)) * std::abs(p(k));
            left(i, k) = w * norms(k) * p(k);
            right(i, k) = norms(k) * op;
            right_scale(i, k) = norms(k) * scale;
        }
    }
    return {left.transpose() * right, left.cwiseAbs().transpose() * right_scale};
}

}  // namespace

Eigen::MatrixXd numeric_jmatrix_block(const PotentialModel& model, const BasisSpec& spec, const CoordinateMap& map,
                                      double epsilon, int size, int nodes) {
    validate(model);
    spec.validate();
    map.validate();
    if (size < 1 || nodes < 1)
        throw DomainError("numeric_jmatrix: size and node count must be positive");
    if (map.kind != model_map(model).kind)
        throw DomainError("numeric_jmatrix: coordinate map does not belong to the model");
    const MeasureRule mrule = measure_rule(spec, map, true);
    const auto coarse = jmatrix_with_rule(model, spec, map, mrule, epsilon, size, nodes);
    const auto fine = jmatrix_with_rule(model, spec, map, mrule, epsilon, size, 2 * nodes);
    for (int m = 0; m < size; ++m) {
        for (int n = 0; n < size; ++n) {
            const double diff = std::abs(fine.value(m, n) - coarse.value(m, n));
            if (!std::isfinite(fine.value(m, n)) || diff > 1e-9 * fine.magnitude(m, n))
                throw AccuracyError("numeric_jmatrix: rule doubling did not agree at (" + std::to_string(m) + ", " +
                                        std::to_string(n) + "), magnitude " + std::to_string(fine.magnitude(m, n)),
                                    fine.value(m, n),
                                    coarse.value(m, n));
        }
    }
    return fine.value;
}

double numeric_jmatrix(const PotentialModel& model, const BasisSpec& spec, const CoordinateMap& map, double epsilon,
                       int m, int n, int nodes) {
    if (m < 0 || n < 0)
        throw DomainError("numeric_jmatrix: indices must be non-negative");
    return numeric_jmatrix_block(model, spec, map, epsilon, std::max(m, n) + 1, nodes)(m, n);
}

double off_band_ratio(const Eigen::MatrixXd& j) {
    const double largest = j.cwiseAbs().maxCoeff();
    if (largest == 0)
        return 0;
    double off = 0;
    for (Eigen::Index m = 0; m < j.rows(); ++m)
        for (Eigen::Index n = 0; n < j.cols(); ++n)
            if (std::abs(m - n) >= 2)
                off = std::max(off, std::abs(j(m, n)));
    return off / largest;
}

}  // namespace trirep
