#include "trirep/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "trirep/tridiagonal.hpp"

namespace trirep {

namespace {

struct Recurrence {
    // Monic: p_{k+1} = (x - alpha_k) p_k - beta_k p_{k-1}.
    std::vector<double> alpha;
    std::vector<double> beta;  // beta[0] unused
};

Recurrence recurrence_for(const WeightFamily& weight, int n) {
    Recurrence r;
    r.alpha.resize(n);
    r.beta.assign(n, 0.0);
    if (const auto* lag = std::get_if<Laguerre<double>>(&weight)) {
        lag->validate();
        for (int k = 0; k < n; ++k) {
            r.alpha[k] = 2 * k + lag->nu + 1;
            if (k > 0)
                r.beta[k] = k * (k + lag->nu);
        }
    } else {
        const auto& jac = std::get<Jacobi<double>>(weight);
        jac.validate();
        // x P_n = (2c_n - 1) P_n + 2 d_n P_{n-1} + 2 e_n P_{n+1}
        for (int k = 0; k < n; ++k) {
            const auto c = detail::jacobi_coefficients(jac, k);
            r.alpha[k] = 2 * c.c_plus - 1;
            if (k > 0)
                r.beta[k] = 4 * detail::jacobi_coefficients(jac, k - 1).e * c.d;
        }
    }
    return r;
}

std::string weight_name(const WeightFamily& weight) {
    std::ostringstream os;
    os.precision(17);
    if (const auto* lag = std::get_if<Laguerre<double>>(&weight))
        os << "laguerre(" << lag->nu << ")";
    else {
        const auto& jac = std::get<Jacobi<double>>(weight);
        os << "jacobi(" << jac.mu << "," << jac.nu << ")";
    }
    return os.str();
}

// Orthonormal values q_0..q_{n-1} at x (q_0 = 1): returns sum q_k^2 together
// with a multiple of p_n and its derivative.
struct OrthonormalEval {
    double sum_squares;
    double last;
    double last_derivative;
};

OrthonormalEval orthonormal_eval(const Recurrence& r, int n, double x) {
    double q_prev = 0, q = 1, dq_prev = 0, dq = 0, sum = 1;
    for (int k = 0; k < n; ++k) {
        const double next_b = k + 1 < n ? std::sqrt(r.beta[k + 1]) : 0.0;
        const double b = k > 0 ? std::sqrt(r.beta[k]) : 0.0;
        double q_next, dq_next;
        if (k + 1 < n) {
            q_next = ((x - r.alpha[k]) * q - b * q_prev) / next_b;
            dq_next = ((x - r.alpha[k]) * dq + q - b * dq_prev) / next_b;
        } else {
            // Monic-scaled last step; only its zero and slope direction matter.
            q_next = (x - r.alpha[k]) * q - b * q_prev;
            dq_next = (x - r.alpha[k]) * dq + q - b * dq_prev;
        }
        q_prev = q;
        dq_prev = dq;
        q = q_next;
        dq = dq_next;
        if (k + 1 < n)
            sum += q * q;
    }
    return {sum, q, dq};
}

}  // namespace

double zeroth_moment(const WeightFamily& weight) {
    if (const auto* lag = std::get_if<Laguerre<double>>(&weight)) {
        lag->validate();
        return std::tgamma(lag->nu + 1);
    }
    const auto& jac = std::get<Jacobi<double>>(weight);
    jac.validate();
    return std::exp((jac.mu + jac.nu + 1) * std::log(2.0) + std::lgamma(jac.mu + 1) + std::lgamma(jac.nu + 1) -
                    std::lgamma(jac.mu + jac.nu + 2));
}

QuadratureRule gauss_rule(const WeightFamily& weight, int n_nodes) {
    if (n_nodes < 1)
        throw DomainError("gauss_rule: node count must be at least 1");
    const Recurrence r = recurrence_for(weight, n_nodes);
    SymmetricTridiagonal<double> t;
    t.diag.resize(n_nodes);
    t.off.resize(n_nodes - 1);
    for (int k = 0; k < n_nodes; ++k)
        t.diag(k) = r.alpha[k];
    for (int k = 1; k < n_nodes; ++k)
        t.off(k - 1) = std::sqrt(r.beta[k]);

    const Eigen::VectorXd raw = tridiagonal_eigenvalues(t);
    const double mu0 = zeroth_moment(weight);
    QuadratureRule rule;
    rule.nodes.resize(n_nodes);
    rule.weights.resize(n_nodes);
    for (int i = 0; i < n_nodes; ++i) {
        double x = raw(i);
        // Newton polish on the characteristic polynomial, kept inside the
        // gap to the neighbouring nodes.
        const double left = i > 0 ? (raw(i - 1) + raw(i)) / 2 : -std::numeric_limits<double>::infinity();
        const double right = i + 1 < n_nodes ? (raw(i) + raw(i + 1)) / 2 : std::numeric_limits<double>::infinity();
        for (int it = 0; it < 3; ++it) {
            const auto e = orthonormal_eval(r, n_nodes, x);
            if (e.last_derivative == 0)
                break;
            const double step = e.last / e.last_derivative;
            const double trial = x - step;
            if (!(trial > left && trial < right) || !std::isfinite(trial))
                break;
            x = trial;
            if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x)))
                break;
        }
        const auto e = orthonormal_eval(r, n_nodes, x);
        rule.nodes(i) = x;
        // An overflowing sum means the weight is below the double range.
        rule.weights(i) = std::isfinite(e.sum_squares) ? mu0 / e.sum_squares : 0.0;
        if (!(rule.weights(i) >= 0) || !std::isfinite(rule.weights(i)))
            throw Error("gauss_rule: weight computation failed");
    }
    rule.exactness_degree = 2 * n_nodes - 1;
    rule.weight_id = weight_name(weight);
    return rule;
}

double apply_rule(const QuadratureRule& rule, const std::function<double(double)>& f) {
    CompensatedSum<double> sum;
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i)
        sum.add(rule.weights(i) * f(rule.nodes(i)));
    return sum.value();
}

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
constexpr double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                           0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                           0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                           0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                           0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                           0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                           0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment kronrod(const std::function<double(double)>& f, double a, double b) {
    const double c = (a + b) / 2, h = (b - a) / 2;
    const double fc = f(c);
    double kron = wgk[7] * fc, gauss = wg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        const double sum = f(c - dx) + f(c + dx);
        kron += wgk[j] * sum;
        if (j % 2 == 1)
            gauss += wg[j / 2] * sum;
    }
    return {a, b, kron * h, std::abs((kron - gauss) * h)};
}

}  // namespace

IntegralEstimate integrate_adaptive(const std::function<double(double)>& f, Interval support,
                                    const AdaptiveOptions& options) {
    if (!(support.lo < support.hi))
        throw DomainError("integrate_adaptive: empty interval");
    std::function<double(double)> g;
    double a = support.lo, b = support.hi;
    const bool lo_inf = std::isinf(support.lo), hi_inf = std::isinf(support.hi);
    if (lo_inf && hi_inf) {
        g = [&f](double t) {
            const double d = 1 - t * t;
            if (d <= 0)
                return 0.0;
            return f(t / d) * (1 + t * t) / (d * d);
        };
        a = -1;
        b = 1;
    } else if (hi_inf) {
        const double lo = support.lo;
        g = [&f, lo](double t) {
            if (t >= 1)
                return 0.0;
            return f(lo + t / (1 - t)) / ((1 - t) * (1 - t));
        };
        a = 0;
        b = 1;
    } else if (lo_inf) {
        const double hi = support.hi;
        g = [&f, hi](double t) {
            if (t >= 1)
                return 0.0;
            return f(hi - t / (1 - t)) / ((1 - t) * (1 - t));
        };
        a = 0;
        b = 1;
    } else {
        g = f;
    }

    std::priority_queue<Segment> heap;
    Segment first = kronrod(g, a, b);
    heap.push(first);
    double total = first.value, total_error = first.error, previous = first.value;
    int segments = 1;
    while (total_error > std::max(options.abs_tol, options.rel_tol * std::abs(total))) {
        if (segments >= options.max_subdivisions)
            throw AccuracyError("integrate_adaptive: subdivision limit reached", total, previous);
        Segment worst = heap.top();
        heap.pop();
        const double mid = (worst.a + worst.b) / 2;
        if (!(mid > worst.a && mid < worst.b))
            throw AccuracyError("integrate_adaptive: interval underflow", total, previous);
        const Segment left = kronrod(g, worst.a, mid);
        const Segment right = kronrod(g, mid, worst.b);
        previous = total;
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++segments;
    }
    // Re-sum to shed drift from the incremental updates.
    CompensatedSum<double> value, error;
    while (!heap.empty()) {
        value.add(heap.top().value);
        error.add(heap.top().error);
        heap.pop();
    }
    if (!std::isfinite(value.value()))
        throw AccuracyError("integrate_adaptive: non-finite integrand", total, previous);
    return {value.value(), error.value()};
}

IntegralEstimate overlap_integral(const std::function<double(double)>& f, const std::function<double(double)>& g,
                                  const std::function<double(double)>& measure, Interval support,
                                  const IntegrationMethod& method) {
    auto integrand = [&](double y) { return f(y) * g(y) * measure(y); };
    if (const auto* spec = std::get_if<GaussSpec>(&method)) {
        const double coarse = apply_rule(gauss_rule(spec->weight, spec->nodes), integrand);
        const QuadratureRule fine_rule = gauss_rule(spec->weight, 2 * spec->nodes);
        const double fine = apply_rule(fine_rule, integrand);
        const double magnitude = apply_rule(fine_rule, [&](double y) { return std::abs(integrand(y)); });
        const double error = std::abs(fine - coarse);
        if (error > spec->tolerance * magnitude)
            throw AccuracyError("overlap_integral: rule doubling did not agree", fine, coarse);
        return {fine, error};
    }
    return integrate_adaptive(integrand, support, std::get<AdaptiveOptions>(method));
}

}  // namespace trirep
