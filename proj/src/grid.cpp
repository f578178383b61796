#include "trirep/grid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "trirep/tridiagonal.hpp"

namespace trirep {

namespace {

struct Discretization {
    Eigen::VectorXd x;
    SymmetricTridiagonal<double> t;
    double step;
};

Discretization discretize(const PotentialModel& model, double x_min, double x_max, double h) {
    validate(model);
    if (!(h > 0) || !(x_max > x_min) || !std::isfinite(x_min) || !std::isfinite(x_max))
        throw DomainError("grid_solve: need h > 0 and a finite interval x_min < x_max");
    const bool half = half_line(model);
    if (half && !(x_min > 0))
        throw DomainError("grid_solve: half-line models need a positive cutoff x_min");
    const auto cells = static_cast<Eigen::Index>(std::llround((x_max - x_min) / h));
    if (cells < 2)
        throw DomainError("grid_solve: fewer than two cells");
    const Eigen::Index interior = cells - 1;
    const double step = (x_max - x_min) / static_cast<double>(cells);
    Discretization d;
    d.step = step;
    d.x = Eigen::VectorXd::LinSpaced(cells + 1, x_min, x_max);
    auto& t = d.t;
    t.diag.resize(interior);
    t.off = Eigen::VectorXd::Constant(interior - 1, -1 / (step * step));
    double u_max = 0;
    for (Eigen::Index i = 0; i < interior; ++i) {
        const double u = potential_eval(model, d.x(i + 1));
        u_max = std::max(u_max, std::abs(u));
        t.diag(i) = 2 / (step * step) + u;
    }
    if (!(step * step * u_max < 0.1)) {
        std::ostringstream os;
        os << "grid_solve: h^2 max|U| = " << step * step * u_max << " is not below 0.1; reduce h or the domain";
        throw DomainError(os.str());
    }
    return d;
}

}  // namespace

GridSolution grid_solve(const PotentialModel& model, double x_min, double x_max, double h, int k,
                        const GridOptions& options) {
    const Discretization d = discretize(model, x_min, x_max, h);
    const bool half = half_line(model);
    const Eigen::Index interior = d.t.size();
    const auto cells = interior + 1;
    const double step = d.step;
    const auto& t = d.t;
    if (k < 1 || k > interior)
        throw DomainError("grid_solve: level count out of range");

    GridSolution out;
    out.x_min = x_min;
    out.x_max = x_max;
    out.h = step;
    out.x = d.x;
    out.eigenvalues = tridiagonal_eigenvalues(t, 0, k);
    out.eigenvectors = Eigen::MatrixXd::Zero(cells + 1, k);
    for (int j = 0; j < k; ++j) {
        Eigen::VectorXd v = inverse_iteration(t, out.eigenvalues(j));
        v /= std::sqrt(step) * v.norm();
        const double peak = v.cwiseAbs().maxCoeff();
        if (options.check_boundary) {
            const bool left = !half && std::abs(v(0)) > 1e-6 * peak;
            const bool right = std::abs(v(interior - 1)) > 1e-6 * peak;
            if (left || right) {
                std::ostringstream os;
                os << "grid_solve: level " << j << " reaches the " << (left ? "left" : "right")
                   << " end; extend the domain past " << (left ? x_min : x_max);
                throw DomainError(os.str());
            }
        }
        out.eigenvectors.col(j).segment(1, interior) = v;
    }
    return out;
}

namespace {

constexpr double half_line_step = 1.0 / 512;

}  // namespace

GridSettings default_grid(const PotentialModel& model) {
    struct Visitor {
        GridSettings operator()(const HarmonicOscillator& m) const {
            const double l = 8 / std::pow(std::max(m.a, 1e-3), 0.25);
            return {-l, l, 1.0 / 256};
        }
        GridSettings operator()(const OscillatorInverseSquareCase1& m) const {
            return {cutoff(m.b), 8 / std::pow(std::max(m.a, 1e-3), 0.25), half_line_step};
        }
        GridSettings operator()(const OscillatorInverseSquareCase2& m) const { return {cutoff(m.b), 8, half_line_step}; }
        // Smallest multiple (at least 4) of h keeping h^2 |b| / x_cut^2 below 0.1.
        static double cutoff(double b) {
            const int cells = std::max(4, static_cast<int>(std::floor(std::sqrt(10 * std::abs(b)))) + 1);
            return cells * half_line_step;
        }
        GridSettings operator()(const GeneralizedMorse& m) const {
            const double left = m.B > 0 ? -0.5 * std::log(1500 / m.B) : -3;
            return {std::min(left, -1.0), 40, 1.0 / 128};
        }
        GridSettings operator()(const RosenMorse&) const { return {-15, 40, 1.0 / 128}; }
    };
    return std::visit(Visitor{}, model);
}

int grid_levels_below(const PotentialModel& model, double x_min, double x_max, double h, double threshold) {
    const Discretization d = discretize(model, x_min, x_max, h);
    return static_cast<int>(sturm_count(d.t, threshold));
}

CutoffStudy cutoff_halving(const PotentialModel& model, double x_cut, double x_max, double h, int k) {
    if (!half_line(model))
        throw DomainError("cutoff_halving: only half-line models have a cutoff");
    CutoffStudy s;
    s.coarse = grid_solve(model, 2 * x_cut, x_max, h, k);
    s.fine = grid_solve(model, x_cut, x_max, h, k);
    for (int j = 0; j < k; ++j) {
        const double change = std::abs(s.fine.eigenvalues(j) - s.coarse.eigenvalues(j)) /
                              std::max(std::abs(s.fine.eigenvalues(j)), 1e-300);
        s.max_relative_change = std::max(s.max_relative_change, change);
    }
    return s;
}

int node_count(const Eigen::VectorXd& v) {
    if (v.size() == 0)
        return 0;
    const double cut = 1e-9 * v.cwiseAbs().maxCoeff();
    int count = 0, sign = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) <= cut)
            continue;
        const int s = v(i) > 0 ? 1 : -1;
        if (sign != 0 && s != sign)
            ++count;
        sign = s;
    }
    return count;
}

double hermite_function(int n, double x) {
    if (n < 0)
        throw DomainError("hermite_function: degree must be non-negative");
    double prev = 0;
    double cur = std::exp(-x * x / 2) / std::pow(std::numbers::pi, 0.25);
    for (int k = 0; k < n; ++k) {
        const double next = std::sqrt(2.0 / (k + 1)) * x * cur - std::sqrt(static_cast<double>(k) / (k + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace trirep
