#include "trirep/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "trirep/draws.hpp"
#include "trirep/quadrature.hpp"

namespace trirep {

Check make_check(std::string name, double measured, double threshold, bool at_least) {
    Check c{std::move(name), measured, threshold, at_least, false};
    c.pass = std::isfinite(measured) && (at_least ? measured >= threshold : measured <= threshold);
    return c;
}

Suite parse_suite(const std::string& name) {
    if (name == "tridiagonality")
        return Suite::tridiagonality;
    if (name == "orthogonality")
        return Suite::orthogonality;
    if (name == "recursion-closed-form")
        return Suite::recursion_closed_form;
    if (name == "spectrum-oracle")
        return Suite::spectrum_oracle;
    if (name == "all")
        return Suite::all;
    throw DomainError("unknown suite '" + name + "'");
}

std::string suite_name(Suite suite) {
    switch (suite) {
    case Suite::tridiagonality:
        return "tridiagonality";
    case Suite::orthogonality:
        return "orthogonality";
    case Suite::recursion_closed_form:
        return "recursion-closed-form";
    case Suite::spectrum_oracle:
        return "spectrum-oracle";
    case Suite::all:
        return "all";
    }
    return "all";
}

namespace {

std::string num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

constexpr double infinity = std::numeric_limits<double>::infinity();

// ---------------------------------------------------------------------------
// tridiagonality

struct JCase {
    std::string name;
    PotentialModel model;
    RecursionCoefficients rc;
    double epsilon;
};

std::vector<JCase> jmatrix_cases() {
    return {
        {"oscillator-case1-ho", HarmonicOscillator{2}, build_oscillator_case1(0.5, 2), 1.3},
        {"oscillator-case1-inverse-square", OscillatorInverseSquareCase1{2, 0.75}, build_oscillator_case1(1, 2), 1.3},
        {"oscillator-case2", OscillatorInverseSquareCase2{-0.5}, build_oscillator_case2(0, -0.5), 1.0},
        {"morse", GeneralizedMorse{-6, 0.5, 2}, build_morse(-3, 0.125, 2), -1},
        {"rosen-morse", RosenMorse{1, -2}, build_rosen_morse(1, -2, 0.7, 0.9), -0.49},
    };
}

void tridiagonality(const VerifyOptions& options, std::vector<Check>& out) {
    constexpr int size = 13;
    for (const auto& c : jmatrix_cases()) {
        const std::string prefix = "tridiagonality/" + c.name + "/";
        const CoordinateMap map = model_map(c.model);
        BasisSpec spec = c.rc.basis;
        spec.alpha += options.perturb_alpha;
        try {
            const Eigen::MatrixXd j = numeric_jmatrix_block(c.model, spec, map, c.epsilon, size);
            out.push_back(make_check(prefix + "off-band", off_band_ratio(j), 1e-8));
            const Eigen::MatrixXd a = analytic_jmatrix(c.rc, c.epsilon, size);
            out.push_back(make_check(prefix + "analytic", (j - a).cwiseAbs().maxCoeff() / j.cwiseAbs().maxCoeff(), 1e-8));
        } catch (const Error&) {
            out.push_back(make_check(prefix + "off-band", infinity, 1e-8));
        }
        BasisSpec perturbed = spec;
        perturbed.alpha += 0.05;
        try {
            const Eigen::MatrixXd j = numeric_jmatrix_block(c.model, perturbed, map, c.epsilon, size);
            out.push_back(make_check(prefix + "negative-control", off_band_ratio(j), 1e-3, true));
        } catch (const Error&) {
            out.push_back(make_check(prefix + "negative-control", 0, 1e-3, true));
        }
    }
}

// ---------------------------------------------------------------------------
// orthogonality

double norm_of(const Laguerre<double>& f, int n) { return laguerre_norm(f, n); }
double norm_of(const Jacobi<double>& f, int n) { return jacobi_norm(f, n); }

template <typename Family, typename Eval>
double gauss_orthogonality(const Family& family, const WeightFamily& weight, Eval eval, int n_max) {
    const QuadratureRule rule = gauss_rule(weight, n_max + 1);
    Eigen::MatrixXd p(rule.nodes.size(), n_max + 1);
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i)
        p.row(i) = eval(family, n_max, rule.nodes(i)).transpose();
    const Eigen::MatrixXd gram = p.transpose() * rule.weights.asDiagonal() * p;
    double worst = 0;
    for (int m = 0; m <= n_max; ++m)
        for (int n = 0; n <= n_max; ++n) {
            const double hm = norm_of(family, m), hn = norm_of(family, n);
            const double target = m == n ? hn : 0.0;
            worst = std::max(worst, std::abs(gram(m, n) - target) / std::sqrt(hm * hn));
        }
    return worst;
}

void orthogonality(std::vector<Check>& out) {
    constexpr int n_max = 20;
    for (double nu : {0.0, 0.3, 2.5, -0.5}) {
        const Laguerre<double> f{nu};
        out.push_back(make_check("orthogonality/laguerre-gauss/nu=" + num(nu),
                                 gauss_orthogonality(f, f,
                                                     [](const auto& g, int n, double x) {
                                                         return laguerre_sequence(g, n, x);
                                                     },
                                                     n_max),
                                 1e-10));
    }
    for (auto [mu, nu] : {std::pair{0.0, 0.0}, {1.5, -0.2}, {-0.5, 0.5}, {2.0, 3.0}}) {
        const Jacobi<double> f{mu, nu};
        out.push_back(make_check("orthogonality/jacobi-gauss/mu=" + num(mu) + ",nu=" + num(nu),
                                 gauss_orthogonality(f, f,
                                                     [](const auto& g, int n, double x) {
                                                         return jacobi_sequence(g, n, x);
                                                     },
                                                     n_max),
                                 1e-10));
    }

    struct OverlapCase {
        std::string name;
        BasisSpec spec;
        CoordinateMap map;
        std::function<double(double)> op;
        int op_degree;
    };
    const std::vector<OverlapCase> overlaps = {
        {"oscillator-case1", build_oscillator_case1(0.7, 1).basis, CoordinateMap::oscillator(), {}, 0},

        {"morse-weighted-y", build_morse(-3, 0.25, 1.6).basis, CoordinateMap::morse(2),
         [](double y) { return y; }, 1},
        {"rosen-morse-weighted-1-y", build_rosen_morse(1, -2, 0.7, 0.9).basis, CoordinateMap::rosen_morse(),
         [](double y) { return 1 - y; }, 1},
    };
    for (const auto& c : overlaps) {
        double worst = 0;
        try {
            for (int m = 0; m <= n_max; ++m)
                for (int n = m; n <= n_max; ++n) {
                    const double v = matrix_element(c.spec, c.map, m, n, c.op, c.op_degree).value;
                    worst = std::max(worst, std::abs(v - (m == n ? 1.0 : 0.0)));
                }
        } catch (const Error&) {
            worst = infinity;
        }
        out.push_back(make_check("orthogonality/basis/" + c.name, worst, 1e-10));
    }
    {
        // 2 alpha = nu + 3/2 is orthonormal with an extra 1/y; the lowered rule keeps it exact.
        const BasisSpec spec = build_oscillator_case2(0.4, -0.5).basis;
        const MeasureRule rule = measure_rule(spec, CoordinateMap::oscillator(), true);
        double worst = 0;
        for (int m = 0; m <= n_max; ++m)
            for (int n = m; n <= n_max; ++n) {
                auto pm = [&](double y) { return basis_norm(spec, m) * basis_polynomial(spec, m, y).value; };
                auto pn = [&](double y) { return basis_norm(spec, n) * basis_polynomial(spec, n, y).value; };
                auto density = [&](double y) { return rule.residual(y) / y; };
                const double v =
                    overlap_integral(pm, pn, density, {0, infinity}, GaussSpec{rule.weight, 64}).value;
                worst = std::max(worst, std::abs(v - (m == n ? 1.0 : 0.0)));
            }
        out.push_back(make_check("orthogonality/basis/oscillator-case2-weighted-inverse-y", worst, 1e-10));
    }

    AdaptiveOptions adaptive;
    adaptive.abs_tol = 1e-10;
    adaptive.rel_tol = 1e-9;
    for (auto [mu, a, b] : {std::tuple{1.0, 1.0, 0.0}, {0.75, 2.0, -1.0}, {1.6, 0.4, 0.3}}) {
        const Pollaczek<double> f{mu, a, b};
        double worst = 0;
        try {
            for (int m = 0; m <= 6; ++m)
                for (int n = m; n <= 6; ++n) {
                    auto integrand = [&](double x) {
                        return weight_eval(f, x) * pollaczek_eval(f, m, x) * pollaczek_eval(f, n, x);
                    };
                    const double v = integrate_adaptive(integrand, {-1, 1}, adaptive).value;
                    const double target = m == n ? pollaczek_norm(f, n) : 0.0;
                    worst = std::max(worst,
                                     std::abs(v - target) / std::sqrt(pollaczek_norm(f, m) * pollaczek_norm(f, n)));
                }
        } catch (const Error&) {
            worst = infinity;
        }
        out.push_back(make_check("orthogonality/pollaczek-adaptive/mu=" + num(mu) + ",a=" + num(a) + ",b=" + num(b),
                                 worst, 1e-5));
    }
    for (auto [mu, a, b] : {std::tuple{0.5, 0.5, 1.5}, {1.0, 0.75, 0.75}}) {
        const DualHahn<double> f(mu, a, b);
        double worst = 0;
        try {
            for (int m = 0; m <= 6; ++m)
                for (int n = m; n <= 6; ++n) {
                    auto integrand = [&](double x) {
                        return weight_eval(f, x) * dual_hahn_eval(f, m, x * x) * dual_hahn_eval(f, n, x * x);
                    };
                    const double v = integrate_adaptive(integrand, {0, infinity}, adaptive).value;
                    const double target = m == n ? dual_hahn_norm(f, n) : 0.0;
                    worst = std::max(worst,
                                     std::abs(v - target) / std::sqrt(dual_hahn_norm(f, m) * dual_hahn_norm(f, n)));
                }
        } catch (const Error&) {
            worst = infinity;
        }
        out.push_back(make_check("orthogonality/dual-hahn-adaptive/mu=" + num(mu) + ",a=" + num(a) + ",b=" + num(b),
                                 worst, 1e-5));
    }
}

// ---------------------------------------------------------------------------
// recursion vs named polynomials

struct DrawFamily {
    std::string name;
    std::function<std::pair<PotentialModel, double>(Draws&)> draw;  // model, eps
};

std::vector<DrawFamily> draw_families() {
    return {
        {"case1-hyperbolic-pollaczek",
         [](Draws& r) {
             return std::pair<PotentialModel, double>{
                 OscillatorInverseSquareCase1{r.uniform(1.2, 4), r.uniform(0.05, 3)}, r.uniform(-5, 15)};
         }},
        {"case1-alternating-hyperbolic-pollaczek",
         [](Draws& r) {
             return std::pair<PotentialModel, double>{
                 OscillatorInverseSquareCase1{r.uniform(0.1, 0.9), r.uniform(0.05, 3)}, r.uniform(-5, 15)};
         }},
        {"case1-pollaczek",
         [](Draws& r) {
             return std::pair<PotentialModel, double>{
                 OscillatorInverseSquareCase1{r.uniform(-3, -0.1), r.uniform(0.05, 3)}, r.uniform(-5, 15)};
         }},
        {"morse-pollaczek",
         [](Draws& r) {
             return std::pair<PotentialModel, double>{GeneralizedMorse{r.uniform(-4, 2), r.uniform(-2, -0.05), 1},
                                                      r.uniform(-6, -0.1)};
         }},
        {"morse-hyperbolic-pollaczek",
         [](Draws& r) {
             return std::pair<PotentialModel, double>{GeneralizedMorse{r.uniform(-4, 2), r.uniform(0.3, 3), 1},
                                                      r.uniform(-6, -0.1)};
         }},
        {"morse-alternating-hyperbolic-pollaczek",
         [](Draws& r) {
             return std::pair<PotentialModel, double>{GeneralizedMorse{r.uniform(-4, 2), r.uniform(0.02, 0.23), 1},
                                                      r.uniform(-6, -0.1)};
         }},
        {"case2-dual-hahn",
         [](Draws& r) {
             return std::pair<PotentialModel, double>{OscillatorInverseSquareCase2{r.uniform(-3, -0.25)},
                                                      r.uniform(-6, 3)};
         }},
    };
}

void recursion_closed_form(const VerifyOptions& options, std::vector<Check>& out) {
    constexpr int terms = 21;
    Draws draws(options.seed);
    for (const auto& family : draw_families()) {
        double worst = 0;
        for (int i = 0; i < options.draws; ++i) {
            auto [model, eps] = family.draw(draws);
            ModelOptions mo;
            if (std::holds_alternative<OscillatorInverseSquareCase2>(model))
                mo.nu = draws.uniform(-0.5, 2);
            try {
                const auto series = solve_recursion(model_recursion(model, eps, mo), eps, terms);
                const auto closed = closed_form_coefficients(model, eps, terms, mo);
                for (int n = 0; n < terms; ++n)
                    worst = std::max(worst, std::abs(series.d(n) - closed.d(n)) / std::abs(closed.d(n)));
            } catch (const Error&) {
                worst = infinity;
            }
        }
        out.push_back(make_check("recursion-closed-form/" + family.name, worst, 1e-9));
    }

    // hypergeometric closed forms against the recurrences
    double pollaczek = 0, hyperbolic = 0, dual_hahn = 0;
    for (int i = 0; i < options.draws; ++i) {
        const double mu = draws.uniform(0.2, 3);
        const double a = draws.uniform(0, 3);
        const double b = draws.uniform(-a, a);
        const double x = std::cos(draws.uniform(0.15, 3.0));
        const Pollaczek<double> trig{mu, a, b};
        const double xh = draws.uniform(1.05, 4);
        const Pollaczek<double> hyp{mu, draws.uniform(-2, 2), draws.uniform(-2, 2), PollaczekVariant::hyperbolic};
        const DualHahn<double> dh(draws.uniform(0.2, 3), draws.uniform(0.2, 3), draws.uniform(0.2, 3));
        const double x2 = draws.uniform(0, 4);
        const auto pt = pollaczek_sequence(trig, 20, x);
        const auto ph = pollaczek_sequence(hyp, 20, xh);
        const auto pd = dual_hahn_sequence(dh, 20, x2);
        for (int n = 0; n <= 20; ++n) {
            pollaczek = std::max(pollaczek, std::abs(pollaczek_closed_form(trig, n, x) - pt(n)) /
                                                pt.head(n + 1).cwiseAbs().maxCoeff());
            hyperbolic = std::max(hyperbolic, std::abs(pollaczek_closed_form(hyp, n, xh) - ph(n)) /
                                                  ph.head(n + 1).cwiseAbs().maxCoeff());
            dual_hahn = std::max(dual_hahn, std::abs(dual_hahn_closed_form(dh, n, x2) - pd(n)) /
                                                pd.head(n + 1).cwiseAbs().maxCoeff());
        }
    }
    out.push_back(make_check("recursion-closed-form/hypergeometric/pollaczek", pollaczek, 1e-9));
    out.push_back(make_check("recursion-closed-form/hypergeometric/hyperbolic-pollaczek", hyperbolic, 1e-9));
    out.push_back(make_check("recursion-closed-form/hypergeometric/dual-hahn", dual_hahn, 1e-9));
}

// ---------------------------------------------------------------------------
// spectrum vs grid oracle

struct OracleRun {
    std::string name;
    PotentialModel model;
    SpectrumOptions options;
};

void spectrum_oracle(std::vector<Check>& out) {
    SpectrumOptions even, odd, plus;
    odd.parity = Parity::odd;
    plus.count = 3;
    const std::vector<OracleRun> runs = {
        {"ho-even", HarmonicOscillator{1}, even},
        {"ho-odd", HarmonicOscillator{1}, odd},
        {"inverse-square-b=0.75", OscillatorInverseSquareCase1{1, 0.75}, plus},
        {"inverse-square-b=2", OscillatorInverseSquareCase1{1, 2}, plus},
        {"morse-a=-3", GeneralizedMorse{-6, 1, 2}, even},
        {"morse-a=-1.2", GeneralizedMorse{-2.4, 1, 2}, even},
        {"rosen-morse-A=1,B=-2", RosenMorse{1, -2}, even},
    };
    for (const auto& run : runs) {
        const std::string prefix = "spectrum-oracle/" + run.name + "/";
        try {
            const SpectrumResult result = spectrum(run.model, run.options);
            const OracleReport report = compare_with_oracle(run.model, result, run.options);
            out.push_back(make_check(prefix + "level-count", static_cast<double>(result.levels.size()), 1, true));
            for (const auto& lc : report.levels) {
                const std::string level = prefix + "level-" + std::to_string(lc.level.n) + "/";
                out.push_back(make_check(level + "deviation", lc.relative_deviation, 1e-3));
                out.push_back(make_check(level + "oracle-nodes", std::abs(lc.oracle_nodes - lc.oracle_index), 0));
                out.push_back(make_check(level + "series-nodes", std::abs(lc.series_nodes - lc.oracle_index), 0));
            }
            if (report.oracle_bound_count)
                out.push_back(make_check(prefix + "bound-count",
                                         std::abs(*report.oracle_bound_count -
                                                  static_cast<int>(result.levels.size())),
                                         0));
            if (report.cutoff_change)
                out.push_back(make_check(prefix + "cutoff-halving", *report.cutoff_change, 1e-3));
        } catch (const Error&) {
            out.push_back(make_check(prefix + "run", infinity, 0));
        }
    }
}

}  // namespace

int oracle_index(const PotentialModel& model, const SpectrumOptions& options, int n) {
    if (std::holds_alternative<HarmonicOscillator>(model))
        return 2 * n + (options.parity == Parity::odd ? 1 : 0);
    return n;
}

OracleReport compare_with_oracle(const PotentialModel& model, const SpectrumResult& result,
                                 const SpectrumOptions& options) {
    OracleReport report;
    report.grid = default_grid(model);
    if (result.levels.empty())
        return report;
    const auto& g = report.grid;
    int k = 0;
    for (const auto& level : result.levels)
        k = std::max(k, oracle_index(model, options, level.n) + 1);

    GridSolution solution;
    if (half_line(model)) {
        const CutoffStudy study = cutoff_halving(model, g.x_min, g.x_max, g.h, k);
        report.cutoff_change = study.max_relative_change;
        solution = study.fine;
    } else {
        solution = grid_solve(model, g.x_min, g.x_max, g.h, k);
    }
    if (const auto* m = std::get_if<GeneralizedMorse>(&model))
        report.oracle_bound_count = grid_levels_below(*m, g.x_min, g.x_max, g.h, 0);
    if (const auto* m = std::get_if<RosenMorse>(&model))
        report.oracle_bound_count = grid_levels_below(*m, g.x_min, g.x_max, g.h, std::min(0.0, 2 * m->A));

    const PotentialModel smodel = diagonal_model(model);
    const Eigen::Index points = solution.x.size();
    for (const auto& level : result.levels) {
        LevelCheck lc;
        lc.level = level;
        lc.oracle_index = oracle_index(model, options, level.n);
        lc.oracle_epsilon = solution.eigenvalues(lc.oracle_index);
        lc.relative_deviation = std::abs(lc.oracle_epsilon - level.epsilon) / std::abs(level.epsilon);
        lc.oracle_nodes = node_count(solution.eigenvectors.col(lc.oracle_index));
        const auto series = wavefunction_series(smodel, level.epsilon, 50, level_options(model, level, options));
        Eigen::VectorXd psi(points);
        for (Eigen::Index i = 0; i < points; ++i)
            psi(i) = evaluate(series, solution.x(i));
        lc.series_nodes = node_count(psi);
        report.levels.push_back(lc);
    }
    return report;
}

std::vector<Check> run_suite(Suite suite, const VerifyOptions& options) {
    std::vector<Check> out;
    const bool all = suite == Suite::all;
    if (all || suite == Suite::tridiagonality)
        tridiagonality(options, out);
    if (all || suite == Suite::orthogonality)
        orthogonality(out);
    if (all || suite == Suite::recursion_closed_form)
        recursion_closed_form(options, out);
    if (all || suite == Suite::spectrum_oracle)
        spectrum_oracle(out);
    std::sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
    return out;
}

}  // namespace trirep
