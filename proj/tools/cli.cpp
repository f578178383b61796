#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trirep/errors.hpp"
#include "trirep/models.hpp"
#include "trirep/verify.hpp"

#ifndef TRIREP_VERSION
#define TRIREP_VERSION "0.0.0"
#endif

namespace trirep::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double deviation_tolerance = 1e-3;

struct RunConfig {
    std::string model = "ho";
    std::optional<double> a, b, A, B, mu_scale, nu;
    std::string parity = "even";
    std::string branch = "plus";
    std::string format;
    std::string output;
    std::optional<long long> epoch;
};

struct ModelFlags {
    std::map<std::string, CLI::Option*> options;

    bool given(const std::string& name) const {
        auto it = options.find(name);
        return it != options.end() && it->second->count() > 0;
    }
};

std::string num(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.15g", v == 0 ? 0.0 : v);
    return buffer;
}

void add_model_flags(CLI::App& app, RunConfig& cfg, ModelFlags& flags, bool with_nu) {
    app.add_option("--model", cfg.model, "ho | osc-inv-sq-1 | osc-inv-sq-2 | morse | rosen-morse")
        ->check(CLI::IsMember({"ho", "osc-inv-sq-1", "osc-inv-sq-2", "morse", "rosen-morse"}))
        ->capture_default_str();
    flags.options["--a"] = app.add_option("--a", cfg.a, "oscillator strength a (ho, osc-inv-sq-1; default 1)");
    flags.options["--b"] =
        app.add_option("--b", cfg.b, "inverse-square strength b (osc-inv-sq-1 default 0.75, osc-inv-sq-2 default -0.5)");
    flags.options["--A"] = app.add_option("--A", cfg.A, "A (morse default -6, rosen-morse default 1)");
    flags.options["--B"] = app.add_option("--B", cfg.B, "B (morse default 1, rosen-morse default -2)");
    flags.options["--mu-scale"] = app.add_option("--mu-scale", cfg.mu_scale, "Morse y = mu e^{-x} scale (default 2)");
    flags.options["--parity"] = app.add_option("--parity", cfg.parity, "ho: even | odd")
                                    ->check(CLI::IsMember({"even", "odd"}));
    flags.options["--branch"] = app.add_option("--branch", cfg.branch, "osc-inv-sq-1: plus | minus")
                                    ->check(CLI::IsMember({"plus", "minus"}));
    if (with_nu)
        flags.options["--nu"] = app.add_option("--nu", cfg.nu, "basis nu where the model leaves it free (osc-inv-sq-2, rosen-morse)");
}

void add_output_flags(CLI::App& app, RunConfig& cfg, const std::string& default_format) {
    app.add_option("--format", cfg.format, "csv | json (default " + default_format + ")")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", cfg.output, "write to this file instead of stdout");
    app.add_option("--epoch", cfg.epoch, "fixed timestamp for the JSON meta block");
}

PotentialModel build_model(const RunConfig& cfg, const ModelFlags& flags) {
    std::vector<std::string> allowed;
    PotentialModel model;
    if (cfg.model == "ho") {
        allowed = {"--a", "--parity"};
        model = HarmonicOscillator{cfg.a.value_or(1)};
    } else if (cfg.model == "osc-inv-sq-1") {
        allowed = {"--a", "--b", "--branch"};
        model = OscillatorInverseSquareCase1{cfg.a.value_or(1), cfg.b.value_or(0.75)};
    } else if (cfg.model == "osc-inv-sq-2") {
        allowed = {"--b", "--nu"};
        model = OscillatorInverseSquareCase2{cfg.b.value_or(-0.5)};
    } else if (cfg.model == "morse") {
        allowed = {"--A", "--B", "--mu-scale"};
        model = GeneralizedMorse{cfg.A.value_or(-6), cfg.B.value_or(1), cfg.mu_scale.value_or(2)};
    } else {
        allowed = {"--A", "--B", "--nu"};
        model = RosenMorse{cfg.A.value_or(1), cfg.B.value_or(-2)};
    }
    for (const auto& [name, option] : flags.options) {
        (void)option;
        if (flags.given(name) && std::find(allowed.begin(), allowed.end(), name) == allowed.end())
            throw DomainError(name + " does not apply to model " + cfg.model);
    }
    validate(model);
    return model;
}

ModelOptions model_options(const RunConfig& cfg) {
    ModelOptions o;
    o.parity = cfg.parity == "odd" ? Parity::odd : Parity::even;
    o.branch = cfg.branch == "minus" ? Branch::minus : Branch::plus;
    o.nu = cfg.nu;
    return o;
}

json model_echo(const RunConfig& cfg, const PotentialModel& model) {
    json j;
    j["model"] = cfg.model;
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, HarmonicOscillator>) {
                j["a"] = m.a;
                j["parity"] = cfg.parity;
            } else if constexpr (std::is_same_v<T, OscillatorInverseSquareCase1>) {
                j["a"] = m.a;
                j["b"] = m.b;
                j["branch"] = cfg.branch;
            } else if constexpr (std::is_same_v<T, OscillatorInverseSquareCase2>) {
                j["b"] = m.b;
            } else if constexpr (std::is_same_v<T, GeneralizedMorse>) {
                j["A"] = m.A;
                j["B"] = m.B;
                j["mu_scale"] = m.mu_scale;
            } else {
                j["A"] = m.A;
                j["B"] = m.B;
            }
        },
        model);
    if (cfg.nu)
        j["nu"] = *cfg.nu;
    return j;
}

json meta(const std::string& command, const RunConfig& cfg, json config) {
    json m;
    m["version"] = TRIREP_VERSION;
    m["command"] = command;
    config["format"] = cfg.format;
    m["config"] = std::move(config);
    m["timestamp"] = cfg.epoch ? *cfg.epoch : static_cast<long long>(std::time(nullptr));
    m["units"] = "E0 = hbar^2 lambda^2 / 2m, lambda = 1";
    return m;
}

// Opens --output or falls back to stdout.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw DomainError("cannot open output file " + path);
            stream_ = &file_;
        }
    }
    std::ostream& operator*() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

std::optional<double> parameter(const Level& level, const std::string& key) {
    for (const auto& [k, v] : level.parameters)
        if (k == key)
            return v;
    return std::nullopt;
}

bool oscillator_model(const PotentialModel& model) {
    return std::holds_alternative<HarmonicOscillator>(model) ||
           std::holds_alternative<OscillatorInverseSquareCase1>(model);
}

// hbar omega = 2 sqrt(a) E0 for U = a x^2.
double hbar_omega(const PotentialModel& model) {
    if (const auto* m = std::get_if<HarmonicOscillator>(&model))
        return 2 * std::sqrt(m->a);
    return 2 * std::sqrt(std::get<OscillatorInverseSquareCase1>(model).a);
}

std::string cell(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

json jvalue(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

constexpr const char* spectrum_columns =
    "n,epsilon,energy_hbar_omega,nu,mu,oracle_epsilon,relative_deviation,oracle_nodes,series_nodes,"
    "epsilon_row_formula,epsilon_closed_formula,closed_formula_deviation";

int cmd_spectrum(const RunConfig& cfg, const ModelFlags& flags, int count, bool verify, bool hbar, std::ostream& out,
                 std::ostream& err) {
    const PotentialModel model = build_model(cfg, flags);
    if (hbar && !oscillator_model(model))
        throw DomainError("--hbar-omega applies to the oscillator models only");
    if (count < 0)
        throw DomainError("--count must be non-negative");
    SpectrumOptions options;
    static_cast<ModelOptions&>(options) = model_options(cfg);
    options.count = count;
    const SpectrumResult result = spectrum(model, options);

    std::optional<OracleReport> report;
    if (verify && !result.levels.empty())
        report = compare_with_oracle(model, result, options);

    std::vector<std::string> failures;
    std::vector<std::string> notes = result.notes;
    json count_block;
    if (result.morse_count) {
        const auto& c = *result.morse_count;
        count_block["implemented"] = c.implemented;
        count_block["n_max_rule"] = c.n_max_rule;
        bool discrepancy = c.implemented != c.n_max_rule;
        std::string line = "bound-state count: n_max rule " + std::to_string(c.n_max_rule) +
                           ", nu > 0 rule " + std::to_string(c.implemented);
        if (report && report->oracle_bound_count) {
            const int oracle = *report->oracle_bound_count;
            count_block["oracle"] = oracle;
            line += ", oracle " + std::to_string(oracle);
            discrepancy = discrepancy || oracle != c.implemented || oracle != c.n_max_rule;
            if (oracle != c.implemented)
                failures.push_back("oracle bound-state count " + std::to_string(oracle) +
                                   " differs from the implemented count " + std::to_string(c.implemented));
        } else {
            count_block["oracle"] = nullptr;
        }
        count_block["discrepancy"] = discrepancy;
        notes.push_back((discrepancy ? "DISCREPANCY " : "") + line);
    }

    json levels = json::array();
    std::ostringstream csv;
    csv << spectrum_columns << "\n";
    for (std::size_t i = 0; i < result.levels.size(); ++i) {
        const Level& level = result.levels[i];
        const LevelCheck* lc = report ? &report->levels[i] : nullptr;
        std::optional<double> energy;
        if (hbar)
            energy = level.epsilon / hbar_omega(model);
        std::optional<double> row, closed, closed_dev;
        if (level.comparison) {
            row = level.comparison->epsilon_row_formula;
            closed = level.comparison->epsilon_closed_formula;
            closed_dev = std::abs(*closed - level.epsilon) / std::abs(level.epsilon);
        }
        csv << level.n << ',' << num(level.epsilon) << ',' << cell(energy) << ',' << cell(parameter(level, "nu"))
            << ',' << cell(parameter(level, "mu")) << ','
            << (lc ? num(lc->oracle_epsilon) : "") << ',' << (lc ? num(lc->relative_deviation) : "") << ','
            << (lc ? std::to_string(lc->oracle_nodes) : "") << ',' << (lc ? std::to_string(lc->series_nodes) : "")
            << ',' << cell(row) << ',' << cell(closed) << ',' << cell(closed_dev) << "\n";

        json l;
        l["n"] = level.n;
        l["epsilon"] = level.epsilon;
        l["energy_hbar_omega"] = jvalue(energy);
        json params = json::object();
        for (const auto& [k, v] : level.parameters)
            params[k] = v;
        l["parameters"] = params;
        if (lc) {
            l["oracle"] = {{"index", lc->oracle_index},
                           {"epsilon", lc->oracle_epsilon},
                           {"relative_deviation", lc->relative_deviation},
                           {"oracle_nodes", lc->oracle_nodes},
                           {"series_nodes", lc->series_nodes}};
            if (!(lc->relative_deviation <= deviation_tolerance))
                failures.push_back("level " + std::to_string(level.n) + ": relative deviation " +
                                   num(lc->relative_deviation));
            if (lc->oracle_nodes != lc->oracle_index || lc->series_nodes != lc->oracle_index)
                failures.push_back("level " + std::to_string(level.n) + ": node counts " +
                                   std::to_string(lc->oracle_nodes) + " (oracle), " +
                                   std::to_string(lc->series_nodes) + " (series), expected " +
                                   std::to_string(lc->oracle_index));
        }
        if (level.comparison)
            l["rosen_morse"] = {{"epsilon_row_formula", *row},
                                {"epsilon_closed_formula", *closed},
                                {"closed_formula_deviation", *closed_dev}};
        levels.push_back(l);
    }
    if (report && report->cutoff_change) {
        notes.push_back("cutoff halving: max relative change " + num(*report->cutoff_change));
        if (!(*report->cutoff_change <= deviation_tolerance))
            failures.push_back("cutoff halving changed the oracle levels by " + num(*report->cutoff_change));
    }
    if (verify && result.levels.empty())
        notes.push_back("no levels to verify");

    Sink sink(cfg.output, out);
    if (cfg.format == "csv") {
        *sink << csv.str();
        for (const auto& note : notes)
            err << "note: " << note << '\n';
        for (const auto& f : failures)
            err << "verification failed: " << f << '\n';
    } else {
        json config = model_echo(cfg, model);
        config["count"] = count;
        config["verify"] = verify;
        config["hbar_omega"] = hbar;
        json j;
        j["meta"] = meta("spectrum", cfg, config);
        j["energy_unit"] = result.units;
        j["levels"] = levels;
        j["n_max"] = result.n_max ? json(*result.n_max) : json(nullptr);
        if (result.morse_count)
            j["bound_state_count"] = count_block;
        if (report) {
            json o = {{"x_min", report->grid.x_min}, {"x_max", report->grid.x_max}, {"h", report->grid.h}};
            o["cutoff_change"] = jvalue(report->cutoff_change);
            o["bound_count"] = report->oracle_bound_count ? json(*report->oracle_bound_count) : json(nullptr);
            j["oracle"] = o;
            j["verification"] = {{"pass", failures.empty()}, {"failures", failures}};
        }
        j["notes"] = notes;
        *sink << j.dump(2) << '\n';
    }
    return failures.empty() ? 0 : 2;
}

struct XRange {
    double lo;
    double hi;
};

XRange default_range(const PotentialModel& model) {
    if (std::holds_alternative<HarmonicOscillator>(model))
        return {-5, 5};
    if (half_line(model))
        return {0, 5};
    if (std::holds_alternative<GeneralizedMorse>(model))
        return {-2, 20};
    return {-10, 10};
}

int cmd_wavefunction(const RunConfig& cfg, const ModelFlags& flags, std::optional<double> epsilon,
                     std::optional<int> level_index, std::optional<double> x_min, std::optional<double> x_max,
                     int samples, int truncation, std::ostream& out, std::ostream& err) {
    PotentialModel model = build_model(cfg, flags);
    if (epsilon.has_value() == level_index.has_value())
        throw DomainError("give exactly one of --epsilon and --level");
    if (samples < 2)
        throw DomainError("--samples must be at least 2");
    if (truncation < 1)
        throw DomainError("--N must be positive");
    ModelOptions options = model_options(cfg);
    double eps;
    if (level_index) {
        if (*level_index < 0)
            throw DomainError("--level must be non-negative");
        SpectrumOptions so;
        static_cast<ModelOptions&>(so) = options;
        so.count = *level_index + 1;
        const SpectrumResult result = spectrum(model, so);
        const Level* found = nullptr;
        for (const auto& l : result.levels)
            if (l.n == *level_index)
                found = &l;
        if (!found)
            throw DomainError("model has no bound level n = " + std::to_string(*level_index));
        eps = found->epsilon;
        options = level_options(model, *found, options);
        model = diagonal_model(model);
    } else {
        eps = *epsilon;
    }
    const XRange range = default_range(model);
    const double lo = x_min.value_or(range.lo);
    const double hi = x_max.value_or(range.hi);
    if (!(lo < hi))
        throw DomainError("--x-min must be below --x-max");
    if (half_line(model) && lo < 0)
        throw DomainError("this model lives on x > 0; --x-min must be non-negative");

    const WavefunctionSeries series = wavefunction_series(model, eps, truncation, options);
    std::vector<double> xs(samples), psi(samples);
    for (int i = 0; i < samples; ++i) {
        xs[i] = i == samples - 1 ? hi : lo + (hi - lo) * i / (samples - 1);
        psi[i] = evaluate(series, xs[i]);
    }

    Sink sink(cfg.output, out);
    if (cfg.format == "csv") {
        *sink << "x,psi,tail_estimate,converged\n";
        const std::string tail = num(series.tail_estimate);
        const char* conv = series.converged ? "true" : "false";
        for (int i = 0; i < samples; ++i)
            *sink << num(xs[i]) << ',' << num(psi[i]) << ',' << tail << ',' << conv << "\n";
        if (!series.converged)
            err << "note: series not converged at N = " << truncation << " (tail estimate " << tail << ")\n";
    } else {
        json config = model_echo(cfg, model);
        config["epsilon"] = eps;
        config["level"] = level_index ? json(*level_index) : json(nullptr);
        config["x_min"] = lo;
        config["x_max"] = hi;
        config["samples"] = samples;
        config["N"] = truncation;
        json j;
        j["meta"] = meta("wavefunction", cfg, config);
        j["epsilon"] = eps;
        j["tail_estimate"] = series.tail_estimate;
        j["converged"] = series.converged;
        j["terminated_at"] = series.coeffs.terminated_at ? json(*series.coeffs.terminated_at) : json(nullptr);
        j["x"] = xs;
        j["psi"] = psi;
        *sink << j.dump(2) << '\n';
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite_text, const VerifyOptions& options, std::ostream& out,
               std::ostream& err) {
    const Suite suite = parse_suite(suite_text);
    if (options.draws < 1)
        throw DomainError("--draws must be positive");
    const std::vector<Check> checks = run_suite(suite, options);
    int failed = 0;
    for (const auto& c : checks)
        failed += c.pass ? 0 : 1;

    Sink sink(cfg.output, out);
    if (cfg.format == "csv") {
        *sink << "name,measured,threshold,comparison,pass\n";
        for (const auto& c : checks)
            *sink << c.name << ',' << num(c.measured) << ',' << num(c.threshold) << ','
                  << (c.at_least ? ">=" : "<=") << ',' << (c.pass ? "true" : "false") << "\n";
    } else {
        json config;
        config["suite"] = suite_name(suite);
        config["perturb_alpha"] = options.perturb_alpha;
        config["seed"] = options.seed;
        config["draws"] = options.draws;
        json list = json::array();
        for (const auto& c : checks)
            list.push_back({{"name", c.name},
                            {"measured", std::isfinite(c.measured) ? json(c.measured) : json(num(c.measured))},
                            {"threshold", c.threshold},
                            {"comparison", c.at_least ? ">=" : "<="},
                            {"pass", c.pass}});
        json j;
        j["meta"] = meta("verify", cfg, config);
        j["checks"] = list;
        j["summary"] = {{"total", checks.size()}, {"failed", failed}, {"pass", failed == 0}};
        *sink << j.dump(2) << '\n';
    }
    if (failed)
        err << failed << " of " << checks.size() << " checks failed\n";
    return failed ? 2 : 0;
}

int cmd_jmatrix(const RunConfig& cfg, const ModelFlags& flags, double epsilon, int size, bool numeric, int nodes,
                std::ostream& out) {
    const PotentialModel model = build_model(cfg, flags);
    if (size < 1 || size > 64)
        throw DomainError("--size must be in 1..64");
    const RecursionCoefficients rc = model_recursion(model, epsilon, model_options(cfg));
    const Eigen::MatrixXd analytic = analytic_jmatrix(rc, epsilon, size);
    Eigen::MatrixXd quad;
    if (numeric)
        quad = numeric_jmatrix_block(model, rc.basis, model_map(model), epsilon, size, nodes);

    Sink sink(cfg.output, out);
    if (cfg.format == "csv") {
        *sink << (numeric ? "m,n,analytic,numeric\n" : "m,n,analytic\n");
        for (int m = 0; m < size; ++m)
            for (int n = 0; n < size; ++n) {
                *sink << m << ',' << n << ',' << num(analytic(m, n));
                if (numeric)
                    *sink << ',' << num(quad(m, n));
                *sink << "\n";
            }
    } else {
        auto rows = [](const Eigen::MatrixXd& a) {
            json r = json::array();
            for (Eigen::Index i = 0; i < a.rows(); ++i) {
                std::vector<double> row(a.cols());
                for (Eigen::Index k = 0; k < a.cols(); ++k)
                    row[k] = a(i, k);
                r.push_back(row);
            }
            return r;
        };
        json config = model_echo(cfg, model);
        config["epsilon"] = epsilon;
        config["size"] = size;
        config["numeric"] = numeric;
        json j;
        j["meta"] = meta("jmatrix", cfg, config);
        j["basis"] = {{"alpha", rc.basis.alpha}, {"beta", rc.basis.beta}, {"nu", rc.basis.nu}, {"mu", rc.basis.mu}};
        j["analytic"] = rows(analytic);
        if (numeric)
            j["numeric"] = rows(quad);
        *sink << j.dump(2) << '\n';
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bound states of the 1D Schroedinger equation from tridiagonal basis representations", "trirep"};
    app.require_subcommand(1);
    app.set_version_flag("--version", TRIREP_VERSION);

    RunConfig cfg;
    ModelFlags spec_flags, wave_flags, jm_flags;

    auto* spec = app.add_subcommand("spectrum", "closed-form levels, optionally checked against the grid oracle");
    int count = 4;
    bool verify = false, hbar = false;
    add_model_flags(*spec, cfg, spec_flags, false);
    add_output_flags(*spec, cfg, "csv");
    spec->add_option("--count", count, "levels for the oscillator models")->capture_default_str();
    spec->add_flag("--verify", verify, "compare with the finite-difference oracle; exit 2 on failure");
    spec->add_flag("--hbar-omega", hbar, "fill energy_hbar_omega = eps / (2 sqrt(a)) for oscillator models");
    spec->footer(std::string("CSV columns: ") + spectrum_columns +
                 "\nEmpty cells mean not applicable. Notes and verification failures go to stderr.");

    auto* wave = app.add_subcommand("wavefunction", "tabulate the series solution at one energy");
    std::optional<double> epsilon, x_min, x_max;
    std::optional<int> level;
    int samples = 201, truncation = 50;
    add_model_flags(*wave, cfg, wave_flags, true);
    add_output_flags(*wave, cfg, "csv");
    wave->add_option("--epsilon", epsilon, "energy in E0 units");
    wave->add_option("--level", level, "use the n-th closed-form level instead of --epsilon");
    wave->add_option("--x-min", x_min, "left end of the sample range");
    wave->add_option("--x-max", x_max, "right end of the sample range");
    wave->add_option("--samples", samples, "number of sample points")->capture_default_str();
    wave->add_option("--N", truncation, "series truncation")->capture_default_str();
    wave->footer("CSV columns: x,psi,tail_estimate,converged\npsi is not normalized.");

    auto* ver = app.add_subcommand("verify", "run the verification suites");
    std::string suite = "all";
    VerifyOptions vopt;
    add_output_flags(*ver, cfg, "json");
    ver->add_option("--suite", suite, "tridiagonality | orthogonality | recursion-closed-form | spectrum-oracle | all")
        ->check(CLI::IsMember({"tridiagonality", "orthogonality", "recursion-closed-form", "spectrum-oracle", "all"}))
        ->capture_default_str();
    ver->add_option("--perturb-alpha", vopt.perturb_alpha, "shift every basis alpha in the tridiagonality suite");
    ver->add_option("--seed", vopt.seed, "seed for the randomized draws")->capture_default_str();
    ver->add_option("--draws", vopt.draws, "draws per randomized family")->capture_default_str();
    ver->footer("CSV columns: name,measured,threshold,comparison,pass");

    auto* jm = app.add_subcommand("jmatrix", "dump <phi_m|H - eps|phi_n>");
    double jeps = 0;
    int size = 8, nodes = 64;
    bool numeric = false;
    add_model_flags(*jm, cfg, jm_flags, true);
    add_output_flags(*jm, cfg, "csv");
    jm->add_option("--epsilon", jeps, "energy in E0 units")->required();
    jm->add_option("--size", size, "matrix size, at most 64")->capture_default_str();
    jm->add_flag("--numeric", numeric, "add the quadrature values");
    jm->add_option("--nodes", nodes, "Gauss nodes for --numeric")->capture_default_str();
    jm->footer("CSV columns: m,n,analytic[,numeric]");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << TRIREP_VERSION << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    if (cfg.format.empty())
        cfg.format = ver->parsed() ? "json" : "csv";
    try {
        if (spec->parsed())
            return cmd_spectrum(cfg, spec_flags, count, verify, hbar, out, err);
        if (wave->parsed())
            return cmd_wavefunction(cfg, wave_flags, epsilon, level, x_min, x_max, samples, truncation, out, err);
        if (ver->parsed())
            return cmd_verify(cfg, suite, vopt, out, err);
        return cmd_jmatrix(cfg, jm_flags, jeps, size, numeric, nodes, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace trirep::cli
