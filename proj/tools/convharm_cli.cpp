// Command-line front end for scripted verification runs and plot-data dumps.
// Every subcommand prints a JSON document (or writes CSV for the plot dumps).
// Exit codes: 0 = computed / verdict true, 1 = verdict false, 2 = input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "convharm/hypergeom.hpp"
#include "convharm/io.hpp"
#include "convharm/kernels.hpp"
#include "convharm/membership.hpp"
#include "convharm/oracle.hpp"
#include "convharm/sampling.hpp"
#include "convharm/series.hpp"
#include "convharm/transforms.hpp"

using namespace convharm;
using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240808;

struct KernelChoice {
    std::string class_name;  // starlike | convex | u
    double alpha = 0.0;
    std::string kernel_path;

    bool specified() const { return !class_name.empty() || !kernel_path.empty(); }

    KernelPair resolve() const {
        if (!kernel_path.empty()) return io::kernel_from_json(io::load_json_file(kernel_path));
        if (class_name == "starlike") return named_kernel(NamedKernel::Starlike, alpha);
        if (class_name == "convex") return named_kernel(NamedKernel::Convex, alpha);
        if (class_name == "u") return named_kernel(NamedKernel::U, alpha);
        throw std::invalid_argument("no class or kernel given (use --class/--alpha or --kernel)");
    }
};

void add_kernel_options(CLI::App* cmd, KernelChoice& choice) {
    cmd->add_option("--class", choice.class_name, "named class: starlike, convex or u")
        ->transform(CLI::IsMember({"starlike", "convex", "u"}, CLI::ignore_case));
    cmd->add_option("--alpha", choice.alpha, "order of the class, in [0,1)");
    cmd->add_option("--kernel", choice.kernel_path, "kernel-pair JSON document")
        ->check(CLI::ExistingFile);
}

struct GridOptions {
    int radii = 64;
    int angles = 720;
    double r_max = 0.999;
    int refine = 3;

    GridSpec resolve() const {
        GridSpec g;
        g.radii = radii;
        g.angles = angles;
        g.r_max = r_max;
        g.refine_rounds = refine;
        g.require_valid();
        return g;
    }
};

void add_grid_options(CLI::App* cmd, GridOptions& grid) {
    cmd->add_option("--radii", grid.radii, "radial sample count (default 64)");
    cmd->add_option("--angles", grid.angles, "angular sample count (default 720)");
    cmd->add_option("--rmax", grid.r_max, "largest sampled radius (default 0.999)");
    cmd->add_option("--refine", grid.refine, "refinement rounds around the worst point");
}

HarmonicSeries load_series(const std::string& path) {
    return io::series_from_json(io::load_json_file(path));
}

void emit(const json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write to " + out_path);
        out << doc.dump(2) << "\n";
    }
}

HyperParams parse_params(const std::string& text, const std::string& flag) {
    std::istringstream in(text);
    double a, b, c;
    char comma1, comma2;
    if (!(in >> a >> comma1 >> b >> comma2 >> c) || comma1 != ',' || comma2 != ',')
        throw std::invalid_argument(flag + ": expected three comma-separated numbers a,b,c");
    return HyperParams(a, b, c);
}

// randomized criterion/oracle agreement suite backing `check --suite`
json run_agreement_suite(const KernelPair& k, int count, std::uint64_t seed,
                         const GridSpec& grid) {
    Rng rng(seed);
    json disagreements = json::array();
    int members = 0, nonmembers = 0;
    for (int i = 0; i < count; ++i) {
        const bool member = i % 2 == 0;
        if (member) {
            const HarmonicSeries f = random_member(k, rng, rng.uniform());
            ++members;
            const OracleReport r = check_defining_inequality(f, k, grid);
            if (!(r.re_ratio.value > -1e-9))
                disagreements.push_back({{"index", i},
                                         {"kind", "member"},
                                         {"lhs", condition_lhs(f, k).lhs},
                                         {"min_re_ratio", r.re_ratio.value}});
        } else {
            const HarmonicSeries f = random_nonmember(k, rng, rng.uniform(1.05, 2.0));
            ++nonmembers;
            const ViolationSearch v = find_inequality_violation(f, k, grid);
            if (!v.found)
                disagreements.push_back({{"index", i},
                                         {"kind", "nonmember"},
                                         {"lhs", condition_lhs(f, k).lhs}});
        }
    }
    return {{"suite", count},
            {"seed", seed},
            {"members_checked", members},
            {"nonmembers_checked", nonmembers},
            {"disagreements", disagreements},
            {"agreement", disagreements.empty()}};
}

// --config FILE: {"command": "...", "args": {"flag": value, ...}} replaces the
// command line.
std::vector<std::string> expand_config(const std::string& path) {
    const json doc = io::load_json_file(path);
    if (!doc.is_object() || !doc.contains("command"))
        throw std::invalid_argument("config file: expected {\"command\": ..., \"args\": {...}}");
    std::vector<std::string> args;
    args.push_back(doc.at("command").get<std::string>());
    const json arg_map = doc.value("args", json::object());
    for (const auto& [key, value] : arg_map.items()) {
        if (value.is_boolean()) {
            if (value.get<bool>()) args.push_back("--" + key);
        } else {
            args.push_back("--" + key);
            args.push_back(value.is_string() ? value.get<std::string>() : value.dump());
        }
    }
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"convharm: coefficient criteria, transforms and disk oracles for "
                 "convolution-defined harmonic function classes"};
    app.require_subcommand(1);
    int exit_code = 0;

    std::string config_path;
    app.add_option("--config", config_path,
                   "JSON file {\"command\":..., \"args\": {...}} replacing the flags")
        ->check(CLI::ExistingFile);

    std::string out_path;
    app.add_option("--out", out_path, "write the JSON result here instead of stdout");

    // ---- check ----------------------------------------------------------
    auto* check = app.add_subcommand(
        "check", "membership of a series in a class (exact TH criterion), or a "
                 "randomized criterion/oracle agreement suite with --suite");
    check->fallthrough();
    struct {
        std::string series;
        KernelChoice kernel;
        bool sufficient = false;
        int suite = 0;
        std::uint64_t seed = kDefaultSeed;
        GridOptions grid;
    } check_opts;
    check->add_option("--series", check_opts.series, "series JSON document")
        ->check(CLI::ExistingFile);
    add_kernel_options(check, check_opts.kernel);
    check->add_flag("--sufficient", check_opts.sufficient,
                    "use the sufficiency certificate over coefficient moduli");
    check->add_option("--suite", check_opts.suite,
                      "run N random members/non-members against the disk oracle");
    check->add_option("--seed", check_opts.seed, "seed for --suite (default 20240808)");
    add_grid_options(check, check_opts.grid);
    check->callback([&] {
        const KernelPair k = check_opts.kernel.resolve();
        if (check_opts.suite > 0) {
            GridOptions g = check_opts.grid;
            if (g.radii == 64 && g.angles == 720) {  // lighter default for suites
                g.radii = 32;
                g.angles = 96;
                g.refine = 2;
            }
            const json doc = run_agreement_suite(k, check_opts.suite, check_opts.seed, g.resolve());
            emit(doc, out_path);
            exit_code = doc["agreement"].get<bool>() ? 0 : 1;
            return;
        }
        if (check_opts.series.empty())
            throw std::invalid_argument("check: --series is required without --suite");
        const HarmonicSeries f = load_series(check_opts.series);
        const MembershipReport r =
            check_opts.sufficient ? sufficient_condition(f, k) : condition_lhs(f, k);
        json doc = io::membership_to_json(r);
        doc["mode"] = check_opts.sufficient ? "sufficient" : "exact";
        emit(doc, out_path);
        exit_code = r.verdict ? 0 : 1;
    });

    // ---- bounds ---------------------------------------------------------
    auto* bounds = app.add_subcommand("bounds", "sharp coefficient bounds of a class");
    bounds->fallthrough();
    struct {
        KernelChoice kernel;
        int n = 0;
        int max_n = 0;
    } bounds_opts;
    add_kernel_options(bounds, bounds_opts.kernel);
    bounds->add_option("--n", bounds_opts.n, "single index");
    bounds->add_option("--max-n", bounds_opts.max_n, "tabulate n = 1..max");
    bounds->callback([&] {
        const KernelPair k = bounds_opts.kernel.resolve();
        json rows = json::array();
        const int lo = bounds_opts.n > 0 ? bounds_opts.n : 1;
        const int hi = bounds_opts.max_n > 0 ? bounds_opts.max_n : lo;
        if (bounds_opts.n <= 0 && bounds_opts.max_n <= 0)
            throw std::invalid_argument("bounds: give --n or --max-n");
        for (int n = lo; n <= hi; ++n) {
            const CoefficientBounds b = coefficient_bounds(k, n);
            json row{{"n", n}, {"b_bound", b.b_bound}};
            if (b.a_bound) row["a_bound"] = *b.a_bound;
            rows.push_back(row);
        }
        emit({{"bounds", rows}}, out_path);
    });

    // ---- growth ---------------------------------------------------------
    auto* growth = app.add_subcommand("growth", "growth envelope and covering radius");
    growth->fallthrough();
    struct {
        KernelChoice kernel;
        double b1 = 0.0;
    } growth_opts;
    add_kernel_options(growth, growth_opts.kernel);
    growth->add_option("--b1", growth_opts.b1, "value of f_zbar(0), default 0");
    growth->callback([&] {
        emit(io::growth_to_json(growth_and_covering(growth_opts.kernel.resolve(), growth_opts.b1)),
             out_path);
    });

    // ---- extreme --------------------------------------------------------
    auto* extreme = app.add_subcommand("extreme", "extreme point h_n or g_n of a class");
    extreme->fallthrough();
    struct {
        KernelChoice kernel;
        std::string kind = "h";
        int n = 2;
    } extreme_opts;
    add_kernel_options(extreme, extreme_opts.kernel);
    extreme->add_option("--kind", extreme_opts.kind, "h or g")
        ->transform(CLI::IsMember({"h", "g"}, CLI::ignore_case));
    extreme->add_option("--n", extreme_opts.n, "index of the extreme point");
    extreme->callback([&] {
        const HarmonicSeries f =
            extreme_point(extreme_opts.kernel.resolve(),
                          extreme_opts.kind == "h" ? ExtremeKind::H : ExtremeKind::G,
                          extreme_opts.n);
        emit(io::series_to_json(f), out_path);
    });

    // ---- decompose ------------------------------------------------------
    auto* dec = app.add_subcommand("decompose", "extreme-point weights of a member");
    dec->fallthrough();
    struct {
        std::string series;
        KernelChoice kernel;
    } dec_opts;
    dec->add_option("--series", dec_opts.series, "series JSON document")
        ->required()
        ->check(CLI::ExistingFile);
    add_kernel_options(dec, dec_opts.kernel);
    dec->callback([&] {
        const KernelPair k = dec_opts.kernel.resolve();
        const HarmonicSeries f = load_series(dec_opts.series);
        const MembershipReport r = condition_lhs(f, k);
        if (!r.verdict) {
            emit({{"error", "not a member"}, {"lhs", r.lhs}}, out_path);
            exit_code = 1;
            return;
        }
        const ExtremeDecomposition d = decompose(f, k);
        json doc = io::decomposition_to_json(d);
        // reconstruction residual, as an audit
        const HarmonicSeries back = reconstruct(d, k);
        double residual = 0.0;
        for (int n = 2; n <= f.order(); ++n)
            residual = std::max(residual,
                                std::abs(back.analytic_coeff(n) - f.analytic_coeff(n)));
        for (int n = 1; n <= f.order(); ++n)
            residual = std::max(residual,
                                std::abs(back.coanalytic_coeff(n) - f.coanalytic_coeff(n)));
        doc["reconstruction_residual"] = residual;
        emit(doc, out_path);
    });

    // ---- product --------------------------------------------------------
    auto* product = app.add_subcommand("product", "hat product of two TH series");
    product->fallthrough();
    struct {
        std::string series;
        std::string with;
        KernelChoice kernel;
    } product_opts;
    product->add_option("--series", product_opts.series, "left operand")
        ->required()
        ->check(CLI::ExistingFile);
    product->add_option("--with", product_opts.with, "right operand")
        ->required()
        ->check(CLI::ExistingFile);
    add_kernel_options(product, product_opts.kernel);
    product->callback([&] {
        const HarmonicSeries f = load_series(product_opts.series);
        const HarmonicSeries g = load_series(product_opts.with);
        const HarmonicSeries p = hat_product(f, g);
        json doc{{"product", io::series_to_json(p)}};
        if (product_opts.kernel.specified()) {
            const MembershipReport r = condition_lhs(p, product_opts.kernel.resolve());
            doc["report"] = io::membership_to_json(r);
            exit_code = r.verdict ? 0 : 1;
        }
        emit(doc, out_path);
    });

    // ---- transform ------------------------------------------------------
    auto* transform = app.add_subcommand("transform", "apply an integral transform");
    transform->fallthrough();
    struct {
        std::string series;
        std::string kind;
        double gamma = 1.0;
        double delta = 0.0;
    } tr_opts;
    transform->add_option("--series", tr_opts.series, "series JSON document")
        ->required()
        ->check(CLI::ExistingFile);
    transform->add_option("--kind", tr_opts.kind, "L (Bernardi-type) or G (difference quotient)")
        ->required()
        ->transform(CLI::IsMember({"L", "G"}, CLI::ignore_case));
    transform->add_option("--gamma", tr_opts.gamma, "parameter of L, gamma > -1");
    transform->add_option("--delta", tr_opts.delta, "parameter of G, -1 <= delta < 1");
    transform->callback([&] {
        const HarmonicSeries f = load_series(tr_opts.series);
        const HarmonicSeries out = tr_opts.kind == "L"
                                       ? bernardi_transform(f, tr_opts.gamma)
                                       : difference_quotient_transform(f, tr_opts.delta);
        emit(io::series_to_json(out), out_path);
    });

    // ---- hyper ----------------------------------------------------------
    auto* hyper = app.add_subcommand(
        "hyper", "hypergeometric membership criteria and gauss product conditions");
    hyper->fallthrough();
    struct {
        std::string mode = "criterion-phi";
        std::string p1, p2;
        KernelChoice kernel;
        double alpha = 0.0;
    } hyper_opts;
    hyper->add_option("--mode", hyper_opts.mode,
                      "criterion-phi | criterion-psi | product-phi | product-psi | tu")
        ->check(CLI::IsMember(
            {"criterion-phi", "criterion-psi", "product-phi", "product-psi", "tu"}));
    hyper->add_option("--p1", hyper_opts.p1, "first parameter triple a,b,c")->required();
    hyper->add_option("--p2", hyper_opts.p2, "second parameter triple a,b,c")->required();
    add_kernel_options(hyper, hyper_opts.kernel);
    hyper->add_option("--tu-alpha", hyper_opts.alpha, "order for --mode tu");
    hyper->callback([&] {
        const HyperParams p1 = parse_params(hyper_opts.p1, "--p1");
        const HyperParams p2 = parse_params(hyper_opts.p2, "--p2");
        json doc;
        bool verdict = false;
        if (hyper_opts.mode == "criterion-phi" || hyper_opts.mode == "criterion-psi") {
            const KernelPair k = hyper_opts.kernel.resolve();
            const CriterionReport r = hyper_opts.mode == "criterion-phi"
                                          ? criterion_phi(p1, p2, k)
                                          : criterion_psi(p1, p2, k);
            doc = io::criterion_to_json(r);
            verdict = r.verdict;
        } else {
            const ProductCondition c =
                hyper_opts.mode == "product-phi"  ? product_condition_phi(p1, p2)
                : hyper_opts.mode == "product-psi" ? product_condition_psi(p1, p2)
                                                   : tu_phi_condition(p1, p2, hyper_opts.alpha);
            doc = io::product_condition_to_json(c);
            verdict = c.verdict;
        }
        emit(doc, out_path);
        exit_code = verdict ? 0 : 1;
    });

    // ---- oracle ---------------------------------------------------------
    auto* oracle = app.add_subcommand(
        "oracle", "grid minima of the defining inequality and geometric derivatives");
    oracle->fallthrough();
    struct {
        std::string series;
        KernelChoice kernel;
        GridOptions grid;
    } oracle_opts;
    oracle->add_option("--series", oracle_opts.series, "series JSON document")
        ->required()
        ->check(CLI::ExistingFile);
    add_kernel_options(oracle, oracle_opts.kernel);
    add_grid_options(oracle, oracle_opts.grid);
    oracle->callback([&] {
        const OracleReport r =
            check_defining_inequality(load_series(oracle_opts.series),
                                      oracle_opts.kernel.resolve(), oracle_opts.grid.resolve());
        emit(io::oracle_report_to_json(r), out_path);
    });

    // ---- radius ---------------------------------------------------------
    auto* radius = app.add_subcommand(
        "radius", "bisection search for the radius of a geometric property");
    radius->fallthrough();
    struct {
        std::string series;
        KernelChoice kernel;
        std::string property = "jacobian";
        double order = 0.0;
        double tol = 1e-4;
    } radius_opts;
    radius->add_option("--series", radius_opts.series,
                       "series JSON document (default: the extremal function of --class u)")
        ->check(CLI::ExistingFile);
    add_kernel_options(radius, radius_opts.kernel);
    radius->add_option("--property", radius_opts.property, "jacobian | starlike | convex")
        ->transform(CLI::IsMember({"jacobian", "starlike", "convex"}, CLI::ignore_case));
    radius->add_option("--order", radius_opts.order, "order of starlike/convex, default 0");
    radius->add_option("--tol", radius_opts.tol, "bisection tolerance, default 1e-4");
    radius->callback([&] {
        json doc;
        HarmonicSeries f = HarmonicSeries::identity(2);
        if (!radius_opts.series.empty()) {
            f = load_series(radius_opts.series);
        } else if (radius_opts.kernel.class_name == "u") {
            // extremal function z + (1-a) zbar^2 of the class with B_1 = 0
            f = HarmonicSeries::th(2, {0.0}, {0.0, 1.0 - radius_opts.kernel.alpha});
            const ClassRadii closed = class_radii(radius_opts.kernel.alpha);
            doc["closed_form"] = radius_opts.property == "convex" ? closed.convex
                                                                  : closed.univalence;
        } else {
            throw std::invalid_argument("radius: give --series or --class u --alpha A");
        }
        const RadiusProperty prop = radius_opts.property == "jacobian" ? RadiusProperty::Jacobian
                                    : radius_opts.property == "starlike"
                                        ? RadiusProperty::Starlike
                                        : RadiusProperty::Convex;
        doc["property"] = radius_opts.property;
        doc["order"] = radius_opts.order;
        doc["radius"] = radius_search(f, prop, radius_opts.order, radius_opts.tol);
        emit(doc, out_path);
    });

    // ---- figure1 --------------------------------------------------------
    auto* figure1 = app.add_subcommand(
        "figure1", "scan Re(L(z)/z) for the half-plane map counterexample");
    figure1->fallthrough();
    struct {
        int order = 60;
        GridOptions grid{120, 90, 0.98, 0};
        std::string csv;
    } fig_opts;
    figure1->add_option("--order", fig_opts.order, "truncation order of the companion series");
    add_grid_options(figure1, fig_opts.grid);
    figure1->add_option("--out,--csv", fig_opts.csv, "write the sample dump to this CSV file");
    figure1->callback([&] {
        const Figure1Scan scan = figure1_scan(fig_opts.order, fig_opts.grid.resolve());
        if (!fig_opts.csv.empty()) {
            std::ofstream csv(fig_opts.csv);
            if (!csv) throw std::invalid_argument("cannot write to " + fig_opts.csv);
            io::write_samples_csv(csv, scan.samples);
        }
        json doc{{"order", scan.order},
                 {"min_stat", scan.min_stat},
                 {"worst", io::point_to_json(scan.worst)},
                 {"samples", scan.samples.size()},
                 {"series_agreement_max", scan.agreement_max},
                 {"series_agreement_r_max", scan.agreement_r_max},
                 {"series_agreement_points", scan.agreement_points},
                 {"grid", io::grid_to_json(fig_opts.grid.resolve())}};
        if (!fig_opts.csv.empty()) doc["csv"] = fig_opts.csv;
        emit(doc, out_path);
    });

    // ---- plot-data ------------------------------------------------------
    auto* plot = app.add_subcommand("plot-data", "grid samples of a statistic as CSV");
    plot->fallthrough();
    struct {
        std::string series;
        KernelChoice kernel;
        std::string stat = "re-ratio";
        GridOptions grid{32, 90, 0.995, 0};
        std::string csv;
    } plot_opts;
    plot->add_option("--series", plot_opts.series, "series JSON document")
        ->required()
        ->check(CLI::ExistingFile);
    add_kernel_options(plot, plot_opts.kernel);
    plot->add_option("--stat", plot_opts.stat, "re-ratio | jacobian | starlike | convex")
        ->transform(CLI::IsMember({"re-ratio", "jacobian", "starlike", "convex"}, CLI::ignore_case));
    add_grid_options(plot, plot_opts.grid);
    plot->add_option("--out,--csv", plot_opts.csv, "CSV output path")->required();
    plot->callback([&] {
        const HarmonicSeries f = load_series(plot_opts.series);
        const GridSpec grid = plot_opts.grid.resolve();
        struct Sample {
            double r, theta;
            Complex value;
            double stat;
        };
        std::vector<Sample> samples;
        double minimum = std::numeric_limits<double>::infinity();
        DiskPoint worst;
        long skipped = 0;

        const bool ratio = plot_opts.stat == "re-ratio";
        std::optional<detail::ConvolvedPair> pair;
        double alpha = 0.0;
        if (ratio) {
            const KernelPair k = plot_opts.kernel.resolve();
            pair = detail::convolve_with_kernels(f, k);
            alpha = k.alpha();
        }

        for (double r : grid.radius_samples()) {
            for (double th : grid.angle_samples()) {
                const DiskPoint zp{r, th};
                Sample s{r, th, evaluate(f, zp), 0.0};
                try {
                    if (ratio) {
                        const Complex den = evaluate(pair->denominator, zp);
                        if (std::abs(den) < kDegenerateTol) {
                            ++skipped;
                            continue;
                        }
                        s.stat = (evaluate(pair->numerator, zp) / den).real() - alpha;
                    } else if (plot_opts.stat == "jacobian") {
                        const WirtingerDerivatives d = wirtinger_derivatives(f, zp);
                        s.stat = std::norm(d.h_prime) - std::norm(d.g_prime);
                    } else if (plot_opts.stat == "starlike") {
                        s.stat = starlike_derivative(f, zp);
                    } else {
                        s.stat = convex_derivative(f, zp);
                    }
                } catch (const std::domain_error&) {
                    ++skipped;
                    continue;
                }
                if (s.stat < minimum) {
                    minimum = s.stat;
                    worst = zp;
                }
                samples.push_back(s);
            }
        }
        std::ofstream csv(plot_opts.csv);
        if (!csv) throw std::invalid_argument("cannot write to " + plot_opts.csv);
        io::write_samples_csv(csv, samples);
        emit({{"stat", plot_opts.stat},
              {"csv", plot_opts.csv},
              {"samples", samples.size()},
              {"skipped", skipped},
              {"min_stat", minimum},
              {"worst", io::point_to_json(worst)},
              {"grid", io::grid_to_json(grid)}},
             out_path);
    });

    // ---- parse and dispatch ----------------------------------------------
    try {
        std::vector<std::string> raw(argv + 1, argv + argc);
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] == "--config" && i + 1 < raw.size()) {
                std::vector<std::string> expanded = expand_config(raw[i + 1]);
                raw.erase(raw.begin() + static_cast<long>(i), raw.begin() + static_cast<long>(i) + 2);
                raw.insert(raw.end(), expanded.begin(), expanded.end());
                break;
            }
        }
        std::vector<const char*> args;
        args.push_back(argv[0]);
        for (const std::string& s : raw) args.push_back(s.c_str());
        app.parse(static_cast<int>(args.size()), args.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
