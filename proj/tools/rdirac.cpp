// Command-line front end: single solves and the study drivers, bound to a
// JSON config schema with flag overrides.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rdirac/report_io.hpp"
#include "rdirac/studies.hpp"

using namespace rdirac;

namespace {

struct CommonConfig {
    double c = 137.035999084;
    double mass = 1.0;
    double L = 1.0;
    int N1 = 60;
    int N2 = 60;
    double beta = 1.0;
    bool adapt = false;
    bool physics_seed = false;
    double nu = 2.0;
    double beta_min = 1e-4;
    double beta_max = 1e5;
    int jobs = 0;
    int quad_inner = 0;
    int quad_outer = 0;
    std::string out;
    std::string format = "json";

    // potential selection
    std::string potential = "coulomb";
    double Z = 1.0;
    double V0 = 1.0;
    double lambda = 0.0;
    double De = 0.17;
    double re = 1.4;
    double alpha = 1.0;
    double R = 1e-4;
    double k_harm = 1.0;
};

Potential build_potential(const CommonConfig& cfg) {
    if (cfg.potential == "coulomb") return Coulomb{cfg.Z};
    if (cfg.potential == "gaussian") return GaussianNucleus{cfg.Z, cfg.R};
    if (cfg.potential == "yukawa") return Yukawa{cfg.V0, cfg.lambda};
    if (cfg.potential == "morse") return Morse{cfg.De, cfg.re, cfg.alpha};
    if (cfg.potential == "hellmann") return Hellmann{cfg.Z, cfg.V0, cfg.lambda};
    if (cfg.potential == "harmonic") return Harmonic{cfg.k_harm};
    throw std::domain_error("unknown potential: " + cfg.potential);
}

StudyOptions build_options(const CommonConfig& cfg) {
    StudyOptions opt;
    opt.consts = PhysicsConstants{cfg.c, cfg.mass};
    opt.L = cfg.L;
    opt.adaptive.nu = cfg.nu;
    opt.adaptive.beta0 = cfg.beta;
    opt.adaptive.beta_min = cfg.beta_min;
    opt.adaptive.beta_max = cfg.beta_max;
    opt.adaptive.physics_seed = cfg.physics_seed;
    opt.fixed_beta = cfg.beta;
    opt.budgets = QuadBudgets{cfg.quad_inner, cfg.quad_outer};
    opt.jobs = cfg.jobs;
    return opt;
}

void add_common_flags(CLI::App* cmd, CommonConfig& cfg) {
    cmd->add_option("--c", cfg.c, "speed of light in a.u.");
    cmd->add_option("--mass", cfg.mass, "particle mass in electron masses");
    cmd->add_option("--L", cfg.L, "interface radius, Bohr");
    cmd->add_option("--N1", cfg.N1, "log-orthogonal block size");
    cmd->add_option("--N2", cfg.N2, "Laguerre block size");
    cmd->add_option("--beta", cfg.beta, "Laguerre scaling (fixed runs)");
    cmd->add_flag("--adapt", cfg.adapt, "adapt beta via the frequency indicator");
    cmd->add_flag("--physics-seed", cfg.physics_seed, "seed beta from the nonrelativistic estimate");
    cmd->add_option("--nu", cfg.nu, "adaptive expansion factor");
    cmd->add_option("--beta-min", cfg.beta_min);
    cmd->add_option("--beta-max", cfg.beta_max);
    cmd->add_option("--jobs", cfg.jobs, "parallel grid points (0 = cores)");
    cmd->add_option("--quad-inner", cfg.quad_inner, "inner quadrature budget (0 = auto)");
    cmd->add_option("--quad-outer", cfg.quad_outer, "outer quadrature budget (0 = auto)");
    cmd->add_option("--out", cfg.out, "output path (basename for studies)");
    cmd->add_option("--format", cfg.format, "json|csv|both")
        ->check(CLI::IsMember({"json", "csv", "both"}));
}

void add_potential_flags(CLI::App* cmd, CommonConfig& cfg) {
    cmd->add_option("--potential", cfg.potential,
                    "coulomb|gaussian|yukawa|morse|hellmann|harmonic")
        ->check(CLI::IsMember({"coulomb", "gaussian", "yukawa", "morse", "hellmann", "harmonic"}));
    cmd->add_option("--Z", cfg.Z, "nuclear charge");
    cmd->add_option("--V0", cfg.V0, "coupling strength");
    cmd->add_option("--lambda", cfg.lambda, "screening parameter, 1/Bohr");
    cmd->add_option("--De", cfg.De, "Morse dissociation energy, Hartree");
    cmd->add_option("--re", cfg.re, "Morse equilibrium length, Bohr");
    cmd->add_option("--alpha", cfg.alpha, "Morse width, 1/Bohr");
    cmd->add_option("--R", cfg.R, "Gaussian nuclear size parameter, Bohr");
    cmd->add_option("--k", cfg.k_harm, "harmonic force constant");
}

// Config file: a flat JSON object whose keys mirror the long flag names
// (without the leading dashes); explicit flags override file values.
void apply_config_file(const std::string& path, CommonConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open config file: " + path);
    json j = json::parse(in);
    auto get = [&j](const char* key, auto& slot) {
        if (j.contains(key)) slot = j.at(key).get<std::decay_t<decltype(slot)>>();
    };
    get("c", cfg.c);
    get("mass", cfg.mass);
    get("L", cfg.L);
    get("N1", cfg.N1);
    get("N2", cfg.N2);
    get("beta", cfg.beta);
    get("adapt", cfg.adapt);
    get("physics_seed", cfg.physics_seed);
    get("nu", cfg.nu);
    get("beta_min", cfg.beta_min);
    get("beta_max", cfg.beta_max);
    get("jobs", cfg.jobs);
    get("quad_inner", cfg.quad_inner);
    get("quad_outer", cfg.quad_outer);
    get("out", cfg.out);
    get("format", cfg.format);
    get("potential", cfg.potential);
    get("Z", cfg.Z);
    get("V0", cfg.V0);
    get("lambda", cfg.lambda);
    get("De", cfg.De);
    get("re", cfg.re);
    get("alpha", cfg.alpha);
    get("R", cfg.R);
    get("k", cfg.k_harm);
}

void write_report(const StudyReport& report, const std::string& potential,
                  const CommonConfig& cfg) {
    std::string base = cfg.out.empty() ? default_report_basename(report.kind, potential) : cfg.out;
    if (cfg.format == "csv" || cfg.format == "both") {
        std::ofstream csv(base + ".csv");
        write_csv(csv, report);
        std::cout << "wrote " << base << ".csv\n";
    }
    if (cfg.format == "json" || cfg.format == "both") {
        std::ofstream js(base + ".json");
        js << report_json(report).dump(2) << "\n";
        std::cout << "wrote " << base << ".json\n";
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    // "10,20,30" or "10..50:10" (inclusive range with step)
    std::vector<int> out;
    auto range = text.find("..");
    if (range != std::string::npos) {
        int lo = std::stoi(text.substr(0, range));
        std::string rest = text.substr(range + 2);
        int step = 1;
        auto colon = rest.find(':');
        if (colon != std::string::npos) {
            step = std::stoi(rest.substr(colon + 1));
            rest = rest.substr(0, colon);
        }
        int hi = std::stoi(rest);
        for (int v = lo; v <= hi; v += step) out.push_back(v);
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    if (out.empty()) throw std::domain_error("empty integer list");
    return out;
}

int run_solve(const CommonConfig& cfg, int kappa, int n_states, const std::string& mode_name,
              const std::string& dump_prefix, const std::string& sample_spec) {
    Potential pot = build_potential(cfg);
    validate(pot);
    if (kappa == 0) throw std::domain_error("kappa must be a nonzero integer");
    if (n_states < 1) throw std::domain_error("n-states must be >= 1");
    PhysicsConstants consts{cfg.c, cfg.mass};
    if (!(consts.c > 0.0) || !(consts.mass > 0.0))
        throw std::domain_error("constants must be positive");

    OperatorMode mode = OperatorMode::idom;
    if (mode_name == "sdom") mode = OperatorMode::sdom;
    else if (mode_name == "raw") mode = OperatorMode::raw;
    else if (mode_name != "idom") throw std::domain_error("mode must be idom|sdom|raw");

    GlobalBasisSpec spec;
    spec.L = cfg.L;
    spec.N1 = cfg.N1;
    spec.N2 = cfg.N2;
    spec.beta = cfg.beta;
    if (cfg.N1 == 0 && cfg.N2 > 0) spec.mode = BasisMode::laguerre_only;
    spec.validate();

    json extra;
    AssembledSystem sys;
    EigenSolution sol;
    if (cfg.adapt) {
        AdaptProblem problem;
        problem.basis = spec;
        problem.potential = pot;
        problem.kappa = kappa;
        problem.consts = consts;
        problem.mode = mode;
        problem.n_states = n_states;
        problem.budgets = QuadBudgets{cfg.quad_inner, cfg.quad_outer};
        AdaptiveConfig acfg;
        acfg.nu = cfg.nu;
        acfg.beta0 = cfg.beta;
        acfg.beta_min = cfg.beta_min;
        acfg.beta_max = cfg.beta_max;
        acfg.physics_seed = cfg.physics_seed;
        AdaptResult res = adapt_beta(problem, acfg);
        spec.beta = res.beta;
        extra["adaptive_trace"] = trace_json(res.trace);
        sys = assemble(balanced_layout(spec), pot, kappa, consts, mode,
                       QuadBudgets{cfg.quad_inner, cfg.quad_outer});
        sol = std::move(res.solution);
    } else {
        sys = assemble(balanced_layout(spec), pot, kappa, consts, mode,
                       QuadBudgets{cfg.quad_inner, cfg.quad_outer});
        sol = solve_gep(sys, n_states);
    }

    ClassifyOptions copt;
    if (const auto* c = std::get_if<Coulomb>(&pot)) {
        std::vector<double> oracle;
        int n0 = lowest_principal(kappa);
        for (int i = 0; i < n_states + 2; ++i)
            oracle.push_back(coulomb_exact_energy(c->Z, {n0 + i, kappa}, consts));
        copt.oracle = oracle;
    }
    classify_states(sol, sys, copt);

    std::cout << "# " << potential_name(pot) << " kappa=" << kappa
              << " mode=" << operator_mode_name(mode) << " basis N1=" << spec.N1
              << " N2=" << spec.N2 << " beta=" << format_g17(spec.beta) << "\n";
    if (sol.entries.empty()) std::cout << "no bound states in the mass gap\n";
    for (std::size_t i = 0; i < sol.entries.size(); ++i) {
        const auto& e = sol.entries[i];
        std::cout << i + 1 << "  E = " << format_g17(e.binding_energy)
                  << "  residual = " << format_g17(e.residual) << "  "
                  << state_class_name(e.classification) << "\n";
    }

    if (!dump_prefix.empty()) {
        for (auto [name, m] :
             {std::pair<const char*, const Eigen::MatrixXd*>{"A", &sys.A},
              {"B", &sys.B},
              {"M", &sys.overlap}}) {
            std::ofstream os(dump_prefix + "." + name + ".txt");
            dump_matrix(os, *m);
        }
    }

    if (!sample_spec.empty() && !sol.entries.empty()) {
        // "rmax:count" uniform grid of component samples for each state
        auto colon = sample_spec.find(':');
        double rmax = std::stod(sample_spec.substr(0, colon));
        int count = colon == std::string::npos ? 400 : std::stoi(sample_spec.substr(colon + 1));
        std::vector<double> grid;
        for (int i = 1; i <= count; ++i) grid.push_back(rmax * i / double(count));
        json samples = json::array();
        for (const auto& e : sol.entries) {
            RadialSamples s = normalize_and_sample(sys, e, grid);
            samples.push_back(json{{"r", s.r}, {"F", s.F}, {"G", s.G}});
        }
        extra["samples"] = std::move(samples);
    }

    if (!cfg.out.empty()) {
        if (cfg.format == "csv") {
            std::ofstream os(cfg.out);
            os << "index,binding_energy,raw_eigenvalue,residual,classification\n";
            for (std::size_t i = 0; i < sol.entries.size(); ++i) {
                const auto& e = sol.entries[i];
                os << i + 1 << "," << format_g17(e.binding_energy) << ","
                   << format_g17(e.raw_eigenvalue) << "," << format_g17(e.residual) << ","
                   << state_class_name(e.classification) << "\n";
            }
        } else {
            json out = solution_json(sys, sol, true);
            for (auto& [k, v] : extra.items()) out[k] = v;
            std::ofstream os(cfg.out);
            os << out.dump(2) << "\n";
        }
        std::cout << "wrote " << cfg.out << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"radial Dirac spectral solver"};
    app.require_subcommand(1);

    CommonConfig cfg;

    // --config is resolved before normal parsing so flags override the file
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                apply_config_file(argv[i + 1], cfg);
            } catch (const std::exception& e) {
                std::cerr << "config error: " << e.what() << "\n";
                return 2;
            }
        }
    }
    std::string config_dummy;

    int kappa = -1, n_states = 1;
    std::string mode_name = "idom", dump_prefix, sample_spec;
    auto* solve = app.add_subcommand("solve", "solve one (potential, kappa) problem");
    add_potential_flags(solve, cfg);
    add_common_flags(solve, cfg);
    solve->add_option("--config", config_dummy, "JSON config file");
    solve->add_option("--kappa", kappa, "relativistic angular momentum quantum number");
    solve->add_option("--n-states", n_states, "bound states to report");
    solve->add_option("--mode", mode_name, "idom|sdom|raw");
    solve->add_option("--dump-matrices", dump_prefix, "write A/B/M in the plain-text format");
    solve->add_option("--sample", sample_spec, "sample wavefunctions, rmax[:count]");

    auto* conv = app.add_subcommand("converge", "error vs basis size for one scheme");
    std::string scheme_opt = "allsm", n1_list = "80", n2_list = "20..60:10";
    int conv_states = 5;
    add_potential_flags(conv, cfg);
    add_common_flags(conv, cfg);
    conv->add_option("--config", config_dummy, "JSON config file");
    conv->add_option("--kappa", kappa);
    conv->add_option("--scheme", scheme_opt, "slm|llsm|allsm")
        ->check(CLI::IsMember({"slm", "llsm", "allsm"}));
    conv->add_option("--N1-list", n1_list, "comma list or lo..hi:step");
    conv->add_option("--N2-list", n2_list, "comma list or lo..hi:step");
    conv->add_option("--states", conv_states, "states in the max-error metric");

    auto* poll = app.add_subcommand("pollution", "DOF-mismatch spurious-state table");
    int n_upper = 60;
    std::string k_list = "30,45,60,90", poll_mode = "raw";
    double classify_tol = 1e-3;
    add_potential_flags(poll, cfg);
    add_common_flags(poll, cfg);
    poll->add_option("--config", config_dummy, "JSON config file");
    poll->add_option("--kappa", kappa);
    poll->add_option("--n-upper", n_upper);
    poll->add_option("--k-lower", k_list, "comma list or lo..hi:step");
    poll->add_option("--mode", poll_mode, "raw|idom");
    poll->add_option("--classify-tol", classify_tol, "relative oracle tolerance");

    auto* comp = app.add_subcommand("compare-operators", "idom vs sdom harmonic spectra");
    std::string comp_N = "30,50,70";
    add_common_flags(comp, cfg);
    comp->add_option("--config", config_dummy, "JSON config file");
    comp->add_option("--kappa", kappa);
    comp->add_option("--N", comp_N, "sdom basis sizes");
    comp->add_option("--k", cfg.k_harm, "harmonic force constant");

    auto* reso = app.add_subcommand("resolution", "converged-eigenvalue counting");
    std::string reso_basis = "legendre", dof_list = "100,150,200", L_list = "30";
    double reso_tol = 1e-6;
    add_common_flags(reso, cfg);
    reso->add_option("--config", config_dummy, "JSON config file");
    reso->add_option("--basis", reso_basis, "legendre|laguerre")
        ->check(CLI::IsMember({"legendre", "laguerre"}));
    reso->add_option("--dof", dof_list, "comma list or lo..hi:step");
    reso->add_option("--L-list", L_list, "truncation radii, comma list");
    reso->add_option("--tol", reso_tol, "relative match tolerance");

    auto* crit = app.add_subcommand("critical-lambda", "Yukawa critical screening search");
    double crit_V0 = 1.0, crit_lo = 1.0, crit_hi = 1.4;
    add_common_flags(crit, cfg);
    crit->add_option("--config", config_dummy, "JSON config file");
    crit->add_option("--V0", crit_V0);
    crit->add_option("--kappa", kappa);
    crit->add_option("--lo", crit_lo, "bracket lower edge");
    crit->add_option("--hi", crit_hi, "bracket upper edge");

    auto* bench = app.add_subcommand("bench", "benchmark tables");
    std::string table = "hellmann", R_list_opt;
    add_common_flags(bench, cfg);
    bench->add_option("--config", config_dummy, "JSON config file");
    bench->add_option("--table", table, "hellmann|morse|gaussian|harmonic")
        ->check(CLI::IsMember({"hellmann", "morse", "gaussian", "harmonic"}));
    bench->add_option("--R-list", R_list_opt, "Gaussian R per Z, comma list (Bohr)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (solve->parsed())
            return run_solve(cfg, kappa, n_states, mode_name, dump_prefix, sample_spec);

        StudyOptions opt = build_options(cfg);
        if (conv->parsed()) {
            Scheme scheme = scheme_opt == "slm" ? Scheme::slm
                            : scheme_opt == "llsm" ? Scheme::llsm
                                                   : Scheme::allsm;
            Potential pot = build_potential(cfg);
            StudyReport report = convergence_study(pot, kappa, scheme, parse_int_list(n1_list),
                                                   parse_int_list(n2_list), conv_states, opt);
            write_report(report, potential_name(pot), cfg);
            return report.failed_checks.empty() ? 0 : 3;
        }
        if (poll->parsed()) {
            Potential pot = build_potential(cfg);
            opt.classify_rel_tol = classify_tol;
            OperatorMode mode = poll_mode == "idom" ? OperatorMode::idom : OperatorMode::raw;
            StudyReport report =
                pollution_study(pot, kappa, n_upper, parse_int_list(k_list), mode, opt);
            write_report(report, potential_name(pot), cfg);
            return report.failed_checks.empty() ? 0 : 3;
        }
        if (comp->parsed()) {
            StudyReport report = operator_comparison(cfg.k_harm, kappa, parse_int_list(comp_N), opt);
            write_report(report, "harmonic", cfg);
            return report.failed_checks.empty() ? 0 : 3;
        }
        if (reso->parsed()) {
            std::vector<double> Ls;
            for (int v : parse_int_list(L_list)) Ls.push_back(v);
            StudyReport report = resolution_count(
                reso_basis == "legendre" ? ResolutionBasis::legendre_truncated
                                         : ResolutionBasis::laguerre,
                parse_int_list(dof_list), Ls, reso_tol, opt);
            write_report(report, "coulomb", cfg);
            return report.failed_checks.empty() ? 0 : 3;
        }
        if (crit->parsed()) {
            CriticalScreeningResult res = critical_screening(crit_V0, kappa, crit_lo, crit_hi, opt);
            std::cout << "lambda_crit = " << format_g17(res.lambda_crit)
                      << "  E_gs = " << format_g17(res.binding_at_crit) << "\n";
            write_report(res.report, "yukawa", cfg);
            return 0;
        }
        if (bench->parsed()) {
            GaussianBenchParams gp;
            if (!R_list_opt.empty()) {
                gp.R_list.clear();
                std::stringstream ss(R_list_opt);
                std::string item;
                while (std::getline(ss, item, ',')) gp.R_list.push_back(std::stod(item));
            }
            StudyReport report = benchmark_tables(parse_bench_table(table), opt, gp);
            write_report(report, table, cfg);
            return report.failed_checks.empty() ? 0 : 3;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
