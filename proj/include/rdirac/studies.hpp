#ifndef RDIRAC_STUDIES_HPP
#define RDIRAC_STUDIES_HPP

#include <utility>
#include <vector>

#include "rdirac/report_io.hpp"

namespace rdirac {

/// Discretization schemes compared in the convergence studies: Laguerre-only
/// (slm), fixed-scaling log-Laguerre (llsm), and the adaptive composite
/// basis (allsm).
enum class Scheme { slm, llsm, allsm };

std::string scheme_name(Scheme s);

struct StudyOptions {
    PhysicsConstants consts;
    double L = 1.0;              // interface radius for composite bases
    AdaptiveConfig adaptive;     // walk parameters for adaptive runs
    double fixed_beta = 1.0;     // scaling for non-adaptive runs
    /// true: every reported state gets its own adaptive scaling; false: one
    /// walk targeting adaptive.mode_index fixes beta for the whole solve.
    bool per_state_adapt = true;
    QuadBudgets budgets;
    int jobs = 0;                // 0 = hardware concurrency
    int reference_N1 = 120;      // enriched internal-reference basis
    int reference_N2 = 60;
    double classify_rel_tol = 1e-6;
    double classify_abs_floor = 0.0;
};

/// Per-state binding energies of an enriched adaptive run, used as the
/// comparison reference where no closed form exists.
std::vector<double> internal_reference_energies(const Potential& pot, int kappa, int n_states,
                                                const StudyOptions& opt);

/// Closed-form or internal-reference energies for the first n_states of a
/// given kappa.
std::vector<double> oracle_energies(const Potential& pot, int kappa, int n_states,
                                    const StudyOptions& opt);

/// Maximum relative error among the first n_states eigenvalues, per (N1,N2)
/// grid point and scheme.
StudyReport convergence_study(const Potential& pot, int kappa, Scheme scheme,
                              const std::vector<int>& N1_list, const std::vector<int>& N2_list,
                              int n_states, const StudyOptions& opt);

/// First-10 spectrum tables under upper/lower DOF mismatch with spurious
/// flags per entry.
StudyReport pollution_study(const Potential& pot, int kappa, int n_upper,
                            const std::vector<int>& k_lower_list, OperatorMode mode,
                            const StudyOptions& opt);

/// Side-by-side idom vs sdom spectra for the harmonic oscillator.
StudyReport operator_comparison(double k_harmonic, int kappa, const std::vector<int>& N_list,
                                const StudyOptions& opt);

enum class ResolutionBasis { laguerre, legendre_truncated };

/// Count of hydrogen eigenvalues matching the closed form within tol, per
/// DOF (and per truncation radius L for the truncated basis).
StudyReport resolution_count(ResolutionBasis basis, const std::vector<int>& dof_list,
                             const std::vector<double>& L_list, double tol,
                             const StudyOptions& opt);

struct CriticalScreeningResult {
    double lambda_crit;
    double binding_at_crit;
    StudyReport report;
};

/// Bisection for the screening parameter where the Yukawa ground state
/// reaches the continuum; beta is re-adapted at every lambda.
CriticalScreeningResult critical_screening(double V0, int kappa, double lambda_lo,
                                           double lambda_hi, const StudyOptions& opt);

enum class BenchTable { gaussian, morse, hellmann, harmonic_kappa };

BenchTable parse_bench_table(const std::string& name);

struct GaussianBenchParams {
    std::vector<double> Z_list = {60, 80, 100, 120, 137};
    /// Nuclear size parameters per Z, Bohr; empty selects the built-in
    /// mass-formula parameterization (see gaussian_R_default).
    std::vector<double> R_list;
};

/// Default Gaussian nuclear size parameter: R = sqrt(2/3) * r_rms with
/// r_rms = 0.836 A^{1/3} + 0.570 fm and the mass-number fit
/// A = 0.004467 Z^2 + 2.163 Z - 1.168 rounded to the nearest integer.
double gaussian_R_default(double Z);

StudyReport benchmark_tables(BenchTable table, const StudyOptions& opt,
                             const GaussianBenchParams& gaussian_params = {});

/// Weighted-L2 projection errors of u(x) = x^s onto the (4,2) log-orthogonal
/// basis for each size in N_list (convergence-rate verification hook).
std::vector<double> glof_projection_errors(double s, const std::vector<int>& N_list);

} // namespace rdirac

#endif
