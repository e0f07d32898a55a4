#ifndef RDIRAC_ADAPTIVE_HPP
#define RDIRAC_ADAPTIVE_HPP

#include <span>
#include <vector>

#include "rdirac/eigensolve.hpp"

namespace rdirac {

struct AdaptiveConfig {
    double nu = 2.0;      // expansion factor > 1
    double beta0 = 1.0;   // initial scaling
    double beta_min = 1e-4;
    double beta_max = 1e5;
    int mode_index = 1;   // target eigenmode, 1-based among bound states
    bool physics_seed = false; // seed beta0 = 2 sqrt(-2 E_nonrel) for Coulomb-like potentials
    void validate() const;
};

/// f = sqrt( sum_{l=N-M+1..N} gamma_l c_l^2 / sum_{l=0..N} gamma_l c_l^2 ),
/// the relative energy content of the high-frequency tail.
double frequency_indicator(std::span<const double> c, std::span<const double> gamma, int M);

/// Same with unit weights (orthonormal basis convention).
double frequency_indicator(std::span<const double> c, int M);

/// Indicator of the best-L2-fit of the model function sin(r) e^{-r} in the
/// beta = 1 scaled-Laguerre basis of size N+1; the stopping benchmark of the
/// adaptive walk.
double reference_threshold(int N = 80);

/// Spectral coefficients of that model-function fit (test hook; has the
/// closed form Im[(p-1)^l / p^{l+1}], p = 3/2 - i).
std::vector<double> model_function_coefficients(int N);

enum class StopReason { threshold_met, indicator_increase, bound_hit, initial_ok };

std::string stop_reason_name(StopReason r);

struct AdaptiveStep {
    double beta;
    double indicator;
    double q; // accepted direction factor (0 for the initial solve)
};

struct AdaptiveTrace {
    std::vector<AdaptiveStep> steps; // accepted steps, indicator non-increasing
    double final_beta = 0.0;
    StopReason stop_reason = StopReason::initial_ok;
    double threshold = 0.0; // nu * f0 actually used
};

struct AdaptProblem {
    GlobalBasisSpec basis;  // template; beta is overwritten by the walk
    Potential potential;
    int kappa = -1;
    PhysicsConstants consts;
    OperatorMode mode = OperatorMode::idom;
    int n_states = 1;       // bound states to retain in the final solve
    QuadBudgets budgets;
};

struct AdaptResult {
    double beta;
    EigenSolution solution; // solve at the final beta
    AdaptiveTrace trace;
};

/// Directional geometric search for the Laguerre scaling: solve at beta0,
/// accept immediately if f <= nu f0, otherwise probe beta0/nu and beta0*nu,
/// walk in the better direction while the indicator does not increase and
/// the bounds hold. The indicator is evaluated on the orthonormal
/// scaled-Laguerre coefficients of the upper component of the target mode.
AdaptResult adapt_beta(const AdaptProblem& problem, const AdaptiveConfig& cfg = {});

/// Orthonormal-Laguerre coefficients c_0..c_N2 of the upper component's far
/// field (bridge plus difference block) of one eigenvector.
std::vector<double> upper_tail_coefficients(const SpinorLayout& layout,
                                            const Eigen::VectorXd& coeffs);

} // namespace rdirac

#endif
