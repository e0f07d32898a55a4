#include "rdirac/adaptive.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "rdirac/quadrature.hpp"
#include "rdirac/specfun.hpp"

namespace rdirac {

void AdaptiveConfig::validate() const {
    if (!(nu > 1.0)) throw std::domain_error("adaptive: nu must be > 1");
    if (!(beta_min < beta0 && beta0 < beta_max))
        throw std::domain_error("adaptive: need beta_min < beta0 < beta_max");
    if (mode_index < 1) throw std::domain_error("adaptive: mode_index must be >= 1");
}

double frequency_indicator(std::span<const double> c, std::span<const double> gamma, int M) {
    int n = static_cast<int>(c.size());
    if (n < 1) throw std::domain_error("frequency_indicator: empty coefficients");
    if (!gamma.empty() && static_cast<int>(gamma.size()) != n)
        throw std::domain_error("frequency_indicator: weight/coefficient size mismatch");
    if (M < 1 || M > n) throw std::domain_error("frequency_indicator: M out of range");
    double total = 0.0, tail = 0.0;
    for (int l = 0; l < n; ++l) {
        double g = gamma.empty() ? 1.0 : gamma[l];
        if (!(g > 0.0)) throw std::domain_error("frequency_indicator: weights must be > 0");
        double term = g * c[l] * c[l];
        total += term;
        if (l >= n - M) tail += term;
    }
    if (total == 0.0) throw std::domain_error("frequency_indicator: all-zero coefficients");
    return std::sqrt(tail / total);
}

double frequency_indicator(std::span<const double> c, int M) {
    return frequency_indicator(c, std::span<const double>{}, M);
}

std::vector<double> model_function_coefficients(int N) {
    if (N < 1) throw std::domain_error("model_function_coefficients: N must be >= 1");
    // c_l = int_0^inf sin(r) e^{-r} Lhat_l(r) dr, beta = 1
    QuadratureRule rule = gauss_laguerre_rule(std::min(2 * N + 60, 340));
    std::vector<double> c(N + 1, 0.0);
    std::vector<double> lv, ld;
    for (int q = 0; q < rule.count(); ++q) {
        double r = rule.nodes[q];
        laguerre_enveloped_sequences(N, r, lv, ld);
        double factor = rule.weights[q] * std::sin(r); // e^{-r} carried by the rule
        for (int l = 0; l <= N; ++l) c[l] += factor * lv[l];
    }
    return c;
}

double reference_threshold(int N) {
    if (N < 10) throw std::domain_error("reference_threshold: N must be >= 10");
    std::vector<double> c = model_function_coefficients(N);
    return frequency_indicator(c, N / 3);
}

std::string stop_reason_name(StopReason r) {
    switch (r) {
        case StopReason::threshold_met: return "threshold-met";
        case StopReason::indicator_increase: return "indicator-increase";
        case StopReason::bound_hit: return "bound-hit";
        case StopReason::initial_ok: return "initial-ok";
    }
    return "?";
}

std::vector<double> upper_tail_coefficients(const SpinorLayout& layout,
                                            const Eigen::VectorXd& coeffs) {
    const GlobalBasisSpec& spec = layout.upper_spec;
    if (spec.N2 < 1) throw std::domain_error("upper_tail_coefficients: no Laguerre block");
    if (coeffs.size() != layout.dim())
        throw std::domain_error("upper_tail_coefficients: coefficient size mismatch");
    int N2 = spec.N2;
    // basis stores (Lhat_k - Lhat_{k-1})/sqrt(2); undo the normalization so
    // b[k] multiplies the plain difference
    const double inv_sqrt2 = 0.70710678118654752;
    std::vector<double> b(N2 + 1, 0.0);
    for (int k = 1; k <= N2; ++k) b[k] = coeffs[spec.N1 + k - 1] * inv_sqrt2;
    double bridge = 0.0;
    if (spec.mode == BasisMode::allsm) bridge = coeffs[spec.size() - 1] / std::sqrt(spec.beta);

    // Regroup onto the orthonormal family: sum_k b_k (Lhat_k - Lhat_{k-1})
    // + bridge Lhat_0  =  sum_j c_j Lhat_j.
    std::vector<double> c(N2 + 1, 0.0);
    c[0] = bridge - b[1];
    for (int j = 1; j < N2; ++j) c[j] = b[j] - b[j + 1];
    c[N2] = b[N2];
    return c;
}

namespace {

struct ProbeResult {
    bool resolved = false;
    double f = std::numeric_limits<double>::infinity();
    EigenSolution solution;
};

} // namespace

AdaptResult adapt_beta(const AdaptProblem& problem, const AdaptiveConfig& cfg) {
    cfg.validate();
    GlobalBasisSpec spec = problem.basis;
    if (spec.mode == BasisMode::legendre_truncated)
        throw std::domain_error("adapt_beta: truncated basis has no scaling parameter");
    if (spec.N2 < 9)
        throw std::domain_error("adapt_beta: N2 >= 9 required so the M = N/3 tail is meaningful");

    double beta0 = cfg.beta0;
    if (cfg.physics_seed) {
        double zeff = coulomb_strength(problem.potential);
        if (zeff > 0.0) {
            int n_eff = lowest_principal(problem.kappa) + cfg.mode_index - 1;
            beta0 = 2.0 * zeff / n_eff; // 2 sqrt(-2 E_nonrel)
            beta0 = std::clamp(beta0, cfg.beta_min * cfg.nu, cfg.beta_max / cfg.nu);
        }
    }

    const int count = std::max(problem.n_states, cfg.mode_index);
    std::map<double, ProbeResult> cache;
    auto solve_at = [&](double beta) -> const ProbeResult& {
        auto it = cache.find(beta);
        if (it != cache.end()) return it->second;
        ProbeResult pr;
        GlobalBasisSpec s = spec;
        s.beta = beta;
        AssembledSystem sys =
            assemble(balanced_layout(s), problem.potential, problem.kappa, problem.consts,
                     problem.mode, problem.budgets);
        EigenSolution sol = solve_gep(sys, count);
        if (static_cast<int>(sol.entries.size()) >= cfg.mode_index) {
            const Eigen::VectorXd& vec = sol.entries[cfg.mode_index - 1].coefficients;
            std::vector<double> c = upper_tail_coefficients(sys.layout, vec);
            pr.resolved = true;
            // a state that carries no far-field mass is optimally represented
            // at any scaling; without this guard the indicator is a ratio of
            // rounding noise and the walk drifts arbitrarily
            double tail_mass = 0.0;
            for (double x : c) tail_mass += x * x;
            pr.f = tail_mass < 1e-24 ? 0.0 : frequency_indicator(c, spec.N2 / 3);
            pr.solution = std::move(sol);
        }
        return cache.emplace(beta, std::move(pr)).first->second;
    };

    AdaptResult out;
    AdaptiveTrace& trace = out.trace;
    double f0 = reference_threshold(spec.N2);
    double threshold = cfg.nu * f0;
    trace.threshold = threshold;

    const ProbeResult& first = solve_at(beta0);
    if (!first.resolved)
        throw std::runtime_error("adapt_beta: target mode not resolvable at beta0");
    double beta = beta0;
    double f = first.f;
    trace.steps.push_back({beta, f, 0.0});

    if (f <= threshold) {
        trace.final_beta = beta;
        trace.stop_reason = StopReason::initial_ok;
        out.beta = beta;
        out.solution = first.solution;
        return out;
    }

    const ProbeResult& down = solve_at(beta / cfg.nu);
    const ProbeResult& up = solve_at(beta * cfg.nu);
    double q = up.f < down.f ? cfg.nu : 1.0 / cfg.nu;

    trace.stop_reason = StopReason::indicator_increase;
    for (;;) {
        double candidate = q * beta;
        if (candidate < cfg.beta_min || candidate > cfg.beta_max) {
            trace.stop_reason = StopReason::bound_hit;
            break;
        }
        const ProbeResult& probe = solve_at(candidate);
        if (!probe.resolved) { // mode unbound or lost along the walk
            trace.stop_reason = StopReason::bound_hit;
            break;
        }
        if (probe.f > f) {
            trace.stop_reason = StopReason::indicator_increase;
            break;
        }
        beta = candidate;
        f = probe.f;
        trace.steps.push_back({beta, f, q});
        if (f <= threshold) {
            trace.stop_reason = StopReason::threshold_met;
            break;
        }
    }

    trace.final_beta = beta;
    out.beta = beta;
    out.solution = solve_at(beta).solution;
    return out;
}

} // namespace rdirac
