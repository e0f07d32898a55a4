#include "rdirac/basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rdirac/specfun.hpp"

namespace rdirac {

namespace {

const double glof_gamma = 4.0;
const double glof_mu = 2.0;
// t = -(gamma+1) log(x) with gamma = 4
const double log_map_rate = glof_gamma + 1.0;

// Upper end of the log-mapped grid: the slowest-decaying assembled integrand
// is e^{-3t/5} times a polynomial of degree ~2 N1, whose peak sits near
// t = 10 N1 / 3; extend until the envelope has fallen 24 decades past it.
double log_grid_tmax(int N1) {
    double degree = 2.0 * N1 + 4.0;
    double peak = 5.0 * degree / 3.0;
    double T = std::max(130.0, peak + 10.0);
    while (-0.6 * (T - peak) + degree * std::log(T / peak) > -55.0) T += 5.0;
    return T;
}

void legendre_sequences(int n_max, double x, std::vector<double>& val, std::vector<double>& der) {
    val.assign(n_max + 1, 0.0);
    der.assign(n_max + 1, 0.0);
    val[0] = 1.0;
    if (n_max >= 1) {
        val[1] = x;
        der[1] = 1.0;
    }
    for (int n = 1; n < n_max; ++n) {
        val[n + 1] = ((2.0 * n + 1.0) * x * val[n] - n * val[n - 1]) / (n + 1.0);
        der[n + 1] = der[n - 1] + (2.0 * n + 1.0) * val[n];
    }
}

} // namespace

int GlobalBasisSpec::size() const {
    switch (mode) {
        case BasisMode::allsm: return N1 + N2 + 1;
        case BasisMode::laguerre_only: return N2;
        case BasisMode::legendre_truncated: return N1;
    }
    return 0;
}

void GlobalBasisSpec::validate() const {
    if (!(L > 0.0)) throw std::domain_error("basis: interface L must be > 0");
    if (N1 < 0 || N2 < 0) throw std::domain_error("basis: block sizes must be >= 0");
    switch (mode) {
        case BasisMode::allsm:
            if (!(beta > 0.0)) throw std::domain_error("basis: beta must be > 0");
            break;
        case BasisMode::laguerre_only:
            if (N1 != 0) throw std::domain_error("basis: laguerre_only requires N1 = 0");
            if (!(beta > 0.0)) throw std::domain_error("basis: beta must be > 0");
            if (N2 < 1) throw std::domain_error("basis: laguerre_only requires N2 >= 1");
            break;
        case BasisMode::legendre_truncated:
            if (N1 < 1) throw std::domain_error("basis: legendre_truncated requires N1 >= 1");
            break;
    }
    if (size() < 1) throw std::domain_error("basis: empty basis");
}

void eval_basis_all(const GlobalBasisSpec& spec, double r,
                    std::vector<double>& val, std::vector<double>& der) {
    spec.validate();
    if (!(r >= 0.0) || !std::isfinite(r)) throw std::domain_error("eval_basis: r must be finite and >= 0");
    int N = spec.size();
    val.assign(N, 0.0);
    der.assign(N, 0.0);

    if (spec.mode == BasisMode::legendre_truncated) {
        if (r > spec.L) throw std::domain_error("eval_basis: r outside [0, L] for truncated basis");
        double x = 2.0 * r / spec.L - 1.0;
        std::vector<double> p, dp;
        legendre_sequences(spec.N1 + 1, x, p, dp);
        double jac = 2.0 / spec.L;
        for (int k = 1; k <= spec.N1; ++k) {
            val[k - 1] = p[k + 1] - p[k - 1];
            der[k - 1] = (dp[k + 1] - dp[k - 1]) * jac;
        }
        return;
    }

    if (spec.mode == BasisMode::laguerre_only) {
        std::vector<double> lv, ld;
        scaled_laguerre_sequence(spec.N2, spec.beta, r, lv, ld);
        const double inv_sqrt2 = 0.70710678118654752;
        for (int k = 1; k <= spec.N2; ++k) {
            val[k - 1] = (lv[k] - lv[k - 1]) * inv_sqrt2;
            der[k - 1] = (ld[k] - ld[k - 1]) * inv_sqrt2;
        }
        return;
    }

    // allsm: indices 1..N1 log-orthogonal block, N1+1..N1+N2 Laguerre block,
    // N the bridging function.
    //
    // Core block: phi_n = sqrt(5/(2L)) * x * (S_n - S_{n-1})(x), x = r/L.
    // The leading x makes the block overlap exactly tridiagonal with unit
    // diagonal; without it the norms of the differences grow geometrically
    // (measured ~5.4^n, with Dirac-image norms ~79^n) and the Galerkin
    // matrices leave double range near n = 160.
    if (r < spec.L) {
        double x = r / spec.L;
        if (spec.N1 > 0 && x > 0.0) {
            std::vector<double> sv, sd;
            glof_sequence(spec.N1, glof_gamma, glof_mu, x, sv, sd);
            double scale = std::sqrt(5.0 / (2.0 * spec.L));
            double jac = 1.0 / spec.L;
            for (int n = 1; n <= spec.N1; ++n) {
                double diff = sv[n] - sv[n - 1];
                double ddiff = sd[n] - sd[n - 1];
                val[n - 1] = scale * x * diff;
                der[n - 1] = scale * (diff + x * ddiff) * jac;
            }
        }
        val[N - 1] = x;
        der[N - 1] = 1.0 / spec.L;
    } else if (r > spec.L) {
        double dr = r - spec.L;
        if (spec.N2 > 0) {
            std::vector<double> lv, ld;
            scaled_laguerre_sequence(spec.N2, spec.beta, dr, lv, ld);
            const double inv_sqrt2 = 0.70710678118654752;
            for (int k = 1; k <= spec.N2; ++k) {
                val[spec.N1 + k - 1] = (lv[k] - lv[k - 1]) * inv_sqrt2;
                der[spec.N1 + k - 1] = (ld[k] - ld[k - 1]) * inv_sqrt2;
            }
        }
        double tail = std::exp(-0.5 * spec.beta * dr);
        val[N - 1] = tail;
        der[N - 1] = -0.5 * spec.beta * tail;
    } else { // r == L: every block function vanishes, the bridge is 1
        val[N - 1] = 1.0;
        der[N - 1] = 1.0 / spec.L; // left-sided slope of the bridge
    }
}

BasisEvaluation eval_basis(const GlobalBasisSpec& spec, int n, double r) {
    if (n < 1 || n > spec.size()) throw std::domain_error("eval_basis: index out of range");
    std::vector<double> val, der;
    eval_basis_all(spec, r, val, der);
    Region region = Region::both;
    if (spec.mode == BasisMode::allsm) {
        if (n <= spec.N1) region = Region::I1;
        else if (n <= spec.N1 + spec.N2) region = Region::I2;
    } else if (spec.mode == BasisMode::legendre_truncated) {
        region = Region::I1;
    }
    return {n, val[n - 1], der[n - 1], region};
}

BasisEvaluation legendre_truncated_basis(double L, int N, int n, double r) {
    GlobalBasisSpec spec;
    spec.L = L;
    spec.N1 = N;
    spec.mode = BasisMode::legendre_truncated;
    if (r < 0.0 || r > L) throw std::domain_error("legendre_truncated_basis: r outside [0, L]");
    return eval_basis(spec, n, r);
}

BasisGrids quadrature_grids(const GlobalBasisSpec& spec, int node_budget_inner,
                            int node_budget_outer) {
    spec.validate();
    if (node_budget_inner < 0 || node_budget_outer < 0)
        throw std::domain_error("quadrature_grids: budgets must be >= 0");

    BasisGrids grids;

    if (spec.mode == BasisMode::legendre_truncated) {
        int count = node_budget_inner > 0 ? node_budget_inner : 2 * spec.N1 + 60;
        QuadratureRule rule = gauss_legendre_rule(count);
        grids.inner.r.resize(rule.count());
        grids.inner.w.resize(rule.count());
        double half = 0.5 * spec.L;
        for (int q = 0; q < rule.count(); ++q) {
            grids.inner.r[q] = half * (rule.nodes[q] + 1.0);
            grids.inner.w[q] = half * rule.weights[q];
        }
        return grids;
    }

    if (spec.mode == BasisMode::allsm && spec.N1 >= 0) {
        int budget = node_budget_inner > 0 ? node_budget_inner : 12 * spec.N1 + 480;
        QuadratureRule rule = log_mapped_composite_rule(budget, log_grid_tmax(spec.N1));
        grids.inner.r.resize(rule.count());
        grids.inner.w.resize(rule.count());
        for (int q = 0; q < rule.count(); ++q) {
            // r = L e^{-t/5}, dr = -(L/5) e^{-t/5} dt
            double t = rule.nodes[q];
            double x = std::exp(-t / log_map_rate);
            grids.inner.r[q] = spec.L * x;
            grids.inner.w[q] = rule.weights[q] * spec.L * x / log_map_rate;
        }
    }

    int count = node_budget_outer > 0 ? node_budget_outer : std::max(64, 3 * (spec.N2 + 2) + 60);
    count = std::min(count, 340);
    QuadratureRule rule = gauss_laguerre_rule(count);
    double offset = spec.mode == BasisMode::laguerre_only ? 0.0 : spec.L;
    grids.outer.r.resize(rule.count());
    grids.outer.w.resize(rule.count());
    for (int q = 0; q < rule.count(); ++q) {
        grids.outer.r[q] = offset + rule.nodes[q] / spec.beta;
        grids.outer.w[q] = rule.lifted_weights[q] / spec.beta;
    }
    return grids;
}

} // namespace rdirac
