#include "rdirac/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace rdirac {

std::string state_class_name(StateClass c) {
    switch (c) {
        case StateClass::unclassified: return "unclassified";
        case StateClass::physical: return "physical";
        case StateClass::spurious: return "spurious";
        case StateClass::continuum_artifact: return "continuum-artifact";
    }
    return "?";
}

namespace {

struct RawPairs {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};

// P v = lambda Q v with Q symmetric positive semidefinite up to rounding.
// The pencil is equilibrated by D = diag(Q)^{-1/2}, then reduced through the
// eigendecomposition of the equilibrated Q with a relative spectral cut
// (canonical orthogonalization). For the inverse-operator pair Q = A the cut
// discards directions whose Dirac images exceed the retained band by ~1e13:
// those describe energies far outside the mass gap and cannot carry bound
// states, while keeping them makes the reduction numerically singular once
// the log-oscillatory block is large.
RawPairs solve_pair(const Eigen::MatrixXd& P, const Eigen::MatrixXd& Q) {
    const Eigen::Index n = P.rows();
    const double spectral_cut = 1e-13;

    Eigen::VectorXd d(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        double qii = Q(i, i);
        if (!(qii > 0.0)) throw std::runtime_error("solve_gep: non-positive diagonal in Q");
        d[i] = 1.0 / std::sqrt(qii);
    }
    Eigen::MatrixXd Ps = d.asDiagonal() * (0.5 * (P + P.transpose())) * d.asDiagonal();
    Eigen::MatrixXd Qs = d.asDiagonal() * (0.5 * (Q + Q.transpose())) * d.asDiagonal();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eq(Qs);
    if (eq.info() != Eigen::Success)
        throw std::runtime_error("solve_gep: eigendecomposition of the definite matrix failed");
    double lam_max = eq.eigenvalues().maxCoeff();
    if (!(lam_max > 0.0)) throw std::runtime_error("solve_gep: definite matrix has no positive spectrum");

    std::vector<Eigen::Index> keep;
    for (Eigen::Index k = 0; k < n; ++k)
        if (eq.eigenvalues()[k] > spectral_cut * lam_max) keep.push_back(k);
    const Eigen::Index m = static_cast<Eigen::Index>(keep.size());
    if (m == 0) throw std::runtime_error("solve_gep: definite matrix numerically zero");

    Eigen::MatrixXd W(n, m); // Qs-orthonormal columns
    for (Eigen::Index j = 0; j < m; ++j)
        W.col(j) = eq.eigenvectors().col(keep[j]) / std::sqrt(eq.eigenvalues()[keep[j]]);

    Eigen::MatrixXd C = W.transpose() * Ps * W;
    C = 0.5 * (C + C.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ec(C);
    if (ec.info() != Eigen::Success)
        throw std::runtime_error("solve_gep: reduced eigendecomposition failed");

    RawPairs out;
    out.values = ec.eigenvalues();
    out.vectors = d.asDiagonal() * (W * ec.eigenvectors());
    return out;
}

// relative eigenpair residual ||P c - lambda Q c|| / (||P c|| + |lambda| ||Q c||)
double pair_residual(const Eigen::MatrixXd& P, const Eigen::MatrixXd& Q, double lambda,
                     const Eigen::VectorXd& c) {
    Eigen::VectorXd Pc = P * c;
    Eigen::VectorXd Qc = Q * c;
    double denom = Pc.norm() + std::abs(lambda) * Qc.norm();
    if (denom == 0.0) return std::numeric_limits<double>::infinity();
    return (Pc - lambda * Qc).norm() / denom;
}

// Overlap-normalize and fix the sign so F(r) > 0 as r -> 0+.
void normalize_entry(const AssembledSystem& sys, EigenEntry& e) {
    double nrm2 = e.coefficients.dot(sys.overlap * e.coefficients);
    if (!(nrm2 > 0.0)) throw std::runtime_error("normalize: degenerate eigenvector norm");
    e.coefficients /= std::sqrt(nrm2);

    const GlobalBasisSpec& spec = sys.layout.upper_spec.size() > 0 ? sys.layout.upper_spec
                                                                   : sys.layout.lower_spec;
    double scale = spec.mode == BasisMode::laguerre_only ? 1.0 / spec.beta : spec.L;
    for (double frac : {1e-3, 1e-2, 0.1, 0.5}) {
        auto [F, G] = eval_components(sys, e.coefficients, frac * scale);
        double probe = sys.layout.n_upper() > 0 ? F : G;
        if (std::abs(probe) > 1e-300) {
            if (probe < 0.0) e.coefficients = -e.coefficients;
            return;
        }
    }
}

} // namespace

std::pair<double, double> eval_components(const AssembledSystem& sys,
                                          const Eigen::VectorXd& coeffs, double r) {
    const int nu = sys.layout.n_upper();
    const int nl = sys.layout.k_lower();
    double F = 0.0, G = 0.0;
    std::vector<double> val, der;
    if (nu > 0) {
        eval_basis_all(sys.layout.upper_spec, r, val, der);
        for (int j = 0; j < nu; ++j) F += coeffs[j] * val[j];
    }
    if (nl > 0) {
        eval_basis_all(sys.layout.lower_spec, r, val, der);
        for (int j = 0; j < nl; ++j) G += coeffs[nu + j] * val[j];
    }
    return {F, G};
}

namespace {

// Rayleigh quotient c^T P c / c^T Q c accumulated in extended precision; the
// quotient is stationary at eigenvectors, so it recovers a couple of orders
// over the reduced-solve eigenvalue when the reduction worked near its
// conditioning limit.
double rayleigh_quotient(const Eigen::MatrixXd& P, const Eigen::MatrixXd& Q,
                         const Eigen::VectorXd& c) {
    long double num = 0.0L, den = 0.0L;
    const Eigen::Index n = c.size();
    for (Eigen::Index i = 0; i < n; ++i) {
        long double pi = 0.0L, qi = 0.0L;
        for (Eigen::Index j = 0; j < n; ++j) {
            pi += static_cast<long double>(P(i, j)) * c[j];
            qi += static_cast<long double>(Q(i, j)) * c[j];
        }
        num += c[i] * pi;
        den += c[i] * qi;
    }
    if (den == 0.0L) throw std::runtime_error("rayleigh_quotient: zero norm");
    return static_cast<double>(num / den);
}

} // namespace

EigenSolution solve_gep(const AssembledSystem& sys, int count) {
    if (count < 0) throw std::domain_error("solve_gep: count must be >= 0");
    if (sys.layout.dim() > 2000) throw std::domain_error("solve_gep: dimension cap exceeded");
    const double mc2 = sys.consts.mass * sys.consts.c * sys.consts.c;
    // lower margin keeps clear of the negative continuum edge; the upper
    // margin must stay far below physical binding scales (near-threshold
    // Yukawa states live at |E| ~ 1e-7, and for heavy reduced masses
    // 1e-8 mc^2 alone would already swallow molecular ground states)
    const double delta = 1e-8 * mc2;
    const double delta_hi = 1e-12 * mc2;
    // confining potentials have their discrete spectrum above +mc^2, not in
    // the mass gap of a vanishing tail
    const bool confining = std::holds_alternative<Harmonic>(sys.potential);

    EigenSolution sol;
    sol.mode = sys.mode;

    const Eigen::MatrixXd* P = nullptr;
    const Eigen::MatrixXd* Q = nullptr;
    switch (sys.mode) {
        case OperatorMode::idom: P = &sys.B; Q = &sys.A; break;
        case OperatorMode::sdom: P = &sys.A; Q = &sys.overlap; break;
        case OperatorMode::raw:  P = &sys.B; Q = &sys.overlap; break;
    }
    RawPairs pairs = solve_pair(*P, *Q);

    // nonnegative confining wells have no states below +mc^2; anything a
    // discretization puts deep in the gap there is Klein-region junk
    const double window_lo = confining ? -delta : -2.0 * mc2 + delta;
    const double window_hi = confining ? mc2 : -delta_hi;

    struct Candidate { double binding; int idx; };
    std::vector<Candidate> kept;
    for (Eigen::Index k = 0; k < pairs.values.size(); ++k) {
        double lam = pairs.values[k];
        double binding;
        switch (sys.mode) {
            case OperatorMode::idom: {
                if (!(lam > 0.0)) continue;
                binding = 1.0 / lam - mc2;
                break;
            }
            case OperatorMode::sdom: {
                if (!(lam > 0.0)) continue;
                binding = std::sqrt(lam) - mc2;
                break;
            }
            case OperatorMode::raw: {
                binding = lam - mc2;
                break;
            }
        }
        if (sys.mode == OperatorMode::sdom) {
            // keep everything below the positive continuum edge plus a margin;
            // the folded negative branch lands here too, deliberately
            if (binding >= mc2) continue;
        } else {
            if (!(binding > window_lo && binding < window_hi)) continue;
        }
        kept.push_back({binding, static_cast<int>(k)});
    }
    std::sort(kept.begin(), kept.end(),
              [](const Candidate& a, const Candidate& b) { return a.binding < b.binding; });
    if (static_cast<int>(kept.size()) > count) kept.resize(count);

    // idom and raw refine against the rest-mass-shifted operator so the
    // binding never passes through the mc^2 cancellation; sdom refines E^2.
    const Eigen::MatrixXd& Pw = sys.mode == OperatorMode::sdom ? sys.A : sys.B_shift;

    for (const Candidate& c : kept) {
        EigenEntry e;
        e.coefficients = pairs.vectors.col(c.idx);

        // Rayleigh quotient on the well-scaled (operator, overlap) pair,
        // then guarded inverse-iteration steps: the quotient is quadratic in
        // the eigenvector error, each accepted step squares that error again.
        double lam = rayleigh_quotient(Pw, sys.overlap, e.coefficients);
        double res = pair_residual(Pw, sys.overlap, lam, e.coefficients);
        for (int step = 0; step < 2 && res > 1e-14; ++step) {
            Eigen::MatrixXd shifted = Pw - lam * sys.overlap;
            Eigen::PartialPivLU<Eigen::MatrixXd> lu(shifted);
            Eigen::VectorXd z = lu.solve(sys.overlap * e.coefficients);
            double m2 = z.dot(sys.overlap * z);
            if (!(m2 > 0.0) || !z.allFinite()) break;
            z /= std::sqrt(m2);
            double lam_z = rayleigh_quotient(Pw, sys.overlap, z);
            double res_z = pair_residual(Pw, sys.overlap, lam_z, z);
            if (res_z >= res) break;
            e.coefficients = std::move(z);
            lam = lam_z;
            res = res_z;
        }

        if (sys.mode == OperatorMode::sdom) {
            lam = std::max(lam, 0.0);
            e.binding_energy = std::sqrt(lam) - mc2;
            e.raw_eigenvalue = lam;
        } else {
            e.binding_energy = lam; // eigenvalue of D - m c^2 is the binding
            e.raw_eigenvalue = sys.mode == OperatorMode::idom ? 1.0 / (lam + mc2) : lam + mc2;
        }
        e.residual = res;
        e.branch_ambiguous = sys.mode == OperatorMode::sdom;
        normalize_entry(sys, e);
        sol.entries.push_back(std::move(e));
    }
    return sol;
}

void classify_states(EigenSolution& sol, const AssembledSystem& sys, const ClassifyOptions& opt) {
    const double mc2 = sys.consts.mass * sys.consts.c * sys.consts.c;

    std::vector<bool> consumed;
    if (opt.oracle) consumed.assign(opt.oracle->size(), false);

    std::optional<EigenSolution> enriched;
    auto enriched_energies = [&]() -> const EigenSolution& {
        if (!enriched) {
            SpinorLayout big = sys.layout;
            if (big.upper_spec.mode == BasisMode::legendre_truncated) {
                big.upper_spec.N1 += opt.enrich_amount;
                big.lower_spec.N1 += opt.enrich_amount;
            } else {
                big.upper_spec.N2 += opt.enrich_amount;
                big.lower_spec.N2 += opt.enrich_amount;
            }
            AssembledSystem bigsys = assemble(big, sys.potential, sys.kappa, sys.consts, sys.mode);
            enriched = solve_gep(bigsys, static_cast<int>(sol.entries.size()) + opt.enrich_amount);
        }
        return *enriched;
    };

    for (EigenEntry& e : sol.entries) {
        double E = e.binding_energy;
        if (opt.oracle && !opt.oracle->empty()) {
            int best = -1;
            double best_diff = std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < opt.oracle->size(); ++k) {
                if (consumed[k]) continue;
                double diff = std::abs(E - (*opt.oracle)[k]);
                if (diff < best_diff) {
                    best_diff = diff;
                    best = static_cast<int>(k);
                }
            }
            if (best >= 0) {
                double ref = std::abs((*opt.oracle)[best]);
                double tol = std::max(opt.oracle_rel_tol * ref, opt.oracle_abs_floor);
                if (best_diff <= tol) {
                    consumed[best] = true;
                    e.classification = StateClass::physical;
                    continue;
                }
            }
        }
        if (opt.enrichment_check) {
            bool stable = false;
            for (const EigenEntry& ref : enriched_energies().entries) {
                if (std::abs(ref.binding_energy - E) <=
                    opt.stability_rel_tol * std::max(std::abs(E), 1e-12)) {
                    stable = true;
                    break;
                }
            }
            if (stable) {
                e.classification = StateClass::physical;
                continue;
            }
        }
        bool in_gap = E > -2.0 * mc2 && E < 0.0;
        e.classification = in_gap ? StateClass::spurious : StateClass::continuum_artifact;
    }
}

RadialSamples normalize_and_sample(const AssembledSystem& sys, const EigenEntry& entry,
                                   const std::vector<double>& r_grid) {
    if (entry.coefficients.size() != sys.layout.dim())
        throw std::domain_error("normalize_and_sample: coefficient/layout mismatch");
    EigenEntry copy = entry;
    normalize_entry(sys, copy);
    RadialSamples out;
    out.r = r_grid;
    out.F.resize(r_grid.size());
    out.G.resize(r_grid.size());
    for (std::size_t i = 0; i < r_grid.size(); ++i) {
        auto [F, G] = eval_components(sys, copy.coefficients, r_grid[i]);
        out.F[i] = F;
        out.G[i] = G;
    }
    return out;
}

} // namespace rdirac
