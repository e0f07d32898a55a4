#include "rdirac/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace rdirac {

void QuadratureRule::validate() const {
    if (nodes.empty() || nodes.size() != weights.size())
        throw std::domain_error("quadrature rule: empty or mismatched node/weight arrays");
    double prev = -std::numeric_limits<double>::infinity();
    bool any_positive = false;
    for (std::size_t q = 0; q < nodes.size(); ++q) {
        if (!std::isfinite(nodes[q]) || nodes[q] <= prev)
            throw std::domain_error("quadrature rule: nodes not strictly increasing");
        prev = nodes[q];
        if (weights[q] < 0.0 || !std::isfinite(weights[q]))
            throw std::domain_error("quadrature rule: negative or non-finite weight");
        any_positive = any_positive || weights[q] > 0.0;
    }
    if (!any_positive)
        throw std::domain_error("quadrature rule: all weights zero");
}

namespace {

// Eigenvalues of the symmetric Jacobi matrix seed the nodes (Golub-Welsch);
// Newton refinement against the recurrence then restores full precision, and
// weights come from the analytic formulas, which stay meaningful where the
// eigenvector-based ones would degenerate to rounding noise.
Eigen::VectorXd jacobi_eigenvalues(const Eigen::VectorXd& diag, const Eigen::VectorXd& subdiag) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, subdiag, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("quadrature: Jacobi matrix eigendecomposition failed");
    return es.eigenvalues();
}

// L_n(t) e^{-t/2} and d/dt[L_n(t)] e^{-t/2} for n and n+1, accumulated in
// extended precision so large rules keep ~1e-14 weights.
struct EnvelopedLaguerre {
    long double l_n, dl_n, l_np1;
};

EnvelopedLaguerre enveloped_at(int n, long double t) {
    long double prev = 0.0L;            // l_{-1}
    long double cur = std::exp(-0.5L * t); // l_0
    long double dcur = 0.0L;            // dl_0
    long double target_v = cur, target_d = dcur;
    for (int k = 0; k <= n; ++k) {
        long double next = ((2.0L * k + 1.0L - t) * cur - k * prev) / (k + 1.0L);
        dcur = dcur - cur; // dl_{k+1} = dl_k - l_k
        prev = cur;
        cur = next;
        if (k + 1 == n) {
            target_v = cur;
            target_d = dcur;
        }
    }
    return {target_v, target_d, cur}; // cur now holds l_{n+1}
}

} // namespace

QuadratureRule gauss_laguerre_rule(int count) {
    if (count < 1) throw std::domain_error("gauss_laguerre_rule: count must be >= 1");
    // Beyond ~350 points the e^{t/2} lift overflows double range.
    if (count > 350) throw std::domain_error("gauss_laguerre_rule: count > 350 unsupported");
    Eigen::VectorXd diag(count), subdiag(count > 1 ? count - 1 : 0);
    for (int k = 0; k < count; ++k) diag[k] = 2.0 * k + 1.0;
    for (int k = 1; k < count; ++k) subdiag[k - 1] = k;
    Eigen::VectorXd seeds = jacobi_eigenvalues(diag, subdiag);

    QuadratureRule rule;
    rule.kind = RuleKind::gauss_laguerre;
    rule.nodes.resize(count);
    rule.weights.resize(count);
    rule.lifted_weights.resize(count);
    for (int q = 0; q < count; ++q) {
        long double t = seeds[q];
        // Newton on the enveloped polynomial l_Q(t) = L_Q(t) e^{-t/2}:
        // l' = (L' - L/2) e^{-t/2}
        for (int it = 0; it < 4; ++it) {
            auto e = enveloped_at(count, t);
            long double deriv = e.dl_n - 0.5L * e.l_n;
            if (deriv == 0.0L) break;
            long double step = e.l_n / deriv;
            t -= step;
            if (std::abs((double)step) < 1e-16 * std::max((double)t, 1.0)) break;
        }
        auto e = enveloped_at(count, t);
        // w = t / ((Q+1)^2 L_{Q+1}(t)^2); with the envelope factored out,
        // w e^{t} = t / ((Q+1) l_{Q+1}(t))^2
        long double denom = (count + 1.0L) * e.l_np1;
        long double lifted = t / (denom * denom);
        rule.nodes[q] = static_cast<double>(t);
        rule.lifted_weights[q] = static_cast<double>(lifted);
        // true underflow to 0 in the far tail of very large rules
        rule.weights[q] = static_cast<double>(lifted * std::exp(-t));
    }
    rule.validate();
    return rule;
}

QuadratureRule gauss_legendre_rule(int count) {
    if (count < 1) throw std::domain_error("gauss_legendre_rule: count must be >= 1");
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(count);
    Eigen::VectorXd subdiag(count > 1 ? count - 1 : 0);
    for (int k = 1; k < count; ++k) subdiag[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
    Eigen::VectorXd seeds = jacobi_eigenvalues(diag, subdiag);

    QuadratureRule rule;
    rule.kind = RuleKind::gauss_legendre;
    rule.nodes.resize(count);
    rule.weights.resize(count);
    auto legendre_pair = [count](long double x) {
        // P_Q(x) and P_Q'(x) by the standard recurrences
        long double p0 = 1.0L, p1 = x, d0 = 0.0L, d1 = 1.0L;
        if (count == 0) return std::pair<long double, long double>{p0, d0};
        for (int k = 1; k < count; ++k) {
            long double p2 = ((2.0L * k + 1.0L) * x * p1 - k * p0) / (k + 1.0L);
            long double d2 = d0 + (2.0L * k + 1.0L) * p1;
            p0 = p1;
            p1 = p2;
            d0 = d1;
            d1 = d2;
        }
        return std::pair<long double, long double>{p1, d1};
    };
    for (int q = 0; q < count; ++q) {
        long double x = seeds[q];
        for (int it = 0; it < 4; ++it) {
            auto [p, d] = legendre_pair(x);
            if (d == 0.0L) break;
            long double step = p / d;
            x -= step;
            if (std::abs((double)step) < 1e-17) break;
        }
        auto [p, d] = legendre_pair(x);
        (void)p;
        rule.nodes[q] = static_cast<double>(x);
        rule.weights[q] = static_cast<double>(2.0L / ((1.0L - x * x) * d * d));
    }
    rule.validate();
    return rule;
}

QuadratureRule log_mapped_composite_rule(int node_budget, double t_max) {
    if (node_budget < 1) throw std::domain_error("log_mapped_composite_rule: budget must be >= 1");
    if (!(t_max > 0.0)) throw std::domain_error("log_mapped_composite_rule: t_max must be > 0");

    int panels = 12;
    while (panels > 1 && node_budget / panels < 6) --panels;
    int per_panel = std::max(1, node_budget / panels);

    QuadratureRule base = gauss_legendre_rule(per_panel);

    QuadratureRule rule;
    rule.kind = RuleKind::log_mapped_composite;
    rule.nodes.reserve(static_cast<std::size_t>(panels) * per_panel);
    rule.weights.reserve(static_cast<std::size_t>(panels) * per_panel);

    double w0 = t_max / (std::pow(2.0, panels) - 1.0);
    double left = 0.0;
    for (int p = 0; p < panels; ++p) {
        double width = w0 * std::pow(2.0, p);
        double right = left + width;
        double half = 0.5 * width;
        double mid = 0.5 * (left + right);
        for (int q = 0; q < per_panel; ++q) {
            rule.nodes.push_back(mid + half * base.nodes[q]);
            rule.weights.push_back(half * base.weights[q]);
        }
        left = right;
    }
    rule.validate();
    return rule;
}

QuadratureRule gauss_rule(RuleKind kind, int count, double params) {
    switch (kind) {
        case RuleKind::gauss_laguerre: return gauss_laguerre_rule(count);
        case RuleKind::gauss_legendre: return gauss_legendre_rule(count);
        case RuleKind::log_mapped_composite: return log_mapped_composite_rule(count, params);
    }
    throw std::domain_error("gauss_rule: unknown kind");
}

} // namespace rdirac
