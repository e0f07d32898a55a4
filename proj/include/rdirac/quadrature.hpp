#ifndef RDIRAC_QUADRATURE_HPP
#define RDIRAC_QUADRATURE_HPP

#include <vector>

namespace rdirac {

enum class RuleKind { gauss_laguerre, gauss_legendre, log_mapped_composite };

/// A one-dimensional quadrature rule in its own reference coordinate.
///
/// gauss_laguerre:       sum_q w_q f(t_q) ~ int_0^inf f(t) e^{-t} dt
/// gauss_legendre:       sum_q w_q f(t_q) ~ int_{-1}^{1} f(t) dt
/// log_mapped_composite: sum_q w_q f(t_q) ~ int_0^{t_max} f(t) dt,
///                       composite Gauss-Legendre panels with widths doubling
///                       away from t = 0.
struct QuadratureRule {
    RuleKind kind;
    std::vector<double> nodes;   // strictly increasing
    std::vector<double> weights; // positive (far tail of very large Laguerre
                                 // rules may underflow; see lifted_weights)
    // Laguerre only: w_q * e^{t_q}, computed without overflow/underflow.
    // Used when the e^{-t} factor belongs to the integrand, not the rule.
    std::vector<double> lifted_weights;

    int count() const { return static_cast<int>(nodes.size()); }
    void validate() const;
};

QuadratureRule gauss_laguerre_rule(int count);
QuadratureRule gauss_legendre_rule(int count);

/// Composite rule on [0, t_max] for integrands that are polynomials in t
/// times decaying exponentials; the finest panel sits at t = 0 where
/// high-degree Laguerre polynomials oscillate fastest.
QuadratureRule log_mapped_composite_rule(int node_budget, double t_max = 85.0);

/// Dispatcher mirroring the three factories above; params is t_max for the
/// log-mapped kind and ignored otherwise.
QuadratureRule gauss_rule(RuleKind kind, int count, double params = 85.0);

} // namespace rdirac

#endif
