#ifndef RDIRAC_SPECFUN_HPP
#define RDIRAC_SPECFUN_HPP

#include <vector>

namespace rdirac {

struct ValueDeriv {
    double value;
    double derivative;
};

/// L_0(t) .. L_{n_max}(t) by the three-term recurrence
/// (n+1) L_{n+1} = (2n+1-t) L_n - n L_{n-1}.
std::vector<double> laguerre_poly_sequence(int n_max, double t);

/// L_0'(t) .. L_{n_max}'(t) via L_n' = L_{n-1}' - L_{n-1}
/// (equivalent to t L_n' = n L_n - n L_{n-1}, no division by t).
std::vector<double> laguerre_poly_deriv_sequence(int n_max, double t);

/// Envelope-factored sequences val[n] = L_n(t) e^{-t/2},
/// dval[n] = L_n'(t) e^{-t/2}; bounded by 1 in magnitude for all n, t >= 0,
/// so they never overflow where the plain polynomials would.
void laguerre_enveloped_sequences(int n_max, double t,
                                  std::vector<double>& val, std::vector<double>& dval);

/// Orthonormal scaled Laguerre function on [0,inf):
///   Lhat_n^beta(r) = sqrt(beta) L_n(beta r) e^{-beta r / 2}
/// Returns value and d/dr.
ValueDeriv scaled_laguerre_function(int n, double beta, double r);

/// All of Lhat_0 .. Lhat_{n_max} and their r-derivatives at once.
void scaled_laguerre_sequence(int n_max, double beta, double r,
                              std::vector<double>& val, std::vector<double>& ddr);

/// Generalized log-orthogonal function on (0,1]:
///   S_n^{(gamma,mu)}(x) = x^{(gamma-mu)/2} L_n(-(gamma+1) log x)
/// Returns value and d/dx.
ValueDeriv glof(int n, double gamma, double mu, double x);

/// All of S_0 .. S_{n_max} and their x-derivatives at once.
void glof_sequence(int n_max, double gamma, double mu, double x,
                   std::vector<double>& val, std::vector<double>& ddx);

/// Error function, |error| <= 1e-15 absolute. Power series (hypergeometric
/// form, all terms positive) below |x| = 5, asymptotic expansion of erfc
/// above.
double erf(double x);

} // namespace rdirac

#endif
