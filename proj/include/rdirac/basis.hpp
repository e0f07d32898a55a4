#ifndef RDIRAC_BASIS_HPP
#define RDIRAC_BASIS_HPP

#include <vector>

#include "rdirac/quadrature.hpp"

namespace rdirac {

enum class BasisMode { allsm, laguerre_only, legendre_truncated };

/// Global C0 scalar basis on [0, inf).
///
/// allsm:              log-orthogonal block on (0,L), scaled-Laguerre block
///                     on (L,inf), plus one bridging function; N = N1+N2+1.
///                     Core functions are x (S_n - S_{n-1})(x), x = r/L, and
///                     tail functions Lhat_k - Lhat_{k-1} in r - L, each
///                     normalized to unit L2 norm so both block overlaps are
///                     tridiagonal with unit diagonal. The bridge is r/L
///                     inside and e^{-beta (r-L)/2} outside (value 1 at L).
/// laguerre_only:      scaled-Laguerre difference functions on (0,inf),
///                     vanishing at the origin; N = N2 (N1 must be 0).
/// legendre_truncated: Legendre difference polynomials on (0,L), vanishing
///                     at 0 and L; N = N1 (N2, beta unused).
struct GlobalBasisSpec {
    double L = 1.0;  // interface radius, Bohr
    int N1 = 0;      // log-orthogonal block size (or Legendre count)
    int N2 = 0;      // Laguerre block size
    double beta = 1.0;
    BasisMode mode = BasisMode::allsm;

    int size() const;
    void validate() const;
};

enum class Region { I1, I2, both };

struct BasisEvaluation {
    int index; // 1-based
    double value;
    double derivative; // d/dr
    Region region;
};

/// Values and d/dr of every basis function at r; val/der are resized to N.
/// Index n (1-based) lives at val[n-1].
void eval_basis_all(const GlobalBasisSpec& spec, double r,
                    std::vector<double>& val, std::vector<double>& der);

BasisEvaluation eval_basis(const GlobalBasisSpec& spec, int n, double r);

/// Truncated-Legendre basis element on [0, L]:
///   phi_k(r) = P_{k+1}(x) - P_{k-1}(x),  x = 2r/L - 1,  k = 1..N.
BasisEvaluation legendre_truncated_basis(double L, int N, int n, double r);

/// A quadrature grid transported to the physical radial coordinate:
/// sum_q w[q] f(r[q]) ~ int f(r) dr over the region it covers.
struct RegionGrid {
    std::vector<double> r;
    std::vector<double> w;
    bool empty() const { return r.empty(); }
};

struct BasisGrids {
    RegionGrid inner; // (0,L); empty in laguerre_only mode
    RegionGrid outer; // (L,inf), or (0,inf) in laguerre_only mode
};

/// Region grids adequate for all pairwise products of basis functions and
/// their Dirac images. node_budget values of 0 select automatic budgets from
/// the block sizes; the inner grid is the log-mapped composite rule
/// transported via r = L e^{-t/5}, the outer grid is Gauss-Laguerre in
/// u = beta (r - L) with the e^{-u} weight divided back out.
BasisGrids quadrature_grids(const GlobalBasisSpec& spec, int node_budget_inner = 0,
                            int node_budget_outer = 0);

} // namespace rdirac

#endif
