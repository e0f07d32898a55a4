#ifndef RDIRAC_ASSEMBLY_HPP
#define RDIRAC_ASSEMBLY_HPP

#include <iosfwd>

#include <Eigen/Core>

#include "rdirac/basis.hpp"
#include "rdirac/potentials.hpp"

namespace rdirac {

/// Two-component spinor discretization: the large component F is expanded in
/// upper_spec (n_upper functions), the small component G in lower_spec
/// (k_lower functions). Spinor basis vector i <= n_upper is (phi_i, 0),
/// i > n_upper is (0, phi_{i-n_upper}).
struct SpinorLayout {
    GlobalBasisSpec upper_spec;
    GlobalBasisSpec lower_spec;

    int n_upper() const { return upper_spec.size(); }
    int k_lower() const { return lower_spec.size(); }
    int dim() const { return n_upper() + k_lower(); }
    bool symmetric_specs() const;
    void validate() const;
};

inline SpinorLayout balanced_layout(const GlobalBasisSpec& spec) { return {spec, spec}; }

enum class OperatorMode { idom, sdom, raw };

std::string operator_mode_name(OperatorMode mode);

/// Galerkin matrices of the radial Dirac problem:
///   A       = <D phi_i, D phi_j>   (Gram matrix of the Dirac images)
///   B       = <phi_i, D phi_j>
///   B_shift = <phi_i, (D - m c^2) phi_j>, assembled directly so binding
///             energies never pass through the m c^2 cancellation
///   overlap = <phi_i, phi_j>
/// The eigenproblem pairs are (B, A) for idom (B c = 1/E A c), (A, overlap)
/// for sdom (eigenvalues E^2), and (B, overlap) for raw (eigenvalues E).
struct AssembledSystem {
    Eigen::MatrixXd A;
    Eigen::MatrixXd B;
    Eigen::MatrixXd B_shift;
    Eigen::MatrixXd overlap;
    SpinorLayout layout;
    OperatorMode mode = OperatorMode::idom;
    PhysicsConstants consts;
    Potential potential;
    int kappa = -1;
    int nodes_inner = 0; // quadrature sizes actually used
    int nodes_outer = 0;
};

struct DiracSample {
    double upper;
    double lower;
};

/// Pointwise action of the radial Dirac operator on a two-component sample
/// (f, g) with derivatives (df, dg) at radius r > 0:
///   upper = (V + m c^2) f - c (dg - (kappa/r) g)
///   lower = c (df + (kappa/r) f) + (V - m c^2) g
DiracSample apply_dirac(const Potential& pot, int kappa, const PhysicsConstants& consts,
                        double f, double g, double df, double dg, double r);

struct QuadBudgets {
    int inner = 0; // 0 = automatic
    int outer = 0;
};

AssembledSystem assemble(const SpinorLayout& layout, const Potential& pot, int kappa,
                         const PhysicsConstants& consts, OperatorMode mode,
                         const QuadBudgets& budgets = {});

/// Plain-text matrix exchange format: "rows cols" header line followed by
/// row-major entries, 17 significant digits.
void dump_matrix(std::ostream& os, const Eigen::MatrixXd& m);
Eigen::MatrixXd read_matrix(std::istream& is);

} // namespace rdirac

#endif
