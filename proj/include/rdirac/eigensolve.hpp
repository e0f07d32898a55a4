#ifndef RDIRAC_EIGENSOLVE_HPP
#define RDIRAC_EIGENSOLVE_HPP

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "rdirac/assembly.hpp"

namespace rdirac {

enum class StateClass { unclassified, physical, spurious, continuum_artifact };

std::string state_class_name(StateClass c);

struct EigenEntry {
    double binding_energy;   // E_total - m c^2, Hartree
    double raw_eigenvalue;   // 1/E_total (idom), E^2 (sdom), E_total (raw)
    Eigen::VectorXd coefficients; // over the SpinorLayout, overlap-normalized
    /// Relative eigenpair residual ||P c - lambda Q c|| / (||P c|| + |lambda| ||Q c||)
    /// evaluated on the well-scaled pair: (B, overlap) for idom and raw,
    /// (A, overlap) for sdom. Large values flag directions that are not
    /// eigenfunctions of the assembled operator.
    double residual;
    StateClass classification = StateClass::unclassified;
    bool branch_ambiguous = false; // sdom cannot distinguish +E from -E
};

struct EigenSolution {
    std::vector<EigenEntry> entries; // sorted by binding_energy ascending
    OperatorMode mode = OperatorMode::idom;
};

/// Solve the generalized eigenproblem of the assembled system and keep the
/// `count` bound states deepest in the mass gap. idom reduces via Cholesky of
/// the SPD matrix A (QZ fallback when the factorization fails); an empty
/// entry list is a legitimate outcome (no bound state), not an error.
EigenSolution solve_gep(const AssembledSystem& sys, int count);

struct ClassifyOptions {
    /// Expected binding energies (ascending); when present, an entry matching
    /// one unconsumed value within the tolerance is physical.
    std::optional<std::vector<double>> oracle;
    double oracle_rel_tol = 1e-6;
    double oracle_abs_floor = 0.0;
    /// Without an oracle match, an entry whose energy moves less than
    /// stability_rel_tol under basis enrichment (N2 -> N2 + enrich_amount)
    /// is physical; otherwise spurious inside the gap, continuum-artifact
    /// outside.
    bool enrichment_check = true;
    int enrich_amount = 10;
    double stability_rel_tol = 1e-8;
};

void classify_states(EigenSolution& sol, const AssembledSystem& sys, const ClassifyOptions& opt);

struct RadialSamples {
    std::vector<double> r, F, G;
};

/// Sample the two normalized radial components on a grid; sign convention
/// F > 0 as r -> 0+.
RadialSamples normalize_and_sample(const AssembledSystem& sys, const EigenEntry& entry,
                                   const std::vector<double>& r_grid);

/// Component values at a single radius (F, G).
std::pair<double, double> eval_components(const AssembledSystem& sys,
                                          const Eigen::VectorXd& coeffs, double r);

} // namespace rdirac

#endif
