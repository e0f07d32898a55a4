#include "rdirac/assembly.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace rdirac {

bool SpinorLayout::symmetric_specs() const {
    const GlobalBasisSpec& u = upper_spec;
    const GlobalBasisSpec& l = lower_spec;
    return u.mode == l.mode && u.L == l.L && u.N1 == l.N1 && u.N2 == l.N2 && u.beta == l.beta;
}

void SpinorLayout::validate() const {
    // One side may be empty (block-structure checks); not both.
    if (upper_spec.size() > 0) upper_spec.validate();
    if (lower_spec.size() > 0) lower_spec.validate();
    if (dim() < 1) throw std::domain_error("SpinorLayout: empty layout");
    if (upper_spec.size() > 0 && lower_spec.size() > 0) {
        // Sizes may differ (DOF-mismatch studies); geometry must not.
        if (upper_spec.mode != lower_spec.mode)
            throw std::domain_error("SpinorLayout: mixed basis modes unsupported");
        if (upper_spec.L != lower_spec.L || upper_spec.beta != lower_spec.beta)
            throw std::domain_error("SpinorLayout: upper/lower L and beta must agree");
    }
}

std::string operator_mode_name(OperatorMode mode) {
    switch (mode) {
        case OperatorMode::idom: return "idom";
        case OperatorMode::sdom: return "sdom";
        case OperatorMode::raw: return "raw";
    }
    return "?";
}

DiracSample apply_dirac(const Potential& pot, int kappa, const PhysicsConstants& consts,
                        double f, double g, double df, double dg, double r) {
    if (!(r > 0.0)) throw std::domain_error("apply_dirac: r must be > 0");
    if (kappa == 0) throw std::domain_error("apply_dirac: kappa must be nonzero");
    double V = evaluate(pot, r);
    double mc2 = consts.mass * consts.c * consts.c;
    double kr = kappa / r;
    return {(V + mc2) * f - consts.c * (dg - kr * g),
            consts.c * (df + kr * f) + (V - mc2) * g};
}

namespace {

struct GridSamples {
    Eigen::VectorXd r, w, V, kr; // kr = kappa / r
};

GridSamples sample_grid(const RegionGrid& grid, const Potential& pot, int kappa) {
    GridSamples s;
    int Q = static_cast<int>(grid.r.size());
    s.r.resize(Q);
    s.w.resize(Q);
    s.V.resize(Q);
    s.kr.resize(Q);
    for (int q = 0; q < Q; ++q) {
        s.r[q] = grid.r[q];
        s.w[q] = grid.w[q];
        s.V[q] = evaluate(pot, grid.r[q]);
        s.kr[q] = kappa / grid.r[q];
    }
    return s;
}

// Q x N matrices of basis values and d/dr over the nodes.
void sample_basis_block(const GlobalBasisSpec& spec, const Eigen::VectorXd& r,
                        Eigen::MatrixXd& val, Eigen::MatrixXd& der) {
    int Q = static_cast<int>(r.size());
    int N = spec.size();
    val.resize(Q, N);
    der.resize(Q, N);
    std::vector<double> v, d;
    for (int q = 0; q < Q; ++q) {
        eval_basis_all(spec, r[q], v, d);
        for (int j = 0; j < N; ++j) {
            val(q, j) = v[j];
            der(q, j) = d[j];
        }
    }
}

} // namespace

AssembledSystem assemble(const SpinorLayout& layout, const Potential& pot, int kappa,
                         const PhysicsConstants& consts, OperatorMode mode,
                         const QuadBudgets& budgets) {
    layout.validate();
    validate(pot);
    if (std::abs(kappa) < 1) throw std::domain_error("assemble: |kappa| must be >= 1");

    const int nu = layout.n_upper();
    const int nl = layout.k_lower();
    const int dim = layout.dim();
    const double mc2 = consts.mass * consts.c * consts.c;

    AssembledSystem sys;
    sys.A = Eigen::MatrixXd::Zero(dim, dim);
    sys.B = Eigen::MatrixXd::Zero(dim, dim);
    sys.B_shift = Eigen::MatrixXd::Zero(dim, dim);
    sys.overlap = Eigen::MatrixXd::Zero(dim, dim);
    sys.layout = layout;
    sys.mode = mode;
    sys.consts = consts;
    sys.potential = pot;
    sys.kappa = kappa;

    // Use one set of grids adequate for both components. Specs may differ in
    // block sizes; build grids from the larger one.
    const GlobalBasisSpec& grid_spec =
        layout.upper_spec.size() >= layout.lower_spec.size() ? layout.upper_spec
                                                             : layout.lower_spec;
    BasisGrids grids = quadrature_grids(grid_spec, budgets.inner, budgets.outer);
    sys.nodes_inner = static_cast<int>(grids.inner.r.size());
    sys.nodes_outer = static_cast<int>(grids.outer.r.size());

    for (const RegionGrid* grid : {&grids.inner, &grids.outer}) {
        if (grid->empty()) continue;
        GridSamples s = sample_grid(*grid, pot, kappa);
        const int Q = static_cast<int>(s.r.size());

        Eigen::MatrixXd val_u, der_u, val_l, der_l;
        if (nu > 0) sample_basis_block(layout.upper_spec, s.r, val_u, der_u);
        if (nl > 0) {
            if (nu > 0 && layout.symmetric_specs()) {
                val_l = val_u;
                der_l = der_u;
            } else {
                sample_basis_block(layout.lower_spec, s.r, val_l, der_l);
            }
        }

        // Dirac image of each spinor basis vector, sampled on the grid;
        // Sup/Slo hold the images under the rest-mass-shifted operator
        // D - m c^2 (upper row loses +mc^2, lower row gains -mc^2).
        Eigen::MatrixXd Dup(Q, dim), Dlo(Q, dim), Sup(Q, dim), Slo(Q, dim);
        Eigen::ArrayXd Vp = (s.V.array() + mc2);
        Eigen::ArrayXd Vm = (s.V.array() - mc2);
        Eigen::ArrayXd Vm2 = (s.V.array() - 2.0 * mc2);
        for (int j = 0; j < nu; ++j) {
            Dup.col(j) = Vp * val_u.col(j).array();
            Dlo.col(j) = consts.c * (der_u.col(j).array() + s.kr.array() * val_u.col(j).array());
            Sup.col(j) = s.V.array() * val_u.col(j).array();
            Slo.col(j) = Dlo.col(j);
        }
        for (int j = 0; j < nl; ++j) {
            Dup.col(nu + j) =
                -consts.c * (der_l.col(j).array() - s.kr.array() * val_l.col(j).array());
            Dlo.col(nu + j) = Vm * val_l.col(j).array();
            Sup.col(nu + j) = Dup.col(nu + j);
            Slo.col(nu + j) = Vm2 * val_l.col(j).array();
        }

        Eigen::MatrixXd WDup = s.w.asDiagonal() * Dup;
        sys.A.noalias() += Dup.transpose() * WDup;
        sys.A.noalias() += Dlo.transpose() * (s.w.asDiagonal() * Dlo);
        if (nu > 0) {
            Eigen::MatrixXd Wvu = s.w.asDiagonal() * val_u;
            sys.B.topRows(nu).noalias() += Wvu.transpose() * Dup;
            sys.B_shift.topRows(nu).noalias() += Wvu.transpose() * Sup;
            sys.overlap.topLeftCorner(nu, nu).noalias() += Wvu.transpose() * val_u;
        }
        if (nl > 0) {
            Eigen::MatrixXd Wvl = s.w.asDiagonal() * val_l;
            sys.B.bottomRows(nl).noalias() += Wvl.transpose() * Dlo;
            sys.B_shift.bottomRows(nl).noalias() += Wvl.transpose() * Slo;
            sys.overlap.bottomRightCorner(nl, nl).noalias() += Wvl.transpose() * val_l;
        }
    }

    if (!sys.A.allFinite() || !sys.B.allFinite() || !sys.B_shift.allFinite() ||
        !sys.overlap.allFinite())
        throw std::runtime_error("assemble: non-finite matrix entries");
    return sys;
}

void dump_matrix(std::ostream& os, const Eigen::MatrixXd& m) {
    os << m.rows() << " " << m.cols() << "\n";
    os.precision(17);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) os << m(i, j) << (j + 1 < m.cols() ? " " : "");
        os << "\n";
    }
}

Eigen::MatrixXd read_matrix(std::istream& is) {
    Eigen::Index rows = 0, cols = 0;
    if (!(is >> rows >> cols) || rows < 1 || cols < 1)
        throw std::runtime_error("read_matrix: bad header");
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            if (!(is >> m(i, j))) throw std::runtime_error("read_matrix: truncated data");
    return m;
}

} // namespace rdirac
