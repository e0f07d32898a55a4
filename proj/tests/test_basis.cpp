#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <Eigen/Dense>

#include "rdirac/basis.hpp"

using namespace rdirac;

namespace {

GlobalBasisSpec demo_spec(int N1 = 8, int N2 = 10, double beta = 1.7, double L = 1.0) {
    GlobalBasisSpec spec;
    spec.L = L;
    spec.N1 = N1;
    spec.N2 = N2;
    spec.beta = beta;
    return spec;
}

} // namespace

TEST_CASE("dimension bookkeeping") {
    CHECK(demo_spec(8, 10).size() == 19);
    GlobalBasisSpec lag;
    lag.mode = BasisMode::laguerre_only;
    lag.N2 = 12;
    CHECK(lag.size() == 12);
    GlobalBasisSpec leg;
    leg.mode = BasisMode::legendre_truncated;
    leg.N1 = 9;
    leg.L = 30.0;
    CHECK(leg.size() == 9);
    GlobalBasisSpec bad = demo_spec();
    bad.beta = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
}

TEST_CASE("bridge is 1 at the interface from both sides") {
    auto spec = demo_spec();
    int N = spec.size();
    CHECK(eval_basis(spec, N, spec.L).value == doctest::Approx(1.0));
    CHECK(eval_basis(spec, N, spec.L - 1e-12).value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(eval_basis(spec, N, spec.L + 1e-12).value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(eval_basis(spec, N, spec.L).region == Region::both);
}

TEST_CASE("block functions vanish at the interface") {
    auto spec = demo_spec();
    for (int n = 1; n <= spec.N1 + spec.N2; ++n) {
        CHECK(std::abs(eval_basis(spec, n, spec.L).value) < 1e-14);
        // just inside / outside approaches zero too
        CHECK(std::abs(eval_basis(spec, n, spec.L * (1 - 1e-10)).value) < 1e-8);
        CHECK(std::abs(eval_basis(spec, n, spec.L + 1e-10).value) < 1e-8);
    }
    CHECK(eval_basis(spec, 1, 0.3).region == Region::I1);
    CHECK(eval_basis(spec, spec.N1 + 1, 0.3).region == Region::I2);
    CHECK(std::abs(eval_basis(spec, spec.N1 + 1, 0.3).value) < 1e-300);
    CHECK(std::abs(eval_basis(spec, 1, 1.7).value) < 1e-300);
}

TEST_CASE("every basis function vanishes at the origin") {
    auto spec = demo_spec(12, 9, 0.8);
    for (int n = 1; n < spec.size(); ++n) CHECK(eval_basis(spec, n, 0.0).value == 0.0);
    CHECK(eval_basis(spec, spec.size(), 0.0).value == 0.0); // bridge r/L
}

TEST_CASE("C0 continuity at the interface for every function") {
    auto spec = demo_spec(20, 20, 2.3);
    const double eps = 1e-8;
    // max|phi_n| estimated on a coarse sweep
    double scale = 1.0;
    std::vector<double> val, der;
    for (double r = 0.01; r < 6.0; r += 0.037) {
        eval_basis_all(spec, r, val, der);
        for (double v : val) scale = std::max(scale, std::abs(v));
    }
    for (int n = 1; n <= spec.size(); ++n) {
        double below = eval_basis(spec, n, spec.L - eps).value;
        double above = eval_basis(spec, n, spec.L + eps).value;
        CHECK(std::abs(below - above) < 1e-6 * scale);
    }
}

TEST_CASE("origin growth bound r (1 + |ln r|^n)") {
    auto spec = demo_spec(6, 4, 1.0);
    for (int n = 1; n <= spec.N1; ++n) {
        for (double r : {1e-12, 1e-9, 1e-6, 1e-3, 1e-2}) {
            double v = std::abs(eval_basis(spec, n, r).value);
            double bound = 50.0 * r * (1.0 + std::pow(std::abs(std::log(r)), n));
            CHECK(v <= bound);
        }
    }
}

TEST_CASE("quadrature grids integrate reference functions") {
    auto spec = demo_spec(10, 12, 1.9, 1.3);
    auto grids = quadrature_grids(spec);

    // int_0^L (r/L)^2 dr = L/3
    double s1 = 0.0;
    for (std::size_t q = 0; q < grids.inner.r.size(); ++q) {
        double x = grids.inner.r[q] / spec.L;
        s1 += grids.inner.w[q] * x * x;
    }
    CHECK(s1 == doctest::Approx(spec.L / 3.0).epsilon(1e-12));

    // int_L^inf e^{-beta (r-L)} dr = 1/beta
    double s2 = 0.0;
    for (std::size_t q = 0; q < grids.outer.r.size(); ++q)
        s2 += grids.outer.w[q] * std::exp(-spec.beta * (grids.outer.r[q] - spec.L));
    CHECK(s2 == doctest::Approx(1.0 / spec.beta).epsilon(1e-12));
}

TEST_CASE("inner grid matches a brute-force trapezoid for phi_1^2") {
    auto spec = demo_spec(6, 6, 1.0, 1.0);
    auto grids = quadrature_grids(spec);
    double viaGrid = 0.0;
    std::vector<double> val, der;
    for (std::size_t q = 0; q < grids.inner.r.size(); ++q) {
        eval_basis_all(spec, grids.inner.r[q], val, der);
        viaGrid += grids.inner.w[q] * val[0] * val[0];
    }
    // 10^6-panel trapezoid on (0, L); integrand vanishes at both ends
    const int P = 1000000;
    double h = spec.L / P;
    double trap = 0.0;
    for (int i = 1; i < P; ++i) {
        eval_basis_all(spec, i * h, val, der);
        trap += val[0] * val[0];
    }
    trap *= h;
    CHECK(viaGrid == doctest::Approx(trap).epsilon(1e-10));
}

TEST_CASE("doubling the budgets leaves integrals unchanged") {
    auto spec = demo_spec(14, 14, 3.0);
    auto g1 = quadrature_grids(spec);
    auto g2 = quadrature_grids(spec, 2 * 4 * (14 + 50), 2 * (2 * 16 + 48));
    std::vector<double> val, der;
    auto gram_diag = [&](const BasisGrids& g) {
        std::vector<double> acc(spec.size(), 0.0);
        for (const RegionGrid* grid : {&g.inner, &g.outer}) {
            for (std::size_t q = 0; q < grid->r.size(); ++q) {
                eval_basis_all(spec, grid->r[q], val, der);
                for (int j = 0; j < spec.size(); ++j) acc[j] += grid->w[q] * val[j] * val[j];
            }
        }
        return acc;
    };
    auto a = gram_diag(g1), b = gram_diag(g2);
    for (int j = 0; j < spec.size(); ++j) CHECK(a[j] == doctest::Approx(b[j]).epsilon(1e-11));
}

TEST_CASE("truncated Legendre basis vanishes at both ends") {
    const double L = 30.0;
    const int N = 12;
    for (int n = 1; n <= N; ++n) {
        CHECK(std::abs(legendre_truncated_basis(L, N, n, 0.0).value) < 1e-13);
        CHECK(std::abs(legendre_truncated_basis(L, N, n, L).value) < 1e-13);
    }
    CHECK_THROWS_AS(legendre_truncated_basis(L, N, 1, L + 0.1), std::domain_error);
}

TEST_CASE("truncated Legendre interior values match explicit polynomials") {
    const double L = 2.0;
    double r = 0.5 * L; // x = 0
    // P2 - P0 = (3x^2-1)/2 - 1, P3 - P1 = (5x^3-3x)/2 - x, P4 - P2, P5 - P3
    auto p = [&](int k, double x) {
        switch (k) {
            case 0: return 1.0;
            case 1: return x;
            case 2: return 0.5 * (3 * x * x - 1);
            case 3: return 0.5 * (5 * x * x * x - 3 * x);
            case 4: return 0.125 * (35 * std::pow(x, 4) - 30 * x * x + 3);
            case 5: return 0.125 * (63 * std::pow(x, 5) - 70 * x * x * x + 15 * x);
            default: return 0.0;
        }
    };
    for (double frac : {0.15, 0.5, 0.82}) {
        r = frac * L;
        double x = 2 * r / L - 1;
        for (int k = 1; k <= 4; ++k) {
            double expect = p(k + 1, x) - p(k - 1, x);
            CHECK(legendre_truncated_basis(L, 8, k, r).value ==
                  doctest::Approx(expect).epsilon(1e-13));
        }
    }
}

TEST_CASE("Gram matrix is numerically nonsingular up to N1 = N2 = 40") {
    auto spec = demo_spec(40, 40, 2.0);
    auto grids = quadrature_grids(spec);
    int N = spec.size();
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(N, N);
    std::vector<double> val, der;
    for (const RegionGrid* grid : {&grids.inner, &grids.outer}) {
        for (std::size_t q = 0; q < grid->r.size(); ++q) {
            eval_basis_all(spec, grid->r[q], val, der);
            Eigen::Map<Eigen::VectorXd> v(val.data(), N);
            gram.noalias() += grid->w[q] * v * v.transpose();
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(gram);
    double smin = svd.singularValues().minCoeff();
    double smax = svd.singularValues().maxCoeff();
    CHECK(smin > 0.0);
    MESSAGE("basis Gram condition number: ", smax / smin);
}

TEST_CASE("laguerre-only mode is a pure expansion with origin zeros") {
    GlobalBasisSpec spec;
    spec.mode = BasisMode::laguerre_only;
    spec.N2 = 10;
    spec.beta = 2.0;
    CHECK(spec.size() == 10);
    for (int n = 1; n <= 10; ++n) CHECK(eval_basis(spec, n, 0.0).value == 0.0);
    auto grids = quadrature_grids(spec);
    CHECK(grids.inner.empty());
    CHECK(grids.outer.r.front() < 0.1); // grid starts at the origin, not at L
}
