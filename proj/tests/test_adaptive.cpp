#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "rdirac/adaptive.hpp"

using namespace rdirac;

TEST_CASE("frequency indicator on hand-built vectors") {
    std::vector<double> delta{1.0, 0.0, 0.0, 0.0, 0.0, 0.0};
    CHECK(frequency_indicator(delta, 3) == 0.0);

    std::vector<double> tail{0.0, 0.0, 0.0, 0.4, -0.3, 0.1};
    CHECK(frequency_indicator(tail, 3) == doctest::Approx(1.0));

    // uniform c, N=5 (6 coefficients), M=1 -> sqrt(1/6)
    std::vector<double> uniform(6, 0.7);
    CHECK(frequency_indicator(uniform, 1) == doctest::Approx(std::sqrt(1.0 / 6.0)).epsilon(1e-14));

    std::vector<double> zeros(4, 0.0);
    CHECK_THROWS_AS(frequency_indicator(zeros, 2), std::domain_error);
    CHECK_THROWS_AS(frequency_indicator(uniform, 0), std::domain_error);
    CHECK_THROWS_AS(frequency_indicator(uniform, 7), std::domain_error);
}

TEST_CASE("indicator scale invariance") {
    std::vector<double> c{0.9, -0.5, 0.3, 0.01, -0.004, 2e-5};
    double f = frequency_indicator(c, 2);
    for (double alpha : {-3.0, 0.017, 1e8}) {
        std::vector<double> scaled = c;
        for (double& x : scaled) x *= alpha;
        CHECK(frequency_indicator(scaled, 2) == doctest::Approx(f).epsilon(1e-14));
    }
}

TEST_CASE("explicit weights reduce to the unit-weight form when gamma = 1") {
    std::vector<double> c{0.8, 0.1, 0.05, 0.01};
    std::vector<double> gamma(4, 1.0);
    CHECK(frequency_indicator(c, gamma, 2) == frequency_indicator(c, 2));
}

TEST_CASE("model-function coefficients match the closed form") {
    // c_l = Im[(p-1)^l / p^{l+1}], p = 3/2 - i
    auto c = model_function_coefficients(40);
    std::complex<double> p(1.5, -1.0);
    for (int l = 0; l <= 40; ++l) {
        std::complex<double> v = std::pow(p - 1.0, l) / std::pow(p, l + 1);
        CHECK(c[l] == doctest::Approx(v.imag()).epsilon(1e-12));
    }
}

TEST_CASE("reference threshold properties") {
    double f20 = reference_threshold(20);
    double f40 = reference_threshold(40);
    double f80 = reference_threshold(80);
    CHECK(f20 > 0.0);
    CHECK(f20 < 1.0);
    CHECK(f40 < f20);
    CHECK(f80 < f40);

    // projection residual at N = 80: ||U||^2 = 1/8 exactly
    auto c = model_function_coefficients(80);
    double captured = 0.0;
    for (double x : c) captured += x * x;
    double residual = std::sqrt(std::max(0.125 - captured, 0.0));
    CHECK(residual < 1e-13);
}

TEST_CASE("upper tail coefficient regrouping") {
    GlobalBasisSpec spec;
    spec.N1 = 2;
    spec.N2 = 3;
    spec.beta = 4.0;
    SpinorLayout layout = balanced_layout(spec);
    Eigen::VectorXd c = Eigen::VectorXd::Zero(layout.dim());
    // upper block: [glof1, glof2, lag1, lag2, lag3, bridge]
    c[2] = 2.0;  // b1
    c[3] = -1.0; // b2
    c[4] = 0.5;  // b3
    c[5] = 6.0;  // bridge
    auto tail = upper_tail_coefficients(layout, c);
    REQUIRE(tail.size() == 4);
    // block functions are (Lhat_k - Lhat_{k-1})/sqrt(2), bridge is Lhat_0/sqrt(beta)
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(tail[0] == doctest::Approx(6.0 / 2.0 - 2.0 * s));
    CHECK(tail[1] == doctest::Approx((2.0 - (-1.0)) * s));
    CHECK(tail[2] == doctest::Approx((-1.0 - 0.5) * s));
    CHECK(tail[3] == doctest::Approx(0.5 * s));
}

TEST_CASE("adapt_beta improves the hydrogen ground state vs fixed beta") {
    AdaptProblem problem;
    problem.basis.N1 = 20;
    problem.basis.N2 = 30;
    problem.potential = Coulomb{1.0};
    problem.kappa = -1;
    AdaptResult res = adapt_beta(problem);
    CHECK(res.beta > 0.0);
    double exact = coulomb_exact_energy(1.0, {1, -1});
    double err = std::abs(res.solution.entries[0].binding_energy - exact) / std::abs(exact);
    CHECK(err < 1e-10);

    // trace invariants: indicator non-increasing over accepted steps
    REQUIRE(!res.trace.steps.empty());
    for (std::size_t i = 1; i < res.trace.steps.size(); ++i)
        CHECK(res.trace.steps[i].indicator <= res.trace.steps[i - 1].indicator);
    CHECK(res.trace.final_beta >= 1e-4);
    CHECK(res.trace.final_beta <= 1e5);
}

TEST_CASE("early exit when beta0 is already optimal") {
    AdaptProblem problem;
    problem.basis.N1 = 20;
    problem.basis.N2 = 30;
    problem.potential = Coulomb{1.0};
    problem.kappa = -1;
    AdaptResult first = adapt_beta(problem);
    // second run seeded at the converged beta should accept immediately
    AdaptiveConfig cfg;
    cfg.beta0 = first.beta;
    AdaptResult second = adapt_beta(problem, cfg);
    CHECK(second.trace.stop_reason == StopReason::initial_ok);
    CHECK(second.trace.steps.size() == 1);
    CHECK(second.beta == first.beta);
}

TEST_CASE("uranium: adaptive error beats fixed beta = 1 at matched sizes") {
    AdaptProblem problem;
    problem.basis.N1 = 40;
    problem.basis.N2 = 40;
    problem.basis.L = 0.1;
    problem.potential = Coulomb{92.0};
    problem.kappa = -1;
    AdaptiveConfig cfg;
    cfg.physics_seed = true;
    AdaptResult res = adapt_beta(problem, cfg);
    double exact = coulomb_exact_energy(92.0, {1, -1});
    double adaptive_err =
        std::abs(res.solution.entries[0].binding_energy - exact) / std::abs(exact);

    GlobalBasisSpec fixed = problem.basis;
    fixed.beta = 1.0;
    AssembledSystem sys = assemble(balanced_layout(fixed), problem.potential, -1, {},
                                   OperatorMode::idom);
    EigenSolution sol = solve_gep(sys, 1);
    double fixed_err = 1.0;
    if (!sol.entries.empty())
        fixed_err = std::abs(sol.entries[0].binding_energy - exact) / std::abs(exact);

    CHECK(adaptive_err <= fixed_err);
    CHECK(adaptive_err < 1e-9);
}

TEST_CASE("config validation") {
    AdaptiveConfig bad;
    bad.nu = 1.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    AdaptiveConfig bad2;
    bad2.beta0 = 1e-6;
    CHECK_THROWS_AS(bad2.validate(), std::domain_error);
    AdaptProblem problem;
    problem.basis.N1 = 10;
    problem.basis.N2 = 5; // too small for the M = N/3 tail
    problem.potential = Coulomb{1.0};
    CHECK_THROWS_AS(adapt_beta(problem), std::domain_error);
}
