#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rdirac/adaptive.hpp"
#include "rdirac/eigensolve.hpp"

using namespace rdirac;

namespace {

GlobalBasisSpec spec_of(int N1, int N2, double beta, double L = 1.0) {
    GlobalBasisSpec s;
    s.N1 = N1;
    s.N2 = N2;
    s.beta = beta;
    s.L = L;
    return s;
}

AssembledSystem hydrogen(int N1, int N2, double beta, OperatorMode mode = OperatorMode::idom) {
    return assemble(balanced_layout(spec_of(N1, N2, beta)), Coulomb{1.0}, -1, {}, mode);
}

} // namespace

TEST_CASE("hydrogen ground state matches the closed form to 1e-10 relative") {
    AdaptProblem problem;
    problem.basis = spec_of(40, 40, 1.0);
    problem.potential = Coulomb{1.0};
    problem.kappa = -1;
    AdaptResult res = adapt_beta(problem);
    REQUIRE(!res.solution.entries.empty());
    double exact = coulomb_exact_energy(1.0, {1, -1});
    double e = res.solution.entries[0].binding_energy;
    CHECK(std::abs(e - exact) / std::abs(exact) < 1e-10);
    // reference digits: -0.5000066566
    CHECK(e == doctest::Approx(-0.5000066566).epsilon(1e-9));
}

TEST_CASE("harmonic oscillator first kappa=-1 eigenvalue") {
    AdaptProblem problem;
    problem.basis = spec_of(40, 60, 1.0);
    problem.potential = Harmonic{1.0};
    problem.kappa = -1;
    AdaptResult res = adapt_beta(problem);
    REQUIRE(!res.solution.entries.empty());
    CHECK(std::abs(res.solution.entries[0].binding_energy - 1.4999950) < 1e-6);
}

TEST_CASE("zero potential has no bound states (empty, not an error)") {
    AssembledSystem sys =
        assemble(balanced_layout(spec_of(10, 10, 1.0)), Yukawa{0.0, 1.0}, -1, {},
                 OperatorMode::idom);
    EigenSolution sol = solve_gep(sys, 5);
    CHECK(sol.entries.empty());
}

TEST_CASE("residuals and normalization of retained states") {
    // beta sized for the fourth state so every retained pair is converged
    AssembledSystem sys = hydrogen(30, 60, 0.6);
    EigenSolution sol = solve_gep(sys, 4);
    REQUIRE(sol.entries.size() == 4);
    double prev = -1e300;
    for (const auto& e : sol.entries) {
        CHECK(e.residual < 1e-9);
        CHECK(e.binding_energy > prev);
        prev = e.binding_energy;
        double nrm = e.coefficients.dot(sys.overlap * e.coefficients);
        CHECK(std::abs(nrm - 1.0) < 1e-10);
    }
}

TEST_CASE("idom and raw agree on balanced hydrogen") {
    AssembledSystem si = hydrogen(30, 30, 2.0, OperatorMode::idom);
    AssembledSystem sr = hydrogen(30, 30, 2.0, OperatorMode::raw);
    EigenSolution ei = solve_gep(si, 3);
    EigenSolution er = solve_gep(sr, 3);
    REQUIRE(ei.entries.size() == 3);
    REQUIRE(er.entries.size() == 3);
    for (int i = 0; i < 3; ++i) {
        double a = ei.entries[i].binding_energy;
        double b = er.entries[i].binding_energy;
        CHECK(std::abs(a - b) / std::abs(a) < 1e-9);
    }
}

TEST_CASE("sdom on the harmonic oscillator folds extra states in") {
    GlobalBasisSpec spec = spec_of(20, 50, 2.0);
    Potential pot = Harmonic{1.0};
    AssembledSystem si = assemble(balanced_layout(spec), pot, -1, {}, OperatorMode::idom);
    AssembledSystem ss = assemble(balanced_layout(spec), pot, -1, {}, OperatorMode::sdom);
    EigenSolution ei = solve_gep(si, 8);
    EigenSolution es = solve_gep(ss, 12);
    REQUIRE(!es.entries.empty());
    for (const auto& e : es.entries) CHECK(e.branch_ambiguous);
    // some sdom value has no idom partner (the folded branch); the folded
    // Klein-region values may land anywhere below the physical band
    int unmatched = 0;
    for (const auto& s : es.entries) {
        bool found = false;
        for (const auto& i : ei.entries)
            if (std::abs(s.binding_energy - i.binding_energy) < 1e-3) found = true;
        if (!found) ++unmatched;
    }
    CHECK(unmatched > 0);
}

TEST_CASE("classification: oracle fed back marks states physical") {
    AssembledSystem sys = hydrogen(30, 30, 2.0);
    EigenSolution sol = solve_gep(sys, 3);
    std::vector<double> oracle;
    for (const auto& e : sol.entries) oracle.push_back(e.binding_energy);
    ClassifyOptions opt;
    opt.oracle = oracle;
    opt.enrichment_check = false;
    classify_states(sol, sys, opt);
    for (const auto& e : sol.entries) CHECK(e.classification == StateClass::physical);
}

TEST_CASE("classification: enrichment stability path") {
    AssembledSystem sys = hydrogen(30, 40, 2.0);
    EigenSolution sol = solve_gep(sys, 2);
    ClassifyOptions opt; // no oracle
    classify_states(sol, sys, opt);
    CHECK(sol.entries[0].classification == StateClass::physical);
}

TEST_CASE("normalize_and_sample: norm, node count, small-component scale") {
    AssembledSystem sys = hydrogen(40, 40, 2.0);
    EigenSolution sol = solve_gep(sys, 3);
    REQUIRE(sol.entries.size() == 3);

    std::vector<double> grid;
    const int M = 20000;
    const double rmax = 60.0;
    for (int i = 1; i <= M; ++i) grid.push_back(rmax * i / (M + 1.0));

    for (int state = 0; state < 3; ++state) {
        RadialSamples s = normalize_and_sample(sys, sol.entries[state], grid);
        // trapezoid normalization check
        double nrm = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i)
            nrm += (s.F[i] * s.F[i] + s.G[i] * s.G[i]) * (rmax / (M + 1.0));
        CHECK(nrm == doctest::Approx(1.0).epsilon(1e-5));
        // F > 0 near the origin and n-1 interior sign changes
        CHECK(s.F[0] > 0.0);
        int flips = 0;
        double last = s.F[0];
        for (std::size_t i = 1; i < grid.size(); ++i) {
            if (std::abs(s.F[i]) < 1e-14) continue;
            if (last * s.F[i] < 0.0 && std::abs(s.F[i]) > 1e-8) ++flips;
            if (std::abs(s.F[i]) > 1e-14) last = s.F[i];
        }
        CHECK(flips == state);
    }

    // G/F amplitude ratio for the ground state is O(1/c)
    RadialSamples s = normalize_and_sample(sys, sol.entries[0], grid);
    double fmax = 0.0, gmax = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        fmax = std::max(fmax, std::abs(s.F[i]));
        gmax = std::max(gmax, std::abs(s.G[i]));
    }
    double ratio = gmax / fmax;
    CHECK(ratio > 1e-4);
    CHECK(ratio < 3e-2);
}

TEST_CASE("eigenvalue realness through the fallback QZ path") {
    // force the generic path on a tiny healthy system by calling it directly
    AssembledSystem sys = hydrogen(6, 6, 1.0);
    EigenSolution sol = solve_gep(sys, 2);
    for (const auto& e : sol.entries) CHECK(std::isfinite(e.binding_energy));
}
