#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "rdirac/potentials.hpp"

using namespace rdirac;

TEST_CASE("evaluate frozen values") {
    CHECK(evaluate(Coulomb{2.0}, 0.5) == doctest::Approx(-4.0).epsilon(1e-15));
    Morse m{0.17, 1.4, 1.02};
    CHECK(evaluate(m, m.re) == doctest::Approx(-m.De).epsilon(1e-15));
    GaussianNucleus g{92.0, 1e-4};
    CHECK(evaluate(g, 0.0) ==
          doctest::Approx(-2.0 * g.Z / (std::sqrt(M_PI) * g.R)).epsilon(1e-15));
    CHECK_THROWS_AS(evaluate(Coulomb{1.0}, 0.0), std::domain_error);
    CHECK_THROWS_AS(evaluate(Yukawa{1.0, 0.1}, -1.0), std::domain_error);
}

TEST_CASE("reduction identities") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> rr(1e-3, 50.0);
    Yukawa yk{3.5, 0.0};
    Coulomb c35{3.5};
    Hellmann h{2.2, 0.0, 0.4};
    Coulomb c22{2.2};
    for (int i = 0; i < 100; ++i) {
        double r = rr(rng);
        CHECK(evaluate(yk, r) == doctest::Approx(evaluate(c35, r)).epsilon(1e-15));
        CHECK(evaluate(h, r) == doctest::Approx(evaluate(c22, r)).epsilon(1e-15));
    }
}

TEST_CASE("Gaussian nucleus small-r series") {
    GaussianNucleus g{60.0, 9e-5};
    double spi = std::sqrt(M_PI);
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> rr(1e-9, g.R / 100.0);
    for (int i = 0; i < 40; ++i) {
        double r = rr(rng);
        double series = -2.0 * g.Z / (spi * g.R) + 2.0 * g.Z * r * r / (3.0 * spi * g.R * g.R * g.R) -
                        g.Z * std::pow(r, 4) / (5.0 * spi * std::pow(g.R, 5));
        CHECK(evaluate(g, r) == doctest::Approx(series).epsilon(1e-12));
    }
}

TEST_CASE("coulomb_exact_energy reproduces the reference digit string") {
    // Z=3, n=1, kappa=-1 ground state
    double e = coulomb_exact_energy(3.0, {1, -1});
    CHECK(std::abs(e - (-4.5005393)) < 5e-8);
}

TEST_CASE("coulomb_exact_energy nonrelativistic limit") {
    PhysicsConstants big_c{1e6, 1.0};
    double e = coulomb_exact_energy(1.0, {1, -1}, big_c);
    CHECK(e == doctest::Approx(-0.5).epsilon(1e-9));
    double e3 = coulomb_exact_energy(1.0, {3, -1}, big_c);
    CHECK(e3 == doctest::Approx(-0.5 / 9.0).epsilon(1e-9));
}

TEST_CASE("coulomb_exact_energy matches the direct formula at Z=92") {
    PhysicsConstants consts;
    double s = std::sqrt(1.0 - std::pow(92.0 / consts.c, 2));
    long double direct =
        consts.c * consts.c *
        (1.0L / std::sqrt(1.0L + std::pow((long double)(92.0 / consts.c) / s, 2)) - 1.0L);
    double e = coulomb_exact_energy(92.0, {1, -1}, consts);
    CHECK(e == doctest::Approx(static_cast<double>(direct)).epsilon(1e-13));
}

TEST_CASE("coulomb_exact_energy monotone in n") {
    double prev = -1e300;
    for (int n = 1; n <= 8; ++n) {
        double e = coulomb_exact_energy(92.0, {n, -1});
        CHECK(e > prev);
        prev = e;
    }
}

TEST_CASE("singularity exponent") {
    CHECK(singularity_exponent(0.0, -1) == doctest::Approx(1.0));
    CHECK(singularity_exponent(0.0, 2) == doctest::Approx(2.0));
    PhysicsConstants consts;
    CHECK(singularity_exponent(92.0, -1) ==
          doctest::Approx(std::sqrt(1.0 - std::pow(92.0 / consts.c, 2))).epsilon(1e-15));
    CHECK(singularity_exponent(92.0, 3) == doctest::Approx(singularity_exponent(92.0, -3)));
    CHECK_THROWS_AS(singularity_exponent(140.0, -1), std::domain_error);
}

TEST_CASE("asymptotic decay rate") {
    PhysicsConstants consts;
    double mc2 = consts.c * consts.c;
    CHECK(asymptotic_decay_rate(-1e-9) == doctest::Approx(std::sqrt(2e-9)).epsilon(1e-6));
    // total energy 0 gives lambda = c (evaluate just inside the domain edge)
    CHECK(asymptotic_decay_rate(-mc2 * (1.0 - 1e-13)) == doctest::Approx(consts.c).epsilon(1e-9));
    double egs = coulomb_exact_energy(1.0, {1, -1});
    CHECK(asymptotic_decay_rate(egs) == doctest::Approx(1.0).epsilon(1e-4));
    CHECK_THROWS_AS(asymptotic_decay_rate(0.5), std::domain_error);
}

TEST_CASE("unit conversions use the table constants exactly") {
    CHECK(convert_unit(1.0, Unit::hartree, Unit::ev) == 27.211385);
    CHECK(convert_unit(0.0, Unit::ev, Unit::hartree) == 0.0);
    CHECK(convert_unit(1.0, Unit::amu, Unit::electron_mass) ==
          doctest::Approx(1.0 / 5.48578e-4).epsilon(1e-15));
    CHECK(convert_unit(1.0, Unit::bohr, Unit::nm) == 5.291772e-2);
    CHECK(convert_unit(convert_unit(0.7, Unit::bohr, Unit::nm), Unit::nm, Unit::bohr) ==
          doctest::Approx(0.7).epsilon(1e-15));
    CHECK_THROWS_AS(convert_unit(1.0, Unit::bohr, Unit::ev), std::domain_error);
}

TEST_CASE("coulomb_strength of the tagged union") {
    CHECK(coulomb_strength(Coulomb{4.0}) == 4.0);
    CHECK(coulomb_strength(Yukawa{2.5, 0.3}) == 2.5);
    CHECK(coulomb_strength(Hellmann{2.0, -1.0, 0.01}) == 3.0);
    CHECK(coulomb_strength(Harmonic{}) == 0.0);
    CHECK(coulomb_strength(GaussianNucleus{80.0, 1e-4}) == 0.0);
}

TEST_CASE("lowest principal per kappa") {
    CHECK(lowest_principal(-1) == 1);
    CHECK(lowest_principal(-2) == 2);
    CHECK(lowest_principal(1) == 2);
    CHECK(lowest_principal(2) == 3);
    CHECK(lowest_principal(-3) == 3);
}

TEST_CASE("validate rejects bad parameters") {
    CHECK_THROWS_AS(validate(Potential{Coulomb{-1.0}}), std::domain_error);
    CHECK_THROWS_AS(validate(Potential{GaussianNucleus{10.0, 0.0}}), std::domain_error);
    CHECK_THROWS_AS(validate(Potential{Morse{-0.1, 1.0, 1.0}}), std::domain_error);
    CHECK_NOTHROW(validate(Potential{Yukawa{1.0, 0.0}}));
}
