#include "rdirac/potentials.hpp"

#include <cmath>
#include <stdexcept>

#include "rdirac/specfun.hpp"

namespace rdirac {

namespace {

const double sqrt_pi = 1.7724538509055160;

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

} // namespace

void validate(const Potential& pot) {
    std::visit(
        [](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Coulomb>) {
                require(p.Z > 0.0, "Coulomb: Z must be > 0");
            } else if constexpr (std::is_same_v<T, GaussianNucleus>) {
                require(p.Z > 0.0, "GaussianNucleus: Z must be > 0");
                require(p.R > 0.0, "GaussianNucleus: R must be > 0");
            } else if constexpr (std::is_same_v<T, Yukawa>) {
                require(p.lambda >= 0.0, "Yukawa: lambda must be >= 0");
            } else if constexpr (std::is_same_v<T, Morse>) {
                require(p.De > 0.0, "Morse: De must be > 0");
                require(p.alpha > 0.0, "Morse: alpha must be > 0");
                require(p.re > 0.0, "Morse: re must be > 0");
            } else if constexpr (std::is_same_v<T, Hellmann>) {
                require(p.Z > 0.0, "Hellmann: Z must be > 0");
                require(p.lambda >= 0.0, "Hellmann: lambda must be >= 0");
            } else if constexpr (std::is_same_v<T, Harmonic>) {
                require(p.k > 0.0, "Harmonic: k must be > 0");
            }
        },
        pot);
}

std::string potential_name(const Potential& pot) {
    return std::visit(
        [](const auto& p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Coulomb>) return "coulomb";
            else if constexpr (std::is_same_v<T, GaussianNucleus>) return "gaussian";
            else if constexpr (std::is_same_v<T, Yukawa>) return "yukawa";
            else if constexpr (std::is_same_v<T, Morse>) return "morse";
            else if constexpr (std::is_same_v<T, Hellmann>) return "hellmann";
            else return "harmonic";
        },
        pot);
}

double evaluate(const Potential& pot, double r) {
    require(std::isfinite(r), "evaluate: non-finite r");
    return std::visit(
        [r](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Coulomb>) {
                require(r > 0.0, "Coulomb potential is singular at r <= 0");
                return -p.Z / r;
            } else if constexpr (std::is_same_v<T, GaussianNucleus>) {
                require(r >= 0.0, "GaussianNucleus: r must be >= 0");
                if (r == 0.0) return -2.0 * p.Z / (sqrt_pi * p.R);
                return -p.Z * rdirac::erf(r / p.R) / r;
            } else if constexpr (std::is_same_v<T, Yukawa>) {
                require(r > 0.0, "Yukawa potential is singular at r <= 0");
                return -p.V0 * std::exp(-p.lambda * r) / r;
            } else if constexpr (std::is_same_v<T, Morse>) {
                require(r >= 0.0, "Morse: r must be >= 0");
                double e = std::exp(-p.alpha * (r - p.re));
                return p.De * (e * e - 2.0 * e);
            } else if constexpr (std::is_same_v<T, Hellmann>) {
                require(r > 0.0, "Hellmann potential is singular at r <= 0");
                return (-p.Z + p.V0 * std::exp(-p.lambda * r)) / r;
            } else {
                require(r >= 0.0, "Harmonic: r must be >= 0");
                return 0.5 * p.k * r * r;
            }
        },
        pot);
}

double coulomb_strength(const Potential& pot) {
    return std::visit(
        [](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Coulomb>) return p.Z;
            else if constexpr (std::is_same_v<T, Yukawa>) return p.V0;
            else if constexpr (std::is_same_v<T, Hellmann>) return p.Z - p.V0;
            else return 0.0;
        },
        pot);
}

double coulomb_exact_energy(double Z, const QuantumState& state, const PhysicsConstants& consts) {
    require(state.n >= 1, "coulomb_exact_energy: n must be >= 1");
    require(state.kappa != 0, "coulomb_exact_energy: kappa must be nonzero");
    require(state.n >= lowest_principal(state.kappa),
            "coulomb_exact_energy: no such (n, kappa) state");
    double s = singularity_exponent(Z, state.kappa, consts);
    double denom = state.n - std::abs(state.kappa) + s;
    double zc = Z / consts.c;
    double q = zc * zc / (denom * denom);
    // c^2 (1/sqrt(1+q) - 1) without cancellation:
    double root = std::sqrt(1.0 + q);
    double mc2 = consts.mass * consts.c * consts.c;
    return -mc2 * q / (root * (1.0 + root));
}

double singularity_exponent(double Z, int kappa, const PhysicsConstants& consts) {
    require(kappa != 0, "singularity_exponent: kappa must be nonzero");
    require(Z >= 0.0, "singularity_exponent: Z must be >= 0");
    double zc = Z / consts.c;
    double k2 = static_cast<double>(kappa) * kappa;
    require(k2 > zc * zc, "singularity_exponent: |kappa| <= Z/c, exponent imaginary");
    return std::sqrt(k2 - zc * zc);
}

double asymptotic_decay_rate(double E_binding, const PhysicsConstants& consts) {
    double mc2 = consts.mass * consts.c * consts.c;
    require(E_binding < 0.0 && E_binding > -2.0 * mc2,
            "asymptotic_decay_rate: not a bound-state energy");
    // lambda^2 = (m c)^2 - (E_total/c)^2 = -2 m E_b - (E_b/c)^2
    double l2 = -2.0 * consts.mass * E_binding - (E_binding / consts.c) * (E_binding / consts.c);
    return std::sqrt(l2);
}

int lowest_principal(int kappa) {
    require(kappa != 0, "lowest_principal: kappa must be nonzero");
    return kappa < 0 ? -kappa : kappa + 1;
}

namespace {

// Table-footnote constants; conversions must reproduce them exactly.
const double hartree_in_ev = 27.211385;
const double bohr_in_nm = 5.291772e-2;
const double electron_mass_in_amu = 5.48578e-4;

} // namespace

Unit parse_unit(const std::string& name) {
    if (name == "hartree" || name == "Ha") return Unit::hartree;
    if (name == "ev" || name == "eV") return Unit::ev;
    if (name == "bohr" || name == "Bohr") return Unit::bohr;
    if (name == "nm") return Unit::nm;
    if (name == "amu" || name == "u") return Unit::amu;
    if (name == "me" || name == "electron-mass") return Unit::electron_mass;
    throw std::domain_error("parse_unit: unknown unit " + name);
}

double convert_unit(double value, Unit from, Unit to) {
    if (from == to) return value;
    if (from == Unit::hartree && to == Unit::ev) return value * hartree_in_ev;
    if (from == Unit::ev && to == Unit::hartree) return value / hartree_in_ev;
    if (from == Unit::bohr && to == Unit::nm) return value * bohr_in_nm;
    if (from == Unit::nm && to == Unit::bohr) return value / bohr_in_nm;
    if (from == Unit::amu && to == Unit::electron_mass) return value / electron_mass_in_amu;
    if (from == Unit::electron_mass && to == Unit::amu) return value * electron_mass_in_amu;
    throw std::domain_error("convert_unit: unsupported unit pair");
}

} // namespace rdirac
