#ifndef RDIRAC_POTENTIALS_HPP
#define RDIRAC_POTENTIALS_HPP

#include <string>
#include <variant>

namespace rdirac {

// All parameters in Hartree atomic units unless noted.

struct Coulomb {
    double Z; // nuclear charge
};

struct GaussianNucleus {
    double Z;
    double R; // nuclear size parameter, Bohr
};

struct Yukawa {
    double V0;     // coupling strength
    double lambda; // screening, 1/Bohr
};

struct Morse {
    double De;    // dissociation energy, Hartree
    double re;    // equilibrium length, Bohr
    double alpha; // width, 1/Bohr
};

struct Hellmann {
    double Z;
    double V0;
    double lambda;
};

struct Harmonic {
    double k = 1.0; // V = k r^2 / 2
};

using Potential = std::variant<Coulomb, GaussianNucleus, Yukawa, Morse, Hellmann, Harmonic>;

struct PhysicsConstants {
    double c = 137.035999084; // speed of light in a.u. (CODATA)
    double mass = 1.0;        // particle mass in electron masses
};

struct QuantumState {
    int n;     // principal quantum number, >= 1
    int kappa; // relativistic angular momentum quantum number, != 0
};

void validate(const Potential& pot);
std::string potential_name(const Potential& pot);

/// V(r) in Hartree. r must be > 0 for members singular at the origin;
/// bounded members return the analytic limit at r = 0.
double evaluate(const Potential& pot, double r);

/// Coefficient Z_eff of the -1/r singularity at the origin (0 for bounded
/// potentials). Determines the wavefunction exponent r^s.
double coulomb_strength(const Potential& pot);

/// Fine-structure binding energy (total minus rest mass), Hartree:
///   E = c^2 / sqrt(1 + (Z/c)^2 / (n - |kappa| + s)^2) - c^2
/// evaluated in a cancellation-free form. Requires |kappa| > Z/c.
double coulomb_exact_energy(double Z, const QuantumState& state,
                            const PhysicsConstants& consts = {});

/// s = sqrt(kappa^2 - (Z/c)^2); both radial components behave as r^s at the
/// origin. Requires |kappa| > Z/c.
double singularity_exponent(double Z, int kappa, const PhysicsConstants& consts = {});

/// lambda = sqrt((m c)^2 - (E_total/c)^2) governing the e^{-lambda r} tail,
/// computed as sqrt(-2 m E_b - (E_b/c)^2). Requires a bound-state energy
/// E_binding in (-2 m c^2, 0).
double asymptotic_decay_rate(double E_binding, const PhysicsConstants& consts = {});

/// Lowest principal quantum number carrying a given kappa
/// (1 for kappa=-1; |kappa| for kappa<0; kappa+1 for kappa>0).
int lowest_principal(int kappa);

enum class Unit { hartree, ev, bohr, nm, amu, electron_mass };
Unit parse_unit(const std::string& name);

/// Linear conversion between the supported pairs Hartree<->eV, Bohr<->nm,
/// amu<->electron masses, using 1 Hartree = 27.211385 eV,
/// 1 Bohr = 5.291772e-2 nm, m_e = 5.48578e-4 u.
double convert_unit(double value, Unit from, Unit to);

} // namespace rdirac

#endif
