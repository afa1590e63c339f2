#pragma once

#include "fwdyon/expression.hpp"

#include <array>

namespace fwdyon {

/// Particle data for the symbolic pipeline.  Charges only matter through
/// whether they vanish (the engine keeps e and etilde symbolic); the gyro
/// ratios enter once the anomalous moments are specialized.
struct ParticleParams {
    Rational m = 1;
    Rational e = 1;
    Rational etilde = 1;
    Rational g_e = 2;
    Rational g_et = 2;

    /// Gyro ratios away from 2 so that mu'' and d'' survive symbolically.
    static ParticleParams generic() { return {1, 1, 1, 3, 3}; }
};

using Vec3 = std::array<Expression, 3>;

Expression dot(const Vec3& a, const Vec3& b, const Truncation& t = {});
Vec3 cross(const Vec3& a, const Vec3& b, const Truncation& t = {});
Vec3 scale(const Expression& s, const Vec3& v, const Truncation& t = {});
Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);

namespace ops {

Expression sym(Sym s, int n = 1);
Expression mat(BasisElement b);

Vec3 Pi();
Vec3 E();
Vec3 B();
Vec3 alpha();
Vec3 Sigma();
Vec3 gamma();

/// Pi.Pi
Expression Pi2();

/// Composite couplings: curly-E = e E + etilde B, curly-B = e B - etilde E.
Vec3 curlyE();
Vec3 curlyB();

Expression rest_term();  // (E_g / 2) beta
Expression omega_o();    // c alpha.Pi
Expression omega_e();    // V
Expression D();          // [Omega_o, Omega_E]
Expression W();          // [D, Omega_o]

/// Anomalous pieces without their 1/E_g: they enter the Hamiltonian as X / E_g.
Expression omega_e_f();  // beta Sigma.(-mu'' B + d'' E)
Expression omega_o_f();  // i gamma.(mu'' E + d'' B)
Expression W_f();        // [[Omega_o, Omega_E^f], Omega_o]

/// Intrinsic moments: e hbar / 2mc Sigma and -etilde hbar / 2mc Sigma.
Vec3 mu_m();
Vec3 mu_p();

/// xi = Pi / (m c) and |xi|^2, in terms of m (see eliminate_mass).
Vec3 xi();
Expression xi2();

/// Anomalous coupling vectors (-mu' B + d' E) and (mu' E + d' B), mu' = mu''/E_g.
Vec3 anomalous_even_field();
Vec3 anomalous_odd_field();

}  // namespace ops

/// Rewrite every power of m through m = E_g / (2 c^2).
Expression eliminate_mass(const Expression& e);

/// Drop terms whose symbols vanish for the given particle: e or etilde equal
/// to zero, mu'' when (g_e = 2 or e = 0), d'' when (g_et = 2 or etilde = 0).
Expression specialize(const Expression& e, const ParticleParams& p);

Expression build_dirac_hamiltonian(const ParticleParams& p = {});
Expression build_dirac_pauli_hamiltonian(const ParticleParams& p = ParticleParams::generic());

/// Remove every term that carries a field atom or V: the free-particle limit.
Expression drop_external_fields(const Expression& e);

}  // namespace fwdyon
