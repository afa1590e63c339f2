#include "fwdyon/hamiltonians.hpp"

namespace fwdyon {

Expression dot(const Vec3& a, const Vec3& b, const Truncation& t) {
    Expression r;
    for (int i = 0; i < 3; ++i) r += mul(a[i], b[i], t);
    return r;
}

Vec3 cross(const Vec3& a, const Vec3& b, const Truncation& t) {
    Vec3 r;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3, k = (i + 2) % 3;
        r[i] = mul(a[j], b[k], t) - mul(a[k], b[j], t);
    }
    return r;
}

Vec3 scale(const Expression& s, const Vec3& v, const Truncation& t) {
    return {mul(s, v[0], t), mul(s, v[1], t), mul(s, v[2], t)};
}

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

namespace ops {

Expression sym(Sym s, int n) { return Expression::symbol(dim({{s, n}})); }
Expression mat(BasisElement b) { return Expression::matrix(b); }

namespace {
template <class F>
Vec3 make(F f) {
    return {f(1), f(2), f(3)};
}
}  // namespace

Vec3 Pi() { return make([](int i) { return Expression::atom(atoms::Pi(i)); }); }
Vec3 E() { return make([](int i) { return Expression::atom(atoms::E(i)); }); }
Vec3 B() { return make([](int i) { return Expression::atom(atoms::B(i)); }); }
Vec3 alpha() { return make([](int i) { return mat(basis::alpha(i)); }); }
Vec3 Sigma() { return make([](int i) { return mat(basis::sigma(i)); }); }
Vec3 gamma() { return make([](int i) { return mat(basis::gamma(i)); }); }

Expression Pi2() { return dot(Pi(), Pi()); }

Vec3 curlyE() {
    return make([](int i) {
        return sym(Sym::e) * Expression::atom(atoms::E(i)) + sym(Sym::etilde) * Expression::atom(atoms::B(i));
    });
}

Vec3 curlyB() {
    return make([](int i) {
        return sym(Sym::e) * Expression::atom(atoms::B(i)) - sym(Sym::etilde) * Expression::atom(atoms::E(i));
    });
}

Expression rest_term() { return Expression::symbol(dim({{Sym::Eg, 1}}), Rational(1, 2)) * mat(basis::beta()); }

Expression omega_o() { return sym(Sym::c) * dot(alpha(), Pi()); }

Expression omega_e() { return Expression::atom(atoms::V); }

Expression D() { return commutator(omega_o(), omega_e()); }

Expression W() { return commutator(D(), omega_o()); }

Expression omega_e_f() {
    Vec3 f = make([](int i) {
        return sym(Sym::d) * Expression::atom(atoms::E(i)) - sym(Sym::mu) * Expression::atom(atoms::B(i));
    });
    return mat(basis::beta()) * dot(Sigma(), f);
}

Expression omega_o_f() {
    Vec3 f = make([](int i) {
        return sym(Sym::mu) * Expression::atom(atoms::E(i)) + sym(Sym::d) * Expression::atom(atoms::B(i));
    });
    return dot(gamma(), f).times_i();
}

Expression W_f() { return commutator(commutator(omega_o(), omega_e_f()), omega_o()); }

Vec3 mu_m() {
    Expression k = Expression::symbol(dim({{Sym::e, 1}, {Sym::hbar, 1}, {Sym::m, -1}, {Sym::c, -1}}), Rational(1, 2));
    return scale(k, Sigma());
}

Vec3 mu_p() {
    Expression k =
        Expression::symbol(dim({{Sym::etilde, 1}, {Sym::hbar, 1}, {Sym::m, -1}, {Sym::c, -1}}), Rational(-1, 2));
    return scale(k, Sigma());
}

Vec3 xi() { return scale(Expression::symbol(dim({{Sym::m, -1}, {Sym::c, -1}})), Pi()); }

Expression xi2() { return dot(xi(), xi()); }

Vec3 anomalous_even_field() {
    return make([](int i) {
        return Expression::symbol(dim({{Sym::d, 1}, {Sym::Eg, -1}})) * Expression::atom(atoms::E(i)) -
               Expression::symbol(dim({{Sym::mu, 1}, {Sym::Eg, -1}})) * Expression::atom(atoms::B(i));
    });
}

Vec3 anomalous_odd_field() {
    return make([](int i) {
        return Expression::symbol(dim({{Sym::mu, 1}, {Sym::Eg, -1}})) * Expression::atom(atoms::E(i)) +
               Expression::symbol(dim({{Sym::d, 1}, {Sym::Eg, -1}})) * Expression::atom(atoms::B(i));
    });
}

}  // namespace ops

Expression eliminate_mass(const Expression& e) {
    Expression out;
    for (const auto& [k, q] : e.terms()) {
        TermKey nk = k;
        int n = k.dim[Sym::m];
        nk.dim[Sym::m] = 0;
        nk.dim[Sym::Eg] += n;
        nk.dim[Sym::c] -= 2 * n;
        Rational f = 1;
        for (int j = 0; j < (n < 0 ? -n : n); ++j) f *= 2;
        out.add_canonical(nk, n >= 0 ? Rational(q / f) : Rational(q * f));
    }
    return out;
}

Expression specialize(const Expression& e, const ParticleParams& p) {
    bool no_e = p.e == 0, no_et = p.etilde == 0;
    bool no_mu = no_e || p.g_e == 2;
    bool no_d = no_et || p.g_et == 2;
    return filter(e, [&](const TermKey& k) {
        if (no_e && k.dim[Sym::e] != 0) return false;
        if (no_et && k.dim[Sym::etilde] != 0) return false;
        if (no_mu && k.dim[Sym::mu] != 0) return false;
        if (no_d && k.dim[Sym::d] != 0) return false;
        return true;
    });
}

Expression build_dirac_hamiltonian(const ParticleParams& p) {
    return specialize(ops::rest_term() + ops::omega_e() + ops::omega_o(), p);
}

Expression build_dirac_pauli_hamiltonian(const ParticleParams& p) {
    Expression inv_eg = ops::sym(Sym::Eg, -1);
    Expression h = ops::rest_term() + ops::omega_e() + ops::omega_o() + inv_eg * ops::omega_e_f() +
                   inv_eg * ops::omega_o_f();
    return specialize(h, p);
}

Expression drop_external_fields(const Expression& e) {
    return filter(e, [](const TermKey& k) {
        for (Atom a : k.word)
            if (atoms::is_field(a) || a == Atom::V) return false;
        return true;
    });
}

}  // namespace fwdyon
