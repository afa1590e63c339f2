#include "fwdyon/catalog.hpp"
#include "fwdyon/reduction.hpp"
#include "fwdyon/suites.hpp"

#include <gtest/gtest.h>

using namespace fwdyon;

namespace {

Expression at(Atom a) { return Expression::atom(a); }

const Derivations& derivations() {
    static const Derivations d = derive_all(build_reference_catalog());
    return d;
}

Expression without_pi(const Expression& e) {
    return filter(e, [](const TermKey& k) {
        for (Atom a : k.word)
            if (atoms::is_pi(a)) return false;
        return true;
    });
}

}  // namespace

TEST(SymmetricSplit, TwoMomentaByHand) {
    // (Pi1 Pi2 + Pi2 Pi1)/2 = Pi1 Pi2 - (i hbar / 2c)(e B3 - etilde E3)
    Expression want = mul(at(Atom::Pi1), at(Atom::Pi2)) -
                      Rational(1, 2) * commutator(at(Atom::Pi1), at(Atom::Pi2));
    EXPECT_EQ(symmetrized_word({Atom::Pi2, Atom::Pi1}), want);
    EXPECT_EQ(symmetrized_word({Atom::Pi1, Atom::Pi2}), want);

    SymmetricSplit s = symmetric_split(mul(at(Atom::Pi1), at(Atom::Pi2)));
    EXPECT_EQ(s.field_free, mul(at(Atom::Pi1), at(Atom::Pi2)));
    EXPECT_EQ(s.field_linear, Rational(1, 2) * commutator(at(Atom::Pi1), at(Atom::Pi2)));
}

TEST(SymmetricSplit, RepeatedAtomsAreAlreadySymmetric) {
    Word w{Atom::Pi1, Atom::Pi1, Atom::Pi1};
    EXPECT_EQ(symmetrized_word(w), power(at(Atom::Pi1), 3));
}

TEST(SymmetricSplit, KineticPowersCarryNoFieldTerm) {
    Expression p2 = ops::Pi2();
    for (int k = 1; k <= 3; ++k) {
        SymmetricSplit s = symmetric_split(power(p2, k));
        EXPECT_TRUE(s.field_linear.is_zero()) << "|Pi|^" << 2 * k << ": " << s.field_linear.size() << " terms";
    }
}

TEST(SymmetricSplit, RecombinesToTheOriginal) {
    // sum of symmetrized products plus the field-linear part gives back the input
    Expression e = truncate_fields(mul(ops::Pi2(), ops::omega_o()) + ops::W());
    SymmetricSplit s = symmetric_split(e);
    Expression back = s.field_linear;
    for (const auto& [k, q] : s.field_free.terms())
        back += mul(Expression::symbol(k.dim, q) * Expression::matrix(k.mat()), truncate_fields(symmetrized_word(k.word)));
    EXPECT_EQ(truncate_fields(back), e);
}

TEST(Reduction, DiracOrbitAndSpin) {
    const auto& d = derivations();
    PhysicalReduction red = reduce_to_physical(d.dirac);
    EXPECT_TRUE(red.complete());
    EXPECT_EQ(red.orbit, d.catalog.at("dirac.orbit"));
    EXPECT_EQ(red.spin, d.catalog.at("dirac.spin"));
}

TEST(Reduction, PartsAddUpToTheTruncatedHamiltonian) {
    const auto& d = derivations();
    PhysicalReduction red = reduce_to_physical(d.dirac);
    Expression total = truncate_fields(d.dirac.stages.back().split.rest);
    for (int n = 0; n <= 6; ++n) total += truncate_fields(d.dirac.derived(n));
    SymmetricSplit s = symmetric_split(total);
    EXPECT_EQ(red.orbit + red.spin, s.field_free + s.field_linear);
}

TEST(Reduction, OrbitIsRestKineticAndPotential) {
    const auto& d = derivations();
    PhysicalReduction red = reduce_to_physical(d.dirac);
    Expression rest = without_pi(red.orbit);
    EXPECT_EQ(rest, ops::rest_term() + ops::omega_e());
}

TEST(Reduction, PauliExtrasSplitByCoupling) {
    const auto& d = derivations();
    PhysicalReduction red = reduce_to_physical(d.pauli);
    PauliExtras ex = pauli_extra_terms(red.spin);
    EXPECT_TRUE(ex.residue.is_zero());
    EXPECT_EQ(ex.fw1, d.catalog.at("pauli.fw1"));
    EXPECT_EQ(ex.fw2, d.catalog.at("pauli.fw2"));
    EXPECT_EQ(red.spin - ex.fw1 - ex.fw2, d.catalog.at("dirac.spin"));
    // leading term: beta Sigma.(-mu'' B + d'' E) / E_g
    EXPECT_EQ(without_pi(ex.fw1), d.catalog.at("pauli.fw1.1"));
}

TEST(BetaPoly, RadialExpansion) {
    // |beta|^2 = b1^2 + b2^2 + b3^2
    SeriesPoly s(2, {0, 0, 1});
    BetaPoly r = BetaPoly::radial(s);
    EXPECT_EQ(r.coeff({2, 0, 0}), 1);
    EXPECT_EQ(r.coeff({0, 2, 0}), 1);
    EXPECT_EQ(r.coeff({1, 1, 0}), 0);
    EXPECT_THROW(BetaPoly::radial(SeriesPoly(2, {0, 1})), std::invalid_argument);
    BetaPoly b1 = BetaPoly::component(2, 1);
    EXPECT_TRUE((b1 * b1 * b1).is_zero());
}

TEST(Tbmt, RestFrameMagneticCoupling) {
    // at beta = 0 the spin energy is -(g/2)(e hbar c / E_g) beta Sigma.B
    for (Rational g : {Rational(0), Rational(2), Rational(3)}) {
        ParticleParams p{1, 1, 0, g, 2};
        SpinPolys t = tbmt_polynomials(p, 5);
        for (int i = 1; i <= 3; ++i) {
            SpinChannel ch{3, static_cast<std::uint8_t>(i), false, atoms::B(i), Sym::e};
            Rational c = t.count(ch) ? t.at(ch).coeff({0, 0, 0}) : Rational(0);
            EXPECT_EQ(c, -g / 2) << "g=" << g.get_str() << " i=" << i;
        }
    }
}

TEST(Tbmt, SpinHamiltonianMatchesOnGrid) {
    const auto& d = derivations();
    PhysicalReduction red = reduce_to_physical(d.pauli);
    PauliExtras ex = pauli_extra_terms(red.spin);
    Expression spin = red.spin - ex.fw1 - ex.fw2;
    for (const auto& [ge, gt] : tbmt_grid()) {
        TbmtMatch m = match_tbmt(spin, ex.fw1, ex.fw2, ParticleParams{1, 1, 1, ge, gt});
        EXPECT_TRUE(m.pass()) << ge.get_str() << "," << gt.get_str() << ": " << m.mismatches.size() << " mismatches";
    }
}

TEST(Tbmt, DetectsAWrongAnomalousTerm) {
    const auto& d = derivations();
    PhysicalReduction red = reduce_to_physical(d.pauli);
    PauliExtras ex = pauli_extra_terms(red.spin);
    Expression spin = red.spin - ex.fw1 - ex.fw2;
    ParticleParams p{1, 1, 1, 3, 1};
    EXPECT_FALSE(match_tbmt(spin, Rational(2) * ex.fw1, ex.fw2, p).pass());
    EXPECT_FALSE(match_tbmt(spin, ex.fw1, Expression(), p).pass());
}

TEST(Tbmt, RejectsNonSpinTerms) {
    std::vector<std::string> errors;
    Expression h = Expression::symbol(dim({{Sym::hbar, 1}, {Sym::c, 1}, {Sym::Eg, -1}, {Sym::e, 1}})) * at(Atom::V);
    spin_polynomials(h, ParticleParams{}, 5, &errors);
    EXPECT_FALSE(errors.empty());
}

TEST(EffectiveDipoles, RestFrameValuesAreIntrinsic) {
    Expression beta = Expression::matrix(basis::beta());
    for (int order : {1, 4}) {
        auto [p, m] = effective_dipoles(order);
        Vec3 mp = ops::mu_p(), mm = ops::mu_m();
        for (int i = 0; i < 3; ++i) {
            EXPECT_EQ(without_pi(p[i]), eliminate_mass(mul(beta, mp[i]))) << order << " " << i;
            EXPECT_EQ(without_pi(m[i]), eliminate_mass(mul(beta, mm[i]))) << order << " " << i;
        }
    }
    EXPECT_THROW(effective_dipoles(2), std::invalid_argument);
}
