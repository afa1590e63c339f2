#include "fwdyon/catalog.hpp"
#include "fwdyon/fw_pipeline.hpp"
#include "fwdyon/hamiltonians.hpp"

#include <gtest/gtest.h>

using namespace fwdyon;

namespace {

Expression inv_eg(int n) { return Expression::symbol(dim({{Sym::Eg, -n}})); }
Expression beta() { return Expression::matrix(basis::beta()); }

Rational factorial(int n) {
    Rational r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

Rational binomial_half(int k) {
    // C(1/2, k)
    Rational r = 1;
    for (int j = 0; j < k; ++j) r *= (Rational(1, 2) - j) / Rational(j + 1);
    return r;
}

const FWRun& dirac_run() {
    static const FWRun run = fw_run(build_dirac_hamiltonian());
    return run;
}

}  // namespace

TEST(Bch, RotationGeneratedByGamma) {
    // exp(theta g) beta exp(-theta g) = beta (cos 2 theta - g sin 2 theta), g = gamma_1, theta = 1/E_g
    Expression g = Expression::matrix(basis::gamma(1));
    Expression got = bch_conjugate(mul(g, inv_eg(1)), beta(), 7);
    Expression want;
    for (int n = 0; n <= 7; ++n) {
        Rational c = Rational(1 << n) / factorial(n);
        if ((n / 2) % 2 == 1) c = -c;
        want += n % 2 == 0 ? c * inv_eg(n) * beta() : -c * inv_eg(n) * mul(beta(), g);
    }
    EXPECT_EQ(got, want);
}

TEST(Bch, CommutingGeneratorIsIdentity) {
    Expression s = inv_eg(1) * Expression::matrix(basis::beta()).times_i();
    EXPECT_EQ(bch_conjugate(s, beta() + inv_eg(1) * beta(), 4), beta() + inv_eg(1) * beta());
}

TEST(Bch, RejectsNonAntiHermitianGenerator) {
    EXPECT_THROW(bch_conjugate(inv_eg(1) * ops::omega_o(), beta(), 3), std::invalid_argument);
    EXPECT_THROW(bch_conjugate(beta() * ops::omega_o(), beta(), 3), std::invalid_argument);
}

TEST(FwRun, FreeParticleMatchesSquareRootSeries) {
    // Without V, the field-free part of the FW Hamiltonian is
    // beta sqrt(E_g^2/4 + c^2 |Pi|^2) expanded in 4 c^2 |Pi|^2 / E_g^2.
    Expression h = ops::rest_term() + ops::omega_o();
    FWRun run = fw_run(h);
    Expression got = drop_external_fields(run.transformed_even());
    Expression want;
    Expression p2 = drop_external_fields(ops::Pi2());
    for (int k = 1; 2 * k - 1 <= 6; ++k) {
        Rational coeff = binomial_half(k) * Rational(1 << (2 * k)) / 2;
        Expression c2k = Expression::symbol(dim({{Sym::c, 2 * k}, {Sym::Eg, 1 - 2 * k}}), coeff);
        want += mul(c2k * beta(), drop_external_fields(power(p2, k)));
    }
    EXPECT_EQ(got, want);
}

TEST(FwRun, StagesEndWithoutOddPart) {
    const FWRun& run = dirac_run();
    EXPECT_TRUE(run.stages.back().split.odd.is_zero());
    EXPECT_TRUE(run.all_checks_pass());
    for (const auto& s : run.stages) EXPECT_TRUE(is_anti_hermitian(s.generator));
}

TEST(FwRun, SecondAndThirdStageLemmas) {
    const auto& st = dirac_run().stages;
    ASSERT_GE(st.size(), 3u);
    EXPECT_TRUE(st[1].split.odd_slice(1).is_zero());
    EXPECT_TRUE(st[1].split.odd_slice(2).is_zero());
    EXPECT_FALSE(st[1].split.odd_slice(3).is_zero());
    for (int n = 1; n <= 3; ++n) EXPECT_TRUE(st[2].split.odd_slice(n).is_zero()) << n;
    EXPECT_FALSE(st[2].split.odd_slice(4).is_zero());
    EXPECT_EQ(st[2].split.even, st[1].split.even);
}

TEST(FwRun, OrdersMatchCatalog) {
    ReferenceCatalog cat = build_reference_catalog();
    auto reports = make_reports(dirac_run(), cat.dirac_orders());
    ASSERT_EQ(reports.size(), 6u);
    for (const auto& r : reports) EXPECT_TRUE(r.pass()) << "order " << r.order << ": " << r.diff.size() << " terms";
}

TEST(FwRun, OrderOneAndTwoByHand) {
    // W / 2 E_g^2 at order 2; order 1 is c^2 beta (alpha.Pi)^2 / E_g
    const FWRun& run = dirac_run();
    EXPECT_EQ(run.derived(1), inv_eg(1) * mul(beta(), power(ops::omega_o(), 2)));
    EXPECT_EQ(run.derived(2), Rational(1, 2) * inv_eg(2) * ops::W());
}

TEST(FwRun, OrderZeroIsPotential) { EXPECT_EQ(dirac_run().derived(0), ops::omega_e()); }

TEST(FwRun, DerivedOrdersAreHermitian) {
    for (int n = 1; n <= 6; ++n) EXPECT_TRUE(is_hermitian(dirac_run().derived(n))) << n;
}

TEST(FwRun, FieldTruncatedRunAgreesWithTruncatedExactRun) {
    FWRun lin = fw_run(build_dirac_hamiltonian(), FWOptions{6, 1});
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(lin.derived(n), truncate_fields(dirac_run().derived(n))) << n;
}

TEST(FwRun, LowerTargetGivesPrefix) {
    FWRun short_run = fw_run(build_dirac_hamiltonian(), FWOptions{3});
    for (int n = 1; n <= 3; ++n) EXPECT_EQ(short_run.derived(n), dirac_run().derived(n)) << n;
}

TEST(FwRun, DiracPauliReducesToDiracAtGTwo) {
    ParticleParams two{1, 1, 1, 2, 2};
    FWRun run = fw_run(build_dirac_pauli_hamiltonian(two), FWOptions{6, 1});
    for (int n = 1; n <= 6; ++n) EXPECT_EQ(run.derived(n), truncate_fields(dirac_run().derived(n))) << n;
}

TEST(FwRun, DiracPauliOrdersMatchCatalog) {
    ReferenceCatalog cat = build_reference_catalog();
    FWRun run = fw_run(build_dirac_pauli_hamiltonian(), FWOptions{6, 1});
    auto reports = make_reports(run, cat.pauli_orders());
    for (const auto& r : reports) EXPECT_TRUE(r.pass()) << "order " << r.order;
}

TEST(FwRun, ReportJson) {
    ReferenceCatalog cat = build_reference_catalog();
    auto reports = make_reports(dirac_run(), cat.dirac_orders());
    auto j = to_json(reports[1]);
    EXPECT_EQ(j["order"], 2);
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_EQ(expression_from_json(j["derived"]), reports[1].derived);
    EXPECT_EQ(extract_order(reports, 3), dirac_run().derived(3));
    EXPECT_THROW(extract_order(reports, 9), std::out_of_range);
}

TEST(Catalog, JsonRoundTripAndFixture) {
    ReferenceCatalog cat = build_reference_catalog();
    EXPECT_EQ(ReferenceCatalog::from_json(cat.to_json()), cat);
    auto path = catalog_path();
    if (std::filesystem::exists(path)) EXPECT_EQ(load_catalog(path), cat) << "fixture is stale; run export-catalog";
}
