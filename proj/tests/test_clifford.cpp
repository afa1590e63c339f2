#include "fwdyon/clifford.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace fwdyon;

namespace {

std::vector<BasisElement> all_elements() {
    std::vector<BasisElement> v;
    for (std::uint8_t l = 0; l < 4; ++l)
        for (std::uint8_t r = 0; r < 4; ++r) v.push_back({l, r, 0});
    return v;
}

bool numeric_equal(const Matrix4c& a, const Matrix4c& b) { return (a - b).cwiseAbs().maxCoeff() == 0.0; }

oracle::QMatrix exact(BasisElement b) { return oracle::dirac_matrix(b.left, b.right, b.phase); }

}  // namespace

TEST(Clifford, AlphaXAlphaYIsISigmaZ) {
    BasisElement p = basis_mul(basis::alpha(1), basis::alpha(2));
    BasisElement want = basis::sigma(3);
    want.phase = 1;
    EXPECT_EQ(p, want);
}

TEST(Clifford, BetaSquaresToIdentity) { EXPECT_EQ(basis_mul(basis::beta(), basis::beta()), basis::identity()); }

TEST(Clifford, EtaAlphaCommutator) {
    // [eta, alpha_l] = -2 beta Sigma_l, checked on the exact matrices
    for (int l = 1; l <= 3; ++l) {
        auto ea = exact(basis_mul(basis::eta(), basis::alpha(l)));
        auto ae = exact(basis_mul(basis::alpha(l), basis::eta()));
        auto lhs = oracle::qadd(ea, oracle::qscale(ae, {-1, 0}));
        auto rhs = oracle::qscale(exact(basis::beta_sigma(l)), {-2, 0});
        EXPECT_EQ(lhs, rhs) << "l=" << l;
    }
}

TEST(Clifford, AlphaProductRule) {
    // alpha_q alpha_j = delta_qj + i eps_qjl Sigma_l
    for (int q = 1; q <= 3; ++q)
        for (int j = 1; j <= 3; ++j) {
            BasisElement p = basis_mul(basis::alpha(q), basis::alpha(j));
            if (q == j) {
                EXPECT_EQ(p, basis::identity());
            } else {
                int l = 6 - q - j;
                bool cyclic = (q % 3) + 1 == j;
                BasisElement want = basis::sigma(l);
                want.phase = cyclic ? 1 : 3;
                EXPECT_EQ(p, want);
            }
        }
}

TEST(Clifford, Grades) {
    EXPECT_EQ(beta_grade(basis::sigma(3)), Grade::Even);
    EXPECT_EQ(beta_grade(basis::alpha(1)), Grade::Odd);
    EXPECT_EQ(beta_grade(basis::gamma(2)), Grade::Odd);
    // numeric anticommutator oracle for gamma_y
    auto b = exact(basis::beta()), g = exact(basis::gamma(2));
    EXPECT_TRUE(oracle::qzero(oracle::qadd(oracle::qmatmul(b, g), oracle::qmatmul(g, b))));
}

TEST(Clifford, GradeMatchesCommutationWithBeta) {
    auto b = exact(basis::beta());
    for (auto e : all_elements()) {
        auto m = exact(e);
        bool commutes = oracle::qmatmul(b, m) == oracle::qmatmul(m, b);
        auto anti = oracle::qadd(oracle::qmatmul(b, m), oracle::qmatmul(m, b));
        EXPECT_EQ(beta_grade(e) == Grade::Even, commutes);
        EXPECT_EQ(beta_grade(e) == Grade::Odd, oracle::qzero(anti));
    }
}

TEST(Clifford, GradeIsMultiplicative) {
    for (auto a : all_elements())
        for (auto b : all_elements()) {
            bool even = beta_grade(a) == beta_grade(b);
            EXPECT_EQ(beta_grade(basis_mul(a, b)) == Grade::Even, even);
        }
}

TEST(Clifford, NumericImages) {
    Matrix4c beta = Matrix4c::Zero();
    beta.diagonal() << 1, 1, -1, -1;
    EXPECT_TRUE(numeric_equal(to_numeric(basis::beta()), beta));
    Matrix4c eta = Matrix4c::Zero();
    eta.block<2, 2>(0, 2) = -Eigen::Matrix2cd::Identity();
    eta.block<2, 2>(2, 0) = Eigen::Matrix2cd::Identity();
    EXPECT_TRUE(numeric_equal(to_numeric(basis::eta()), eta));
    EXPECT_TRUE(numeric_equal(to_numeric(basis::identity()), Matrix4c::Identity()));
}

TEST(Clifford, HomomorphismOnAllProducts) {
    for (auto a : all_elements())
        for (auto b : all_elements()) {
            EXPECT_TRUE(numeric_equal(to_numeric(basis_mul(a, b)), to_numeric(a) * to_numeric(b)));
            EXPECT_EQ(exact(basis_mul(a, b)), oracle::qmatmul(exact(a), exact(b)));
        }
}

TEST(Clifford, GammaIsBetaAlpha) {
    for (int i = 1; i <= 3; ++i) EXPECT_EQ(basis::gamma(i), basis_mul(basis::beta(), basis::alpha(i)));
}

TEST(Clifford, SquaresArePlusMinusOne) {
    for (auto a : all_elements()) {
        for (std::uint8_t ph = 0; ph < 4; ++ph) {
            BasisElement e = a;
            e.phase = ph;
            BasisElement sq = basis_mul(e, e);
            EXPECT_EQ(sq.left, 0);
            EXPECT_EQ(sq.right, 0);
            EXPECT_EQ(sq.phase % 2, 0);
        }
    }
}

TEST(Clifford, Associative) {
    for (auto a : all_elements())
        for (auto b : all_elements())
            for (auto c : all_elements())
                EXPECT_EQ(basis_mul(basis_mul(a, b), c), basis_mul(a, basis_mul(b, c)));
}
