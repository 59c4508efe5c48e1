#include "bisphere/plane.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace bisphere;

TEST(Tilde, GaugeOfContractedAngularMomenta) {
    // ungauged i L~_3 conjugated by |s1|^mu1 |s2|^mu2 (even mu) is s1 D2 - s2 D1
    const ModelParams p{2, 4, 0};
    const auto G = LaurentPoly3::monomial({2, 4, 0});
    const auto plain = parse_opexpr("s1*d2 - s2*d1 + 2*s2*s1^-1*R1 - 4*s1*s2^-1*R2");
    const auto gauged = parse_opexpr(tilde_text(3));
    for (const Exponents& e : {Exponents{1, 0, 0}, Exponents{0, 3, 1}, Exponents{2, 1, 2}, Exponents{3, 3, 0}}) {
        const auto x = LaurentPoly3::monomial(e);
        EXPECT_EQ(apply(plain, G * x, p), G * apply(gauged, x, p));
    }
}

TEST(Tilde, RelationsAtDefaultParameters) {
    const auto rep = verify_tilde_relations(default_params(), 6);
    EXPECT_EQ(rep.checks().size(), 12u);
    for (const auto& c : rep.checks()) EXPECT_EQ(c.status, CheckStatus::Pass) << c.id << " " << c.residual;
}

TEST(Tilde, ClassicalLimitIsSo3) {
    const TildeCatalog cat(ModelParams{}, 4);
    EXPECT_EQ(commutator(cat.T(1), cat.T(2)) + cat.T(3), LinOp::zero(cat.basis()));
}

TEST(Tilde, RandomParametersAndReflections) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(1, 9);
    for (int k = 0; k < 3; ++k) {
        const ModelParams p{make_rational(d(rng), d(rng)), make_rational(d(rng), d(rng)), make_rational(d(rng), d(rng))};
        const TildeCatalog cat(p, 4);
        EXPECT_TRUE(anticommutator(cat.T(1), cat.R(2)).is_zero());
        EXPECT_TRUE(verify_tilde_relations(cat).overall_pass());
    }
}

TEST(Tilde, WrongSignIsCaught) {
    const auto p = default_params();
    const TildeCatalog cat(p, 3);
    LinOp factor = cat.R(3);
    factor *= 2 * p.mu3;
    factor.add_identity(1);
    EXPECT_FALSE((commutator(cat.T(1), cat.T(2)) - cat.T(3) * factor).is_zero());
}

TEST(Plane, DiagonalsAndGround) {
    const auto m = build_plane(Rational(1, 3), Rational(1, 5), 8);
    const double a = 1.0 / 3 + 1.0 / 5;
    EXPECT_NEAR(m.H(0, 0), 2 * (a + 1), 1e-14);
    for (int n1 = 0; n1 <= 8; ++n1)
        for (int n2 = 0; n2 <= 8; ++n2) {
            const auto i = m.index(n1, n2);
            EXPECT_NEAR(m.J1(i, i), 2 * (n1 - n2 + 1.0 / 3 - 1.0 / 5), 1e-13);
        }
    EXPECT_EQ(m.H, m.H1 + m.H2);
    EXPECT_THROW(build_plane(0, 0, 3), std::invalid_argument);
    EXPECT_THROW(build_plane(Rational(-1, 2), 0, 6), InvalidParameter);
}

TEST(Plane, BosonLimitAngularMomentum) {
    const auto m = build_plane(0, 0, 6);
    for (int n1 = 0; n1 < 6; ++n1)
        for (int n2 = 1; n2 <= 6; ++n2)
            EXPECT_NEAR(m.iJ2(m.index(n1 + 1, n2 - 1), m.index(n1, n2)), std::sqrt((n1 + 1.0) * n2), 1e-14);
}

TEST(Plane, SymmetriesAtCutoff14) {
    const auto rep = verify_plane_symmetries(build_plane(Rational(1, 3), Rational(1, 5), 14));
    for (const auto& c : rep.checks()) EXPECT_EQ(c.status, CheckStatus::Pass) << c.id << " " << c.residual;
    EXPECT_GT(rep.info()["J1_J2_norm"].get<double>(), 1e-3);
}

TEST(Plane, ZeroMuSymmetries) {
    EXPECT_TRUE(verify_plane_symmetries(build_plane(0, 0, 10)).overall_pass());
}

TEST(Contraction, WorkedExample) {
    const ModelParams p{Rational(1, 3), Rational(1, 5), 0};
    const Rational dev10 = contracted_energy(p, 0, 0, 10) - contraction_limit(p, 0, 0);
    EXPECT_EQ(dev10, Rational(8, 15) * Rational(23, 15) / 100);
    EXPECT_EQ(dev10, make_rational(184, 22500));
    const Rational dev100 = contracted_energy(p, 0, 0, 100) - contraction_limit(p, 0, 0);
    EXPECT_EQ(dev100 / dev10, make_rational(1, 100));
}

TEST(Contraction, IdentityForAllLevels) {
    const ModelParams p{Rational(1, 3), Rational(1, 5), 0};
    for (int N = 0; N <= 3; ++N)
        for (int e3 = 0; e3 <= std::min(N, 1); ++e3) {
            const auto rep = contraction_convergence(p, N, e3, {Rational(10), Rational(100), Rational(1000)});
            for (const auto& c : rep.checks()) EXPECT_EQ(c.status, CheckStatus::Pass) << c.id << " N=" << N;
        }
}

TEST(Contraction, RejectsBadRadii) {
    const auto p = default_params();
    EXPECT_THROW(contraction_convergence(p, 1, 0, {Rational(10), Rational(5)}), std::invalid_argument);
    EXPECT_THROW(contraction_convergence(p, 1, 0, {Rational(0)}), std::invalid_argument);
    EXPECT_THROW(contraction_convergence(p, 0, 1, {Rational(10)}), std::invalid_argument);
}
