#include "bisphere/racah.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace bisphere;

TEST(Ladder, MatrixElements) {
    const Rational mu(2, 7);
    const auto r = ladder_rep(mu, 8);
    EXPECT_NEAR(r.Ap(1, 0), std::sqrt(1 + 2 * mu.get_d()), 1e-15);
    const Matrix anti = r.Ap * r.Am + r.Am * r.Ap;
    EXPECT_NEAR(anti(0, 0), 1 + 2 * mu.get_d(), 1e-14);
    EXPECT_NEAR(anti(0, 0), 2 * r.A0(0, 0), 1e-14);
    const Matrix cas = r.Ap * r.Am * r.P - r.A0 * r.P + 0.5 * r.P;
    for (int n = 0; n <= 8; ++n) EXPECT_NEAR(cas(n, n), -mu.get_d(), 1e-14) << n;
    EXPECT_EQ(r.P * r.P, Matrix::Identity(9, 9));
}

TEST(Ladder, BosonLimit) {
    const auto r = ladder_rep(0, 6);
    for (int n = 1; n <= 6; ++n) EXPECT_NEAR(r.Ap(n, n - 1), std::sqrt(static_cast<double>(n)), 1e-15);
}

TEST(Ladder, RelationsFloatAndExact) {
    for (const Rational& mu : {Rational(0), Rational(1, 2), Rational(1, 3)}) {
        const auto f = verify_sl_relations(ladder_rep(mu, 12));
        for (const auto& c : f.checks()) EXPECT_EQ(c.status, CheckStatus::Pass) << c.id << " " << c.residual;
        const auto e = verify_sl_relations(exact_ladder_rep(mu, 12));
        for (const auto& c : e.checks()) EXPECT_EQ(c.residual, "0") << c.id;
    }
}

TEST(Ladder, TruncationShowsOutsideTheWindow) {
    const auto r = exact_ladder_rep(Rational(1, 2), 6);
    LinOp anti = anticommutator(r.Ap, r.Am);
    LinOp two_a0 = r.A0;
    two_a0 *= 2;
    const LinOp res = anti - two_a0;
    EXPECT_TRUE(sgn(res(6, 6)) != 0);
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(sgn(res(n, n)), 0);
}

TEST(Ladder, ExactAndFloatAgreeOnInvariants) {
    const Rational mu(1, 3);
    const auto f = ladder_rep(mu, 10);
    const auto e = exact_ladder_rep(mu, 10);
    const Matrix ff = f.Ap * f.Am;
    const LinOp ee = e.Ap * e.Am;
    for (int n = 0; n <= 10; ++n) EXPECT_NEAR(ff(n, n), ee(n, n).get_d(), 1e-13);
}

TEST(Ladder, RejectsBadArguments) {
    EXPECT_THROW(ladder_rep(Rational(-1, 2), 12), InvalidParameter);
    EXPECT_THROW(ladder_rep(0, 1), std::invalid_argument);
}

TEST(CoupledLadder, TotalParityAndRelations) {
    const auto c = build_coupled_ladder(default_params(), 5);
    const Matrix& P = c.ops.at("P");
    for (Eigen::Index i = 0; i < P.rows(); ++i)
        for (Eigen::Index j = 0; j < P.cols(); ++j)
            if (i == j) EXPECT_EQ(std::abs(P(i, j)), 1.0);
            else EXPECT_EQ(P(i, j), 0.0);
    const auto rep = verify_racah_ladder(default_params(), 12, 5);
    for (const auto& ch : rep.checks()) EXPECT_EQ(ch.status, CheckStatus::Pass) << ch.id << " " << ch.residual;
}

TEST(Differential, GaugeOfLadderOperators) {
    // ungauged A+- = s -+ d +- (mu/s) R conjugated by s^mu (mu even) gives s -+ D
    for (int mu : {2, 4}) {
        const ModelParams p{mu, 0, 0};
        const auto G = LaurentPoly3::monomial({mu, 0, 0});
        const std::string m = std::to_string(mu);
        const auto plus_plain = parse_opexpr("s1 - d1 + " + m + "*s1^-1*R1");
        const auto minus_plain = parse_opexpr("s1 + d1 - " + m + "*s1^-1*R1");
        const auto plus = parse_opexpr("s1 - D1");
        const auto minus = parse_opexpr("s1 + D1");
        for (int k = 0; k <= 5; ++k) {
            const auto x = LaurentPoly3::monomial({k, 1, 0});
            EXPECT_EQ(apply(plus_plain, G * x, p), G * apply(plus, x, p));
            EXPECT_EQ(apply(minus_plain, G * x, p), G * apply(minus, x, p));
        }
    }
}

TEST(Differential, InitialCasimirsAreScalars) {
    const auto p = default_params();
    const auto c = build_coupled_differential(p, 4);
    EXPECT_EQ(c.basis->descriptor(), "FullPoly3(6)");
    for (int i = 1; i <= 3; ++i) {
        LinOp q = c["Q" + std::to_string(i)];
        q.add_identity(p.mu(i));
        EXPECT_TRUE(q.is_zero()) << i;
    }
}

TEST(Differential, IntermediateCasimirsAreMinusConstantsOfMotion) {
    const auto p = ModelParams{Rational(3, 4), Rational(1, 6), Rational(2, 9)};
    const auto c = build_coupled_differential(p, 4);
    LinOp l3 = c.build(symmetry_text("L3", p), "L3");
    LinOp l1 = c.build(symmetry_text("L1", p), "L1");
    EXPECT_EQ(c["Q12"] + l3, LinOp::zero(c.basis));
    EXPECT_EQ(c["Q23"] + l1, LinOp::zero(c.basis));
}

TEST(Differential, MatrixAssemblyAgreesWithTextOnInterior) {
    const auto p = default_params();
    const auto c = build_coupled_differential(p, 3);
    const LinOp R1 = c.build("R1", "R1");
    const LinOp R2 = c.build("R2", "R2");
    LinOp q12 = c["Bm1"] * c["Bp2"] * R1 - c["Bp1"] * c["Bm2"] * R1;
    q12 *= Rational(1, 2);
    q12 += c["Q1"] * R2 + c["Q2"] * R1;
    LinOp pp = R1 * R2;
    pp *= Rational(1, 2);
    q12 -= pp;
    const LinOp diff = q12 - c["Q12"];
    int interior = 0;
    for (std::size_t col = 0; col < diff.dim(); ++col) {
        if (!diff.exact_column(col)) continue;
        ++interior;
        EXPECT_TRUE(diff.column_poly(col).is_zero()) << col;
    }
    EXPECT_EQ(interior, 20);  // degree <= 3 in FullPoly3(5)
}

TEST(Differential, ReachTracksIntermediateTruncation) {
    auto b = std::make_shared<const Basis>(Basis::full(3));
    const ModelParams p{Rational(1, 2), 0, 0};
    const LinOp s1 = build_matrix("s1", b, p);
    const LinOp d1 = build_matrix("D1", b, p);
    const LinOp prod = d1 * s1;
    const LinOp direct = build_matrix("D1*s1", b, p);
    EXPECT_EQ(prod.window(), (DegreeWindow{0, 0}));
    EXPECT_EQ(prod.reach(), 1);
    for (std::size_t c = 0; c < b->size(); ++c) {
        const bool same = prod.column_poly(c) == direct.column_poly(c);
        if (prod.exact_column(c)) EXPECT_TRUE(same) << c;
        if (total_degree((*b)[c]) == 3 && (*b)[c][0] >= 0) EXPECT_FALSE(prod.exact_column(c));
    }
    EXPECT_NE(prod, direct);
}

TEST(Differential, ZeroMuRightHandSideIsAngularMomentumSquared) {
    const ModelParams p{};
    const auto c = build_coupled_differential(p, 3);
    const LinOp j2 = c.build("-(s2*d3 - s3*d2)*(s2*d3 - s3*d2) - (s3*d1 - s1*d3)*(s3*d1 - s1*d3) - "
                             "(s1*d2 - s2*d1)*(s1*d2 - s2*d1)",
                             "J^2");
    EXPECT_EQ(c["rhs43"], j2);
    const LinOp& W = c["Omega"];
    EXPECT_EQ(W * W + W, j2);
}

TEST(Differential, RightHandSideNeedsEveryTermToBeRegular) {
    // One squared angular momentum alone has poles that only cancel in the full sum.
    const auto p = default_params();
    const auto t = coupled_texts(p);
    auto b = std::make_shared<const Basis>(Basis::full(3));
    EXPECT_THROW(build_matrix("(" + t.at("iJ1") + ")*(" + t.at("iJ1") + ")", b, p), NonRegularError);
    EXPECT_NO_THROW(build_matrix(t.at("rhs43"), b, p));
}

TEST(Racah, FullIdentitySuite) {
    const auto rep = verify_racah_identities(default_params(), 4);
    for (const auto& ch : rep.checks()) EXPECT_EQ(ch.status, CheckStatus::Pass) << ch.id << " " << ch.residual;
    EXPECT_EQ(rep.info()["epsilon12"], -1);
    EXPECT_EQ(rep.info()["epsilon23"], -1);
}

TEST(Racah, DescentNeedsPadding) {
    const auto p = default_params();
    const auto c = build_coupled_differential(p, 2, 0);
    const SymmetryCatalog cat(p, 2);
    EXPECT_NO_THROW(descend(c["Omega"], cat.basis()));
    EXPECT_THROW(descend(c["X2"], cat.basis()), LeavesSpaceError);
}
