// sl_{-1}(2) realizations (ladder and gauged differential), their threefold
// coproduct and the Casimir identities linking them to the sphere model.
#pragma once

#include "bisphere/report.hpp"
#include "bisphere/sphere_model.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bisphere {

using Matrix = Eigen::MatrixXd;

/// sigma_n = n + mu (1 - (-1)^n)
inline Rational ladder_sigma(int n, const Rational& mu) { return n % 2 == 0 ? Rational(n) : n + 2 * mu; }

/// One sl_{-1}(2) copy on |0>, ..., |cutoff> in floating point.
struct LadderRep {
    Rational mu;
    int cutoff = 0;
    Matrix Ap, Am, A0, P;
};

inline void check_ladder_args(const Rational& mu, int cutoff) {
    if (mu <= Rational(-1, 2)) throw InvalidParameter("mu = " + to_short(mu) + " is out of range (must exceed -1/2)");
    if (cutoff < 2) throw std::invalid_argument("ladder cutoff must be >= 2");
}

inline LadderRep ladder_rep(const Rational& mu, int cutoff) {
    check_ladder_args(mu, cutoff);
    const int n = cutoff + 1;
    LadderRep r{mu, cutoff, Matrix::Zero(n, n), Matrix::Zero(n, n), Matrix::Zero(n, n), Matrix::Zero(n, n)};
    const double m = mu.get_d();
    for (int k = 0; k < n; ++k) {
        r.A0(k, k) = k + m + 0.5;
        r.P(k, k) = k % 2 == 0 ? 1.0 : -1.0;
        if (k + 1 < n) {
            const double s = std::sqrt(ladder_sigma(k + 1, mu).get_d());
            r.Ap(k + 1, k) = s;
            r.Am(k, k + 1) = s;
        }
    }
    return r;
}

/// Exact variant: conjugated by a diagonal matrix so that A+|n> = sigma_{n+1}|n+1>
/// and A-|n> = |n-1>. The states |n> are carried by the monomials x^n.
struct ExactLadderRep {
    Rational mu;
    int cutoff = 0;
    LinOp Ap, Am, A0, P;
};

inline ExactLadderRep exact_ladder_rep(const Rational& mu, int cutoff) {
    check_ladder_args(mu, cutoff);
    auto b = std::make_shared<const Basis>(Basis::poly1(cutoff));
    ExactLadderRep r{mu, cutoff, LinOp(b, "A+", {1, 1}), LinOp(b, "A-", {-1, -1}), LinOp(b, "A0"), LinOp(b, "P")};
    for (int k = 0; k <= cutoff; ++k) {
        r.A0(k, k) = k + mu + Rational(1, 2);
        r.P(k, k) = k % 2 == 0 ? 1 : -1;
        if (k < cutoff) {
            r.Ap(k + 1, k) = ladder_sigma(k + 1, mu);
            r.Am(k, k + 1) = 1;
        }
    }
    return r;
}

namespace detail {

/// Residuals of the defining relations and of Casimir = -mu. The ladder
/// operators may be given scaled by sqrt(scale) (scale = 2 for s -+ D).
template <class M, class S>
std::vector<std::pair<std::string, M>> sl_residuals(const M& Ap, const M& Am, const M& A0, const M& P, const M& I,
                                                    const S& mu, const S& scale) {
    const S half = S(1) / S(2);
    std::vector<std::pair<std::string, M>> out;
    out.emplace_back("A0_Ap", M(A0 * Ap - Ap * A0 - Ap));
    out.emplace_back("A0_Am", M(A0 * Am - Am * A0 + Am));
    out.emplace_back("Ap_Am", M(Ap * Am + Am * Ap - (S(2) * scale) * A0));
    out.emplace_back("A0_P", M(A0 * P - P * A0));
    out.emplace_back("Ap_P", M(Ap * P + P * Ap));
    out.emplace_back("Am_P", M(Am * P + P * Am));
    out.emplace_back("P2", M(P * P - I));
    out.emplace_back("casimir", M((S(1) / scale) * (Ap * Am * P) - A0 * P + half * P + mu * I));
    return out;
}

/// Largest entry of the columns 0..last.
inline double window_norm(const Matrix& m, Eigen::Index last) {
    return m.leftCols(last + 1).cwiseAbs().maxCoeff();
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

}  // namespace detail

inline constexpr double ladder_tolerance = 1e-12;

/// Relations on the interior window (states |n> with n <= cutoff - 2).
inline VerificationReport verify_sl_relations(const LadderRep& rep) {
    VerificationReport out("sl", std::nullopt, "Ladder(" + std::to_string(rep.cutoff) + ")");
    out.info()["mu"] = to_pq(rep.mu);
    out.info()["mode"] = "float";
    const Matrix I = Matrix::Identity(rep.cutoff + 1, rep.cutoff + 1);
    for (const auto& [id, m] : detail::sl_residuals(rep.Ap, rep.Am, rep.A0, rep.P, I, rep.mu.get_d(), 1.0))
        out.run("sl." + id, [&] { return within(detail::window_norm(m, rep.cutoff - 2), ladder_tolerance); });
    return out;
}

inline VerificationReport verify_sl_relations(const ExactLadderRep& rep) {
    VerificationReport out("sl", std::nullopt, rep.P.basis().descriptor());
    out.info()["mu"] = to_pq(rep.mu);
    out.info()["mode"] = "exact";
    const LinOp I = LinOp::identity(rep.P.basis_ptr());
    for (auto [id, m] : detail::sl_residuals(rep.Ap, rep.Am, rep.A0, rep.P, I, rep.mu, Rational(1))) {
        const int last = rep.cutoff - 2;
        out.run("sl." + id, [&, &m = m] {
            return exact_zero_where(m.rename(id), [&](const Exponents& e) { return e[0] <= last; });
        });
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coupled ladder representation

/// Three commuting copies on the tensor basis |n1,n2,n3>, n_i <= cutoff,
/// combined by the coproduct.
struct CoupledLadder {
    ModelParams params;
    int cutoff = 0;
    std::array<LadderRep, 3> copies;
    std::map<std::string, Matrix> ops;

    /// Column index of |n1,n2,n3>.
    Eigen::Index index(int n1, int n2, int n3) const {
        const int w = cutoff + 1;
        return (static_cast<Eigen::Index>(n1) * w + n2) * w + n3;
    }
};

inline CoupledLadder build_coupled_ladder(const ModelParams& params, int cutoff) {
    params.validate();
    CoupledLadder c{params, cutoff, {}, {}};
    for (int i = 0; i < 3; ++i) c.copies[i] = ladder_rep(params.mu(i + 1), cutoff);
    const Matrix id = Matrix::Identity(cutoff + 1, cutoff + 1);
    auto on = [&](int axis, const Matrix& m) {
        const Matrix& a = axis == 1 ? m : id;
        const Matrix& b = axis == 2 ? m : id;
        const Matrix& d = axis == 3 ? m : id;
        return detail::kron(detail::kron(a, b), d);
    };
    std::array<Matrix, 3> Ap, Am, A0, P, Q;
    for (int i = 0; i < 3; ++i) {
        const auto& r = c.copies[i];
        Ap[i] = on(i + 1, r.Ap);
        Am[i] = on(i + 1, r.Am);
        A0[i] = on(i + 1, r.A0);
        P[i] = on(i + 1, r.P);
        Q[i] = Ap[i] * Am[i] * P[i] - A0[i] * P[i] + 0.5 * P[i];
        c.ops["Q" + std::to_string(i + 1)] = Q[i];
    }
    c.ops["A+"] = Ap[0] * P[1] * P[2] + Ap[1] * P[2] + Ap[2];
    c.ops["A-"] = Am[0] * P[1] * P[2] + Am[1] * P[2] + Am[2];
    c.ops["A0"] = A0[0] + A0[1] + A0[2];
    c.ops["P"] = P[0] * P[1] * P[2];
    auto inter = [&](int i, int j) {
        return Matrix((Am[i] * Ap[j] - Ap[i] * Am[j]) * P[i] + Q[i] * P[j] + Q[j] * P[i] - 0.5 * P[i] * P[j]);
    };
    c.ops["Q12"] = inter(0, 1);
    c.ops["Q23"] = inter(1, 2);
    const Matrix& Pt = c.ops["P"];
    c.ops["Q"] = c.ops["A+"] * c.ops["A-"] * Pt - c.ops["A0"] * Pt + 0.5 * Pt;
    return c;
}

/// Ladder-mode report: relations of each copy at `cutoff` (worst copy
/// reported) and of the coupled generators at `coupled_cutoff` per copy.
inline VerificationReport verify_racah_ladder(const ModelParams& params, int cutoff, int coupled_cutoff) {
    params.validate();
    VerificationReport out("racah-ladder", params, "Ladder(" + std::to_string(cutoff) + ")");
    out.info()["mode"] = "ladder";
    out.info()["coupled_cutoff"] = coupled_cutoff;
    std::map<std::string, double> worst;
    for (int i = 1; i <= 3; ++i) {
        const auto rep = ladder_rep(params.mu(i), cutoff);
        const Matrix I = Matrix::Identity(cutoff + 1, cutoff + 1);
        for (const auto& [id, m] : detail::sl_residuals(rep.Ap, rep.Am, rep.A0, rep.P, I, rep.mu.get_d(), 1.0))
            worst[id] = std::max(worst[id], detail::window_norm(m, cutoff - 2));
    }
    for (const auto& [id, w] : worst) out.run("sl." + id, [&, w = w] { return within(w, ladder_tolerance); });

    const auto c = build_coupled_ladder(params, coupled_cutoff);
    // interior: every n_i <= coupled_cutoff - 2
    std::vector<Eigen::Index> cols;
    for (int a = 0; a <= coupled_cutoff - 2; ++a)
        for (int b = 0; b <= coupled_cutoff - 2; ++b)
            for (int d = 0; d <= coupled_cutoff - 2; ++d) cols.push_back(c.index(a, b, d));
    auto norm = [&](const Matrix& m) {
        double x = 0;
        for (auto j : cols) x = std::max(x, m.col(j).cwiseAbs().maxCoeff());
        return x;
    };
    const Eigen::Index n = c.ops.at("P").rows();
    const Matrix I = Matrix::Identity(n, n);
    // coupled Casimir is not a constant; only the relations are checked here
    for (const auto& [id, m] : detail::sl_residuals(c.ops.at("A+"), c.ops.at("A-"), c.ops.at("A0"), c.ops.at("P"), I,
                                                    0.0, 1.0))
        if (id != "casimir") out.run("racah.coupled_" + id, [&, &m = m] { return within(norm(m), ladder_tolerance); });
    for (int i = 1; i <= 3; ++i) {
        const Matrix r = c.ops.at("Q" + std::to_string(i)) + params.mu(i).get_d() * I;
        out.run("racah.Q" + std::to_string(i), [&] { return within(norm(r), ladder_tolerance); });
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gauged differential realization on FullPoly3

namespace detail {

inline std::string ax(const char* prefix, int i) { return prefix + std::to_string(i); }

/// sqrt(2) A_+ = s - D, sqrt(2) A_- = s + D
inline std::string bplus(int i) { return "(" + ax("s", i) + " - " + ax("D", i) + ")"; }
inline std::string bminus(int i) { return "(" + ax("s", i) + " + " + ax("D", i) + ")"; }

}  // namespace detail

/// Operator texts of the coupled differential realization.
inline std::map<std::string, std::string> coupled_texts(const ModelParams& p) {
    using detail::ax;
    using detail::bminus;
    using detail::bplus;
    using detail::paren;
    using detail::signed_term;
    std::map<std::string, std::string> t;
    for (int i = 1; i <= 3; ++i) {
        const auto s = std::to_string(i);
        const auto R = ax("R", i);
        t["Bp" + s] = bplus(i);
        t["Bm" + s] = bminus(i);
        t["A0_" + s] = "1/2*s" + s + "^2 - 1/2*D" + s + "*D" + s;
        t["Q" + s] = "1/2*" + bplus(i) + "*" + bminus(i) + "*" + R + " - " + paren(t["A0_" + s]) + "*" + R + " + 1/2*" + R;
    }
    auto inter = [&](int i, int j) {
        const auto Ri = ax("R", i);
        const auto Rj = ax("R", j);
        return "1/2*" + bminus(i) + "*" + bplus(j) + "*" + Ri + " - 1/2*" + bplus(i) + "*" + bminus(j) + "*" + Ri +
               " + " + paren(t["Q" + std::to_string(i)]) + "*" + Rj + " + " + paren(t["Q" + std::to_string(j)]) + "*" +
               Ri + " - 1/2*" + Ri + "*" + Rj;
    };
    t["Q12"] = inter(1, 2);
    t["Q23"] = inter(2, 3);
    t["Bp"] = bplus(1) + "*R2*R3 + " + bplus(2) + "*R3 + " + bplus(3);
    t["Bm"] = bminus(1) + "*R2*R3 + " + bminus(2) + "*R3 + " + bminus(3);
    t["A0"] = paren(t["A0_1"]) + " + " + paren(t["A0_2"]) + " + " + paren(t["A0_3"]);
    t["P"] = "R1*R2*R3";
    t["Q"] = "1/2*" + paren(t["Bp"]) + "*" + paren(t["Bm"]) + "*R1*R2*R3 - " + paren(t["A0"]) +
             "*R1*R2*R3 + 1/2*R1*R2*R3";
    t["Q_expression"] = "1/2*" + bminus(1) + "*" + bplus(3) + "*R1 - 1/2*" + bplus(1) + "*" + bminus(3) + "*R1 - " +
                        paren(t["Q2"]) + "*R1*R3 + " + paren(t["Q12"]) + "*R3 + " + paren(t["Q23"]) + "*R1";
    t["Omega"] = paren(t["Q"]) + "*R1*R2*R3";
    t["X2"] = "1/4*(" + t["Bp"] + " + " + t["Bm"] + ")*(" + t["Bp"] + " + " + t["Bm"] + ")";
    t["ssq"] = "s1^2 + s2^2 + s3^2";
    // gauged i J_k
    auto ij = [&](int a, int b, int ma, int mb) {
        // s_a d_b - s_b d_a + mu_b s_a / s_b - mu_a s_b / s_a
        return ax("s", a) + "*" + ax("d", b) + " - " + ax("s", b) + "*" + ax("d", a) +
               signed_term(p.mu(mb), ax("s", a) + "*" + ax("s", b) + "^-1") +
               signed_term(-p.mu(ma), ax("s", b) + "*" + ax("s", a) + "^-1");
    };
    t["iJ1"] = ij(2, 3, 2, 3);
    t["iJ2"] = ij(3, 1, 3, 1);
    t["iJ3"] = ij(1, 2, 1, 2);
    std::string pot;
    for (int i = 1; i <= 3; ++i) {
        const auto s = std::to_string(i);
        pot += signed_term(p.mu(i) * p.mu(i), "s" + s + "^-2") + signed_term(-p.mu(i), "s" + s + "^-2*R" + s);
    }
    std::string rhs = "-" + paren(t["iJ1"]) + "*" + paren(t["iJ1"]) + " - " + paren(t["iJ2"]) + "*" + paren(t["iJ2"]) +
                      " - " + paren(t["iJ3"]) + "*" + paren(t["iJ3"]);
    if (!pot.empty()) rhs += " + " + paren(t["ssq"]) + "*(" + (pot[1] == '-' ? "-" : "") + pot.substr(3) + ")";
    t["rhs43"] = rhs;
    return t;
}

/// Coupled differential realization on FullPoly3(degree + padding).
struct CoupledDifferential {
    ModelParams params;
    int degree = 0;   // interior degree D
    int padding = 2;
    std::shared_ptr<const Basis> basis;
    std::map<std::string, std::string> texts;
    std::map<std::string, LinOp> ops;

    const LinOp& operator[](const std::string& n) const { return ops.at(n); }

    /// Matrix for any text, built on the same basis.
    LinOp build(const std::string& text, const std::string& name) const {
        return build_matrix(text, basis, params, name);
    }
};

/// Degree-preserving operators built from untruncated images are exact on
/// every column; mark them so.
inline bool is_degree_preserving(const LinOp& m) {
    const auto& b = m.basis();
    for (std::size_t r = 0; r < m.dim(); ++r)
        for (std::size_t c = 0; c < m.dim(); ++c)
            if (sgn(m(r, c)) != 0 && total_degree(b[r]) != total_degree(b[c])) return false;
    return true;
}

inline CoupledDifferential build_coupled_differential(const ModelParams& params, int degree, int padding = 2) {
    params.validate();
    CoupledDifferential c{params, degree, padding,
                          std::make_shared<const Basis>(Basis::full(degree + padding)), coupled_texts(params), {}};
    for (const auto& [name, text] : c.texts) {
        if (name.starts_with("iJ")) continue;  // Laurent pieces, only meaningful inside rhs43
        LinOp m = c.build(text, name);
        if (m.window().hi > 0 && m.window().lo < 0 && is_degree_preserving(m)) m.set_window({0, 0});
        c.ops.emplace(name, std::move(m));
    }
    return c;
}

/// Sphere-quotient operator induced by a FullPoly3 operator that preserves
/// the ideal of the sphere: columns are reduced images of the quotient basis.
inline LinOp descend(const LinOp& full, const std::shared_ptr<const Basis>& sphere) {
    LinOp out(sphere, full.name() + "|S2");
    for (std::size_t c = 0; c < sphere->size(); ++c) {
        const long fc = full.basis().index_of((*sphere)[c]);
        if (fc < 0 || !full.exact_column(static_cast<std::size_t>(fc)))
            throw LeavesSpaceError("descent of '" + full.name() + "' needs more padding");
        const auto img = reduce_sphere(full.column_poly(static_cast<std::size_t>(fc)));
        for (const auto& [e, coef] : img.terms()) {
            const long r = sphere->index_of(e);
            if (r < 0) throw LeavesSpaceError("descent of '" + full.name() + "' leaves " + sphere->descriptor());
            out(static_cast<std::size_t>(r), c) = coef;
        }
    }
    return out;
}

namespace detail {

inline Outcome interior_zero(const LinOp& m) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
        if (!m.exact_column(c)) continue;
        const auto img = m.column_poly(c);
        if (!img.is_zero())
            return {false, m.name() + " maps " + LaurentPoly3::monomial(m.basis()[c]).to_string() + " to " + img.to_string()};
    }
    return {true, "0"};
}

/// +1 or -1 when a = sign * b on the interior, 0 otherwise.
inline int relative_sign(const LinOp& a, const LinOp& b) {
    if (interior_zero(a - b).pass) return 1;
    if (interior_zero(a + b).pass) return -1;
    return 0;
}

}  // namespace detail

inline VerificationReport verify_racah_identities(const CoupledDifferential& c, const SymmetryCatalog& sphere) {
    using detail::interior_zero;
    const auto& p = c.params;
    VerificationReport out("racah", p, c.basis->descriptor());
    out.info()["mode"] = "differential";
    out.info()["interior_degree"] = c.degree;
    out.info()["realization"] = "gauged by |s_i|^mu_i: sqrt(2) A+- = s_i -+ D_i, A0 = (s_i^2 - D_i^2)/2, P = R_i";
    out.info()["coproduct"] = "A+-^(1) P^(2) P^(3) + A+-^(2) P^(3) + A+-^(3)";
    const auto I = LinOp::identity(c.basis);

    // per-axis relations on polynomial test vectors
    std::map<std::string, Outcome> axis;
    for (int i = 1; i <= 3; ++i) {
        const auto s = std::to_string(i);
        for (auto [id, m] : detail::sl_residuals(c["Bp" + s], c["Bm" + s], c["A0_" + s], c.build("R" + s, "R" + s), I,
                                                 p.mu(i), Rational(2))) {
            auto o = interior_zero(m.rename(id + "(axis " + s + ")"));
            if (!axis.count(id) || (axis[id].pass && !o.pass)) axis[id] = o;
        }
    }
    for (const auto& [id, o] : axis) out.run("sl." + id, [&, o = o] { return o; });

    for (auto [id, m] : detail::sl_residuals(c["Bp"], c["Bm"], c["A0"], c["P"], I, Rational(0), Rational(2)))
        if (id != "casimir") out.run("racah.coupled_" + id, [&, &m = m] { return interior_zero(m.rename(id)); });

    for (int i = 1; i <= 3; ++i) {
        const auto s = std::to_string(i);
        out.run("racah.Q" + s, [&] {
            LinOp r = c["Q" + s];
            r.add_identity(p.mu(i));
            return interior_zero(r.rename("Q" + s + " + mu" + s));
        });
    }
    out.run("racah.casimir_degree", [&] {
        for (const char* n : {"Q1", "Q2", "Q3", "Q12", "Q23", "Q", "Omega"})
            if (!is_degree_preserving(c[n])) return Outcome{false, std::string(n) + " mixes degrees"};
        return Outcome{true, "0"};
    });

    const LinOp L3 = c.build(symmetry_text("L3", p), "L3");
    const LinOp L1 = c.build(symmetry_text("L1", p), "L1");
    const int e12 = detail::relative_sign(c["Q12"], L3);
    const int e23 = detail::relative_sign(c["Q23"], L1);
    out.info()["epsilon12"] = e12;
    out.info()["epsilon23"] = e23;
    out.run("racah.Q12", [&] {
        return e12 != 0 ? Outcome{true, "0"} : Outcome{false, interior_zero((c["Q12"] - L3).rename("Q12 - L3")).residual};
    });
    out.run("racah.Q23", [&] {
        return e23 != 0 ? Outcome{true, "0"} : Outcome{false, interior_zero((c["Q23"] - L1).rename("Q23 - L1")).residual};
    });
    out.run("racah.Q_expression",
            [&] { return interior_zero((c["Q"] - c["Q_expression"]).rename("Q - expanded form")); });

    const LinOp ssq = c["ssq"];
    out.run("racah.X2_sphere", [&] { return interior_zero((c["X2"] - ssq).rename("X2 - |s|^2")); });
    out.run("racah.X2_Q12", [&] { return interior_zero(commutator(c["X2"], c["Q12"])); });
    out.run("racah.X2_Q23", [&] { return interior_zero(commutator(c["X2"], c["Q23"])); });
    out.run("racah.X2_Omega", [&] { return interior_zero(commutator(c["X2"], c["Omega"])); });
    out.run("racah.Q12_s2", [&] { return interior_zero(commutator(c["Q12"], ssq)); });
    out.run("racah.Q23_s2", [&] { return interior_zero(commutator(c["Q23"], ssq)); });

    const LinOp& W = c["Omega"];
    const LinOp omega2 = W * W + W;
    out.run("racah.omega", [&] { return interior_zero((omega2 - c["rhs43"]).rename("Omega^2 + Omega - rhs")); });

    const auto& sb = sphere.basis();
    out.run("racah.descent", [&] {
        return exact_zero((descend(omega2, sb) - sphere["H"]).rename("(Omega^2 + Omega)|S2 - H"));
    });
    out.run("racah.chiral", [&] {
        LinOp q = W;
        q.add_identity(Rational(1, 2));
        LinOp h = sphere["H"];
        h.add_identity(Rational(1, 4));
        return exact_zero((descend(q * q, sb) - h).rename("(Omega + 1/2)^2|S2 - H - 1/4"));
    });
    out.run("racah.sign_transplant", [&] {
        if (e12 == 0 || e23 == 0) return Outcome{false, "signs undetermined"};
        LinOp l3 = descend(c["Q12"], sb);
        l3 *= e12;
        LinOp l1 = descend(c["Q23"], sb);
        l1 *= e23;
        const LinOp& l2 = sphere.L(2);
        const auto w = bi_structure_constants(sphere);
        struct Rel {
            const LinOp* a;
            const LinOp* b;
            const LinOp* c;
            int k;
            const char* name;
        };
        for (const Rel& r : {Rel{&l1, &l2, &l3, 3, "{L1,L2}"}, Rel{&l2, &l3, &l1, 1, "{L2,L3}"},
                             Rel{&l3, &l1, &l2, 2, "{L3,L1}"}}) {
            LinOp res = anticommutator(*r.a, *r.b) - *r.c - w.omega[r.k - 1];
            if (!res.is_zero()) return exact_zero(res.rename(std::string(r.name) + " with descended Casimirs"));
        }
        return Outcome{true, "0"};
    });
    return out;
}

inline VerificationReport verify_racah_identities(const ModelParams& params, int degree) {
    return verify_racah_identities(build_coupled_differential(params, degree), SymmetryCatalog(params, degree));
}

}  // namespace bisphere
