// Gauged symmetry operators of the model on the two-sphere and their
// exact certificates (invariance algebra, spectrum, separation).
#pragma once

#include "bisphere/linop.hpp"
#include "bisphere/report.hpp"

#include <array>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace bisphere {

/// Two spectral values that should be distinct coincide.
struct CollisionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{"R1", "R2", "R3", "L1", "L2", "L3", "C",
                                                "Q",  "H",  "Z",  "Y",  "Lsq", "P123"};
    return names;
}

namespace detail {

/// " + k*op" / " - |k|*op", or nothing when k = 0. An empty op means the scalar k.
inline std::string signed_term(const Rational& k, const std::string& op) {
    if (sgn(k) == 0) return {};
    const Rational a = abs(k);
    std::string out = sgn(k) < 0 ? " - " : " + ";
    out += to_short(a);
    if (!op.empty()) out += "*" + op;
    return out;
}

inline std::string paren(const std::string& s) { return "(" + s + ")"; }

}  // namespace detail

/// Operator text of a catalog member in the gauged realization.
inline std::string symmetry_text(const std::string& name, const ModelParams& p) {
    using detail::paren;
    using detail::signed_term;
    const Rational half(1, 2);
    if (name == "R1" || name == "R2" || name == "R3") return name;
    if (name == "P123") return "R1*R2*R3";
    if (name == "L1")
        return "(s2*D3 - s3*D2)*R2" + signed_term(p.mu2, "R3") + signed_term(p.mu3, "R2") + signed_term(half, "R2*R3");
    if (name == "L2")
        return "(s1*D3 - s3*D1)*R1*R2" + signed_term(p.mu1, "R3") + signed_term(p.mu3, "R1") +
               signed_term(half, "R1*R3");
    if (name == "L3")
        return "(s1*D2 - s2*D1)*R1" + signed_term(p.mu1, "R2") + signed_term(p.mu2, "R1") + signed_term(half, "R1*R2");
    const auto L1 = paren(symmetry_text("L1", p));
    const auto L2 = paren(symmetry_text("L2", p));
    const auto L3 = paren(symmetry_text("L3", p));
    if (name == "C")
        return "-" + L1 + "*R2*R3 - " + L2 + "*R1*R3 - " + L3 + "*R1*R2" + signed_term(p.mu1, "R1") +
               signed_term(p.mu2, "R2") + signed_term(p.mu3, "R3") + signed_term(half, "");
    const auto C = paren(symmetry_text("C", p));
    if (name == "Q") return C + "*R1*R2*R3";
    if (name == "H") return C + "*" + C + " + " + C;
    if (name == "Z") return L3 + "*R1*R2";
    if (name == "Y") return L1 + "*R2*R3";
    if (name == "Lsq") return L1 + "*" + L1 + " + " + L2 + "*" + L2 + " + " + L3 + "*" + L3;
    throw std::out_of_range("unknown symmetry '" + name + "'");
}

inline LinOp build_symmetry(const std::string& name, const ModelParams& params, std::shared_ptr<const Basis> basis) {
    params.validate();
    return build_matrix(symmetry_text(name, params), std::move(basis), params, name);
}

inline LinOp build_symmetry(const std::string& name, const ModelParams& params, int degree) {
    return build_symmetry(name, params, std::make_shared<const Basis>(Basis::sphere(degree)));
}

/// All catalog operators on SphereQuotient(D).
class SymmetryCatalog {
public:
    SymmetryCatalog(const ModelParams& params, int degree)
        : params_(params), degree_(degree), basis_(std::make_shared<const Basis>(Basis::sphere(degree))) {
        params_.validate();
        for (const auto& n : catalog_names()) {
            texts_[n] = symmetry_text(n, params_);
            ops_.emplace(n, build_matrix(texts_[n], basis_, params_, n));
        }
    }

    const LinOp& operator[](const std::string& name) const { return ops_.at(name); }
    const LinOp& L(int i) const { return ops_.at("L" + std::to_string(i)); }
    const LinOp& R(int i) const { return ops_.at("R" + std::to_string(i)); }
    const std::string& text(const std::string& name) const { return texts_.at(name); }
    const ModelParams& params() const { return params_; }
    int degree() const { return degree_; }
    const std::shared_ptr<const Basis>& basis() const { return basis_; }
    LinOp identity() const { return LinOp::identity(basis_); }

private:
    ModelParams params_;
    int degree_;
    std::shared_ptr<const Basis> basis_;
    std::map<std::string, std::string> texts_;
    std::map<std::string, LinOp> ops_;
};

/// Central right-hand sides of the anticommutation relations:
/// {L_i, L_j} = L_k + omega_k with omega_k = -2 mu_k Q + 2 mu_i mu_j.
struct BIStructureConstants {
    std::array<LinOp, 3> omega;  // omega[k-1]
};

inline BIStructureConstants bi_structure_constants(const SymmetryCatalog& cat) {
    const auto& p = cat.params();
    BIStructureConstants out;
    for (int k = 1; k <= 3; ++k) {
        const int i = k % 3 + 1;
        const int j = i % 3 + 1;
        LinOp w = cat["Q"];
        w *= -2 * p.mu(k);
        w.add_identity(2 * p.mu(i) * p.mu(j));
        out.omega[k - 1] = w.rename("omega" + std::to_string(k));
    }
    return out;
}

namespace detail {

inline LinOp named(LinOp m, std::string name) { return std::move(m.rename(std::move(name))); }

inline void invariance_checks(const SymmetryCatalog& cat, VerificationReport& rep) {
    const auto& p = cat.params();
    const auto& H = cat["H"];
    const auto& C = cat["C"];
    const auto& Q = cat["Q"];
    const auto& P = cat["P123"];
    for (int i = 1; i <= 3; ++i) {
        const auto s = std::to_string(i);
        rep.run("s2.H_L" + s, [&] { return exact_zero(commutator(H, cat.L(i))); });
        rep.run("s2.H_R" + s, [&] { return exact_zero(commutator(H, cat.R(i))); });
        rep.run("s2.C_L" + s, [&] { return exact_zero(commutator(C, cat.L(i))); });
        rep.run("s2.Q_L" + s, [&] { return exact_zero(commutator(Q, cat.L(i))); });
    }
    const auto omega = bi_structure_constants(cat);
    for (const auto& [a, b, k] : {std::array{1, 2, 3}, std::array{2, 3, 1}, std::array{3, 1, 2}}) {
        const std::string id = "s2.BI" + std::to_string(a) + std::to_string(b);
        rep.run(id, [&] {
            LinOp r = anticommutator(cat.L(a), cat.L(b)) - cat.L(k) - omega.omega[k - 1];
            return exact_zero(named(std::move(r), "{L" + std::to_string(a) + ",L" + std::to_string(b) + "} - L" +
                                                      std::to_string(k) + " - omega" + std::to_string(k)));
        });
    }
    rep.run("s2.casimir", [&] {
        LinOp r = cat["Lsq"] - C * C;
        r.add_identity(-(p.mu1 * p.mu1 + p.mu2 * p.mu2 + p.mu3 * p.mu3 - Rational(1, 4)));
        return exact_zero(named(std::move(r), "Lsq - C^2 - (mu1^2+mu2^2+mu3^2-1/4)"));
    });
    rep.run("s2.Q2_C2", [&] { return exact_zero(named(Q * Q - C * C, "Q^2 - C^2")); });
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            const std::string id = "s2.LR" + std::to_string(i) + std::to_string(j);
            if (i == j) {
                rep.run(id, [&] { return exact_zero(commutator(cat.L(i), cat.R(i))); });
                continue;
            }
            const int k = 6 - i - j;
            rep.run(id, [&] {
                LinOp rhs = cat.R(j) * cat.R(k);
                rhs *= 2 * p.mu(j);
                rhs += cat.R(k);
                rhs.add_identity(2 * p.mu(k));
                return exact_zero(named(anticommutator(cat.L(i), cat.R(j)) - rhs,
                                        "{L" + std::to_string(i) + ",R" + std::to_string(j) + "} - rhs"));
            });
        }
        rep.run("s2.CR" + std::to_string(i), [&] {
            LinOp lhs = anticommutator(C, cat.R(i));
            LinOp t = cat.L(i) * P;
            t *= 2;
            lhs += t;
            lhs += cat.R(i);
            lhs.add_identity(2 * p.mu(i));
            return exact_zero(named(std::move(lhs), "{C,R" + std::to_string(i) + "} + 2 L" + std::to_string(i) +
                                                        " R1R2R3 + R" + std::to_string(i) + " + 2 mu" +
                                                        std::to_string(i)));
        });
    }
    rep.run("s2.parity_blocks", [&] {
        const auto& b = cat.basis();
        for (std::size_t r = 0; r < H.dim(); ++r)
            for (std::size_t c = 0; c < H.dim(); ++c)
                if (sgn(H(r, c)) != 0 && parity_sector((*b)[r]) != parity_sector((*b)[c]))
                    return Outcome{false, "H couples " + LaurentPoly3::monomial((*b)[c]).to_string() + " to " +
                                              LaurentPoly3::monomial((*b)[r]).to_string()};
        return Outcome{true, "0"};
    });
}

}  // namespace detail

struct InvarianceOptions {
    bool cyclic_check = true;
};

/// Every exact identity of the invariance algebra on SphereQuotient(D).
inline VerificationReport verify_invariance_suite(const SymmetryCatalog& cat, InvarianceOptions opt = {}) {
    VerificationReport rep("s2", cat.params(), cat.basis()->descriptor());
    detail::invariance_checks(cat, rep);
    if (opt.cyclic_check) {
        rep.run("s2.cyclic", [&] {
            ModelParams q = cat.params();
            std::string mismatch;
            for (int turn = 1; turn <= 2; ++turn) {
                q = q.rotated();
                SymmetryCatalog rotated(q, cat.degree());
                VerificationReport r2;
                detail::invariance_checks(rotated, r2);
                for (const auto& c : rep.checks()) {
                    const auto* o = r2.find(c.id);
                    if (!o || o->status != c.status) mismatch += " " + c.id;
                }
            }
            return mismatch.empty() ? Outcome{true, "0"} : Outcome{false, "status differs for" + mismatch};
        });
    }
    return rep;
}

inline VerificationReport verify_invariance_suite(const ModelParams& params, int degree, InvarianceOptions opt = {}) {
    return verify_invariance_suite(SymmetryCatalog(params, degree), opt);
}

/// E_N = (N + sigma)^2 + (N + sigma) with sigma = mu1 + mu2 + mu3.
inline Rational energy(const ModelParams& p, int N) {
    const Rational x = N + p.sum();
    return x * x + x;
}

/// E_0..E_D, refusing parameters for which two of them coincide.
inline std::vector<Rational> energies(const ModelParams& p, int D) {
    std::vector<Rational> e;
    for (int N = 0; N <= D; ++N) e.push_back(energy(p, N));
    for (int a = 0; a <= D; ++a)
        for (int b = a + 1; b <= D; ++b)
            if (e[a] == e[b])
                throw CollisionError("E_" + std::to_string(a) + " = E_" + std::to_string(b) + " = " + to_short(e[a]) +
                                     " (sigma = " + to_short(p.sum()) + " must exceed -1)");
    return e;
}

inline VerificationReport spectrum_certificate(const SymmetryCatalog& cat) {
    const int D = cat.degree();
    const auto E = energies(cat.params(), D);
    const auto& H = cat["H"];
    const auto& P = cat["P123"];
    VerificationReport rep("spectrum", cat.params(), cat.basis()->descriptor());
    nlohmann::json ej = nlohmann::json::array();
    for (const auto& e : E) ej.push_back(to_pq(e));
    rep.info()["energies"] = ej;

    rep.run("spectrum.annihilator", [&] {
        return annihilator_check(H, E) ? Outcome{true, "0"}
                                       : exact_zero(shifted_product(H, E).rename("prod_N (H - E_N)"));
    });
    rep.run("spectrum.rank", [&] {
        std::string bad;
        const long dim = static_cast<long>(H.dim());
        for (int N = 0; N <= D; ++N) {
            LinOp m = H;
            m.add_identity(-E[N]);
            const long r = static_cast<long>(rank_exact(m));
            if (r != dim - (2 * N + 1))
                bad += " N=" + std::to_string(N) + ": rank " + std::to_string(r) + " expected " +
                       std::to_string(dim - (2 * N + 1)) + ";";
        }
        return bad.empty() ? Outcome{true, "0"} : Outcome{false, bad};
    });
    rep.run("spectrum.parity", [&] {
        for (int N = 0; N <= D; ++N) {
            std::vector<Rational> others;
            for (int M = 0; M <= D; ++M)
                if (M != N) others.push_back(E[M]);
            LinOp proj = P;
            proj.add_identity(N % 2 == 0 ? -1 : 1);
            LinOp r = proj * shifted_product(H, others);
            if (!r.is_zero())
                return exact_zero(r.rename("(P123 - (-1)^" + std::to_string(N) + ") prod_{M!=N}(H - E_M)"));
        }
        return Outcome{true, "0"};
    });
    rep.run("spectrum.trace", [&] {
        Rational tr = 0, expected = 0;
        for (std::size_t i = 0; i < H.dim(); ++i) tr += H(i, i);
        for (int N = 0; N <= D; ++N) expected += (2 * N + 1) * E[N];
        return tr == expected ? Outcome{true, "0"}
                              : Outcome{false, "trace " + to_short(tr) + " expected " + to_short(expected)};
    });
    return rep;
}

inline VerificationReport spectrum_certificate(const ModelParams& params, int degree) {
    return spectrum_certificate(SymmetryCatalog(params, degree));
}

/// Roots +-(n + a), n = 0..D, without repeats. A coincidence between roots
/// belonging to different n is an error.
inline std::vector<Rational> separation_roots(const Rational& a, int D) {
    std::vector<Rational> roots;
    std::vector<int> owner;
    for (int n = 0; n <= D; ++n) {
        const Rational m = n + a;
        for (const Rational& r : {m, Rational(-m)}) {
            bool dup = false;
            for (std::size_t i = 0; i < roots.size(); ++i) {
                if (roots[i] != r) continue;
                if (owner[i] != n)
                    throw CollisionError("separation roots for n=" + std::to_string(owner[i]) + " and n=" +
                                         std::to_string(n) + " coincide at " + to_short(r));
                dup = true;
            }
            if (!dup) {
                roots.push_back(r);
                owner.push_back(n);
            }
        }
    }
    return roots;
}

inline VerificationReport separation_certificate(const SymmetryCatalog& cat) {
    const int D = cat.degree();
    const auto& p = cat.params();
    VerificationReport rep("separation", p, cat.basis()->descriptor());
    const auto& H = cat["H"];
    auto certify = [&](const std::string& id, const std::string& op, const Rational& a) {
        const auto roots = separation_roots(a, D);
        LinOp shifted = cat[op];
        shifted.add_identity(Rational(-1, 2));
        rep.run(id, [&] {
            return annihilator_check(shifted, roots)
                       ? Outcome{true, "0"}
                       : exact_zero(shifted_product(shifted, roots).rename("prod (" + op + " - 1/2 - m)"));
        });
        const LinOp sq = shifted * shifted;
        nlohmann::json table = nlohmann::json::array();
        for (int n = 0; n <= D; ++n) {
            const Rational m2 = (n + a) * (n + a);
            LinOp t = sq;
            t.add_identity(-m2);
            table.push_back({{"n", n}, {"m2", to_pq(m2)}, {"multiplicity", H.dim() - rank_exact(t)}});
        }
        rep.info()[op + "_multiplicities"] = table;
        rep.run(id + "_H", [&] { return exact_zero(commutator(cat[op], H)); });
    };
    certify("separation.Z", "Z", p.mu1 + p.mu2);
    certify("separation.Y", "Y", p.mu2 + p.mu3);
    return rep;
}

inline VerificationReport separation_certificate(const ModelParams& params, int degree) {
    return separation_certificate(SymmetryCatalog(params, degree));
}

}  // namespace bisphere
