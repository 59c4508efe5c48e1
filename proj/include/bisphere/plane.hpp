// Contraction to the plane: tilde angular momenta, the planar Dunkl oscillator
// and the spectral limit of the sphere energies.
#pragma once

#include "bisphere/racah.hpp"
#include "bisphere/report.hpp"
#include "bisphere/sphere_model.hpp"

#include <map>
#include <string>
#include <vector>

namespace bisphere {

/// Gauged i*L~_i as DSL texts: s_j D_k - s_k D_j for cyclic (i, j, k).
inline std::string tilde_text(int i) {
    switch (i) {
        case 1: return "s2*D3 - s3*D2";
        case 2: return "s3*D1 - s1*D3";
        case 3: return "s1*D2 - s2*D1";
    }
    throw std::out_of_range("tilde index must be 1, 2 or 3");
}

/// Rational matrices of i*L~_1, i*L~_2, i*L~_3 and the reflections on SphereQuotient(D).
class TildeCatalog {
public:
    TildeCatalog(const ModelParams& params, int degree)
        : params_(params), basis_(std::make_shared<const Basis>(Basis::sphere(degree))) {
        params_.validate();
        for (int i = 1; i <= 3; ++i) {
            T_.push_back(build_matrix(tilde_text(i), basis_, params_, "iL~" + std::to_string(i)));
            R_.push_back(build_matrix("R" + std::to_string(i), basis_, params_, "R" + std::to_string(i)));
        }
    }

    const LinOp& T(int i) const { return T_.at(i - 1); }
    const LinOp& R(int i) const { return R_.at(i - 1); }
    const ModelParams& params() const { return params_; }
    const std::shared_ptr<const Basis>& basis() const { return basis_; }

private:
    ModelParams params_;
    std::shared_ptr<const Basis> basis_;
    std::vector<LinOp> T_, R_;
};

/// [iL~_a, iL~_b] = -(iL~_c)(1 + 2 mu_c R_c) for cyclic (a, b, c), and the reflection relations.
inline VerificationReport verify_tilde_relations(const TildeCatalog& cat) {
    VerificationReport rep("tilde", cat.params(), cat.basis()->descriptor());
    const auto& p = cat.params();
    const LinOp I = LinOp::identity(cat.basis());
    for (const auto& [a, b, c] : {std::array{1, 2, 3}, std::array{2, 3, 1}, std::array{3, 1, 2}}) {
        const std::string id = "tilde.T" + std::to_string(a) + std::to_string(b);
        rep.run(id, [&, a = a, b = b, c = c] {
            LinOp factor = cat.R(c);
            factor *= 2 * p.mu(c);
            factor += I;
            LinOp r = commutator(cat.T(a), cat.T(b)) + cat.T(c) * factor;
            return exact_zero(r.rename("[iL~" + std::to_string(a) + ",iL~" + std::to_string(b) + "] + iL~" +
                                       std::to_string(c) + "(1+2mu" + std::to_string(c) + "R" + std::to_string(c) +
                                       ")"));
        });
    }
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const std::string id = "tilde.TR" + std::to_string(i) + std::to_string(j);
            rep.run(id, [&] {
                return exact_zero(i == j ? commutator(cat.T(i), cat.R(j)) : anticommutator(cat.T(i), cat.R(j)));
            });
        }
    return rep;
}

inline VerificationReport verify_tilde_relations(const ModelParams& params, int degree) {
    return verify_tilde_relations(TildeCatalog(params, degree));
}

/// Two parabose modes on |n1, n2>, index n1 * (cutoff + 1) + n2.
struct PlaneModel {
    Rational mu1, mu2;
    int cutoff = 0;
    LadderRep mode1, mode2;
    Matrix H, H1, H2, J1, iJ2, R1, R2;

    Eigen::Index index(int n1, int n2) const { return static_cast<Eigen::Index>(n1) * (cutoff + 1) + n2; }
    int dim() const { return (cutoff + 1) * (cutoff + 1); }
};

inline PlaneModel build_plane(const Rational& mu1, const Rational& mu2, int cutoff) {
    if (cutoff < 4) throw std::invalid_argument("plane cutoff must be >= 4");
    PlaneModel m{mu1, mu2, cutoff, ladder_rep(mu1, cutoff), ladder_rep(mu2, cutoff), {}, {}, {}, {}, {}, {}, {}};
    const Matrix I = Matrix::Identity(cutoff + 1, cutoff + 1);
    auto one = [&](const Matrix& a) { return detail::kron(a, I); };
    auto two = [&](const Matrix& b) { return detail::kron(I, b); };
    m.H1 = one(2 * m.mode1.A0);
    m.H2 = two(2 * m.mode2.A0);
    m.H = m.H1 + m.H2;
    m.J1 = m.H1 - m.H2;
    m.iJ2 = one(m.mode1.Ap) * two(m.mode2.Am) - one(m.mode1.Am) * two(m.mode2.Ap);
    m.R1 = one(m.mode1.P);
    m.R2 = two(m.mode2.P);
    return m;
}

namespace detail {

/// Largest entry over columns |n1, n2> with n1, n2 <= last.
inline double plane_window_norm(const PlaneModel& m, const Matrix& a, int last) {
    double worst = 0;
    for (int n1 = 0; n1 <= last; ++n1)
        for (int n2 = 0; n2 <= last; ++n2) worst = std::max(worst, a.col(m.index(n1, n2)).cwiseAbs().maxCoeff());
    return worst;
}

}  // namespace detail

inline VerificationReport verify_plane_symmetries(const PlaneModel& m) {
    VerificationReport rep("plane", std::nullopt, "Ladder(" + std::to_string(m.cutoff) + ")^2");
    rep.info()["mu1"] = to_pq(m.mu1);
    rep.info()["mu2"] = to_pq(m.mu2);
    rep.info()["mode"] = "float";
    const int last = m.cutoff - 2;
    auto comm = [](const Matrix& a, const Matrix& b) -> Matrix { return a * b - b * a; };
    auto window = [&](const Matrix& a) { return within(detail::plane_window_norm(m, a, last), ladder_tolerance); };
    rep.run("plane.H_J2", [&] { return window(comm(m.H, m.iJ2)); });
    rep.run("plane.H_J1", [&] { return window(comm(m.H, m.J1)); });
    rep.run("plane.H_R1", [&] { return window(comm(m.H, m.R1)); });
    rep.run("plane.H_R2", [&] { return window(comm(m.H, m.R2)); });
    rep.run("plane.J1_J2", [&] {
        const double n = detail::plane_window_norm(m, comm(m.J1, m.iJ2), last);
        rep.info()["J1_J2_norm"] = n;
        return Outcome{n > 1e-3, format_norm(n) + " (nonzero required)"};
    });
    rep.run("plane.spectrum", [&] {
        double worst = 0;
        std::map<int, int> multiplicity;
        for (int n1 = 0; n1 <= m.cutoff; ++n1)
            for (int n2 = 0; n2 <= m.cutoff; ++n2) {
                const double want = 2 * (n1 + n2 + Rational(m.mu1 + m.mu2).get_d() + 1);
                const auto i = m.index(n1, n2);
                worst = std::max(worst, std::abs(m.H(i, i) - want));
                ++multiplicity[n1 + n2];
            }
        const Matrix off = m.H - Matrix(m.H.diagonal().asDiagonal());
        worst = std::max(worst, off.cwiseAbs().maxCoeff());
        for (int level = 0; level <= m.cutoff; ++level)
            if (multiplicity[level] != level + 1)
                return Outcome{false, "level " + std::to_string(level) + " has multiplicity " +
                                          std::to_string(multiplicity[level])};
        return within(worst, ladder_tolerance);
    });
    rep.run("plane.J2_levels", [&] {
        double worst = 0;
        for (int a1 = 0; a1 <= last; ++a1)
            for (int a2 = 0; a2 <= last; ++a2)
                for (int b1 = 0; b1 <= m.cutoff; ++b1)
                    for (int b2 = 0; b2 <= m.cutoff; ++b2)
                        if (a1 + a2 != b1 + b2) worst = std::max(worst, std::abs(m.iJ2(m.index(b1, b2), m.index(a1, a2))));
        return within(worst, ladder_tolerance);
    });
    return rep;
}

/// Sphere energy with mu3 = r^2, shifted and rescaled as in the contraction.
inline Rational contracted_energy(const ModelParams& p, int N, int e3, const Rational& r) {
    const Rational r2 = r * r;
    const ModelParams q{p.mu1, p.mu2, r2};
    return (energy(q, N) - r2 * r2 + r2 * (1 - 2 * e3)) / r2;
}

inline Rational contraction_limit(const ModelParams& p, int N, int e3) { return 2 * (N + p.mu1 + p.mu2 + 1 - e3); }

/// eps_N(r) - limit == ((N+a)^2 + (N+a)) / r^2 exactly, a = mu1 + mu2; mu3 of `p` is ignored.
inline VerificationReport contraction_convergence(const ModelParams& p, int N, int e3,
                                                  const std::vector<Rational>& r_list, int plane_cutoff = -1) {
    if (N < 0) throw std::invalid_argument("N must be >= 0");
    if (e3 != 0 && e3 != 1) throw std::invalid_argument("e3 must be 0 or 1");
    if (N < e3) throw std::invalid_argument("N - e3 must be >= 0");
    if (r_list.empty()) throw std::invalid_argument("need at least one radius");
    for (std::size_t i = 0; i < r_list.size(); ++i) {
        if (sgn(r_list[i]) <= 0) throw std::invalid_argument("radii must be positive");
        if (i > 0 && r_list[i] <= r_list[i - 1]) throw std::invalid_argument("radii must be increasing");
    }
    ModelParams(p.mu1, p.mu2, 0).validate();

    VerificationReport rep("contraction", ModelParams{p.mu1, p.mu2, 0}, "exact");
    const Rational limit = contraction_limit(p, N, e3);
    const Rational a = p.mu1 + p.mu2;
    const Rational c = (N + a) * (N + a) + (N + a);
    rep.info()["N"] = N;
    rep.info()["e3"] = e3;
    rep.info()["mu3_hat"] = "1";
    rep.info()["limit"] = to_pq(limit);

    rep.run("contraction.identity", [&] {
        nlohmann::json rows = nlohmann::json::array();
        std::string bad;
        for (const auto& r : r_list) {
            const Rational eps = contracted_energy(p, N, e3, r);
            const Rational dev = eps - limit;
            const Rational want = c / (r * r);
            rows.push_back({{"r", to_pq(r)}, {"epsilon", to_pq(eps)}, {"deviation", to_pq(dev)}});
            if (dev != want) bad += " r=" + to_short(r) + ": " + to_short(dev) + " vs " + to_short(want) + ";";
        }
        rep.info()["rows"] = rows;
        return bad.empty() ? Outcome{true, "0"} : Outcome{false, bad};
    });

    rep.run("contraction.limit_in_plane", [&] {
        const int level = N - e3;
        const int cutoff = std::max({plane_cutoff, level + 2, 4});
        const PlaneModel m = build_plane(p.mu1, p.mu2, cutoff);
        const double target = limit.get_d();
        int hits = 0;
        for (int n1 = 0; n1 <= cutoff; ++n1)
            for (int n2 = 0; n2 <= cutoff; ++n2) {
                const auto i = m.index(n1, n2);
                if (std::abs(m.H(i, i) - target) < ladder_tolerance) {
                    if (n1 + n2 != level) return Outcome{false, "limit matched at level " + std::to_string(n1 + n2)};
                    ++hits;
                }
            }
        return hits == level + 1 ? Outcome{true, "0"}
                                 : Outcome{false, std::to_string(hits) + " plane states at the limit value"};
    });
    return rep;
}

}  // namespace bisphere
