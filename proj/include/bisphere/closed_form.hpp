// Separated wavefunctions in spherical coordinates, quadrature and eigenspace matching.
#pragma once

#include "bisphere/report.hpp"
#include "bisphere/sphere_model.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bisphere {

/// Jacobi polynomial P_k^{(alpha,beta)}(x) by the three-term recurrence.
/// Works for double and Rational.
template <class T>
T jacobi(int k, const T& alpha, const T& beta, const T& x) {
    if (k < 0) throw std::domain_error("jacobi: degree must be >= 0");
    T p0 = 1;
    if (k == 0) return p0;
    T p1 = (alpha - beta) / 2 + (alpha + beta + 2) * x / 2;
    for (int j = 1; j < k; ++j) {
        const T s = 2 * j + alpha + beta;
        const T a = 2 * (j + 1) * (j + alpha + beta + 1) * s;
        const T b = (s + 1) * ((s + 2) * s * x + alpha * alpha - beta * beta);
        const T c = 2 * (j + alpha) * (j + beta) * (s + 2);
        T p2 = (b * p1 - c * p0) / a;
        p0 = std::move(p1);
        p1 = std::move(p2);
    }
    return p1;
}

inline double jacobi(int k, double alpha, double beta, double x) { return jacobi<double>(k, alpha, beta, x); }

enum class Coords { Standard, Alternative };

inline std::string to_string(Coords c) { return c == Coords::Standard ? "standard" : "alt"; }

/// Quantum numbers (N, n, e1, e2, e3).
struct StateSpec {
    int N = 0;
    int n = 0;
    int e1 = 0;
    int e2 = 0;
    int e3 = 0;

    int e(int axis) const { return axis == 1 ? e1 : axis == 2 ? e2 : e3; }
    double m2(const ModelParams& p, Coords c = Coords::Standard) const {
        const double m = c == Coords::Standard ? n + Rational(p.mu1 + p.mu2).get_d() : n + Rational(p.mu2 + p.mu3).get_d();
        return m * m;
    }
    std::string label() const {
        return "N=" + std::to_string(N) + " n=" + std::to_string(n) + " e=(" + std::to_string(e1) + "," +
               std::to_string(e2) + "," + std::to_string(e3) + ")";
    }
    friend bool operator==(const StateSpec&, const StateSpec&) = default;
};

/// The azimuthal pair and zenithal label differ by coordinate system:
/// standard uses Phi^{(e1,e2)}, Theta^{(e3)}; alternative uses Phi^{(e2,e3)}, Theta^{(e1)}.
inline bool admissible(const StateSpec& s, Coords c = Coords::Standard) {
    for (int b : {s.e1, s.e2, s.e3})
        if (b != 0 && b != 1) return false;
    const int ea = c == Coords::Standard ? s.e1 + s.e2 : s.e2 + s.e3;
    const int ez = c == Coords::Standard ? s.e3 : s.e1;
    const int k_az = s.n - ea;
    const int k_zen = s.N - s.n - ez;
    return s.N >= 0 && s.n >= 0 && k_az >= 0 && k_az % 2 == 0 && k_zen >= 0 && k_zen % 2 == 0;
}

inline std::vector<StateSpec> admissible_states(int N, Coords c = Coords::Standard) {
    if (N < 0) throw std::invalid_argument("N must be >= 0");
    std::vector<StateSpec> out;
    for (int n = 0; n <= N; ++n)
        for (int e1 = 0; e1 <= 1; ++e1)
            for (int e2 = 0; e2 <= 1; ++e2)
                for (int e3 = 0; e3 <= 1; ++e3) {
                    StateSpec s{N, n, e1, e2, e3};
                    if (admissible(s, c)) out.push_back(s);
                }
    return out;
}

inline std::vector<StateSpec> states_up_to(int N_max, Coords c = Coords::Standard) {
    std::vector<StateSpec> out;
    for (int N = 0; N <= N_max; ++N)
        for (const auto& s : admissible_states(N, c)) out.push_back(s);
    return out;
}

namespace detail {

inline double checked_lgamma(double x) {
    if (!(x > 0)) throw std::domain_error("log-Gamma argument must be positive");
    return std::lgamma(x);
}

/// log of x * Gamma(y), using x Gamma(x) = Gamma(x+1) when x == y.
inline double log_x_gamma(double x, double y, bool merge) {
    return merge ? checked_lgamma(x + 1) : std::log(x) + checked_lgamma(y);
}

inline double ipow(double x, int e) { return e == 0 ? 1.0 : e == 1 ? x : std::pow(x, e); }

inline double apow(double x, double mu) { return mu == 0 ? 1.0 : std::pow(std::abs(x), mu); }

}  // namespace detail

/// Azimuthal factor in (cos phi, sin phi) with parameters (ma, mb) on (cos, sin).
inline double azimuthal(int n, int ea, int eb, double ma, double mb, double c, double s) {
    const int k = (n - ea - eb) / 2;
    const double lognorm = detail::log_x_gamma(n + ma + mb, (n + ea + eb) / 2.0 + ma + mb, n == 0) +
                           std::lgamma(k + 1.0) - std::log(2.0) -
                           detail::checked_lgamma((n + ea - eb) / 2.0 + ma + 0.5) -
                           detail::checked_lgamma((n + eb - ea) / 2.0 + mb + 0.5);
    return std::exp(0.5 * lognorm) * detail::apow(c, ma) * detail::apow(s, mb) * detail::ipow(c, ea) *
           detail::ipow(s, eb) * jacobi(k, mb - 0.5 + eb, ma - 0.5 + ea, c * c - s * s);
}

/// Zenithal factor in (cos theta, sin theta); mab = sum of azimuthal parameters, mc = polar one.
inline double zenithal(int N, int n, int ec, double mab, double mc, double c, double s) {
    const int k = (N - n - ec) / 2;
    const double sigma = mab + mc;
    const double lognorm = detail::log_x_gamma(N + sigma + 0.5, (N + n + ec) / 2.0 + sigma + 0.5, N == 0) +
                           std::lgamma(k + 1.0) - detail::checked_lgamma((N + n - ec) / 2.0 + mab + 1) -
                           detail::checked_lgamma((N - n + ec) / 2.0 + mc + 0.5);
    return std::exp(0.5 * lognorm) * detail::apow(s, mab) * detail::apow(c, mc) * detail::ipow(s, n) *
           detail::ipow(c, ec) * jacobi(k, n + mab, mc - 0.5 + ec, c * c - s * s);
}

namespace detail {

inline void check_state(const StateSpec& s, const ModelParams& p, Coords c) {
    p.validate();
    if (!admissible(s, c)) throw std::invalid_argument("inadmissible state " + s.label());
}

/// Standard-coordinate value from trigonometric data.
inline double psi_trig(const StateSpec& s, const std::array<double, 3>& mu, double ct, double st, double cp,
                       double sp) {
    return zenithal(s.N, s.n, s.e3, mu[0] + mu[1], mu[2], ct, st) * azimuthal(s.n, s.e1, s.e2, mu[0], mu[1], cp, sp);
}

inline std::array<double, 3> mu_doubles(const ModelParams& p) { return {p.mu1.get_d(), p.mu2.get_d(), p.mu3.get_d()}; }

}  // namespace detail

/// Psi at (theta, phi). Alternative coordinates read the angles as (vartheta, varphi)
/// with s1 = cos vartheta, s2 = cos varphi sin vartheta, s3 = sin varphi sin vartheta.
inline double psi_eval(const StateSpec& s, const ModelParams& p, double theta, double phi,
                       Coords c = Coords::Standard) {
    detail::check_state(s, p, c);
    const double ct = std::cos(theta), st = std::sin(theta), cp = std::cos(phi), sp = std::sin(phi);
    if (c == Coords::Standard) return detail::psi_trig(s, detail::mu_doubles(p), ct, st, cp, sp);
    const auto m = detail::mu_doubles(p.rotated());
    return zenithal(s.N, s.n, s.e1, m[0] + m[1], m[2], ct, st) * azimuthal(s.n, s.e2, s.e3, m[0], m[1], cp, sp);
}

/// Psi at a point of the unit sphere.
inline double psi_at(const StateSpec& s, const ModelParams& p, const std::array<double, 3>& x,
                     Coords c = Coords::Standard) {
    detail::check_state(s, p, c);
    auto angles = [](double z, double a, double b) {
        const double r = std::hypot(a, b);
        return std::array<double, 4>{z, r, r > 0 ? a / r : 1.0, r > 0 ? b / r : 0.0};
    };
    if (c == Coords::Standard) {
        const auto t = angles(x[2], x[0], x[1]);
        return detail::psi_trig(s, detail::mu_doubles(p), t[0], t[1], t[2], t[3]);
    }
    const auto m = detail::mu_doubles(p.rotated());
    const auto t = angles(x[0], x[1], x[2]);
    return zenithal(s.N, s.n, s.e1, m[0] + m[1], m[2], t[0], t[1]) * azimuthal(s.n, s.e2, s.e3, m[0], m[1], t[2], t[3]);
}

/// Gauss-Legendre nodes and weights on [-1, 1] (Golub-Welsch).
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("need at least one node");
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) J(k, k - 1) = J(k - 1, k) = k / std::sqrt(4.0 * k * k - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    std::vector<double> x(n), w(n);
    for (int i = 0; i < n; ++i) {
        x[i] = es.eigenvalues()(i);
        w[i] = 2 * es.eigenvectors()(0, i) * es.eigenvectors()(0, i);
    }
    // symmetrize so that mirrored panels pair exactly
    for (int i = 0; i < n / 2; ++i) {
        const double xs = 0.5 * (x[n - 1 - i] - x[i]);
        const double ws = 0.5 * (w[i] + w[n - 1 - i]);
        x[i] = -xs;
        x[n - 1 - i] = xs;
        w[i] = w[n - 1 - i] = ws;
    }
    if (n % 2 == 1) x[n / 2] = 0;
    return {x, w};
}

/// Tensor grid on [0, pi] x [0, 2 pi): two mirrored theta panels and four
/// mirrored phi quadrants, each a Gauss-Legendre rule pulled through the
/// endpoint-clustering sin^m map.
/// Point order: (theta panel, theta node, phi quadrant, phi node).
class QuadratureGrid {
public:
    struct Panel {
        std::vector<double> cos, sin, weight;  // base nodes in (0, pi/2)
    };

    explicit QuadratureGrid(int nodes_per_direction, int clustering = 4)
        : requested_(nodes_per_direction), clustering_(clustering) {
        if (nodes_per_direction < 4) throw std::invalid_argument("at least 4 nodes per direction");
        if (clustering < 1) throw std::invalid_argument("clustering exponent must be >= 1");
        theta_ = panel((nodes_per_direction + 1) / 2);
        phi_ = panel((nodes_per_direction + 3) / 4);
    }

    int requested() const { return requested_; }
    int clustering() const { return clustering_; }
    const Panel& theta_panel() const { return theta_; }
    const Panel& phi_panel() const { return phi_; }
    std::size_t theta_count() const { return 2 * theta_.cos.size(); }
    std::size_t phi_count() const { return 4 * phi_.cos.size(); }
    std::size_t size() const { return theta_count() * phi_count(); }

    std::string descriptor() const {
        return "GL(" + std::to_string(theta_count()) + "x" + std::to_string(phi_count()) + ",m=" +
               std::to_string(clustering_) + ")";
    }

    /// Visits every point as f(index, cos theta, sin theta, cos phi, sin phi).
    template <class F>
    void for_each(F&& f) const {
        const std::size_t kt = theta_.cos.size(), kp = phi_.cos.size();
        std::size_t idx = 0;
        for (int tp = 0; tp < 2; ++tp)
            for (std::size_t i = 0; i < kt; ++i) {
                const double ct = tp == 0 ? theta_.cos[i] : -theta_.cos[i];
                const double st = theta_.sin[i];
                for (int q = 0; q < 4; ++q) {
                    const double fc = (q == 0 || q == 3) ? 1 : -1;
                    const double fs = q < 2 ? 1 : -1;
                    for (std::size_t j = 0; j < kp; ++j) f(idx++, ct, st, fc * phi_.cos[j], fs * phi_.sin[j]);
                }
            }
    }

    std::vector<std::array<double, 3>> points() const {
        std::vector<std::array<double, 3>> out(size());
        for_each([&](std::size_t i, double ct, double st, double cp, double sp) { out[i] = {st * cp, st * sp, ct}; });
        return out;
    }

    /// Integral of f sin(theta) dphi dtheta for values in point order.
    /// Mirror blocks are combined pairwise, so integrands odd under a
    /// reflection sum to exactly zero.
    double integrate(std::span<const double> v) const {
        if (v.size() != size()) throw std::invalid_argument("value count does not match grid");
        const std::size_t kt = theta_.cos.size(), kp = phi_.cos.size();
        std::vector<double> buf(std::max(kt, kp));
        std::array<double, 2> panels{};
        std::vector<double> inner(kt);
        for (int tp = 0; tp < 2; ++tp) {
            for (std::size_t i = 0; i < kt; ++i) {
                std::array<double, 4> quad{};
                for (int q = 0; q < 4; ++q) {
                    const double* row = v.data() + ((tp * kt + i) * 4 + q) * kp;
                    for (std::size_t j = 0; j < kp; ++j) buf[j] = row[j] * phi_.weight[j];
                    quad[q] = pairwise(buf.data(), kp);
                }
                inner[i] = ((quad[0] + quad[1]) + (quad[2] + quad[3])) * theta_.weight[i] * theta_.sin[i];
            }
            panels[tp] = pairwise(inner.data(), kt);
        }
        return panels[0] + panels[1];
    }

private:
    static double pairwise(const double* x, std::size_t n) {
        if (n <= 8) {
            double s = 0;
            for (std::size_t i = 0; i < n; ++i) s += x[i];
            return s;
        }
        const std::size_t h = n / 2;
        return pairwise(x, h) + pairwise(x + h, n - h);
    }

    /// Sidi map g(t) = c_m int_0^t sin^m(pi u) du, evaluated as a sum of
    /// positive terms so that g and 1 - g keep full relative accuracy.
    double sidi(double t, const std::vector<double>& x, const std::vector<double>& w) const {
        const int m = clustering_;
        double acc = 0;
        for (std::size_t i = 0; i < x.size(); ++i) acc += w[i] * std::pow(std::sin(std::numbers::pi * 0.5 * t * (x[i] + 1)), m);
        return acc * 0.5 * t * sidi_scale_;
    }

    Panel panel(int k) {
        const auto [x, w] = gauss_legendre(k);
        const auto [xi, wi] = gauss_legendre(40);
        const int m = clustering_;
        sidi_scale_ = 1;
        sidi_scale_ = 1 / sidi(1, xi, wi);
        const double half_pi = std::numbers::pi / 2;
        Panel out;
        for (int i = 0; i < k; ++i) {
            const double t = 0.5 * (x[i] + 1);
            const double g = t <= 0.5 ? sidi(t, xi, wi) : 1 - sidi(1 - t, xi, wi);
            const double h = t <= 0.5 ? 1 - g : sidi(1 - t, xi, wi);
            const double dg = sidi_scale_ * std::pow(std::sin(std::numbers::pi * t), m);
            out.sin.push_back(std::sin(half_pi * g));
            out.cos.push_back(std::sin(half_pi * h));
            out.weight.push_back(half_pi * dg * 0.5 * w[i]);
        }
        return out;
    }

    int requested_;
    int clustering_;
    double sidi_scale_ = 1;
    Panel theta_;
    Panel phi_;
};

/// Values of each state at every grid point (standard-grid points; alternative
/// states are evaluated through the Cartesian point).
inline std::vector<std::vector<double>> state_values(const std::vector<StateSpec>& states, const ModelParams& p,
                                                     const QuadratureGrid& grid, Coords c = Coords::Standard) {
    for (const auto& s : states) detail::check_state(s, p, c);
    const auto mu = detail::mu_doubles(p);
    std::vector<std::vector<double>> out(states.size(), std::vector<double>(grid.size()));
    for (std::size_t a = 0; a < states.size(); ++a) {
        if (c == Coords::Standard) {
            grid.for_each([&](std::size_t i, double ct, double st, double cp, double sp) {
                out[a][i] = detail::psi_trig(states[a], mu, ct, st, cp, sp);
            });
        } else {
            grid.for_each([&](std::size_t i, double ct, double st, double cp, double sp) {
                out[a][i] = psi_at(states[a], p, {st * cp, st * sp, ct}, c);
            });
        }
    }
    return out;
}

inline Eigen::MatrixXd overlap_matrix(const std::vector<std::vector<double>>& a,
                                      const std::vector<std::vector<double>>& b, const QuadratureGrid& grid) {
    Eigen::MatrixXd g(a.size(), b.size());
    std::vector<double> prod(grid.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            for (std::size_t k = 0; k < prod.size(); ++k) prod[k] = a[i][k] * b[j][k];
            g(i, j) = grid.integrate(prod);
        }
    return g;
}

/// Overlaps of all admissible standard-coordinate states with N <= N_max, in states_up_to order.
inline Eigen::MatrixXd gram_matrix(int N_max, const ModelParams& p, const QuadratureGrid& grid) {
    const auto v = state_values(states_up_to(N_max), p, grid);
    return overlap_matrix(v, v, grid);
}

inline double max_deviation_from_identity(const Eigen::MatrixXd& g) {
    return (g - Eigen::MatrixXd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

/// Tolerance for Gram checks: integrands are only integrable (not continuous) when some mu < 0.
inline bool has_singular_weight(const ModelParams& p) { return sgn(p.mu1) < 0 || sgn(p.mu2) < 0 || sgn(p.mu3) < 0; }

inline double gram_tolerance(const ModelParams& p) { return has_singular_weight(p) ? 1e-6 : 1e-10; }

/// Stronger endpoint clustering for singular weights.
inline int default_clustering(const ModelParams& p) { return has_singular_weight(p) ? 8 : 4; }

/// Uniform random points on the unit sphere.
inline std::vector<std::array<double, 3>> random_sphere_points(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd;
    std::vector<std::array<double, 3>> out;
    while (out.size() < count) {
        std::array<double, 3> x{nd(rng), nd(rng), nd(rng)};
        const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
        if (r < 1e-3) continue;
        for (auto& c : x) c /= r;
        out.push_back(x);
    }
    return out;
}

namespace detail {

inline double gauge_weight(const ModelParams& p, const std::array<double, 3>& x) {
    const auto mu = mu_doubles(p);
    return apow(x[0], mu[0]) * apow(x[1], mu[1]) * apow(x[2], mu[2]);
}

/// Relative Frobenius residual of the least-squares fit target ~ basis * X.
inline double fit_residual(const Eigen::MatrixXd& basis, const Eigen::MatrixXd& target) {
    if (target.size() == 0) return 0;
    if (basis.cols() == 0) return 1;
    const Eigen::MatrixXd X = basis.completeOrthogonalDecomposition().solve(target);
    return (basis * X - target).norm() / target.norm();
}

}  // namespace detail

struct EigvecMatchOptions {
    std::size_t samples = 50;
    std::uint64_t seed = 20140127;
    int max_N = 4;
    double tolerance = 1e-9;
};

/// Exact kernels of H - E_N on SphereQuotient(D), times the gauge weight,
/// against the closed-form states with the same reflection labels.
inline VerificationReport eigenvector_match(const SymmetryCatalog& cat, EigvecMatchOptions opt = {}) {
    const auto& p = cat.params();
    const int top = std::min(cat.degree(), opt.max_N);
    VerificationReport rep("closed", p, cat.basis()->descriptor());
    const auto pts = random_sphere_points(opt.samples, opt.seed);
    rep.info()["eigvec_samples"] = opt.samples;
    rep.info()["eigvec_seed"] = opt.seed;
    rep.run("closed.eigvec", [&] {
        const auto& basis = *cat.basis();
        double worst = 0;
        std::string bad;
        nlohmann::json per_level = nlohmann::json::array();
        for (int N = 0; N <= top; ++N) {
            LinOp m = cat["H"];
            m.add_identity(-energy(p, N));
            const auto kernel = nullspace_exact(m);
            if (static_cast<int>(kernel.size()) != 2 * N + 1)
                throw std::runtime_error("kernel dimension " + std::to_string(kernel.size()) + " at N=" +
                                         std::to_string(N) + " contradicts the spectrum certificate");
            const auto states = admissible_states(N);
            double level_worst = 0;
            for (int sector = 0; sector < 8; ++sector) {
                const int e1 = (sector >> 2) & 1, e2 = (sector >> 1) & 1, e3 = sector & 1;
                std::vector<LaurentPoly3> polys;
                for (const auto& v : kernel) {
                    LaurentPoly3 poly;
                    int sec = -1;
                    for (std::size_t i = 0; i < v.size(); ++i)
                        if (sgn(v[i]) != 0) {
                            poly.add_term(basis[i], v[i]);
                            const int si = parity_sector(basis[i]);
                            if (sec >= 0 && si != sec) throw std::runtime_error("kernel vector mixes parity sectors");
                            sec = si;
                        }
                    if (sec == sector) polys.push_back(std::move(poly));
                }
                std::vector<StateSpec> labelled;
                for (const auto& s : states)
                    if (s.e1 == e1 && s.e2 == e2 && s.e3 == e3) labelled.push_back(s);
                if (polys.size() != labelled.size()) {
                    bad += " N=" + std::to_string(N) + " sector " + std::to_string(sector) + ": " +
                           std::to_string(polys.size()) + " kernel vectors vs " + std::to_string(labelled.size()) +
                           " states;";
                    continue;
                }
                if (polys.empty()) continue;
                Eigen::MatrixXd K(pts.size(), polys.size()), F(pts.size(), labelled.size());
                for (std::size_t r = 0; r < pts.size(); ++r) {
                    const double g = detail::gauge_weight(p, pts[r]);
                    for (std::size_t k = 0; k < polys.size(); ++k) K(r, k) = g * polys[k].evaluate(pts[r]);
                    for (std::size_t k = 0; k < labelled.size(); ++k) F(r, k) = psi_at(labelled[k], p, pts[r]);
                }
                for (Eigen::Index k = 0; k < K.cols(); ++k) K.col(k) /= K.col(k).norm();
                const double res = std::max(detail::fit_residual(K, F), detail::fit_residual(F, K));
                level_worst = std::max(level_worst, res);
            }
            per_level.push_back({{"N", N}, {"kernel_dim", kernel.size()}, {"residual", level_worst}});
            worst = std::max(worst, level_worst);
        }
        rep.info()["eigvec_levels"] = per_level;
        if (!bad.empty()) return Outcome{false, bad};
        return within(worst, opt.tolerance);
    });
    return rep;
}

inline VerificationReport eigenvector_match(const ModelParams& p, int D, EigvecMatchOptions opt = {}) {
    return eigenvector_match(SymmetryCatalog(p, D), opt);
}

struct ClosedFormOptions {
    int degree = 4;
    int N_max = 4;
    int nodes = 200;
    int admissible_max = 12;
    std::size_t reflection_samples = 100;
    std::uint64_t seed = 20140127;
    EigvecMatchOptions eigvec{};
};

/// Full closed-form suite: counting, Gram, reflections, global parity,
/// alternative coordinates and the eigenspace match.
inline VerificationReport verify_closed_form(const ModelParams& p, ClosedFormOptions opt = {}) {
    p.validate();
    const QuadratureGrid grid(opt.nodes, default_clustering(p));
    VerificationReport rep("closed", p, "SphereQuotient(" + std::to_string(opt.degree) + ")");
    const double tol = gram_tolerance(p);
    rep.info()["grid"] = grid.descriptor();
    rep.info()["gram_tolerance"] = tol;
    rep.info()["singular_weight"] = has_singular_weight(p);

    rep.run("closed.admissible", [&] {
        for (int N = 0; N <= opt.admissible_max; ++N)
            for (Coords c : {Coords::Standard, Coords::Alternative})
                if (admissible_states(N, c).size() != static_cast<std::size_t>(2 * N + 1))
                    return Outcome{false, "N=" + std::to_string(N) + " (" + to_string(c) + ") has " +
                                              std::to_string(admissible_states(N, c).size()) + " states"};
        return Outcome{true, "0"};
    });

    const auto states = states_up_to(opt.N_max);
    const auto values = state_values(states, p, grid);
    rep.run("closed.gram", [&] {
        const Eigen::MatrixXd g = overlap_matrix(values, values, grid);
        const double dev = max_deviation_from_identity(g);
        rep.info()["gram_states"] = states.size();
        rep.info()["gram_max_deviation"] = dev;
        return within(dev, tol);
    });

    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> ut(0, std::numbers::pi), up(0, 2 * std::numbers::pi);
    rep.run("closed.reflections", [&] {
        const auto mu = detail::mu_doubles(p);
        double worst = 0;
        for (std::size_t k = 0; k < opt.reflection_samples; ++k) {
            const double th = ut(rng), ph = up(rng);
            for (const auto& s : states) {
                const double ze = zenithal(s.N, s.n, s.e3, mu[0] + mu[1], mu[2], std::cos(th), std::sin(th));
                const double zr = zenithal(s.N, s.n, s.e3, mu[0] + mu[1], mu[2], std::cos(std::numbers::pi - th),
                                           std::sin(std::numbers::pi - th));
                const double az = azimuthal(s.n, s.e1, s.e2, mu[0], mu[1], std::cos(ph), std::sin(ph));
                const double a1 = azimuthal(s.n, s.e1, s.e2, mu[0], mu[1], std::cos(std::numbers::pi - ph),
                                            std::sin(std::numbers::pi - ph));
                const double a2 = azimuthal(s.n, s.e1, s.e2, mu[0], mu[1], std::cos(-ph), std::sin(-ph));
                const double scale = 1 + std::abs(ze) + std::abs(az);
                worst = std::max({worst, std::abs(zr - (1 - 2 * s.e3) * ze) / scale,
                                  std::abs(a1 - (1 - 2 * s.e1) * az) / scale,
                                  std::abs(a2 - (1 - 2 * s.e2) * az) / scale});
            }
        }
        return within(worst, 1e-12);
    });

    rep.run("closed.parity", [&] {
        double worst = 0;
        for (std::size_t k = 0; k < opt.reflection_samples; ++k) {
            const double th = ut(rng), ph = up(rng);
            for (const auto& s : states) {
                const double v = psi_eval(s, p, th, ph);
                const double w = psi_eval(s, p, std::numbers::pi - th, ph + std::numbers::pi);
                worst = std::max(worst, std::abs(w - (s.N % 2 == 0 ? 1 : -1) * v) / (1 + std::abs(v)));
            }
        }
        return within(worst, 1e-12);
    });

    rep.run("closed.alt_coords", [&] {
        double worst = 0;
        for (int N = 0; N <= opt.N_max; ++N) {
            const auto std_v = state_values(admissible_states(N), p, grid);
            const auto alt_v = state_values(admissible_states(N, Coords::Alternative), p, grid, Coords::Alternative);
            const Eigen::MatrixXd m = overlap_matrix(std_v, alt_v, grid);
            worst = std::max(worst, max_deviation_from_identity(m.transpose() * m));
        }
        return within(worst, std::max(1e-8, tol));
    });

    if (opt.degree >= 0) rep.merge(eigenvector_match(p, opt.degree, opt.eigvec));
    return rep;
}

}  // namespace bisphere
