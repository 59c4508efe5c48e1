#include "bisphere/suite.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

using namespace bisphere;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string mu1 = "1/3", mu2 = "1/5", mu3 = "1/7";
    int degree = 6;
    int cutoff = -1;
    int nodes = 200;
    int Nmax = 4;
    int N = -1, n = 0, e1 = 0, e2 = 0, e3 = -1;
    int grid = 24;
    std::string coords = "standard";
    std::string r = "10,100,1000";
    std::uint64_t seed = 42;
    bool random_params = false;
    std::string out;
    std::string summary;
    std::string mode = "both";
    bool no_timing = false;
};

Rational flag_rational(const std::string& name, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const std::exception& e) {
        throw UsageError("--" + name + ": " + e.what());
    }
}

ModelParams params_of(const Config& c) {
    if (c.random_params) {
        auto p = random_params(c.seed, 1).front();
        p.validate();
        return p;
    }
    ModelParams p{flag_rational("mu1", c.mu1), flag_rational("mu2", c.mu2), flag_rational("mu3", c.mu3)};
    p.validate();
    return p;
}

std::vector<Rational> radii_of(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(flag_rational("r", item));
    if (out.empty()) throw UsageError("--r needs at least one radius");
    return out;
}

void emit(const Config& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw std::runtime_error("cannot write " + c.out);
    f << text;
}

int emit_reports(const Config& c, const std::vector<VerificationReport>& reps, nlohmann::json extra = {}) {
    nlohmann::json j;
    if (reps.size() == 1 && extra.is_null()) {
        j = reps.front().to_json(!c.no_timing);
    } else {
        j = extra.is_null() ? nlohmann::json::object() : extra;
        j["tool_version"] = tool_version;
        j["reports"] = reports_json(reps, !c.no_timing);
        j["overall"] = all_pass(reps) ? "pass" : "fail";
    }
    emit(c, j.dump(2) + "\n");
    return all_pass(reps) ? 0 : 1;
}

int cmd_verify_s2(const Config& c) {
    const SymmetryCatalog cat(params_of(c), c.degree);
    return emit_reports(c, {verify_invariance_suite(cat)});
}

int cmd_verify_racah(const Config& c) {
    const auto p = params_of(c);
    std::vector<VerificationReport> reps;
    const std::string mode = c.mode == "differential" ? "diff" : c.mode;
    if (mode != "diff" && mode != "ladder" && mode != "both") throw UsageError("--mode must be diff, ladder or both");
    if (mode != "ladder")
        reps.push_back(verify_racah_identities(build_coupled_differential(p, c.degree), SymmetryCatalog(p, c.degree)));
    if (mode != "diff") reps.push_back(verify_racah_ladder(p, c.cutoff < 0 ? 12 : c.cutoff, 6));
    return emit_reports(c, reps);
}

int cmd_verify_contraction(const Config& c) {
    const auto p = params_of(c);
    const auto radii = radii_of(c.r);
    std::vector<VerificationReport> reps{verify_tilde_relations(p, c.degree)};
    const int lo = c.N < 0 ? 0 : c.N, hi = c.N < 0 ? 3 : c.N;
    for (int N = lo; N <= hi; ++N)
        for (int e3 = 0; e3 <= 1; ++e3) {
            if (c.e3 >= 0 && e3 != c.e3) continue;
            if (e3 > N) continue;
            reps.push_back(contraction_convergence(p, N, e3, radii, c.cutoff));
        }
    if (reps.size() == 1) throw UsageError("no admissible (N, e3) pair: need N >= e3");
    return emit_reports(c, reps);
}

int cmd_verify_plane(const Config& c) {
    const auto p = params_of(c);
    return emit_reports(c, {verify_plane_symmetries(build_plane(p.mu1, p.mu2, c.cutoff < 0 ? 14 : c.cutoff))});
}

int cmd_spectrum(const Config& c) {
    const SymmetryCatalog cat(params_of(c), c.degree);
    return emit_reports(c, {spectrum_certificate(cat), separation_certificate(cat)});
}

Coords coords_of(const Config& c) {
    if (c.coords == "standard") return Coords::Standard;
    if (c.coords == "alt" || c.coords == "alternative") return Coords::Alternative;
    throw UsageError("--coords must be standard or alt");
}

int cmd_wavefunction(const Config& c) {
    const auto p = params_of(c);
    const Coords coords = coords_of(c);
    const StateSpec s{c.N < 0 ? 0 : c.N, c.n, c.e1, c.e2, c.e3 < 0 ? 0 : c.e3};
    if (!admissible(s, coords)) throw UsageError("inadmissible quantum numbers " + s.label());
    if (c.grid < 1) throw UsageError("--grid must be positive");
    std::ostringstream os;
    os.precision(17);
    os << "theta,phi,value\n";
    for (int i = 0; i < c.grid; ++i)
        for (int j = 0; j < c.grid; ++j) {
            const double th = std::numbers::pi * (i + 0.5) / c.grid;
            const double ph = 2 * std::numbers::pi * j / c.grid;
            os << th << "," << ph << "," << psi_eval(s, p, th, ph, coords) << "\n";
        }
    emit(c, os.str());
    return 0;
}

int cmd_orthogonality(const Config& c) {
    const auto p = params_of(c);
    if (c.Nmax < 0) throw UsageError("--Nmax must be >= 0");
    const QuadratureGrid grid(c.nodes, default_clustering(p));
    const auto states = states_up_to(c.Nmax);
    const Eigen::MatrixXd g = gram_matrix(c.Nmax, p, grid);
    std::ostringstream os;
    os.precision(17);
    os << "state";
    for (const auto& s : states) os << "," << s.N << ":" << s.n << ":" << s.e1 << s.e2 << s.e3;
    os << "\n";
    double off = 0, diag = 0;
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        const auto& s = states[i];
        os << s.N << ":" << s.n << ":" << s.e1 << s.e2 << s.e3;
        for (Eigen::Index j = 0; j < g.cols(); ++j) {
            os << "," << g(i, j);
            if (i == j) diag = std::max(diag, std::abs(g(i, j) - 1));
            else off = std::max(off, std::abs(g(i, j)));
        }
        os << "\n";
    }
    emit(c, os.str());
    const double tol = gram_tolerance(p);
    const auto ps = p.as_strings();
    const nlohmann::json summary{{"tool_version", tool_version},
                                 {"params", {{"mu1", ps[0]}, {"mu2", ps[1]}, {"mu3", ps[2]}}},
                                 {"grid", grid.descriptor()},
                                 {"states", states.size()},
                                 {"max_off_diagonal", off},
                                 {"max_diagonal_deviation", diag},
                                 {"tolerance", tol},
                                 {"singular_weight", has_singular_weight(p)},
                                 {"overall", std::max(off, diag) < tol ? "pass" : "fail"}};
    if (c.summary.empty()) std::cerr << summary.dump(2) << "\n";
    else std::ofstream(c.summary) << summary.dump(2) << "\n";
    return std::max(off, diag) < tol ? 0 : 1;
}

int cmd_suite(const Config& c) {
    std::vector<ModelParams> triples{default_params()};
    for (const auto& q : random_params(c.seed, 2)) triples.push_back(q);
    SuiteOptions opt;
    opt.degree = c.degree;
    opt.nodes = c.nodes;
    std::vector<VerificationReport> reps;
    nlohmann::json runs = nlohmann::json::array();
    for (const auto& p : triples) {
        const auto r = run_all_suites(p, opt);
        const auto s = p.as_strings();
        runs.push_back({{"mu1", s[0]}, {"mu2", s[1]}, {"mu3", s[2]}, {"overall", all_pass(r) ? "pass" : "fail"}});
        reps.insert(reps.end(), r.begin(), r.end());
    }
    reps.push_back(classical_spectrum(c.degree));
    return emit_reports(c, reps, {{"seed", c.seed}, {"parameter_sets", runs}});
}

void usage(std::ostream& os, const CLI::App& app, const std::string& msg) {
    if (!msg.empty()) os << "error: " << msg << "\n\n";
    os << app.help() << "\nOperator grammar:\n" << opexpr_grammar;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the superintegrable model with reflections on the two-sphere", "bisphere"};
    app.set_version_flag("--version", std::string(tool_version));
    app.require_subcommand(1);
    Config c;

    auto params = [&](CLI::App* sub) {
        sub->add_option("--mu1", c.mu1, "reflection strength mu1 as p/q (> -1/2)");
        sub->add_option("--mu2", c.mu2, "reflection strength mu2 as p/q (> -1/2)");
        sub->add_option("--mu3", c.mu3, "reflection strength mu3 as p/q (> -1/2)");
        sub->add_flag("--random-params", c.random_params, "draw (mu1, mu2, mu3) from --seed");
        sub->add_option("--seed", c.seed, "random seed");
        sub->add_option("--out", c.out, "output path (default stdout)");
        sub->add_flag("--no-timing", c.no_timing, "omit elapsed_ms so reports are byte-identical");
    };

    auto* verify = app.add_subcommand("verify", "run one verification suite");
    verify->require_subcommand(1);
    auto* v_s2 = verify->add_subcommand("s2", "invariance algebra on the sphere quotient");
    params(v_s2);
    v_s2->add_option("--degree", c.degree, "polynomial degree D");
    auto* v_racah = verify->add_subcommand("racah", "sl_-1(2) coupling identities");
    params(v_racah);
    v_racah->add_option("--degree", c.degree, "interior degree (differential mode)");
    v_racah->add_option("--cutoff", c.cutoff, "ladder cutoff (default 12)");
    v_racah->add_option("--mode", c.mode, "diff (or differential), ladder or both");
    auto* v_con = verify->add_subcommand("contraction", "tilde relations and the plane limit of the spectrum");
    params(v_con);
    v_con->add_option("--degree", c.degree, "degree for the tilde relations");
    v_con->add_option("--N", c.N, "principal number (default: 0..3)");
    v_con->add_option("--e3", c.e3, "R3 label (default: both)");
    v_con->add_option("--r", c.r, "comma separated increasing radii");
    v_con->add_option("--cutoff", c.cutoff, "plane cutoff for the limit lookup");
    auto* v_plane = verify->add_subcommand("plane", "planar Dunkl oscillator symmetries");
    params(v_plane);
    v_plane->add_option("--cutoff", c.cutoff, "ladder cutoff per mode (default 14)");

    auto* spec = app.add_subcommand("spectrum", "spectrum and separation certificates");
    params(spec);
    spec->add_option("--degree", c.degree, "polynomial degree D");

    auto* wave = app.add_subcommand("wavefunction", "closed-form state on a theta x phi grid as CSV");
    params(wave);
    wave->add_option("--N", c.N, "principal number")->required();
    wave->add_option("--n", c.n, "azimuthal number");
    wave->add_option("--e1", c.e1, "R1 label");
    wave->add_option("--e2", c.e2, "R2 label");
    wave->add_option("--e3", c.e3, "R3 label");
    wave->add_option("--coords", c.coords, "standard or alt");
    wave->add_option("--grid", c.grid, "points per angle");

    auto* orth = app.add_subcommand("orthogonality", "Gram matrix of the closed-form states as CSV");
    params(orth);
    orth->add_option("--Nmax", c.Nmax, "largest principal number");
    orth->add_option("--nodes", c.nodes, "quadrature nodes per direction");
    orth->add_option("--summary", c.summary, "JSON summary path (default stderr)");

    auto* suite = app.add_subcommand("suite", "every suite at the default triple and two seeded random triples");
    suite->add_option("--seed", c.seed, "random seed");
    suite->add_option("--degree", c.degree, "polynomial degree D");
    suite->add_option("--nodes", c.nodes, "quadrature nodes per direction");
    suite->add_option("--out", c.out, "output path (default stdout)");
    suite->add_flag("--no-timing", c.no_timing, "omit elapsed_ms so reports are byte-identical");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        usage(std::cerr, app, e.what());
        return 2;
    }

    try {
        if (v_s2->parsed()) return cmd_verify_s2(c);
        if (v_racah->parsed()) return cmd_verify_racah(c);
        if (v_con->parsed()) return cmd_verify_contraction(c);
        if (v_plane->parsed()) return cmd_verify_plane(c);
        if (spec->parsed()) return cmd_spectrum(c);
        if (wave->parsed()) return cmd_wavefunction(c);
        if (orth->parsed()) return cmd_orthogonality(c);
        if (suite->parsed()) return cmd_suite(c);
    } catch (const UsageError& e) {
        usage(std::cerr, app, e.what());
        return 2;
    } catch (const InvalidParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    usage(std::cerr, app, "no command");
    return 2;
}
