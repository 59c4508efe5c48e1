// Composition of every verification suite, shared by the CLI and the acceptance run.
#pragma once

#include "bisphere/closed_form.hpp"
#include "bisphere/plane.hpp"
#include "bisphere/racah.hpp"
#include "bisphere/sphere_model.hpp"

#include <chrono>
#include <random>
#include <vector>

namespace bisphere {

/// Triples p/q with 1 <= p, q <= 9 and p/q <= 2 from a seeded generator.
inline std::vector<ModelParams> random_params(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(1, 9);
    std::vector<ModelParams> out;
    for (int k = 0; k < count; ++k) {
        ModelParams p;
        for (Rational* m : {&p.mu1, &p.mu2, &p.mu3}) {
            int num = 0, den = 1;
            do {
                num = d(rng);
                den = d(rng);
            } while (num > 2 * den);
            *m = make_rational(num, den);
        }
        out.push_back(p);
    }
    return out;
}

struct SuiteOptions {
    int degree = 6;
    int ladder_cutoff = 12;
    int coupled_cutoff = 6;
    int plane_cutoff = 14;
    int nodes = 200;
    int N_max = 4;
    int contraction_N_max = 3;
    std::vector<Rational> radii{Rational(10), Rational(100), Rational(1000)};
};

/// Every module suite at one parameter triple.
inline std::vector<VerificationReport> run_all_suites(const ModelParams& p, const SuiteOptions& opt = {}) {
    std::vector<VerificationReport> out;
    const SymmetryCatalog cat(p, opt.degree);
    out.push_back(verify_invariance_suite(cat));
    out.push_back(spectrum_certificate(cat));
    out.push_back(separation_certificate(cat));
    out.push_back(verify_racah_identities(build_coupled_differential(p, opt.degree), cat));
    out.push_back(verify_racah_ladder(p, opt.ladder_cutoff, opt.coupled_cutoff));
    ClosedFormOptions cf;
    cf.degree = std::min(opt.degree, opt.N_max);
    cf.N_max = opt.N_max;
    cf.nodes = opt.nodes;
    out.push_back(verify_closed_form(p, cf));
    out.push_back(verify_tilde_relations(p, opt.degree));
    out.push_back(verify_plane_symmetries(build_plane(p.mu1, p.mu2, opt.plane_cutoff)));
    VerificationReport contraction("contraction", ModelParams{p.mu1, p.mu2, 0}, "exact");
    std::vector<std::pair<std::string, VerificationReport>> levels;
    for (int N = 0; N <= opt.contraction_N_max; ++N)
        for (int e3 = 0; e3 <= std::min(N, 1); ++e3)
            levels.emplace_back("N=" + std::to_string(N) + " e3=" + std::to_string(e3),
                                contraction_convergence(p, N, e3, opt.radii));
    for (const char* id : {"contraction.identity", "contraction.limit_in_plane"})
        contraction.run(id, [&] {
            std::string bad;
            for (const auto& [label, r] : levels)
                if (!r.passed(id)) bad += " " + label + ": " + r.find(id)->residual + ";";
            return bad.empty() ? Outcome{true, "0"} : Outcome{false, bad};
        });
    nlohmann::json info = nlohmann::json::array();
    for (const auto& [label, r] : levels) info.push_back(r.info());
    contraction.info()["levels"] = info;
    out.push_back(contraction);
    return out;
}

/// Reports for the zero-parameter spectrum (eigenvalues N(N+1)).
inline VerificationReport classical_spectrum(int degree) {
    VerificationReport rep = spectrum_certificate(ModelParams{}, degree);
    bool ok = true;
    for (int N = 0; N <= degree; ++N) ok = ok && energy(ModelParams{}, N) == N * (N + 1);
    rep.info()["classical_energies"] = ok;
    return rep;
}

inline nlohmann::json reports_json(const std::vector<VerificationReport>& reps, bool with_timing) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reps) arr.push_back(r.to_json(with_timing));
    return arr;
}

inline bool all_pass(const std::vector<VerificationReport>& reps) {
    return std::all_of(reps.begin(), reps.end(), [](const auto& r) { return r.overall_pass(); });
}

}  // namespace bisphere
