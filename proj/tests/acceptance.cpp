// Acceptance run: one pass/fail line per criterion, exit status 0 when all pass.
#include "bisphere/suite.hpp"
#include "random_ast.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace bisphere;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        detail += (detail.empty() ? "" : "; ") + what;
    }

    void require(const VerificationReport& r) {
        for (const auto& c : r.checks())
            if (c.status != CheckStatus::Pass) require(false, c.id + " " + c.residual);
        if (r.checks().empty()) require(false, r.suite() + " ran no checks");
    }
};

std::vector<ModelParams> acceptance_params() {
    std::vector<ModelParams> ps{default_params()};
    for (const auto& p : random_params(42, 2)) ps.push_back(p);
    return ps;
}

// Equal on every column where both sides are exact, with at least one such column.
bool equal_on_interior(const LinOp& a, const LinOp& b) {
    int seen = 0;
    for (std::size_t c = 0; c < a.dim(); ++c) {
        if (!a.exact_column(c) || !b.exact_column(c)) continue;
        ++seen;
        if (a.column_poly(c) != b.column_poly(c)) return false;
    }
    return seen > 0;
}

LinOp scaled(LinOp m, const Rational& k) {
    m *= k;
    return m;
}

Verdict criterion1() {
    Verdict v;
    for (const auto& p : acceptance_params()) {
        const auto r = verify_invariance_suite(p, 6);
        v.require(r);
        v.require(r.basis() == "SphereQuotient(6)", "basis " + r.basis());
    }
    return v;
}

Verdict criterion2() {
    Verdict v;
    v.require(spectrum_certificate(default_params(), 6));
    v.require(classical_spectrum(6));
    for (int N = 0; N <= 6; ++N) v.require(energy(ModelParams{}, N) == N * (N + 1), "classical energy");
    return v;
}

Verdict criterion3() {
    Verdict v;
    v.require(separation_certificate(default_params(), 6));
    return v;
}

Verdict criterion4() {
    Verdict v;
    const auto p = default_params();
    const auto r = verify_racah_identities(build_coupled_differential(p, 6, 2), SymmetryCatalog(p, 6));
    v.require(r);
    v.require(r.find("racah.descent") != nullptr, "descent not checked");
    v.require(r.info().contains("epsilon12") && r.info().contains("epsilon23"), "signs not recorded");
    v.require(verify_racah_ladder(p, 12, 6));
    return v;
}

Verdict criterion5() {
    Verdict v;
    ClosedFormOptions opt;
    opt.nodes = 200;
    opt.N_max = 4;
    opt.admissible_max = 12;
    opt.eigvec.samples = 50;
    opt.eigvec.tolerance = 1e-9;
    const auto r = verify_closed_form(default_params(), opt);
    v.require(r);
    v.require(r.info().value("gram_states", 0) == 25, "Gram over " + r.info().value("gram_states", nlohmann::json()).dump());
    for (int N = 0; N <= 12; ++N)
        v.require(admissible_states(N, Coords::Standard).size() == static_cast<std::size_t>(2 * N + 1),
                  "admissible count at N=" + std::to_string(N));
    return v;
}

Verdict criterion6() {
    Verdict v;
    const auto p = default_params();
    v.require(verify_tilde_relations(p, 6));
    v.require(verify_plane_symmetries(build_plane(p.mu1, p.mu2, 14)));
    for (int N = 0; N <= 3; ++N)
        for (int e3 = 0; e3 <= std::min(N, 1); ++e3)
            v.require(contraction_convergence(p, N, e3, {Rational(10), Rational(100), Rational(1000)}, 14));
    return v;
}

Verdict criterion7() {
    Verdict v;
    testgen::RandomAst gen(20140127);
    int failures = 0;
    for (int i = 0; i < 1000; ++i) {
        const OpExpr ast = gen(3);
        if (!(parse_opexpr(to_string(ast)) == ast)) ++failures;
    }
    v.require(failures == 0, std::to_string(failures) + " of 1000 random trees did not round-trip");

    const auto p = default_params();

    // rotation pieces from single-axis primitives on the full polynomial space
    auto full = std::make_shared<const Basis>(Basis::full(7));
    auto s = [&](int i) { return build_matrix("s" + std::to_string(i), full, p); };
    auto D = [&](int i) { return build_matrix("D" + std::to_string(i), full, p); };
    for (int i = 1; i <= 3; ++i) {
        const int j = i % 3 + 1, k = j % 3 + 1;
        v.require(equal_on_interior(build_matrix(tilde_text(i), full, p), s(j) * D(k) - s(k) * D(j)),
                  "tilde text " + std::to_string(i));
    }

    // catalog strings against compositions of catalog pieces
    const SymmetryCatalog cat(p, 6);
    auto rot = [&](const char* t) { return build_matrix(t, cat.basis(), p); };
    const LinOp& R1 = cat.R(1);
    const LinOp& R2 = cat.R(2);
    const LinOp& R3 = cat.R(3);
    const LinOp half = scaled(cat.identity(), Rational(1, 2));
    const LinOp L1 = rot("s2*D3 - s3*D2") * R2 + scaled(R3, p.mu2) + scaled(R2, p.mu3) + scaled(R2 * R3, Rational(1, 2));
    const LinOp L2 =
        rot("s1*D3 - s3*D1") * R1 * R2 + scaled(R3, p.mu1) + scaled(R1, p.mu3) + scaled(R1 * R3, Rational(1, 2));
    const LinOp L3 = rot("s1*D2 - s2*D1") * R1 + scaled(R2, p.mu1) + scaled(R1, p.mu2) + scaled(R1 * R2, Rational(1, 2));
    v.require(cat.L(1) == L1 && cat.L(2) == L2 && cat.L(3) == L3, "L texts");
    const LinOp C = half - L1 * R2 * R3 - L2 * R1 * R3 - L3 * R1 * R2 + scaled(R1, p.mu1) + scaled(R2, p.mu2) +
                    scaled(R3, p.mu3);
    v.require(cat["C"] == C, "C text");
    v.require(cat["H"] == C * C + C, "H text");
    v.require(cat["Q"] == C * R1 * R2 * R3, "Q text");
    v.require(cat["P123"] == R1 * R2 * R3, "P123 text");
    v.require(cat["Z"] == L3 * R1 * R2, "Z text");
    v.require(cat["Y"] == L1 * R2 * R3, "Y text");
    v.require(cat["Lsq"] == L1 * L1 + L2 * L2 + L3 * L3, "Lsq text");

    const TildeCatalog tc(p, 6);
    v.require(tc.T(3) == rot("s1*D2 - s2*D1") && tc.T(2) == scaled(rot("s1*D3 - s3*D1"), -1) &&
                  tc.T(1) == rot("s2*D3 - s3*D2"),
              "tilde catalog");

    // coupled strings against their ladder pieces
    const auto c = build_coupled_differential(p, 3);
    const LinOp Q1 = c.build("R1", "R1");
    const LinOp Q2 = c.build("R2", "R2");
    const LinOp q12 = scaled(c["Bm1"] * c["Bp2"] * Q1 - c["Bp1"] * c["Bm2"] * Q1, Rational(1, 2)) + c["Q1"] * Q2 +
                      c["Q2"] * Q1 - scaled(Q1 * Q2, Rational(1, 2));
    v.require(equal_on_interior(q12, c["Q12"]), "Q12 text");
    return v;
}

}  // namespace

int main() {
    struct Row {
        int id;
        const char* title;
        std::function<Verdict()> run;
        double seconds = 0;
        Verdict verdict;
    };
    std::vector<Row> rows{
        {1, "exact invariance suite, D=6, three parameter triples", criterion1},
        {2, "spectrum certificate, D=6, and classical spectrum", criterion2},
        {3, "separation certificates, D=6", criterion3},
        {4, "Racah suite, differential D=6 and ladder cutoff 12", criterion4},
        {5, "closed-form wavefunctions, Gram and eigenvector match", criterion5},
        {6, "tilde relations, plane symmetries and contraction", criterion6},
        {7, "parser round trip and operator strings", criterion7},
    };
    bool all = true;
    double suite_seconds = 0;
    for (auto& r : rows) {
        const auto t0 = Clock::now();
        try {
            r.verdict = r.run();
        } catch (const std::exception& e) {
            r.verdict = Verdict{false, std::string("exception: ") + e.what()};
        }
        r.seconds = seconds_since(t0);
        if (r.id <= 6) suite_seconds += r.seconds;
    }

    Verdict perf;
    const auto t0 = Clock::now();
    try {
        perf.require(verify_invariance_suite(default_params(), 10));
    } catch (const std::exception& e) {
        perf.require(false, e.what());
    }
    const double d10 = seconds_since(t0);
    perf.require(d10 < 300, "D=10 invariance took " + std::to_string(d10) + " s");
    perf.require(suite_seconds < 600, "criteria 1-6 took " + std::to_string(suite_seconds) + " s");
    char buf[96];
    std::snprintf(buf, sizeof buf, "criteria 1-6 in %.1f s, D=10 invariance in %.1f s", suite_seconds, d10);
    rows.push_back({8, "performance", nullptr, suite_seconds + d10, perf});
    if (perf.detail.empty()) rows.back().verdict.detail = buf;

    for (const auto& r : rows) {
        all = all && r.verdict.pass;
        std::printf("criterion %d: %s  %s (%.2f s)%s%s\n", r.id, r.verdict.pass ? "PASS" : "FAIL", r.title, r.seconds,
                    r.verdict.detail.empty() ? "" : "  ", r.verdict.detail.c_str());
    }
    std::printf("overall: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}
