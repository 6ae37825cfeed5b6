#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "schurtau/curve.hpp"
#include "schurtau/json_io.hpp"
#include "schurtau/tau.hpp"
#include "schurtau/theorems.hpp"

namespace schurtau {

/// Bounds and knobs of a verification run. The seed is the single source of
/// all randomness; case streams are derived from it by name.
struct RunConfig {
    int max_weight = 8;    // partition universe for the section-2 suite
    int max_genus = 6;     // gap-sequence universe for the section-2 suite
    int tau_genus = 4;     // gap-sequence universe for the section-3 suite
    int max_k = 3;         // points bound: k <= min(g, max_k)
    int extra_weight = 3;  // extension budget for thm 2.1(ii) / mu enumerations
    int precision = 16;    // curve expansion precision P
    int cutoff_margin = 6; // tau cutoff W = |lambda| + margin
    int seeds = 3;         // random draws per case family
    std::uint64_t seed = 0;
    int jobs = 1;
    bool timing = false;
    std::string format = "json";  // json | text

    static int default_jobs() {
        if (const char* env = std::getenv("SCHURTAU_JOBS")) {
            int j = std::atoi(env);
            if (j >= 1) return j;
        }
        return 1;
    }
};

struct Case {
    std::string suite;
    std::string name;
    std::function<CheckResult()> run;
};

struct Summary {
    int total = 0;
    int failures = 0;
    int flagged = 0;
};

// ---------------------------------------------------------------------------
// Curve checks, shaped like the theorem checks.
// ---------------------------------------------------------------------------

inline CheckResult check_curve_structure(int n, int s) {
    std::string inputs = "ns=" + std::to_string(n) + "," + std::to_string(s);
    CurveModel c(n, s, {});
    GapSequence G = c.gap_sequence_of();
    if (!(G == GapSequence::from_ns(n, s)))
        return CheckResult::fail("curve-structure", inputs, G.str(), "gap sequence mismatch");
    auto phis = c.phi_basis(2 * G.genus() + 2);
    for (int i = 1; i <= static_cast<int>(phis.size()); ++i) {
        if (c.ord_monomial(phis[i - 1].first, phis[i - 1].second) != G.nongap(i))
            return CheckResult::fail("curve-structure", inputs, "",
                                     "phi order differs from nongap at i=" + std::to_string(i));
    }
    if (!(phis[0] == CurveModel::Index{0, 0}) || !(phis[1] == CurveModel::Index{1, 0}))
        return CheckResult::fail("curve-structure", inputs, "", "phi_1, phi_2 must be 1, x");
    return CheckResult::pass("curve-structure", inputs);
}

inline CheckResult check_curve_residual(const CurveModel& c, int P, const std::string& inputs) {
    PuiseuxData p = c.expand_y(P);
    TruncatedSeries r = c.residual(p);
    if (r.precision() < P + c.s())
        return CheckResult::fail("curve-residual", inputs, r.str(),
                                 "propagated precision below P + s");
    if (!r.is_zero_so_far()) return CheckResult::fail("curve-residual", inputs, r.str());
    if (!p.y.valuation() || *p.y.valuation() != -c.s() || p.y.leading_coefficient() != Rational(1))
        return CheckResult::fail("curve-residual", inputs, p.y.str(), "y is not z^-s (1 + O(z))");
    return CheckResult::pass("curve-residual", inputs);
}

inline CheckResult check_curve_differentials(const CurveModel& c, int P, const std::string& inputs) {
    PuiseuxData p = c.expand_y(P);
    GapSequence G = c.gap_sequence_of();
    auto dus = c.differentials(p);
    for (int i = 1; i <= c.genus(); ++i) {
        const TruncatedSeries& du = dus[i - 1];
        if (!du.valuation() || *du.valuation() != G.gap(i) - 1)
            return CheckResult::fail("curve-differentials", inputs, du.str(),
                                     "valuation differs from w_i - 1 at i=" + std::to_string(i));
        if (du.leading_coefficient() != Rational(1))
            return CheckResult::fail("curve-differentials", inputs, du.str(),
                                     "leading coefficient is not 1 at i=" + std::to_string(i));
    }
    return CheckResult::pass("curve-differentials", inputs);
}

inline CheckResult check_curve_doubling(const CurveModel& c, int P, const std::string& inputs) {
    PuiseuxData lo = c.expand_y(P);
    PuiseuxData hi = c.expand_y(2 * P);
    for (int e = -c.s(); e < P; ++e) {
        if (lo.y.coefficient(e) != hi.y.coefficient(e))
            return CheckResult::fail("curve-doubling", inputs, hi.y.str(),
                                     "coefficient drift at exponent " + std::to_string(e));
    }
    return CheckResult::pass("curve-doubling", inputs);
}

// ---------------------------------------------------------------------------
// Case builders.
// ---------------------------------------------------------------------------

inline std::vector<std::pair<int, int>> curve_type_list() {
    return {{2, 3}, {2, 5}, {2, 7}, {2, 9}, {3, 4}, {3, 5}, {4, 5}};
}

inline std::vector<Case> section2_cases(const RunConfig& cfg) {
    std::vector<Case> cases;
    auto add = [&cases](std::string name, std::function<CheckResult()> fn) {
        cases.push_back({"section2", std::move(name), std::move(fn)});
    };

    for (const auto& lam : partitions_up_to_weight(cfg.max_weight)) {
        std::string ls = lam.str();
        add("prop-2-1-i/" + ls, [lam] { return check_prop_2_1_i(lam); });
        for (int k = 0; k < std::min(lam.length(), cfg.max_k + 1); ++k)
            add("prop-2-1-ii/" + ls + "/k" + std::to_string(k),
                [lam, k] { return check_prop_2_1_ii(lam, k); });
        for (int k = 0; k < std::min(lam.length(), cfg.max_k + 1); ++k)
            add("prop-2-3/" + ls + "/k" + std::to_string(k), [lam, k] { return check_prop_2_3(lam, k); });
        for (int k = 0; k <= std::min(lam.length(), cfg.max_k); ++k)
            add("thm-2-2/" + ls + "/k" + std::to_string(k), [lam, k] { return check_thm_2_2(lam, k); });
        add("thm-2-3/" + ls, [lam] { return check_thm_2_3(lam); });
        add("cor-2-1/" + ls, [lam] { return check_cor_2_1(lam); });
        if (!lam.empty()) add("thm-2-4-i-ii/" + ls, [lam] { return check_thm_2_4_i_ii(lam); });
        for (int k = 0; k < std::min(lam.length(), cfg.max_k + 1); ++k)
            add("lemma-2-2/" + ls + "/k" + std::to_string(k), [lam, k] { return check_lemma_2_2(lam, k); });
        add("homogeneity/" + ls, [lam] { return check_homogeneity(lam); });
    }

    // Hook closed form, Thm 2.4 (iv).
    for (int m = 1; m <= std::max(2, cfg.max_weight - 3); ++m)
        for (int n = 1; m + n - 1 <= cfg.max_weight; ++n)
            add("thm-2-4-iv/m" + std::to_string(m) + "n" + std::to_string(n),
                [m, n] { return check_thm_2_4_iv(m, n); });

    // Thm 2.4 (iii) hook extensions of small bases.
    for (const auto& lam : partitions_up_to_weight(std::min(cfg.max_weight, 6))) {
        if (lam.length() < 2) continue;
        int l = lam.length();
        for (int lp = l; lp <= l + 2; ++lp) {
            for (int mu1 = std::max(lam.part(2), 1); mu1 <= lam.part(1) + 2; ++mu1) {
                std::vector<int> parts = {mu1};
                for (int i = 2; i <= l; ++i) parts.push_back(lam.part(i));
                for (int i = l + 1; i <= lp; ++i) parts.push_back(1);
                Partition mu(parts);
                add("thm-2-4-iii/" + lam.str() + "/mu=" + mu.str(),
                    [lam, mu] { return check_thm_2_4_iii(lam, mu); });
            }
        }
    }

    // Gap-sequence indexed results, genus <= max_genus.
    for (int g = 1; g <= cfg.max_genus; ++g) {
        for (const auto& G : enumerate_gap_sequences(g)) {
            std::string gs = G.str();
            add("lemma-2-1/" + gs, [G] { return check_lemma_2_1(G); });
            add("prop-2-2/" + gs, [G] { return check_prop_2_2(G); });
            Partition lam = G.partition_of();
            for (int k = 0; k <= std::min(g, cfg.max_k); ++k) {
                add("thm-2-1-i/" + gs + "/k" + std::to_string(k),
                    [G, k] { return check_thm_2_1_i(G, k); });
                add("thm-2-2/" + gs + "/k" + std::to_string(k),
                    [lam, k] { return check_thm_2_2(lam, k); });
                for (const auto& mu : head_extensions(lam, k, cfg.extra_weight)) {
                    if (mu == lam) continue;
                    add("thm-2-1-ii/" + gs + "/k" + std::to_string(k) + "/mu=" + mu.str(),
                        [G, k, mu] { return check_thm_2_1_ii(G, k, mu); });
                }
            }
            for (int k = 0; k < std::min(g, cfg.max_k + 1); ++k)
                add("prop-2-3/" + gs + "/k" + std::to_string(k),
                    [lam, k] { return check_prop_2_3(lam, k); });
        }
    }

    // Bracket reduction on seeded random tuples.
    for (int t = 0; t < 20; ++t) {
        Prng rng(derive_seed(cfg.seed, "bracket-reduction/" + std::to_string(t)));
        int k = 1 + static_cast<int>(rng.next() % 4);
        int m = 1 + static_cast<int>(rng.next() % 3);
        std::vector<int> head(k);
        for (int& v : head) v = static_cast<int>(rng.next() % 10);
        add("bracket-reduction/" + std::to_string(t),
            [head, m] { return check_bracket_reduction(head, m); });
    }
    return cases;
}

inline std::vector<Case> section3_cases(const RunConfig& cfg) {
    std::vector<Case> cases;
    auto add = [&cases](std::string name, std::function<CheckResult()> fn) {
        cases.push_back({"section3", std::move(name), std::move(fn)});
    };
    for (int g = 1; g <= cfg.tau_genus; ++g) {
        for (const auto& G : enumerate_gap_sequences(g)) {
            std::string gs = G.str();
            Partition lam = G.partition_of();
            int W = lam.weight() + cfg.cutoff_margin;
            add("tau-degenerate/" + gs, [G, W] { return check_degenerate_tau(G, W); });
            for (int si = 0; si < cfg.seeds; ++si) {
                std::string tag = gs + "/seed" + std::to_string(si);
                std::uint64_t tau_seed = derive_seed(cfg.seed, "tau|" + tag);
                auto make = [lam, W, tau_seed] { return TauSeries::random(lam, W, tau_seed); };
                for (int k = 0; k < std::min(lam.length(), cfg.max_k + 1); ++k)
                    add("prop-3-1/" + tag + "/k" + std::to_string(k),
                        [make, k] { return check_prop_3_1(make(), k); });
                for (int k = 0; k <= std::min(g, cfg.max_k); ++k) {
                    add("thm-3-1-i/" + tag + "/k" + std::to_string(k),
                        [make, G, k] { return check_thm_3_1_i(make(), G, k); });
                    add("thm-3-2/" + tag + "/k" + std::to_string(k),
                        [make, k] { return check_thm_3_2(make(), k); });
                }
                for (int k = 1; k <= std::min(g, cfg.max_k); ++k) {
                    add("thm-3-1-ii/" + tag + "/k" + std::to_string(k),
                        [make, k] { return check_thm_3_1_ii(make(), k); });
                    add("cor-3-1/" + tag + "/k" + std::to_string(k),
                        [make, G, k] { return check_cor_3_1(make(), G, k); });
                    add("cor-3-2/" + tag + "/k" + std::to_string(k),
                        [make, k] { return check_cor_3_2(make(), k); });
                }
                add("thm-3-3-i/" + tag, [make] { return check_thm_3_3_i(make()); });
                add("thm-3-3-ii/" + tag, [make] { return check_thm_3_3_ii(make()); });
                add("thm-3-3-iii/" + tag, [make] { return check_thm_3_3_iii(make()); });
                add("thm-3-3-iv/" + tag, [make] { return check_thm_3_3_iv(make()); });
            }
        }
    }
    return cases;
}

inline std::vector<Case> curve_cases(const RunConfig& cfg, std::vector<std::pair<int, int>> types = {}) {
    if (types.empty()) types = curve_type_list();
    std::vector<Case> cases;
    auto add = [&cases](std::string name, std::function<CheckResult()> fn) {
        cases.push_back({"curve", std::move(name), std::move(fn)});
    };
    for (auto [n, s] : types) {
        std::string ns = std::to_string(n) + "," + std::to_string(s);
        add("curve-structure/" + ns, [n, s] { return check_curve_structure(n, s); });
        for (int si = 0; si < cfg.seeds; ++si) {
            std::string tag = ns + "/seed" + std::to_string(si);
            std::uint64_t seed = derive_seed(cfg.seed, "curve|" + tag);
            int P = cfg.precision;
            auto make = [n, s, seed] { return CurveModel::random(n, s, seed); };
            add("curve-residual/" + tag,
                [make, P, tag] { return check_curve_residual(make(), P, tag); });
            add("curve-differentials/" + tag,
                [make, P, tag] { return check_curve_differentials(make(), P, tag); });
            add("curve-doubling/" + tag,
                [make, P, tag] { return check_curve_doubling(make(), P, tag); });
        }
    }
    return cases;
}

inline std::vector<Case> all_cases(const RunConfig& cfg) {
    std::vector<Case> cases = section2_cases(cfg);
    auto s3 = section3_cases(cfg);
    cases.insert(cases.end(), s3.begin(), s3.end());
    auto cu = curve_cases(cfg);
    cases.insert(cases.end(), cu.begin(), cu.end());
    return cases;
}

// ---------------------------------------------------------------------------
// Runner: bounded worker pool, results merged in case order so the report is
// byte-identical for any jobs count.
// ---------------------------------------------------------------------------

inline std::string render_case_line(const Case& c, const CheckResult& r, const RunConfig& cfg,
                                    long elapsed_ms) {
    if (cfg.format == "text") {
        std::string line = r.ok ? (r.flagged ? "FLAG" : "PASS") : "FAIL";
        line += " " + c.suite + " " + c.name;
        if (r.constant_found) line += " (c=" + *r.constant_found + ")";
        if (!r.note.empty()) line += " [" + r.note + "]";
        if (cfg.timing) line += " " + std::to_string(elapsed_ms) + "ms";
        return line + "\n";
    }
    json j = to_json(r);
    j["suite"] = c.suite;
    j["case"] = c.name;
    j["status"] = r.ok ? (r.flagged ? "flagged" : "pass") : "fail";
    if (cfg.timing) j["time_ms"] = elapsed_ms;
    return j.dump() + "\n";
}

inline Summary run_cases(const std::vector<Case>& cases, const RunConfig& cfg, std::ostream& out) {
    Summary summary;
    summary.total = static_cast<int>(cases.size());
    std::vector<std::string> lines(cases.size());
    std::vector<char> ok(cases.size(), 0), flagged(cases.size(), 0), done(cases.size(), 0);
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::size_t emitted = 0;

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cases.size()) return;
            auto t0 = std::chrono::steady_clock::now();
            CheckResult r;
            try {
                r = cases[i].run();
            } catch (const std::exception& e) {
                r = CheckResult::fail(cases[i].name, "", "", std::string("exception: ") + e.what());
            }
            long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
            std::lock_guard<std::mutex> lock(mu);
            lines[i] = render_case_line(cases[i], r, cfg, ms);
            ok[i] = r.ok ? 1 : 0;
            flagged[i] = r.flagged ? 1 : 0;
            done[i] = 1;
            while (emitted < cases.size() && done[emitted]) {
                out << lines[emitted];
                lines[emitted].clear();
                ++emitted;
            }
        }
    };

    int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < cases.size(); ++i) {
        if (!ok[i]) ++summary.failures;
        if (flagged[i]) ++summary.flagged;
    }
    if (cfg.format == "text") {
        out << (summary.failures == 0 ? "OK" : "FAILED") << ": " << summary.total << " cases, "
            << summary.failures << " failures, " << summary.flagged << " flagged\n";
    } else {
        json j;
        j["summary"] = true;
        j["cases"] = summary.total;
        j["failures"] = summary.failures;
        j["flagged"] = summary.flagged;
        j["seed"] = cfg.seed;
        out << j.dump() << "\n";
    }
    return summary;
}

}  // namespace schurtau
