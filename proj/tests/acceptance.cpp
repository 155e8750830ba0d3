// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//
//   acceptance            all criteria
//   acceptance 1 5 7      a subset
//
// AAG_ACCEPT_SAMPLE overrides the number of sampled tuples for criteria 2-4.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <sstream>

#include "aag/grobner.hpp"
#include "aag/scan.hpp"
#include "family_samples.hpp"

using namespace aag;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Line {
    int id;
    std::string name;
    bool pass;
    std::string detail;
};

std::vector<Line> results;

void report(int id, std::string name, bool pass, std::string detail) {
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << id << "  " << name << ": " << detail << std::endl;
    results.push_back({id, std::move(name), pass, std::move(detail)});
}

Range R(std::int64_t lo, std::int64_t hi) { return {lo, hi}; }

// ---------------------------------------------------------------------------

struct SweepRow {
    int a, d, c, k, h;
    std::string family;
    int l, p, sigma, r, type;  // l = 0 when the family has none
};

// the seven almost symmetric tuples of the reference sweep
const std::vector<SweepRow> kSweep = {
    {155, 1, 177, 20, 4, "Thm5.3-(ii)", 0, 8, 1, -1, 2},
    {163, -2, 170, 19, 1, "Thm5.3-(i)", 14, 3, 4, -2, 6},
    {163, 7, 179, 19, 1, "Thm5.4-(v)", 0, 6, 3, -5, 2},
    {165, -2, 174, 19, 1, "Thm5.3-(i)", 12, 3, 4, -2, 8},
    {165, -1, 186, 19, 4, "Thm5.4-(iii)", 0, 7, 2, -8, 19},
    {165, 4, 170, 19, 1, "Thm5.4-(i)", 5, 4, 2, -4, 6},
    {165, 7, 183, 19, 3, "Thm5.4-(iii)", 0, 7, 2, -7, 19},
};

ScanSpec sweep_spec() {
    ScanSpec s;
    s.a = R(150, 165);
    s.d = R(-5, 10);
    s.c = R(170, 186);
    s.k = R(19, 20);
    s.h = R(1, 4);
    s.filter = ScanFilter::Pivot;
    return s;
}

void criterion1() {
    auto t0 = Clock::now();
    auto spec = sweep_spec();
    spec.oracle_verify = true;
    auto res = run_scan(spec);
    double secs = seconds_since(t0);

    std::vector<std::string> problems;
    if (res.records.size() != kSweep.size())
        problems.push_back(std::to_string(res.records.size()) + " records instead of " + std::to_string(kSweep.size()));
    for (std::size_t i = 0; i < std::min(res.records.size(), kSweep.size()); ++i) {
        const auto& got = res.records[i];
        const auto& want = kSweep[i];
        auto field = [&](const char* key) -> std::int64_t {
            auto it = got.cls.solved.find(key);
            return it == got.cls.solved.end() ? 0 : it->second.to_i64();
        };
        bool ok = got.a == want.a && got.d == want.d && got.c == want.c && got.k == want.k && got.h == want.h &&
                  got.cls.verdict == Verdict::AlmostSymmetric && got.cls.family == want.family &&
                  field("l") == want.l && field("p") == want.p && field("sigma") == want.sigma &&
                  field("r") == want.r && got.cls.type == want.type && got.oracle_agrees.value_or(false);
        if (!ok) {
            std::ostringstream os;
            os << "record " << i + 1 << " (" << got.a.str() << "," << got.d.str() << "," << got.c.str() << ","
               << got.k << "," << got.h.str() << ") " << got.cls.family << " type " << got.cls.type;
            problems.push_back(os.str());
        }
    }
    std::ostringstream os;
    os << res.records.size() << " records from " << res.total << " tuples (" << res.analyzed << " analyzed), ";
    if (problems.empty()) os << "all fields and oracle checks match";
    else
        for (const auto& p : problems) os << "[" << p << "] ";
    os << ", " << secs << " s";
    report(1, "sweep reproduction", problems.empty() && secs < 120, os.str());
}

// ---------------------------------------------------------------------------

std::string mismatch_summary(const VerifyReport& rep, const std::vector<std::string>& names) {
    std::ostringstream os;
    std::int64_t n = 0;
    for (const auto& name : names) {
        auto it = rep.mismatches.find(name);
        if (it == rep.mismatches.end()) continue;
        n += it->second;
        os << " " << name << "=" << it->second;
        if (rep.first_failure.count(name)) os << " (first " << rep.first_failure.at(name) << ")";
    }
    for (const auto& [name, count] : rep.mismatches)
        if (name.starts_with("error:")) {
            n += count;
            os << " " << name << "=" << count;
        }
    return n == 0 ? "0 mismatches" : std::to_string(n) + " mismatches:" + os.str();
}

std::int64_t count_of(const VerifyReport& rep, const std::vector<std::string>& names) {
    std::int64_t n = 0;
    for (const auto& [name, count] : rep.mismatches)
        if (std::find(names.begin(), names.end(), name) != names.end() || name.starts_with("error:")) n += count;
    return n;
}

VerifyReport grid_run(double& secs, std::int64_t& sampled) {
    auto t0 = Clock::now();
    // every tuple with a <= 30, then a seeded uniform sample of the whole box
    VerifySpec small;
    small.a = R(1, 30);
    small.d = R(-9, 9);
    small.c = R(1, 600);
    small.k = R(3, 6);
    small.h = R(1, 3);
    auto rep = run_verify(small);

    VerifySpec big = small;
    big.a = R(31, 400);
    big.sample = 1000000;
    if (const char* s = std::getenv("AAG_ACCEPT_SAMPLE")) big.sample = std::atoll(s);
    big.seed = 20240607;
    sampled = big.sample;
    auto rep2 = run_verify(big);

    rep.visited += rep2.visited;
    rep.invalid += rep2.invalid;
    rep.hypothesis_failed += rep2.hypothesis_failed;
    rep.checked += rep2.checked;
    rep.almost_symmetric += rep2.almost_symmetric;
    rep.symmetric += rep2.symmetric;
    for (const auto& [k, v] : rep2.mismatches) {
        if (!rep.mismatches.count(k) && rep2.first_failure.count(k)) rep.first_failure[k] = rep2.first_failure.at(k);
        rep.mismatches[k] += v;
    }
    for (const auto& [k, v] : rep2.families) rep.families[k] += v;
    secs = seconds_since(t0);
    return rep;
}

void criteria234(bool c2, bool c3, bool c4, bool c6) {
    double secs = 0;
    std::int64_t sampled = 0;
    auto rep = grid_run(secs, sampled);

    std::ostringstream scope;
    scope << rep.checked << " hypothesis-satisfying tuples (" << rep.symmetric << " symmetric, "
          << rep.almost_symmetric << " almost symmetric; all of a<=30 plus " << sampled
          << " seeded draws over 31<=a<=400), " << secs << " s";

    const std::vector<std::string> n2 = {"apery", "pf", "frobenius", "verdict_vs_oracle", "family_unmatched"};
    const std::vector<std::string> n3 = {"det_identities", "row_equation", "s_decreasing", "p_increasing",
                                         "r_decreasing", "r_prime_decreasing", "tilde_relation", "q_at_least_2",
                                         "r_tilde_at_least_2"};
    const std::vector<std::string> n4 = {"basis_kernel", "tilde_kernel", "row_kernel", "A_count",
                                         "lead_order", "standard_monomials", "tilde_r_above_h"};
    const std::vector<std::string> n6 = {"fast_vs_full", "fast_discriminant"};

    if (c2)
        report(2, "oracle equivalence", count_of(rep, n2) == 0 && rep.checked >= 5000 && secs < 300,
               mismatch_summary(rep, n2) + " over " + scope.str());
    if (c3)
        report(3, "Euclid invariants", count_of(rep, n3) == 0,
               mismatch_summary(rep, n3) + " over every table of the same run (" +
                   std::to_string(rep.checked + rep.hypothesis_failed) + " tables)");
    if (c4)
        report(4, "Groebner certification", count_of(rep, n4) == 0,
               mismatch_summary(rep, n4) + " over " + std::to_string(rep.checked) + " tuples");
    if (c6) {
        // the sweep box, every valid tuple
        auto spec = sweep_spec();
        spec.filter = ScanFilter::None;
        spec.emit_all = true;
        auto res = run_scan(spec);
        std::int64_t bad = 0, as = 0;
        std::string first;
        for (const auto& r : res.records) {
            auto p = validate_params(r.a, r.d, r.h, r.k, r.c, ValidateOptions{false});
            auto hits = fast_candidates(p);
            bool ok;
            if (r.cls.verdict == Verdict::AlmostSymmetric) {
                ++as;
                ok = hits.size() == 1 && hits[0].family == r.cls.family && hits[0].frobenius == r.cls.frobenius &&
                     hits[0].type == r.cls.type && hits[0].solved.at("p") == r.cls.solved.at("p");
                if (ok) {
                    Int q = isqrt(hits[0].discriminant);
                    ok = q * q == hits[0].discriminant;
                }
            } else {
                ok = hits.empty();
            }
            if (!ok && bad++ == 0)
                first = "(" + r.a.str() + "," + r.d.str() + "," + r.c.str() + "," + std::to_string(r.k) + "," +
                        r.h.str() + ")";
        }
        std::int64_t grid_bad = count_of(rep, n6);
        std::ostringstream os;
        os << "sweep box: " << res.records.size() << " valid tuples, " << as << " almost symmetric, " << bad
           << " disagreements" << (bad ? " first " + first : "") << "; grid run: " << mismatch_summary(rep, n6)
           << " over " << rep.almost_symmetric << " almost symmetric and "
           << rep.checked - rep.almost_symmetric << " other tuples";
        report(6, "quadratic fast path", bad == 0 && grid_bad == 0, os.str());
    }
}

// ---------------------------------------------------------------------------

void criterion5() {
    auto t0 = Clock::now();
    bool all = true;
    std::ostringstream os;
    int total_survivors = 0;
    for (const auto& rule : testing::family_rules()) {
        // random parameters often give gcd(a,d) > 1, so draw well above 20
        auto fr = testing::run_family(rule, 100, 20240607);
        bool ok = fr.admissible >= 20 && fr.survivors >= 10 && fr.passed == fr.survivors &&
                  fr.constraint_mismatches == 0;
        all = all && ok;
        total_survivors += fr.survivors;
        std::map<std::string, int> excluded;
        for (const auto& o : fr.outcomes)
            if (!o.generated) ++excluded[o.rejection.substr(0, o.rejection.find(':'))];
        std::cout << "      " << rule.id << ": " << fr.admissible << " admissible, " << fr.survivors
                  << " valid, " << fr.passed << " confirmed";
        for (const auto& [why, n] : excluded) std::cout << ", excluded " << why << " " << n;
        std::cout << '\n';
        for (const auto& o : fr.outcomes)
            if (o.generated && !(o.type_ok && o.frobenius_ok && o.special_ok))
                std::cout << "        mismatch " << testing::describe(o.in) << ": oracle type " << o.oracle_type
                          << " F " << o.oracle_F.str() << ", formula type " << o.expected_type << " F "
                          << o.expected_F.str() << '\n';
    }
    os << testing::family_rules().size() << " families, " << total_survivors
       << " synthesized semigroups, type and F confirmed by the oracle, " << seconds_since(t0) << " s";
    report(5, "family synthesis", all, os.str());
}

// ---------------------------------------------------------------------------

void criterion7() {
    // closed forms for a <= 10^4
    std::vector<AagParams> inputs;
    for (int a = 9000; a <= 10000 && inputs.size() < 200; a += 7)
        for (int d : {-3, 1, 5, 11})
            for (int k : {3, 8, 20}) {
                int h = 1 + (a % 3);
                int c = a + 37 * k + 13;
                try {
                    auto p = validate_params(a, d, h, k, c, ValidateOptions{false});
                    if (build_table(p).hypothesis_ok) inputs.push_back(p);
                } catch (const Error&) {
                }
            }
    // best of 5 per tuple, so a scheduler tick does not count as compute time
    double worst = 0;
    for (const auto& p : inputs) {
        double best = 1e9;
        for (int rep = 0; rep < 5; ++rep) {
            auto t0 = Clock::now();
            auto t = build_table(p);
            auto ap = apery_set(p, t);
            auto F = frobenius(p, t);
            auto pf = pf_tilde(p, t);
            auto cl = classify(p);
            best = std::min(best, seconds_since(t0));
            if (ap.size() != p.a || cl.frobenius != F || pf.pf_numbers.back() != F) best = 1e9;
        }
        worst = std::max(worst, best);
    }

    // oracle for g0 = 10^6 with 22 generators
    oracle::Gens g;
    const std::int64_t a = 1000000, d = 7, k = 20;
    for (std::int64_t i = 0; i <= k; ++i) g.push_back(i == 0 ? a : 2 * a + i * d);
    g.push_back(a + 999);
    auto t0 = Clock::now();
    auto ap = oracle::apery(g, a);
    double oracle_secs = seconds_since(t0);
    bool oracle_ok = ap.w.size() == static_cast<std::size_t>(a);

    std::ostringstream os;
    os << "closed-form analyze: worst (best of 5) " << worst * 1e3 << " ms over " << inputs.size()
       << " tuples with 9000<=a<=10000; oracle Apery for g0=10^6, 22 generators: " << oracle_secs << " s";
    report(7, "performance", inputs.size() >= 50 && worst < 1e-3 && oracle_ok && oracle_secs < 2.0, os.str());
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> want;
    for (int i = 1; i < argc; ++i) want.insert(std::atoi(argv[i]));
    auto on = [&](int c) { return want.empty() || want.count(c) > 0; };

    if (on(1)) criterion1();
    if (on(2) || on(3) || on(4) || on(6)) criteria234(on(2), on(3), on(4), on(6));
    if (on(5)) criterion5();
    if (on(7)) criterion7();

    std::sort(results.begin(), results.end(), [](const Line& x, const Line& y) { return x.id < y.id; });
    int failed = 0;
    std::cout << "\nsummary\n";
    for (const auto& r : results) {
        std::cout << "  " << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << '\n';
        failed += !r.pass;
    }
    return failed == 0 ? 0 : 1;
}
