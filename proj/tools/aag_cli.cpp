// aag: analyze <a, ha+d, ..., ha+kd, c> semigroups from the command line.
//
//   aag analyze --a 155 --d 1 --h 4 --k 20 --c 177 [--json] [--apery] [--grobner]
//   aag scan    --a 150:165 --d -5:10 --c 170:186 --k 19:20 --h 1:4 --filter pivot
//   aag verify  --a 1:400 --d -9:9 --c 1:600 --k 3:6 --h 1:3 --sample 20000
//   aag table   --a ... (Euclid table only)
//   aag oracle  --gens 3,5
//
// Exit codes: 0 ok, 1 verification mismatch, 2 validation error, 64 usage.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aag/grobner.hpp"
#include "aag/scan.hpp"

using namespace aag;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0, kExitMismatch = 1, kExitInvalid = 2, kExitUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int parse_int(const std::string& name, const std::string& s) {
    auto v = Int::parse(s);
    if (!v) throw UsageError("--" + name + ": not an integer: '" + s + "'");
    return *v;
}

Range parse_range_arg(const std::string& name, const std::string& s) {
    auto r = parse_range(s);
    if (!r) throw UsageError("--" + name + ": expected lo:hi or a single integer, got '" + s + "'");
    return *r;
}

json jint(Int v) {
    static const Int two53 = Int(9007199254740992LL);
    if (v > two53 || v < -two53) return v.str();
    return v.to_i64();
}

json solved_json(const Solved& s) {
    json j = json::object();
    for (const auto& [k, v] : s) j[k] = jint(v);
    return j;
}

std::string solved_text(const Solved& s) {
    std::string out;
    for (const char* key : {"l", "sigma", "sigma_prime", "p", "p_prime", "r", "r_hat"}) {
        auto it = s.find(key);
        if (it == s.end()) continue;
        if (!out.empty()) out += ' ';
        out += std::string(key) + '=' + it->second.str();
    }
    return out;
}

void print_table(std::ostream& os, const EuclidTable& t) {
    os << std::right;
    os << std::setw(4) << "i" << std::setw(12) << "s" << std::setw(12) << "p" << std::setw(12) << "r"
       << std::setw(8) << "q" << " |" << std::setw(12) << "r'" << '\n';
    for (const auto& row : t.rows) {
        os << std::setw(4) << row.index << std::setw(12) << row.s.str() << std::setw(12) << row.p.str()
           << std::setw(12) << row.r.str() << std::setw(8) << (row.q ? row.q->str() : "-") << " |" << std::setw(12)
           << row.r_prime.str() << (row.index == t.mu ? "   <- mu" : "") << '\n';
    }
}

json table_json(const EuclidTable& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json r;
        r["i"] = row.index;
        r["s"] = jint(row.s);
        r["p"] = jint(row.p);
        r["r"] = jint(row.r);
        r["q"] = row.q ? jint(*row.q) : json(nullptr);
        r["sigma"] = jint(row.sigma);
        r["rho"] = jint(row.rho);
        r["l"] = jint(row.ell);
        r["r_prime"] = jint(row.r_prime);
        rows.push_back(r);
    }
    json j;
    j["rows"] = rows;
    j["mu"] = t.mu;
    j["tilde"] = {{"sigma", jint(t.tilde_sigma)}, {"rho", jint(t.tilde_rho)}, {"l", jint(t.tilde_ell)},
                  {"r", jint(t.tilde_r)}};
    j["hypothesis_ok"] = t.hypothesis_ok;
    return j;
}

struct TupleArgs {
    std::string a, d, h, k, c;
    void add(CLI::App* app) {
        app->add_option("--a", a, "a (first generator)")->required();
        app->add_option("--d", d, "common difference d")->required()->allow_extra_args(false);
        app->add_option("--h", h, "multiplier h")->required();
        app->add_option("--k", k, "number of arithmetic generators")->required();
        app->add_option("--c", c, "last generator c")->required();
    }
};

AagParams validated(const TupleArgs& ta, bool normalize) {
    ValidateOptions vo;
    vo.normalize = normalize;
    vo.limits = oracle::limits_from_env();
    return validate_params(parse_int("a", ta.a), parse_int("d", ta.d), parse_int("h", ta.h), parse_int("k", ta.k),
                           parse_int("c", ta.c), vo);
}

struct AnalyzeOpts {
    TupleArgs t;
    bool json_out = false, apery = false, grobner = false, fast = false, oracle_verify = false, normalize = false;
};

int cmd_analyze(const AnalyzeOpts& o) {
    AagParams p;
    try {
        p = validated(o.t, o.normalize);
    } catch (const Error& e) {
        if (o.json_out) {
            json j{{"error", to_string(e.code())}, {"reason", e.what()}};
            std::cout << j.dump(2) << '\n';
        }
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return kExitInvalid;
    }

    const auto lim = oracle::limits_from_env();
    const auto t = build_table(p);
    ClassifyOptions co;
    co.prefer_fast = o.fast;
    co.limits = lim;
    const auto cl = classify(p, co);

    std::optional<AperySet> aps;
    if (t.hypothesis_ok) aps = apery_set(p, t);

    std::optional<bool> agrees;
    if (o.oracle_verify) {
        auto gens = p.gens64();
        auto ap = oracle::apery(gens, gens[0], lim);
        auto opf = oracle::pf(ap, gens);
        bool ok = cl.frobenius == oracle::frobenius(ap) && cl.type == static_cast<int>(opf.size());
        if (!cl.pf.empty())
            for (std::size_t i = 0; ok && i < opf.size(); ++i) ok = cl.pf[i] == opf[i];
        if (aps) {
            aps->for_each([&](StandardPoint pt) {
                Int w = phi_point(pt, p);
                if (ok && w != ap.w[static_cast<std::size_t>((w % p.a).to_i64())]) ok = false;
            });
        }
        agrees = ok;
    }

    std::vector<Binomial> G;
    if (o.grobner && t.hypothesis_ok) G = basis(p, t);

    if (o.json_out) {
        json j;
        j["params"] = {{"a", jint(p.a)}, {"d", jint(p.d)}, {"h", jint(p.h)}, {"k", p.k}, {"c", jint(p.c)}};
        j["normalized"] = p.normalized;
        json g = json::array();
        for (auto x : p.generators) g.push_back(jint(x));
        j["generators"] = g;
        j["table"] = table_json(t);
        j["hypothesis_ok"] = t.hypothesis_ok;
        if (aps) {
            j["apery"] = {{"s_mu", aps->s_mu}, {"s_mu1", aps->s_next}, {"p_mu", aps->p_mu}, {"p_mu1", aps->p_next},
                          {"size", jint(aps->size())}};
            if (o.apery) {
                json pts = json::array();
                aps->for_each([&](StandardPoint pt) { pts.push_back({pt.y, pt.z, jint(phi_point(pt, p))}); });
                j["apery"]["points"] = pts;
            }
        }
        j["frobenius"] = jint(cl.frobenius);
        json pf = json::array();
        for (auto x : cl.pf) pf.push_back(jint(x));
        j["pf"] = pf;
        j["type"] = cl.type;
        j["trace"] = cl.trace;
        j["verdict"] = to_string(cl.verdict);
        j["family"] = cl.family.empty() ? json(nullptr) : json(cl.family);
        j["solved"] = solved_json(cl.solved);
        j["fast_path_used"] = cl.fast_path_used;
        j["via_normalization"] = cl.via_normalization;
        if (!cl.ambiguous.empty()) j["ambiguous"] = cl.ambiguous;
        if (o.grobner) {
            json gb = json::array();
            for (const auto& b : G) gb.push_back(to_string(b));
            j["grobner"] = gb;
        }
        if (agrees) j["oracle_agrees"] = *agrees;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "S = <";
        for (std::size_t i = 0; i < p.generators.size(); ++i) std::cout << (i ? ", " : "") << p.generators[i].str();
        std::cout << ">" << (p.normalized ? "  (rewritten from d<0, h=1)" : "") << "\n\n";
        print_table(std::cout, t);
        std::cout << "\nhypothesis (r'_mu >= h or rho_mu = 0): " << (t.hypothesis_ok ? "holds" : "fails") << '\n';
        if (aps)
            std::cout << "Apery set: y < " << aps->split() << ", z < " << aps->p_next << "  |  " << aps->split()
                      << " <= y < " << aps->s_mu << ", z < " << aps->p_next - aps->p_mu << "  (" << aps->size().str()
                      << " points)\n";
        std::cout << "F(S) = " << cl.frobenius.str() << '\n';
        if (!cl.pf.empty()) {
            std::cout << "PF(S) = {";
            for (std::size_t i = 0; i < cl.pf.size(); ++i) std::cout << (i ? ", " : "") << cl.pf[i].str();
            std::cout << "}\n";
        }
        std::cout << "type = " << cl.type << '\n';
        if (!cl.trace.empty()) std::cout << cl.trace << '\n';
        std::cout << "verdict: " << to_string(cl.verdict) << '\n';
        if (!cl.family.empty())
            std::cout << "family: " << cl.family << "  " << solved_text(cl.solved)
                      << (cl.via_normalization ? "  (via a+kd, -d)" : "") << '\n';
        std::cout << "fast path: " << (cl.fast_path_used ? "used" : "not used") << '\n';
        for (const auto& amb : cl.ambiguous) std::cout << "ambiguous: " << amb << '\n';
        if (agrees) std::cout << "oracle agrees: " << (*agrees ? "yes" : "NO") << '\n';
        if (o.grobner) {
            std::cout << "\nGroebner basis (" << G.size() << " binomials)\n";
            for (const auto& b : G) std::cout << to_string(b) << '\n';
        }
        if (o.apery && aps) {
            std::cout << "\ny,z,phi\n";
            aps->for_each([&](StandardPoint pt) {
                std::cout << pt.y << ',' << pt.z << ',' << phi_point(pt, p).str() << '\n';
            });
        }
    }
    if (agrees && !*agrees) return kExitMismatch;
    return kExitOk;
}

struct GridArgs {
    std::string a, d, c, k, h;
    void add(CLI::App* app) {
        app->add_option("--a", a, "range lo:hi")->required();
        app->add_option("--d", d, "range lo:hi")->required();
        app->add_option("--c", c, "range lo:hi")->required();
        app->add_option("--k", k, "range lo:hi")->required();
        app->add_option("--h", h, "range lo:hi")->required();
    }
};

struct ScanOpts {
    GridArgs g;
    std::string filter = "hypothesis", format = "jsonl", out;
    bool all = false, oracle_verify = false, fast_only = false, normalize = false, explain = false;
    unsigned workers = 1;
};

int cmd_scan(const ScanOpts& o) {
    ScanSpec s;
    s.a = parse_range_arg("a", o.g.a);
    s.d = parse_range_arg("d", o.g.d);
    s.c = parse_range_arg("c", o.g.c);
    s.k = parse_range_arg("k", o.g.k);
    s.h = parse_range_arg("h", o.g.h);
    s.filter = o.filter == "none" ? ScanFilter::None : o.filter == "pivot" ? ScanFilter::Pivot : ScanFilter::Hypothesis;
    s.emit_all = o.all;
    s.oracle_verify = o.oracle_verify;
    s.fast_only = o.fast_only;
    s.normalize = o.normalize;
    s.explain_skips = o.explain;
    s.workers = o.workers;
    s.limits = oracle::limits_from_env();

    std::cerr << "tuples in grid: " << s.total() << '\n';
    auto res = run_scan(s);

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file) {
            std::cerr << "error: cannot open " << o.out << '\n';
            return kExitInvalid;
        }
        os = &file;
    }
    if (o.format == "csv") *os << csv_header() << '\n';
    bool disagree = false;
    for (const auto& r : res.records) {
        *os << (o.format == "csv" ? to_csv(r) : to_json_line(r)) << '\n';
        if (r.oracle_agrees && !*r.oracle_agrees) disagree = true;
    }
    os->flush();
    if (!*os) {
        std::cerr << "error: write failed\n";
        return kExitInvalid;
    }

    std::cerr << "analyzed " << res.analyzed << ", records " << res.records.size() << '\n';
    for (const auto& [why, n] : res.skipped) std::cerr << "skipped " << why << ": " << n << '\n';
    for (const auto& line : res.skip_details) std::cerr << "  " << line << '\n';
    return disagree ? kExitMismatch : kExitOk;
}

struct VerifyOpts {
    GridArgs g;
    std::int64_t sample = 0;
    std::uint64_t seed = 1;
    bool no_grobner = false, invert = false;
    unsigned workers = 1;
};

int cmd_verify(const VerifyOpts& o) {
    VerifySpec s;
    s.a = parse_range_arg("a", o.g.a);
    s.d = parse_range_arg("d", o.g.d);
    s.c = parse_range_arg("c", o.g.c);
    s.k = parse_range_arg("k", o.g.k);
    s.h = parse_range_arg("h", o.g.h);
    s.sample = o.sample;
    s.seed = o.seed;
    s.check_grobner = !o.no_grobner;
    s.invert_order = o.invert;
    s.workers = o.workers;
    s.limits = oracle::limits_from_env();
    auto rep = run_verify(s);
    std::cout << "visited " << rep.visited << ", invalid " << rep.invalid << ", hypothesis failed "
              << rep.hypothesis_failed << '\n';
    std::cout << "checked " << rep.checked << " (symmetric " << rep.symmetric << ", almost symmetric "
              << rep.almost_symmetric << ")\n";
    std::cout << "info: 2g = F + t fails on " << rep.genus_identity_off << " almost symmetric tuples\n";
    for (const auto& [fam, n] : rep.families) std::cout << "  " << fam << ": " << n << '\n';
    std::cout << "mismatches " << rep.total_mismatches() << '\n';
    for (const auto& [check, n] : rep.mismatches) {
        std::cout << "  " << check << ": " << n;
        if (rep.first_failure.count(check)) std::cout << "  first " << rep.first_failure.at(check);
        std::cout << '\n';
    }
    return rep.total_mismatches() == 0 ? kExitOk : kExitMismatch;
}

int cmd_table(const TupleArgs& ta, bool normalize) {
    AagParams p;
    try {
        p = validated(ta, normalize);
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return kExitInvalid;
    }
    auto t = build_table(p);
    print_table(std::cout, t);
    std::cout << "mu = " << t.mu << ", hypothesis " << (t.hypothesis_ok ? "holds" : "fails") << '\n';
    return kExitOk;
}

int cmd_oracle(const std::string& gens_arg, bool summary) {
    oracle::Gens gens;
    std::stringstream ss(gens_arg);
    for (std::string tok; std::getline(ss, tok, ',');) {
        auto v = Int::parse(tok);
        if (!v || !v->fits_i64()) throw UsageError("--gens: bad entry '" + tok + "'");
        gens.push_back(v->to_i64());
    }
    try {
        auto lim = oracle::limits_from_env();
        auto r = oracle::report(gens, lim);
        json j;
        j["generators"] = r.generators;
        j["modulus"] = r.apery.modulus;
        if (!summary) j["apery"] = r.apery.w;
        j["frobenius"] = r.frobenius;
        j["pf"] = r.pf;
        j["type"] = r.type;
        j["genus"] = r.genus;
        j["symmetric"] = r.symmetric;
        j["almost_symmetric"] = r.almost_symmetric;
        j["minimal"] = oracle::is_minimal_generating(r.generators, r.apery);
        std::cout << j.dump(2) << '\n';
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"aag: Apery sets, pseudo-Frobenius numbers and classification of <a, ha+d, ..., ha+kd, c>"};
    app.set_help_flag("--help", "print this help");  // -h would collide with --h
    app.require_subcommand(1);

    AnalyzeOpts ao;
    auto* analyze = app.add_subcommand("analyze", "closed-form analysis of one tuple");
    ao.t.add(analyze);
    analyze->add_flag("--json", ao.json_out, "single JSON document");
    analyze->add_flag("--apery", ao.apery, "dump (y, z, phi) for every Apery point");
    analyze->add_flag("--grobner", ao.grobner, "print the Groebner basis");
    analyze->add_flag("--fast", ao.fast, "try the quadratic fast path first");
    analyze->add_flag("--oracle-verify", ao.oracle_verify, "cross-check against the brute-force oracle");
    analyze->add_flag("--normalize", ao.normalize, "rewrite d<0, h=1 as (a+kd, -d)");

    ScanOpts so;
    auto* scan = app.add_subcommand("scan", "classify every tuple of a grid");
    so.g.add(scan);
    scan->add_option("--filter", so.filter, "none | hypothesis | pivot (r'_mu >= h)")
        ->check(CLI::IsMember({"none", "hypothesis", "pivot"}));
    scan->add_option("--format", so.format, "jsonl | csv")->check(CLI::IsMember({"jsonl", "csv"}));
    scan->add_option("--out", so.out, "output file (default stdout)");
    scan->add_flag("--all", so.all, "one record per analyzed tuple");
    scan->add_flag("--oracle-verify", so.oracle_verify, "flag each record with oracle agreement");
    scan->add_flag("--fast-only", so.fast_only, "classify with the quadratic fast path only");
    scan->add_flag("--normalize", so.normalize, "rewrite d<0, h=1 tuples before analysis");
    scan->add_flag("--explain-skips", so.explain, "itemize skipped tuples");
    scan->add_option("--workers", so.workers, "worker threads")->check(CLI::Range(1u, 256u));

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "closed forms vs oracle over a grid");
    vo.g.add(verify);
    verify->add_option("--sample", vo.sample, "draw this many tuples instead of the full grid");
    verify->add_option("--seed", vo.seed, "sampling seed");
    verify->add_flag("--no-grobner", vo.no_grobner, "skip the Groebner certification");
    verify->add_flag("--debug-invert-order", vo.invert, "invert the term order (must fail)");
    verify->add_option("--workers", vo.workers, "worker threads")->check(CLI::Range(1u, 256u));

    TupleArgs to;
    bool table_norm = false;
    auto* table = app.add_subcommand("table", "print the Euclid table");
    to.add(table);
    table->add_flag("--normalize", table_norm, "rewrite d<0, h=1 as (a+kd, -d)");

    std::string gens;
    bool summary = false;
    auto* orc = app.add_subcommand("oracle", "brute-force report for any generator list");
    orc->add_option("--gens", gens, "comma separated generators")->required();
    orc->add_flag("--summary", summary, "omit the Apery map");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*analyze) return cmd_analyze(ao);
        if (*scan) return cmd_scan(so);
        if (*verify) return cmd_verify(vo);
        if (*table) return cmd_table(to, table_norm);
        if (*orc) return cmd_oracle(gens, summary);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitUsage;
}
