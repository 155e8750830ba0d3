#include "aag/scan.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "aag/grobner.hpp"

namespace aag {

std::optional<Range> parse_range(const std::string& s) {
    auto num = [](const std::string& x) -> std::optional<std::int64_t> {
        auto v = Int::parse(x);
        if (!v || !v->fits_i64()) return std::nullopt;
        return v->to_i64();
    };
    std::size_t pos;
    std::string lo, hi;
    if ((pos = s.find("..")) != std::string::npos) {
        lo = s.substr(0, pos);
        hi = s.substr(pos + 2);
    } else if ((pos = s.find(':')) != std::string::npos) {
        lo = s.substr(0, pos);
        hi = s.substr(pos + 1);
    } else {
        lo = hi = s;
    }
    auto l = num(lo), h = num(hi);
    if (!l || !h) return std::nullopt;
    return Range{*l, *h};
}

std::int64_t ScanSpec::total() const {
    Int t = Int(a.size()) * Int(d.size()) * Int(c.size()) * Int(k.size()) * Int(h.size());
    return t.to_i64();
}

namespace {

// Runs f(i) for i in [0, n) on `workers` threads; f must only touch slot i.
template <typename F>
void parallel_for(std::int64_t n, unsigned workers, F&& f) {
    workers = std::max(1u, workers);
    if (workers == 1 || n < 2) {
        for (std::int64_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::int64_t i; (i = next.fetch_add(1)) < n;) f(i);
        });
    for (auto& th : pool) th.join();
}

struct Slot {
    std::vector<ScanRecord> records;
    std::map<std::string, std::int64_t> skipped;
    std::vector<std::string> details;
    std::int64_t analyzed = 0;
};

std::string tuple_str(Int a, Int d, Int h, Int k, Int c) {
    return "(a=" + a.str() + ", d=" + d.str() + ", h=" + h.str() + ", k=" + k.str() + ", c=" + c.str() + ")";
}

void scan_one(const ScanSpec& spec, std::int64_t a, std::int64_t d, std::int64_t c, std::int64_t k, std::int64_t h,
              Slot& out) {
    auto skip = [&](const std::string& why) {
        ++out.skipped[why];
        if (spec.explain_skips) out.details.push_back(tuple_str(a, d, h, k, c) + ": " + why);
    };
    AagParams p;
    try {
        ValidateOptions vo;
        vo.normalize = spec.normalize;
        vo.limits = spec.limits;
        p = validate_params(a, d, h, k, c, vo);
    } catch (const Error& e) {
        skip(to_string(e.code()));
        return;
    }

    ScanRecord rec{a, d, c, h, static_cast<int>(k), {}, std::nullopt, {}};
    try {
        auto t = build_table(p);
        if (spec.filter == ScanFilter::Pivot && !(t.pivot().r_prime >= p.h)) {
            skip("PivotFilter");
            return;
        }
        if (spec.filter == ScanFilter::Hypothesis && !t.hypothesis_ok) {
            skip("HypothesisViolated");
            return;
        }
        ++out.analyzed;
        if (spec.fast_only) {
            if (!t.hypothesis_ok || p.k < 3) {
                skip("FastPathNotApplicable");
                return;
            }
            auto fc = fast_path(p);
            if (!fc) {
                if (spec.emit_all) {
                    rec.cls.hypothesis_ok = true;
                    rec.cls.verdict = Verdict::NeitherSpecial;
                    out.records.push_back(std::move(rec));
                }
                return;
            }
            rec.cls = *fc;
        } else {
            ClassifyOptions co;
            co.limits = spec.limits;
            rec.cls = classify(p, co);
        }
        if (spec.oracle_verify) {
            auto gens = p.gens64();
            auto ap = oracle::apery(gens, gens[0], spec.limits);
            auto opf = oracle::pf(ap, gens);
            bool ok = rec.cls.frobenius == oracle::frobenius(ap) && rec.cls.type == static_cast<int>(opf.size());
            if (ok && !rec.cls.pf.empty()) {
                for (std::size_t i = 0; i < opf.size(); ++i) ok = ok && rec.cls.pf[i] == opf[i];
            }
            bool oas = opf.size() >= 2 && oracle::nari(opf);
            if (rec.cls.verdict == Verdict::AlmostSymmetric) ok = ok && oas;
            if (rec.cls.verdict == Verdict::Symmetric) ok = ok && opf.size() == 1;
            rec.oracle_agrees = ok;
        }
    } catch (const Error& e) {
        rec.error = std::string(to_string(e.code())) + ": " + e.what();
    }
    if (spec.emit_all || !rec.error.empty() || rec.cls.verdict == Verdict::AlmostSymmetric)
        out.records.push_back(std::move(rec));
}

}  // namespace

ScanResult run_scan(const ScanSpec& spec) {
    ScanResult res;
    res.total = spec.total();
    if (res.total == 0) return res;
    std::vector<Slot> slots(static_cast<std::size_t>(spec.a.size()));
    parallel_for(spec.a.size(), spec.workers, [&](std::int64_t i) {
        std::int64_t a = spec.a.lo + i;
        auto& slot = slots[static_cast<std::size_t>(i)];
        for (std::int64_t d = spec.d.lo; d <= spec.d.hi; ++d)
            for (std::int64_t c = spec.c.lo; c <= spec.c.hi; ++c)
                for (std::int64_t k = spec.k.lo; k <= spec.k.hi; ++k)
                    for (std::int64_t h = spec.h.lo; h <= spec.h.hi; ++h) scan_one(spec, a, d, c, k, h, slot);
    });
    for (auto& s : slots) {
        res.analyzed += s.analyzed;
        for (auto& r : s.records) res.records.push_back(std::move(r));
        for (auto& [why, n] : s.skipped) res.skipped[why] += n;
        for (auto& x : s.details) res.skip_details.push_back(std::move(x));
    }
    return res;
}

// ---------------------------------------------------------------------------
// serialization

namespace {

const char* field_or_empty(const Solved& s, const char* key, std::string& buf) {
    auto it = s.find(key);
    if (it == s.end()) return "";
    buf = it->second.str();
    return buf.c_str();
}

nlohmann::json jint(Int v) {
    // beyond 2^53 a double-backed consumer would round
    static const Int two53 = Int(9007199254740992LL);
    if (v > two53 || v < -two53) return v.str();
    return v.to_i64();
}

nlohmann::json jopt(const Solved& s, const char* key) {
    auto it = s.find(key);
    if (it == s.end()) return nullptr;
    return jint(it->second);
}

}  // namespace

std::string csv_header() { return "a,d,c,k,h,verdict,family,l,p,sigma,r,type,frobenius,fast_path,hypothesis_ok"; }

std::string to_csv(const ScanRecord& r) {
    std::ostringstream os;
    std::string b1, b2, b3, b4;
    const auto& s = r.cls.solved;
    os << r.a.str() << ',' << r.d.str() << ',' << r.c.str() << ',' << r.k << ',' << r.h.str() << ','
       << (r.error.empty() ? to_string(r.cls.verdict) : "Error") << ',' << r.cls.family << ','
       << field_or_empty(s, "l", b1) << ',' << field_or_empty(s, "p", b2) << ',' << field_or_empty(s, "sigma", b3)
       << ',' << field_or_empty(s, "r", b4) << ',' << r.cls.type << ',' << r.cls.frobenius.str() << ','
       << (r.cls.fast_path_used ? "true" : "false") << ',' << (r.cls.hypothesis_ok ? "true" : "false");
    return os.str();
}

std::string to_json_line(const ScanRecord& r) {
    nlohmann::ordered_json j;
    j["a"] = jint(r.a);
    j["d"] = jint(r.d);
    j["c"] = jint(r.c);
    j["k"] = r.k;
    j["h"] = jint(r.h);
    j["verdict"] = r.error.empty() ? to_string(r.cls.verdict) : "Error";
    j["family"] = r.cls.family.empty() ? nlohmann::json(nullptr) : nlohmann::json(r.cls.family);
    j["l"] = jopt(r.cls.solved, "l");
    j["p"] = jopt(r.cls.solved, "p");
    j["sigma"] = jopt(r.cls.solved, "sigma");
    j["r"] = jopt(r.cls.solved, "r");
    j["type"] = r.cls.type;
    j["frobenius"] = jint(r.cls.frobenius);
    j["fast_path_used"] = r.cls.fast_path_used;
    j["hypothesis_ok"] = r.cls.hypothesis_ok;
    j["via_normalization"] = r.cls.via_normalization;
    if (r.oracle_agrees) j["oracle_agrees"] = *r.oracle_agrees;
    if (!r.error.empty()) j["error"] = r.error;
    return j.dump();
}

// ---------------------------------------------------------------------------
// verification

const std::vector<std::string>& verify_check_names() {
    static const std::vector<std::string> names = {
        // closed forms against the oracle
        "apery", "pf", "frobenius", "verdict_vs_oracle", "fast_vs_full", "fast_discriminant", "family_unmatched",
        // Euclid table
        "det_identities", "row_equation", "s_decreasing", "p_increasing", "r_decreasing", "r_prime_decreasing",
        "tilde_relation", "q_at_least_2", "r_tilde_at_least_2",
        // Groebner
        "basis_kernel", "tilde_kernel", "row_kernel", "A_count", "lead_order", "standard_monomials",
        "tilde_r_above_h",
    };
    return names;
}

std::int64_t VerifyReport::total_mismatches() const {
    std::int64_t n = 0;
    for (auto& [k, v] : mismatches) n += v;
    return n;
}

namespace {

struct VSlot {
    VerifyReport rep;
};

void fail(VerifyReport& rep, const std::string& check, const std::string& tuple, const std::string& detail = {}) {
    if (rep.mismatches[check]++ == 0) rep.first_failure[check] = tuple + (detail.empty() ? "" : ": " + detail);
}

bool same_solved(const Solved& x, const Solved& y) { return x == y; }

void verify_one(const VerifySpec& spec, std::int64_t a, std::int64_t d, std::int64_t c, std::int64_t k,
                std::int64_t h, VerifyReport& rep) {
    ++rep.visited;
    const Int A = a, D = d, H = h, K = k, C = c;
    if (a <= 0 || d == 0 || k <= 0 || h <= 0 || c <= 0 || H * A + K * D <= 0 || gcd(A, D) != 1) {
        ++rep.invalid;
        return;
    }
    auto gens = aag_generators(A, D, H, static_cast<int>(k), C);
    Int g = 0;
    for (auto x : gens) g = gcd(g, x);
    if (g != 1) {
        ++rep.invalid;
        return;
    }
    oracle::Gens g64;
    for (auto x : gens) g64.push_back(x.to_i64());
    const auto ap = oracle::apery(g64, a, spec.limits);
    if (!oracle::is_minimal_generating(g64, ap)) {
        ++rep.invalid;
        return;
    }
    const std::string id = tuple_str(A, D, H, K, C);
    try {
        const auto p = validate_params_with(A, D, H, K, C, ap);
        const auto t = build_table(p);

        // Euclid invariants, on every valid table
        const auto& rows = t.rows;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& x = rows[i];
            if (x.s * D - x.p * C != x.r * A) fail(rep, "row_equation", id);
            if (i >= 2 && (!x.q || *x.q < 2)) fail(rep, "q_at_least_2", id);
            if (i + 1 == rows.size()) break;
            const auto& y = rows[i + 1];
            if (x.s * y.p - y.s * x.p != A || y.s * x.r - x.s * y.r != C || y.p * x.r - x.p * y.r != D)
                fail(rep, "det_identities", id, "rows " + std::to_string(i) + "," + std::to_string(i + 1));
            if (!(y.s < x.s)) fail(rep, "s_decreasing", id);
            if (!(y.p > x.p)) fail(rep, "p_increasing", id);
            if (d > 0 && !(y.r < x.r)) fail(rep, "r_decreasing", id);
            if (static_cast<int>(i) <= t.mu && !(y.r_prime < x.r_prime)) fail(rep, "r_prime_decreasing", id);
            if (tilde_pair(t, i, H, static_cast<int>(k)).r_tilde < 2) fail(rep, "r_tilde_at_least_2", id);
        }
        {
            const auto& m = t.pivot();
            const auto& n = t.next();
            Int diff = m.r_prime - n.r_prime;
            bool shifted = (m.rho == 0 && n.rho > 0) || (m.rho > n.rho && n.rho > 0);
            if ((shifted ? t.tilde_r - H : t.tilde_r) != diff) fail(rep, "tilde_relation", id);
        }

        if (!t.hypothesis_ok) {
            ++rep.hypothesis_failed;
            return;
        }
        ++rep.checked;

        // Apery set: closed form vs shortest paths, as sets of integers
        const auto aps = apery_set(p, t);
        if (aps.size() != A) fail(rep, "apery", id, "cardinality " + aps.size().str());
        else {
            bool ok = true;
            aps.for_each([&](StandardPoint pt) {
                if (!ok) return;
                Int w = phi_point(pt, p);
                if (w != ap.w[static_cast<std::size_t>((w % A).to_i64())]) ok = false;
            });
            if (!ok) fail(rep, "apery", id);
        }

        const auto opf = oracle::pf(ap, g64);
        const auto pf = pf_tilde(p, t);
        bool pf_ok = pf.pf_numbers.size() == opf.size();
        for (std::size_t i = 0; pf_ok && i < opf.size(); ++i) pf_ok = pf.pf_numbers[i] == opf[i];
        if (!pf_ok) fail(rep, "pf", id, pf.trace());
        if (frobenius(p, t) != oracle::frobenius(ap)) fail(rep, "frobenius", id);

        const auto full = classify(p);
        const bool oas = opf.size() >= 2 && oracle::nari(opf);
        if ((full.verdict == Verdict::Symmetric) != (opf.size() == 1) ||
            (full.verdict == Verdict::AlmostSymmetric) != oas)
            fail(rep, "verdict_vs_oracle", id, to_string(full.verdict));
        if (full.verdict == Verdict::Symmetric) ++rep.symmetric;
        if (full.verdict == Verdict::AlmostSymmetric) {
            ++rep.almost_symmetric;
            std::int64_t fo = oracle::frobenius(ap), t = static_cast<std::int64_t>(opf.size());
            if (2 * oracle::genus(ap) != fo + t) ++rep.genus_identity_off;
        }
        if (full.verdict == Verdict::Symmetric || full.verdict == Verdict::AlmostSymmetric) {
            if (full.family.empty()) fail(rep, "family_unmatched", id, full.trace);
            else ++rep.families[full.family];
            if (!full.ambiguous.empty()) fail(rep, "family_unmatched", id, "several table shapes match");
        }

        const auto hits = fast_candidates(p);
        for (const auto& x : hits) {
            Int q = x.discriminant < 0 ? Int(-1) : isqrt(x.discriminant);
            if (q < 0 || q * q != x.discriminant) fail(rep, "fast_discriminant", id, x.family);
        }
        if (full.verdict == Verdict::AlmostSymmetric) {
            bool ok = hits.size() == 1 && hits[0].family == full.family && same_solved(hits[0].solved, full.solved) &&
                      hits[0].type == full.type && hits[0].frobenius == full.frobenius;
            if (!ok) {
                std::string got = std::to_string(hits.size()) + " hits";
                if (!hits.empty()) got += ", first " + hits[0].family;
                fail(rep, "fast_vs_full", id, "full " + full.family + ", fast " + got);
            }
        } else if (!hits.empty()) {
            fail(rep, "fast_vs_full", id, "fast hit " + hits[0].family + " on a " + to_string(full.verdict) + " tuple");
        }

        if (spec.check_grobner) {
            const auto A_ = family_A(p);
            if (static_cast<std::int64_t>(A_.size()) != k * (k - 1) / 2) fail(rep, "A_count", id);
            const auto G = basis(p, t);
            for (const auto& b : G)
                if (!kernel_check(b, p)) {
                    fail(rep, "basis_kernel", id, to_string(b));
                    break;
                }
            for (const auto& b : tilde_binomials(t, p))
                if (!kernel_check(b, p)) {
                    fail(rep, "tilde_kernel", id, to_string(b));
                    break;
                }
            for (const auto& b : row_binomials(t, p))
                if (!kernel_check(b, p)) {
                    fail(rep, "row_kernel", id, to_string(b));
                    break;
                }
            for (std::size_t i = 0; i + 1 < t.rows.size(); ++i) {
                auto tp = tilde_pair(t, i, H, static_cast<int>(k));
                if (tp.dec.rho > 0 && !(tp.r_tilde > H)) {
                    fail(rep, "tilde_r_above_h", id, "pair " + std::to_string(i));
                    break;
                }
            }
            auto cert = certify(p, t, G, spec.invert_order);
            if (!cert.leads_consistent) fail(rep, "lead_order", id);
            if (!cert.matches_apery || (cert.leads_consistent && !cert.ok))
                fail(rep, "standard_monomials", id, cert.detail);
        }
    } catch (const Error& e) {
        fail(rep, std::string("error:") + to_string(e.code()), id, e.what());
    }
}

void merge(VerifyReport& into, const VerifyReport& x) {
    into.visited += x.visited;
    into.invalid += x.invalid;
    into.hypothesis_failed += x.hypothesis_failed;
    into.checked += x.checked;
    into.almost_symmetric += x.almost_symmetric;
    into.symmetric += x.symmetric;
    into.genus_identity_off += x.genus_identity_off;
    for (auto& [k, v] : x.mismatches) {
        if (into.mismatches[k] == 0 && x.first_failure.count(k)) into.first_failure[k] = x.first_failure.at(k);
        into.mismatches[k] += v;
    }
    for (auto& [k, v] : x.families) into.families[k] += v;
}

}  // namespace

VerifyReport run_verify(const VerifySpec& spec) {
    VerifyReport rep;
    if (spec.a.empty() || spec.d.empty() || spec.c.empty() || spec.k.empty() || spec.h.empty()) return rep;

    if (spec.sample > 0) {
        struct T {
            std::int64_t a, d, c, k, h;
        };
        std::mt19937_64 rng(spec.seed);
        auto draw = [&](const Range& r) {
            return std::uniform_int_distribution<std::int64_t>(r.lo, r.hi)(rng);
        };
        std::vector<T> tuples;
        tuples.reserve(static_cast<std::size_t>(spec.sample));
        for (std::int64_t i = 0; i < spec.sample; ++i) {
            T x{draw(spec.a), draw(spec.d), draw(spec.c), draw(spec.k), draw(spec.h)};
            tuples.push_back(x);
        }
        // sorted and deduplicated so that reports do not depend on draw order
        std::sort(tuples.begin(), tuples.end(), [](const T& x, const T& y) {
            return std::tie(x.a, x.d, x.c, x.k, x.h) < std::tie(y.a, y.d, y.c, y.k, y.h);
        });
        tuples.erase(std::unique(tuples.begin(), tuples.end(),
                                 [](const T& x, const T& y) {
                                     return std::tie(x.a, x.d, x.c, x.k, x.h) == std::tie(y.a, y.d, y.c, y.k, y.h);
                                 }),
                     tuples.end());
        const std::int64_t chunk = 256;
        const std::int64_t nchunks = (static_cast<std::int64_t>(tuples.size()) + chunk - 1) / chunk;
        std::vector<VerifyReport> parts(static_cast<std::size_t>(nchunks));
        parallel_for(nchunks, spec.workers, [&](std::int64_t ci) {
            auto end = std::min<std::int64_t>(static_cast<std::int64_t>(tuples.size()), (ci + 1) * chunk);
            for (std::int64_t i = ci * chunk; i < end; ++i) {
                const auto& x = tuples[static_cast<std::size_t>(i)];
                verify_one(spec, x.a, x.d, x.c, x.k, x.h, parts[static_cast<std::size_t>(ci)]);
            }
        });
        for (auto& part : parts) merge(rep, part);
        return rep;
    }

    std::vector<VerifyReport> parts(static_cast<std::size_t>(spec.a.size()));
    parallel_for(spec.a.size(), spec.workers, [&](std::int64_t i) {
        std::int64_t a = spec.a.lo + i;
        auto& part = parts[static_cast<std::size_t>(i)];
        for (std::int64_t d = spec.d.lo; d <= spec.d.hi; ++d) {
            if (d == 0) continue;
            for (std::int64_t c = spec.c.lo; c <= spec.c.hi; ++c)
                for (std::int64_t k = spec.k.lo; k <= spec.k.hi; ++k)
                    for (std::int64_t h = spec.h.lo; h <= spec.h.hi; ++h) verify_one(spec, a, d, c, k, h, part);
        }
    });
    for (auto& part : parts) merge(rep, part);
    return rep;
}

}  // namespace aag
