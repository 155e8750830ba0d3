#include "aag/classify.hpp"

#include <algorithm>

namespace aag {

const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Symmetric: return "Symmetric";
        case Verdict::AlmostSymmetric: return "AlmostSymmetric";
        case Verdict::NeitherSpecial: return "NeitherSpecial";
        case Verdict::OracleOnly: return "OracleOnly";
    }
    return "?";
}

bool nari_check(const std::vector<Int>& pf, Int F) {
    if (pf.empty() || pf.back() != F)
        throw Error(ErrorCode::MalformedPf, "largest pseudo-Frobenius number must be F");
    const std::size_t t = pf.size();
    for (std::size_t i = 0; i + 1 < t; ++i)
        if (pf[i] + pf[t - 2 - i] != F) return false;
    return true;
}

std::vector<FamilyMatch> match_families(Int a, Int d, Int h, int k, const EuclidTable& t, int type, bool nari) {
    (void)a;
    std::vector<FamilyMatch> out;
    const auto& m = t.pivot();
    const auto& n = t.next();
    const Int K = k;
    const Int sg = m.sigma, rho = m.rho;

    if (type == 1) {
        if (n.s == 0 && rho == 2)
            out.push_back({"Thm4.1-case1", {{"sigma", sg}, {"p", m.p}, {"p_prime", n.p}, {"r", m.r}, {"r_hat", n.r}}});
        if (rho == 2 && n.s > 0 && n.rho == 0 && n.sigma >= 2 && n.r == -h * n.sigma)
            out.push_back({"Thm4.1-case2",
                           {{"sigma", sg}, {"sigma_prime", n.sigma}, {"p", m.p}, {"p_prime", n.p}, {"r", m.r}}});
        if (rho == 2 && n.s == sg * K + 1 && n.r == -h * (sg + 1))
            out.push_back({"Thm4.1-case3", {{"sigma", sg}, {"p", m.p}, {"p_prime", n.p}, {"r", m.r}}});
        if (rho == 1 && m.r == -h * sg && n.s == K - 1)
            out.push_back({"Thm4.1-case4", {{"sigma", sg}, {"p", m.p}, {"p_prime", n.p}, {"r_hat", n.r}}});
        return out;
    }
    if (type < 2 || !nari) return out;

    if (h == 1 && m.s == K + 1 && m.p == 1 && n.s == K && n.p == 2 && n.r == -2)
        out.push_back({"Thm5.1", {{"p", n.p}, {"sigma", 1}, {"r", m.r}}});
    if (d < 0 && h >= 2 && rho == 1 && m.p == 1 && m.r == -h * sg && n.s == sg * K && n.r == -h * sg - 1)
        out.push_back({"Thm5.2", {{"p", n.p}, {"sigma", sg}, {"r", m.r}}});
    if (h == 1 && rho == 2 && m.p == 1 && n.r_prime == 0 && n.r == -sg && n.rho >= 1 &&
        n.s == (sg - 1) * K + n.rho)
        out.push_back({"Thm5.3-(i)", {{"l", n.rho}, {"p", n.p}, {"sigma", sg}, {"r", m.r}}});
    if (rho == 2 && m.p == 1 && n.s == sg * K + 1 && n.r == -h * (sg + 1) - 1)
        out.push_back({"Thm5.3-(ii)", {{"p", n.p}, {"sigma", sg}, {"r", m.r}}});
    if (h == 1 && m.r_prime == 1 && m.r == -sg && n.p == m.p + 1 && n.s >= 1 && n.s <= K - 3 &&
        m.s == sg * K + n.s + 2)
        out.push_back({"Thm5.4-(i)", {{"l", n.s}, {"p", n.p}, {"sigma", sg}, {"r", n.r}}});
    if (rho == 0 && m.r_prime == 1 && m.r == 1 - sg * h && n.s == K - 2 && n.p == m.p + 1)
        out.push_back({"Thm5.4-(ii)", {{"p", n.p}, {"sigma", sg}, {"r", n.r}}});
    if (rho == 1 && m.r_prime == h + 1 && m.r == 1 - h * sg && n.s == K - 1 && n.p == m.p + 1)
        out.push_back({"Thm5.4-(iii)", {{"p", n.p}, {"sigma", sg}, {"r", n.r}}});
    if (h == 1 && m.s == K + 1 && m.r == -1 && n.s == K && n.p == m.p + 1)
        out.push_back({"Thm5.4-(iv)", {{"p", n.p}, {"sigma", 1}, {"r", n.r}}});
    if (h == 1 && rho == 1 && m.r == -sg && n.s == 2 * K - 1 && n.p == m.p + 1 && sg >= 2)
        out.push_back({"Thm5.4-(v)", {{"p", n.p}, {"sigma", sg}, {"r", n.r}}});
    return out;
}

namespace {

Classification oracle_only(const AagParams& p, const oracle::Limits& lim, bool hyp) {
    Classification cl;
    cl.verdict = Verdict::OracleOnly;
    cl.hypothesis_ok = hyp;
    auto gens = p.gens64();
    auto ap = oracle::apery(gens, gens[0], lim);
    auto pf = oracle::pf(ap, gens);
    cl.type = static_cast<int>(pf.size());
    cl.frobenius = oracle::frobenius(ap);
    for (auto f : pf) cl.pf.push_back(f);
    return cl;
}

}  // namespace

Classification classify(const AagParams& p, const ClassifyOptions& opt) {
    auto t = build_table(p);
    if (!t.hypothesis_ok || p.k < 3) return oracle_only(p, opt.limits, t.hypothesis_ok);

    std::vector<std::string> ambiguous;
    if (opt.prefer_fast) {
        if (auto fc = fast_path(p, &ambiguous)) {
            fc->hypothesis_ok = true;
            return *fc;
        }
    }

    Classification cl;
    cl.hypothesis_ok = true;
    cl.ambiguous = std::move(ambiguous);
    auto pf = pf_tilde(p, t);
    cl.pf = pf.pf_numbers;
    cl.type = pf.type;
    cl.frobenius = pf.pf_numbers.back();
    cl.trace = pf.trace();
    bool nari = nari_check(cl.pf, cl.frobenius);
    if (cl.type == 1) cl.verdict = Verdict::Symmetric;
    else if (nari) cl.verdict = Verdict::AlmostSymmetric;
    else cl.verdict = Verdict::NeitherSpecial;

    if (cl.verdict == Verdict::NeitherSpecial) return cl;
    auto fams = match_families(p.a, p.d, p.h, p.k, t, cl.type, nari);
    if (fams.empty() && p.d < 0 && p.h == 1) {
        // the family shapes are stated for the rewritten tuple
        Int a2 = p.a + Int(p.k) * p.d, d2 = -p.d;
        auto t2 = build_table(a2, d2, p.h, p.k, p.c);
        fams = match_families(a2, d2, p.h, p.k, t2, cl.type, nari);
        cl.via_normalization = !fams.empty();
    }
    if (!fams.empty()) {
        cl.family = fams.front().id;
        cl.solved = fams.front().solved;
        for (std::size_t i = 1; i < fams.size(); ++i) cl.ambiguous.push_back(fams[i].id);
    }
    return cl;
}

// ---------------------------------------------------------------------------
// fast path

namespace {

struct Row3 {
    Int s, p, r;
};

bool rows_ok(const Row3& x, const Row3& y, Int h, int k) {
    if (!(x.s > y.s && y.s >= 0 && x.p >= 0 && x.p < y.p)) return false;
    auto dx = decompose(x.s, k), dy = decompose(y.s, k);
    Int rpx = x.r + h * (dx.sigma + dx.ell), rpy = y.r + h * (dy.sigma + dy.ell);
    if (!(rpx > 0 && rpy <= 0)) return false;
    return rpx >= h || dx.rho == 0;
}

bool det_matches(const Row3& x, const Row3& y, Int a, Int d, Int c) {
    return x.s * y.p - y.s * x.p == a && y.p * x.r - x.p * y.r == d && y.s * x.r - x.s * y.r == c;
}

struct Roots {
    std::vector<Int> values;
    Int disc;
};

// integer roots of A P^2 + B P + C
Roots int_roots(Int A, Int B, Int C) {
    Roots out;
    out.disc = B * B - 4 * A * C;
    if (out.disc < 0) return out;
    Int q = isqrt(out.disc);
    if (q * q != out.disc) return out;
    for (Int num : {-B + q, -B - q}) {
        if (num % (2 * A) == 0) {
            Int v = num / (2 * A);
            if (std::find(out.values.begin(), out.values.end(), v) == out.values.end()) out.values.push_back(v);
        }
    }
    return out;
}

bool divides(Int den, Int num) { return den != 0 && num % den == 0; }

struct Ctx {
    Int a, d, h, c;
    int k;
    Int A(int i) const { return i == 0 ? a : h * a + Int(i) * d; }
    std::vector<FastHit> hits;

    void offer(const char* fam, Row3 x, Row3 y, Int F, int type, Solved s, Int disc) {
        if (rows_ok(x, y, h, k) && det_matches(x, y, a, d, c)) hits.push_back({fam, std::move(s), F, type, disc, false});
    }
};

void try_all(Ctx& g) {
    const Int a = g.a, d = g.d, h = g.h, c = g.c;
    const int k = g.k;
    const Int K = k, ak = g.A(k), a1 = g.A(1);

    // Thm5.1: closed form, F = kd
    if (h == 1 && a == K + 2 && d > 0 && d % 2 == 0 && k % 2 == 1) {
        Int r = (d - 2) / 2;
        g.offer("Thm5.1", {K + 1, 1, r}, {K, 2, -2}, K * d, k + 1, {{"p", 2}, {"sigma", 1}, {"r", r}}, 0);
    }
    // Thm5.2: sigma from c, p from a
    if (d < 0 && h >= 2 && (c - 1) % (h + K) == 0) {
        Int sg = (c - 1) / (h + K);
        if (sg >= 1 && divides(sg * K + 1, a + sg * K)) {
            Int P = (a + sg * K) / (sg * K + 1);
            if (P >= 2)
                g.offer("Thm5.2", {sg * K + 1, 1, -h * sg}, {sg * K, P, -h * sg - 1}, 3 * a1 - 2 * g.A(2) - ak,
                        k + 1, {{"p", P}, {"sigma", sg}, {"r", -h * sg}}, 0);
        }
    }
    // Thm5.3-(ii)
    {
        auto rt = int_roots(K * c, -(K * (c + a + a1) - 2 * ak), -ak * (a + 1) + K * (a + a1));
        for (Int P : rt.values) {
            if (P < 2 || !divides(K * (P - 1), a - 2 * P + 1)) continue;
            Int sg = (a - 2 * P + 1) / (K * (P - 1));
            if (sg < 1 || !divides(P, d - h * (sg + 1) - 1)) continue;
            Int r = (d - h * (sg + 1) - 1) / P;
            g.offer("Thm5.3-(ii)", {sg * K + 2, 1, r}, {sg * K + 1, P, -h * (sg + 1) - 1}, 2 * (P - 1) * c - 2 * a, 2,
                    {{"p", P}, {"sigma", sg}, {"r", r}}, rt.disc);
        }
    }
    // Thm5.3-(i), one equation per l
    if (h == 1) {
        for (int l = 1; l < k; ++l) {
            auto rt = int_roots(K * c, -(K * (c + g.A(l) - ak) - 2 * ak), -ak * (a + l) + K * g.A(l));
            for (Int P : rt.values) {
                if (P < 2 || !divides(K * (P - 1), a - 2 * P - K + l)) continue;
                Int sg = (a - 2 * P - K + l) / (K * (P - 1));
                if (sg < 2 || !divides(P, d - sg)) continue;
                Int r = (d - sg) / P;
                g.offer("Thm5.3-(i)", {sg * K + 2, 1, r}, {(sg - 1) * K + l, P, -sg},
                        2 * (P - 1) * c + g.A(k - l + 1) - a, k - l + 1, {{"l", l}, {"p", P}, {"sigma", sg}, {"r", r}},
                        rt.disc);
            }
        }
    }
    // Thm5.4-(i), one equation per l
    if (h == 1) {
        for (int l = 1; l + 3 <= k; ++l) {
            auto rt = int_roots(K * c, -(K * (c - a + g.A(l + 2)) - 2 * ak), -ak * (a - l));
            for (Int P : rt.values) {
                if (P < 2 || !divides(K * P, a - 2 * P - l)) continue;
                Int sg = (a - 2 * P - l) / (K * P);
                if (sg < 1 || !divides(P - 1, -(d + P * sg))) continue;
                Int r = -(d + P * sg) / (P - 1);
                g.offer("Thm5.4-(i)", {sg * K + l + 2, P - 1, -sg}, {l, P, r},
                        g.A(l + 3) + 2 * (a + c * (P - 1) - g.A(l + 2)) - a, l + 1,
                        {{"l", l}, {"p", P}, {"sigma", sg}, {"r", r}}, rt.disc);
            }
        }
    }
    // Thm5.4-(ii)
    {
        auto rt = int_roots(K * c, -(K * (c - a + ak) - 2 * ak), -ak * (a - K + 2));
        for (Int P : rt.values) {
            if (P < 2 || !divides(K * P, a + (K - 2) * (P - 1))) continue;
            Int sg = (a + (K - 2) * (P - 1)) / (K * P);
            Int num = P * (1 - h * sg) - d;
            if (sg < 2 || !divides(P - 1, num)) continue;
            Int r = num / (P - 1);
            g.offer("Thm5.4-(ii)", {sg * K, P - 1, 1 - sg * h}, {K - 2, P, r}, a1 + 2 * (a + c * (P - 1)) - ak - 2 * a,
                    k - 1, {{"p", P}, {"sigma", sg}, {"r", r}}, rt.disc);
        }
    }
    // Thm5.4-(iii)
    {
        auto rt = int_roots(K * c, -(K * (a1 + c - (h + 1) * a + ak) - 2 * ak), -ak * (a - K + 1));
        for (Int P : rt.values) {
            if (P < 2 || !divides(K * P, a + (K - 1) * (P - 1) - P)) continue;
            Int sg = (a + (K - 1) * (P - 1) - P) / (K * P);
            Int num = P * (1 - h * sg) - d;
            if (sg < 1 || !divides(P - 1, num)) continue;
            Int r = num / (P - 1);
            g.offer("Thm5.4-(iii)", {sg * K + 1, P - 1, 1 - h * sg}, {K - 1, P, r},
                    g.A(2) + 2 * ((h + 1) * a + c * (P - 1) - a1) - ak - 2 * a, k, {{"p", P}, {"sigma", sg}, {"r", r}},
                    rt.disc);
        }
    }
    // Thm5.4-(iv): linear in p
    if (h == 1) {
        Int P = a - K;
        if (P >= 2 && divides(P - 1, -(d + P))) {
            Int r = -(d + P) / (P - 1);
            g.offer("Thm5.4-(iv)", {K + 1, P - 1, -1}, {K, P, r}, c * (a - K - 1) - a, k + 1,
                    {{"p", P}, {"sigma", 1}, {"r", r}}, 0);
        }
    }
    // Thm5.4-(v)
    if (h == 1) {
        auto rt = int_roots(K * c, -(K * (c + d + 2 * ak) - 2 * ak), -ak * (a - 2 * K + 1));
        for (Int P : rt.values) {
            if (P < 2 || !divides(K * P, a + (2 * K - 1) * (P - 1) - P)) continue;
            Int sg = (a + (2 * K - 1) * (P - 1) - P) / (K * P);
            if (sg < 2 || !divides(P - 1, -(d + P * sg))) continue;
            Int r = -(d + P * sg) / (P - 1);
            g.offer("Thm5.4-(v)", {sg * K + 1, P - 1, -sg}, {2 * K - 1, P, r},
                    g.A(2) + 2 * (a + c * (P - 1) - a1) - 2 * ak - a, 2, {{"p", P}, {"sigma", sg}, {"r", r}}, rt.disc);
        }
    }
}

std::string describe(const FastHit& h) {
    std::string s = h.family;
    for (const auto& [key, v] : h.solved) s += " " + key + "=" + v.str();
    return s;
}

}  // namespace

std::vector<FastHit> fast_candidates(Int a, Int d, Int h, int k, Int c) {
    Ctx g{a, d, h, c, k, {}};
    if (k >= 3) try_all(g);
    return g.hits;
}

std::vector<FastHit> fast_candidates(const AagParams& p) {
    auto hits = fast_candidates(p.a, p.d, p.h, p.k, p.c);
    if (hits.empty() && p.d < 0 && p.h == 1) {
        hits = fast_candidates(p.a + Int(p.k) * p.d, -p.d, p.h, p.k, p.c);
        for (auto& x : hits) x.via_normalization = true;
    }
    return hits;
}

std::optional<Classification> fast_path(const AagParams& p, std::vector<std::string>* ambiguous) {
    auto hits = fast_candidates(p);
    if (hits.size() != 1) {
        if (hits.size() > 1 && ambiguous)
            for (const auto& x : hits) ambiguous->push_back(describe(x));
        return std::nullopt;
    }
    const auto& x = hits.front();
    Classification cl;
    cl.verdict = Verdict::AlmostSymmetric;
    cl.family = x.family;
    cl.solved = x.solved;
    cl.type = x.type;
    cl.frobenius = x.frobenius;
    cl.fast_path_used = true;
    cl.hypothesis_ok = true;
    cl.via_normalization = x.via_normalization;
    return cl;
}

// ---------------------------------------------------------------------------
// family synthesis

const std::vector<std::string>& family_ids() {
    static const std::vector<std::string> ids = {
        "Thm4.1-case1", "Thm4.1-case2", "Thm4.1-case3", "Thm4.1-case4", "Thm5.1",      "Thm5.2",     "Thm5.3-(i)",
        "Thm5.3-(ii)",  "Thm5.4-(i)",   "Thm5.4-(ii)",  "Thm5.4-(iii)", "Thm5.4-(iv)", "Thm5.4-(v)",
    };
    return ids;
}

namespace {

Int need(const std::optional<Int>& v, const char* name) {
    if (!v) throw Error(ErrorCode::FamilyConstraintViolated, std::string("missing parameter ") + name);
    return *v;
}

void require(bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::FamilyConstraintViolated, what);
}

}  // namespace

AagParams family_generate(std::string_view id, const FamilyInput& in, const oracle::Limits& lim) {
    const int k = in.k;
    const Int K = k, h = in.h;
    require(k >= 3, "k >= 3");
    require(h >= 1, "h >= 1");
    Row3 x, y;

    if (id == "Thm4.1-case1") {
        Int sg = need(in.sigma, "sigma"), p = need(in.p, "p"), pp = need(in.p_prime, "p_prime");
        Int r = need(in.r, "r"), rh = need(in.r_hat, "r_hat");
        require(sg >= 1 && p >= 1 && p < pp && rh < -1 && gcd(pp, rh) == 1 && r + h * sg > 0,
                "sigma>=1, 1<=p<p', r_hat<-1, gcd(p',r_hat)=1, r+h*sigma>0");
        x = {sg * K + 2, p, r};
        y = {0, pp, rh};
    } else if (id == "Thm4.1-case2") {
        Int sg = need(in.sigma, "sigma"), sg2 = need(in.sigma_prime, "sigma_prime");
        Int p = need(in.p, "p"), pp = need(in.p_prime, "p_prime"), r = need(in.r, "r");
        require(sg >= sg2 && sg2 >= 2 && pp > p && p > 0 && r + h * (sg + 1) > 0,
                "sigma>=sigma'>=2, p'>p>0, r+h(sigma+1)>0");
        x = {sg * K + 2, p, r};
        y = {sg2 * K, pp, -h * sg2};
    } else if (id == "Thm4.1-case3") {
        Int sg = need(in.sigma, "sigma"), p = need(in.p, "p"), pp = need(in.p_prime, "p_prime");
        Int r = need(in.r, "r");
        require(sg >= 1 && pp > p && p > 0 && r + h * (sg + 1) > 0, "sigma>=1, p'>p>0, r+h(sigma+1)>0");
        x = {sg * K + 2, p, r};
        y = {sg * K + 1, pp, -h * (sg + 1)};
    } else if (id == "Thm4.1-case4") {
        Int sg = need(in.sigma, "sigma"), p = need(in.p, "p"), pp = need(in.p_prime, "p_prime");
        Int rh = need(in.r_hat, "r_hat");
        require(sg >= 1 && pp > p && p > 0 && rh < -h, "sigma>=1, p'>p>0, r_hat<-h");
        x = {sg * K + 1, p, -h * sg};
        y = {K - 1, pp, rh};
    } else if (id == "Thm5.1") {
        Int d = need(in.d, "d");
        require(h == 1 && k % 2 == 1 && d > 0 && d % 2 == 0, "h=1, k odd, d even and positive");
        x = {K + 1, 1, (d - 2) / 2};
        y = {K, 2, -2};
    } else if (id == "Thm5.2") {
        Int sg = need(in.sigma, "sigma"), p = need(in.p, "p");
        require(h >= 2 && sg >= 1 && p >= 2, "h>=2, sigma>=1, p>=2");
        x = {sg * K + 1, 1, -h * sg};
        y = {sg * K, p, -h * sg - 1};
    } else if (id == "Thm5.3-(i)") {
        Int sg = need(in.sigma, "sigma"), p = need(in.p, "p"), r = need(in.r, "r"), l = need(in.l, "l");
        // r > -(sigma+1) keeps r'_mu positive; see the notes on the sign
        require(h == 1 && l >= 1 && l <= K - 1 && p >= 2 && sg >= 2 && r > -(sg + 1),
                "h=1, 1<=l<=k-1, p,sigma>=2, r>-(sigma+1)");
        x = {sg * K + 2, 1, r};
        y = {(sg - 1) * K + l, p, -sg};
    } else if (id == "Thm5.3-(ii)") {
        Int sg = need(in.sigma, "sigma"), p = need(in.p, "p"), r = need(in.r, "r");
        require(sg >= 1 && p >= 2 && r > -h * (sg + 1) - 1, "sigma>=1, p>=2, r>-h(sigma+1)-1");
        x = {sg * K + 2, 1, r};
        y = {sg * K + 1, p, -h * (sg + 1) - 1};
    } else if (id == "Thm5.4-(i)") {
        Int sg = need(in.sigma, "sigma"), p = need(in.p, "p"), r = need(in.r, "r"), l = need(in.l, "l");
        require(h == 1 && k >= 4 && sg >= 1 && l >= 1 && l <= K - 3 && p >= 1 && r < -sg,
                "h=1, k>=4, sigma>=1, 1<=l<=k-3, p>=1, r<-sigma");
        x = {sg * K + l + 2, p, -sg};
        y = {l, p + 1, r};
    } else if (id == "Thm5.4-(ii)") {
        Int sg = need(in.sigma, "sigma"), p = need(in.p, "p"), r = need(in.r, "r");
        require(p >= 1 && sg >= 2 && r < -h, "p>=1, sigma>=2, r<-h");
        x = {sg * K, p, 1 - sg * h};
        y = {K - 2, p + 1, r};
    } else if (id == "Thm5.4-(iii)") {
        Int sg = need(in.sigma, "sigma"), p = need(in.p, "p"), r = need(in.r, "r");
        require(p >= 1 && sg >= 1 && r < std::min(-h, 1 - h * sg), "p,sigma>=1, r<min(-h,1-h*sigma)");
        x = {sg * K + 1, p, 1 - h * sg};
        y = {K - 1, p + 1, r};
    } else if (id == "Thm5.4-(iv)") {
        Int p = need(in.p, "p"), r = need(in.r, "r");
        require(h == 1 && p >= 1 && r < -1, "h=1, p>=1, r<-1");
        x = {K + 1, p, -1};
        y = {K, p + 1, r};
    } else if (id == "Thm5.4-(v)") {
        Int sg = need(in.sigma, "sigma"), p = need(in.p, "p"), r = need(in.r, "r");
        require(h == 1 && sg >= 2 && p >= 1 && r < -sg, "h=1, sigma>=2, p>=1, r<-sigma");
        x = {sg * K + 1, p, -sg};
        y = {2 * K - 1, p + 1, r};
    } else {
        throw Error(ErrorCode::UnknownFamily, "unknown family " + std::string(id));
    }

    // determinant identities of consecutive rows
    Int a = x.s * y.p - y.s * x.p;
    Int d = y.p * x.r - x.p * y.r;
    Int c = y.s * x.r - x.s * y.r;
    ValidateOptions vo;
    vo.normalize = false;
    vo.limits = lim;
    auto params = validate_params(a, d, h, K, c, vo);

    // the families only speak about tuples under the standing hypothesis,
    // with the two rows above sitting at (mu, mu+1)
    const auto t = build_table(params);
    if (!t.hypothesis_ok)
        throw Error(ErrorCode::HypothesisViolated, "generated tuple has r'_mu < h and rho_mu != 0");
    const auto &m = t.pivot(), &n = t.next();
    if (m.s != x.s || m.p != x.p || m.r != x.r || n.s != y.s || n.p != y.p || n.r != y.r)
        throw Error(ErrorCode::FamilyConstraintViolated, "family rows are not the rows mu, mu+1 of the table");
    return params;
}

}  // namespace aag
