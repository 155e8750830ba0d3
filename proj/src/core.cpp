#include "aag/core.hpp"

#include <algorithm>

namespace aag {

std::vector<Int> aag_generators(Int a, Int d, Int h, int k, Int c) {
    std::vector<Int> g;
    g.reserve(static_cast<std::size_t>(k) + 2);
    g.push_back(a);
    for (int i = 1; i <= k; ++i) g.push_back(h * a + Int(i) * d);
    g.push_back(c);
    return g;
}

oracle::Gens AagParams::gens64() const {
    oracle::Gens out;
    out.reserve(generators.size());
    for (auto g : generators) out.push_back(g.to_i64());
    return out;
}

namespace {

struct Prepared {
    Int a, d, h, c;
    int k;
    bool normalized;
};

Prepared precheck(Int a, Int d, Int h, Int k, Int c, bool normalize) {
    if (k <= 0) throw Error(ErrorCode::NonsenseInput, "k must be positive");
    if (k > kMaxK) throw Error(ErrorCode::NonsenseInput, "k too large");
    if (d == 0) throw Error(ErrorCode::NonsenseInput, "d must be nonzero");
    if (a <= 0 || h <= 0 || c <= 0)
        throw Error(ErrorCode::NonsenseInput, "a, h and c must be positive");
    int kk = static_cast<int>(k.to_i64());

    if (h * a + k * d <= 0)
        throw Error(ErrorCode::NonPositiveGenerator, "ha+kd=" + (h * a + k * d).str() + " is not positive");
    Int g = gcd(a, d);
    if (g != 1) throw Error(ErrorCode::GcdViolation, "gcd(a,d)=" + g.str());

    bool norm = false;
    if (normalize && d < 0 && h == 1) {
        // same semigroup, generators listed from the other end
        a = a + k * d;
        d = -d;
        norm = true;
    }
    return {a, d, h, c, kk, norm};
}

AagParams finish(const Prepared& pr) {
    AagParams p;
    p.a = pr.a;
    p.d = pr.d;
    p.h = pr.h;
    p.c = pr.c;
    p.k = pr.k;
    p.normalized = pr.normalized;
    p.generators = aag_generators(pr.a, pr.d, pr.h, pr.k, pr.c);
    Int g = 0;
    for (auto x : p.generators) g = gcd(g, x);
    if (g != 1) throw Error(ErrorCode::GcdViolation, "gcd of generators=" + g.str());
    return p;
}

}  // namespace

AagParams validate_params(Int a, Int d, Int h, Int k, Int c, const ValidateOptions& opt) {
    AagParams p = finish(precheck(a, d, h, k, c, opt.normalize));
    if (opt.check_minimal) {
        if (!p.a.fits_i64() || p.a > opt.limits.max_modulus)
            throw Error(ErrorCode::ModulusTooLarge, "a=" + p.a.str() + " exceeds the oracle cap");
        auto gens = p.gens64();
        if (!oracle::is_minimal_generating(gens, oracle::apery(gens, gens[0], opt.limits)))
            throw Error(ErrorCode::NotMinimal, "embedding dimension is less than k+2");
    }
    return p;
}

AagParams validate_params_with(Int a, Int d, Int h, Int k, Int c, const oracle::AperyMap& ap) {
    AagParams p = finish(precheck(a, d, h, k, c, false));
    if (!oracle::is_minimal_generating(p.gens64(), ap))
        throw Error(ErrorCode::NotMinimal, "embedding dimension is less than k+2");
    return p;
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
    Monomial r = x;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] += y.e[i];
    return r;
}

Int phi(const Monomial& m, const AagParams& p) {
    if (m.e.size() != p.generators.size())
        throw Error(ErrorCode::NonsenseInput, "monomial has the wrong number of variables");
    Int s = 0;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] < 0) throw Error(ErrorCode::NonsenseInput, "negative exponent");
        if (m.e[i]) s += Int(m.e[i]) * p.generators[i];
    }
    return s;
}

std::string to_string(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (!m.e[i]) continue;
        if (!s.empty()) s += '*';
        s += 'x' + std::to_string(i);
        if (m.e[i] > 1) s += '^' + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace aag
