#include "aag/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "aag/error.hpp"

namespace aag::oracle {

Limits limits_from_env() {
    Limits lim;
    if (const char* s = std::getenv("AAG_MAX_A")) {
        char* end = nullptr;
        long long v = std::strtoll(s, &end, 10);
        if (end != s && *end == '\0' && v > 0) lim.max_modulus = v;
    }
    return lim;
}

namespace {

void check_gens(const Gens& gens) {
    if (gens.empty()) throw Error(ErrorCode::NonsenseInput, "empty generator list");
    std::int64_t g = 0;
    for (auto x : gens) {
        if (x <= 0) throw Error(ErrorCode::NonsenseInput, "generators must be positive");
        g = std::gcd(g, x);
    }
    if (g != 1) throw Error(ErrorCode::NotCoprime, "generators have gcd " + std::to_string(g));
}

}  // namespace

AperyMap apery(const Gens& gens, std::int64_t modulus, const Limits& lim) {
    check_gens(gens);
    if (std::find(gens.begin(), gens.end(), modulus) == gens.end())
        throw Error(ErrorCode::NonsenseInput, "modulus must be one of the generators");
    if (modulus > lim.max_modulus)
        throw Error(ErrorCode::ModulusTooLarge,
                    "oracle modulus " + std::to_string(modulus) + " exceeds cap " +
                        std::to_string(lim.max_modulus));
    std::int64_t gmax = *std::max_element(gens.begin(), gens.end());
    // every shortest path uses fewer than `modulus` edges
    if (gmax > std::numeric_limits<std::int64_t>::max() / 4 / modulus)
        throw Error(ErrorCode::Overflow, "oracle path lengths may exceed 64 bits");

    // edges: distinct residues only, keeping the lightest generator per residue
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;  // (residue, weight)
    for (auto g : gens) {
        std::int64_t r = g % modulus;
        if (r == 0) continue;
        auto it = std::find_if(edges.begin(), edges.end(), [&](auto& e) { return e.first == r; });
        if (it == edges.end()) edges.emplace_back(r, g);
        else it->second = std::min(it->second, g);
    }

    const auto m = static_cast<std::size_t>(modulus);
    constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();
    AperyMap ap;
    ap.modulus = modulus;
    ap.w.assign(m, inf);
    ap.w[0] = 0;

    // Round robin (Boecker-Liptak): adding one generator g at a time, each
    // residue cycle of +g is relaxed in a single lap starting from its minimum.
    for (auto [r, g] : edges) {
        const auto step = static_cast<std::size_t>(r);
        const std::size_t cycles = std::gcd(step, m), len = m / cycles;
        for (std::size_t c0 = 0; c0 < cycles; ++c0) {
            std::size_t q = c0, best = c0;
            for (std::size_t j = 1; j < len; ++j) {
                q += step;
                if (q >= m) q -= m;
                if (ap.w[q] < ap.w[best]) best = q;
            }
            if (ap.w[best] == inf) continue;
            q = best;
            for (std::size_t j = 1; j < len; ++j) {
                std::size_t nxt = q + step;
                if (nxt >= m) nxt -= m;
                ap.w[nxt] = std::min(ap.w[nxt], ap.w[q] + g);
                q = nxt;
            }
        }
    }
    return ap;
}

AperyMap apery_dijkstra(const Gens& gens, std::int64_t modulus) {
    check_gens(gens);
    const auto m = static_cast<std::size_t>(modulus);
    constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max();
    AperyMap ap;
    ap.modulus = modulus;
    ap.w.assign(m, inf);
    ap.w[0] = 0;
    using Item = std::pair<std::int64_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.emplace(0, 0);
    while (!pq.empty()) {
        auto [dist, node] = pq.top();
        pq.pop();
        if (dist != ap.w[node]) continue;
        for (auto g : gens) {
            std::size_t nxt = (node + static_cast<std::size_t>(g % modulus)) % m;
            if (dist + g < ap.w[nxt]) {
                ap.w[nxt] = dist + g;
                pq.emplace(dist + g, nxt);
            }
        }
    }
    return ap;
}

AperyMap apery(const Gens& gens, const Limits& lim) {
    check_gens(gens);
    return apery(gens, *std::min_element(gens.begin(), gens.end()), lim);
}

std::int64_t frobenius(const AperyMap& ap) {
    return *std::max_element(ap.w.begin(), ap.w.end()) - ap.modulus;
}

// w is maximal in Ap w.r.t. <=_S iff no w + g (g a generator other than the
// modulus) is again an Apery element
std::vector<std::int64_t> pf(const AperyMap& ap, const Gens& gens) {
    std::vector<std::int64_t> out;
    const std::int64_t m = ap.modulus;
    for (std::int64_t res = 0; res < m; ++res) {
        std::int64_t w = ap.w[static_cast<std::size_t>(res)];
        bool maximal = true;
        for (auto g : gens) {
            if (g == m) continue;
            std::int64_t v = w + g;
            if (v == ap.w[static_cast<std::size_t>(v % m)]) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(w - m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t genus(const AperyMap& ap) {
    std::int64_t g = 0;
    for (auto w : ap.w) g += w / ap.modulus;
    return g;
}

bool nari(const std::vector<std::int64_t>& f) {
    const std::size_t t = f.size();
    if (t <= 1) return true;
    const std::int64_t F = f.back();
    for (std::size_t i = 0; i + 1 < t; ++i)
        if (f[i] + f[t - 2 - i] != F) return false;
    return true;
}

bool membership(std::int64_t n, const Gens& gens, const Limits& lim) {
    return apery(gens, lim).contains(n);
}

std::int64_t genus(const Gens& gens, const Limits& lim) { return genus(apery(gens, lim)); }

std::vector<std::int64_t> pf(const Gens& gens, const Limits& lim) {
    return pf(apery(gens, lim), gens);
}

// g_j is redundant iff g_j - g_i lies in S for some i != j; a single map of
// the whole set answers all of these
bool is_minimal_generating(const Gens& gens, const AperyMap& ap) {
    for (std::size_t j = 0; j < gens.size(); ++j)
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (i != j && ap.contains(gens[j] - gens[i])) return false;
    return true;
}

bool is_minimal_generating(const Gens& gens, const Limits& lim) {
    return is_minimal_generating(gens, apery(gens, lim));
}

bool almost_symmetric(const Gens& gens, const Limits& lim) { return nari(pf(gens, lim)); }

Report report(const Gens& gens, const Limits& lim) {
    Report r;
    r.generators = gens;
    std::sort(r.generators.begin(), r.generators.end());
    r.apery = apery(r.generators, lim);
    r.frobenius = frobenius(r.apery);
    r.pf = pf(r.apery, r.generators);
    r.type = static_cast<int>(r.pf.size());
    r.genus = genus(r.apery);
    r.symmetric = r.type == 1;
    r.almost_symmetric = nari(r.pf);
    return r;
}

}  // namespace aag::oracle
