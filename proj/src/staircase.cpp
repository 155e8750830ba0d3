#include "aag/staircase.hpp"

namespace aag {

Monomial point_to_monomial(StandardPoint pt, int k) {
    if (pt.y < 0 || pt.z < 0) throw Error(ErrorCode::NonsenseInput, "negative plane coordinate");
    Monomial m(k);
    std::int64_t alpha = pt.y / k, i = pt.y - alpha * k;
    if (i > 0) m[static_cast<int>(i)] = 1;
    m[k] = alpha;
    m[k + 1] = pt.z;
    return m;
}

StandardPoint monomial_to_point(const Monomial& m, int k) {
    if (m.k() != k) throw Error(ErrorCode::NotStandardForm, "wrong number of variables");
    if (m[0] != 0) throw Error(ErrorCode::NotStandardForm, "x0 present");
    int i = 0;
    for (int v = 1; v < k; ++v) {
        if (m[v] == 0) continue;
        if (m[v] > 1 || i != 0) throw Error(ErrorCode::NotStandardForm, "not of shape L_i x_k^a x_{k+1}^z");
        i = v;
    }
    return {m[k] * k + i, m[k + 1]};
}

Int phi_point(StandardPoint pt, const AagParams& p) {
    std::int64_t alpha = pt.y / p.k, i = pt.y - alpha * p.k;
    Int w = Int(alpha) * p.gen(p.k) + Int(pt.z) * p.c;
    if (i > 0) w += p.gen(static_cast<int>(i));
    return w;
}

Int AperySet::size() const {
    return Int(split()) * Int(p_next) + Int(s_next) * Int(p_next - p_mu);
}

bool AperySet::contains(StandardPoint pt) const {
    if (pt.y < 0 || pt.z < 0 || pt.y >= s_mu) return false;
    return pt.z < (pt.y < split() ? p_next : p_next - p_mu);
}

std::vector<StandardPoint> AperySet::points() const {
    std::vector<StandardPoint> out;
    for_each([&](StandardPoint pt) { out.push_back(pt); });
    return out;
}

AperySet apery_set(const AagParams& p, const EuclidTable& t) {
    if (!hypothesis_holds(t, p.h))
        throw Error(ErrorCode::HypothesisViolated, "need r'_mu >= h or rho_mu = 0");
    AperySet ap;
    ap.s_mu = t.pivot().s.to_i64();
    ap.s_next = t.next().s.to_i64();
    ap.p_mu = t.pivot().p.to_i64();
    ap.p_next = t.next().p.to_i64();
    return ap;
}

Int frobenius(const AagParams& p, const EuclidTable& t) {
    auto ap = apery_set(p, t);
    // z is always maximal on a rectangle's top row since c > 0; scan every y
    Int best = -1;
    for (std::int64_t y = 0; y < ap.s_mu; ++y) {
        std::int64_t zmax = y < ap.split() ? ap.p_next : ap.p_next - ap.p_mu;
        if (zmax <= 0) continue;
        Int w = phi_point({y, zmax - 1}, p);
        if (w > best) best = w;
    }
    return best - p.a;
}

const char* to_string(Region r) noexcept {
    switch (r) {
        case Region::U: return "U";
        case Region::V: return "V";
        case Region::W: return "W";
        case Region::Standard: return "Standard";
    }
    return "?";
}

Region initial_region(StandardPoint pt, const EuclidTable& t) {
    const Int sm = t.pivot().s, sn = t.next().s, pm = t.pivot().p, pn = t.next().p;
    const Int y = pt.y, z = pt.z;
    if (y < sm - sn && z >= pn) return Region::U;
    if (y >= sm - sn && z >= pn - pm) return Region::V;
    if (y >= sm && z < pn - pm) return Region::W;
    return Region::Standard;
}

}  // namespace aag
