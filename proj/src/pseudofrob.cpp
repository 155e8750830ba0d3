#include "aag/pseudofrob.hpp"

#include <algorithm>

namespace aag {

namespace {

// monomials x_i x_k^alpha x_{k+1}^z for i in [lo, hi]; i = 0 means no x_i,
// i = k folds into the x_k power
void emit(std::vector<Monomial>& out, Int lo, Int hi, Int alpha, Int z, int k) {
    if (lo > hi) return;
    if (alpha < 0 || z < 0 || lo < 0 || hi > k)
        throw Error(ErrorCode::InternalDispatchGap, "pseudo-Frobenius exponent out of range");
    for (Int i = lo; i <= hi; ++i) {
        Monomial m(k);
        if (i > 0) m[static_cast<int>(i.to_i64())] += 1;
        m[k] += alpha.to_i64();
        m[k + 1] = z.to_i64();
        out.push_back(std::move(m));
    }
}

}  // namespace

PfResult pf_tilde(const AagParams& p, const EuclidTable& t) {
    if (!hypothesis_holds(t, p.h))
        throw Error(ErrorCode::HypothesisViolated, "need r'_mu >= h or rho_mu = 0");
    const int k = p.k;
    const auto& m = t.pivot();
    const auto& n = t.next();
    const Int h = p.h;
    const Int z1 = n.p - 1, z2 = n.p - m.p - 1;
    const Int ts = t.tilde_sigma, tr = t.tilde_rho;
    const Int s1 = n.s, sm = m.s;

    PfResult r;

    // family 1, keyed on r'_{mu+1}
    if (n.r_prime == 0) {
        if (n.rho == 0) r.clause1 = "1a";
        else if (tr == 0) {
            r.clause1 = "1b";
            emit(r.pf1, 1, k - n.rho, ts - 1, z1, k);
        } else if (tr == 1 && ts == 0) r.clause1 = "1c";
        else if (tr == 1) {
            r.clause1 = "1d";
            emit(r.pf1, 1, k - n.rho, ts - 1, z1, k);
        } else {
            r.clause1 = "1e";
            emit(r.pf1, 1, std::min(tr - 1, k - n.rho), ts, z1, k);
        }
    } else {
        if (tr == 0) {
            r.clause1 = "2a";
            emit(r.pf1, 1, k - 1, ts - 1, z1, k);
        } else if (tr == 1 && ts == 0) {
            r.clause1 = "2b";
            emit(r.pf1, 0, 0, 0, z1, k);
        } else if (tr == 1) {
            r.clause1 = "2c";
            emit(r.pf1, 1, k, ts - 1, z1, k);
        } else {
            r.clause1 = "2d";
            emit(r.pf1, 1, tr - 1, ts, z1, k);
        }
    }

    // family 2, keyed on s_{mu+1} and rho_mu
    if (s1 == 0) r.clause2 = "3";
    else if (m.rho == 0) {
        if (s1 >= k - 1) {
            r.clause2 = "4i";
            emit(r.pf2, 1, k - 1, m.sigma - 1, z2, k);
        } else {
            r.clause2 = "4ii";
            emit(r.pf2, tr, k - 1, m.sigma - 1, z2, k);
        }
    } else if (m.rho == 1 && m.r_prime > h) {
        if (s1 >= k) {
            r.clause2 = "5i";
            emit(r.pf2, 1, k, m.sigma - 1, z2, k);
        } else if (s1 > 1) {
            r.clause2 = "5ii";
            emit(r.pf2, tr, k, m.sigma - 1, z2, k);
        } else {
            r.clause2 = "5iii";
            emit(r.pf2, 0, 0, m.sigma, z2, k);
        }
    } else if (m.rho == 1 && m.r_prime == h) {
        if (sm - s1 == 1) {
            r.clause2 = "6i";
            emit(r.pf2, 1, k, m.sigma - 1, z2, k);
        } else if (sm - s1 <= sm - k) {
            r.clause2 = "6ii";
            emit(r.pf2, 1, 1, m.sigma - 1, z2, k);
        } else r.clause2 = "6iii";
    } else if (m.rho > 1) {
        if (s1 >= m.rho - 1) {
            r.clause2 = "7i";
            emit(r.pf2, 1, m.rho - 1, m.sigma, z2, k);
        } else {
            r.clause2 = "7ii";
            emit(r.pf2, tr, m.rho - 1, m.sigma, z2, k);
        }
    } else {
        throw Error(ErrorCode::InternalDispatchGap, "no pseudo-Frobenius clause for family 2");
    }

    auto nums = pf_numbers_and_type(r, p);
    r.pf_numbers = nums.numbers;
    r.type = nums.type;
    if (r.type == 0) throw Error(ErrorCode::InternalDispatchGap, "empty pseudo-Frobenius set");

    Int best = -1;
    for (const auto* fam : {&r.pf1, &r.pf2})
        for (const auto& mono : *fam) {
            Int w = phi(mono, p);
            if (w > best) {
                best = w;
                r.frob_monomial = mono;
            }
        }
    return r;
}

PfNumbers pf_numbers_and_type(const PfResult& r, const AagParams& p) {
    PfNumbers out;
    for (const auto* fam : {&r.pf1, &r.pf2})
        for (const auto& mono : *fam) out.numbers.push_back(phi(mono, p) - p.a);
    std::sort(out.numbers.begin(), out.numbers.end());
    if (std::adjacent_find(out.numbers.begin(), out.numbers.end()) != out.numbers.end())
        throw Error(ErrorCode::DuplicatePfValue, "two pseudo-Frobenius monomials share a weight");
    out.type = static_cast<int>(out.numbers.size());
    return out;
}

}  // namespace aag
