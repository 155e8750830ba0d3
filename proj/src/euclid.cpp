#include "aag/euclid.hpp"

namespace aag {

Decomp decompose(Int s, int k) {
    if (s < 0 || k < 1) throw Error(ErrorCode::NonsenseInput, "decompose needs s >= 0, k >= 1");
    Int q = s / k, m = s % k;
    if (m == 0) return {q, 0, 0};
    return {q, m, 1};
}

namespace {

EuclidRow make_row(int idx, Int s, Int p, Int r, std::optional<Int> q, Int h, int k) {
    EuclidRow row;
    row.index = idx;
    row.s = s;
    row.p = p;
    row.r = r;
    row.q = q;
    auto dec = decompose(s, k);
    row.sigma = dec.sigma;
    row.rho = dec.rho;
    row.ell = dec.ell;
    row.r_prime = r + h * (dec.sigma + dec.ell);
    return row;
}

}  // namespace

EuclidTable build_table(Int a, Int d, Int h, int k, Int c) {
    if (a <= 0) throw Error(ErrorCode::NonsenseInput, "a must be positive");
    if (gcd(a, d) != 1) throw Error(ErrorCode::GcdViolation, "gcd(a,d) != 1");

    EuclidTable t;
    // q = 2 runs make the table up to a rows long
    t.rows.reserve(a.fits_i64() && a < 1 << 20 ? static_cast<std::size_t>(a.to_i64()) + 2 : 64);
    t.rows.push_back(make_row(0, a, 0, d, std::nullopt, h, k));

    // s1 d = c (mod a), smallest nonnegative
    Int s1 = a == 1 ? Int(0) : mod_floor(c * mod_inverse(d, a), a);
    Int num = s1 * d - c;
    if (mod_floor(num, a) != 0) throw Error(ErrorCode::NoPivot, "row 1 does not solve s d - p c = r a");
    t.rows.push_back(make_row(1, s1, 1, num / a, std::nullopt, h, k));

    while (t.rows.back().s != 0) {
        const auto& prev = t.rows[t.rows.size() - 2];
        const auto& cur = t.rows.back();
        Int q = ceil_div(prev.s, cur.s);
        Int s = q * cur.s - prev.s;
        Int p = q * cur.p - prev.p;
        Int r = q * cur.r - prev.r;
        t.rows.push_back(make_row(static_cast<int>(t.rows.size()), s, p, r, q, h, k));
    }

    for (std::size_t i = 0; i + 1 < t.rows.size(); ++i) {
        if (t.rows[i].r_prime > 0 && t.rows[i + 1].r_prime <= 0) {
            t.mu = static_cast<int>(i);
            break;
        }
    }
    if (t.mu < 0) throw Error(ErrorCode::NoPivot, "no row with r'_i > 0 >= r'_{i+1}");

    auto tp = tilde_pair(t, static_cast<std::size_t>(t.mu), h, k);
    t.tilde_sigma = tp.dec.sigma;
    t.tilde_rho = tp.dec.rho;
    t.tilde_ell = tp.dec.ell;
    t.tilde_r = tp.r_tilde;
    t.hypothesis_ok = hypothesis_holds(t, h);
    return t;
}

bool hypothesis_holds(const EuclidTable& t, Int h) {
    const auto& row = t.pivot();
    return row.r_prime >= h || row.rho == 0;
}

TildePair tilde_pair(const EuclidTable& t, std::size_t i, Int h, int k) {
    const auto& x = t.rows[i];
    const auto& y = t.rows[i + 1];
    TildePair tp;
    tp.dec = decompose(x.s - y.s, k);
    tp.dp = y.p - x.p;
    tp.r_tilde = x.r - y.r + h * (tp.dec.sigma + tp.dec.ell);
    return tp;
}

}  // namespace aag
