#pragma once

#include <optional>
#include <vector>

#include "aag/core.hpp"

namespace aag {

// s = sigma*k + ell*rho, 0 <= rho < k, ell = (rho != 0)
struct Decomp {
    Int sigma, rho, ell;
    friend bool operator==(const Decomp&, const Decomp&) = default;
};

Decomp decompose(Int s, int k);

struct EuclidRow {
    int index = 0;
    Int s, p, r;
    std::optional<Int> q;  // absent for rows 0 and 1
    Int sigma, rho, ell;
    Int r_prime;  // r + h(sigma + ell)
};

struct EuclidTable {
    std::vector<EuclidRow> rows;
    int mu = -1;
    Int tilde_sigma, tilde_rho, tilde_ell, tilde_r;
    bool hypothesis_ok = false;

    const EuclidRow& pivot() const { return rows[static_cast<std::size_t>(mu)]; }
    const EuclidRow& next() const { return rows[static_cast<std::size_t>(mu) + 1]; }
};

// Negative-remainder Euclid on (a, d, c). Needs gcd(a, d) = 1 and a > 0; the
// other validity conditions are not required, which lets the fast path and
// the tests build tables for raw tuples.
EuclidTable build_table(Int a, Int d, Int h, int k, Int c);
inline EuclidTable build_table(const AagParams& p) { return build_table(p.a, p.d, p.h, p.k, p.c); }

// r'_mu >= h or rho_mu = 0
bool hypothesis_holds(const EuclidTable& t, Int h);

// tilde decomposition of s_i - s_{i+1} and r~_i for an arbitrary consecutive pair
struct TildePair {
    Decomp dec;
    Int dp;       // p_{i+1} - p_i
    Int r_tilde;  // r_i - r_{i+1} + h(sigma~ + ell~)
};
TildePair tilde_pair(const EuclidTable& t, std::size_t i, Int h, int k);

}  // namespace aag
