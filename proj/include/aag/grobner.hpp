#pragma once

#include <string>
#include <vector>

#include "aag/staircase.hpp"

namespace aag {

enum class BinomialFamily { A, B, C, D, Row, Tilde };
const char* to_string(BinomialFamily f) noexcept;

struct Binomial {
    Monomial lead, tail;
    BinomialFamily family = BinomialFamily::A;
};

std::string to_string(const Binomial& b);  // "x1*x20 - x0^7*x21 [B]"

// Weighted degrevlex with x0 < x1 < ... < x_{k+1}: compare phi, then the
// smallest variable where the exponents differ; more of it means smaller.
int compare_weighted_degrevlex(const Monomial& x, const Monomial& y, const AagParams& p);

// phi(lead) == phi(tail)
bool kernel_check(const Binomial& b, const AagParams& p);

std::vector<Binomial> family_A(const AagParams& p);
std::vector<Binomial> family_B(const AagParams& p, const EuclidTable& t);
std::vector<Binomial> family_C(const AagParams& p, const EuclidTable& t);
std::vector<Binomial> family_D(const AagParams& p, const EuclidTable& t);
std::vector<Binomial> families_BCD(const AagParams& p, const EuclidTable& t);
std::vector<Binomial> basis(const AagParams& p, const EuclidTable& t);  // A u B u C u D

// one binomial per consecutive pair of rows (i, i+1), i = 0..m
std::vector<Binomial> tilde_binomials(const EuclidTable& t, const AagParams& p);
// one binomial per row from s d - p c = r a, dispatched on the signs of p, r'
std::vector<Binomial> row_binomials(const EuclidTable& t, const AagParams& p);

struct Certificate {
    bool ok = false;
    bool kernel_ok = false;
    bool leads_consistent = false;  // the written-first monomial is the larger one
    std::int64_t standard_count = 0;
    bool matches_apery = false;
    std::string detail;
};

// Counts plane monomials outside the ideal generated by the leading terms
// and compares them with the two-rectangle Apery set.
// invert_order flips the term order (harness self-test only).
Certificate certify(const AagParams& p, const EuclidTable& t, const std::vector<Binomial>& g,
                    bool invert_order = false);
inline bool certify_basis(const AagParams& p, const EuclidTable& t) {
    return certify(p, t, basis(p, t)).ok;
}

}  // namespace aag
