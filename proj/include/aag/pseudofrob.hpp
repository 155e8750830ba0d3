#pragma once

#include <string>
#include <vector>

#include "aag/staircase.hpp"

namespace aag {

struct PfResult {
    // x_{k+1} exponent p_{mu+1} - 1
    std::vector<Monomial> pf1;
    // x_{k+1} exponent p_{mu+1} - p_mu - 1
    std::vector<Monomial> pf2;
    std::vector<Int> pf_numbers;  // sorted phi(M) - a
    int type = 0;
    Monomial frob_monomial;
    std::string clause1, clause2;  // e.g. "2b", "7i"

    std::string trace() const { return "PF1: clause " + clause1 + "; PF2: clause " + clause2; }
};

// Case analysis on the rows mu, mu+1. Throws HypothesisViolated,
// InternalDispatchGap, DuplicatePfValue.
PfResult pf_tilde(const AagParams& p, const EuclidTable& t);

// sorted phi(M) - a over pf1 u pf2 and its size
struct PfNumbers {
    std::vector<Int> numbers;
    int type = 0;
};
PfNumbers pf_numbers_and_type(const PfResult& r, const AagParams& p);

}  // namespace aag
