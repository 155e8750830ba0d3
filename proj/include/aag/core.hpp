#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aag/error.hpp"
#include "aag/oracle.hpp"
#include "aag/wide.hpp"

namespace aag {

// Validated tuple for S = <a, ha+d, ..., ha+kd, c>.
struct AagParams {
    Int a, d, h, c;
    int k = 0;
    std::vector<Int> generators;  // a, a_1..a_k, c
    bool normalized = false;      // the d<0, h=1 rewrite was applied

    Int gen(int i) const { return generators[static_cast<std::size_t>(i)]; }
    oracle::Gens gens64() const;
};

struct ValidateOptions {
    // rewrite d<0, h=1 to a' = a + kd, d' = -d
    bool normalize = true;
    bool check_minimal = true;
    oracle::Limits limits{};
};

// Pure generator list, no validation.
std::vector<Int> aag_generators(Int a, Int d, Int h, int k, Int c);

// Sanity bound on k so that generator lists and monomials stay materializable.
inline constexpr int kMaxK = 100000;

AagParams validate_params(Int a, Int d, Int h, Int k, Int c, const ValidateOptions& opt = {});

// Same checks, but accepts the Apery map of the generator list (modulus a)
// when the caller already has one.
AagParams validate_params_with(Int a, Int d, Int h, Int k, Int c, const oracle::AperyMap& ap);

// Exponents of x_0..x_{k+1}.
struct Monomial {
    std::vector<std::int64_t> e;

    Monomial() = default;
    explicit Monomial(int k) : e(static_cast<std::size_t>(k) + 2, 0) {}

    int k() const { return static_cast<int>(e.size()) - 2; }
    std::int64_t& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
    std::int64_t operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
    bool divides(const Monomial& o) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& x, const Monomial& y);

Int phi(const Monomial& m, const AagParams& p);

// x1*x20^2 - style rendering; "1" for the empty monomial
std::string to_string(const Monomial& m);

}  // namespace aag
