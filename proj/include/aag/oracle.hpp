#pragma once

// Brute-force numerical semigroup engine for arbitrary generator lists.
// Shares nothing with the closed-form modules; it is the ground truth they
// are checked against.

#include <cstdint>
#include <vector>

namespace aag::oracle {

using Gens = std::vector<std::int64_t>;

struct Limits {
    std::int64_t max_modulus = 1'000'000;
};

// Reads AAG_MAX_A from the environment, falling back to 10^6.
Limits limits_from_env();

struct AperyMap {
    std::int64_t modulus = 0;
    std::vector<std::int64_t> w;  // w[res] = least element of S congruent to res

    bool contains(std::int64_t n) const {
        if (n < 0) return false;
        return n >= w[static_cast<std::size_t>(n % modulus)];
    }
};

struct Report {
    Gens generators;  // sorted ascending
    AperyMap apery;   // modulus = smallest generator
    std::int64_t frobenius = -1;
    std::vector<std::int64_t> pf;
    int type = 0;
    std::int64_t genus = 0;
    bool symmetric = false;
    bool almost_symmetric = false;
};

// Shortest paths on the residue graph modulo `modulus` (round robin), which must be one of the
// generators. Throws NotCoprime, NonsenseInput, ModulusTooLarge, Overflow.
AperyMap apery(const Gens& gens, std::int64_t modulus, const Limits& lim = {});
// modulus = smallest generator
AperyMap apery(const Gens& gens, const Limits& lim = {});
// plain shortest paths, no caps; slower, kept to cross-check apery()
AperyMap apery_dijkstra(const Gens& gens, std::int64_t modulus);

std::int64_t frobenius(const AperyMap& ap);
std::vector<std::int64_t> pf(const AperyMap& ap, const Gens& gens);
std::int64_t genus(const AperyMap& ap);
bool nari(const std::vector<std::int64_t>& pf_sorted);

bool membership(std::int64_t n, const Gens& gens, const Limits& lim = {});
std::int64_t genus(const Gens& gens, const Limits& lim = {});
std::vector<std::int64_t> pf(const Gens& gens, const Limits& lim = {});
bool is_minimal_generating(const Gens& gens, const Limits& lim = {});
// same test reusing a map of the full generator set
bool is_minimal_generating(const Gens& gens, const AperyMap& ap);
bool almost_symmetric(const Gens& gens, const Limits& lim = {});

Report report(const Gens& gens, const Limits& lim = {});

}  // namespace aag::oracle
