#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aag/pseudofrob.hpp"

namespace aag {

enum class Verdict { Symmetric, AlmostSymmetric, NeitherSpecial, OracleOnly };
const char* to_string(Verdict v) noexcept;

// keys: p, p_prime, sigma, sigma_prime, r, r_hat, l
using Solved = std::map<std::string, Int>;

struct Classification {
    Verdict verdict = Verdict::NeitherSpecial;
    std::string family;  // e.g. "Thm5.3-(ii)"; empty when none applies
    Solved solved;
    int type = 0;
    Int frobenius = -1;
    bool fast_path_used = false;
    bool hypothesis_ok = false;
    // family identified on the rewritten tuple (a + kd, -d)
    bool via_normalization = false;
    std::vector<Int> pf;  // empty on the fast path
    std::string trace;    // pseudo-Frobenius clause trace
    std::vector<std::string> ambiguous;  // competing fast-path hits, if any
};

// pf sorted ascending, last element must equal F (MalformedPf otherwise)
bool nari_check(const std::vector<Int>& pf, Int F);

struct FamilyMatch {
    std::string id;
    Solved solved;
};

// Table-shape matching at rows (mu, mu+1). Symmetric shapes are tried when
// type == 1, almost symmetric ones when type >= 2 and nari holds.
std::vector<FamilyMatch> match_families(Int a, Int d, Int h, int k, const EuclidTable& t, int type, bool nari);

struct ClassifyOptions {
    bool prefer_fast = false;
    oracle::Limits limits{};
};

Classification classify(const AagParams& p, const ClassifyOptions& opt = {});

struct FastHit {
    std::string family;
    Solved solved;
    Int frobenius;
    int type = 0;
    Int discriminant;  // 0 for the linear families
    bool via_normalization = false;
};

// Every fully consistent candidate (all families, all l).
std::vector<FastHit> fast_candidates(Int a, Int d, Int h, int k, Int c);
// For a raw tuple with d < 0, h = 1 and no direct hit the rewritten tuple is tried.
std::vector<FastHit> fast_candidates(const AagParams& p);
// Unique hit or nothing; ambiguous hits are listed in `ambiguous` when given.
std::optional<Classification> fast_path(const AagParams& p, std::vector<std::string>* ambiguous = nullptr);

// Family synthesis. Inputs follow each family's own parameters; for the
// Thm5.4 families `p` is p_{mu+1} - 1.
struct FamilyInput {
    int k = 3;
    Int h = 1;
    std::optional<Int> sigma, sigma_prime, p, p_prime, r, r_hat, l, d;
};

const std::vector<std::string>& family_ids();
// Returns params validated without the d<0 rewrite. Throws
// FamilyConstraintViolated, UnknownFamily, HypothesisViolated (the tuple is
// outside the standing hypothesis) or a validation error.
AagParams family_generate(std::string_view id, const FamilyInput& in, const oracle::Limits& lim = {});

}  // namespace aag
