#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "aag/error.hpp"
#include "aag/oracle.hpp"

using namespace aag;
using namespace aag::oracle;

namespace {

// gaps by direct enumeration up to a bound past the Frobenius number
std::vector<std::int64_t> gaps_by_sieve(const Gens& gens, std::int64_t bound) {
    std::vector<char> in(static_cast<std::size_t>(bound + 1), 0);
    in[0] = 1;
    for (std::int64_t n = 1; n <= bound; ++n)
        for (auto g : gens)
            if (n >= g && in[static_cast<std::size_t>(n - g)]) {
                in[static_cast<std::size_t>(n)] = 1;
                break;
            }
    std::vector<std::int64_t> out;
    for (std::int64_t n = 0; n <= bound; ++n)
        if (!in[static_cast<std::size_t>(n)]) out.push_back(n);
    return out;
}

}  // namespace

TEST_CASE("apery set of <3,5>", "[oracle]") {
    auto ap = apery({3, 5});
    CHECK(ap.modulus == 3);
    CHECK(ap.w == std::vector<std::int64_t>{0, 10, 5});
    CHECK(frobenius(ap) == 7);
    CHECK(genus(ap) == 4);
    CHECK(pf(ap, {3, 5}) == std::vector<std::int64_t>{7});
}

TEST_CASE("trivial semigroup <1>", "[oracle]") {
    auto ap = apery({1});
    CHECK(ap.w == std::vector<std::int64_t>{0});
    CHECK(frobenius(ap) == -1);
    CHECK(genus(ap) == 0);
}

TEST_CASE("pseudo-Frobenius numbers of <5,6,7,8,9>", "[oracle]") {
    Gens g{5, 6, 7, 8, 9};
    CHECK(pf(g) == std::vector<std::int64_t>{1, 2, 3, 4});
    auto r = report(g);
    CHECK(r.type == 4);
    CHECK_FALSE(r.symmetric);
}

TEST_CASE("membership, genus, minimality", "[oracle]") {
    CHECK_FALSE(membership(7, {3, 5}));
    CHECK(membership(8, {3, 5}));
    CHECK(membership(0, {3, 5}));
    CHECK_FALSE(membership(-3, {3, 5}));
    CHECK(genus(Gens{3, 5}) == 4);
    CHECK_FALSE(is_minimal_generating({3, 5, 8}));
    CHECK(is_minimal_generating({3, 5, 7}));
    CHECK_FALSE(is_minimal_generating({3, 5, 5}));
}

TEST_CASE("two generators: classical formulas", "[oracle]") {
    for (std::int64_t p = 2; p < 14; ++p)
        for (std::int64_t q = p + 1; q < 30; ++q) {
            if (std::gcd(p, q) != 1) continue;
            auto r = report({p, q});
            CHECK(r.frobenius == p * q - p - q);
            CHECK(r.genus == (p - 1) * (q - 1) / 2);
            CHECK(r.type == 1);
            CHECK(r.symmetric);
            CHECK(r.frobenius == 2 * r.genus - 1);
        }
}

TEST_CASE("Nari criterion on integer lists", "[oracle]") {
    CHECK(nari({2168}));
    CHECK(nari({1084, 2168}));
    CHECK_FALSE(nari({3, 5, 10}));
    CHECK(nari({3, 7, 10}));
}

TEST_CASE("choice of modulus does not change F, PF, genus", "[oracle]") {
    Gens g{155, 621, 622, 640, 177};
    auto a = apery(g, 155), b = apery(g, 177);
    CHECK(frobenius(a) == frobenius(b));
    CHECK(pf(a, g) == pf(b, g));
    CHECK(genus(a) == genus(b));
}

TEST_CASE("round robin agrees with Dijkstra and with a sieve", "[oracle]") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 6)(rng);
        Gens g;
        for (int i = 0; i < n; ++i) g.push_back(std::uniform_int_distribution<std::int64_t>(2, 90)(rng));
        std::int64_t gg = 0;
        for (auto x : g) gg = std::gcd(gg, x);
        if (gg != 1) continue;
        auto m = *std::min_element(g.begin(), g.end());
        auto ap = apery(g, m);
        CHECK(ap.w == apery_dijkstra(g, m).w);

        auto gaps = gaps_by_sieve(g, 90 * 90);
        CHECK(genus(ap) == static_cast<std::int64_t>(gaps.size()));
        CHECK(frobenius(ap) == (gaps.empty() ? -1 : gaps.back()));
        // pseudo-Frobenius by definition: gaps f with f + g in S for every generator
        std::vector<std::int64_t> want;
        for (auto f : gaps) {
            bool all = true;
            for (auto x : g) all = all && !std::binary_search(gaps.begin(), gaps.end(), f + x);
            if (all) want.push_back(f);
        }
        CHECK(pf(ap, g) == want);
    }
}

TEST_CASE("input errors", "[oracle]") {
    CHECK_THROWS_AS(apery({4, 6}), Error);
    CHECK_THROWS_AS(apery({}), Error);
    CHECK_THROWS_AS(apery({3, -5}), Error);
    try {
        apery({1000003, 1000004}, Limits{1000});
        FAIL("expected ModulusTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ModulusTooLarge);
    }
    CHECK_THROWS_AS(apery({3, 5}, 4), Error);
}
