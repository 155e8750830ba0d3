#include <catch_amalgamated.hpp>

#include <algorithm>

#include "aag/grobner.hpp"
#include "aag/pseudofrob.hpp"

using namespace aag;

namespace {

AagParams ex1() { return validate_params(155, 1, 4, 20, 177); }

}  // namespace

TEST_CASE("family A", "[grobner]") {
    ValidateOptions vo;
    vo.check_minimal = false;
    auto p = validate_params(7, 1, 2, 3, 11, vo);
    auto A = family_A(p);
    REQUIRE(A.size() == 3);
    CHECK(to_string(A[0]) == "x1^2 - x0^2*x2 [A]");
    CHECK(to_string(A[1]) == "x1*x2 - x0^2*x3 [A]");
    CHECK(to_string(A[2]) == "x2^2 - x1*x3 [A]");
    for (const auto& b : A) CHECK(kernel_check(b, p));
    auto big = ex1();
    CHECK(family_A(big).size() == 190);
}

TEST_CASE("families B, C, D of the worked example", "[grobner]") {
    auto p = ex1();
    auto t = build_table(p);
    auto B = family_B(p, t);
    REQUIRE(B.size() == 19);
    CHECK(to_string(B[0]) == "x2*x20 - x0^7*x21 [B]");
    CHECK(to_string(B[1]) == "x3*x20 - x0^3*x1*x21 [B]");
    CHECK(to_string(B[18]) == "x20^2 - x0^3*x18*x21 [B]");
    auto D = family_D(p, t);
    REQUIRE(D.size() == 1);
    CHECK(to_string(D[0]) == "x21^8 - x0*x1*x20 [D]");
    auto C = family_C(p, t);
    REQUIRE_FALSE(C.empty());
    CHECK(to_string(C[0]) == "x1*x21^7 - x0^12 [C]");
    for (const auto& b : basis(p, t)) CHECK(kernel_check(b, p));
}

TEST_CASE("kernel check", "[grobner]") {
    auto p = ex1();
    Monomial x1(20), x2(20);
    x1[1] = 1;
    x2[2] = 1;
    CHECK_FALSE(kernel_check({x1, x2, BinomialFamily::A}, p));
}

TEST_CASE("tilde and row binomials of the worked example", "[grobner]") {
    auto p = ex1();
    auto t = build_table(p);
    auto tb = tilde_binomials(t, p);
    REQUIRE(tb.size() == t.rows.size() - 1);
    CHECK(to_string(tb[1]) == "x1*x21^7 - x0^12 [Tilde]");
    for (const auto& b : tb) CHECK(kernel_check(b, p));
    for (const auto& b : row_binomials(t, p)) CHECK(kernel_check(b, p));
}

TEST_CASE("term order", "[grobner]") {
    auto p = ex1();
    Monomial a(20), b(20);
    a[21] = 8;
    b[0] = 1;
    b[1] = 1;
    b[20] = 1;
    CHECK(phi(a, p) == phi(b, p));
    // equal weight: more x0 means smaller
    CHECK(compare_weighted_degrevlex(a, b, p) > 0);
    CHECK(compare_weighted_degrevlex(b, a, p) < 0);
    CHECK(compare_weighted_degrevlex(a, a, p) == 0);
}

TEST_CASE("certificate of the worked example", "[grobner]") {
    auto p = ex1();
    auto t = build_table(p);
    auto cert = certify(p, t, basis(p, t));
    CHECK(cert.ok);
    CHECK(cert.standard_count == 155);
    CHECK(certify_basis(p, t));
}

TEST_CASE("dropping a B element breaks the certificate", "[grobner]") {
    auto p = ex1();
    auto t = build_table(p);
    auto G = basis(p, t);
    auto it = std::find_if(G.begin(), G.end(), [](const Binomial& b) { return b.family == BinomialFamily::B; });
    REQUIRE(it != G.end());
    G.erase(it);
    auto cert = certify(p, t, G);
    CHECK_FALSE(cert.ok);
    CHECK(cert.standard_count > 155);
}

TEST_CASE("inverted term order breaks the certificate", "[grobner]") {
    auto p = ex1();
    auto t = build_table(p);
    auto cert = certify(p, t, basis(p, t), true);
    CHECK_FALSE(cert.ok);
    CHECK_FALSE(cert.leads_consistent);
}

TEST_CASE("certificate over a sampled grid", "[grobner]") {
    int certified = 0;
    for (int a = 5; a <= 500; a += 7)
        for (int d = -5; d <= 5; ++d)
            for (int c = a / 2 + 1; c <= a + 60; c += 11)
                for (int k = 3; k <= 5; ++k)
                    for (int h = 1; h <= 2; ++h) {
                        AagParams p;
                        try {
                            ValidateOptions vo;
                            vo.normalize = false;
                            p = validate_params(a, d, h, k, c, vo);
                        } catch (const Error&) {
                            continue;
                        }
                        auto t = build_table(p);
                        if (!t.hypothesis_ok) continue;
                        auto cert = certify(p, t, basis(p, t));
                        INFO("a=" << a << " d=" << d << " h=" << h << " k=" << k << " c=" << c << " " << cert.detail);
                        REQUIRE(cert.ok);
                        ++certified;
                    }
    CHECK(certified > 1000);
}

TEST_CASE("pseudo-Frobenius dispatch on the worked example", "[grobner]") {
    auto p = ex1();
    auto t = build_table(p);
    auto r = pf_tilde(p, t);
    REQUIRE(r.pf1.size() == 1);
    REQUIRE(r.pf2.size() == 1);
    CHECK(to_string(r.pf1[0]) == "x21^7");
    CHECK(to_string(r.pf2[0]) == "x1*x20*x21^6");
    CHECK(r.clause1 == "2b");
    CHECK(r.clause2 == "7i");
    CHECK(r.trace() == "PF1: clause 2b; PF2: clause 7i");
    CHECK(r.pf_numbers == std::vector<Int>{1084, 2168});
    CHECK(r.type == 2);
    CHECK(to_string(r.frob_monomial) == "x1*x20*x21^6");
    auto n = pf_numbers_and_type(r, p);
    CHECK(n.numbers == r.pf_numbers);
    CHECK(n.type == 2);
}

TEST_CASE("pseudo-Frobenius: s_{mu+1} = 0 has empty second part", "[grobner]") {
    auto p = validate_params(15, 7, 1, 3, 10);
    auto t = build_table(p);
    REQUIRE(t.next().s == 0);
    auto r = pf_tilde(p, t);
    CHECK(r.pf2.empty());
    CHECK(r.type == 1);
    auto orc = oracle::report(p.gens64());
    REQUIRE(orc.pf.size() == 1);
    CHECK(r.pf_numbers.front() == orc.pf.front());
}

TEST_CASE("pseudo-Frobenius dispatch agrees with the oracle on a small box", "[grobner]") {
    int n = 0;
    for (int a = 3; a <= 70; ++a)
        for (int d = -7; d <= 7; ++d)
            for (int c = 2; c <= 110; c += 3)
                for (int k = 3; k <= 6; ++k)
                    for (int h = 1; h <= 3; ++h) {
                        AagParams p;
                        try {
                            ValidateOptions vo;
                            vo.normalize = false;
                            p = validate_params(a, d, h, k, c, vo);
                        } catch (const Error&) {
                            continue;
                        }
                        auto t = build_table(p);
                        if (!t.hypothesis_ok) continue;
                        auto r = pf_tilde(p, t);
                        auto orc = oracle::pf(p.gens64());
                        std::vector<Int> want(orc.begin(), orc.end());
                        INFO("a=" << a << " d=" << d << " h=" << h << " k=" << k << " c=" << c << " " << r.trace());
                        REQUIRE(r.pf_numbers == want);
                        ++n;
                    }
    CHECK(n > 10000);
}
