#include <gtest/gtest.h>

#include "quartres/dirichlet.hpp"
#include "quartres/enumerate.hpp"
#include "quartres/errors.hpp"
#include "quartres/verify.hpp"

using namespace quartres;

namespace {

NumberField F(const char* s) { return NumberField(IntPoly::parse(s)); }
SplittingType T(const char* s) { return SplittingType::parse(s); }

// typed again from the printed tables, in u = 2^-s
struct M1Ref {
    const char* k;
    const char* m1;
    int eight_at_one;
};
const M1Ref kM1[] = {
    {"(3)", "1+3u^3", 11},
    {"(21)", "1+u^2+4u^3+2u^4", 15},
    {"(111)", "1+3u^2+6u^3+6u^4", 23},
    {"(1^21)_0", "1+u+2u^3+4u^4", 16},
    {"(1^21)_4", "1+u+2u^2+4u^4", 18},
    {"(1^3)", "1+u+2u^3", 14},
};

struct M2Ref {
    const char* k;
    const char* L;
    int n2;
    const char* m2;
};
const M2Ref kM2[] = {
    {"(3)", "(31)", 1, "1+3u^3"},
    {"(3)", "(1^4)", 64, "1-u^3"},
    {"(21)", "(4)", 1, "1+u^2-2u^4"},
    {"(21)", "(211)", 1, "1+u^2+4u^3+2u^4"},
    {"(21)", "(2^2)", 16, "1+u^2-4u^3+2u^4"},
    {"(21)", "(1^21^2)", 16, "1+u^2-2u^4"},
    {"(21)", "(1^4)", 64, "1-u^2"},
    {"(111)", "(22)", 1, "1+3u^2-2u^3-2u^4"},
    {"(111)", "(2^2)", 16, "1-u^2-2u^3+2u^4"},
    {"(111)", "(1111)", 1, "1+3u^2+6u^3+6u^4"},
    {"(111)", "(1^21^2)", 16, "1-u^2+2u^3-2u^4"},
    {"(1^21)_0", "(21^2)", 1, "1+u+2u^3-4u^4"},
    {"(1^21)_0", "(1^211)", 1, "1+u+2u^3+4u^4"},
    {"(1^21)_0", "(1^21^2)", 4, "1+u-2u^3"},
    {"(1^21)_0", "(1^4)", 64, "1-u"},
    {"(1^21)_4", "(21^2)", 1, "1+u+2u^2-4u^4"},
    {"(1^21)_4", "(1^211)", 1, "1+u+2u^2+4u^4"},
    {"(1^21)_4", "(2^2)", 4, "1+u-2u^2"},
    {"(1^21)_4", "(2^2)", 16, "1-u"},
    {"(1^21)_4", "(1^21^2)", 16, "1-u"},
    {"(1^3)", "(1^31)", 1, "1+u+2u^3"},
    {"(1^3)", "(1^4)", 4, "1+u-2u^3"},
    {"(1^3)", "(1^4)", 64, "1-u"},
};

}  // namespace

TEST(Tables, M1MatchesIndependentCopy)
{
    ASSERT_EQ(m1_table().size(), std::size(kM1));
    for (auto& r : kM1) {
        auto f = m1_factor(T(r.k));
        EXPECT_EQ(f.to_string(), r.m1) << r.k;
        EXPECT_EQ(f.at_one() * 8, Rational(r.eight_at_one)) << r.k;
    }
}

TEST(Tables, M2MatchesIndependentCopy)
{
    ASSERT_EQ(m2_table().size(), std::size(kM2));
    for (auto& r : kM2) EXPECT_EQ(m2_factor(T(r.k), T(r.L), r.n2).to_string(), r.m2) << r.k << ' ' << r.L << ' ' << r.n2;
}

TEST(Tables, AbsentCombinationsThrow)
{
    EXPECT_THROW(m2_factor(T("(111)"), T("(1^4)"), 64), InvalidInput);
    EXPECT_THROW(m2_factor(T("(1^21)_4"), T("(1^4)"), 64), InvalidInput);
    EXPECT_THROW(m2_factor(T("(3)"), T("(31)"), 4), InvalidInput);
    EXPECT_THROW(m1_factor(T("(1^21)")), InvalidInput);  // undecorated
    EXPECT_THROW(m1_factor(T("(1111)")), InvalidInput);
}

TEST(Tables, SurplusOverM1IsSmall)
{
    // M2 for the unramified L(k,1) rows equals M1 exactly when every prime above 2 splits in K6
    EXPECT_EQ(m2_factor(T("(111)"), T("(1111)"), 1), m1_factor(T("(111)")));
    EXPECT_EQ(m2_factor(T("(21)"), T("(211)"), 1), m1_factor(T("(21)")));
    EXPECT_EQ(m2_factor(T("(3)"), T("(31)"), 1), m1_factor(T("(3)")));
    EXPECT_EQ(m2_factor(T("(1^3)"), T("(1^31)"), 1), m1_factor(T("(1^3)")));
}

TEST(Omega, Values)
{
    EXPECT_EQ(omega_from_type(T("(1111)")), 3);
    EXPECT_EQ(omega_from_type(T("(211)")), 1);
    EXPECT_EQ(omega_from_type(T("(1^211)")), 1);
    EXPECT_EQ(omega_from_type(T("(22)")), -1);
    EXPECT_EQ(omega_from_type(T("(4)")), -1);
    EXPECT_EQ(omega_from_type(T("(21^2)")), -1);
    EXPECT_EQ(omega_from_type(T("(31)")), 0);
    EXPECT_EQ(omega_from_type(T("(1^21^2)")), 0);
    EXPECT_EQ(omega_from_type(T("(1^4)")), 0);
}

TEST(Zk, Examples)
{
    auto ideal = [](const char* k, std::vector<int> e) { return TwoIdeal{two_primes_ef(T(k)), std::move(e)}; };
    EXPECT_EQ(z_k(T("(3)"), ideal("(3)", {0})), 1);
    EXPECT_EQ(z_k(T("(3)"), ideal("(3)", {1})), 2);
    EXPECT_EQ(z_k(T("(1^3)"), ideal("(1^3)", {2})), 2);
    EXPECT_EQ(z_k(T("(1^3)"), ideal("(1^3)", {1})), 1);
    EXPECT_EQ(z_k(T("(1^21)_0"), ideal("(1^21)_0", {1, 1})), 2);
    EXPECT_EQ(z_k(T("(1^21)_0"), ideal("(1^21)_0", {0, 1})), 1);
    EXPECT_EQ(z_k(T("(1^21)_4"), ideal("(1^21)_4", {0, 1})), 2);
    EXPECT_EQ(z_k(T("(111)"), ideal("(111)", {1, 1, 0})), 1);
    EXPECT_THROW(z_k(T("(3)"), ideal("(21)", {0, 0})), InvalidInput);
}

TEST(Zk, MonotoneAlongDivisibility)
{
    for (const char* k : {"(3)", "(21)", "(111)", "(1^21)_0", "(1^21)_4", "(1^3)"}) {
        auto ideals = all_two_ideals(T(k));
        int expected = 1;
        for (auto& e : two_primes_ef(T(k))) expected *= e.first + 1;
        EXPECT_EQ(static_cast<int>(ideals.size()), expected) << k;
        for (auto& a : ideals)
            for (auto& b : ideals)
                if (a.divides(b)) EXPECT_LE(z_k(T(k), a), z_k(T(k), b)) << k << ' ' << a.to_string() << ' ' << b.to_string();
        EXPECT_EQ(z_k(T(k), ideals.back()), 2) << k;
        EXPECT_TRUE(ideals.back().is_two()) << k;
    }
}

TEST(ContributingIdeals, Examples)
{
    auto c = contributing_ideals(T("(1^3)"), Family::L4);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c.front().to_string(), "p1");
    EXPECT_EQ(contributing_ideals(T("(3)"), Family::Ltr64).size(), 1u);
    EXPECT_TRUE(contributing_ideals(T("(3)"), Family::Ltr64)[0].is_two());
    EXPECT_EQ(contributing_ideals(T("(111)"), Family::L1).size(), 8u);
    EXPECT_EQ(contributing_ideals(T("(111)"), Family::L16, 1).size(), 5u);
    EXPECT_THROW(contributing_ideals(T("(111)"), Family::L16), InvalidInput);
    EXPECT_THROW(contributing_ideals(T("(3)"), Family::L4), InvalidInput);
    EXPECT_THROW(family_of_n2(9), InvalidInput);
}

TEST(EulerProduct, Examples)
{
    auto a = euler_product({{7, EulerFactor::linear(7, 3)}}, 60);
    EXPECT_EQ(a[1], 1);
    EXPECT_EQ(a[7], 3);
    EXPECT_EQ(a[49], 0);
    EXPECT_EQ(a[14], 0);

    std::map<std::uint64_t, EulerFactor> fs;
    for (auto p : primes_up_to(30))
        if (p % 7 == 1 || p % 7 == 6) fs[p] = EulerFactor::linear(p, 1);
    auto b = euler_product(fs, 30);
    EXPECT_EQ(b[13], 1);
    EXPECT_EQ(b[29], 1);
    EXPECT_EQ(b[26], 0);
    EXPECT_EQ(b[11], 0);

    TwoAdicFactor t{1, 0, 0, 3};
    auto c = euler_product({{2, t.as_euler()}}, 20);
    EXPECT_EQ(c[8], 3);
    EXPECT_EQ(c[16], 0);
    EXPECT_EQ(c[4], 0);
}

TEST(EulerProduct, MultiplicativeOnCoprimeIndices)
{
    auto s = euler_product({{3, EulerFactor::linear(3, 2)}, {5, EulerFactor::linear(5, -1)}, {7, EulerFactor::linear(7, 3)}},
                           200);
    EXPECT_EQ(s[105], Rational(2 * -1 * 3));
    EXPECT_EQ(s[15], Rational(-2));
    EXPECT_EQ(s[9], 0);
}

TEST(DirichletCoeffs, Arithmetic)
{
    auto a = DirichletCoeffs::one(10);
    auto b = euler_product({{2, EulerFactor::linear(2, 1)}}, 10);
    auto c = a * b;
    EXPECT_EQ(c, b);
    auto d = b + b;
    EXPECT_EQ(d[2], 2);
    d *= Rational(1, 2);
    EXPECT_EQ(d, b);
}

TEST(Serialization, JsonlAndCsv)
{
    auto s = euler_product({{7, EulerFactor::linear(7, 3)}}, 10);
    s *= Rational(1, 3);
    EXPECT_EQ(s.to_jsonl(), "{\"n\":1,\"coeff\":\"1/3\"}\n{\"n\":7,\"coeff\":\"1\"}\n");
    EXPECT_EQ(s.to_csv(), "n,coeff\n1,1/3\n7,1\n");
}

TEST(Phi, CyclicConductorSeven)
{
    NumberField k = F("x^3-x^2-2x+1");
    auto L2 = discover_L2(k, false);
    auto phi = phi_k(k, L2, 13, false);
    EXPECT_EQ(phi[1], Rational(1, 3));
    EXPECT_EQ(phi[8], 1);
    EXPECT_EQ(phi[13], 1);
    for (std::uint64_t n = 2; n <= 13; ++n)
        if (n != 8 && n != 13) EXPECT_EQ(phi[n], 0) << n;
}

TEST(Phi, Disc148)
{
    NumberField k = F("x^3-x^2-3x+1");
    auto phi = phi_k(k, discover_L2(k, false), 12, false);
    EXPECT_EQ(phi[1], 1);
    EXPECT_EQ(phi[2], 1);
    EXPECT_EQ(phi[4], 0);
    EXPECT_EQ(phi[8], 2);
}

TEST(Phi, SignedTwoAdicPart469)
{
    // total 2-adic factor of the signed series for 469 is 1 + u^4
    NumberField k = F("x^3-x^2-5x+4");
    auto phi = phi_k(k, discover_L2(k, true), 16, true);
    EXPECT_EQ(phi[1], 1);
    EXPECT_EQ(phi[2], 0);
    EXPECT_EQ(phi[4], 0);
    EXPECT_EQ(phi[8], 0);
    EXPECT_EQ(phi[16], 1);
}

TEST(Phi, CoefficientsAreNonnegativeIntegersAfterOne)
{
    for (const char* s : {"x^3-x^2-3x+1", "x^3-4x-1", "x^3-x^2-5x+4", "x^3-x^2+1", "x^3-x^2+x-2"}) {
        NumberField k = F(s);
        for (bool sig : {false, true}) {
            if (sig && k.r1() != 3) continue;
            auto phi = phi_k(k, discover_L2(k, sig), 400, sig);
            for (std::uint64_t n = 2; n <= 400; ++n) {
                EXPECT_GE(phi[n], 0) << s << " n=" << n;
                EXPECT_EQ(phi[n].get_den(), 1) << s << " n=" << n;
            }
        }
    }
}

TEST(Phi, SignedBelowUnsigned)
{
    NumberField k = F("x^3-4x-1");
    auto u = phi_k(k, discover_L2(k, false), 300, false);
    auto s = phi_k(k, discover_L2(k, true), 300, true);
    for (std::uint64_t n = 2; n <= 300; ++n) EXPECT_LE(s[n], u[n]) << n;
}

TEST(Phi, InputChecks)
{
    EXPECT_THROW(phi_k(F("x^2+1"), {}, 10, false), InvalidInput);
    EXPECT_THROW(phi_k(F("x^3-x^2-2x+1"), {}, 0, false), InvalidInput);
}

TEST(Charsum, AgreesWithClosedFormOnTableCubics)
{
    std::vector<std::string> seen;
    for (auto& row : split_table_rows()) {
        if (std::find(seen.begin(), seen.end(), row.k) != seen.end()) continue;
        seen.push_back(row.k);
        NumberField k(IntPoly::parse(row.k));
        if (abs(k.disc()) > 20000) continue;
        for (bool sig : {false, true}) {
            if (sig && k.r1() != 3) continue;
            auto L2 = discover_L2(k, sig);
            EXPECT_EQ(phi_k(k, L2, 128, sig), phi_k_charsum(k, L2, 128, sig)) << row.k << (sig ? " signed" : "");
        }
    }
}

TEST(ChiAt, TotallyRamifiedGivesZeros)
{
    // a (1^4) field at 2 has K6/k ramified above 2
    auto rec = make_quartic_record(F("x^4-2x^3-4x^2+4x+2"));
    NumberField K6(sextic_from_quartic(rec.L.poly()));
    for (int v : chi_at(rec.k, K6, 2)) EXPECT_EQ(v, 0);
}
