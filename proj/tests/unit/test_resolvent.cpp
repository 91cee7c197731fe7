#include <gtest/gtest.h>

#include <random>

#include "quartres/errors.hpp"
#include "quartres/resolvent.hpp"
#include "quartres/verify.hpp"

using namespace quartres;

namespace {

IntPoly P(const char* s) { return IntPoly::parse(s); }
NumberField F(const char* s) { return NumberField(IntPoly::parse(s)); }

}  // namespace

TEST(ResolventCubic, Examples)
{
    EXPECT_EQ(resolvent_cubic(P("x^4-x-1")), P("x^3+4x-1"));
    EXPECT_EQ(resolvent_cubic(P("x^4+1")), P("x^3-4x"));
    EXPECT_TRUE(is_isomorphic(NumberField(resolvent_cubic(P("x^4-x^3-4x^2+x+2"))), F("x^3-x^2-14x+23")));
    EXPECT_THROW(resolvent_cubic(P("2x^4+1")), InvalidInput);
}

TEST(QuarticFromAlpha, Examples)
{
    IntPoly q = quartic_from_alpha(P("x^3-35x^2+179x-81"));
    EXPECT_EQ(q, P("x^4-70x^2-72x+509"));
    EXPECT_TRUE(is_isomorphic(NumberField(q), F("x^4-x^3-4x^2+x+2")));

    IntPoly q2 = quartic_from_alpha(P("x^3-8x^2+12x-1"));
    EXPECT_EQ(q2, P("x^4-16x^2-8x+16"));
    EXPECT_TRUE(is_isomorphic(NumberField(q2), F("x^4-4x^2-x+1")));

    EXPECT_THROW(quartic_from_alpha(P("x^3-1")), InvalidInput);
    EXPECT_THROW(quartic_from_alpha(P("x^3-x^2-2x+2")), InvalidInput);  // -a0 = -2 is not a square
}

TEST(SexticFromAlpha, Examples)
{
    EXPECT_EQ(sextic_from_alpha(P("x^3-35x^2+179x-81")), P("x^6-35x^4+179x^2-81"));
    EXPECT_EQ(NumberField(sextic_from_alpha(P("x^3-37x^2+308x-576"))).splitting_type(2).to_string(), "(111111)");
    EXPECT_EQ(NumberField(sextic_from_alpha(P("x^3-15x^2+55x-49"))).splitting_type(2).to_string(), "(3^2)");
    // alpha = theta^2: P(x^2) = -c(x) c(-x)
    IntPoly c = P("x^3-x^2-2x+1");
    IntPoly sq = c * c.compose_linear(-1, 0);
    IntPoly Pa(std::vector<Integer>{-sq[0], -sq[2], -sq[4], 1});
    EXPECT_THROW(sextic_from_alpha(Pa), InvalidInput);
}

TEST(QuarticRecord, Examples)
{
    auto a = make_quartic_record(F("x^4-2x^3-4x^2+4x+2"));
    EXPECT_EQ(a.k.disc(), 229);
    EXPECT_EQ(a.f, 8);
    ASSERT_TRUE(a.n2);
    EXPECT_EQ(*a.n2, 64);
    EXPECT_TRUE(a.two_totally_ramified);
    EXPECT_TRUE(a.totally_real);

    auto b = make_quartic_record(F("x^4-x^3-7x^2+2x+9"));
    EXPECT_EQ(b.k.disc(), 26569);
    EXPECT_EQ(b.f, 1);
    EXPECT_EQ(b.galois, QuarticGalois::A4);

    auto c = make_quartic_record(F("x^4-7x^2-2x+6"));
    EXPECT_TRUE(is_isomorphic(c.k, F("x^3-22x-8")));
    ASSERT_TRUE(c.n2);
    EXPECT_EQ(*c.n2, 4);
}

TEST(QuarticRecord, OutOfFamily)
{
    EXPECT_THROW(make_quartic_record(F("x^4+1")), InvalidInput);
    EXPECT_THROW(make_quartic_record(F("x^4-2")), InvalidInput);
}

TEST(QuarticRecord, Json)
{
    auto a = make_quartic_record(F("x^4-2x^3-4x^2+4x+2"));
    std::string j = a.to_json();
    EXPECT_NE(j.find("\"n2\":64"), std::string::npos);
    EXPECT_NE(j.find("\"two_tr\":true"), std::string::npos);
    EXPECT_NE(j.find("\"f\":\"8\""), std::string::npos);
}

TEST(Resolvent, TableRoundTrip)
{
    for (auto& row : split_table_rows()) {
        IntPoly Pa = IntPoly::parse(row.P_alpha);
        NumberField L(IntPoly::parse(row.L));
        NumberField La(quartic_from_alpha(Pa));
        EXPECT_TRUE(is_isomorphic(La, L)) << row.L;
        EXPECT_TRUE(is_isomorphic(NumberField(resolvent_cubic(La.poly())), NumberField(IntPoly::parse(row.k)))) << row.k;
        // the sextic from L and the sextic from alpha define the same field
        NumberField K6a(sextic_from_alpha(Pa));
        NumberField K6b(sextic_from_quartic(L.poly()));
        EXPECT_TRUE(is_isomorphic(K6a, K6b)) << row.L;
    }
}

TEST(Resolvent, DiscIdentitiesOnRandomPolynomials)
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> d(-20, 20);
    int quartics = 0, alphas = 0;
    while (quartics < 250) {
        IntPoly q({d(rng), d(rng), d(rng), d(rng), 1});
        IntPoly r = resolvent_cubic(q);
        ASSERT_EQ(poly_discriminant(r), poly_discriminant(q)) << q.to_string();
        ++quartics;
    }
    std::uniform_int_distribution<long> s(1, 4);
    while (alphas < 250) {
        long root = s(rng);
        IntPoly Pa({-root * root, d(rng), d(rng), 1});
        if (!is_irreducible(Pa)) continue;
        ASSERT_EQ(poly_discriminant(quartic_from_alpha(Pa)), 4096 * poly_discriminant(Pa)) << Pa.to_string();
        ++alphas;
    }
}

TEST(Resolvent, A4HasSquareResolventDisc)
{
    auto r = make_quartic_record(F("x^4-x^3-7x^2+2x+9"));
    EXPECT_TRUE(is_square(r.k.disc()));
    EXPECT_EQ(r.L.disc(), r.k.disc() * r.f * r.f);
}
