#include <gtest/gtest.h>

#include "quartres/class_group.hpp"
#include "quartres/enumerate.hpp"
#include "quartres/errors.hpp"
#include "quartres/number_field.hpp"
#include "quartres/resolvent.hpp"
#include "quartres/verify.hpp"

using namespace quartres;

namespace {

NumberField F(const char* s) { return NumberField(IntPoly::parse(s)); }
SplittingType T(const char* s) { return SplittingType::parse(s); }

}  // namespace

TEST(MakeField, Examples)
{
    auto k = F("x^3-x^2-2x+1");
    EXPECT_EQ(k.disc(), 49);
    EXPECT_EQ(k.r1(), 3);
    EXPECT_EQ(k.r2(), 0);

    auto i = F("x^2+1");
    EXPECT_EQ(i.disc(), -4);
    EXPECT_EQ(i.r1(), 0);
    EXPECT_EQ(i.r2(), 1);

    EXPECT_EQ(F("x^4-2x^3-4x^2+4x+2").disc(), 64 * 229);
}

TEST(MakeField, IndexAndOrder)
{
    // x^2 - 5: poly disc 20, field disc 5
    auto K = F("x^2-5");
    EXPECT_EQ(K.disc(), 5);
    EXPECT_EQ(K.index(), 2);
    // the degree-6 sextic of a table row: disc sign (-1)^r2
    auto K6 = NumberField(sextic_from_alpha(IntPoly::parse("x^3-35x^2+179x-81")));
    EXPECT_EQ(sgn(K6.disc()), K6.r2() % 2 ? -1 : 1);
    EXPECT_EQ(K6.r1() + 2 * K6.r2(), 6);
}

TEST(MakeField, Rejects)
{
    EXPECT_THROW(F("x^3-1"), NotAField);
    EXPECT_THROW(F("x^4-4"), NotAField);
    EXPECT_THROW(F("2x^2+1"), InvalidInput);
    EXPECT_THROW(F("x^7-2"), InvalidInput);
}

TEST(SplittingType, Examples)
{
    EXPECT_EQ(F("x^3-x^2-3x+1").splitting_type(2), T("(1^3)"));
    EXPECT_EQ(F("x^4-2x^3-17x^2-6x+16").splitting_type(2), T("(1111)"));
    EXPECT_EQ(F("x^3-x^2-2x+1").splitting_type(13), T("(111)"));
    EXPECT_EQ(F("x^3-x^2-2x+1").splitting_type(2), T("(3)"));
}

TEST(SplittingType, DecorationAtTwo)
{
    auto t0 = F("x^3-22x-8").splitting_type(2);
    EXPECT_EQ(t0.to_string(), "(1^21)_0");
    auto t4 = F("x^3-11x-12").splitting_type(2);
    EXPECT_EQ(t4.to_string(), "(1^21)_4");
    EXPECT_EQ(F("x^3-22x-8").splitting_type(3).decoration, -1);
}

TEST(SplittingType, ParseRoundTrip)
{
    for (const char* s : {"(3)", "(21)", "(111)", "(1^21)_0", "(1^21)_4", "(1^3)", "(31)", "(1^21^2)", "(2^2)",
                          "(1^4)", "(21^2)", "(1^211)", "(1^31)", "(1111)", "(22)", "(4)", "(211)"})
        EXPECT_EQ(T(s).to_string(), s);
    EXPECT_THROW(T("(1^)"), InvalidInput);
}

TEST(SplittingType, DegreesSumOverCorpus)
{
    for (auto& row : split_table_rows()) {
        for (const std::string& s : {row.k, row.L}) {
            NumberField K(IntPoly::parse(s));
            for (auto p : primes_up_to(200)) EXPECT_EQ(K.splitting_type(p).degree(), K.degree());
        }
    }
}

TEST(IsIsomorphic, Examples)
{
    EXPECT_TRUE(is_isomorphic(F("x^3+4x-1"), NumberField(resolvent_cubic(IntPoly::parse("x^4-x-1")))));
    EXPECT_TRUE(is_isomorphic(F("x^2+1"), F("x^2+4")));
    EXPECT_FALSE(is_isomorphic(F("x^3-2"), F("x^3-3")));
    // same discriminant, different fields
    EXPECT_FALSE(is_isomorphic(F("x^3-21x-28"), F("x^3-21x-35")));
}

TEST(IsIsomorphic, TransformedPolynomials)
{
    // x -> x + 3 and x -> -x give the same field
    IntPoly f = IntPoly::parse("x^4-2x^3-4x^2+4x+2");
    EXPECT_TRUE(is_isomorphic(NumberField(f), NumberField(f.compose_linear(1, 3))));
    IntPoly g = f.compose_linear(-1, 0);
    EXPECT_TRUE(is_isomorphic(NumberField(f), NumberField(g)));
}

TEST(GaloisType, Examples)
{
    EXPECT_EQ(galois_type_quartic(F("x^4+x^3+x^2+x+1")), QuarticGalois::C4);
    EXPECT_EQ(galois_type_quartic(F("x^4-x^3-7x^2+2x+9")), QuarticGalois::A4);
    EXPECT_EQ(galois_type_quartic(F("x^4-x-1")), QuarticGalois::S4);
    EXPECT_EQ(galois_type_quartic(F("x^4+1")), QuarticGalois::V4);
    EXPECT_EQ(galois_type_quartic(F("x^4-2")), QuarticGalois::D4);
    EXPECT_THROW(galois_type_quartic(F("x^3-2")), InvalidInput);
}

TEST(DiscDecompose, Examples)
{
    auto a = disc_decompose(F("x^3-x^2-2x+1"));
    EXPECT_EQ(a.D, 1);
    EXPECT_EQ(a.f, 7);
    auto b = disc_decompose(F("x^3-x^2-3x+1"));
    EXPECT_EQ(b.D, 37);
    EXPECT_EQ(b.f, 2);
    auto c = disc_decompose(F("x^3-x-2"));
    EXPECT_EQ(c.D, -104);
    EXPECT_EQ(c.f, 1);
    auto d = disc_decompose(F("x^3-2"));  // -108 = -3 * 6^2
    EXPECT_EQ(d.D, -3);
    EXPECT_EQ(d.f, 6);
}

TEST(ClassData, Examples)
{
    auto a = class_data(F("x^3-x^2-2x+1"));
    EXPECT_EQ(a.status, ClassData::Status::Certified);
    EXPECT_EQ(a.rk2, 0);
    auto b = class_data(F("x^3+x^2-54x-169"));
    EXPECT_EQ(b.status, ClassData::Status::Certified);
    EXPECT_EQ(b.rk2, 2);
    auto c = class_data(F("x^3-x^2-3x+1"));
    EXPECT_EQ(c.status, ClassData::Status::Certified);
    EXPECT_EQ(c.rk2_plus, 0);
}

TEST(ClassData, RankSandwich)
{
    for (const char* s : {"x^3-4x-1", "x^3-x^2-5x+4", "x^3-x^2-14x+23", "x^3-x^2+1", "x^3-x^2+x-2"}) {
        NumberField k = F(s);
        auto c = class_data(k);
        ASSERT_EQ(c.status, ClassData::Status::Certified) << s;
        EXPECT_LE(c.rk2, c.rk2_plus) << s;
        EXPECT_LE(c.rk2_plus, c.rk2 + c.tp_unit_rank) << s;
        EXPECT_LE(c.rk2_plus, c.rk2 + k.r1()) << s;
        EXPECT_EQ(c.unit_sig_rank + c.tp_unit_rank, k.r1() + k.r2()) << s;
    }
}

TEST(ClassData, NarrowRankDiffersFromUnitCount)
{
    // a nonsquare totally positive unit, yet the 2-ranks agree
    auto c = class_data(F("x^3-x^2-14x+23"));
    ASSERT_EQ(c.status, ClassData::Status::Certified);
    EXPECT_EQ(c.rk2, 1);
    EXPECT_EQ(c.rk2_plus, 1);
    EXPECT_EQ(c.tp_unit_rank, 1);
}

TEST(ClassData, CyclicCubicsHaveEvenEqualRanks)
{
    SearchSpec s;
    s.degree = 3;
    s.mode = DiscMode::AbsBound;
    s.bound = 100'000;
    s.signature = SignatureFilter::TotallyReal;
    int seen = 0;
    for (auto& k : enumerate_fields(s)) {
        if (!is_cyclic_cubic(k)) continue;
        auto c = class_data(k);
        ASSERT_EQ(c.status, ClassData::Status::Certified) << k.poly().to_string();
        EXPECT_EQ(c.rk2 % 2, 0) << k.poly().to_string();
        EXPECT_EQ(c.rk2_plus, c.rk2) << k.poly().to_string();
        if (++seen == 30) break;
    }
    EXPECT_EQ(seen, 30);
}

TEST(Stickelberger, ParityOverCorpus)
{
    std::vector<NumberField> corpus = congruence_corpus(false);
    for (auto& row : split_table_rows()) corpus.emplace_back(sextic_from_alpha(IntPoly::parse(row.P_alpha)));
    const auto primes = primes_up_to(500);
    long checked = 0;
    for (auto& K : corpus) {
        for (auto p : primes) {
            auto st = K.splitting_type(p);
            if (!st.unramified()) continue;
            int expect = (K.degree() - st.prime_count()) % 2 ? -1 : 1;
            ASSERT_EQ(kronecker(K.disc(), Integer(p)), expect) << K.poly().to_string() << " p=" << p;
            ++checked;
        }
    }
    EXPECT_GT(checked, 10000);
}

TEST(Stickelberger, RamifiedIffDividesDisc)
{
    for (auto& row : split_table_rows()) {
        NumberField L(IntPoly::parse(row.L));
        for (auto p : primes_up_to(200))
            EXPECT_EQ(!L.splitting_type(p).unramified(), L.disc() % p == 0) << row.L << " p=" << p;
    }
}
