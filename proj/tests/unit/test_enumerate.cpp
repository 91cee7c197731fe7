#include <gtest/gtest.h>

#include <set>

#include "quartres/enumerate.hpp"
#include "quartres/errors.hpp"

using namespace quartres;

namespace {

NumberField F(const char* s) { return NumberField(IntPoly::parse(s)); }

SearchSpec exact(int degree, long d)
{
    SearchSpec s;
    s.degree = degree;
    s.mode = DiscMode::Exact;
    s.target = d;
    return s;
}

SearchSpec bounded(int degree, long b)
{
    SearchSpec s;
    s.degree = degree;
    s.mode = DiscMode::AbsBound;
    s.bound = b;
    return s;
}

std::multiset<Integer> discs(const std::vector<NumberField>& v)
{
    std::multiset<Integer> out;
    for (auto& K : v) out.insert(K.disc());
    return out;
}

}  // namespace

TEST(Enumerate, CubicDisc49)
{
    auto v = enumerate_fields(exact(3, 49));
    ASSERT_EQ(v.size(), 1u);
    EXPECT_TRUE(is_isomorphic(v[0], F("x^3-x^2-2x+1")));
}

TEST(Enumerate, QuarticDisc64Times229)
{
    auto v = enumerate_fields(exact(4, 64 * 229));
    EXPECT_EQ(v.size(), 4u);
    int tr = 0;
    for (auto& L : v) {
        EXPECT_EQ(L.disc(), 64 * 229);
        if (L.r1() == 4) {
            ++tr;
            EXPECT_EQ(L.splitting_type(2).to_string(), "(1^4)");
            EXPECT_TRUE(is_isomorphic(L, F("x^4-2x^3-4x^2+4x+2")));
        }
    }
    EXPECT_EQ(tr, 1);
}

TEST(Enumerate, ResolventFilter26569)
{
    auto s = exact(4, 26569);
    s.resolvent = IntPoly::parse("x^3+x^2-54x-169");
    auto v = enumerate_fields(s);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_TRUE(is_isomorphic(v[0], F("x^4-x^3-7x^2+2x+9")));
    EXPECT_EQ(galois_type_quartic(v[0]), QuarticGalois::A4);
}

TEST(Enumerate, SmallCubicDiscs)
{
    auto tr = bounded(3, 230);
    tr.signature = SignatureFilter::TotallyReal;
    EXPECT_EQ(discs(enumerate_fields(tr)), (std::multiset<Integer>{49, 81, 148, 169, 229}));
    auto neg = bounded(3, 100);
    neg.signature = SignatureFilter::Fixed;
    neg.r1 = 1;
    EXPECT_EQ(discs(enumerate_fields(neg)), (std::multiset<Integer>{-23, -31, -44, -59, -76, -83, -87}));
}

TEST(Enumerate, HunterMatchesNaiveCubics)
{
    auto hunter = enumerate_fields(bounded(3, 300));
    auto naive = naive_fields(3, 5, 300);
    EXPECT_EQ(discs(hunter), discs(naive));
    for (auto& a : naive) {
        bool found = false;
        for (auto& b : hunter) found |= b.disc() == a.disc() && is_isomorphic(a, b);
        EXPECT_TRUE(found) << a.poly().to_string();
    }
}

TEST(Enumerate, HunterMatchesNaiveQuartics)
{
    // primitive quartics only on the search side
    auto hunter = enumerate_fields(bounded(4, 1200));
    std::vector<NumberField> naive;
    for (auto& K : naive_fields(4, 3, 1200)) {
        auto g = galois_type_quartic(K);
        if (g == QuarticGalois::A4 || g == QuarticGalois::S4) naive.push_back(K);
    }
    for (auto& a : naive) {
        bool found = false;
        for (auto& b : hunter) found |= b.disc() == a.disc() && is_isomorphic(a, b);
        EXPECT_TRUE(found) << a.poly().to_string();
    }
    for (size_t i = 0; i < hunter.size(); ++i)
        for (size_t j = i + 1; j < hunter.size(); ++j)
            if (hunter[i].disc() == hunter[j].disc()) EXPECT_FALSE(is_isomorphic(hunter[i], hunter[j]));
    EXPECT_EQ(discs(hunter).count(-283), 1u);
    EXPECT_EQ(discs(hunter).count(229), 1u);
}

TEST(Enumerate, SortedAndReduced)
{
    auto v = enumerate_fields(bounded(3, 2000));
    for (size_t i = 1; i < v.size(); ++i) EXPECT_LE(abs(v[i - 1].disc()), abs(v[i].disc()));
    for (auto& K : v) EXPECT_EQ(K.poly().leading(), 1);
}

TEST(Enumerate, BudgetExceeded)
{
    auto s = bounded(4, 200000);
    s.budget = 1000;
    EXPECT_THROW(enumerate_fields(s), BudgetExceeded);
}

TEST(Enumerate, SquareMultipleMode)
{
    SearchSpec s;
    s.degree = 4;
    s.mode = DiscMode::SquareMultiple;
    s.m = 229;
    s.bound = 8;
    s.resolvent = IntPoly::parse("x^3-4x-1");
    auto v = enumerate_fields(s);
    std::set<Integer> seen;
    for (auto& L : v) {
        auto r = make_quartic_record(L);
        EXPECT_EQ(r.k.disc(), 229);
        seen.insert(r.f);
    }
    EXPECT_TRUE(seen.count(1));
    EXPECT_TRUE(seen.count(8));
}

TEST(DiscoverL2, Examples)
{
    EXPECT_TRUE(discover_L2(F("x^3-x^2-3x+1"), false).empty());
    auto a = discover_L2(F("x^3-4x-1"), false);
    ASSERT_EQ(a.size(), 1u);

    auto b = discover_L2(F("x^3-x^2-5x+4"), true);
    ASSERT_EQ(b.size(), 3u);
    std::multiset<std::string> types;
    for (auto& r : b) types.insert(r.L.splitting_type(2).to_string());
    EXPECT_EQ(types, (std::multiset<std::string>{"(2^2)", "(1^4)", "(1^4)"}));
    for (size_t i = 1; i < b.size(); ++i) EXPECT_LE(*b[i - 1].n2, *b[i].n2);
}

TEST(DiscoverL2, EveryMemberHasTheResolvent)
{
    NumberField k = F("x^3+x^2-54x-169");
    for (auto& r : discover_L2(k, true)) {
        EXPECT_TRUE(is_isomorphic(r.k, k));
        ASSERT_TRUE(r.n2);
        EXPECT_EQ(r.L.disc(), k.disc() * *r.n2);
    }
}

TEST(FieldsOfK, SupersetOfL2)
{
    NumberField k = F("x^3-x^2-5x+4");
    auto all = enumerate_F_of_k(k, 8);
    auto L2 = discover_L2(k, true);
    for (auto& r : L2) {
        bool found = false;
        for (auto& s : all.records) found |= is_isomorphic(s.L, r.L);
        EXPECT_TRUE(found) << r.L.poly().to_string();
    }
    int total = 0;
    for (auto& [f, n] : all.histogram) {
        EXPECT_LE(f, 8);
        total += n;
    }
    EXPECT_EQ(total, static_cast<int>(all.records.size()));
}

TEST(FieldsOfK, Examples)
{
    auto a = enumerate_F_of_k(F("x^3-x^2-2x+1"), 13);
    std::map<Integer, int> expect{{Integer(8), 1}, {Integer(13), 1}};
    EXPECT_EQ(a.histogram, expect);
}
