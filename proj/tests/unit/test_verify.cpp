#include <gtest/gtest.h>

#include <algorithm>

#include "quartres/dirichlet.hpp"
#include "quartres/errors.hpp"
#include "quartres/verify.hpp"

using namespace quartres;

namespace {

NumberField F(const std::string& s) { return NumberField(IntPoly::parse(s)); }
SplittingType T(const char* s) { return SplittingType::parse(s); }

}  // namespace

TEST(Allowed, OddPrimes)
{
    EXPECT_TRUE(splitting_allowed(T("(3)"), T("(31)"), 5));
    EXPECT_FALSE(splitting_allowed(T("(3)"), T("(1111)"), 5));
    EXPECT_TRUE(splitting_allowed(T("(111)"), T("(22)"), 7));
    EXPECT_TRUE(splitting_allowed(T("(21)"), T("(1^21^2)"), 3));
    EXPECT_FALSE(splitting_allowed(T("(21)"), T("(1^4)"), 3));
    EXPECT_TRUE(splitting_allowed(T("(1^3)"), T("(1^31)"), 3));
    EXPECT_TRUE(splitting_allowed(T("(1^21)"), T("(1^4)"), 5));
    EXPECT_FALSE(splitting_allowed(T("(111)"), T("(1^4)"), 5));
}

TEST(Allowed, ExtraCasesAtTwo)
{
    EXPECT_TRUE(splitting_allowed(T("(21)"), T("(1^4)"), 2));
    EXPECT_TRUE(splitting_allowed(T("(1^21)_0"), T("(1^21^2)"), 2));
    EXPECT_TRUE(splitting_allowed(T("(1^21)_4"), T("(2^2)"), 2));
    EXPECT_FALSE(splitting_allowed(T("(1^21)_0"), T("(2^2)"), 2));
}

TEST(Artin, TableRows)
{
    for (auto& row : split_table_rows()) {
        NumberField k = F(row.k), L = F(row.L), K6(sextic_from_alpha(IntPoly::parse(row.P_alpha)));
        for (auto p : primes_up_to(60)) EXPECT_TRUE(check_artin(k, K6, L, p)) << row.L << " p=" << p;
        EXPECT_TRUE(check_totally_ramified(k, K6, L)) << row.L;
        // the sextic sees total ramification exactly on the (1^4) rows
        bool all_zero = true;
        for (int v : chi_at(k, K6, 2)) all_zero &= v == 0;
        EXPECT_EQ(all_zero, row.L_split == "(1^4)") << row.L;
    }
}

TEST(Artin, WrongSexticFails)
{
    // L from one row against (k, K6) of the next: some prime must disagree
    auto& rows = split_table_rows();
    for (size_t i = 0; i < rows.size(); ++i) {
        auto& a = rows[i];
        auto& b = rows[(i + 1) % rows.size()];
        NumberField k = F(b.k), L = F(a.L), K6(sextic_from_alpha(IntPoly::parse(b.P_alpha)));
        bool all = true;
        for (auto p : primes_up_to(300)) all &= check_artin(k, K6, L, p);
        EXPECT_FALSE(all) << a.L << " against row of " << b.L;
    }
}

TEST(Audit, BuiltInTablesPass)
{
    auto r = audit_split_tables(split_table_rows());
    EXPECT_TRUE(r.passed()) << r.witness;
}

TEST(Audit, CorruptedRowsFail)
{
    auto rows = split_table_rows();
    rows[4].L_split = "(1^21^2)";
    auto r = audit_split_tables(rows);
    EXPECT_FALSE(r.passed());
    EXPECT_NE(r.witness.find("row 5"), std::string::npos) << r.witness;

    rows = split_table_rows();
    rows[0].n2 = rows[0].n2 == 1 ? 4 : 1;
    EXPECT_FALSE(audit_split_tables(rows).passed());

    rows = split_table_rows();
    std::swap(rows[2].L, rows[7].L);
    EXPECT_FALSE(audit_split_tables(rows).passed());
}

TEST(FiveFields, Pass)
{
    auto& c = five_field_case();
    std::vector<IntPoly> qs;
    for (auto& q : c.quartics) qs.push_back(IntPoly::parse(q));
    auto r = five_fields_check(F(c.k), qs);
    EXPECT_TRUE(r.passed()) << r.witness;
    EXPECT_NE(r.detail.find(IntPoly::parse(c.quartics[0]).to_string()), std::string::npos) << r.detail;

    std::reverse(qs.begin(), qs.end());
    auto r2 = five_fields_check(F(c.k), qs);
    EXPECT_TRUE(r2.passed());
    EXPECT_EQ(r2.detail, r.detail);
}

TEST(FiveFields, ForeignFieldFails)
{
    auto& c = five_field_case();
    std::vector<IntPoly> qs;
    for (auto& q : c.quartics) qs.push_back(IntPoly::parse(q));
    qs[2] = IntPoly::parse("x^4-x^3-7x^2+2x+9");
    EXPECT_FALSE(five_fields_check(F(c.k), qs).passed());
    qs.pop_back();
    EXPECT_FALSE(five_fields_check(F(c.k), qs).passed());
}

TEST(Congruences, Rules)
{
    EXPECT_FALSE(congruence_violation(3, 148, T("(1^3)")));
    EXPECT_TRUE(congruence_violation(3, 148, T("(21)")));
    EXPECT_FALSE(congruence_violation(3, 49, T("(3)")));
    EXPECT_FALSE(congruence_violation(4, 64 * 229, T("(1^4)")));
    EXPECT_TRUE(congruence_violation(4, 229, T("(1^4)")));
    EXPECT_TRUE(congruence_violation(4, 16 * 229, T("(1^211)")));
}

TEST(Congruences, QuickCorpusPasses)
{
    auto r = check_disc_congruences(congruence_corpus(false));
    EXPECT_TRUE(r.passed()) << r.witness;
}

TEST(Counting, SmallCubics)
{
    for (const char* s : {"x^3-x^2-2x+1", "x^3-x^2-3x+1", "x^3-4x-1", "x^3-x^2+1"}) {
        auto r = check_counting(F(s));
        EXPECT_TRUE(r.passed()) << s << ": " << r.witness;
    }
}

TEST(PhiReport, PassAndJson)
{
    auto r = verify_phi(F("x^3-x^2-2x+1"), 13, false);
    EXPECT_TRUE(r.passed()) << r.witness;
    auto j = r.to_json();
    EXPECT_EQ(j.find("runtime"), std::string::npos);
    EXPECT_NE(r.to_json(true).find("runtime"), std::string::npos);
    EXPECT_EQ(r.status_string(), "pass");
}

TEST(M1Closure, Pass)
{
    EXPECT_TRUE(check_m1_closure().passed());
}
