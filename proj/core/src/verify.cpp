#include "quartres/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "json.hpp"
#include "quartres/class_group.hpp"
#include "quartres/dirichlet.hpp"
#include "quartres/enumerate.hpp"
#include "quartres/errors.hpp"

namespace quartres {

std::string VerificationReport::status_string() const
{
    switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::SkippedBudget: return "skipped-budget";
    }
    return "?";
}

std::string VerificationReport::to_json(bool with_runtime) const
{
    nlohmann::ordered_json j;
    j["check"] = name;
    j["status"] = status_string();
    j["witness"] = witness;
    j["detail"] = detail;
    if (with_runtime) j["runtime_s"] = std::round(runtime * 1000) / 1000;
    return j.dump();
}

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point t0 = Clock::now();
    double seconds() const { return std::chrono::duration<double>(Clock::now() - t0).count(); }
};

void fail(VerificationReport& r, const std::string& w)
{
    if (r.status != VerificationReport::Status::Fail) {
        r.status = VerificationReport::Status::Fail;
        r.witness = w;
    }
}

std::string disc_tag(const NumberField& F) { return "disc " + to_string(F.disc()); }

SplittingType strip(SplittingType t)
{
    t.decoration = -1;
    return t;
}

}  // namespace

VerificationReport verify_phi(const NumberField& k, std::uint64_t B, bool signed_variant, int jobs)
{
    Timer t;
    VerificationReport r;
    r.name = std::string("phi ") + (signed_variant ? "signed " : "") + disc_tag(k) + " B=" + std::to_string(B);
    try {
        if (B > ceilings().max_series_bound) throw BudgetExceeded("series bound above the ceiling");
        auto L2 = discover_L2(k, signed_variant, jobs);
        auto F = enumerate_F_of_k(k, B, jobs);
        auto rhs = phi_k(k, L2, B, signed_variant);

        DirichletCoeffs lhs(B);
        lhs[1] = Rational(1, a_of(k));
        long counted = 0;
        for (auto& rec : F.records) {
            if (signed_variant && !rec.totally_real) continue;
            lhs[rec.f.get_ui()] += 1;
            ++counted;
        }
        for (std::uint64_t n = 1; n <= B; ++n) {
            if (lhs[n] != rhs[n]) {
                fail(r, "n=" + std::to_string(n) + " enumerated=" + to_string(lhs[n]) + " formula=" + to_string(rhs[n]));
                break;
            }
        }
        std::ostringstream d;
        d << "|L2" << (signed_variant ? "*" : "") << "|=" << L2.size() << " fields counted=" << counted
          << " coefficients compared on [1," << B << "]";
        r.detail = d.str();
    } catch (const BudgetExceeded& e) {
        r.status = VerificationReport::Status::SkippedBudget;
        r.witness = e.what();
    }
    r.runtime = t.seconds();
    return r;
}

bool splitting_allowed(const SplittingType& k_split, const SplittingType& L_split, std::uint64_t p)
{
    static const std::map<std::string, std::vector<std::string>> odd = {
        {"(3)", {"(31)"}},
        {"(21)", {"(4)", "(211)", "(2^2)", "(1^21^2)"}},
        {"(111)", {"(1111)", "(22)", "(2^2)", "(1^21^2)"}},
        {"(1^21)", {"(21^2)", "(1^211)", "(1^4)"}},
        {"(1^3)", {"(1^31)"}},
    };
    auto it = odd.find(strip(k_split).to_string());
    if (it == odd.end()) return false;
    std::vector<SplittingType> ok;
    for (auto& s : it->second) ok.push_back(SplittingType::parse(s));
    if (p == 2) {
        ok.push_back(SplittingType::parse("(1^4)"));
        if (it->first == "(1^21)") ok.push_back(SplittingType::parse("(1^21^2)"));
        if (k_split.decoration == 4) ok.push_back(SplittingType::parse("(2^2)"));
    }
    const SplittingType l = strip(L_split);
    return std::find(ok.begin(), ok.end(), l) != ok.end();
}

bool check_artin(const NumberField& k, const NumberField& K6, const NumberField& L, std::uint64_t p)
{
    std::vector<int> lhs, rhs{1};
    for (auto& P : L.primes_above(p)) lhs.push_back(P.f);
    for (auto& P : k.primes_above(p)) lhs.push_back(P.f);
    for (auto& P : K6.primes_above(p)) rhs.push_back(P.f);
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    return lhs == rhs;
}

bool check_totally_ramified(const NumberField& k, const NumberField& K6, const NumberField& L, std::uint64_t p)
{
    std::vector<int> chi;
    try {
        chi = chi_at(k, K6, p);
    } catch (const InternalError&) {
        return false;  // K6 is not a quadratic extension of k with these splittings
    }
    bool all_ramified = std::all_of(chi.begin(), chi.end(), [](int c) { return c == 0; });
    bool l_tr = strip(L.splitting_type(p)) == SplittingType::parse("(1^4)");
    return all_ramified == l_tr;
}

VerificationReport audit_split_tables(const std::vector<SplitRow>& rows, std::uint64_t pmax)
{
    Timer t;
    VerificationReport r;
    r.name = "split tables";
    const auto primes = primes_up_to(pmax);
    int i = 0;
    for (auto& row : rows) {
        ++i;
        std::string where = "row " + std::to_string(i) + " " + row.k_split + "|" + row.K6_split + "|" + row.L_split + "|" +
                            std::to_string(row.n2) + ": ";
        try {
            NumberField k(IntPoly::parse(row.k));
            IntPoly P = IntPoly::parse(row.P_alpha);
            NumberField K6(sextic_from_alpha(P));
            NumberField L(IntPoly::parse(row.L));
            auto rec = make_quartic_record(L);

            auto expect = [&](const std::string& what, const SplittingType& want, const SplittingType& got) {
                if (!(want == got)) fail(r, where + what + " expected " + want.to_string() + " got " + got.to_string());
            };
            expect("k-split", SplittingType::parse(row.k_split), k.splitting_type(2));
            expect("K6-split", SplittingType::parse(row.K6_split), K6.splitting_type(2));
            expect("L-split", SplittingType::parse(row.L_split), L.splitting_type(2));
            if (!rec.n2 || *rec.n2 != row.n2)
                fail(r, where + "n2 expected " + std::to_string(row.n2) + " got f=" + to_string(rec.f));
            if (!is_isomorphic(rec.k, k)) fail(r, where + "resolvent of L is not k");

            NumberField L_alpha(quartic_from_alpha(P));
            if (!is_isomorphic(L_alpha, L)) fail(r, where + "quartic from alpha is not L");

            try {
                m2_factor(k.splitting_type(2), L.splitting_type(2), row.n2);
            } catch (const InvalidInput&) {
                fail(r, where + "combination missing from the secondary table");
            }
            if (!check_totally_ramified(k, K6, L, 2)) fail(r, where + "ramification in K6/k disagrees with L at 2");
            for (auto p : primes) {
                if (!check_artin(k, K6, L, p)) fail(r, where + "residue degrees violate zeta relation at p=" + std::to_string(p));
                if (!splitting_allowed(k.splitting_type(p), L.splitting_type(p), p))
                    fail(r, where + "splitting pair " + k.splitting_type(p).to_string() + "/" +
                                L.splitting_type(p).to_string() + " not allowed at p=" + std::to_string(p));
            }
        } catch (const InvalidInput& e) {
            fail(r, where + e.what());
        }
    }

    // combinations that cannot occur for members of L2(k)
    for (const char* ks : {"(111)", "(1^21)_4"}) {
        for (int n2 : {1, 4, 16, 64}) {
            bool present = true;
            try {
                m2_factor(SplittingType::parse(ks), SplittingType::parse("(1^4)"), n2);
            } catch (const InvalidInput&) {
                present = false;
            }
            if (present) fail(r, std::string("excluded combination ") + ks + "|(1^4)|" + std::to_string(n2) + " has a row");
        }
    }
    r.detail = std::to_string(rows.size()) + " rows, primes <= " + std::to_string(pmax);
    r.runtime = t.seconds();
    return r;
}

VerificationReport check_counting(const NumberField& k, int jobs)
{
    Timer t;
    VerificationReport r;
    r.name = "counting " + disc_tag(k);
    try {
        ClassData cd = class_data(k);
        if (cd.status != ClassData::Status::Certified) {
            r.status = VerificationReport::Status::SkippedBudget;
            r.witness = "class data " + cd.status_string();
            r.runtime = t.seconds();
            return r;
        }
        const int a = a_of(k);
        auto L2 = discover_L2(k, false, jobs);
        std::map<int, long> fam;
        for (auto& rec : L2) ++fam[*rec.n2];
        const long n1 = fam[1];
        const long total = static_cast<long>(L2.size());
        const long c1 = 1L << cd.rk2;
        std::ostringstream d;
        d << "rk2=" << cd.rk2 << " rk2+=" << cd.rk2_plus << " a=" << a << " |L(k,1)|=" << n1 << " |L2|=" << total;

        if (n1 * a != c1 - 1) fail(r, "|L(k,1)|=" + std::to_string(n1) + " but (2^rk2-1)/a=" + to_string(Rational(c1 - 1, a)));
        int nonempty = (fam[4] > 0) + (fam[16] > 0) + (fam[64] > 0);
        if (nonempty > 1) fail(r, "more than one secondary family is nonempty");
        if (a == 1) {
            if (total != n1 && total != 2 * n1 + 1) fail(r, "|L2|=" + std::to_string(total) + " not in {|L1|, 2|L1|+1}");
        } else if (total != n1) {
            fail(r, "cyclic k with a nonempty secondary family");
        }
        if (a == 3 && (cd.rk2 % 2 != 0 || cd.rk2 != cd.rk2_plus)) fail(r, "cyclic k with odd rk2 or rk2+ != rk2");

        const bool empty_secondary = total == n1;
        const bool rank_criterion = k.totally_real() && cd.rk2_plus == cd.rk2;
        if (empty_secondary != rank_criterion)
            fail(r, std::string("secondary families ") + (empty_secondary ? "empty" : "nonempty") +
                        " but rk2+ " + (cd.rk2_plus == cd.rk2 ? "=" : "!=") + " rk2");
        const bool unit_criterion = k.totally_real() && cd.tp_unit_rank == 0;
        d << " tp_units=" << cd.tp_unit_rank << (unit_criterion == empty_secondary ? "" : " (unit criterion disagrees)");

        if (k.totally_real()) {
            // |C4| = a|L2| + 1 = |C1+| and |C4+|/|C1+| * |C4|/|C1| = 4
            auto L2s = discover_L2(k, true, jobs);
            const long c4 = a * total + 1;
            const long c1p = 1L << cd.rk2_plus;
            const long c4p = a * static_cast<long>(L2s.size()) + 1;
            d << " |L2*|=" << L2s.size();
            if (c4 != c1p) fail(r, "|C4|=" + std::to_string(c4) + " but |C1+|=2^rk2+=" + std::to_string(c1p));
            if (Rational(c4p, c1p) * Rational(c4, c1) != 4)
                fail(r, "|C4+|/|C1+| * |C4|/|C1| = " + to_string(Rational(c4p * c4) / Rational(c1p * c1)));
        }
        r.detail = d.str();
    } catch (const BudgetExceeded& e) {
        r.status = VerificationReport::Status::SkippedBudget;
        r.witness = e.what();
    }
    r.runtime = t.seconds();
    return r;
}

std::optional<std::string> congruence_violation(int degree, const Integer& D, const SplittingType& st)
{
    static const std::map<std::string, std::vector<int>> quartic_v2 = {
        {"(1^211)", {2, 3}}, {"(21^2)", {2, 3}}, {"(1^21^2)", {4, 5, 6}},
        {"(1^31)", {2}},     {"(2^2)", {4, 6}},  {"(1^4)", {4, 6, 8, 9, 10, 11}},
    };
    if (D == 0) return "zero discriminant";
    const std::string s = strip(st).to_string();
    const int v = valuation(D, 2);
    if (degree == 3) {
        Integer m32 = D % 32, m16 = D % 16;
        if (m32 < 0) m32 += 32;
        if (m16 < 0) m16 += 16;
        if ((s == "(1^3)") != (m32 == 20)) return "type (1^3) iff Disc = 20 mod 32";
        if ((s == "(1^21)") != (m16 == 8 || m16 == 12)) return "type (1^21) iff Disc = 8, 12 mod 16";
        if (v > 3 || m32 == 4) return "impossible 2-part of Disc";
        return std::nullopt;
    }
    if (degree != 4) throw InvalidInput("congruence audit takes cubic and quartic fields only");
    if (st.unramified()) {
        if (v != 0) return "unramified but v2(Disc)=" + std::to_string(v);
        return std::nullopt;
    }
    auto it = quartic_v2.find(s);
    if (it == quartic_v2.end()) return "unexpected ramified type";
    if (std::find(it->second.begin(), it->second.end(), v) == it->second.end())
        return "v2(Disc)=" + std::to_string(v) + " outside the allowed set";
    return std::nullopt;
}

VerificationReport check_disc_congruences(const std::vector<NumberField>& fields)
{
    Timer t;
    VerificationReport r;
    r.name = "disc congruences";
    long cubics = 0, quartics = 0;
    for (auto& F : fields) {
        const SplittingType st = F.splitting_type(2);
        (F.degree() == 3 ? cubics : quartics)++;
        if (auto bad = congruence_violation(F.degree(), F.disc(), st))
            fail(r, F.poly().to_string() + " (" + disc_tag(F) + ", 2 is " + st.to_string() + "): " + *bad);
    }
    r.detail = std::to_string(cubics) + " cubics, " + std::to_string(quartics) + " quartics";
    r.runtime = t.seconds();
    return r;
}

VerificationReport five_fields_check(const NumberField& k, const std::vector<IntPoly>& quartics)
{
    Timer t;
    VerificationReport r;
    r.name = "five fields " + disc_tag(k);
    const SplittingType t1111 = SplittingType::parse("(1111)"), t22 = SplittingType::parse("(22)");
    if (!(k.splitting_type(2) == SplittingType::parse("(111)"))) fail(r, "2 is not totally split in k");
    std::vector<std::string> distinguished;
    long n22 = 0;
    for (auto& q : quartics) {
        NumberField L(q);
        const std::string who = q.to_string() + ": ";
        if (L.disc() != k.disc()) fail(r, who + "Disc(L)=" + to_string(L.disc()) + " differs from Disc(k)");
        auto rec = make_quartic_record(L);
        if (!is_isomorphic(rec.k, k)) fail(r, who + "resolvent is not k");
        SplittingType st = L.splitting_type(2);
        if (st == t1111) distinguished.push_back(q.to_string());
        else if (st == t22) ++n22;
        else fail(r, who + "2 is " + st.to_string());
    }
    if (distinguished.size() != 1)
        fail(r, std::to_string(distinguished.size()) + " fields with 2 totally split");
    else if (n22 + 1 != static_cast<long>(quartics.size()))
        fail(r, "not all other fields have 2 of type (22)");
    r.detail = distinguished.size() == 1 ? "distinguished " + distinguished[0] : "no unique distinguished field";
    r.runtime = t.seconds();
    return r;
}

}  // namespace quartres

namespace quartres {

VerificationReport check_charsum(const NumberField& k, std::uint64_t X, bool signed_variant, int jobs)
{
    Timer t;
    VerificationReport r;
    r.name = std::string("charsum ") + (signed_variant ? "signed " : "") + disc_tag(k) + " X=" + std::to_string(X);
    try {
        auto L2 = discover_L2(k, signed_variant, jobs);
        auto a = phi_k(k, L2, X, signed_variant);
        auto b = phi_k_charsum(k, L2, X, signed_variant);
        for (std::uint64_t n = 1; n <= X; ++n) {
            if (a[n] != b[n]) {
                fail(r, "n=" + std::to_string(n) + " closed form=" + to_string(a[n]) + " character sum=" + to_string(b[n]));
                break;
            }
        }
        r.detail = "|L2" + std::string(signed_variant ? "*" : "") + "|=" + std::to_string(L2.size());
    } catch (const BudgetExceeded& e) {
        r.status = VerificationReport::Status::SkippedBudget;
        r.witness = e.what();
    }
    r.runtime = t.seconds();
    return r;
}

VerificationReport check_m1_closure()
{
    Timer t;
    VerificationReport r;
    r.name = "m1 closure";
    std::string values;
    for (auto& row : m1_table()) {
        Rational v = row.factor.at_one() * 8;
        values += (values.empty() ? "" : ",") + to_string(v);
        if (v != row.eight_m1_at_one)
            fail(r, row.k_split.to_string() + ": 8M1(1)=" + to_string(v) + " but column says " +
                        std::to_string(row.eight_m1_at_one));
    }
    r.detail = "8M1(1) = (" + values + ")";
    r.runtime = t.seconds();
    return r;
}

std::vector<NumberField> congruence_corpus(bool full, int jobs)
{
    std::vector<NumberField> out;
    for (auto& row : split_table_rows()) {
        out.emplace_back(IntPoly::parse(row.k));
        out.emplace_back(IntPoly::parse(row.L));
    }
    SearchSpec s;
    s.degree = 3;
    s.mode = DiscMode::AbsBound;
    s.bound = full ? 50000 : 5000;
    s.jobs = jobs;
    for (auto& k : enumerate_fields(s)) out.push_back(k);
    for (auto& c : phi_cases()) {
        if (!full && !c.quick) continue;
        NumberField k(IntPoly::parse(c.cubic));
        for (auto& rec : enumerate_F_of_k(k, c.bound, jobs).records) out.push_back(rec.L);
    }
    return out;
}

}  // namespace quartres
