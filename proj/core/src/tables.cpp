#include <algorithm>

#include "quartres/dirichlet.hpp"
#include "quartres/errors.hpp"

namespace quartres {

namespace {

SplittingType st(const char* s) { return SplittingType::parse(s); }

bool same_type(const SplittingType& a, const SplittingType& b)
{
    return a.ef == b.ef && a.decoration == b.decoration;
}

void require_cubic_two_split(const SplittingType& t)
{
    if (t.degree() != 3) throw InvalidInput("not a cubic splitting type: " + t.to_string());
    bool r121 = t.ef.size() == 2 && t.ef[0] == std::pair{2, 1};
    if (r121 && t.decoration < 0) throw InvalidInput("(1^21) at 2 needs its _0/_4 decoration");
    if (!r121 && t.decoration >= 0) throw InvalidInput("decoration on a type other than (1^21)");
}

}  // namespace

int omega_from_type(const SplittingType& t)
{
    static const std::vector<std::pair<SplittingType, int>> table = {
        {st("(4)"), -1}, {st("(22)"), -1}, {st("(21^2)"), -1},
        {st("(211)"), 1}, {st("(1^211)"), 1}, {st("(1111)"), 3},
    };
    for (auto& [type, w] : table)
        if (type.ef == t.ef) return w;
    return 0;
}

int omega_L(const NumberField& L, std::uint64_t p)
{
    if (L.degree() != 4) throw InvalidInput("omega_L needs a quartic field");
    return omega_from_type(L.splitting_type(p));
}

const std::vector<M1Row>& m1_table()
{
    static const std::vector<M1Row> rows = {
        {st("(3)"), {1, 0, 0, 3}, 11},
        {st("(21)"), {1, 0, 1, 4, 2}, 15},
        {st("(111)"), {1, 0, 3, 6, 6}, 23},
        {st("(1^21)_0"), {1, 1, 0, 2, 4}, 16},
        {st("(1^21)_4"), {1, 1, 2, 0, 4}, 18},
        {st("(1^3)"), {1, 1, 0, 2}, 14},
    };
    return rows;
}

const std::vector<M2Row>& m2_table()
{
    static const std::vector<M2Row> rows = {
        {st("(3)"), st("(31)"), 1, {1, 0, 0, 3}},
        {st("(3)"), st("(1^4)"), 64, {1, 0, 0, -1}},
        {st("(21)"), st("(4)"), 1, {1, 0, 1, 0, -2}},
        {st("(21)"), st("(211)"), 1, {1, 0, 1, 4, 2}},
        {st("(21)"), st("(2^2)"), 16, {1, 0, 1, -4, 2}},
        {st("(21)"), st("(1^21^2)"), 16, {1, 0, 1, 0, -2}},
        {st("(21)"), st("(1^4)"), 64, {1, 0, -1}},
        {st("(111)"), st("(22)"), 1, {1, 0, 3, -2, -2}},
        {st("(111)"), st("(2^2)"), 16, {1, 0, -1, -2, 2}},
        {st("(111)"), st("(1111)"), 1, {1, 0, 3, 6, 6}},
        {st("(111)"), st("(1^21^2)"), 16, {1, 0, -1, 2, -2}},
        {st("(1^21)_0"), st("(21^2)"), 1, {1, 1, 0, 2, -4}},
        {st("(1^21)_0"), st("(1^211)"), 1, {1, 1, 0, 2, 4}},
        {st("(1^21)_0"), st("(1^21^2)"), 4, {1, 1, 0, -2}},
        {st("(1^21)_0"), st("(1^4)"), 64, {1, -1}},
        {st("(1^21)_4"), st("(21^2)"), 1, {1, 1, 2, 0, -4}},
        {st("(1^21)_4"), st("(1^211)"), 1, {1, 1, 2, 0, 4}},
        {st("(1^21)_4"), st("(2^2)"), 4, {1, 1, -2}},
        {st("(1^21)_4"), st("(2^2)"), 16, {1, -1}},
        {st("(1^21)_4"), st("(1^21^2)"), 16, {1, -1}},
        {st("(1^3)"), st("(1^31)"), 1, {1, 1, 0, 2}},
        {st("(1^3)"), st("(1^4)"), 4, {1, 1, 0, -2}},
        {st("(1^3)"), st("(1^4)"), 64, {1, -1}},
    };
    return rows;
}

TwoAdicFactor m1_factor(const SplittingType& k_split)
{
    require_cubic_two_split(k_split);
    for (auto& r : m1_table())
        if (same_type(r.k_split, k_split)) return r.factor;
    throw InvalidInput("no M1 row for " + k_split.to_string());
}

TwoAdicFactor m2_factor(const SplittingType& k_split, const SplittingType& L_split, int n2)
{
    require_cubic_two_split(k_split);
    for (auto& r : m2_table())
        if (same_type(r.k_split, k_split) && r.L_split.ef == L_split.ef && r.n2 == n2) return r.factor;
    throw InvalidInput("invalid combination: k " + k_split.to_string() + ", L " + L_split.to_string() +
                       ", n^2 = " + std::to_string(n2));
}

// --- ideals above 2 -------------------------------------------------------

int TwoIdeal::norm_exp() const
{
    int s = 0;
    for (size_t i = 0; i < exps.size(); ++i) s += ef[i].second * exps[i];
    return s;
}

bool TwoIdeal::divides(const TwoIdeal& o) const
{
    for (size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > o.exps[i]) return false;
    return true;
}

bool TwoIdeal::is_unit() const
{
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

bool TwoIdeal::is_two() const
{
    for (size_t i = 0; i < exps.size(); ++i)
        if (exps[i] != ef[i].first) return false;
    return true;
}

std::string TwoIdeal::to_string() const
{
    if (is_unit()) return "(1)";
    if (is_two()) return "(2)";
    std::string s;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (!exps[i]) continue;
        s += "p" + std::to_string(i + 1);
        if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
    }
    return s;
}

std::vector<std::pair<int, int>> two_primes_ef(const SplittingType& k_split)
{
    require_cubic_two_split(k_split);
    auto ef = k_split.ef;
    // (21): the degree-1 prime is p1
    if (ef.size() == 2 && ef[0].first == 1) std::swap(ef[0], ef[1]);
    return ef;
}

std::vector<TwoIdeal> all_two_ideals(const SplittingType& k_split)
{
    TwoIdeal c{two_primes_ef(k_split), {}};
    c.exps.assign(c.ef.size(), 0);
    std::vector<TwoIdeal> out;
    for (;;) {
        out.push_back(c);
        size_t i = 0;
        while (i < c.exps.size() && c.exps[i] == c.ef[i].first) c.exps[i++] = 0;
        if (i == c.exps.size()) break;
        ++c.exps[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

int z_k(const SplittingType& k_split, const TwoIdeal& c)
{
    require_cubic_two_split(k_split);
    if (c.ef != two_primes_ef(k_split)) throw InvalidInput("ideal does not match the splitting of 2");
    if (c.is_two()) return 2;
    const auto& e = c.exps;
    if (k_split.decoration >= 0) {
        if (e[0] == 1 && e[1] == 1) return 2;
        if (e[0] == 0 && e[1] == 1 && k_split.decoration == 4) return 2;
    }
    if (c.ef.size() == 1 && c.ef[0].first == 3 && e[0] == 2) return 2;
    return 1;
}

Family family_of_n2(int n2)
{
    switch (n2) {
    case 1: return Family::L1;
    case 4: return Family::L4;
    case 16: return Family::L16;
    case 64: return Family::Ltr64;
    }
    throw InvalidInput("n^2 must be 1, 4, 16 or 64");
}

std::string to_string(Family f)
{
    switch (f) {
    case Family::L1: return "L(k,1)";
    case Family::L4: return "L(k,4)";
    case Family::L16: return "L(k,16)";
    case Family::Ltr64: return "Ltr(k,64)";
    }
    return "?";
}

std::vector<TwoIdeal> contributing_ideals(const SplittingType& k_split, Family fam, std::optional<int> distinguished)
{
    auto ef = two_primes_ef(k_split);
    if (fam == Family::L1) return all_two_ideals(k_split);
    auto mk = [&](std::vector<int> e) { return TwoIdeal{ef, std::move(e)}; };
    const std::string t = k_split.to_string();
    const bool need_dist = t == "(111)" && fam == Family::L16;
    if (need_dist != distinguished.has_value()) throw InvalidInput("distinguished prime given wrongly for " + t);
    std::vector<TwoIdeal> out;
    auto bad = [&] { throw InvalidInput("no contributing set for " + t + " and " + to_string(fam)); };
    if (fam == Family::L4) {
        if (t == "(1^21)_0") out = {mk({1, 0}), mk({0, 1}), mk({2, 0}), mk({1, 1}), mk({2, 1})};
        else if (t == "(1^21)_4") out = {mk({1, 0}), mk({2, 0}), mk({1, 1}), mk({2, 1})};
        else if (t == "(1^3)") out = {mk({1}), mk({2}), mk({3})};
        else bad();
    } else if (fam == Family::L16) {
        if (t == "(21)") out = {mk({1, 0}), mk({0, 1}), mk({1, 1})};
        else if (t == "(111)") {
            int d = *distinguished;
            if (d < 0 || d > 2) throw InvalidInput("distinguished prime index out of range");
            std::vector<int> pd(3, 0);
            pd[d] = 1;
            out = {mk(pd), mk({1, 1, 0}), mk({1, 0, 1}), mk({0, 1, 1}), mk({1, 1, 1})};
        } else if (t == "(1^21)_4") out = {mk({2, 0}), mk({2, 1})};
        else bad();
    } else {
        if (t == "(3)" || t == "(1^3)") out = {mk(std::vector<int>{ef[0].first})};
        else if (t == "(21)") out = {mk({0, 1}), mk({1, 1})};
        else if (t == "(1^21)_0") out = {mk({2, 0}), mk({2, 1})};
        else bad();
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace quartres
