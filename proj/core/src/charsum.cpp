#include <algorithm>
#include <map>

#include "dirichlet_internal.hpp"
#include "quartres/dirichlet.hpp"
#include "quartres/errors.hpp"

namespace quartres {

namespace {

// status per prime of k: +1 split, -1 inert, 0 ramified in K6/k
std::vector<std::pair<int, int>> lift(const std::vector<std::pair<int, int>>& ef, const std::vector<int>& st)
{
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < ef.size(); ++i) {
        auto [e, f] = ef[i];
        if (st[i] == 1) {
            out.emplace_back(e, f);
            out.emplace_back(e, f);
        } else if (st[i] == -1) out.emplace_back(e, 2 * f);
        else out.emplace_back(2 * e, f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// multiset of statuses per (e, f) class: the data that matters up to relabelling
std::map<std::pair<int, int>, std::vector<int>> signature(const std::vector<std::pair<int, int>>& ef,
                                                         const std::vector<int>& st)
{
    std::map<std::pair<int, int>, std::vector<int>> m;
    for (size_t i = 0; i < ef.size(); ++i) m[ef[i]].push_back(st[i]);
    for (auto& [key, v] : m) std::sort(v.begin(), v.end());
    return m;
}

// p1, p2, ... as in two_primes_ef, applied to values given in primes_above order
std::vector<int> to_labelled(const SplittingType& k2, std::vector<int> chi)
{
    if (k2.ef.size() == 2 && k2.ef[0].first == 1) std::swap(chi[0], chi[1]);
    return chi;
}

// T_c for the splitting of 2 in k, with chi in labelled order.
Rational t_coeff(const TwoIdeal& c, const std::vector<int>& chi)
{
    const auto& e = c.exps;
    if (c.ef.size() == 2 && c.ef[0].first == 1)  // (21)
        return e[1] == 0 ? chi[0] : 0;
    if (c.ef.size() == 2)  // (1^21)
        return e[0] == 0 && e[1] == 0 ? chi[0] : 0;
    if (c.ef.size() == 3) {
        int s = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (e[i] == 0 && e[j] == 0) s += chi[3 - i - j];
        return s;
    }
    return 0;
}

// sum over c of N(c)^{-1} z(c) u^{3-d} prod (1 - u^f) T_c, as a polynomial in u
TwoAdicFactor two_sum(const SplittingType& k2, const std::vector<TwoIdeal>& cs, const std::vector<int>& chi)
{
    TwoAdicFactor acc;
    acc.c.fill(Rational(0));
    for (auto& c : cs) {
        int d = c.norm_exp();
        std::vector<Rational> poly(5, Rational(0));
        poly[3 - d] = Rational(z_k(k2, c)) / (1 << d);
        for (size_t i = 0; i < c.exps.size(); ++i) {
            if (!c.exps[i]) continue;
            int f = c.ef[i].second;
            for (int j = 4; j >= f; --j) poly[j] -= poly[j - f];
        }
        Rational t = t_coeff(c, chi);
        for (int j = 4; j >= 1; --j) poly[j] += t * poly[j - 1];
        for (int j = 0; j < 5; ++j) acc.c[j] += poly[j];
    }
    return acc;
}

// Odd-prime factor 1 + (...)t of F_k for a character given by chi (primes_above order).
long odd_local_coeff(const NumberField& k, std::uint64_t p, const std::vector<int>& chi)
{
    const auto& P = k.primes_above(p);
    if (P.size() == 3) return chi[0] + chi[1] + chi[2];
    if (P.size() == 2) {
        // the degree-1 unramified prime for (21), the ramified prime for (1^21)
        for (size_t i = 0; i < 2; ++i) {
            bool pick = P[0].e == 2 ? P[i].e == 2 : P[i].f == 1;
            if (pick) return chi[i];
        }
    }
    return 0;
}

bool relevant(const NumberField& k, std::uint64_t p)
{
    return k.primes_above(p).size() >= 2;
}

}  // namespace

std::vector<int> chi_at(const NumberField& k, const NumberField& K6, std::uint64_t p)
{
    if (K6.degree() != 2 * k.degree()) throw InvalidInput("K6 must have twice the degree of k");
    std::vector<std::pair<int, int>> ef;
    for (auto& P : k.primes_above(p)) ef.emplace_back(P.e, P.f);
    std::vector<std::pair<int, int>> target;
    for (auto& Q : K6.primes_above(p)) target.emplace_back(Q.e, Q.f);
    std::sort(target.begin(), target.end());

    const size_t g = ef.size();
    std::vector<int> st(g, -1), found;
    std::optional<std::map<std::pair<int, int>, std::vector<int>>> sig;
    int total = 1;
    for (size_t i = 0; i < g; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
        int c = code;
        for (size_t i = 0; i < g; ++i) {
            st[i] = c % 3 - 1;
            c /= 3;
        }
        if (lift(ef, st) != target) continue;
        auto s = signature(ef, st);
        if (!sig) {
            sig = s;
            found = st;
        } else if (*sig != s) {
            throw InternalError("K6 splitting data at " + std::to_string(p) + " does not determine chi");
        }
    }
    if (!sig) throw InternalError("K6 splitting at " + std::to_string(p) + " incompatible with k");
    return found;
}

DirichletCoeffs phi_k_charsum(const NumberField& k, const std::vector<QuarticRecord>& L2, std::uint64_t X,
                              bool signed_variant)
{
    detail::check_L2_list(k, L2, signed_variant);
    const SplittingType k2 = k.splitting_type(2);
    const int a = a_of(k);
    const auto ideals = all_two_ideals(k2);
    const auto odd = primes_up_to(X);

    // trivial character
    std::vector<int> ones(k2.ef.size(), 1);
    DirichletCoeffs total = DirichletCoeffs::one(X);
    for (std::uint64_t p : odd)
        if (p != 2 && relevant(k, p))
            total.multiply(EulerFactor::linear(p, odd_local_coeff(k, p, std::vector<int>(3, 1))));
    total.multiply((two_sum(k2, ideals, ones) * Rational(4)).as_euler());

    for (auto& rec : L2) {
        NumberField K6(sextic_from_quartic(rec.L.poly()));
        std::vector<int> chi2 = to_labelled(k2, chi_at(k, K6, 2));
        Family fam = family_of_n2(*rec.n2);
        std::optional<int> dist;
        if (fam == Family::L16 && k2.ef.size() == 3) {
            int unram = 0;
            for (int i = 0; i < 3; ++i)
                if (chi2[i] != 0) {
                    dist = i;
                    ++unram;
                }
            if (unram != 1) throw InternalError("expected one prime above 2 unramified in K6");
        }
        auto cs = contributing_ideals(k2, fam, dist);
        DirichletCoeffs s = DirichletCoeffs::one(X);
        for (std::uint64_t p : odd)
            if (p != 2 && relevant(k, p)) s.multiply(EulerFactor::linear(p, odd_local_coeff(k, p, chi_at(k, K6, p))));
        // the a(k) characters attached to one quartic contribute equally
        s.multiply((two_sum(k2, cs, chi2) * Rational(4)).as_euler());
        s *= Rational(a);
        total += s;
    }
    // prefactor 2^{2-r2}/a (unsigned) or 1/a (signed); the 4 is already inside
    total *= Rational(1, a);
    if (signed_variant) total *= Rational(1, 4);
    else total *= Rational(1, 1 << k.r2());
    return total;
}

}  // namespace quartres
