#include "dirichlet_internal.hpp"
#include "quartres/dirichlet.hpp"
#include "quartres/errors.hpp"

namespace quartres {

namespace detail {

// Local factor of the main term at an odd prime, from k's splitting type.
long main_local_coeff(const SplittingType& t)
{
    if (!t.unramified() && !(t.ef.size() == 2 && t.ef[0].first == 2)) return 0;
    if (t.ef.size() == 3) return 3;
    if (t.ef.size() == 2) return 1;  // (21) or (1^21)
    return 0;
}

void check_L2_list(const NumberField& k, const std::vector<QuarticRecord>& L2, bool signed_variant)
{
    if (k.degree() != 3) throw InvalidInput("k must be a cubic field");
    if (signed_variant && !k.totally_real()) throw InvalidInput("signed series needs a totally real k");
    for (auto& rec : L2) {
        if (!rec.n2) throw InvalidInput("field outside L2: Disc(L)/Disc(k) = " + to_string(Integer(rec.f * rec.f)));
        if (rec.k.disc() != k.disc() || !is_isomorphic(rec.k, k))
            throw InvalidInput("resolvent mismatch for " + rec.L.poly().to_string());
        if (*rec.n2 == 64 && !rec.two_totally_ramified)
            throw InvalidInput("n^2 = 64 field without 2 totally ramified: " + rec.L.poly().to_string());
        if (!signed_variant && k.totally_real() && !rec.totally_real)
            throw InvalidInput("L2 of a totally real k only holds totally real fields: " + rec.L.poly().to_string());
    }
}

}  // namespace detail

DirichletCoeffs phi_k(const NumberField& k, const std::vector<QuarticRecord>& L2, std::uint64_t X,
                      bool signed_variant)
{
    detail::check_L2_list(k, L2, signed_variant);
    const SplittingType k2 = k.splitting_type(2);
    const int a = a_of(k);

    DirichletCoeffs total = DirichletCoeffs::one(X);
    for (std::uint64_t p : primes_up_to(X)) {
        if (p == 2) continue;
        total.multiply(EulerFactor::linear(p, detail::main_local_coeff(k.splitting_type(p))));
    }
    total.multiply(m1_factor(k2).as_euler());
    total *= Rational(1, a);

    for (auto& rec : L2) {
        DirichletCoeffs s = DirichletCoeffs::one(X);
        for (std::uint64_t p : primes_up_to(X)) {
            if (p == 2) continue;
            s.multiply(EulerFactor::linear(p, omega_L(rec.L, p)));
        }
        s.multiply(m2_factor(k2, rec.L.splitting_type(2), *rec.n2).as_euler());
        total += s;
    }
    if (signed_variant) total *= Rational(1, 4);
    else total *= Rational(1, 1 << k.r2());
    return total;
}

}  // namespace quartres
