#pragma once

#include <cstdint>
#include <vector>

#include "quartres/intpoly.hpp"

namespace quartres {

// Polynomial over F_p, constant term first, no trailing zeros.
using ModPoly = std::vector<std::uint64_t>;

struct ModPFactor {
    ModPoly poly;  // monic irreducible
    int multiplicity = 0;
    int degree() const { return static_cast<int>(poly.size()) - 1; }
};

struct ModPFactorization {
    std::uint64_t p = 0;
    std::uint64_t unit = 1;  // leading coefficient of the input mod p
    std::vector<ModPFactor> factors;  // sorted by (degree, coefficients)
};

ModPFactorization factor_mod_p(const IntPoly& f, std::uint64_t p, std::uint64_t seed = 0);

// Seed for the randomized splitting inside prime decomposition; default 0.
// Set once before any fields are built.
void set_random_seed(std::uint64_t seed);
std::uint64_t random_seed();

// Degrees of the irreducible factors (with multiplicity), ascending. Faster
// than a full factorization since no equal-degree splitting is done.
std::vector<int> factor_degrees_mod_p(const IntPoly& f, std::uint64_t p);

namespace modp {

ModPoly reduce(const IntPoly& f, std::uint64_t p);
void trim(ModPoly& a);
int deg(const ModPoly& a);
ModPoly add(const ModPoly& a, const ModPoly& b, std::uint64_t p);
ModPoly sub(const ModPoly& a, const ModPoly& b, std::uint64_t p);
ModPoly mul(const ModPoly& a, const ModPoly& b, std::uint64_t p);
ModPoly rem(const ModPoly& a, const ModPoly& b, std::uint64_t p);
ModPoly div(const ModPoly& a, const ModPoly& b, std::uint64_t p);
ModPoly gcd(ModPoly a, ModPoly b, std::uint64_t p);
ModPoly monic(const ModPoly& a, std::uint64_t p);
ModPoly powmod(ModPoly base, std::uint64_t e, const ModPoly& m, std::uint64_t p);
ModPoly derivative(const ModPoly& a, std::uint64_t p);

}  // namespace modp

}  // namespace quartres
