#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace quartres {

using Integer = mpz_class;
using Rational = mpq_class;

bool is_square(const Integer& n);
Integer isqrt(const Integer& n);  // floor sqrt, n >= 0
bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);

// n = s * m^2 with s squarefree carrying the sign of n.
struct SquarefreeSplit {
    Integer s;
    Integer m;
};
SquarefreeSplit squarefree_part(const Integer& n);

// Prime factorization of |n|, primes ascending. n != 0.
std::vector<std::pair<Integer, int>> factor_integer(const Integer& n);

int valuation(Integer n, const Integer& p);  // n != 0
int kronecker(const Integer& a, const Integer& n);

// "p/q", or "n" when integral.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
Rational parse_rational(const std::string& s);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);
std::uint64_t mod_ui(const Integer& z, std::uint64_t p);  // nonnegative residue

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

}  // namespace quartres
