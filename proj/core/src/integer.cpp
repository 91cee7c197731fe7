#include "quartres/integer.hpp"

#include <algorithm>
#include <map>

#include "quartres/errors.hpp"

namespace quartres {

bool is_square(const Integer& n)
{
    if (sgn(n) < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer isqrt(const Integer& n)
{
    if (sgn(n) < 0) throw InvalidInput("isqrt of negative");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_prime(const Integer& n)
{
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { comp = false; break; }
        }
        if (comp) return false;
    }
    return true;
}

namespace {

Integer pollard_brent(const Integer& n, unsigned long c)
{
    Integer y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const Integer& v) { Integer t = v * v + c; return Integer(t % n); };
    do {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = f(y);
        unsigned long k = 0;
        do {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                q = (q * abs(Integer(x - y))) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        } while (k < r && g == 1);
        r *= 2;
    } while (g == 1);
    if (g == n) {
        do {
            ys = f(ys);
            Integer d = abs(Integer(x - ys));
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g;
}

void split_into(const Integer& n, std::map<Integer, int>& out)
{
    if (n == 1) return;
    if (is_prime(n)) { out[n] += 1; return; }
    if (is_square(n)) {
        Integer r = isqrt(n);
        split_into(r, out);
        split_into(r, out);
        return;
    }
    for (unsigned long c = 1;; ++c) {
        Integer d = pollard_brent(n, c);
        if (d != n && d != 1) {
            split_into(d, out);
            split_into(Integer(n / d), out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<Integer, int>> factor_integer(const Integer& n0)
{
    if (n0 == 0) throw InvalidInput("factor_integer(0)");
    Integer n = abs(n0);
    std::map<Integer, int> acc;
    for (unsigned long p = 2; p < 100000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            acc[Integer(p)] += 1;
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    if (n > 1) split_into(n, acc);
    return {acc.begin(), acc.end()};
}

SquarefreeSplit squarefree_part(const Integer& n)
{
    if (n == 0) throw InvalidInput("squarefree_part(0)");
    Integer s = sgn(n) < 0 ? -1 : 1, m = 1;
    for (auto& [p, e] : factor_integer(n)) {
        for (int i = 0; i < e / 2; ++i) m *= p;
        if (e % 2) s *= p;
    }
    return {s, m};
}

int valuation(Integer n, const Integer& p)
{
    if (n == 0) throw InvalidInput("valuation of 0");
    return static_cast<int>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

int kronecker(const Integer& a, const Integer& n)
{
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s)
{
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw InvalidInput("bad rational: " + s);
    q.canonicalize();
    return q;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p)
{
    // p prime
    a %= p;
    if (a == 0) throw InvalidInput("invmod of 0");
    return powmod(a, p - 2, p);
}

std::uint64_t mod_ui(const Integer& z, std::uint64_t p)
{
    Integer r;
    Integer pp;
    mpz_set_ui(pp.get_mpz_t(), p);
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t());
    return mpz_get_ui(r.get_mpz_t());
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    std::vector<bool> comp(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) comp[j] = true;
    }
    return out;
}

}  // namespace quartres
