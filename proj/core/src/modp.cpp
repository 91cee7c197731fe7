#include "quartres/modp.hpp"

#include <algorithm>
#include <atomic>
#include <random>

#include "quartres/errors.hpp"

namespace quartres {
namespace modp {

void trim(ModPoly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

ModPoly reduce(const IntPoly& f, std::uint64_t p)
{
    ModPoly r(f.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = mod_ui(f.coeffs()[i], p);
    trim(r);
    return r;
}

ModPoly add(const ModPoly& a, const ModPoly& b, std::uint64_t p)
{
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = (x + y) % p;
    }
    trim(r);
    return r;
}

ModPoly sub(const ModPoly& a, const ModPoly& b, std::uint64_t p)
{
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    trim(r);
    return r;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, std::uint64_t p)
{
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    trim(r);
    return r;
}

namespace {

void divrem(const ModPoly& a, const ModPoly& b, std::uint64_t p, ModPoly* q, ModPoly* r)
{
    if (b.empty()) throw InvalidInput("polynomial division by zero mod p");
    ModPoly rem = a;
    int db = deg(b);
    std::uint64_t inv = invmod(b.back(), p);
    ModPoly quo;
    if (deg(rem) >= db) quo.assign(deg(rem) - db + 1, 0);
    for (int i = deg(rem); i >= db; --i) {
        std::uint64_t t = mulmod(rem[i], inv, p);
        if (t == 0) continue;
        quo[i - db] = t;
        for (int j = 0; j <= db; ++j) rem[i - db + j] = (rem[i - db + j] + p - mulmod(t, b[j], p)) % p;
    }
    trim(rem);
    trim(quo);
    if (q) *q = std::move(quo);
    if (r) *r = std::move(rem);
}

}  // namespace

ModPoly rem(const ModPoly& a, const ModPoly& b, std::uint64_t p)
{
    ModPoly r;
    divrem(a, b, p, nullptr, &r);
    return r;
}

ModPoly div(const ModPoly& a, const ModPoly& b, std::uint64_t p)
{
    ModPoly q;
    divrem(a, b, p, &q, nullptr);
    return q;
}

ModPoly monic(const ModPoly& a, std::uint64_t p)
{
    if (a.empty()) return a;
    std::uint64_t inv = invmod(a.back(), p);
    ModPoly r = a;
    for (auto& c : r) c = mulmod(c, inv, p);
    return r;
}

ModPoly gcd(ModPoly a, ModPoly b, std::uint64_t p)
{
    while (!b.empty()) {
        ModPoly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

ModPoly powmod(ModPoly base, std::uint64_t e, const ModPoly& m, std::uint64_t p)
{
    ModPoly r{1};
    r = rem(r, m, p);
    base = rem(base, m, p);
    while (e) {
        if (e & 1) r = rem(mul(r, base, p), m, p);
        e >>= 1;
        if (e) base = rem(mul(base, base, p), m, p);
    }
    return r;
}

ModPoly derivative(const ModPoly& a, std::uint64_t p)
{
    if (a.size() <= 1) return {};
    ModPoly d(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) d[i - 1] = mulmod(a[i], i % p, p);
    trim(d);
    return d;
}

}  // namespace modp

namespace {

using namespace modp;

bool is_one(const ModPoly& a) { return a.size() == 1 && a[0] == 1; }

// f monic, nonconstant. Output (squarefree factor, multiplicity).
void squarefree(const ModPoly& f, std::uint64_t p, int mult, std::vector<std::pair<ModPoly, int>>& out)
{
    ModPoly c = gcd(f, derivative(f, p), p);
    ModPoly w = div(f, c, p);
    int i = 1;
    while (!is_one(w)) {
        ModPoly y = gcd(w, c, p);
        ModPoly fac = div(w, y, p);
        if (deg(fac) > 0) out.emplace_back(monic(fac, p), i * mult);
        w = y;
        c = div(c, y, p);
        ++i;
    }
    if (!is_one(c)) {
        // c is a p-th power
        ModPoly root((c.size() - 1) / p + 1, 0);
        for (size_t j = 0; j < root.size(); ++j) root[j] = c[j * p];
        squarefree(root, p, mult * static_cast<int>(p), out);
    }
}

// x^{p^d} chains: returns list of (product of irreducibles of degree d, d).
std::vector<std::pair<ModPoly, int>> distinct_degree(ModPoly f, std::uint64_t p)
{
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly x{0, 1};
    ModPoly h = rem(x, f, p);
    int d = 0;
    while (deg(f) >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, p, f, p);
        ModPoly g = gcd(f, sub(h, x, p), p);
        if (deg(g) > 0) {
            out.emplace_back(g, d);
            f = div(f, g, p);
            h = rem(h, f, p);
        }
    }
    if (deg(f) > 0) out.emplace_back(monic(f, p), deg(f));
    return out;
}

void equal_degree(const ModPoly& f, int d, std::uint64_t p, std::mt19937_64& rng, std::vector<ModPoly>& out)
{
    int n = deg(f);
    if (n == d) { out.push_back(f); return; }
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    for (;;) {
        ModPoly a(n);
        for (auto& c : a) c = dist(rng);
        trim(a);
        if (deg(a) < 1) continue;
        ModPoly b;
        if (p == 2) {
            // trace to F_2: a + a^2 + ... + a^{2^{d-1}}
            ModPoly t = a, s = a;
            for (int i = 1; i < d; ++i) {
                t = rem(mul(t, t, p), f, p);
                s = add(s, t, p);
            }
            b = s;
        } else {
            // a^{(p^d-1)/2} = (a^{1+p+...+p^{d-1}})^{(p-1)/2}
            ModPoly nrm = a, t = a;
            for (int i = 1; i < d; ++i) {
                t = powmod(t, p, f, p);
                nrm = rem(mul(nrm, t, p), f, p);
            }
            b = powmod(nrm, (p - 1) / 2, f, p);
            b = sub(b, ModPoly{1}, p);
        }
        ModPoly g = gcd(f, b, p);
        if (deg(g) > 0 && deg(g) < n) {
            equal_degree(g, d, p, rng, out);
            equal_degree(div(f, g, p), d, p, rng, out);
            return;
        }
    }
}

bool modpoly_less(const ModPFactor& a, const ModPFactor& b)
{
    if (a.poly.size() != b.poly.size()) return a.poly.size() < b.poly.size();
    for (size_t i = a.poly.size(); i-- > 0;)
        if (a.poly[i] != b.poly[i]) return a.poly[i] < b.poly[i];
    return a.multiplicity < b.multiplicity;
}

ModPoly reduced_monic(const IntPoly& f, std::uint64_t p, std::uint64_t& unit)
{
    if (!is_prime(p)) throw InvalidInput("factor_mod_p: modulus is not prime");
    ModPoly r = reduce(f, p);
    if (r.empty()) throw InvalidInput("factor_mod_p: polynomial vanishes mod p");
    unit = r.back();
    return monic(r, p);
}

}  // namespace

namespace {
std::atomic<std::uint64_t> g_seed{0};
}

void set_random_seed(std::uint64_t seed) { g_seed = seed; }
std::uint64_t random_seed() { return g_seed; }

ModPFactorization factor_mod_p(const IntPoly& f, std::uint64_t p, std::uint64_t seed)
{
    ModPFactorization res;
    res.p = p;
    ModPoly g = reduced_monic(f, p, res.unit);
    if (deg(g) == 0) return res;
    std::mt19937_64 rng(seed);
    std::vector<std::pair<ModPoly, int>> sqf;
    squarefree(g, p, 1, sqf);
    for (auto& [s, m] : sqf) {
        for (auto& [block, d] : distinct_degree(s, p)) {
            std::vector<ModPoly> irr;
            equal_degree(block, d, p, rng, irr);
            for (auto& q : irr) res.factors.push_back({q, m});
        }
    }
    std::sort(res.factors.begin(), res.factors.end(), modpoly_less);
    return res;
}

std::vector<int> factor_degrees_mod_p(const IntPoly& f, std::uint64_t p)
{
    std::uint64_t unit;
    ModPoly g = reduced_monic(f, p, unit);
    std::vector<int> out;
    if (deg(g) == 0) return out;
    std::vector<std::pair<ModPoly, int>> sqf;
    squarefree(g, p, 1, sqf);
    for (auto& [s, m] : sqf)
        for (auto& [block, d] : distinct_degree(s, p))
            for (int k = 0; k < deg(block) / d * m; ++k) out.push_back(d);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace quartres
