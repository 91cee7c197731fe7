#include <algorithm>
#include <numeric>
#include <set>

#include "numeric.hpp"
#include "quartres/errors.hpp"
#include "quartres/modp.hpp"
#include "quartres/number_field.hpp"

namespace quartres {

namespace {

std::set<int> subset_sums(const std::vector<int>& d)
{
    std::set<int> s{0};
    for (int x : d) {
        std::set<int> t = s;
        for (int y : s) t.insert(x + y);
        s = t;
    }
    return s;
}

// monic integer polynomial with the given roots, if the product rounds cleanly
bool integer_poly_from_roots(const std::vector<HC>& roots, IntPoly& out)
{
    std::vector<HC> c{HC(1)};
    for (auto& r : roots) {
        std::vector<HC> nc(c.size() + 1, HC(0));
        for (size_t i = 0; i < c.size(); ++i) {
            nc[i + 1] += c[i];
            nc[i] -= c[i] * r;
        }
        c = nc;
    }
    std::vector<Integer> z;
    for (auto& x : c) {
        bool ok;
        if (abs(x.imag()) > HP("1e-20")) return false;
        z.push_back(detail::round_to_integer(x.real(), ok));
        if (!ok) return false;
    }
    out = IntPoly(std::move(z));
    return true;
}

}  // namespace

bool is_irreducible(const IntPoly& f0)
{
    IntPoly f = primitive_part(f0);
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    if (!f.is_monic()) {
        // lc^{n-1} f(x / lc) is monic with the same factorization pattern
        Integer lc = f.leading();
        if (sgn(lc) < 0) { f = -f; lc = -lc; }
        std::vector<Integer> c(n + 1);
        for (int i = 0; i < n; ++i) {
            Integer p;
            mpz_pow_ui(p.get_mpz_t(), lc.get_mpz_t(), n - 1 - i);
            c[i] = f[i] * p;
        }
        c[n] = 1;
        f = IntPoly(std::move(c));
    }
    Integer d = poly_discriminant(f);
    if (d == 0) return false;
    std::set<int> possible;
    for (int i = 0; i <= n; ++i) possible.insert(i);
    int used = 0;
    for (std::uint64_t p : primes_up_to(400)) {
        if (mpz_divisible_ui_p(d.get_mpz_t(), p)) continue;
        std::set<int> s = subset_sums(factor_degrees_mod_p(f, p));
        std::set<int> inter;
        std::set_intersection(possible.begin(), possible.end(), s.begin(), s.end(),
                              std::inserter(inter, inter.begin()));
        possible = inter;
        if (possible.size() == 2) return true;
        if (++used >= 25) break;
    }
    std::vector<HC> roots = complex_roots(f);
    for (int k : possible) {
        if (k < 1 || 2 * k > n) continue;
        std::vector<int> sel(n, 0);
        std::fill(sel.end() - k, sel.end(), 1);
        do {
            std::vector<HC> sub;
            for (int i = 0; i < n; ++i)
                if (sel[i]) sub.push_back(roots[i]);
            IntPoly g;
            if (integer_poly_from_roots(sub, g) && divides_exact(g, f)) return false;
        } while (std::next_permutation(sel.begin(), sel.end()));
    }
    return true;
}

std::vector<std::vector<int>> fingerprint(const NumberField& k, std::uint64_t bound)
{
    std::vector<std::vector<int>> fp;
    Integer pd = poly_discriminant(k.poly());
    for (std::uint64_t p : primes_up_to(bound)) {
        if (mpz_divisible_ui_p(k.disc().get_mpz_t(), p)) continue;
        std::vector<int> degs;
        if (!mpz_divisible_ui_p(pd.get_mpz_t(), p)) {
            degs = factor_degrees_mod_p(k.poly(), p);
        } else {
            for (auto [e, f] : k.splitting_type(p).ef) degs.push_back(f);
            std::sort(degs.begin(), degs.end());
        }
        degs.insert(degs.begin(), static_cast<int>(p));
        fp.push_back(degs);
    }
    return fp;
}

namespace {

// Solve the complex linear system m x = b by Gaussian elimination.
std::vector<HC> solve(std::vector<std::vector<HC>> m, std::vector<HC> b)
{
    const size_t n = m.size();
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        for (size_t r = c + 1; r < n; ++r)
            if (abs(m[r][c]) > abs(m[piv][c])) piv = r;
        std::swap(m[c], m[piv]);
        std::swap(b[c], b[piv]);
        for (size_t r = 0; r < n; ++r) {
            if (r == c) continue;
            HC t = m[r][c] / m[c][c];
            for (size_t j = c; j < n; ++j) m[r][j] -= t * m[c][j];
            b[r] -= t * b[c];
        }
    }
    for (size_t i = 0; i < n; ++i) b[i] /= m[i][i];
    return b;
}

// Does g have a root in K? Exact confirmation of numerically found candidates.
bool has_root_in(const NumberField& K, const IntPoly& g)
{
    const int n = K.degree();
    const NumericData& nd = K.numeric();
    std::vector<HC> beta = complex_roots(g);
    // omega_j evaluated at each embedding
    std::vector<std::vector<HC>> omega(n, std::vector<HC>(n));
    QMat B = K.basis();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) omega[i][j] = detail::eval_power(B[j], nd.roots[i]);
    std::vector<int> perm(beta.size());
    std::iota(perm.begin(), perm.end(), 0);
    if (static_cast<int>(beta.size()) != n) return false;
    do {
        std::vector<HC> rhs(n);
        for (int i = 0; i < n; ++i) rhs[i] = beta[perm[i]];
        std::vector<HC> c = solve(omega, rhs);
        ZVec z(n);
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
            if (abs(c[j].imag()) > HP("1e-15")) { ok = false; break; }
            bool r;
            z[j] = detail::round_to_integer(c[j].real(), r);
            ok = r;
        }
        if (!ok) continue;
        // Horner evaluation of g at z inside K
        ZVec acc(n);
        for (int i = g.degree(); i >= 0; --i) {
            acc = K.mul(acc, z);
            ZVec one = K.one();
            for (int k = 0; k < n; ++k) acc[k] += g[i] * one[k];
        }
        if (std::all_of(acc.begin(), acc.end(), [](const Integer& x) { return x == 0; })) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

bool is_isomorphic(const NumberField& a, const NumberField& b)
{
    if (a.degree() != b.degree() || a.disc() != b.disc() || a.r1() != b.r1()) return false;
    if (a.poly() == b.poly()) return true;
    if (a.degree() <= 2) return true;  // quadratic fields are determined by their discriminant
    if (fingerprint(a) != fingerprint(b)) return false;
    return has_root_in(a, b.poly());
}

bool is_cyclic_cubic(const NumberField& k)
{
    return k.degree() == 3 && is_square(k.disc());
}

}  // namespace quartres
