// Prime decomposition through the structure of O/pO: radical, idempotents of
// the semisimple quotient, lifting, and a tau element for valuations. Works at
// every prime, common index divisors included.

#include <algorithm>
#include <random>

#include "algebra.hpp"
#include "internal.hpp"
#include "quartres/errors.hpp"
#include "quartres/modp.hpp"

namespace quartres::detail {

namespace {

bool is_zero(const FpVec& v)
{
    return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
}

// Quotient of A by an ideal J given in reduced row echelon form.
struct Quotient {
    const AlgebraModP* A;
    FpMat J;
    std::vector<int> pivots, free_cols;

    Quotient(const AlgebraModP& a, FpMat j) : A(&a), J(std::move(j))
    {
        std::vector<bool> piv(A->n, false);
        for (auto& r : J) {
            int c = 0;
            while (r[c] == 0) ++c;
            pivots.push_back(c);
            piv[c] = true;
        }
        for (int c = 0; c < A->n; ++c)
            if (!piv[c]) free_cols.push_back(c);
    }
    int dim() const { return static_cast<int>(free_cols.size()); }
    // canonical representative of v + J, then restricted to free columns
    FpVec project(FpVec v) const
    {
        const std::uint64_t p = A->p;
        for (size_t r = 0; r < J.size(); ++r) {
            std::uint64_t t = v[pivots[r]];
            if (!t) continue;
            for (int k = 0; k < A->n; ++k) v[k] = (v[k] + p - mulmod(t, J[r][k], p)) % p;
        }
        FpVec out(free_cols.size());
        for (size_t i = 0; i < free_cols.size(); ++i) out[i] = v[free_cols[i]];
        return out;
    }
    FpVec lift(const FpVec& w) const
    {
        FpVec v(A->n, 0);
        for (size_t i = 0; i < free_cols.size(); ++i) v[free_cols[i]] = w[i];
        return v;
    }
    AlgebraModP algebra() const
    {
        AlgebraModP B(A->p, dim());
        int m = dim();
        B.t.assign(m, std::vector<FpVec>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                FpVec a(A->n, 0), b(A->n, 0);
                a[free_cols[i]] = 1;
                b[free_cols[j]] = 1;
                B.t[i][j] = project(A->mul(a, b));
            }
        B.unit = project(A->unit);
        return B;
    }
};

// Minimal polynomial of y inside the unital algebra e*B (identity e).
ModPoly min_poly(const AlgebraModP& B, const FpVec& e, const FpVec& y)
{
    const std::uint64_t p = B.p;
    FpMat powers{e};
    for (;;) {
        FpVec next = B.mul(powers.back(), y);
        // solve next = sum c_i powers[i]
        FpMat sys = powers;
        sys.push_back(next);
        FpMat ker = fp_left_kernel(sys, p);
        if (!ker.empty()) {
            FpVec k = ker[0];
            // k has nonzero last entry since powers are independent
            std::uint64_t inv = invmod(k.back(), p);
            ModPoly mp(k.size());
            for (size_t i = 0; i < k.size(); ++i) mp[i] = mulmod(k[i], inv, p);
            return mp;
        }
        powers.push_back(next);
    }
}

FpVec poly_eval(const AlgebraModP& B, const ModPoly& g, const FpVec& e, const FpVec& y)
{
    FpVec r(B.n, 0);
    for (size_t i = g.size(); i-- > 0;) {
        r = B.mul(r, y);
        FpVec c = B.scale(e, g[i]);
        for (int k = 0; k < B.n; ++k) r[k] = (r[k] + c[k]) % B.p;
    }
    return r;
}

}  // namespace

std::vector<PrimeIdeal> decompose_prime(const NumberField& K, const std::vector<std::vector<ZVec>>& mt,
                                        std::uint64_t p)
{
    if (!is_prime(p)) throw InvalidInput("decompose_prime: not a prime");
    const int n = K.degree();
    AlgebraModP A(mt, K.one(), p);
    Quotient Q(A, A.radical());
    AlgebraModP B = Q.algebra();
    const int m = B.n;

    // Berlekamp subalgebra: fixed points of Frobenius
    FpMat frob_minus_id(m);
    for (int i = 0; i < m; ++i) {
        FpVec e(m, 0);
        e[i] = 1;
        frob_minus_id[i] = B.sub(B.pow(e, p), e);
    }
    FpMat fixed = fp_left_kernel(frob_minus_id, p);
    const size_t g = fixed.size();

    std::vector<FpVec> idem{B.unit};
    std::mt19937_64 rng(0x51u ^ random_seed());
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    int guard = 0;
    while (idem.size() < g) {
        if (++guard > 10000) throw InternalError("idempotent splitting did not converge");
        FpVec x(m, 0);
        for (auto& b : fixed) {
            std::uint64_t c = dist(rng);
            for (int k = 0; k < m; ++k) x[k] = (x[k] + mulmod(c, b[k], p)) % p;
        }
        std::vector<FpVec> next;
        for (auto& e : idem) {
            FpVec y = B.mul(x, e);
            ModPoly mp = min_poly(B, e, y);
            // y lies in a product of copies of F_p, so mp splits into distinct linear factors
            ModPFactorization fac = factor_mod_p(IntPoly([&] {
                std::vector<Integer> c;
                for (auto v : mp) c.emplace_back(v);
                return c;
            }()), p, random_seed());
            if (fac.factors.size() <= 1) {
                next.push_back(e);
                continue;
            }
            for (auto& fi : fac.factors) {
                // e_i = prod_{other roots r} (y - r e) / (c_i - r)
                std::uint64_t ci = (p - fi.poly[0]) % p;
                FpVec prod = e;
                for (auto& fj : fac.factors) {
                    if (&fj == &fi) continue;
                    std::uint64_t cj = (p - fj.poly[0]) % p;
                    FpVec lin = B.sub(y, B.scale(e, cj));
                    prod = B.scale(B.mul(prod, lin), invmod((ci + p - cj) % p, p));
                }
                next.push_back(prod);
            }
        }
        idem = std::move(next);
    }

    std::vector<PrimeIdeal> out;
    for (auto& eps : idem) {
        int f = B.rank_of_ideal(eps);
        // lift to an idempotent of A
        FpVec E = Q.lift(eps);
        for (int it = 0; it < 64; ++it) {
            FpVec E2 = A.mul(E, E);
            if (E2 == E) break;
            FpVec E3 = A.mul(E2, E);
            FpVec t(n);
            for (int k = 0; k < n; ++k) t[k] = (3 * E2[k] % p + 2 * (p - E3[k])) % p;
            E = t;
        }
        if (A.mul(E, E) != E) throw InternalError("idempotent lifting failed");
        int ef = A.rank_of_ideal(E);
        if (ef % f) throw InternalError("prime decomposition: e*f not divisible by f");
        PrimeIdeal P;
        P.p = Integer(p);
        P.f = f;
        P.e = ef / f;
        // maximal ideal P/pO = J + (1 - E) A
        FpMat gens = Q.J;
        FpVec oneMinusE = A.sub(A.unit, E);
        for (auto& r : A.mul_matrix(oneMinusE)) gens.push_back(r);
        gens = fp_row_basis(gens, p);
        // tau with tau * gens = 0
        FpMat cond(n, FpVec(n * gens.size()));
        for (int i = 0; i < n; ++i) {
            FpVec w(n, 0);
            w[i] = 1;
            for (size_t j = 0; j < gens.size(); ++j) {
                FpVec pr = A.mul(w, gens[j]);
                for (int k = 0; k < n; ++k) cond[i][j * n + k] = pr[k];
            }
        }
        FpMat ker = fp_left_kernel(cond, p);
        if (ker.empty() || is_zero(ker[0])) throw InternalError("no tau element for prime ideal");
        P.tau.resize(n);
        for (int k = 0; k < n; ++k) P.tau[k] = ker[0][k];
        out.push_back(std::move(P));
    }
    std::sort(out.begin(), out.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
        if (a.f != b.f) return a.f > b.f;
        if (a.e != b.e) return a.e > b.e;
        return a.tau < b.tau;
    });
    int total = 0;
    for (auto& P : out) total += P.e * P.f;
    if (total != n) throw InternalError("prime decomposition degrees do not sum to n");
    return out;
}

}  // namespace quartres::detail
