// p-maximal enlargement of an order by its p-radical ring of multipliers.

#include <algorithm>

#include "algebra.hpp"
#include "quartres/errors.hpp"
#include "quartres/number_field.hpp"

namespace quartres {

namespace {

struct OrderData {
    ZMat bnum;
    Integer bden;
};

Integer mat_det_abs(const ZMat& m)
{
    Integer d = 1;
    for (size_t i = 0; i < m.size(); ++i) d *= m[i][i];  // triangular
    return abs(d);
}

}  // namespace

void NumberField::build_order()
{
    const int n = n_;
    bnum_.assign(n, ZVec(n));
    for (int i = 0; i < n; ++i) bnum_[i][i] = 1;
    bden_ = 1;
    compute_mult_table();

    Integer pd = poly_discriminant(f_);
    if (n == 1) {
        disc_ = 1;
        index_ = 1;
        return;
    }
    for (auto& [pz, ex] : factor_integer(pd)) {
        if (ex < 2) continue;
        if (!pz.fits_ulong_p()) throw BudgetExceeded("index prime too large: " + pz.get_str());
        const std::uint64_t p = pz.get_ui();
        for (;;) {
            detail::AlgebraModP A(mt_, one(), p);
            FpMat J = A.radical();
            // Z-basis of the radical I_p = lifts of J + pO, in order coordinates
            ZMat gens;
            for (auto& r : J) {
                ZVec v(n);
                for (int i = 0; i < n; ++i) v[i] = r[i];
                gens.push_back(v);
            }
            for (int i = 0; i < n; ++i) {
                ZVec v(n);
                v[i] = pz;
                gens.push_back(v);
            }
            ZMat I = hnf_basis(gens, n);
            QMat Iq(n, QVec(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) Iq[i][j] = I[i][j];
            QMat Iinv = inverse(Iq);
            // x in O with x * I_p inside p I_p: linear conditions mod p on x
            FpMat cond(n, FpVec(n * n));
            for (int i = 0; i < n; ++i) {
                ZVec w(n);
                w[i] = 1;
                for (int j = 0; j < n; ++j) {
                    ZVec prod = mul(w, I[j]);
                    QVec pq(n);
                    for (int k = 0; k < n; ++k) pq[k] = prod[k];
                    QVec c = row_times(pq, Iinv);
                    for (int k = 0; k < n; ++k) {
                        if (c[k].get_den() != 1) throw InternalError("radical is not an ideal");
                        cond[i][j * n + k] = mod_ui(c[k].get_num(), p);
                    }
                }
            }
            FpMat U = fp_left_kernel(cond, p);
            if (U.empty()) break;
            // new order = O + (1/p) U, expressed over the power basis with denominator p*bden
            ZMat rows;
            for (int i = 0; i < n; ++i) {
                ZVec r = bnum_[i];
                for (auto& x : r) x *= pz;
                rows.push_back(r);
            }
            for (auto& u : U) {
                ZVec r(n);
                for (int i = 0; i < n; ++i)
                    if (u[i])
                        for (int j = 0; j < n; ++j) r[j] += Integer(u[i]) * bnum_[i][j];
                rows.push_back(r);
            }
            ZMat nb = hnf_basis(rows, n);
            Integer den = bden_ * pz;
            Integer g = den;
            for (auto& r : nb)
                for (auto& x : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            for (auto& r : nb)
                for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
            bnum_ = nb;
            bden_ = den;
            compute_mult_table();
        }
    }
    // index = bden^n / |det bnum|
    Integer dn;
    mpz_pow_ui(dn.get_mpz_t(), bden_.get_mpz_t(), n);
    Integer det = mat_det_abs(bnum_);
    if (dn % det != 0) throw InternalError("non-integral index");
    index_ = dn / det;
    Integer i2 = index_ * index_;
    if (pd % i2 != 0) throw InternalError("index squared does not divide polynomial discriminant");
    disc_ = pd / i2;
    if ((sgn(disc_) < 0) != (r2_ % 2 == 1)) throw InternalError("discriminant sign disagrees with signature");
}

}  // namespace quartres
