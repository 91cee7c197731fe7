#include "quartres/linalg.hpp"

#include <algorithm>

#include "quartres/errors.hpp"

namespace quartres {

ZMat hnf_basis(ZMat rows, int n)
{
    ZMat basis(n, ZVec(n));
    // eliminate from the last column down
    for (int c = n - 1; c >= 0; --c) {
        // rows with a nonzero at c (all columns > c already zero)
        for (;;) {
            int piv = -1;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                if (piv < 0 || abs(rows[i][c]) < abs(rows[piv][c])) piv = static_cast<int>(i);
            }
            if (piv < 0) throw InternalError("hnf_basis: lattice not of full rank");
            bool done = true;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (static_cast<int>(i) == piv || rows[i][c] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[piv][c].get_mpz_t());
                for (int j = 0; j <= c; ++j) rows[i][j] -= q * rows[piv][j];
                if (rows[i][c] != 0) done = false;
            }
            if (done) {
                ZVec b = rows[piv];
                rows.erase(rows.begin() + piv);
                if (b[c] < 0)
                    for (auto& x : b) x = -x;
                basis[c] = b;
                break;
            }
        }
    }
    // reduce below-pivot entries of later rows
    for (int r = 1; r < n; ++r) {
        for (int c = r - 1; c >= 0; --c) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), basis[r][c].get_mpz_t(), basis[c][c].get_mpz_t());
            if (q != 0)
                for (int j = 0; j <= c; ++j) basis[r][j] -= q * basis[c][j];
        }
    }
    return basis;
}

QMat inverse(const QMat& m)
{
    const size_t n = m.size();
    QMat a = m, inv(n, QVec(n));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) throw InvalidInput("inverse: singular matrix");
        std::swap(a[c], a[piv]);
        std::swap(inv[c], inv[piv]);
        Rational s = 1 / a[c][c];
        for (size_t j = 0; j < n; ++j) { a[c][j] *= s; inv[c][j] *= s; }
        for (size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational t = a[i][c];
            for (size_t j = 0; j < n; ++j) { a[i][j] -= t * a[c][j]; inv[i][j] -= t * inv[c][j]; }
        }
    }
    return inv;
}

QVec row_times(const QVec& v, const QMat& m)
{
    QVec r(m.empty() ? 0 : m[0].size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (size_t j = 0; j < r.size(); ++j) r[j] += v[i] * m[i][j];
    }
    return r;
}

namespace {

// In-place reduced row echelon; returns pivot columns.
std::vector<int> rref(FpMat& a, std::uint64_t p)
{
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    const size_t n = a[0].size();
    size_t r = 0;
    for (size_t c = 0; c < n && r < a.size(); ++c) {
        size_t piv = r;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[r], a[piv]);
        std::uint64_t inv = invmod(a[r][c], p);
        for (auto& x : a[r]) x = mulmod(x, inv, p);
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            std::uint64_t t = a[i][c];
            for (size_t j = 0; j < n; ++j) a[i][j] = (a[i][j] + p - mulmod(t, a[r][j], p)) % p;
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    a.resize(r);
    return pivots;
}

}  // namespace

FpMat fp_row_basis(FpMat rows, std::uint64_t p)
{
    rref(rows, p);
    return rows;
}

int fp_rank(FpMat rows, std::uint64_t p)
{
    return static_cast<int>(rref(rows, p).size());
}

FpMat fp_kernel(const FpMat& a0, int n, std::uint64_t p)
{
    FpMat a = a0;
    std::vector<int> piv = rref(a, p);
    std::vector<bool> is_piv(n, false);
    for (int c : piv) is_piv[c] = true;
    FpMat out;
    for (int free = 0; free < n; ++free) {
        if (is_piv[free]) continue;
        FpVec v(n, 0);
        v[free] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = (p - a[r][free]) % p;
        out.push_back(v);
    }
    return out;
}

FpMat fp_left_kernel(const FpMat& a, std::uint64_t p)
{
    if (a.empty()) return {};
    const size_t r = a.size(), n = a[0].size();
    FpMat t(n, FpVec(r));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
    return fp_kernel(t, static_cast<int>(r), p);
}

int f2_rank(std::vector<std::vector<std::uint64_t>> rows)
{
    int rank = 0;
    if (rows.empty()) return 0;
    const size_t words = rows[0].size();
    for (size_t w = 0; w < words; ++w) {
        for (int b = 0; b < 64; ++b) {
            std::uint64_t bit = std::uint64_t(1) << b;
            size_t piv = rank;
            while (piv < rows.size() && !(rows[piv][w] & bit)) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[rank], rows[piv]);
            for (size_t i = 0; i < rows.size(); ++i) {
                if (i != static_cast<size_t>(rank) && (rows[i][w] & bit))
                    for (size_t k = 0; k < words; ++k) rows[i][k] ^= rows[rank][k];
            }
            ++rank;
        }
    }
    return rank;
}

}  // namespace quartres
