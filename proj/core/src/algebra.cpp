#include "algebra.hpp"

namespace quartres::detail {

AlgebraModP::AlgebraModP(const std::vector<std::vector<ZVec>>& mt, const ZVec& one, std::uint64_t p_)
    : p(p_), n(static_cast<int>(mt.size()))
{
    t.assign(n, std::vector<FpVec>(n, FpVec(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) t[i][j][k] = mod_ui(mt[i][j][k], p);
    unit.resize(n);
    for (int i = 0; i < n; ++i) unit[i] = mod_ui(one[i], p);
}

FpVec AlgebraModP::mul(const FpVec& a, const FpVec& b) const
{
    std::vector<unsigned __int128> acc(n, 0);
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            std::uint64_t s = mulmod(a[i], b[j], p);
            const FpVec& row = t[i][j];
            for (int k = 0; k < n; ++k)
                if (row[k]) acc[k] = (acc[k] + static_cast<unsigned __int128>(s) * row[k]) % p;
        }
    }
    FpVec r(n);
    for (int k = 0; k < n; ++k) r[k] = static_cast<std::uint64_t>(acc[k]);
    return r;
}

FpVec AlgebraModP::pow(FpVec a, std::uint64_t e) const
{
    FpVec r = unit;
    while (e) {
        if (e & 1) r = mul(r, a);
        e >>= 1;
        if (e) a = mul(a, a);
    }
    return r;
}

FpVec AlgebraModP::sub(const FpVec& a, const FpVec& b) const
{
    FpVec r(n);
    for (int i = 0; i < n; ++i) r[i] = (a[i] + p - b[i]) % p;
    return r;
}

FpVec AlgebraModP::scale(const FpVec& a, std::uint64_t s) const
{
    FpVec r(n);
    for (int i = 0; i < n; ++i) r[i] = mulmod(a[i], s, p);
    return r;
}

FpMat AlgebraModP::mul_matrix(const FpVec& a) const
{
    FpMat m(n);
    for (int i = 0; i < n; ++i) {
        FpVec e(n, 0);
        e[i] = 1;
        m[i] = mul(a, e);
    }
    return m;
}

FpMat AlgebraModP::radical() const
{
    // x -> x^q with q = p^j >= n is F_p-linear and kills exactly the nilradical
    std::uint64_t q = p;
    int j = 1;
    while (q < static_cast<std::uint64_t>(n)) { q *= p; ++j; }
    FpMat images(n);
    for (int i = 0; i < n; ++i) {
        FpVec e(n, 0);
        e[i] = 1;
        FpVec y = e;
        for (int s = 0; s < j; ++s) y = pow(y, p);
        images[i] = y;
    }
    FpMat ker = fp_left_kernel(images, p);
    return fp_row_basis(ker, p);
}

}  // namespace quartres::detail
