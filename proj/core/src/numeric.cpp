#include "numeric.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "quartres/errors.hpp"

namespace quartres {

namespace {

using LC = std::complex<long double>;

std::vector<LC> aberth(const IntPoly& f)
{
    const int n = f.degree();
    std::vector<long double> a(n + 1);
    for (int i = 0; i <= n; ++i) a[i] = f[i].get_d();
    long double lc = a[n];
    long double bound = 0;
    for (int i = 0; i < n; ++i) bound = std::max(bound, std::fabs(a[i] / lc));
    bound += 1;
    std::vector<LC> z(n);
    const long double pi = 3.14159265358979323846264338327950288L;
    for (int k = 0; k < n; ++k) z[k] = std::polar(bound * 0.7L, 2 * pi * k / n + 0.4L);
    auto evald = [&](LC x, LC& d) {
        LC v = a[n];
        d = 0;
        for (int i = n - 1; i >= 0; --i) {
            d = d * x + v;
            v = v * x + a[i];
        }
        return v;
    };
    for (int it = 0; it < 2000; ++it) {
        long double worst = 0;
        for (int k = 0; k < n; ++k) {
            LC d;
            LC v = evald(z[k], d);
            if (v == LC(0)) continue;
            LC w = v / d;
            LC s = 0;
            for (int j = 0; j < n; ++j)
                if (j != k) s += LC(1) / (z[k] - z[j]);
            LC corr = w / (LC(1) - w * s);
            z[k] -= corr;
            worst = std::max(worst, std::abs(corr) / std::max<long double>(1, std::abs(z[k])));
        }
        if (worst < 1e-17L) break;
    }
    return z;
}

HC polish(const IntPoly& f, HC z)
{
    const int n = f.degree();
    std::vector<HP> a(n + 1);
    for (int i = 0; i <= n; ++i) a[i] = HP(f[i].get_str());
    for (int it = 0; it < 12; ++it) {
        HC v = HC(a[n]), d = HC(0);
        for (int i = n - 1; i >= 0; --i) {
            d = d * z + v;
            v = v * z + HC(a[i]);
        }
        if (d == HC(0)) break;
        HC step = v / d;
        z -= step;
        if (abs(step) < HP("1e-48") * (1 + abs(z))) break;
    }
    return z;
}

}  // namespace

std::vector<HC> complex_roots(const IntPoly& f)
{
    std::vector<HC> out;
    if (f.degree() < 1) return out;
    for (LC z : aberth(f)) out.push_back(polish(f, HC(HP(z.real()), HP(z.imag()))));
    return out;
}

NumericData compute_numeric(const IntPoly& f, int r1)
{
    NumericData nd;
    nd.r1 = r1;
    std::vector<HC> z = complex_roots(f);
    std::sort(z.begin(), z.end(), [](const HC& a, const HC& b) { return abs(a.imag()) < abs(b.imag()); });
    std::vector<HC> real(z.begin(), z.begin() + r1);
    for (auto& x : real) x = HC(x.real(), HP(0));
    std::sort(real.begin(), real.end(), [](const HC& a, const HC& b) { return a.real() < b.real(); });
    std::vector<HC> cplx;
    for (size_t i = r1; i < z.size(); ++i)
        if (z[i].imag() > 0) cplx.push_back(z[i]);
    std::sort(cplx.begin(), cplx.end(), [](const HC& a, const HC& b) { return a.real() < b.real(); });
    if (static_cast<int>(cplx.size() * 2 + real.size()) != f.degree())
        throw InternalError("root classification failed for " + f.to_string());
    nd.roots = real;
    for (auto& c : cplx) {
        nd.roots.push_back(c);
        nd.roots.push_back(conj(c));
    }
    return nd;
}

namespace detail {

HC eval_power(const QVec& c, const HC& x)
{
    HC v(0);
    for (size_t i = c.size(); i-- > 0;) {
        HP q = HP(c[i].get_num().get_str()) / HP(c[i].get_den().get_str());
        v = v * x + HC(q);
    }
    return v;
}

std::vector<int> real_signs(const NumericData& nd, const QVec& c)
{
    std::vector<int> s;
    for (int i = 0; i < nd.r1; ++i) {
        HP v = eval_power(c, nd.roots[i]).real();
        if (abs(v) < HP("1e-40")) throw InternalError("sign at real embedding below working precision");
        s.push_back(v > 0 ? 1 : -1);
    }
    return s;
}

Integer round_to_integer(const HP& x, bool& ok)
{
    HP r = round(x);
    ok = abs(x - r) < HP("1e-20");
    std::string s = r.str(0, std::ios_base::fixed);
    auto dot = s.find('.');
    if (dot != std::string::npos) s = s.substr(0, dot);
    if (s == "-0") s = "0";
    return Integer(s);
}

}  // namespace detail

}  // namespace quartres
