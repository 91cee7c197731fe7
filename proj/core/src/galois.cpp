#include <algorithm>

#include "numeric.hpp"
#include "quartres/errors.hpp"
#include "quartres/resolvent.hpp"

namespace quartres {

std::string to_string(QuarticGalois g)
{
    switch (g) {
    case QuarticGalois::C4: return "C4";
    case QuarticGalois::V4: return "V4";
    case QuarticGalois::D4: return "D4";
    case QuarticGalois::A4: return "A4";
    case QuarticGalois::S4: return "S4";
    }
    return "?";
}

std::vector<Integer> integer_roots(const IntPoly& f)
{
    if (!f.is_monic()) throw InvalidInput("integer_roots: polynomial must be monic");
    std::vector<Integer> out;
    if (f.degree() < 1) return out;
    if (f[0] == 0) {
        out.push_back(0);
        IntPoly g(std::vector<Integer>(f.coeffs().begin() + 1, f.coeffs().end()));
        for (auto& r : integer_roots(g))
            if (r != 0) out.push_back(r);
        std::sort(out.begin(), out.end());
        return out;
    }
    for (auto& z : complex_roots(f)) {
        if (abs(z.imag()) > HP("1e-10")) continue;
        bool ok;
        Integer r = detail::round_to_integer(z.real(), ok);
        HP delta = abs(z.real() - HP(r.get_str()));
        if (delta > HP("1e-6")) continue;
        if (f.eval(r) == 0 && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// x^2 + u x + v splits over Q(sqrt(D))
bool splits_over(const Integer& u, const Integer& v, const Integer& D)
{
    Integer delta = u * u - 4 * v;
    return delta == 0 || is_square(delta) || is_square(Integer(delta * D));
}

}  // namespace

QuarticGalois galois_type_quartic(const NumberField& L)
{
    if (L.degree() != 4) throw InvalidInput("galois_type_quartic needs a quartic field");
    const IntPoly& q = L.poly();
    IntPoly R = resolvent_cubic(q);
    std::vector<Integer> roots = integer_roots(R);
    Integer disc = poly_discriminant(q);
    if (roots.empty()) return is_square(disc) ? QuarticGalois::A4 : QuarticGalois::S4;
    if (roots.size() == 3) return QuarticGalois::V4;
    const Integer& t = roots[0];
    const Integer &a = q[3], &b = q[2], &d = q[0];
    bool c4 = splits_over(Integer(-t), d, disc) && splits_over(a, Integer(b - t), disc);
    return c4 ? QuarticGalois::C4 : QuarticGalois::D4;
}

}  // namespace quartres
