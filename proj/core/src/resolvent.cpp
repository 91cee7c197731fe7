#include "quartres/resolvent.hpp"

#include <sstream>

#include "quartres/errors.hpp"

namespace quartres {

IntPoly resolvent_cubic(const IntPoly& q)
{
    if (q.degree() != 4 || !q.is_monic()) throw InvalidInput("resolvent_cubic needs a monic quartic");
    const Integer &a0 = q[0], &a1 = q[1], &a2 = q[2], &a3 = q[3];
    IntPoly r(std::vector<Integer>{4 * a0 * a2 - a1 * a1 - a0 * a3 * a3, a1 * a3 - 4 * a0, -a2, 1});
    if (poly_discriminant(r) != poly_discriminant(q))
        throw InternalError("resolvent cubic changed the polynomial discriminant");
    return r;
}

IntPoly quartic_from_alpha(const IntPoly& P)
{
    if (P.degree() != 3 || !P.is_monic()) throw InvalidInput("alpha polynomial must be a monic cubic");
    const Integer &a0 = P[0], &a1 = P[1], &a2 = P[2];
    Integer m = -a0;
    if (m <= 0 || !is_square(m)) throw InvalidInput("alpha does not have nonzero square norm: " + P.to_string());
    if (!is_irreducible(P)) throw InvalidInput("alpha polynomial is reducible: " + P.to_string());
    Integer s = isqrt(m);
    IntPoly q(std::vector<Integer>{a2 * a2 - 4 * a1, -8 * s, 2 * a2, 0, 1});
    Integer d4 = poly_discriminant(q), d3 = poly_discriminant(P);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, 12);
    if (d4 != scale * d3) throw InternalError("quartic_from_alpha: discriminant identity failed");
    return q;
}

IntPoly sextic_from_alpha(const IntPoly& P)
{
    if (P.degree() != 3 || !P.is_monic()) throw InvalidInput("alpha polynomial must be a monic cubic");
    Integer m = -P[0];
    if (m <= 0 || !is_square(m)) throw InvalidInput("alpha does not have nonzero square norm: " + P.to_string());
    if (!is_irreducible(P)) throw InvalidInput("alpha polynomial is reducible: " + P.to_string());
    IntPoly s = P.compose_x2();
    if (!is_irreducible(s)) throw InvalidInput("alpha is a square in k: " + P.to_string());
    return s;
}

IntPoly sextic_from_quartic(const IntPoly& q)
{
    IntPoly R = resolvent_cubic(q);
    Integer c = q[3] * q[3] - 4 * q[2];
    // char poly of beta = c + 4 theta: 64 R((y - c)/4)
    IntPoly lin(std::vector<Integer>{-c, 1});
    IntPoly lin2 = lin * lin;
    IntPoly pb = lin2 * lin + Integer(4 * R[2]) * lin2 + Integer(16 * R[1]) * lin + IntPoly(std::vector<Integer>{64 * R[0]});
    IntPoly s = pb.compose_x2();
    if (!is_irreducible(s)) throw InvalidInput("quadratic extension degenerate for " + q.to_string());
    return s;
}

QuarticRecord make_quartic_record(const NumberField& L)
{
    if (L.degree() != 4) throw InvalidInput("make_quartic_record needs a quartic field");
    QuarticGalois g = galois_type_quartic(L);
    if (g != QuarticGalois::A4 && g != QuarticGalois::S4)
        throw InvalidInput("out of family: Galois group " + to_string(g));
    NumberField k = make_field(resolvent_cubic(L.poly()));
    if (L.disc() % k.disc() != 0) throw InternalError("Disc(k) does not divide Disc(L)");
    Integer ratio = L.disc() / k.disc();
    if (!is_square(ratio)) throw InternalError("Disc(L)/Disc(k) is not a square for " + L.poly().to_string());
    Integer f = isqrt(ratio);
    std::optional<int> n2;
    if (f == 1 || f == 2 || f == 4 || f == 8) n2 = static_cast<int>(f.get_si() * f.get_si());
    QuarticRecord rec{L, k, f, n2, g, L.totally_real(), L.splitting_type(2).totally_ramified()};
    return rec;
}

std::string QuarticRecord::to_json() const
{
    std::ostringstream os;
    os << "{\"L_poly\":" << L.poly().to_json() << ",\"k_poly\":" << k.poly().to_json() << ",\"disc_L\":\""
       << L.disc().get_str() << "\",\"disc_k\":\"" << k.disc().get_str() << "\",\"f\":\"" << f.get_str() << "\"";
    if (n2) os << ",\"n2\":" << *n2;
    os << ",\"galois\":\"" << to_string(galois) << "\",\"totally_real\":" << (totally_real ? "true" : "false")
       << ",\"two_tr\":" << (two_totally_ramified ? "true" : "false") << "}";
    return os.str();
}

}  // namespace quartres
