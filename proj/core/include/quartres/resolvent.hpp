#pragma once

#include <optional>
#include <string>

#include "quartres/number_field.hpp"

namespace quartres {

// x^3 - a2 x^2 + (a1 a3 - 4 a0) x + 4 a0 a2 - a1^2 - a0 a3^2 for monic
// x^4 + a3 x^3 + a2 x^2 + a1 x + a0. Same polynomial discriminant.
IntPoly resolvent_cubic(const IntPoly& q);

// P = x^3 + a2 x^2 + a1 x + a0 with -a0 a nonzero square:
// x^4 + 2 a2 x^2 - 8 sqrt(-a0) x + a2^2 - 4 a1. Disc is 2^12 disc(P).
IntPoly quartic_from_alpha(const IntPoly& P);
// P(x^2); defines k(sqrt(alpha)).
IntPoly sextic_from_alpha(const IntPoly& P);
// A sextic for the quadratic extension of the resolvent attached to a monic
// quartic: k(sqrt(beta)) with beta = a3^2 - 4 a2 + 4 theta.
IntPoly sextic_from_quartic(const IntPoly& q);

// Integer roots of a monic integer polynomial.
std::vector<Integer> integer_roots(const IntPoly& f);

struct QuarticRecord {
    NumberField L;
    NumberField k;
    Integer f;                // Disc(L) = Disc(k) f^2
    std::optional<int> n2;    // f^2 when it is 1, 4, 16 or 64
    QuarticGalois galois;
    bool totally_real = false;
    bool two_totally_ramified = false;

    std::string to_json() const;
};

QuarticRecord make_quartic_record(const NumberField& L);

}  // namespace quartres
