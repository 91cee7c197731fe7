#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quartres/integer.hpp"

namespace quartres {

// Dense univariate polynomial over Z, constant term first.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> c);
    IntPoly(std::initializer_list<long> c);

    static IntPoly monomial(const Integer& c, int deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Integer& operator[](int i) const;
    const Integer& leading() const;
    const std::vector<Integer>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    IntPoly derivative() const;
    Integer eval(const Integer& x) const;
    Rational eval(const Rational& x) const;
    IntPoly compose_x2() const;              // P(x^2)
    IntPoly compose_linear(const Integer& a, const Integer& b) const;  // P(a x + b)

    // Human syntax, e.g. "x^4-2x^3-4x^2+4x+2".
    std::string to_string(char var = 'x') const;
    // Accepts human syntax or a JSON array of integers / decimal strings.
    static IntPoly parse(std::string_view text);
    std::string to_json() const;  // ["c0","c1",...]

    friend bool operator==(const IntPoly&, const IntPoly&) = default;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const Integer& s, const IntPoly& a);

private:
    void trim();
    std::vector<Integer> c_;
};

bool lex_less(const IntPoly& a, const IntPoly& b);

Integer content(const IntPoly& f);
IntPoly primitive_part(const IntPoly& f);
// primitive, positive leading coefficient
IntPoly normalize_key(const IntPoly& f);
Integer naive_height(const IntPoly& f);

// a = q*b + r with b monic.
void divmod_monic(const IntPoly& a, const IntPoly& b, IntPoly& q, IntPoly& r);
IntPoly rem_monic(const IntPoly& a, const IntPoly& b);
bool divides_exact(const IntPoly& b, const IntPoly& a, IntPoly* quotient = nullptr);

Integer resultant(const IntPoly& f, const IntPoly& g);
Integer poly_discriminant(const IntPoly& f);

// Determinant by fraction-free elimination.
Integer det_bareiss(std::vector<std::vector<Integer>> m);

}  // namespace quartres
