#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quartres/integer.hpp"
#include "quartres/number_field.hpp"
#include "quartres/resolvent.hpp"

namespace quartres {

// Local factor 1 + c1 t + c2 t^2 + ... in t = p^-s.
struct EulerFactor {
    std::uint64_t p = 2;
    std::vector<Rational> c{Rational(1)};

    static EulerFactor linear(std::uint64_t p, long a);  // 1 + a t
};

// Polynomial of degree <= 4 in u = 2^-s.
struct TwoAdicFactor {
    std::array<Rational, 5> c{Rational(1), 0, 0, 0, 0};

    TwoAdicFactor() = default;
    TwoAdicFactor(std::initializer_list<long> coeffs);

    Rational at_one() const;  // value at s = 1
    EulerFactor as_euler() const;
    std::string to_string() const;  // "1+u^2-2u^4"
    TwoAdicFactor operator+(const TwoAdicFactor& o) const;
    TwoAdicFactor operator*(const Rational& r) const;
    friend bool operator==(const TwoAdicFactor&, const TwoAdicFactor&) = default;
};

// Coefficients a_1..a_X of sum a_n n^-s.
class DirichletCoeffs {
public:
    explicit DirichletCoeffs(std::uint64_t X);  // zero series
    static DirichletCoeffs one(std::uint64_t X);

    std::uint64_t bound() const { return X_; }
    const Rational& operator[](std::uint64_t n) const { return a_[n]; }
    Rational& operator[](std::uint64_t n) { return a_[n]; }

    void multiply(const EulerFactor& f);  // in place
    DirichletCoeffs operator*(const DirichletCoeffs& o) const;  // truncated convolution
    DirichletCoeffs operator+(const DirichletCoeffs& o) const;
    DirichletCoeffs& operator+=(const DirichletCoeffs& o);
    DirichletCoeffs& operator*=(const Rational& r);
    friend bool operator==(const DirichletCoeffs&, const DirichletCoeffs&) = default;

    // One line per nonzero coefficient.
    std::string to_jsonl() const;
    std::string to_csv() const;

private:
    std::uint64_t X_;
    std::vector<Rational> a_;  // a_[0] unused
};

DirichletCoeffs euler_product(const std::map<std::uint64_t, EulerFactor>& factors, std::uint64_t X);

int omega_from_type(const SplittingType& t);
int omega_L(const NumberField& L, std::uint64_t p);

// 2-adic tables. Row lookup throws InvalidInput for absent combinations.
TwoAdicFactor m1_factor(const SplittingType& k_split);
TwoAdicFactor m2_factor(const SplittingType& k_split, const SplittingType& L_split, int n2);

struct M1Row {
    SplittingType k_split;
    TwoAdicFactor factor;
    int eight_m1_at_one;
};
struct M2Row {
    SplittingType k_split;
    SplittingType L_split;
    int n2;
    TwoAdicFactor factor;
};
const std::vector<M1Row>& m1_table();
const std::vector<M2Row>& m2_table();

// Ideal c | 2Z_k as exponents over the primes above 2 (in the order of the
// supplied (e, f) list).
struct TwoIdeal {
    std::vector<std::pair<int, int>> ef;
    std::vector<int> exps;

    int norm_exp() const;  // N(c) = 2^norm_exp
    bool divides(const TwoIdeal& o) const;
    bool is_unit() const;
    bool is_two() const;  // c = 2Z_k
    std::string to_string() const;
    friend bool operator==(const TwoIdeal&, const TwoIdeal&) = default;
    friend auto operator<=>(const TwoIdeal& a, const TwoIdeal& b) { return a.exps <=> b.exps; }
};

// Canonical labelling of the primes above 2 in a cubic k: (21): p1 of degree 1
// first; (1^21): p1 ramified first; otherwise the order is irrelevant.
std::vector<std::pair<int, int>> two_primes_ef(const SplittingType& k_split);
std::vector<TwoIdeal> all_two_ideals(const SplittingType& k_split);

// k_split must carry the decoration when it is (1^21).
int z_k(const SplittingType& k_split, const TwoIdeal& c);

enum class Family { L1, L4, L16, Ltr64 };
Family family_of_n2(int n2);
std::string to_string(Family f);

// Ideals c at which a field of the given family has its character.
// distinguished: index of the prime unramified in K6, needed for (111) with L16.
std::vector<TwoIdeal> contributing_ideals(const SplittingType& k_split, Family fam,
                                          std::optional<int> distinguished = std::nullopt);

inline int a_of(const NumberField& k) { return is_cyclic_cubic(k) ? 3 : 1; }

// Closed form: 2^r2 Phi = (1/a) M1 prod(...) + sum_L M2_L prod(1 + omega_L(p) p^-s).
// Signed: quarter of the same shape with r2 = 0 and the unrestricted list.
DirichletCoeffs phi_k(const NumberField& k, const std::vector<QuarticRecord>& L2, std::uint64_t X,
                      bool signed_variant);

// Character-sum form; K6 data is derived from each L through its resolvent sextic.
DirichletCoeffs phi_k_charsum(const NumberField& k, const std::vector<QuarticRecord>& L2, std::uint64_t X,
                              bool signed_variant);

// chi values (+1 split, -1 inert, 0 ramified) of the primes of k above p in
// the quadratic extension K6/k, matched against k's primes_above(p) order
// through (e, f) data. Throws InternalError if the data is ambiguous in a way
// that matters.
std::vector<int> chi_at(const NumberField& k, const NumberField& K6, std::uint64_t p);

}  // namespace quartres
