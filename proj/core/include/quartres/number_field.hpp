#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "quartres/intpoly.hpp"
#include "quartres/linalg.hpp"

namespace quartres {

// Multiset of (e, f) pairs for the primes above p.
struct SplittingType {
    std::vector<std::pair<int, int>> ef;  // sorted: f descending, then e descending
    int decoration = -1;                  // 0 or 4 for a cubic (1^21) at 2, else -1

    int degree() const;
    int prime_count() const { return static_cast<int>(ef.size()); }
    bool unramified() const;
    bool totally_ramified() const;  // a single prime with f = 1
    std::string to_string() const;  // e.g. "(1^21)_4", "(2^2)", "(1111)"
    // Parses "(21)", "(1^21^2)", "(1^21)_0", "(1^4)", ...; also "1^21" without parens.
    static SplittingType parse(const std::string& s);
    void canonicalize();
    friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

struct PrimeIdeal {
    Integer p;
    int e = 0;
    int f = 0;
    ZVec tau;  // tau * P in pO, tau not in pO; drives valuations
};

struct NumericData;  // complex embeddings, kept out of the public headers

class NumberField {
public:
    // Monic irreducible f of degree 1..6. Throws NotAField / InvalidInput.
    explicit NumberField(const IntPoly& f);

    const IntPoly& poly() const { return f_; }
    int degree() const { return n_; }
    const Integer& disc() const { return disc_; }
    const Integer& index() const { return index_; }  // [O_K : Z[theta]]
    int r1() const { return r1_; }
    int r2() const { return r2_; }
    bool totally_real() const { return r2_ == 0; }

    // Integral basis: omega_i = sum_j basis_num()[i][j] theta^j / basis_den().
    const ZMat& basis_num() const { return bnum_; }
    const Integer& basis_den() const { return bden_; }
    QMat basis() const;

    // Elements of O_K in integral-basis coordinates.
    ZVec one() const;
    ZVec mul(const ZVec& a, const ZVec& b) const;
    ZMat mul_matrix(const ZVec& a) const;  // row i = coords of a * omega_i
    Integer norm(const ZVec& a) const;
    Integer trace(const ZVec& a) const;
    IntPoly charpoly(const ZVec& a) const;
    QVec to_power(const ZVec& a) const;
    QVec to_order(const QVec& power_coords) const;  // may be non-integral
    // Evaluate an integer polynomial at theta, in order coordinates.
    ZVec from_poly(const IntPoly& g) const;

    const std::vector<PrimeIdeal>& primes_above(std::uint64_t p) const;
    SplittingType splitting_type(std::uint64_t p) const;
    // v_P(a) for a != 0.
    int valuation(const PrimeIdeal& P, ZVec a) const;

    // Signs of a at the r1 real embeddings, in increasing order of the real roots.
    std::vector<int> real_signs(const ZVec& a) const;
    const NumericData& numeric() const;

    std::string to_json() const;

private:
    void build_order();
    void compute_mult_table();

    IntPoly f_;
    int n_ = 0;
    Integer disc_, index_;
    int r1_ = 0, r2_ = 0;
    ZMat bnum_;
    Integer bden_;
    QMat binv_;  // power -> order coordinates
    std::vector<std::vector<ZVec>> mt_;  // mt_[i][j] = coords of omega_i omega_j

    struct Cache;
    std::shared_ptr<Cache> cache_;
};

NumberField make_field(const IntPoly& f);

// Number of real roots of a squarefree polynomial (Sturm).
int count_real_roots(const IntPoly& f);
bool is_irreducible(const IntPoly& f);

bool is_isomorphic(const NumberField& a, const NumberField& b);
// Splitting-pattern fingerprint over unramified primes below the bound; only
// ever used to certify non-isomorphism.
std::vector<std::vector<int>> fingerprint(const NumberField& k, std::uint64_t bound = 200);

enum class QuarticGalois { C4, V4, D4, A4, S4 };
std::string to_string(QuarticGalois g);
QuarticGalois galois_type_quartic(const NumberField& L);
bool is_cyclic_cubic(const NumberField& k);

struct DiscSplit {
    Integer D;  // fundamental discriminant (1 allowed)
    Integer f;
};
DiscSplit disc_decompose(const NumberField& k);

}  // namespace quartres
