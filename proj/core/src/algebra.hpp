#pragma once

// Finite-dimensional commutative F_p-algebras given by structure constants;
// the workhorse behind p-maximal orders and prime decomposition.

#include <cstdint>
#include <vector>

#include "quartres/linalg.hpp"

namespace quartres::detail {

struct AlgebraModP {
    std::uint64_t p = 0;
    int n = 0;
    // t[i][j] = coords of b_i b_j
    std::vector<std::vector<FpVec>> t;
    FpVec unit;

    AlgebraModP(const std::vector<std::vector<ZVec>>& mt, const ZVec& one, std::uint64_t p);
    AlgebraModP(std::uint64_t p, int n) : p(p), n(n) {}

    FpVec mul(const FpVec& a, const FpVec& b) const;
    FpVec pow(FpVec a, std::uint64_t e) const;
    FpVec sub(const FpVec& a, const FpVec& b) const;
    FpVec scale(const FpVec& a, std::uint64_t s) const;
    FpMat mul_matrix(const FpVec& a) const;  // row i = a * b_i
    int rank_of_ideal(const FpVec& a) const { return fp_rank(mul_matrix(a), p); }

    // Nilradical, as an echelon basis.
    FpMat radical() const;
};

}  // namespace quartres::detail
