#pragma once

#include <cstdint>
#include <vector>

#include "quartres/integer.hpp"

namespace quartres {

using ZVec = std::vector<Integer>;
using QVec = std::vector<Rational>;
using ZMat = std::vector<ZVec>;
using QMat = std::vector<QVec>;
using FpVec = std::vector<std::uint64_t>;
using FpMat = std::vector<FpVec>;

// Lattice spanned by the rows (full rank n assumed) as an n x n lower
// triangular basis: row c has its last nonzero entry at column c, positive,
// and entries of later rows in column c are reduced into [0, pivot).
ZMat hnf_basis(ZMat rows, int n);

QMat inverse(const QMat& m);
QVec row_times(const QVec& v, const QMat& m);  // v * m

// F_p linear algebra. Vectors are rows.
// Reduced row echelon basis of the row span.
FpMat fp_row_basis(FpMat rows, std::uint64_t p);
int fp_rank(FpMat rows, std::uint64_t p);
// Basis of {x : A x = 0}; A is r x n, result vectors have length n.
FpMat fp_kernel(const FpMat& a, int n, std::uint64_t p);
// Basis of {x : x A = 0}; A is r x n, result vectors have length r.
FpMat fp_left_kernel(const FpMat& a, std::uint64_t p);

// Rank over F_2 of rows stored as bit vectors.
int f2_rank(std::vector<std::vector<std::uint64_t>> rows);

}  // namespace quartres
