#pragma once

// High-precision complex embeddings. Only used to *find* candidates
// (embeddings, factors, signs); every decision built on them is re-checked
// exactly by the caller.

#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "quartres/intpoly.hpp"
#include "quartres/linalg.hpp"

namespace quartres {

using HP = boost::multiprecision::cpp_bin_float_50;
using HC = boost::multiprecision::cpp_complex_50;

struct NumericData {
    int r1 = 0;
    // r1 real roots ascending, then each complex root with positive
    // imaginary part followed by its conjugate
    std::vector<HC> roots;
};

NumericData compute_numeric(const IntPoly& f, int r1);
// All complex roots of a squarefree polynomial, unordered.
std::vector<HC> complex_roots(const IntPoly& f);

namespace detail {
HC eval_power(const QVec& power_coords, const HC& x);
std::vector<int> real_signs(const NumericData& nd, const QVec& power_coords);
Integer round_to_integer(const HP& x, bool& ok);
}  // namespace detail

}  // namespace quartres
