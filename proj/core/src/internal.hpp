#pragma once

#include <cstdint>
#include <vector>

#include "quartres/number_field.hpp"

namespace quartres::detail {

std::vector<PrimeIdeal> decompose_prime(const NumberField& K, const std::vector<std::vector<ZVec>>& mt,
                                        std::uint64_t p);

}  // namespace quartres::detail
