#pragma once

#include <vector>

#include "quartres/dirichlet.hpp"

namespace quartres::detail {

long main_local_coeff(const SplittingType& t);
void check_L2_list(const NumberField& k, const std::vector<QuarticRecord>& L2, bool signed_variant);

}  // namespace quartres::detail
