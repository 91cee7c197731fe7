#pragma once

#include <string>

#include "quartres/number_field.hpp"

namespace quartres {

struct ClassBudget {
    long max_elements = 3'000'000;  // small elements examined for relations
    long stable_after = 0;          // extra relations with no rank change; 0 = automatic
    Integer max_disc = Integer(10'000'000);
};

struct ClassData {
    enum class Status { Certified, BudgetExceeded };
    int rk2 = 0;
    int rk2_plus = 0;       // 2-rank of Cl^+, from relations carrying their sign vectors
    int unit_sig_rank = 0;  // F_2-rank of the signature map on units (with -1)
    int tp_unit_rank = 0;   // dim U^+/U^2 = r1 + r2 - unit_sig_rank
    // |Cl^+| = |Cl| |U^+/U^2| holds for orders; for 2-ranks only
    // rk2 <= rk2_plus <= rk2 + tp_unit_rank.
    Status status = Status::BudgetExceeded;
    int factor_base = 0;
    long relations = 0;

    std::string status_string() const;
};

// 2-ranks of the class group and narrow class group from a relation matrix on
// prime ideals below the Minkowski bound. Heuristic: relations are harvested
// until the F_2-ranks stop moving.
ClassData class_data(const NumberField& k, const ClassBudget& budget = {});

}  // namespace quartres
