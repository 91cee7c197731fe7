#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quartres/number_field.hpp"
#include "quartres/resolvent.hpp"

namespace quartres {

struct VerificationReport {
    enum class Status { Pass, Fail, SkippedBudget };
    std::string name;
    Status status = Status::Pass;
    std::string witness;  // first counterexample when failing
    std::string detail;   // what was compared
    double runtime = 0;   // seconds

    bool passed() const { return status == Status::Pass; }
    std::string status_string() const;  // "pass", "fail", "skipped-budget"
    // runtime left out by default so identical runs give identical bytes
    std::string to_json(bool with_runtime = false) const;
};

// LHS from enumeration of F(k) (totally real fields only when signed), RHS
// from phi_k with the discovered list; exact equality on [1, B].
VerificationReport verify_phi(const NumberField& k, std::uint64_t B, bool signed_variant, int jobs = 1);

// phi_k against phi_k_charsum on [1, X], with the discovered list.
VerificationReport check_charsum(const NumberField& k, std::uint64_t X, bool signed_variant, int jobs = 1);

// 8 M1(1) for every main-table row against its printed column.
VerificationReport check_m1_closure();

// One row of the 2-adic classification table with its witness polynomials.
struct SplitRow {
    std::string k_split;   // decorated, e.g. "(1^21)_4"
    std::string K6_split;
    std::string L_split;
    int n2 = 0;
    std::string k, P_alpha, L;
};
const std::vector<SplitRow>& split_table_rows();

// Recomputes every column from the polynomials; also checks the pair (k, L)
// against the allowed splitting combinations at all p <= pmax.
VerificationReport audit_split_tables(const std::vector<SplitRow>& rows, std::uint64_t pmax = 100);

// Splitting combinations an A4/S4 quartic may have over its resolvent.
bool splitting_allowed(const SplittingType& k_split, const SplittingType& L_split, std::uint64_t p);

// Residue-degree multisets: {f(L)} + {f(k)} == {1} + {f(K6)}.
bool check_artin(const NumberField& k, const NumberField& K6, const NumberField& L, std::uint64_t p);
// L is (1^4) at p iff every prime of k above p ramifies in K6.
bool check_totally_ramified(const NumberField& k, const NumberField& K6, const NumberField& L,
                            std::uint64_t p = 2);

// Sizes of L(k,1), L2(k) and, for totally real k, L2*(k) against the 2-ranks.
VerificationReport check_counting(const NumberField& k, int jobs = 1);

// Cubics: 2-splitting versus Disc mod 32 / mod 16 and the decoration.
// Quartics: v_2(Disc) against the 2-splitting type.
VerificationReport check_disc_congruences(const std::vector<NumberField>& fields);
// The rule for one (degree, Disc, splitting of 2) record; empty when it holds.
std::optional<std::string> congruence_violation(int degree, const Integer& disc, const SplittingType& two_split);

// Exactly one of the quartics has 2 of type (1111), the rest (22), all with
// Disc(L) = Disc(k) and resolvent k. Witness/detail name the distinguished one.
VerificationReport five_fields_check(const NumberField& k, const std::vector<IntPoly>& quartics);

struct FiveFieldCase {
    std::string k;
    std::vector<std::string> quartics;  // distinguished one first
};
const FiveFieldCase& five_field_case();

// Cubic fields with the bounds at which verify_phi is run by the suites.
struct PhiCase {
    std::string cubic;
    std::uint64_t bound;
    bool signed_variant;
    bool quick;  // part of the quick level
};
const std::vector<PhiCase>& phi_cases();
// Cubics used by the counting suite; the full level adds a few more.
std::vector<std::string> counting_cubics(bool full = false);

// Table fields, all cubics with |Disc| up to a bound, and the quartics of F(k)
// for the phi cases of the level.
std::vector<NumberField> congruence_corpus(bool full, int jobs = 1);

}  // namespace quartres
