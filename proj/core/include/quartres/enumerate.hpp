#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "quartres/number_field.hpp"
#include "quartres/resolvent.hpp"

namespace quartres {

enum class DiscMode {
    Exact,           // Disc = target
    AbsBound,        // |Disc| <= bound
    SquareMultiple,  // Disc = m f^2 with f <= bound
};

enum class SignatureFilter { Any, TotallyReal, Fixed };

struct SearchSpec {
    int degree = 3;  // 3 or 4; degree 4 covers primitive (A4/S4) quartics
    DiscMode mode = DiscMode::Exact;
    Integer target = 0;  // Exact
    Integer bound = 0;   // AbsBound, SquareMultiple
    Integer m = 0;       // SquareMultiple
    SignatureFilter signature = SignatureFilter::Any;
    int r1 = -1;  // Fixed
    std::optional<IntPoly> resolvent;  // degree 4 only: resolvent field must be this cubic
    std::uint64_t budget = 4'000'000'000ULL;  // candidate polynomials examined
    int jobs = 1;
};

struct SearchStats {
    std::uint64_t nodes = 0;       // polynomials examined
    std::uint64_t candidates = 0;  // passed the discriminant filter
};

// Exhaustive within the bound; one field per isomorphism class, represented by
// the defining polynomial of least naive height (ties: lexicographic), sorted
// by (|disc|, disc, key). Throws BudgetExceeded when the budget runs out.
std::vector<NumberField> enumerate_fields(const SearchSpec& spec, SearchStats* stats = nullptr);

// Largest |disc| a single search may cover; overridable at run time.
struct Ceilings {
    Integer max_cubic_disc = 10'000'000;
    Integer max_quartic_disc = 10'000'000;
    std::uint64_t max_series_bound = 100'000;
    std::uint64_t budget = 4'000'000'000ULL;

    // QUARTRES_CEILINGS="max_cubic_disc=...,max_quartic_disc=...,max_series_bound=...,budget=..."
    static Ceilings from_env();
};
Ceilings& ceilings();

// L2(k) (star: no signature condition), sorted by (n2, key).
std::vector<QuarticRecord> discover_L2(const NumberField& k, bool star, int jobs = 1);

struct FieldsOfK {
    std::map<Integer, int> histogram;  // f -> number of fields
    std::vector<QuarticRecord> records;
};
// All A4/S4 quartics with resolvent k and f <= B, both signatures.
FieldsOfK enumerate_F_of_k(const NumberField& k, const Integer& B, int jobs = 1);

// Independent oracle: every monic polynomial with coefficients in [-H, H],
// kept when it defines a field of the given degree with |Disc| <= bound.
std::vector<NumberField> naive_fields(int degree, long H, const Integer& bound);

}  // namespace quartres
