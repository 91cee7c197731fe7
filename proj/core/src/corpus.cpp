#include "quartres/verify.hpp"

namespace quartres {

const std::vector<SplitRow>& split_table_rows()
{
    static const std::vector<SplitRow> rows = {
        {"(3)", "(33)", "(31)", 1, "x^3-x^2-14x+23", "x^3-35x^2+179x-81", "x^4-x^3-4x^2+x+2"},
        {"(3)", "(3^2)", "(1^4)", 64, "x^3-x^2-4x+3", "x^3-15x^2+55x-49", "x^4-2x^3-6x^2+2"},
        {"(21)", "(42)", "(4)", 1, "x^3-x^2-9x+10", "x^3-8x^2+12x-1", "x^4-4x^2-x+1"},
        {"(21)", "(2211)", "(211)", 1, "x^3-20x-17", "x^3-12x^2+28x-1", "x^4-6x^2-x+2"},
        {"(21)", "(2^22)", "(2^2)", 16, "x^3-x^2-14x-4", "x^3-22x^2+21x-4", "x^4-11x^2-2x+25"},
        {"(21)", "(2^211)", "(1^21^2)", 16, "x^3-x^2-7x+6", "x^3-13x^2+36x-16", "x^4-2x^3-5x^2+2x+2"},
        {"(21)", "(2^21^2)", "(1^4)", 64, "x^3-4x-1", "x^3-11x^2+19x-1", "x^4-2x^3-4x^2+4x+2"},
        {"(111)", "(2211)", "(22)", 1, "x^3-x^2-34x-16", "x^3-67x^2+947x-625", "x^4-x^3-8x^2+x+3"},
        {"(111)", "(21^21^2)", "(2^2)", 16, "x^3-13x-4", "x^3-14x^2+45x-4", "x^4-7x^2-2x+1"},
        {"(111)", "(111111)", "(1111)", 1, "x^3+x^2-148x+480", "x^3-37x^2+308x-576", "x^4-2x^3-17x^2-6x+16"},
        {"(111)", "(1^21^211)", "(1^21^2)", 16, "x^3-17x-8", "x^3-26x^2+65x-36", "x^4-13x^2-6x+26"},
        {"(1^21)_0", "(2^211)", "(21^2)", 1, "x^3-x^2-18x-14", "x^3-43x^2+323x-25", "x^4-x^3-5x^2+2x+2"},
        {"(1^21)_0", "(1^21^211)", "(1^211)", 1, "x^3-x^2-58x+186", "x^3-75x^2+499x-169", "x^4-x^3-9x^2+3x+14"},
        {"(1^21)_0", "(1^411)", "(1^21^2)", 4, "x^3-22x-8", "x^3-14x^2+25x-4", "x^4-7x^2-2x+6"},
        {"(1^21)_0", "(1^41^2)", "(1^4)", 64, "x^3-x^2-6x+2", "x^3-16x^2+60x-16", "x^4-8x^2-4x+1"},
        {"(1^21)_4", "(2^211)", "(21^2)", 1, "x^3-x^2-20x-22", "x^3-43x^2+291x-121", "x^4-x^3-5x^2+4x+2"},
        {"(1^21)_4", "(1^21^211)", "(1^211)", 1, "x^3-59x-168", "x^3-91x^2+915x-1849", "x^4-x^3-11x^2+11x+16"},
        {"(1^21)_4", "(1^42)", "(2^2)", 4, "x^3-11x-12", "x^3-10x^2+21x-4", "x^4-5x^2-2x+1"},
        {"(1^21)_4", "(1^42)", "(2^2)", 16, "x^3-x^2-8x+10", "x^3-13x^2+32x-16", "x^4-2x^3-5x^2+2x+3"},
        {"(1^21)_4", "(1^411)", "(1^21^2)", 16, "x^3-22x-20", "x^3-17x^2+64x-16", "x^4-2x^3-7x^2+4x+2"},
        {"(1^3)", "(1^31^3)", "(1^31)", 1, "x^3-x^2-27x-43", "x^3-43x^2+179x-9", "x^4-x^3-5x^2+3x+4"},
        {"(1^3)", "(1^6)", "(1^4)", 4, "x^3-x^2-9x+11", "x^3-12x^2+16x-4", "x^4-6x^2-2x+5"},
        {"(1^3)", "(1^6)", "(1^4)", 64, "x^3-x^2-7x-3", "x^3-20x^2+104x-144", "x^4-10x^2-12x-1"},
    };
    return rows;
}

const FiveFieldCase& five_field_case()
{
    static const FiveFieldCase c = {
        "x^3-10641x-227008",
        {
            "x^4-2x^3-279x^2-1276x+2132",
            "x^4-2x^3-207x^2-108x+4464",
            "x^4-2x^3-201x^2+154x+4537",
            "x^4-2x^3-255x^2-40x+13223",
            "x^4-x^3-237x^2+132x+13908",
        },
    };
    return c;
}

const std::vector<PhiCase>& phi_cases()
{
    static const std::vector<PhiCase> cases = {
        {"x^3-x^2-2x+1", 13, false, true},       // 49, cyclic
        {"x^3+x^2-54x-169", 4, false, true},     // 163^2, cyclic, rk2 = 2
        {"x^3-x^2-3x+1", 12, false, true},       // 148
        {"x^3-4x-1", 8, false, true},            // 229
        {"x^3-x^2-5x+4", 8, true, true},         // 469 signed
        {"x^3-x^2-2x+1", 13, true, false},
        {"x^3-x^2-3x+1", 12, true, false},
        {"x^3-4x-1", 8, true, false},
        {"x^3-x^2-5x+4", 16, true, false},
        {"x^3-x^2-5x+4", 12, false, false},
        {"x^3-x^2-14x+23", 12, false, false},    // 2777
        {"x^3-x^2-14x+23", 12, true, false},
        {"x^3-x^2+x-2", 16, false, false},       // -83
        {"x^3-x^2+1", 16, false, false},         // -23
    };
    return cases;
}

std::vector<std::string> counting_cubics(bool full)
{
    std::vector<std::string> cubics = {
        "x^3-x^2-2x+1",     // 49
        "x^3+x^2-54x-169",  // 26569
        "x^3-x^2-3x+1",     // 148
        "x^3-4x-1",         // 229
        "x^3-x^2-5x+4",     // 469
    };
    if (full) {
        for (const char* c : {"x^3-x^2-14x+23", "x^3-x^2-9x+10", "x^3-x^2-22x-16", "x^3-x^2+1", "x^3-x^2+x-2"})
            cubics.emplace_back(c);
    }
    return cubics;
}

}  // namespace quartres
