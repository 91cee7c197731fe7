#include <cstdlib>
#include <sstream>

#include "quartres/enumerate.hpp"
#include "quartres/errors.hpp"

namespace quartres {

Ceilings Ceilings::from_env()
{
    Ceilings c;
    const char* env = std::getenv("QUARTRES_CEILINGS");
    if (!env) return c;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InvalidInput("QUARTRES_CEILINGS: expected key=value, got " + item);
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        Integer v;
        if (v.set_str(val, 10) != 0 || v <= 0) throw InvalidInput("QUARTRES_CEILINGS: bad value for " + key);
        if (key == "max_cubic_disc") c.max_cubic_disc = v;
        else if (key == "max_quartic_disc") c.max_quartic_disc = v;
        else if (key == "max_series_bound") c.max_series_bound = v.get_ui();
        else if (key == "budget") c.budget = std::stoull(val);
        else throw InvalidInput("QUARTRES_CEILINGS: unknown key " + key);
    }
    return c;
}

Ceilings& ceilings()
{
    static Ceilings c = Ceilings::from_env();
    return c;
}

namespace {

void check_cubic(const NumberField& k)
{
    if (k.degree() != 3) throw InvalidInput("k must be a cubic field");
    if (abs(k.disc()) > ceilings().max_cubic_disc) throw BudgetExceeded("|Disc(k)| above the cubic ceiling");
}

std::vector<QuarticRecord> search_resolvent(const NumberField& k, const Integer& fmax, SignatureFilter sig, int jobs)
{
    if (abs(k.disc()) * fmax * fmax > ceilings().max_quartic_disc)
        throw BudgetExceeded("quartic search above the ceiling: |Disc(k)| f^2 = " + to_string(Integer(abs(k.disc()) * fmax * fmax)));
    SearchSpec s;
    s.degree = 4;
    s.mode = DiscMode::SquareMultiple;
    s.m = k.disc();
    s.bound = fmax;
    s.signature = sig;
    s.resolvent = k.poly();
    s.budget = ceilings().budget;
    s.jobs = jobs;
    std::vector<QuarticRecord> out;
    for (auto& L : enumerate_fields(s)) out.push_back(make_quartic_record(L));
    return out;
}

}  // namespace

std::vector<QuarticRecord> discover_L2(const NumberField& k, bool star, int jobs)
{
    check_cubic(k);
    auto sig = (!star && k.totally_real()) ? SignatureFilter::TotallyReal : SignatureFilter::Any;
    std::vector<QuarticRecord> out;
    for (auto& rec : search_resolvent(k, 8, sig, jobs)) {
        if (!rec.n2) continue;  // f = 3, 5, 6, 7
        if (*rec.n2 == 64 && !rec.two_totally_ramified) continue;
        out.push_back(std::move(rec));
    }
    std::stable_sort(out.begin(), out.end(), [](const QuarticRecord& a, const QuarticRecord& b) { return *a.n2 < *b.n2; });
    return out;
}

FieldsOfK enumerate_F_of_k(const NumberField& k, const Integer& B, int jobs)
{
    check_cubic(k);
    if (B < 1) throw InvalidInput("conductor bound must be positive");
    FieldsOfK r;
    r.records = search_resolvent(k, B, SignatureFilter::Any, jobs);
    for (auto& rec : r.records) ++r.histogram[rec.f];
    return r;
}

}  // namespace quartres
