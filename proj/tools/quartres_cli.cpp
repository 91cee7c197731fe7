#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "quartres/dirichlet.hpp"
#include "quartres/enumerate.hpp"
#include "quartres/errors.hpp"
#include "quartres/modp.hpp"
#include "quartres/verify.hpp"

using namespace quartres;

namespace {

enum Exit { Ok = 0, VerifyFail = 1, BadInput = 2, Budget = 3 };

struct RunConfig {
    std::uint64_t seed = 0;
    int jobs = 1;
    std::string format = "jsonl";
    std::uint64_t budget = 0;  // 0: keep the ceiling
    bool timings = false;
};

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string o = "\"";
    for (char c : s) {
        if (c == '"') o += '"';
        o += c;
    }
    return o + "\"";
}

int cmd_phi(const RunConfig& cfg, const std::string& cubic, std::uint64_t X, bool signed_variant, bool charsum)
{
    if (X < 1) throw InvalidInput("--bound must be positive");
    if (X > ceilings().max_series_bound) throw BudgetExceeded("--bound above max_series_bound");
    NumberField k(IntPoly::parse(cubic));
    if (k.degree() != 3) throw InvalidInput("--cubic must have degree 3");
    auto L2 = discover_L2(k, signed_variant, cfg.jobs);
    auto phi = charsum ? phi_k_charsum(k, L2, X, signed_variant) : phi_k(k, L2, X, signed_variant);
    std::cout << (cfg.format == "csv" ? phi.to_csv() : phi.to_jsonl());
    return Ok;
}

std::string field_line(const NumberField& F, const std::string& format)
{
    const bool quartic_family = F.degree() == 4 && [&] {
        auto g = galois_type_quartic(F);
        return g == QuarticGalois::A4 || g == QuarticGalois::S4;
    }();
    if (format == "csv") {
        std::ostringstream os;
        os << csv_escape(F.poly().to_string()) << ',' << F.disc() << ',' << F.r1() << ',' << F.r2();
        if (quartic_family) {
            auto rec = make_quartic_record(F);
            os << ',' << csv_escape(rec.k.poly().to_string()) << ',' << rec.f << ','
               << (rec.n2 ? std::to_string(*rec.n2) : "") << ',' << to_string(rec.galois) << ','
               << F.splitting_type(2).to_string();
        }
        return os.str();
    }
    return quartic_family ? make_quartic_record(F).to_json() : F.to_json();
}

int cmd_enumerate(const RunConfig& cfg, int degree, const std::string& disc, const std::string& disc_bound,
                  const std::string& resolvent, bool totally_real)
{
    SearchSpec s;
    s.degree = degree;
    s.jobs = cfg.jobs;
    s.budget = cfg.budget ? cfg.budget : ceilings().budget;
    if (!disc.empty() == !disc_bound.empty()) throw InvalidInput("give exactly one of --disc and --disc-bound");
    Integer v;
    const std::string& txt = disc.empty() ? disc_bound : disc;
    if (v.set_str(txt, 10) != 0) throw InvalidInput("bad discriminant: " + txt);
    if (!disc.empty()) {
        s.mode = DiscMode::Exact;
        s.target = v;
    } else {
        s.mode = DiscMode::AbsBound;
        s.bound = v;
    }
    const Integer& ceiling = degree == 3 ? ceilings().max_cubic_disc : ceilings().max_quartic_disc;
    if (abs(v) > ceiling) throw BudgetExceeded("discriminant above the configured ceiling");
    if (totally_real) s.signature = SignatureFilter::TotallyReal;
    if (!resolvent.empty()) {
        if (degree != 4) throw InvalidInput("--resolvent needs --degree 4");
        s.resolvent = IntPoly::parse(resolvent);
    }
    if (cfg.format == "csv") {
        std::cout << "poly,disc,r1,r2";
        if (degree == 4) std::cout << ",k_poly,f,n2,galois,split2";
        std::cout << '\n';
    }
    for (auto& F : enumerate_fields(s)) std::cout << field_line(F, cfg.format) << '\n';
    return Ok;
}

std::vector<SplitRow> load_rows(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
    std::vector<SplitRow> rows;
    try {
        for (auto& o : j) {
            rows.push_back({o.at("k_split"), o.at("K6_split"), o.at("L_split"), o.at("n2"), o.at("k"), o.at("P_alpha"),
                            o.at("L")});
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(path + ": " + e.what());
    }
    return rows;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, const std::string& level, const std::string& table)
{
    const bool full = level == "full";
    const bool all = suite == "all";
    std::vector<VerificationReport> reports;
    if (all || suite == "tables") {
        reports.push_back(check_m1_closure());
        reports.push_back(audit_split_tables(table.empty() ? split_table_rows() : load_rows(table)));
        auto& c = five_field_case();
        std::vector<IntPoly> qs;
        for (auto& q : c.quartics) qs.push_back(IntPoly::parse(q));
        reports.push_back(five_fields_check(NumberField(IntPoly::parse(c.k)), qs));
    }
    if (all || suite == "phi") {
        for (auto& pc : phi_cases()) {
            if (!full && !pc.quick) continue;
            NumberField k(IntPoly::parse(pc.cubic));
            reports.push_back(verify_phi(k, pc.bound, pc.signed_variant, cfg.jobs));
            reports.push_back(check_charsum(k, 200, pc.signed_variant, cfg.jobs));
        }
    }
    if (all || suite == "counting") {
        for (auto& c : counting_cubics(full)) reports.push_back(check_counting(NumberField(IntPoly::parse(c)), cfg.jobs));
    }
    if (all || suite == "congruences") reports.push_back(check_disc_congruences(congruence_corpus(full, cfg.jobs)));

    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (auto& r : reports) arr.push_back(nlohmann::ordered_json::parse(r.to_json(cfg.timings)));
    std::cout << arr.dump(2) << '\n';

    bool any_fail = false, any_skip = false;
    for (auto& r : reports) {
        any_fail |= r.status == VerificationReport::Status::Fail;
        any_skip |= r.status == VerificationReport::Status::SkippedBudget;
    }
    return any_fail ? VerifyFail : any_skip ? Budget : Ok;
}

int cmd_resolvent(const std::string& quartic, const std::string& alpha)
{
    if (quartic.empty() == alpha.empty()) throw InvalidInput("give exactly one of --quartic and --alpha");
    nlohmann::ordered_json j;
    if (!quartic.empty()) {
        IntPoly q = IntPoly::parse(quartic);
        IntPoly r = resolvent_cubic(q);
        j["quartic"] = q.to_string();
        j["resolvent_cubic"] = r.to_string();
        j["poly_disc"] = to_string(poly_discriminant(q));
        if (is_irreducible(q)) {
            NumberField L(q);
            auto g = galois_type_quartic(L);
            j["galois"] = to_string(g);
            if (g == QuarticGalois::A4 || g == QuarticGalois::S4)
                j["record"] = nlohmann::ordered_json::parse(make_quartic_record(L).to_json());
        }
    } else {
        IntPoly P = IntPoly::parse(alpha);
        IntPoly q = quartic_from_alpha(P);
        j["alpha_charpoly"] = P.to_string();
        j["quartic"] = q.to_string();
        j["sextic"] = sextic_from_alpha(P).to_string();
        j["resolvent_cubic"] = resolvent_cubic(q).to_string();
    }
    std::cout << j.dump() << '\n';
    return Ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dirichlet series of quartic fields with a given cubic resolvent"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "seed for randomized splitting mod p")->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "search worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"jsonl", "csv"}))->capture_default_str();
    app.add_option("--budget", cfg.budget, "node budget for searches (0: ceiling default)");
    app.add_flag("--timings", cfg.timings, "include runtimes in verify reports");

    std::string cubic;
    std::uint64_t bound = 0;
    bool is_signed = false, charsum = false;
    auto* phi = app.add_subcommand("phi", "coefficients of the series for a cubic field");
    phi->add_option("--cubic", cubic, "defining polynomial of k")->required();
    phi->add_option("--bound", bound, "last coefficient")->required();
    phi->add_flag("--signed", is_signed, "totally real quartics only");
    phi->add_flag("--charsum", charsum, "evaluate through the character sum");

    int degree = 4;
    std::string disc, disc_bound, resolvent;
    bool totally_real = false;
    auto* en = app.add_subcommand("enumerate", "exhaustive field search");
    en->add_option("--degree", degree)->check(CLI::IsMember({3, 4}))->required();
    en->add_option("--disc", disc, "exact discriminant");
    en->add_option("--disc-bound", disc_bound, "bound on |disc|");
    en->add_option("--resolvent", resolvent, "resolvent cubic filter (degree 4)");
    en->add_flag("--totally-real", totally_real);

    std::string suite = "all", level = "quick", table;
    auto* ve = app.add_subcommand("verify", "identity checks; JSON report array");
    ve->add_option("--suite", suite)
        ->check(CLI::IsMember({"phi", "tables", "counting", "congruences", "all"}))
        ->capture_default_str();
    ve->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}))->capture_default_str();
    ve->add_option("--table", table, "JSON file replacing the built-in classification rows");

    std::string quartic, alpha;
    auto* re = app.add_subcommand("resolvent", "resolvent cubic / quartic from alpha");
    re->add_option("--quartic", quartic);
    re->add_option("--alpha", alpha, "characteristic polynomial of alpha");

    for (auto* sub : {phi, en, ve, re}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Ok : BadInput;
    }

    try {
        set_random_seed(cfg.seed);
        if (cfg.budget) ceilings().budget = cfg.budget;
        if (*phi) return cmd_phi(cfg, cubic, bound, is_signed, charsum);
        if (*en) return cmd_enumerate(cfg, degree, disc, disc_bound, resolvent, totally_real);
        if (*ve) return cmd_verify(cfg, suite, level, table);
        if (*re) return cmd_resolvent(quartic, alpha);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return BadInput;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return Budget;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return VerifyFail;
    }
    return Ok;
}
