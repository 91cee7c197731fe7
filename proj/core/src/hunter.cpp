#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

#include "quartres/enumerate.hpp"
#include "quartres/errors.hpp"
#include "quartres/modp.hpp"

namespace quartres {

namespace {

using i128 = __int128;

i128 to_i128(const Integer& z)
{
    if (mpz_sizeinbase(z.get_mpz_t(), 2) > 120) throw InvalidInput("discriminant target too large");
    i128 r = 0;
    Integer a = abs(z);
    std::string s = a.get_str(16);
    for (char ch : s) r = r * 16 + (std::isdigit(static_cast<unsigned char>(ch)) ? ch - '0' : ch - 'a' + 10);
    return z < 0 ? -r : r;
}

Integer from_i128(i128 x)
{
    bool neg = x < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
    Integer r = 0;
    Integer base = Integer(1) << 64;
    r = Integer(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    r = r * base + Integer(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    return neg ? Integer(-r) : r;
}

bool square_i128(i128 x)
{
    if (x < 0) return false;
    // squares mod 64 filter
    static const std::uint64_t sq64 = [] {
        std::uint64_t m = 0;
        for (int i = 0; i < 64; ++i) m |= std::uint64_t(1) << (i * i % 64);
        return m;
    }();
    if (!(sq64 >> static_cast<int>(x & 63) & 1)) return false;
    auto r = static_cast<i128>(std::sqrt(static_cast<long double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r * r == x;
}

struct Box {
    long t;  // trace
    long b;  // second coefficient
};

struct Searcher {
    const SearchSpec& spec;
    int n;
    long double T2;
    bool real_only;
    int want_sign;  // required sign of the polynomial discriminant, 0 = any
    i128 target, m, bound;

    explicit Searcher(const SearchSpec& s) : spec(s), n(s.degree)
    {
        if (n != 3 && n != 4) throw InvalidInput("search degree must be 3 or 4");
        if (s.resolvent && n != 4) throw InvalidInput("resolvent filter needs degree 4");
        Integer dmax;
        switch (s.mode) {
        case DiscMode::Exact:
            if (s.target == 0) throw InvalidInput("target discriminant must be nonzero");
            dmax = abs(s.target);
            break;
        case DiscMode::AbsBound:
            if (s.bound <= 0) throw InvalidInput("bound must be positive");
            dmax = s.bound;
            break;
        case DiscMode::SquareMultiple:
            if (s.bound <= 0 || s.m == 0) throw InvalidInput("need m != 0 and a positive bound");
            dmax = abs(s.m) * s.bound * s.bound;
            break;
        }
        target = s.mode == DiscMode::Exact ? to_i128(s.target) : 0;
        m = s.mode == DiscMode::SquareMultiple ? to_i128(s.m) : 0;
        bound = s.mode == DiscMode::AbsBound ? to_i128(s.bound) : 0;
        long double gamma = n == 3 ? std::sqrt(4.0L / 3.0L) : std::cbrt(2.0L);
        long double D = dmax.get_d();
        T2 = gamma * std::pow(D / n, 1.0L / (n - 1));
        int r1 = -1;
        if (s.signature == SignatureFilter::TotallyReal) r1 = n;
        if (s.signature == SignatureFilter::Fixed) {
            if (s.r1 < 0 || s.r1 > n || (n - s.r1) % 2) throw InvalidInput("impossible signature");
            r1 = s.r1;
        }
        real_only = r1 == n;
        want_sign = r1 < 0 ? 0 : (((n - r1) / 2) % 2 ? -1 : 1);
        if (s.mode == DiscMode::Exact && want_sign && (s.target > 0 ? 1 : -1) != want_sign)
            throw InvalidInput("target discriminant sign contradicts the signature");
    }

    long double t2_for(long t) const { return t * t / static_cast<long double>(n) + T2 + 1e-9L; }

    std::vector<Box> boxes() const
    {
        std::vector<Box> out;
        for (long t = 0; 2 * t <= n; ++t) {
            long double T = t2_for(t);
            long A = -t;
            // |s2| <= T2, s2 = A^2 - 2B; for real roots also s2 >= t^2/n
            long double lo = (A * A - T) / 2, hi = (A * A + T) / 2;
            if (real_only) hi = std::min(hi, (A * A - t * t / static_cast<long double>(n)) / 2 + 1e-9L);
            for (long b = static_cast<long>(std::ceil(lo)); b <= static_cast<long>(std::floor(hi)); ++b)
                out.push_back({t, b});
        }
        return out;
    }

    bool disc_ok(i128 D) const
    {
        if (D == 0) return false;
        if (want_sign && (D > 0 ? 1 : -1) != want_sign) return false;
        switch (spec.mode) {
        case DiscMode::Exact: {
            if (D % target) return false;
            return square_i128(D / target);
        }
        case DiscMode::SquareMultiple: {
            if (D % m) return false;
            return square_i128(D / m);
        }
        case DiscMode::AbsBound: {
            i128 a = D < 0 ? -D : D;
            if (a <= bound) return true;
            Integer z = from_i128(a);
            Integer sq = 1;
            for (auto& [p, e] : factor_integer(z))
                for (int i = 0; i < e / 2; ++i) sq *= p;
            return z / (sq * sq) <= spec.bound;
        }
        }
        return false;
    }

    // Visit every coefficient vector in the box; returns node count.
    template <class Emit>
    std::uint64_t run_box(const Box& bx, Emit&& emit) const
    {
        const long A = -bx.t, B = bx.b;
        long double T = t2_for(bx.t);
        long double s2 = static_cast<long double>(A) * A - 2.0L * B;
        long double S = real_only ? s2 : T;
        if (S < 0) return 0;
        long double s3max = std::pow(S, 1.5L) + 1e-9L;
        long double base3 = -static_cast<long double>(A) * A * A + 3.0L * A * B;
        // s3 = base3 - 3C (quartic and cubic alike)
        long cl = static_cast<long>(std::ceil((base3 - s3max) / 3)), ch = static_cast<long>(std::floor((base3 + s3max) / 3));
        std::uint64_t nodes = 0;
        if (n == 3) {
            long double cmax = std::pow(S / 3, 1.5L) + 1e-9L;
            // x^3 + A x^2 + B x + C: C = -N; s3 bound already used for C via s3 = base3 - 3C
            cl = std::max<long>(cl, static_cast<long>(std::ceil(-cmax)));
            ch = std::min<long>(ch, static_cast<long>(std::floor(cmax)));
            if (bx.t == 0) cl = std::max<long>(cl, 1);
            for (long C = cl; C <= ch; ++C) {
                if (C == 0) continue;
                ++nodes;
                i128 b = A, c = B, d = C;
                i128 D = b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d;
                if (disc_ok(D)) emit(std::vector<long>{C, B, A, 1});
            }
            return nodes;
        }
        if (bx.t == 0) cl = std::max<long>(cl, 0);
        long double emax = (S / 4) * (S / 4) + 1e-9L;
        for (long C = cl; C <= ch; ++C) {
            // E from |E| <= (S/4)^2 and the s4 window
            long double P = static_cast<long double>(A) * A * A * A - 4.0L * A * A * B + 2.0L * B * B + 4.0L * A * C;
            long double s4lo = real_only ? s2 * s2 / 4 : -S * S, s4hi = S * S;
            long double elo = std::max(-emax, (P - s4hi) / 4), ehi = std::min(emax, (P - s4lo) / 4);
            long el = static_cast<long>(std::ceil(elo - 1e-9L)), eh = static_cast<long>(std::floor(ehi + 1e-9L));
            if (el > eh) continue;
            i128 b = A, c = B, d = C;
            i128 k2 = -192 * b * d - 128 * c * c + 144 * b * b * c - 27 * b * b * b * b;
            i128 k1 = 144 * c * d * d - 6 * b * b * d * d - 80 * b * c * c * d + 16 * c * c * c * c + 18 * b * b * b * c * d -
                      4 * b * b * c * c * c;
            i128 k0 = -27 * d * d * d * d + 18 * b * c * d * d * d - 4 * c * c * c * d * d - 4 * b * b * b * d * d * d +
                      b * b * c * c * d * d;
            for (long E = el; E <= eh; ++E) {
                if (E == 0) continue;
                ++nodes;
                i128 e = E;
                i128 D = ((256 * e + k2) * e + k1) * e + k0;
                if (disc_ok(D)) emit(std::vector<long>{E, C, B, A, 1});
            }
        }
        return nodes;
    }
};

IntPoly reflect(const IntPoly& f)
{
    std::vector<Integer> c;
    for (int i = 0; i <= f.degree(); ++i) c.push_back((f.degree() - i) % 2 ? Integer(-f[i]) : f[i]);
    return IntPoly(c);
}

bool better_key(const IntPoly& a, const IntPoly& b)
{
    Integer ha = naive_height(a), hb = naive_height(b);
    if (ha != hb) return ha < hb;
    return lex_less(a, b);
}

IntPoly best_form(const IntPoly& f)
{
    IntPoly g = reflect(f);
    return better_key(g, f) ? g : f;
}

struct Pattern {
    std::vector<std::pair<std::uint64_t, std::vector<int>>> at;  // p -> sorted residue degrees
};

Pattern cubic_pattern(const NumberField& k)
{
    Pattern pt;
    for (std::uint64_t p : primes_up_to(120)) {
        if (mpz_divisible_ui_p(k.disc().get_mpz_t(), p)) continue;
        std::vector<int> d;
        for (auto& P : k.primes_above(p)) d.push_back(P.f);
        std::sort(d.begin(), d.end());
        pt.at.emplace_back(p, d);
    }
    return pt;
}

bool pattern_matches(const Pattern& pt, const IntPoly& cubic, const Integer& polydisc)
{
    for (auto& [p, want] : pt.at) {
        if (mpz_divisible_ui_p(polydisc.get_mpz_t(), p)) continue;
        auto d = factor_degrees_mod_p(cubic, p);
        std::sort(d.begin(), d.end());
        if (d != want) return false;
    }
    return true;
}

bool signature_ok(const SearchSpec& s, const NumberField& K)
{
    switch (s.signature) {
    case SignatureFilter::Any: return true;
    case SignatureFilter::TotallyReal: return K.totally_real();
    case SignatureFilter::Fixed: return K.r1() == s.r1;
    }
    return true;
}

bool disc_in_range(const SearchSpec& s, const Integer& d)
{
    switch (s.mode) {
    case DiscMode::Exact: return d == s.target;
    case DiscMode::AbsBound: return abs(d) <= s.bound;
    case DiscMode::SquareMultiple: {
        if (d % s.m != 0) return false;
        Integer q = d / s.m;
        return q > 0 && is_square(q) && isqrt(q) <= s.bound;
    }
    }
    return false;
}

struct Bucketed {
    std::map<Integer, std::vector<NumberField>> by_disc;

    void add(const NumberField& K)
    {
        auto& v = by_disc[K.disc()];
        for (auto& R : v) {
            if (is_isomorphic(R, K)) {
                IntPoly a = best_form(K.poly());
                if (better_key(a, R.poly())) R = NumberField(a);
                return;
            }
        }
        IntPoly a = best_form(K.poly());
        v.push_back(a == K.poly() ? K : NumberField(a));
    }

    std::vector<NumberField> sorted() const
    {
        std::vector<NumberField> out;
        for (auto& [d, v] : by_disc)
            for (auto& K : v) out.push_back(K);
        std::sort(out.begin(), out.end(), [](const NumberField& a, const NumberField& b) {
            Integer x = abs(a.disc()), y = abs(b.disc());
            if (x != y) return x < y;
            if (a.disc() != b.disc()) return a.disc() < b.disc();
            return better_key(a.poly(), b.poly());
        });
        return out;
    }
};

}  // namespace

std::vector<NumberField> enumerate_fields(const SearchSpec& spec, SearchStats* stats)
{
    Searcher S(spec);
    const auto boxes = S.boxes();
    const int jobs = std::max(1, spec.jobs);

    std::atomic<size_t> next{0};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> over{false};
    std::mutex mu;
    std::vector<std::vector<long>> cands;

    auto worker = [&] {
        std::vector<std::vector<long>> local;
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= boxes.size() || over.load()) break;
            std::uint64_t got = S.run_box(boxes[i], [&](std::vector<long> c) { local.push_back(std::move(c)); });
            if (nodes.fetch_add(got) + got > spec.budget) over.store(true);
        }
        std::lock_guard lk(mu);
        for (auto& c : local) cands.push_back(std::move(c));
    };
    if (jobs == 1) worker();
    else {
        std::vector<std::thread> th;
        for (int j = 0; j < jobs; ++j) th.emplace_back(worker);
        for (auto& t : th) t.join();
    }
    if (over) throw BudgetExceeded("search budget of " + std::to_string(spec.budget) + " polynomials exceeded");
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    if (stats) {
        stats->nodes = nodes.load();
        stats->candidates = cands.size();
    }

    std::optional<NumberField> kres;
    Pattern pt;
    if (spec.resolvent) {
        kres.emplace(*spec.resolvent);
        if (kres->degree() != 3) throw InvalidInput("resolvent filter must be a cubic field");
        pt = cubic_pattern(*kres);
    }

    Bucketed found;
    for (auto& c : cands) {
        std::vector<Integer> co(c.begin(), c.end());
        IntPoly f(co);
        Integer pd = poly_discriminant(f);
        if (kres && !pattern_matches(pt, resolvent_cubic(f), pd)) continue;
        if (!is_irreducible(f)) continue;
        NumberField K(f);
        if (!disc_in_range(spec, K.disc()) || !signature_ok(spec, K)) continue;
        if (spec.degree == 4) {
            auto g = galois_type_quartic(K);
            if (g != QuarticGalois::A4 && g != QuarticGalois::S4) continue;
            if (kres) {
                NumberField R(resolvent_cubic(f));
                if (R.disc() != kres->disc() || !is_isomorphic(R, *kres)) continue;
            }
        }
        found.add(K);
    }
    return found.sorted();
}

std::vector<NumberField> naive_fields(int degree, long H, const Integer& bound)
{
    if (degree < 2 || degree > 4 || H < 1) throw InvalidInput("naive scan: degree 2..4, H >= 1");
    Bucketed found;
    std::vector<long> c(degree, -H);
    for (;;) {
        if (c[0] != 0) {
            std::vector<Integer> co(c.begin(), c.end());
            co.push_back(1);
            IntPoly f(co);
            if (poly_discriminant(f) != 0 && is_irreducible(f)) {
                NumberField K(f);
                bool keep = abs(K.disc()) <= bound;
                if (keep && degree == 4) {
                    auto g = galois_type_quartic(K);
                    keep = g == QuarticGalois::A4 || g == QuarticGalois::S4;
                }
                if (keep) found.add(K);
            }
        }
        int i = 0;
        while (i < degree && c[i] == H) c[i++] = -H;
        if (i == degree) break;
        ++c[i];
    }
    return found.sorted();
}

}  // namespace quartres
