#include "quartres/class_group.hpp"

#include <algorithm>
#include <cmath>

#include "numeric.hpp"
#include "quartres/errors.hpp"

namespace quartres {

std::string ClassData::status_string() const
{
    return status == Status::Certified ? "certified-at-desk-scale" : "budget-exceeded";
}

namespace {

// Incremental echelon basis over F_2 on bit vectors.
struct F2Basis {
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<int> lead;
    int words;
    explicit F2Basis(int bits) : words((bits + 63) / 64 + (bits == 0 ? 1 : 0)) {}
    bool add(std::vector<std::uint64_t> v)
    {
        for (size_t i = 0; i < rows.size(); ++i) {
            int b = lead[i];
            if (v[b / 64] >> (b % 64) & 1)
                for (int w = 0; w < words; ++w) v[w] ^= rows[i][w];
        }
        for (int w = 0; w < words; ++w) {
            if (!v[w]) continue;
            int b = w * 64 + __builtin_ctzll(v[w]);
            // keep reduced form: clear this bit from existing rows
            for (auto& r : rows)
                if (r[b / 64] >> (b % 64) & 1)
                    for (int k = 0; k < words; ++k) r[k] ^= v[k];
            rows.push_back(v);
            lead.push_back(b);
            return true;
        }
        return false;
    }
    int rank() const { return static_cast<int>(rows.size()); }
};

// Rank over F_q for a large prime q, as a stand-in for the rank over Q.
struct FqBasis {
    static constexpr std::uint64_t q = 2305843009213693951ULL;  // 2^61 - 1
    std::vector<FpVec> rows;
    std::vector<int> lead;
    bool add(FpVec v)
    {
        for (size_t i = 0; i < rows.size(); ++i) {
            std::uint64_t c = v[lead[i]];
            if (!c) continue;
            for (size_t k = 0; k < v.size(); ++k) v[k] = (v[k] + q - mulmod(c, rows[i][k], q)) % q;
        }
        for (size_t k = 0; k < v.size(); ++k) {
            if (!v[k]) continue;
            std::uint64_t inv = invmod(v[k], q);
            for (auto& x : v) x = mulmod(x, inv, q);
            rows.push_back(v);
            lead.push_back(static_cast<int>(k));
            return true;
        }
        return false;
    }
    int rank() const { return static_cast<int>(rows.size()); }
};

struct Relation {
    std::vector<int> v;
    unsigned signs = 0;  // bit i set: negative at real embedding i
};

// Sign parities of a basis of the units, from the integer kernel of the
// valuation matrix (unimodular row operations, parity tracked alongside).
int unit_sign_rank(std::vector<Relation> rels, int m, int r1)
{
    std::vector<std::vector<Integer>> R;
    std::vector<unsigned> s;
    for (auto& r : rels) {
        R.emplace_back(r.v.begin(), r.v.end());
        s.push_back(r.signs);
    }
    size_t top = 0;
    for (int c = 0; c < m && top < R.size(); ++c) {
        for (;;) {
            size_t piv = R.size();
            for (size_t i = top; i < R.size(); ++i)
                if (R[i][c] != 0 && (piv == R.size() || abs(R[i][c]) < abs(R[piv][c]))) piv = i;
            if (piv == R.size()) break;
            std::swap(R[top], R[piv]);
            std::swap(s[top], s[piv]);
            bool clean = true;
            for (size_t i = top + 1; i < R.size(); ++i) {
                if (R[i][c] == 0) continue;
                Integer qz;
                mpz_fdiv_q(qz.get_mpz_t(), R[i][c].get_mpz_t(), R[top][c].get_mpz_t());
                for (int j = c; j < m; ++j) R[i][j] -= qz * R[top][j];
                if (mpz_odd_p(qz.get_mpz_t())) s[i] ^= s[top];
                if (R[i][c] != 0) clean = false;
            }
            if (clean) {
                ++top;
                break;
            }
        }
    }
    F2Basis b(r1);
    if (r1 > 0) b.add({(std::uint64_t(1) << r1) - 1});  // -1
    for (size_t i = top; i < R.size(); ++i) b.add({s[i]});
    return b.rank();
}


bool is_zero_vec(const ZVec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

// Is w a square in K? Candidate roots come from the embeddings, the answer
// from exact squaring.
bool is_square_in(const NumberField& K, const ZVec& w)
{
    const int n = K.degree();
    const NumericData& nd = K.numeric();
    QVec wp = K.to_power(w);
    QMat B = K.basis();
    std::vector<HC> wv(n);
    for (int i = 0; i < n; ++i) wv[i] = detail::eval_power(wp, nd.roots[i]);
    for (int i = 0; i < nd.r1; ++i)
        if (wv[i].real() < 0) return false;
    std::vector<std::vector<HC>> om(n, std::vector<HC>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) om[i][j] = detail::eval_power(B[j], nd.roots[i]);
    // independent sign choices: real roots and one per conjugate pair
    const int free = nd.r1 + (n - nd.r1) / 2;
    for (int mask = 0; mask < (1 << free); ++mask) {
        std::vector<HC> y(n);
        for (int i = 0; i < nd.r1; ++i) {
            y[i] = HC(sqrt(wv[i].real()));
            if (mask >> i & 1) y[i] = -y[i];
        }
        for (int c = 0; c < (n - nd.r1) / 2; ++c) {
            int i = nd.r1 + 2 * c;
            HC r = sqrt(wv[i]);
            if (mask >> (nd.r1 + c) & 1) r = -r;
            y[i] = r;
            y[i + 1] = conj(r);
        }
        // solve om * c = y
        auto m = om;
        auto b = y;
        for (int c = 0; c < n; ++c) {
            int piv = c;
            for (int r = c + 1; r < n; ++r)
                if (abs(m[r][c]) > abs(m[piv][c])) piv = r;
            std::swap(m[c], m[piv]);
            std::swap(b[c], b[piv]);
            for (int r = 0; r < n; ++r) {
                if (r == c) continue;
                HC t = m[r][c] / m[c][c];
                for (int j = c; j < n; ++j) m[r][j] -= t * m[c][j];
                b[r] -= t * b[c];
            }
        }
        ZVec z(n);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            HC ci = b[i] / m[i][i];
            bool r;
            z[i] = detail::round_to_integer(ci.real(), r);
            ok = r && abs(ci.imag()) < HP("1e-20");
        }
        if (ok && K.mul(z, z) == w) return true;
    }
    return false;
}

struct ExplicitUnit {
    ZVec x;
    unsigned signs;
};

// Dimension of the span in U/U^2 of totally positive units built from the
// explicit ones, each certified nonsquare (together with all subset products).
int totally_positive_rank(const NumberField& K, const std::vector<ExplicitUnit>& units, int r1)
{
    // sign-space basis with exact representatives
    std::vector<ExplicitUnit> basis;
    ZVec minus_one = K.one();
    for (auto& c : minus_one) c = -c;
    auto reduce = [&](ExplicitUnit u) {
        for (auto& b : basis) {
            int lead = 31 - __builtin_clz(b.signs);
            if (u.signs >> lead & 1) {
                u.signs ^= b.signs;
                u.x = K.mul(u.x, b.x);
            }
        }
        return u;
    };
    auto insert = [&](ExplicitUnit u) {
        u = reduce(u);
        if (!u.signs) return;
        basis.push_back(u);
        std::sort(basis.begin(), basis.end(), [](auto& a, auto& b) { return a.signs > b.signs; });
    };
    if (r1 > 0) insert({minus_one, (1u << r1) - 1});
    for (auto& u : units) insert(u);
    std::vector<ZVec> indep;
    for (auto& u : units) {
        ExplicitUnit w = reduce(u);
        if (w.signs) continue;
        bool dependent = false;
        for (int mask = 0; mask < (1 << indep.size()) && !dependent; ++mask) {
            ZVec t = w.x;
            for (size_t i = 0; i < indep.size(); ++i)
                if (mask >> i & 1) t = K.mul(t, indep[i]);
            if (is_square_in(K, t)) dependent = true;
        }
        if (!dependent) indep.push_back(w.x);
        if (indep.size() >= 3) break;
    }
    return static_cast<int>(indep.size());
}

}  // namespace

ClassData class_data(const NumberField& k, const ClassBudget& budget)
{
    if (k.degree() != 3) throw InvalidInput("class_data needs a cubic field");
    if (abs(k.disc()) > budget.max_disc) throw BudgetExceeded("discriminant above the class-group ceiling");
    const int n = 3, r1 = k.r1(), r2 = k.r2();
    double fact = 6.0 / 27.0 * std::pow(4.0 / M_PI, r2) * std::sqrt(std::fabs(k.disc().get_d()));
    std::uint64_t bound = static_cast<std::uint64_t>(std::floor(fact + 1e-9));
    // tiny Minkowski bounds leave too few smooth norms for the stability test
    bound = std::max<std::uint64_t>(bound, 30);

    struct FB {
        std::uint64_t p;
        int idx;
        const PrimeIdeal* P;
    };
    std::vector<FB> fb;
    std::vector<std::uint64_t> fb_primes = primes_up_to(bound);
    for (std::uint64_t p : fb_primes) {
        const auto& ps = k.primes_above(p);
        for (auto& P : ps) fb.push_back({p, static_cast<int>(fb.size()), &P});
    }
    const int m = static_cast<int>(fb.size());

    ClassData out;
    out.factor_base = m;
    F2Basis vrank(m), augrank(m + r1);
    FqBasis qrank;
    std::vector<Relation> rels;
    std::vector<ExplicitUnit> explicit_units;
    {
        // -1
        std::vector<std::uint64_t> w((m + r1 + 63) / 64 + 1, 0);
        for (int i = 0; i < r1; ++i) w[(m + i) / 64] |= std::uint64_t(1) << ((m + i) % 64);
        augrank.words = static_cast<int>(w.size());
        vrank.words = static_cast<int>((m + 63) / 64 + 1);
        augrank.add(w);
    }
    const long stable = budget.stable_after > 0 ? budget.stable_after : std::max<long>(300, 8L * (m + r1));
    long since_change = 0, examined = 0;
    const int units_needed = r1 + r2 - 1;

    auto process = [&](const ZVec& x) -> int {
        Integer N = abs(k.norm(x));
        if (N == 0) return -1;
        Integer rest = N;
        for (std::uint64_t p : fb_primes) {
            if (rest == 1) break;
            while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        }
        if (rest != 1) return -1;
        Relation r;
        r.v.assign(m, 0);
        for (auto& e : fb) {
            if (!mpz_divisible_ui_p(N.get_mpz_t(), e.p)) continue;
            r.v[e.idx] = k.valuation(*e.P, x);
        }
        std::vector<int> sg = k.real_signs(x);
        for (int i = 0; i < r1; ++i)
            if (sg[i] < 0) r.signs |= 1u << i;
        std::vector<std::uint64_t> wv(vrank.words, 0), wa(augrank.words, 0);
        FpVec fq(m);
        for (int i = 0; i < m; ++i) {
            if (r.v[i] & 1) {
                wv[i / 64] |= std::uint64_t(1) << (i % 64);
                wa[i / 64] |= std::uint64_t(1) << (i % 64);
            }
            fq[i] = static_cast<std::uint64_t>(r.v[i]);
        }
        for (int i = 0; i < r1; ++i)
            if (r.signs >> i & 1) wa[(m + i) / 64] |= std::uint64_t(1) << ((m + i) % 64);
        bool changed = false;
        changed |= vrank.add(wv);
        changed |= augrank.add(wa);
        bool qchanged = m > 0 && qrank.add(fq);
        if (N == 1 && explicit_units.size() < 40) explicit_units.push_back({x, r.signs});
        rels.push_back(std::move(r));
        return (changed || qchanged) ? 1 : 0;
    };

    bool done = false;
    for (long C = 1; !done; ++C) {
        // shell max |x_i| = C, first nonzero coordinate positive
        for (long a = -C; a <= C && !done; ++a)
            for (long b = -C; b <= C && !done; ++b)
                for (long c = -C; c <= C && !done; ++c) {
                    if (std::max({std::labs(a), std::labs(b), std::labs(c)}) != C) continue;
                    long firstnz = a != 0 ? a : (b != 0 ? b : c);
                    if (firstnz < 0) continue;
                    if (++examined > budget.max_elements) {
                        done = true;
                        break;
                    }
                    ZVec x{Integer(a), Integer(b), Integer(c)};
                    // integral basis coordinates; omega_0 = 1
                    int st = process(x);
                    if (st == 1) since_change = 0;
                    else if (st == 0) ++since_change;
                    long kernel = static_cast<long>(rels.size()) - qrank.rank();
                    if (m == 0) {
                        // trivial class group: stop once the unit signatures are certified
                        if (st >= 0 && rels.size() >= 20 && rels.size() % 20 == 0 &&
                            unit_sign_rank(rels, m, r1) + totally_positive_rank(k, explicit_units, r1) == r1 + r2)
                            done = true;
                    } else if (qrank.rank() == m && kernel >= units_needed + 2 && since_change >= stable &&
                               static_cast<long>(rels.size()) >= 2 * (m + r1) + 20)
                        done = true;
                }
        if (C > 2000) break;
    }
    out.relations = static_cast<long>(rels.size());
    out.rk2 = m - vrank.rank();
    out.rk2_plus = m + r1 - augrank.rank();
    out.unit_sig_rank = unit_sign_rank(rels, m, r1);
    int tp = totally_positive_rank(k, explicit_units, r1);
    // U/U^2 has dimension r1 + r2 for a cubic field
    bool units_certified = out.unit_sig_rank + tp == r1 + r2;
    out.tp_unit_rank = r1 + r2 - out.unit_sig_rank;
    bool sandwich = out.rk2 <= out.rk2_plus && out.rk2_plus <= out.rk2 + out.tp_unit_rank;
    bool converged = (m == 0 || (qrank.rank() == m && since_change >= stable)) && units_certified && sandwich;
    out.status = converged ? ClassData::Status::Certified : ClassData::Status::BudgetExceeded;
    return out;
}

}  // namespace quartres
