#include "quartres/number_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "internal.hpp"
#include "numeric.hpp"
#include "quartres/errors.hpp"

namespace quartres {

struct NumberField::Cache {
    std::mutex mu;
    std::map<std::uint64_t, std::vector<PrimeIdeal>> primes;
    std::once_flag numeric_once;
    std::unique_ptr<NumericData> numeric;
};

// --- SplittingType ---------------------------------------------------------

int SplittingType::degree() const
{
    int d = 0;
    for (auto [e, f] : ef) d += e * f;
    return d;
}

bool SplittingType::unramified() const
{
    return std::all_of(ef.begin(), ef.end(), [](auto x) { return x.first == 1; });
}

bool SplittingType::totally_ramified() const
{
    return ef.size() == 1 && ef[0].second == 1;
}

void SplittingType::canonicalize()
{
    std::sort(ef.begin(), ef.end(), [](auto a, auto b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first > b.first;
    });
}

std::string SplittingType::to_string() const
{
    std::string s = "(";
    for (auto [e, f] : ef) {
        s += std::to_string(f);
        if (e > 1) s += "^" + std::to_string(e);
    }
    s += ")";
    if (decoration >= 0) s += "_" + std::to_string(decoration);
    return s;
}

SplittingType SplittingType::parse(const std::string& in)
{
    SplittingType t;
    std::string s;
    for (char c : in)
        if (c != ' ' && c != '{' && c != '}') s += c;
    size_t i = 0;
    bool paren = !s.empty() && s[0] == '(';
    if (paren) ++i;
    auto fail = [&] { throw InvalidInput("bad splitting type: " + in); };
    while (i < s.size() && s[i] != ')' && s[i] != '_') {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail();
        int f = s[i++] - '0';
        int e = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail();
            e = s[i++] - '0';
        }
        if (f < 1 || e < 1) fail();
        t.ef.emplace_back(e, f);
    }
    if (paren) {
        if (i >= s.size() || s[i] != ')') fail();
        ++i;
    }
    if (i < s.size()) {
        if (s[i] != '_') fail();
        std::string d = s.substr(i + 1);
        if (d == "0") t.decoration = 0;
        else if (d == "4") t.decoration = 4;
        else fail();
    }
    if (t.ef.empty()) fail();
    t.canonicalize();
    return t;
}

// --- Sturm -----------------------------------------------------------------

namespace {

using RPoly = std::vector<Rational>;

void rtrim(RPoly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

RPoly rrem(RPoly a, const RPoly& b)
{
    int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        if (a[i] == 0) continue;
        Rational t = a[i] / b.back();
        for (int j = 0; j <= db; ++j) a[i - db + j] -= t * b[j];
    }
    a.resize(std::min<size_t>(a.size(), db));
    rtrim(a);
    return a;
}

int sign_changes(const std::vector<int>& s)
{
    int c = 0, last = 0;
    for (int x : s) {
        if (x == 0) continue;
        if (last != 0 && x != last) ++c;
        last = x;
    }
    return c;
}

}  // namespace

int count_real_roots(const IntPoly& f)
{
    if (f.degree() < 1) return 0;
    std::vector<RPoly> seq;
    RPoly a, b;
    for (auto& c : f.coeffs()) a.emplace_back(c);
    IntPoly df = f.derivative();
    for (auto& c : df.coeffs()) b.emplace_back(c);
    seq.push_back(a);
    seq.push_back(b);
    while (seq.back().size() > 1) {
        RPoly r = rrem(seq[seq.size() - 2], seq.back());
        if (r.empty()) break;
        for (auto& x : r) x = -x;
        seq.push_back(r);
    }
    // signs at -inf and +inf
    std::vector<int> neg, pos;
    for (auto& p : seq) {
        int d = static_cast<int>(p.size()) - 1;
        int s = sgn(p.back());
        pos.push_back(s);
        neg.push_back(d % 2 ? -s : s);
    }
    return sign_changes(neg) - sign_changes(pos);
}

// --- NumberField -----------------------------------------------------------

NumberField::NumberField(const IntPoly& f) : f_(f), n_(f.degree())
{
    if (!f.is_monic()) throw InvalidInput("field polynomial must be monic: " + f.to_string());
    if (n_ < 1) throw InvalidInput("field polynomial must have degree >= 1");
    if (n_ > 6) throw InvalidInput("unsupported degree > 6: " + f.to_string());
    if (!is_irreducible(f)) throw NotAField("reducible polynomial: " + f.to_string());
    r1_ = count_real_roots(f);
    r2_ = (n_ - r1_) / 2;
    cache_ = std::make_shared<Cache>();
    build_order();
}

NumberField make_field(const IntPoly& f) { return NumberField(f); }

QMat NumberField::basis() const
{
    QMat b(n_, QVec(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            b[i][j] = Rational(bnum_[i][j], bden_);
            b[i][j].canonicalize();
        }
    return b;
}

ZVec NumberField::one() const
{
    QVec p(n_);
    p[0] = 1;
    QVec q = to_order(p);
    ZVec r(n_);
    for (int i = 0; i < n_; ++i) r[i] = q[i].get_num();
    return r;
}

namespace {

// product of power-basis vectors modulo monic f
QVec power_mul(const QVec& a, const QVec& b, const IntPoly& f)
{
    int n = f.degree();
    QVec r(2 * n - 1);
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) r[i + j] += a[i] * b[j];
    }
    for (int i = 2 * n - 2; i >= n; --i) {
        if (r[i] == 0) continue;
        Rational t = r[i];
        for (int j = 0; j < n; ++j) r[i - n + j] -= t * Rational(f[j]);
        r[i] = 0;
    }
    r.resize(n);
    return r;
}

}  // namespace

void NumberField::compute_mult_table()
{
    QMat b = basis();
    binv_ = inverse(b);
    mt_.assign(n_, std::vector<ZVec>(n_, ZVec(n_)));
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) {
            QVec c = row_times(power_mul(b[i], b[j], f_), binv_);
            for (int k = 0; k < n_; ++k) {
                if (c[k].get_den() != 1) throw InternalError("integral basis not closed under multiplication");
                mt_[i][j][k] = c[k].get_num();
            }
            mt_[j][i] = mt_[i][j];
        }
}

ZVec NumberField::mul(const ZVec& a, const ZVec& b) const
{
    ZVec r(n_);
    Integer s;
    for (int i = 0; i < n_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n_; ++j) {
            if (b[j] == 0) continue;
            s = a[i] * b[j];
            const ZVec& m = mt_[i][j];
            for (int k = 0; k < n_; ++k)
                if (m[k] != 0) r[k] += s * m[k];
        }
    }
    return r;
}

ZMat NumberField::mul_matrix(const ZVec& a) const
{
    ZMat m(n_);
    for (int i = 0; i < n_; ++i) {
        ZVec e(n_);
        e[i] = 1;
        m[i] = mul(a, e);
    }
    return m;
}

Integer NumberField::norm(const ZVec& a) const { return det_bareiss(mul_matrix(a)); }

Integer NumberField::trace(const ZVec& a) const
{
    ZMat m = mul_matrix(a);
    Integer t = 0;
    for (int i = 0; i < n_; ++i) t += m[i][i];
    return t;
}

IntPoly NumberField::charpoly(const ZVec& a) const
{
    // det(tI - M) sampled at t = 0..n, then interpolated
    ZMat m = mul_matrix(a);
    std::vector<Rational> vals(n_ + 1);
    for (int t = 0; t <= n_; ++t) {
        ZMat x = m;
        for (int i = 0; i < n_; ++i) {
            for (int j = 0; j < n_; ++j) x[i][j] = -x[i][j];
            x[i][i] += t;
        }
        vals[t] = det_bareiss(std::move(x));
    }
    // Newton divided differences at nodes 0..n
    std::vector<Rational> dd = vals;
    for (int k = 1; k <= n_; ++k)
        for (int i = n_; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / (i - (i - k));
    std::vector<Rational> poly{dd[n_]};
    for (int k = n_ - 1; k >= 0; --k) {
        // poly = poly * (t - k) + dd[k]
        std::vector<Rational> np(poly.size() + 1);
        for (size_t i = 0; i < poly.size(); ++i) {
            np[i + 1] += poly[i];
            np[i] -= poly[i] * k;
        }
        np[0] += dd[k];
        poly = np;
    }
    std::vector<Integer> c;
    for (auto& q : poly) {
        if (q.get_den() != 1) throw InternalError("charpoly not integral");
        c.push_back(q.get_num());
    }
    return IntPoly(std::move(c));
}

QVec NumberField::to_power(const ZVec& a) const
{
    QVec r(n_);
    for (int i = 0; i < n_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n_; ++j) r[j] += Rational(a[i] * bnum_[i][j]);
    }
    for (auto& x : r) {
        x /= bden_;
        x.canonicalize();
    }
    return r;
}

QVec NumberField::to_order(const QVec& power) const { return row_times(power, binv_); }

ZVec NumberField::from_poly(const IntPoly& g) const
{
    // reduce g mod f, then change basis
    IntPoly r = rem_monic(g, f_);
    QVec p(n_);
    for (int i = 0; i <= r.degree(); ++i) p[i] = r[i];
    QVec q = to_order(p);
    ZVec z(n_);
    for (int i = 0; i < n_; ++i) {
        if (q[i].get_den() != 1) throw InternalError("from_poly: non-integral coordinates");
        z[i] = q[i].get_num();
    }
    return z;
}

const NumericData& NumberField::numeric() const
{
    std::call_once(cache_->numeric_once, [this] {
        cache_->numeric = std::make_unique<NumericData>(compute_numeric(f_, r1_));
    });
    return *cache_->numeric;
}

std::vector<int> NumberField::real_signs(const ZVec& a) const
{
    return detail::real_signs(numeric(), to_power(a));
}

std::string NumberField::to_json() const
{
    std::ostringstream os;
    os << "{\"poly\":" << f_.to_json() << ",\"disc\":\"" << disc_.get_str() << "\",\"r1\":" << r1_
       << ",\"r2\":" << r2_;
    if (n_ == 4) os << ",\"galois\":\"" << to_string(galois_type_quartic(*this)) << "\"";
    os << "}";
    return os.str();
}

const std::vector<PrimeIdeal>& NumberField::primes_above(std::uint64_t p) const
{
    {
        std::lock_guard<std::mutex> lk(cache_->mu);
        auto it = cache_->primes.find(p);
        if (it != cache_->primes.end()) return it->second;
    }
    std::vector<PrimeIdeal> v = detail::decompose_prime(*this, mt_, p);
    std::lock_guard<std::mutex> lk(cache_->mu);
    auto [it, inserted] = cache_->primes.emplace(p, std::move(v));
    return it->second;
}

SplittingType NumberField::splitting_type(std::uint64_t p) const
{
    SplittingType t;
    for (auto& P : primes_above(p)) t.ef.emplace_back(P.e, P.f);
    t.canonicalize();
    if (t.degree() != n_) throw InternalError("splitting type degrees do not sum to n");
    if (n_ == 3 && p == 2 && t.ef.size() == 2 && t.ef[0].first == 2) {
        Integer r = disc_ % 8;
        if (r < 0) r += 8;
        t.decoration = r == 0 ? 0 : 4;
    }
    return t;
}

int NumberField::valuation(const PrimeIdeal& P, ZVec a) const
{
    if (std::all_of(a.begin(), a.end(), [](const Integer& x) { return x == 0; }))
        throw InvalidInput("valuation of zero");
    const Integer& p = P.p;
    auto divisible = [&](const ZVec& v) {
        return std::all_of(v.begin(), v.end(), [&](const Integer& x) {
            return mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()) != 0;
        });
    };
    int v = 0;
    for (;;) {
        if (divisible(a)) {
            for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
            v += P.e;
            continue;
        }
        ZVec y = mul(a, P.tau);
        if (!divisible(y)) break;
        for (auto& x : y) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
        a = std::move(y);
        ++v;
    }
    return v;
}

DiscSplit disc_decompose(const NumberField& k)
{
    if (k.degree() != 3) throw InvalidInput("disc_decompose needs a cubic field");
    auto [s, m] = squarefree_part(k.disc());
    Integer r = s % 4;
    if (r < 0) r += 4;
    DiscSplit out;
    if (r == 1) {
        out.D = s;
        out.f = m;
    } else {
        if (m % 2 != 0) throw InternalError("cubic discriminant with no fundamental part");
        out.D = 4 * s;
        out.f = m / 2;
    }
    for (auto& [p, e] : factor_integer(out.f)) {
        if ((p != 3 && e > 1) || (p == 3 && e > 2))
            throw InternalError("conductor exponent out of range for cubic discriminant " + k.disc().get_str());
    }
    return out;
}

}  // namespace quartres
