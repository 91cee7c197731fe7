#include "quartres/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"
#include "quartres/errors.hpp"

namespace quartres {

namespace {
const Integer kZero = 0;
}

IntPoly::IntPoly(std::vector<Integer> c) : c_(std::move(c)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> c)
{
    for (long v : c) c_.emplace_back(v);
    trim();
}

IntPoly IntPoly::monomial(const Integer& c, int deg)
{
    std::vector<Integer> v(deg + 1);
    v[deg] = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Integer& IntPoly::operator[](int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const Integer& IntPoly::leading() const
{
    return c_.empty() ? kZero : c_.back();
}

IntPoly IntPoly::derivative() const
{
    if (c_.size() <= 1) return {};
    std::vector<Integer> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

Integer IntPoly::eval(const Integer& x) const
{
    Integer r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

Rational IntPoly::eval(const Rational& x) const
{
    Rational r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + Rational(c_[i]);
    return r;
}

IntPoly IntPoly::compose_x2() const
{
    if (c_.empty()) return {};
    std::vector<Integer> v(2 * c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) v[2 * i] = c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::compose_linear(const Integer& a, const Integer& b) const
{
    IntPoly lin({b, a});
    IntPoly r;
    for (size_t i = c_.size(); i-- > 0;) r = r * lin + IntPoly({c_[i]});
    return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b)
{
    std::vector<Integer> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b)
{
    std::vector<Integer> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a[static_cast<int>(i)] - b[static_cast<int>(i)];
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a)
{
    std::vector<Integer> v = a.c_;
    for (auto& x : v) x = -x;
    return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(v));
}

IntPoly operator*(const Integer& s, const IntPoly& a)
{
    std::vector<Integer> v = a.c_;
    for (auto& x : v) x *= s;
    return IntPoly(std::move(v));
}

std::string IntPoly::to_string(char var) const
{
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& c = c_[i];
        if (c == 0) continue;
        Integer a = abs(c);
        if (sgn(c) < 0) os << "-";
        else if (!first) os << "+";
        first = false;
        if (i == 0 || a != 1) os << a.get_str();
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::string IntPoly::to_json() const
{
    std::string s = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += "\"" + c_[i].get_str() + "\"";
    }
    if (c_.empty()) s += "\"0\"";
    return s + "]";
}

namespace {

IntPoly parse_json_array(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("bad polynomial JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw InvalidInput("polynomial JSON must be a nonempty array");
    std::vector<Integer> v;
    for (auto& e : j) {
        Integer z;
        if (e.is_number_integer()) {
            z = Integer(e.get<long>());
        } else if (e.is_string()) {
            std::string s = e.get<std::string>();
            if (s.empty() || z.set_str(s, 10) != 0) throw InvalidInput("bad coefficient: " + s);
        } else {
            throw InvalidInput("polynomial coefficients must be integers or decimal strings");
        }
        v.push_back(z);
    }
    return IntPoly(std::move(v));
}

}  // namespace

IntPoly IntPoly::parse(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw InvalidInput("empty polynomial");
    if (s.front() == '[') return parse_json_array(s);

    std::vector<Integer> c;
    size_t i = 0;
    auto bad = [&](const std::string& why) {
        throw InvalidInput("cannot parse polynomial '" + std::string(text) + "': " + why);
    };
    auto digits = [&](std::string& out) {
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out += s[i++];
    };
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            bad("expected + or -");
        }
        first = false;
        std::string num;
        digits(num);
        Integer coef = 1;
        if (!num.empty()) coef = Integer(num);
        int deg = 0;
        if (i < s.size() && s[i] == '*') {
            if (num.empty()) bad("dangling *");
            ++i;
            if (i >= s.size() || s[i] != 'x') bad("expected x after *");
        }
        if (i < s.size() && s[i] == 'x') {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e;
                digits(e);
                if (e.empty() || e.size() > 4) bad("bad exponent");
                deg = std::stoi(e);
            }
        } else if (num.empty()) {
            bad("empty term");
        }
        if (static_cast<int>(c.size()) <= deg) c.resize(deg + 1);
        c[deg] += sign * coef;
    }
    return IntPoly(std::move(c));
}

bool lex_less(const IntPoly& a, const IntPoly& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

Integer content(const IntPoly& f)
{
    Integer g = 0;
    for (auto& c : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly primitive_part(const IntPoly& f)
{
    if (f.is_zero()) return f;
    Integer g = content(f);
    std::vector<Integer> v = f.coeffs();
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(v));
}

IntPoly normalize_key(const IntPoly& f)
{
    IntPoly p = primitive_part(f);
    if (sgn(p.leading()) < 0) p = -p;
    return p;
}

Integer naive_height(const IntPoly& f)
{
    Integer h = 0;
    for (auto& c : f.coeffs()) h = std::max(h, Integer(abs(c)));
    return h;
}

void divmod_monic(const IntPoly& a, const IntPoly& b, IntPoly& q, IntPoly& r)
{
    if (!b.is_monic()) throw InvalidInput("divmod_monic: divisor not monic");
    std::vector<Integer> rem = a.coeffs();
    int db = b.degree();
    int da = a.degree();
    if (da < db) { q = {}; r = a; return; }
    std::vector<Integer> quo(da - db + 1);
    for (int i = da; i >= db; --i) {
        Integer t = rem[i];
        if (t == 0) continue;
        quo[i - db] = t;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= t * b[j];
    }
    q = IntPoly(std::move(quo));
    rem.resize(db);
    r = IntPoly(std::move(rem));
}

IntPoly rem_monic(const IntPoly& a, const IntPoly& b)
{
    IntPoly q, r;
    divmod_monic(a, b, q, r);
    return r;
}

bool divides_exact(const IntPoly& b, const IntPoly& a, IntPoly* quotient)
{
    if (b.is_zero()) throw InvalidInput("division by zero polynomial");
    std::vector<Integer> rem = a.coeffs();
    int db = b.degree(), da = a.degree();
    if (a.is_zero()) { if (quotient) *quotient = {}; return true; }
    if (da < db) return false;
    std::vector<Integer> quo(da - db + 1);
    for (int i = da; i >= db; --i) {
        if (rem[i] == 0) continue;
        if (!mpz_divisible_p(rem[i].get_mpz_t(), b.leading().get_mpz_t())) return false;
        Integer t = rem[i] / b.leading();
        quo[i - db] = t;
        for (int j = 0; j <= db; ++j) rem[i - db + j] -= t * b[j];
    }
    for (int i = 0; i < db; ++i)
        if (rem[i] != 0) return false;
    if (quotient) *quotient = IntPoly(std::move(quo));
    return true;
}

Integer det_bareiss(std::vector<std::vector<Integer>> m)
{
    const size_t n = m.size();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Integer resultant(const IntPoly& f, const IntPoly& g)
{
    if (f.is_zero() || g.is_zero()) return 0;
    int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return 1;
    if (m == 0) { Integer r; mpz_pow_ui(r.get_mpz_t(), f[0].get_mpz_t(), n); return r; }
    if (n == 0) { Integer r; mpz_pow_ui(r.get_mpz_t(), g[0].get_mpz_t(), m); return r; }
    int N = m + n;
    std::vector<std::vector<Integer>> s(N, std::vector<Integer>(N));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = f[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = g[n - j];
    return det_bareiss(std::move(s));
}

Integer poly_discriminant(const IntPoly& f)
{
    if (f.is_zero()) throw InvalidInput("discriminant of zero polynomial");
    int n = f.degree();
    if (n < 1) throw InvalidInput("discriminant of constant polynomial");
    if (n == 1) return 1;
    Integer r = resultant(f, f.derivative());
    Integer d;
    mpz_divexact(d.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
    if ((n * (n - 1) / 2) % 2) d = -d;
    return d;
}

}  // namespace quartres
