#include <sstream>

#include "quartres/dirichlet.hpp"
#include "quartres/errors.hpp"

namespace quartres {

EulerFactor EulerFactor::linear(std::uint64_t p, long a)
{
    EulerFactor f;
    f.p = p;
    if (a != 0) f.c.push_back(Rational(a));
    return f;
}

TwoAdicFactor::TwoAdicFactor(std::initializer_list<long> coeffs)
{
    if (coeffs.size() > 5) throw InvalidInput("2-adic factor of degree > 4");
    c.fill(Rational(0));
    size_t i = 0;
    for (long v : coeffs) c[i++] = v;
}

Rational TwoAdicFactor::at_one() const
{
    Rational s = 0;
    for (int i = 4; i >= 0; --i) s = s / 2 + c[i];
    return s;
}

EulerFactor TwoAdicFactor::as_euler() const
{
    EulerFactor f;
    f.p = 2;
    f.c.assign(c.begin(), c.end());
    while (f.c.size() > 1 && f.c.back() == 0) f.c.pop_back();
    return f;
}

std::string TwoAdicFactor::to_string() const
{
    std::string s;
    for (int i = 0; i < 5; ++i) {
        if (c[i] == 0) continue;
        Rational a = abs(c[i]);
        std::string sign = c[i] < 0 ? "-" : (s.empty() ? "" : "+");
        std::string coef = (a == 1 && i > 0) ? "" : quartres::to_string(a);
        std::string mon = i == 0 ? "" : (i == 1 ? "u" : "u^" + std::to_string(i));
        s += sign + coef + mon;
    }
    return s.empty() ? "0" : s;
}

TwoAdicFactor TwoAdicFactor::operator+(const TwoAdicFactor& o) const
{
    TwoAdicFactor r;
    for (int i = 0; i < 5; ++i) r.c[i] = c[i] + o.c[i];
    return r;
}

TwoAdicFactor TwoAdicFactor::operator*(const Rational& x) const
{
    TwoAdicFactor r;
    for (int i = 0; i < 5; ++i) r.c[i] = c[i] * x;
    return r;
}

DirichletCoeffs::DirichletCoeffs(std::uint64_t X) : X_(X), a_(X + 1, Rational(0))
{
    if (X == 0) throw InvalidInput("series bound must be positive");
}

DirichletCoeffs DirichletCoeffs::one(std::uint64_t X)
{
    DirichletCoeffs d(X);
    d.a_[1] = 1;
    return d;
}

void DirichletCoeffs::multiply(const EulerFactor& f)
{
    if (f.c.empty() || f.c[0] != 1) throw InvalidInput("Euler factor must have constant term 1");
    if (f.c.size() == 1 || f.p > X_) return;
    // descending n: a[n / p^j] still holds the old value
    for (std::uint64_t n = X_; n >= f.p; --n) {
        if (n % f.p) continue;
        std::uint64_t m = n;
        for (size_t j = 1; j < f.c.size() && m % f.p == 0; ++j) {
            m /= f.p;
            if (f.c[j] != 0 && a_[m] != 0) a_[n] += f.c[j] * a_[m];
        }
    }
}

DirichletCoeffs DirichletCoeffs::operator*(const DirichletCoeffs& o) const
{
    std::uint64_t X = std::min(X_, o.X_);
    DirichletCoeffs r(X);
    for (std::uint64_t i = 1; i <= X; ++i) {
        if (a_[i] == 0) continue;
        for (std::uint64_t j = 1; i * j <= X; ++j)
            if (o.a_[j] != 0) r.a_[i * j] += a_[i] * o.a_[j];
    }
    return r;
}

DirichletCoeffs DirichletCoeffs::operator+(const DirichletCoeffs& o) const
{
    DirichletCoeffs r = *this;
    r += o;
    return r;
}

DirichletCoeffs& DirichletCoeffs::operator+=(const DirichletCoeffs& o)
{
    if (o.X_ != X_) throw InvalidInput("series bounds differ");
    for (std::uint64_t n = 1; n <= X_; ++n) a_[n] += o.a_[n];
    return *this;
}

DirichletCoeffs& DirichletCoeffs::operator*=(const Rational& r)
{
    for (auto& x : a_) x *= r;
    return *this;
}

std::string DirichletCoeffs::to_jsonl() const
{
    std::ostringstream os;
    for (std::uint64_t n = 1; n <= X_; ++n)
        if (a_[n] != 0) os << "{\"n\":" << n << ",\"coeff\":\"" << quartres::to_string(a_[n]) << "\"}\n";
    return os.str();
}

std::string DirichletCoeffs::to_csv() const
{
    std::ostringstream os;
    os << "n,coeff\n";
    for (std::uint64_t n = 1; n <= X_; ++n)
        if (a_[n] != 0) os << n << "," << quartres::to_string(a_[n]) << "\n";
    return os.str();
}

DirichletCoeffs euler_product(const std::map<std::uint64_t, EulerFactor>& factors, std::uint64_t X)
{
    DirichletCoeffs d = DirichletCoeffs::one(X);
    for (auto& [p, f] : factors) {
        if (f.p != p) throw InvalidInput("Euler factor keyed under the wrong prime");
        d.multiply(f);
    }
    return d;
}

}  // namespace quartres
