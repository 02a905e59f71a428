#include "qmac/ratfunc.hpp"

namespace qmac {

RatFuncQ::RatFuncQ(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFuncQ: zero denominator");
    canonicalize();
}

void RatFuncQ::canonicalize() {
    if (num_.is_zero()) {
        den_ = PolyQ::one();
        return;
    }
    PolyQ g = PolyQ::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divided_by(g);
        den_ = den_.divided_by(g);
    }
    // Scale to coprime integer polynomials with joint content 1.
    mpz_class l(1);
    for (const auto& c : num_.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& c : den_.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_class g2(0);
    auto acc_gcd = [&g2, &l](const PolyQ& p) {
        for (const auto& c : p.coeffs()) {
            Rat s = c * Rat(l);
            mpz_gcd(g2.get_mpz_t(), g2.get_mpz_t(), s.get_num().get_mpz_t());
        }
    };
    acc_gcd(num_);
    acc_gcd(den_);
    Rat scale = Rat(l) / Rat(g2);
    if (den_.leading() * scale < 0) scale = -scale;
    num_ = num_ * scale;
    den_ = den_ * scale;
}

// Integer scaling and sign only; num and den must already be coprime.
RatFuncQ RatFuncQ::from_coprime(PolyQ num, PolyQ den) {
    RatFuncQ r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    if (r.num_.is_zero()) {
        r.den_ = PolyQ::one();
        return r;
    }
    mpz_class l(1);
    for (const auto& c : r.num_.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& c : r.den_.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_class g2(0);
    auto acc_gcd = [&g2, &l](const PolyQ& p) {
        for (const auto& c : p.coeffs()) {
            Rat s = c * Rat(l);
            mpz_gcd(g2.get_mpz_t(), g2.get_mpz_t(), s.get_num().get_mpz_t());
        }
    };
    acc_gcd(r.num_);
    acc_gcd(r.den_);
    Rat scale = Rat(l) / Rat(g2);
    if (r.den_.leading() * scale < 0) scale = -scale;
    r.num_ = r.num_ * scale;
    r.den_ = r.den_ * scale;
    return r;
}

RatFuncQ RatFuncQ::qpow(int e) {
    if (e >= 0) return RatFuncQ(PolyQ::qpow(e));
    return RatFuncQ(PolyQ::one(), PolyQ::qpow(-e));
}

RatFuncQ RatFuncQ::operator-() const {
    RatFuncQ r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

// a/b + c/d with gcd(a,b) = gcd(c,d) = 1, via g = gcd(b,d): the sum
// t/(b1 g d1) with t = a d1 + c b1 needs only gcd(t, g) removed.
RatFuncQ RatFuncQ::add_impl(const RatFuncQ& o, bool negate) const {
    const PolyQ& a = num_;
    const PolyQ& b = den_;
    PolyQ c = negate ? -o.num_ : o.num_;
    const PolyQ& d = o.den_;
    if (b.is_one() && d.is_one())
        return from_coprime(a + c, PolyQ::one());
    PolyQ g = PolyQ::gcd(b, d);
    if (g.degree() <= 0)
        return from_coprime(a * d + c * b, b * d);
    PolyQ b1 = b.divided_by(g), d1 = d.divided_by(g);
    PolyQ t = a * d1 + c * b1;
    if (t.is_zero()) return RatFuncQ();
    PolyQ h = PolyQ::gcd(t, g);
    if (h.degree() > 0) {
        t = t.divided_by(h);
        g = g.divided_by(h);
    }
    return from_coprime(std::move(t), b1 * g * d1);
}

RatFuncQ RatFuncQ::operator+(const RatFuncQ& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    return add_impl(o, false);
}

RatFuncQ RatFuncQ::operator-(const RatFuncQ& o) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return -o;
    return add_impl(o, true);
}

RatFuncQ RatFuncQ::operator*(const RatFuncQ& o) const {
    if (is_zero() || o.is_zero()) return RatFuncQ();
    if (den_.is_one() && o.den_.is_one()) {
        RatFuncQ r;
        r.num_ = num_ * o.num_;
        r.den_ = PolyQ::one();
        return r;  // already canonical: product of canonical integer polys
    }
    // cross-cancel before multiplying so no gcd of large products is needed
    PolyQ a = num_, b = den_, c = o.num_, d = o.den_;
    PolyQ h1 = PolyQ::gcd(a, d);
    if (h1.degree() > 0) {
        a = a.divided_by(h1);
        d = d.divided_by(h1);
    }
    PolyQ h2 = PolyQ::gcd(c, b);
    if (h2.degree() > 0) {
        c = c.divided_by(h2);
        b = b.divided_by(h2);
    }
    return from_coprime(a * c, b * d);
}

RatFuncQ RatFuncQ::operator/(const RatFuncQ& o) const {
    if (o.is_zero()) throw std::domain_error("RatFuncQ: division by zero");
    return *this * o.inverse();
}

RatFuncQ RatFuncQ::inverse() const {
    if (is_zero()) throw std::domain_error("RatFuncQ: inverse of zero");
    return from_coprime(den_, num_);
}

Rat RatFuncQ::limit_at_one() const {
    PolyQ n = num_, d = den_;
    const PolyQ qm1 = PolyQ::qpow(1) - PolyQ::one();
    while (!n.is_zero() && n.eval(1) == 0 && d.eval(1) == 0) {
        n = n.divided_by(qm1);
        d = d.divided_by(qm1);
    }
    if (d.eval(1) == 0) throw std::domain_error("RatFuncQ: pole at q=1");
    return n.eval(1) / d.eval(1);
}

std::string RatFuncQ::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFuncQ RatFuncQ::parse(std::string_view s) {
    size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i < s.size() && s[i] == '(') {
        size_t depth = 0, j = i;
        for (; j < s.size(); ++j) {
            if (s[j] == '(') ++depth;
            else if (s[j] == ')' && --depth == 0) break;
        }
        if (j == s.size()) throw std::invalid_argument("RatFuncQ::parse: unbalanced parens");
        PolyQ num = PolyQ::parse(s.substr(i + 1, j - i - 1));
        size_t k = j + 1;
        while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
        if (k >= s.size() || s[k] != '/')
            throw std::invalid_argument("RatFuncQ::parse: '/' expected");
        ++k;
        while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
        if (k >= s.size() || s[k] != '(')
            throw std::invalid_argument("RatFuncQ::parse: '(' expected");
        size_t end = s.rfind(')');
        PolyQ den = PolyQ::parse(s.substr(k + 1, end - k - 1));
        return RatFuncQ(std::move(num), std::move(den));
    }
    return RatFuncQ(PolyQ::parse(s));
}

PolyQ qpoch(int e, int n) {
    if (e < 0) throw std::domain_error("qpoch: negative base exponent, use qpoch_rf");
    PolyQ p = PolyQ::one();
    for (int k = 0; k < n; ++k)
        p *= PolyQ::one() - PolyQ::qpow(e + k);
    return p;
}

RatFuncQ qpoch_rf(int e, int n) {
    RatFuncQ p(1);
    for (int k = 0; k < n; ++k) {
        int ek = e + k;
        if (ek >= 0) {
            p *= RatFuncQ(PolyQ::one() - PolyQ::qpow(ek));
        } else {
            // 1 - q^{-j} = (q^j - 1)/q^j
            p *= RatFuncQ(PolyQ::qpow(-ek) - PolyQ::one(), PolyQ::qpow(-ek));
        }
    }
    return p;
}

PolyQ qpoch_step(int e, int step, int n) {
    if (e < 0 || step < 1) throw std::domain_error("qpoch_step: bad arguments");
    PolyQ p = PolyQ::one();
    for (int k = 0; k < n; ++k)
        p *= PolyQ::one() - PolyQ::qpow(e + k * step);
    return p;
}

RatFuncQ inv_poch_coeff(int m, int beta) {
    if (m < 0 || beta < 0) throw std::domain_error("inv_poch_coeff: negative argument");
    if (m == 0) return RatFuncQ(1);
    return RatFuncQ(qpoch(beta, m), qpoch(1, m));
}

}  // namespace qmac
