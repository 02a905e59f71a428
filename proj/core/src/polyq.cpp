#include "qmac/polyq.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qmac {

PolyQ PolyQ::monomial(const Rat& c, int deg) {
    if (deg < 0) throw std::domain_error("PolyQ::monomial: negative degree");
    PolyQ p;
    if (c != 0) {
        p.c_.assign(deg + 1, Rat(0));
        p.c_[deg] = c;
    }
    return p;
}

PolyQ PolyQ::operator-() const {
    PolyQ r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
    PolyQ r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

PolyQ PolyQ::operator-(const PolyQ& o) const {
    PolyQ r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
    r.trim();
    return r;
}

PolyQ PolyQ::operator*(const PolyQ& o) const {
    if (is_zero() || o.is_zero()) return PolyQ();
    PolyQ r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    r.trim();
    return r;
}

PolyQ PolyQ::operator*(const Rat& c) const {
    if (c == 0) return PolyQ();
    PolyQ r(*this);
    for (auto& x : r.c_) x *= c;
    return r;
}

Rat PolyQ::eval(const Rat& x) const {
    Rat v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

void PolyQ::divmod(const PolyQ& a, const PolyQ& b, PolyQ& quo, PolyQ& rem) {
    if (b.is_zero()) throw std::domain_error("PolyQ::divmod: division by zero");
    quo = PolyQ();
    rem = a;
    int db = b.degree();
    Rat lb = b.leading();
    while (!rem.is_zero() && rem.degree() >= db) {
        int k = rem.degree() - db;
        Rat c = rem.leading() / lb;
        quo += monomial(c, k);
        rem -= b * monomial(c, k);
    }
}

PolyQ PolyQ::divided_by(const PolyQ& d) const {
    PolyQ q, r;
    divmod(*this, d, q, r);
    if (!r.is_zero()) throw std::domain_error("PolyQ::divided_by: not divisible");
    return q;
}

namespace {

// Integer polynomial helpers for the primitive PRS gcd.
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class zcontent(const ZPoly& p) {
    mpz_class g(0);
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void zmake_primitive(ZPoly& p) {
    mpz_class g = zcontent(p);
    if (g > 1)
        for (auto& c : p) c /= g;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b
ZPoly zprem(ZPoly a, const ZPoly& b) {
    int db = static_cast<int>(b.size()) - 1;
    const mpz_class& lb = b.back();
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int k = static_cast<int>(a.size()) - 1 - db;
        mpz_class la = a.back();
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[k + i] -= la * b[i];
        ztrim(a);
    }
    return a;
}

ZPoly to_primitive_z(const PolyQ& p) {
    mpz_class l(1);
    for (const auto& c : p.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z;
    z.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        Rat s = c * Rat(l);
        z.push_back(s.get_num());
    }
    ztrim(z);
    zmake_primitive(z);
    return z;
}

}  // namespace

PolyQ PolyQ::gcd(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() && b.is_zero()) return PolyQ();
    if (a.is_zero() || b.is_zero()) {
        ZPoly z = to_primitive_z(a.is_zero() ? b : a);
        if (z.back() < 0)
            for (auto& c : z) c = -c;
        std::vector<Rat> out(z.begin(), z.end());
        return PolyQ(std::move(out));
    }
    ZPoly u = to_primitive_z(a), v = to_primitive_z(b);
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        ZPoly r = zprem(u, v);
        zmake_primitive(r);
        u = std::move(v);
        v = std::move(r);
    }
    if (u.back() < 0)
        for (auto& c : u) c = -c;
    std::vector<Rat> out(u.begin(), u.end());
    return PolyQ(std::move(out));
}

std::string PolyQ::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        if (c_[k] == 0) continue;
        Rat c = c_[k];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (k == 0) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << "q";
            if (k != 1) os << "^" << k;
        }
    }
    return os.str();
}

namespace {

void skip_ws(std::string_view s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

// integer or fraction, no sign
Rat parse_unsigned_rat(std::string_view s, size_t& i) {
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw std::invalid_argument("PolyQ::parse: number expected");
    std::string num(s.substr(start, i - start));
    if (i < s.size() && s[i] == '/') {
        // only treat as fraction if digits follow; "/(den" is handled upstream
        size_t j = i + 1;
        size_t dstart = j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j > dstart) {
            num += s.substr(i, j - i);
            i = j;
        }
    }
    Rat r(num);
    r.canonicalize();
    return r;
}

}  // namespace

PolyQ PolyQ::parse(std::string_view s) {
    PolyQ result;
    size_t i = 0;
    skip_ws(s, i);
    if (i < s.size() && s.substr(i) == "0") return result;
    bool first = true;
    while (i < s.size()) {
        skip_ws(s, i);
        if (i >= s.size()) break;
        int sign = 1;
        if (s[i] == '+') { ++i; } else if (s[i] == '-') { sign = -1; ++i; }
        else if (!first) throw std::invalid_argument("PolyQ::parse: '+'/'-' expected");
        skip_ws(s, i);
        Rat c(1);
        bool have_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            c = parse_unsigned_rat(s, i);
            have_coeff = true;
        }
        int deg = 0;
        skip_ws(s, i);
        if (i < s.size() && s[i] == '*') { ++i; skip_ws(s, i); }
        if (i < s.size() && s[i] == 'q') {
            ++i;
            deg = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t start = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                deg = std::stoi(std::string(s.substr(start, i - start)));
            }
        } else if (!have_coeff) {
            throw std::invalid_argument("PolyQ::parse: term expected");
        }
        if (sign < 0) c = -c;
        result += monomial(c, deg);
        first = false;
        skip_ws(s, i);
    }
    return result;
}

}  // namespace qmac
