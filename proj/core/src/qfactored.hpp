/**
 * @file qfactored.hpp
 * @brief Internal coefficient representation num * q^shift / prod (1-q^n)^e_n.
 *
 * The heavy route computations only ever divide by binomials 1 - q^n, so
 * keeping the denominator as a factor-exponent map makes addition a cheap
 * alignment (multiply by the missing binomials) instead of a polynomial gcd.
 * Not installed; used by the route evaluators only.
 */
#pragma once

#include <map>

#include "qmac/ratfunc.hpp"

namespace qmac::detail {

// p * (1 - q^m)
inline PolyQ mul_one_minus(const PolyQ& p, int m) {
    if (p.is_zero()) return p;
    int d = p.degree();
    std::vector<Rat> c(static_cast<size_t>(d + m + 1));
    for (int i = 0; i <= d; ++i) {
        c[i] += p.coeff(i);
        c[i + m] -= p.coeff(i);
    }
    return PolyQ(std::move(c));
}

// p * (1 + q^m)
inline PolyQ mul_one_plus(const PolyQ& p, int m) {
    if (p.is_zero()) return p;
    int d = p.degree();
    std::vector<Rat> c(static_cast<size_t>(d + m + 1));
    for (int i = 0; i <= d; ++i) {
        c[i] += p.coeff(i);
        c[i + m] += p.coeff(i);
    }
    return PolyQ(std::move(c));
}

// If (1 - q^m) divides p exactly, replace p by the quotient and return true.
inline bool try_divide_one_minus(PolyQ& p, int m) {
    if (p.is_zero()) return true;
    int d = p.degree();
    if (d < m) return false;
    // p = (1 - q^m) t  =>  t[i] = p[i] + t[i-m], with t[i] = 0 for i > d - m
    std::vector<Rat> t(static_cast<size_t>(d + 1));
    for (int i = 0; i <= d; ++i) {
        t[i] = p.coeff(i);
        if (i >= m) t[i] += t[i - m];
        if (i > d - m && t[i] != 0) return false;
    }
    t.resize(static_cast<size_t>(d - m + 1));
    p = PolyQ(std::move(t));
    return true;
}

struct QFactored {
    PolyQ num;
    int shift = 0;           // power of q multiplying num; may be negative
    std::map<int, int> den;  // n -> exponent of (1 - q^n), exponents > 0

    QFactored() = default;
    explicit QFactored(PolyQ n) : num(std::move(n)) {}
    explicit QFactored(const Rat& c) : num(PolyQ(c)) {}

    bool is_zero() const { return num.is_zero(); }

    void scale(const Rat& c) { num = num * c; }
    void mul_qpow(int e) { shift += e; }
    void mul_num_binom(int m) { num = mul_one_minus(num, m); }
    void mul_den_binom(int n) {
        if (!try_divide_one_minus(num, n)) ++den[n];
    }

    void add(const QFactored& o) {
        if (o.is_zero()) return;
        if (is_zero()) {
            *this = o;
            return;
        }
        PolyQ a = num, b = o.num;
        for (const auto& [n, e] : o.den) {
            int have = den.count(n) ? den.at(n) : 0;
            for (int k = have; k < e; ++k) a = mul_one_minus(a, n);
        }
        for (const auto& [n, e] : den) {
            auto it = o.den.find(n);
            int have = it == o.den.end() ? 0 : it->second;
            for (int k = have; k < e; ++k) b = mul_one_minus(b, n);
        }
        for (const auto& [n, e] : o.den) {
            auto [it, ins] = den.try_emplace(n, e);
            if (!ins) it->second = std::max(it->second, e);
        }
        int s = std::min(shift, o.shift);
        if (shift > s) a = a * PolyQ::qpow(shift - s);
        if (o.shift > s) b = b * PolyQ::qpow(o.shift - s);
        shift = s;
        num = a + b;
        if (num.is_zero()) {
            den.clear();
            shift = 0;
        }
    }

    // Divide out every binomial that cancels exactly; keeps sizes near minimal.
    void compress() {
        if (is_zero()) {
            den.clear();
            shift = 0;
            return;
        }
        for (auto it = den.begin(); it != den.end();) {
            while (it->second > 0 && try_divide_one_minus(num, it->first))
                --it->second;
            it = it->second == 0 ? den.erase(it) : std::next(it);
        }
        // pull a plain power of q out of the numerator into the shift
        int v = 0;
        while (v <= num.degree() && num.coeff(v) == 0) ++v;
        if (v > 0) {
            std::vector<Rat> c(num.coeffs().begin() + v, num.coeffs().end());
            num = PolyQ(std::move(c));
            shift += v;
        }
    }

    RatFuncQ to_ratfunc() const {
        QFactored t = *this;
        t.compress();
        PolyQ n = t.num, d = PolyQ::one();
        for (const auto& [m, e] : t.den)
            for (int k = 0; k < e; ++k) d = mul_one_minus(d, m);
        if (t.shift >= 0)
            n = n * PolyQ::qpow(t.shift);
        else
            d = d * PolyQ::qpow(-t.shift);
        return RatFuncQ(std::move(n), std::move(d));
    }
};

}  // namespace qmac::detail
