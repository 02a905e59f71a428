/**
 * @file polyq.hpp
 * @brief Univariate polynomials in q with arbitrary-precision rational
 *        coefficients.
 *
 * Dense representation, trailing zeros trimmed; the zero polynomial has an
 * empty coefficient vector and degree -1. All arithmetic is exact.
 */
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qmac {

using Rat = mpq_class;

class PolyQ {
public:
    PolyQ() = default;
    PolyQ(long n) { if (n != 0) c_.assign(1, Rat(n)); }
    explicit PolyQ(const Rat& c) { if (c != 0) c_.assign(1, c); }
    explicit PolyQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    static PolyQ zero() { return PolyQ(); }
    static PolyQ one() { return PolyQ(1); }
    // c * q^deg
    static PolyQ monomial(const Rat& c, int deg);
    // q^deg
    static PolyQ qpow(int deg) { return monomial(1, deg); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rat(0);
    }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    PolyQ operator-() const;
    PolyQ operator+(const PolyQ& o) const;
    PolyQ operator-(const PolyQ& o) const;
    PolyQ operator*(const PolyQ& o) const;
    PolyQ operator*(const Rat& c) const;
    PolyQ& operator+=(const PolyQ& o) { *this = *this + o; return *this; }
    PolyQ& operator-=(const PolyQ& o) { *this = *this - o; return *this; }
    PolyQ& operator*=(const PolyQ& o) { *this = *this * o; return *this; }
    bool operator==(const PolyQ& o) const { return c_ == o.c_; }
    bool operator!=(const PolyQ& o) const { return c_ != o.c_; }

    Rat eval(const Rat& x) const;

    // Exact division; throws std::domain_error on nonzero remainder.
    PolyQ divided_by(const PolyQ& d) const;
    static void divmod(const PolyQ& a, const PolyQ& b, PolyQ& quo, PolyQ& rem);

    // Monic-free gcd: returned with integer primitive coefficients and
    // positive leading coefficient; gcd(0,0) = 0.
    static PolyQ gcd(const PolyQ& a, const PolyQ& b);

    // Sparse text form, ascending degree: "1/2 - q + 3*q^4".
    std::string str() const;
    static PolyQ parse(std::string_view s);

private:
    std::vector<Rat> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

inline PolyQ operator*(const Rat& c, const PolyQ& p) { return p * c; }

}  // namespace qmac
