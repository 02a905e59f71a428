/**
 * @file ratfunc.hpp
 * @brief The coefficient field Q(q): reduced rational functions plus the
 *        q-Pochhammer helpers used everywhere downstream.
 *
 * Canonical form: numerator and denominator are coprime integer polynomials
 * with joint content 1 and positive denominator leading coefficient, so value
 * equality is representation equality.
 */
#pragma once

#include "qmac/polyq.hpp"

namespace qmac {

class RatFuncQ {
public:
    RatFuncQ() : den_(PolyQ::one()) {}
    RatFuncQ(long n) : num_(n), den_(PolyQ::one()) {}
    RatFuncQ(const Rat& c) : RatFuncQ(PolyQ(c), PolyQ::one()) {}
    RatFuncQ(PolyQ p) : RatFuncQ(std::move(p), PolyQ::one()) {}
    RatFuncQ(PolyQ num, PolyQ den);

    static RatFuncQ reduce(PolyQ num, PolyQ den) { return RatFuncQ(std::move(num), std::move(den)); }
    // q^e for any integer e
    static RatFuncQ qpow(int e);

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFuncQ operator-() const;
    RatFuncQ operator+(const RatFuncQ& o) const;
    RatFuncQ operator-(const RatFuncQ& o) const;
    RatFuncQ operator*(const RatFuncQ& o) const;
    RatFuncQ operator/(const RatFuncQ& o) const;
    RatFuncQ& operator+=(const RatFuncQ& o) { *this = *this + o; return *this; }
    RatFuncQ& operator-=(const RatFuncQ& o) { *this = *this - o; return *this; }
    RatFuncQ& operator*=(const RatFuncQ& o) { *this = *this * o; return *this; }
    RatFuncQ& operator/=(const RatFuncQ& o) { *this = *this / o; return *this; }
    bool operator==(const RatFuncQ& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFuncQ& o) const { return !(*this == o); }

    RatFuncQ inverse() const;

    // Value at q=1 by repeated removal of (q-1) factors.
    // Throws std::domain_error if the value has a pole there.
    Rat limit_at_one() const;

    // "num" when the denominator is 1, otherwise "(num)/(den)".
    std::string str() const;
    static RatFuncQ parse(std::string_view s);

private:
    PolyQ num_, den_;
    void canonicalize();
    static RatFuncQ from_coprime(PolyQ num, PolyQ den);
    RatFuncQ add_impl(const RatFuncQ& o, bool negate) const;
};

// (q^e; q)_n = prod_{k=0}^{n-1} (1 - q^{e+k}), e >= 0.
PolyQ qpoch(int e, int n);

// Same product for arbitrary e; negative powers of q cleared to a common
// denominator, e.g. the (q^{-b}; q)_b factors.
RatFuncQ qpoch_rf(int e, int n);

// prod_{k=0}^{n-1} (1 - q^{e + k*step}), e >= 0, step >= 1; covers (q; q^beta)_s.
PolyQ qpoch_step(int e, int step, int n);

// Coefficient of z^m in (z;q)_beta^{-1}: (q^beta; q)_m / (q; q)_m.
RatFuncQ inv_poch_coeff(int m, int beta);

}  // namespace qmac
