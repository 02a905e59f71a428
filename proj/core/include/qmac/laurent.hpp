/**
 * @file laurent.hpp
 * @brief Sparse multivariate Laurent polynomials over Q(q) in the variables
 *        z_1..z_s, w_1..w_t, D_1..D_s; truncated expansion of the q-Dyson
 *        product and its splitting decomposition.
 */
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qmac/ratfunc.hpp"

namespace qmac {

enum class VarKind : uint8_t { z = 0, w = 1, d = 2 };

// (kind, 1-based index) packed for ordering and hashing
constexpr uint32_t var_id(VarKind kind, int index) {
    return (static_cast<uint32_t>(kind) << 16) | static_cast<uint32_t>(index);
}
constexpr VarKind var_kind(uint32_t id) { return static_cast<VarKind>(id >> 16); }
constexpr int var_index(uint32_t id) { return static_cast<int>(id & 0xffff); }
std::string var_name(uint32_t id);

// Sorted (id, exponent) pairs, zero exponents dropped.
class Mono {
public:
    Mono() = default;
    static Mono var(VarKind kind, int index, int exp = 1);

    Mono operator*(const Mono& o) const;
    int exp(VarKind kind, int index) const;
    const std::vector<std::pair<uint32_t, int>>& factors() const { return e_; }
    bool is_constant() const { return e_.empty(); }

    // Sum of -exp over w-variables with negative exponent (total inverse
    // w-degree); per-variable variant below.
    int w_inverse_degree() const;
    int w_inverse_degree(int index) const;
    // exponent vector of the given kind up to index n (1-based -> slot 0..n-1)
    std::vector<int> exponents(VarKind kind, int n) const;

    auto operator<=>(const Mono& o) const = default;

    std::string str() const;  // "z1^2 w1^-3"; "1" for the constant monomial

private:
    std::vector<std::pair<uint32_t, int>> e_;
    void push(uint32_t id, int exp);
};

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(RatFuncQ c);
    static LaurentPoly term(Mono m, RatFuncQ c);
    static LaurentPoly one() { return LaurentPoly(RatFuncQ(1)); }

    const std::map<Mono, RatFuncQ>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }
    LaurentPoly operator*(const RatFuncQ& c) const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    // Product that drops every monomial whose inverse degree in w_j exceeds
    // wcaps[j-1]; sound because w exponents only ever decrease.
    LaurentPoly mul_truncated(const LaurentPoly& o, const std::vector<int>& wcaps) const;

    RatFuncQ coeff(const Mono& m) const;
    RatFuncQ ct() const { return coeff(Mono()); }

    std::string str() const;  // canonical text: terms sorted by monomial

private:
    std::map<Mono, RatFuncQ> terms_;
    void add_term(const Mono& m, const RatFuncQ& c);
    friend LaurentPoly mul_impl(const LaurentPoly&, const LaurentPoly&,
                                const std::vector<int>* wcaps);
};

// (q^e * x; q)_n as a Laurent polynomial, x a single monomial; e may be negative.
LaurentPoly ratio_poch(const Mono& x, int e, int n);

// prod_{i<j} (z_i/z_j;q)_{beta_i} (q z_j/z_i;q)_{beta_j}  — exact.
LaurentPoly dyson_z_product(const std::vector<int>& betas);
// Same product with one variable omitted (1-based index a).
LaurentPoly dyson_z_product_omit(const std::vector<int>& betas, int a);

// F_{beta,q}[s;t] truncated so each w_j inverse degree is <= wcaps[j-1].
LaurentPoly expand_F(const std::vector<int>& betas, int t, const std::vector<int>& wcaps = {});

// The G_{a,b} of the splitting formula for F[s;1]; the (1 - q^b z_a/w_1)^{-1}
// factor is expanded to w_1 inverse degree <= cap. Returned in (a,b) order.
std::vector<LaurentPoly> split_terms(const std::vector<int>& betas, int cap);

// The H_{a,b} = G_{a,b} * prod_i (z_i/w_1;q)_{beta_i}: exact Laurent
// polynomials whose sum must equal the plain z-product.
std::vector<LaurentPoly> split_terms_cleared(const std::vector<int>& betas);

// B_{a,b} factor of the splitting formula (a, b 1-/0-based as in the sum).
LaurentPoly splitting_B(const std::vector<int>& betas, int a, int b);

}  // namespace qmac
