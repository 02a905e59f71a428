/**
 * @file qdyson.hpp
 * @brief Constant-term computations for the q-Dyson product: the closed
 *        product formula, its telescoping evaluation through the splitting
 *        decomposition, the z_a^n/w_1^n coefficients, the diagonal
 *        coefficient c_lambda, and the dominance vanishing scan.
 */
#pragma once

#include <cstdint>

#include "qmac/laurent.hpp"
#include "qmac/partition.hpp"

namespace qmac {

struct CTViolation {
    Mono monomial;
    RatFuncQ got;
    RatFuncQ expected;
};

struct CTReport {
    std::vector<int> betas;
    int s = 0;
    int t = 0;
    std::int64_t checked_monomials = 0;
    std::vector<CTViolation> violations;
    std::int64_t elapsed_ms = 0;
    bool ok() const { return violations.empty(); }
};

// (q;q)_{beta_1+...+beta_s} / prod_i (q;q)_{beta_i}
RatFuncQ ct_product(const std::vector<int>& betas);

// The same constant term evaluated through the splitting decomposition:
// sum over (a,b) of the split weight times the constant term with z_a
// removed, recursively. Agrees with ct_product; kept as an independent path.
RatFuncQ ct_telescoping(const std::vector<int>& betas);

// Coefficient of z_a^n / w_1^n in F[s;1] (1-based a):
// q^{sum_{j>a} beta_j} (1-q^{beta_a}) (q;q)_{|beta|-beta_a}
//   / prod_i (q;q)_{beta_i} * (q^{|beta|-beta_a+n+1};q)_{beta_a-1}
RatFuncQ kadell_coeff(const std::vector<int>& betas, int a, int n);

// Coefficient of z^lam / w^lam in F[s;s] with all beta_i = beta and
// s = l(lam).
RatFuncQ cla(const Partition& lam, int beta);

// Enumerate every monomial z^k w^-m with |m| <= cap in the truncated
// expansion of F[s;t]; report terms violating k^+ >= m^+ (and, for t = 1,
// terms with all k_i < m_1, which must vanish).
CTReport vanishing_scan(const std::vector<int>& betas, int t, int cap);

}  // namespace qmac
