/**
 * @file vertexop.hpp
 * @brief The vertex operator X(z) on V = Lambda_F (x) Q[(1/2)Z]: Heisenberg
 *        generators, coefficient extraction X_{-n}, iterated products and the
 *        closed combinatorial sum as an independent route.
 *
 * Lattice indices are stored doubled (the key for e^{m eta} is 2m) to keep
 * everything in integers.
 */
#pragma once

#include "qmac/symfunc.hpp"

namespace qmac {

class VState {
public:
    VState() = default;
    // 1 (x) e^{(m2/2) eta}
    static VState vacuum(int m2);

    const std::map<int, SymFunc>& sectors() const { return sectors_; }
    bool is_zero() const { return sectors_.empty(); }
    SymFunc sector(int m2) const;
    void add(int m2, const SymFunc& f);

    VState operator+(const VState& o) const;
    VState operator-(const VState& o) const;
    VState operator*(const RatFuncQ& c) const;
    bool operator==(const VState& o) const { return sectors_ == o.sectors_; }

private:
    std::map<int, SymFunc> sectors_;
};

// eps_n = (1-q^n)/(1-q^{n beta}); tau_n = (q^{-n beta}-q^{n beta})/(1-q^n)
RatFuncQ tau_n(int n, int beta);
// products over the parts, empty partition -> 1
RatFuncQ eps_part(const Partition& lam, int beta);
RatFuncQ tau_part(const Partition& lam, int beta);

// h_{-n}: multiply the symmetric function part by p_n
VState h_lower(int n, const VState& st);
// h_n = n eps_n d/dp_n
VState h_raise(int n, const VState& st, int beta);

// Sector-wise extended scalar product (sectors pair diagonally).
RatFuncQ vscalar(const VState& a, const VState& b, int beta);

// Coefficient of z^n in X(z).st: annihilation, middle shift m -> m+1 with
// z-degree (2m+1) beta, then creation balancing the total z-degree to n.
VState x_minus(int n, const VState& st, int beta);

// X_{-lam_1} ... X_{-lam_s} . 1 (x) e^{-s eta/2}
VState x_product(const Partition& lam, int beta);

// The closed combinatorial sum for X_{-lam_s} ... X_{-lam_1} . 1 (x) e^{n eta}
// (note the reversed operator order); n passed doubled as n2.
VState x_product_comb(const Partition& lam, int beta, int n2);

// < X_{-lam_1}...X_{-lam_s}.1 (x) e^{-s eta/2}, g_mu (x) e^{s eta/2} >
RatFuncQ xy_pairing(const Partition& lam, const Partition& mu, int beta);

}  // namespace qmac
