#include "qmac/qdyson.hpp"

#include <chrono>

#include "qmac/cache.hpp"
#include <numeric>
#include <stdexcept>

namespace qmac {

namespace {

void check_betas(const std::vector<int>& betas) {
    if (betas.empty()) throw std::invalid_argument("betas must be nonempty");
    for (int b : betas)
        if (b < 1) throw std::invalid_argument("betas must be positive");
}

}  // namespace

RatFuncQ ct_product(const std::vector<int>& betas) {
    check_betas(betas);
    int total = std::accumulate(betas.begin(), betas.end(), 0);
    PolyQ den = PolyQ::one();
    for (int b : betas) den *= qpoch(1, b);
    return RatFuncQ(qpoch(1, total), den);
}

RatFuncQ ct_telescoping(const std::vector<int>& betas) {
    check_betas(betas);
    int s = static_cast<int>(betas.size());
    if (s == 1) return RatFuncQ(1);
    RatFuncQ total(0);
    for (int a = 1; a <= s; ++a) {
        std::vector<int> rest;
        for (int j = 1; j <= s; ++j)
            if (j != a) rest.push_back(betas[j - 1]);
        RatFuncQ ca = ct_telescoping(rest);
        int before = 0, after = 0;
        for (int j = 1; j < a; ++j) before += betas[j - 1];
        for (int j = a + 1; j <= s; ++j) after += betas[j - 1];
        for (int b = 0; b < betas[a - 1]; ++b) {
            RatFuncQ w = RatFuncQ::qpow(b * before + (b + 1) * after);
            if (b > 0) w = w / qpoch_rf(-b, b);
            w = w / RatFuncQ(qpoch(1, betas[a - 1] - 1 - b));
            total += w * ca;
        }
    }
    return total;
}

RatFuncQ kadell_coeff(const std::vector<int>& betas, int a, int n) {
    check_betas(betas);
    int s = static_cast<int>(betas.size());
    if (a < 1 || a > s) throw std::invalid_argument("kadell_coeff: bad index a");
    if (n < 1) throw std::invalid_argument("kadell_coeff: n must be positive");
    int total = std::accumulate(betas.begin(), betas.end(), 0);
    int ba = betas[a - 1];
    int after = 0;
    for (int j = a + 1; j <= s; ++j) after += betas[j - 1];
    PolyQ num = PolyQ::qpow(after) * (PolyQ::one() - PolyQ::qpow(ba)) *
                qpoch(1, total - ba) * qpoch(total - ba + n + 1, ba - 1);
    PolyQ den = PolyQ::one();
    for (int b : betas) den *= qpoch(1, b);
    return RatFuncQ(std::move(num), std::move(den));
}

RatFuncQ cla(const Partition& lam, int beta) {
    if (beta < 1) throw std::invalid_argument("cla: beta must be positive");
    int l = lam.length();
    int sq = 0;
    PolyQ num = PolyQ::one(), den = PolyQ::one();
    for (const auto& [part, m] : lam.runs()) {
        (void)part;
        sq += m * m;
        num *= qpoch_step(beta, beta, m);
        for (int i = 0; i < m; ++i) den *= PolyQ::one() - PolyQ::qpow(beta);
    }
    // l^2 - sum m_i^2 = 2 sum_{i<j} m_i m_j is even
    num *= PolyQ::qpow(beta * (l * l - sq) / 2);
    for (int i = 1; i <= l; ++i) {
        int e = lam.part(i) + (l - i) * beta;
        num *= qpoch(beta, e);
        den *= qpoch(1, e);
    }
    return RatFuncQ(std::move(num), std::move(den));
}

CTReport vanishing_scan(const std::vector<int>& betas, int t, int cap) {
    check_betas(betas);
    if (t < 1) throw std::invalid_argument("vanishing_scan: t must be positive");
    if (cap < 0) throw std::invalid_argument("vanishing_scan: negative cap");
    auto start = std::chrono::steady_clock::now();
    CTReport rep;
    rep.betas = betas;
    rep.s = static_cast<int>(betas.size());
    rep.t = t;
    LaurentPoly f = expand_F_cached(betas, t, std::vector<int>(t, cap));
    for (const auto& [mono, coeff] : f.terms()) {
        if (mono.w_inverse_degree() > cap) continue;  // beyond the exact range
        ++rep.checked_monomials;
        std::vector<int> k = mono.exponents(VarKind::z, rep.s);
        std::vector<int> m;
        for (int j = 1; j <= t; ++j) m.push_back(mono.w_inverse_degree(j));
        bool bad = !gen_dominance_geq(sorted_desc(k), sorted_desc(m));
        if (!bad && t == 1 && m[0] >= 1) {
            bool all_below = true;
            for (int ki : k) all_below = all_below && ki < m[0];
            bad = all_below;
        }
        if (bad) rep.violations.push_back({mono, coeff, RatFuncQ(0)});
    }
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

}  // namespace qmac
