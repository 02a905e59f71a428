#include "qmac/vertexop.hpp"

namespace qmac {

VState VState::vacuum(int m2) {
    VState st;
    st.sectors_.emplace(m2, SymFunc::one());
    return st;
}

SymFunc VState::sector(int m2) const {
    auto it = sectors_.find(m2);
    return it == sectors_.end() ? SymFunc() : it->second;
}

void VState::add(int m2, const SymFunc& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = sectors_.try_emplace(m2, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) sectors_.erase(it);
    }
}

VState VState::operator+(const VState& o) const {
    VState r(*this);
    for (const auto& [m2, f] : o.sectors_) r.add(m2, f);
    return r;
}

VState VState::operator-(const VState& o) const {
    VState r(*this);
    for (const auto& [m2, f] : o.sectors_) r.add(m2, f * RatFuncQ(-1));
    return r;
}

VState VState::operator*(const RatFuncQ& c) const {
    VState r;
    if (c.is_zero()) return r;
    for (const auto& [m2, f] : sectors_) r.sectors_.emplace(m2, f * c);
    return r;
}

RatFuncQ tau_n(int n, int beta) {
    // q^{-n beta} (1 - q^{2 n beta}) / (1 - q^n)
    return RatFuncQ(PolyQ::one() - PolyQ::qpow(2 * n * beta),
                    PolyQ::qpow(n * beta) - PolyQ::qpow(n * beta + n));
}

RatFuncQ eps_part(const Partition& lam, int beta) {
    RatFuncQ r(1);
    for (int n : lam.parts()) r *= p_weight(n, beta);
    return r;
}

RatFuncQ tau_part(const Partition& lam, int beta) {
    RatFuncQ r(1);
    for (int n : lam.parts()) r *= tau_n(n, beta);
    return r;
}

VState h_lower(int n, const VState& st) {
    VState out;
    SymFunc pn = SymFunc::p(Partition{n});
    for (const auto& [m2, f] : st.sectors()) out.add(m2, pn * f);
    return out;
}

VState h_raise(int n, const VState& st, int beta) {
    VState out;
    SymFunc pn = SymFunc::p(Partition{n});
    for (const auto& [m2, f] : st.sectors())
        out.add(m2, adjoint_apply(pn, f, beta));
    return out;
}

RatFuncQ vscalar(const VState& a, const VState& b, int beta) {
    RatFuncQ s(0);
    for (const auto& [m2, f] : a.sectors()) s += scalar_product(f, b.sector(m2), beta);
    return s;
}

VState x_minus(int n, const VState& st, int beta) {
    VState out;
    for (const auto& [m2, f] : st.sectors()) {
        int mid = (m2 + 1) * beta;
        // annihilation stage, grouped by the annihilated weight
        std::map<int, SymFunc> lowered;  // |mu| -> sum of terms
        for (const auto& [lam, c] : f.terms()) {
            for (const Partition& mu : submultisets(lam)) {
                RatFuncQ w = c * RatFuncQ(Rat(multiplicity_binomial(lam, mu))) *
                             tau_part(mu, beta) * eps_part(mu, beta);
                if (mu.length() % 2) w = -w;
                auto [it, ins] = lowered.try_emplace(mu.weight(), SymFunc());
                it->second += SymFunc::term(lam.set_diff(mu), w);
            }
        }
        // middle term then creation: |nu| = n - mid + |mu|
        for (const auto& [d, g] : lowered) {
            int nu_weight = n - mid + d;
            if (nu_weight < 0 || g.is_zero()) continue;
            for (const Partition& nu : partitions_of(nu_weight)) {
                RatFuncQ w = (RatFuncQ(Rat(z_lambda(nu))) * eps_part(nu, beta)).inverse();
                out.add(m2 + 2, SymFunc::p(nu) * g * w);
            }
        }
    }
    return out;
}

VState x_product(const Partition& lam, int beta) {
    int s = lam.length();
    VState st = VState::vacuum(-s);
    // both stated product orders evaluate the subscripts first-to-last; the
    // raising identity pins this down (checked in the tests)
    for (int i = 1; i <= s; ++i) st = x_minus(lam.part(i), st, beta);
    return st;
}

VState x_product_comb(const Partition& lam, int beta, int n2) {
    int s = lam.length();
    // A[mu^i] = sum over admissible histories of prod_{j<=i} of the nu-weights
    std::map<Partition, RatFuncQ> acc{{Partition(), RatFuncQ(1)}};
    int wsum = 0;
    for (int i = 1; i <= s; ++i) {
        wsum += lam.part(i);
        int wi = wsum - i * (i + n2) * beta;
        std::map<Partition, RatFuncQ> next;
        if (wi < 0) return VState();
        for (const Partition& mu : partitions_of(wi)) {
            RatFuncQ total(0);
            for (const Partition& nu : submultisets(mu)) {
                Partition delta = mu.set_diff(nu);
                RatFuncQ nuw = tau_part(nu, beta) /
                               RatFuncQ(Rat(z_lambda(nu)));
                if (nu.length() % 2) nuw = -nuw;
                for (const auto& [muprev, c] : acc) {
                    if (!muprev.contains_multiset(delta)) continue;
                    total += c * nuw * RatFuncQ(Rat(multiplicity_binomial(muprev, delta)));
                }
            }
            if (!total.is_zero()) next.emplace(mu, total);
        }
        acc = std::move(next);
    }
    VState out;
    for (const auto& [mu, c] : acc) {
        RatFuncQ w = c / (tau_part(mu, beta) * eps_part(mu, beta));
        if (mu.length() % 2) w = -w;
        out.add(n2 + 2 * s, SymFunc::term(mu, w));
    }
    return out;
}

RatFuncQ xy_pairing(const Partition& lam, const Partition& mu, int beta) {
    int s = lam.length();
    return scalar_product(x_product(lam, beta).sector(s), g_of(mu, beta), beta);
}

}  // namespace qmac
