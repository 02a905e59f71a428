#include "qmac/macroutes.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "qfactored.hpp"

namespace qmac {

std::string route_name(Route r) {
    switch (r) {
        case Route::gram_schmidt: return "gram_schmidt";
        case Route::lowering: return "lowering";
        case Route::combinatorial: return "combinatorial";
        case Route::vertex: return "vertex";
        case Route::filtration: return "filtration";
        case Route::hyperdet_jack: return "hyperdet_jack";
    }
    return "";
}

RatFuncQ epsilon_q(int beta, int n) {
    RatFuncQ r = RatFuncQ::qpow(-beta * (beta + 1) * n * (n - 1) / 4);
    if ((beta * n * (n - 1) / 2) % 2) r = -r;
    return r;
}

RatFuncQ c_rho(int k, int s, int t, int beta) {
    (void)k;
    PolyQ num = PolyQ::qpow(s * t * beta) * qpoch_step(1, beta, s) *
                qpoch_step(1, beta, t) * qpoch(1, (s + t) * beta);
    PolyQ den = qpoch_step(1, beta, s + t);
    PolyQ qb = qpoch(1, beta);
    for (int i = 0; i < s + t; ++i) den *= qb;
    return RatFuncQ(num, den);
}

Partition almost_rectangle(int k, int s, int t) {
    std::vector<int> parts;
    for (int i = 0; i < t; ++i) parts.push_back(k + 1);
    for (int i = 0; i < s; ++i) parts.push_back(k);
    return Partition(parts);
}

namespace {

// (D_i/D_j;q)_beta (q D_j/D_i;q)_beta expanded in x = D_i/D_j; the
// coefficients are plain polynomials in q.
std::vector<std::pair<int, PolyQ>> pair_factor(int beta) {
    std::map<int, PolyQ> terms{{0, PolyQ::one()}};
    auto mul_linear = [&](int e, int qexp) {
        // times (1 - q^{qexp} x^e)
        std::map<int, PolyQ> next;
        for (const auto& [d, c] : terms) {
            auto [it, ins] = next.try_emplace(d, c);
            if (!ins) it->second += c;
            PolyQ shifted = c * -PolyQ::qpow(qexp);
            auto [it2, ins2] = next.try_emplace(d + e, shifted);
            if (!ins2) it2->second += shifted;
        }
        terms = std::move(next);
    };
    for (int b = 0; b < beta; ++b) mul_linear(1, b);
    for (int b = 0; b < beta; ++b) mul_linear(-1, 1 + b);
    std::vector<std::pair<int, PolyQ>> out;
    for (const auto& [d, c] : terms)
        if (!c.is_zero()) out.emplace_back(d, c);
    return out;
}

// Apply the full i<j product of pair factors to g_rho, pair by pair; after
// the last pair involving D_i, its subscript rho_i - e_i is fixed, so states
// merge on the sorted multiset of finished subscripts. A state whose running
// exponent e_i can no longer come back down to rho_i within the remaining
// pairs of row i is dropped early.
SymFunc lowering_incremental(const std::vector<int>& rho, int beta) {
    int n = static_cast<int>(rho.size());
    using Key = std::pair<std::vector<int>, std::vector<int>>;  // exps, done
    std::map<Key, PolyQ> states{{{std::vector<int>(n, 0), {}}, PolyQ::one()}};
    auto add = [](std::map<Key, PolyQ>& m, Key k, const PolyQ& c) {
        auto [it, ins] = m.try_emplace(std::move(k), c);
        if (!ins) {
            it->second += c;
            if (it->second.is_zero()) m.erase(it);
        }
    };
    std::vector<std::pair<int, PolyQ>> pf = pair_factor(beta);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            int slack = rho[i - 1] + beta * (n - j);
            std::map<Key, PolyQ> next;
            for (const auto& [key, c] : states)
                for (const auto& [e, w] : pf) {
                    if (key.first[i - 1] + e > slack) continue;
                    Key k = key;
                    k.first[i - 1] += e;
                    k.first[j - 1] -= e;
                    add(next, std::move(k), c * w);
                }
            states = std::move(next);
        }
        std::map<Key, PolyQ> done;
        for (const auto& [key, c] : states) {
            int sub = rho[i - 1] - key.first[i - 1];
            if (sub < 0) continue;
            Key k = key;
            k.first[i - 1] = 0;
            if (sub > 0) {
                auto pos = std::lower_bound(k.second.begin(), k.second.end(), sub,
                                            std::greater<int>());
                k.second.insert(pos, sub);
            }
            add(done, std::move(k), c);
        }
        states = std::move(done);
    }
    SymFunc out;
    for (const auto& [key, c] : states)
        out += g_of(Partition(key.second), beta) * RatFuncQ(c);
    return out;
}

// The iterated operator chain of the vertex route evaluated with factored
// coefficients; equals x_product(rho, beta).sector(l(rho)) but avoids the
// per-addition gcd of the generic rational-function arithmetic.
SymFunc vertex_chain(const Partition& rho, int beta) {
    using detail::QFactored;
    int n = rho.length();
    std::map<Partition, QFactored> f{{Partition(), QFactored(Rat(1))}};
    for (int i = 1; i <= n; ++i) {
        int mid = (-n + 2 * (i - 1) + 1) * beta;
        // annihilation stage, grouped by the annihilated weight
        std::map<int, std::map<Partition, QFactored>> lowered;
        for (const auto& [lam, c] : f)
            for (const Partition& mu : submultisets(lam)) {
                QFactored w = c;
                // (-1)^{l(mu)} binom tau_mu eps_mu, and
                // tau_mu eps_mu = prod_m q^{-m beta} (1 + q^{m beta})
                for (int m : mu.parts()) {
                    w.mul_qpow(-m * beta);
                    w.num = detail::mul_one_plus(w.num, m * beta);
                }
                Rat scl(multiplicity_binomial(lam, mu));
                if (mu.length() % 2) scl = -scl;
                w.scale(scl);
                auto& slot = lowered[mu.weight()];
                auto it = slot.find(lam.set_diff(mu));
                if (it == slot.end())
                    slot.emplace(lam.set_diff(mu), std::move(w));
                else
                    it->second.add(w);
            }
        // middle term then creation: |nu| = rho_i - mid + |mu|
        std::map<Partition, QFactored> next;
        for (const auto& [d, g] : lowered) {
            int nu_weight = rho.part(i) - mid + d;
            if (nu_weight < 0) continue;
            for (const Partition& nu : partitions_of(nu_weight))
                for (const auto& [rest, c] : g) {
                    QFactored w = c;
                    // 1/(z_nu eps_nu) with 1/eps_m = (1-q^{m beta})/(1-q^m)
                    for (int m : nu.parts()) {
                        w.mul_num_binom(m * beta);
                        w.mul_den_binom(m);
                    }
                    w.scale(Rat(mpz_class(1), z_lambda(nu)));
                    Partition key = rest.set_union(nu);
                    auto it = next.find(key);
                    if (it == next.end())
                        next.emplace(std::move(key), std::move(w));
                    else
                        it->second.add(w);
                }
        }
        for (auto it = next.begin(); it != next.end();) {
            it->second.compress();
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        }
        f = std::move(next);
    }
    SymFunc out;
    for (const auto& [mu, c] : f) out += SymFunc::term(mu, c.to_ratfunc());
    return out;
}

using JackF = std::map<Partition, Rat>;

const JackF& jack_one_row(int m, int beta) {
    static std::map<std::pair<int, int>, JackF> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto [it, ins] = cache.try_emplace({m, beta});
    if (ins) it->second = limit_sym(qn(m, beta));
    return it->second;
}

void jack_add(JackF& f, const Partition& lam, const Rat& c) {
    if (c == 0) return;
    auto [it, ins] = f.try_emplace(lam, c);
    if (!ins) {
        it->second += c;
        if (it->second == 0) f.erase(it);
    }
}

JackF jack_mul(const JackF& a, const JackF& b) {
    JackF r;
    for (const auto& [la, ca] : a)
        for (const auto& [lb, cb] : b) jack_add(r, la.set_union(lb), ca * cb);
    return r;
}

// x(x+1)...(x+n-1)
Rat rising(const Rat& x, int n) {
    Rat r = 1;
    for (int i = 0; i < n; ++i) r *= x + i;
    return r;
}

}  // namespace

RouteResult mac_rect_lowering(int k, int s, int t, int beta) {
    Partition rho = almost_rectangle(k, s, t);
    RatFuncQ c = c_rho(k, s, t, beta);
    RouteResult res;
    res.shape = rho;
    res.beta = beta;
    res.route = Route::lowering;
    res.value = lowering_incremental(std::vector<int>(rho.parts().begin(),
                                                      rho.parts().end()),
                                     beta) *
                c.inverse();
    res.scalars.emplace("C_rho", c);
    return res;
}

RouteResult mac_rect_comb(int k, int s, int beta) {
    using detail::QFactored;
    // the prefactor of the power-sum formula is 1/(eps_q(beta,s) C_{(k^s)})
    std::map<Partition, QFactored> acc{{Partition(), QFactored(Rat(1))}};
    for (int i = 1; i <= s; ++i) {
        int wi = i * k + i * (s - i) * beta;
        std::map<Partition, QFactored> bsum;  // delta -> sum binom * acc
        for (const auto& [muprev, c] : acc)
            for (const Partition& delta : submultisets(muprev)) {
                QFactored w = c;
                w.scale(Rat(multiplicity_binomial(muprev, delta)));
                auto it = bsum.find(delta);
                if (it == bsum.end())
                    bsum.emplace(delta, std::move(w));
                else
                    it->second.add(w);
            }
        std::map<Partition, QFactored> next;
        for (const Partition& mu : partitions_of(wi)) {
            QFactored total;
            for (const Partition& nu : submultisets(mu)) {
                auto it = bsum.find(mu.set_diff(nu));
                if (it == bsum.end()) continue;
                // (-1)^{l(nu)} tau_nu / z_nu, applied factor by factor
                QFactored w = it->second;
                for (int m : nu.parts()) {
                    w.mul_qpow(-m * beta);
                    w.mul_num_binom(2 * m * beta);
                    w.mul_den_binom(m);
                }
                Rat scl(mpz_class(1), z_lambda(nu));
                if (nu.length() % 2) scl = -scl;
                w.scale(scl);
                total.add(w);
            }
            total.compress();
            if (!total.is_zero()) next.emplace(mu, std::move(total));
        }
        acc = std::move(next);
    }
    RatFuncQ pre = (epsilon_q(beta, s) * c_rho(k, s, 0, beta)).inverse();
    RouteResult res;
    res.shape = Partition::rectangle(k, s);
    res.beta = beta;
    res.route = Route::combinatorial;
    for (auto& [mu, c] : acc) {
        // divide by tau_mu eps_mu = prod q^{-m beta} (1 + q^{m beta})
        for (int m : mu.parts()) {
            c.mul_qpow(m * beta);
            c.mul_num_binom(m * beta);
            c.mul_den_binom(2 * m * beta);
        }
        RatFuncQ w = c.to_ratfunc();
        if (mu.length() % 2) w = -w;
        res.value += SymFunc::term(mu, w * pre);
    }
    res.scalars.emplace("prefactor", pre);
    return res;
}

RouteResult mac_vertex(int k, int s, int t, int beta) {
    Partition rho = almost_rectangle(k, s, t);
    int n = s + t;
    RatFuncQ eps = epsilon_q(beta, n), c = c_rho(k, s, t, beta);
    RouteResult res;
    res.shape = rho;
    res.beta = beta;
    res.route = Route::vertex;
    res.value = vertex_chain(rho, beta) * (eps * c).inverse();
    res.scalars.emplace("eps_q", eps);
    res.scalars.emplace("C_rho", c);
    return res;
}

RouteResult mac_gram_schmidt(const Partition& lam, int beta) {
    RouteResult res;
    res.shape = lam;
    res.beta = beta;
    res.route = Route::gram_schmidt;
    res.value = macdonald_gs(lam, beta);
    return res;
}

RouteResult mac_filtration(const Partition& lam, int beta, bool use_gs_rectangles) {
    if (lam.is_zero()) throw std::invalid_argument("mac_filtration: zero partition");
    auto rect_fn = [&](const Rect& r) {
        return use_gs_rectangles
                   ? macdonald_gs(Partition::rectangle(r.k, r.s), beta)
                   : mac_rect_lowering(r.k, r.s, 0, beta).value;
    };
    std::vector<Rect> chain = rect_filtration(lam);
    SymFunc h = rect_fn(chain.back());
    for (size_t i = chain.size() - 1; i-- > 0;)
        h = adjoint_apply(h, rect_fn(chain[i]), beta);
    auto gexp = to_g_basis(h, beta);
    auto it = gexp.find(lam);
    if (it == gexp.end() || it->second.is_zero())
        throw std::domain_error("mac_filtration: vanishing leading coefficient");
    RatFuncQ c = it->second;
    RouteResult res;
    res.shape = lam;
    res.beta = beta;
    res.route = Route::filtration;
    res.value = h * c.inverse();
    res.scalars.emplace("c", c);
    return res;
}

RouteResult jack_hyperdet(int k, int s, int t, int beta) {
    int n = s + t;
    Partition rho = almost_rectangle(k, s, t);
    std::vector<std::pair<std::vector<int>, int>> perms;
    {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 1);
        do {
            int inv = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (p[i] > p[j]) ++inv;
            perms.emplace_back(p, inv % 2 ? -1 : 1);
        } while (std::next_permutation(p.begin(), p.end()));
    }
    size_t np = perms.size();
    std::vector<size_t> odo(2 * beta, 0);
    JackF total;
    while (true) {
        int sign = 1;
        for (size_t j = 0; j < odo.size(); ++j) sign *= perms[odo[j]].second;
        bool feasible = true;
        JackF prod{{Partition(), Rat(1)}};
        for (int r = 1; r <= n && feasible; ++r) {
            int sub = rho.part(r);
            for (int j = 0; j < beta; ++j)
                sub += perms[odo[beta + j]].first[r - 1] - perms[odo[j]].first[r - 1];
            if (sub < 0) feasible = false;
            else if (sub > 0) prod = jack_mul(prod, jack_one_row(sub, beta));
        }
        if (feasible)
            for (const auto& [mu, c] : prod) jack_add(total, mu, c * sign);
        size_t j = 0;
        while (j < odo.size() && ++odo[j] == np) odo[j++] = 0;
        if (j == odo.size()) break;
    }
    Rat lc = rising(Rat(1, beta), s) * rising(Rat(1, beta), t) /
             rising(Rat(1, beta), s + t);
    for (int i = 1; i <= n * beta; ++i) lc *= i;
    Rat bfact = 1;
    for (int i = 1; i <= beta; ++i) bfact *= i;
    for (int i = 0; i < n; ++i) lc /= bfact;
    JackF value;
    for (const auto& [mu, c] : total) value.emplace(mu, c / lc);
    RouteResult res;
    res.shape = rho;
    res.beta = beta;
    res.route = Route::hyperdet_jack;
    res.value = from_rational(value);
    res.scalars.emplace("hyperdet_constant", RatFuncQ(lc));
    return res;
}

}  // namespace qmac
