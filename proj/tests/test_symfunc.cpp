#include <doctest.h>

#include <random>

#include "qmac/symfunc.hpp"

using namespace qmac;

namespace {

RatFuncQ rf(const char* num, const char* den = "1") {
    return RatFuncQ(PolyQ::parse(num), PolyQ::parse(den));
}

Mono dvar(int i, int e = 1) { return Mono::var(VarKind::d, i, e); }

// (q^e; q^step)_n as a rational function, e >= 1
RatFuncQ poch(int e, int step, int n) { return RatFuncQ(qpoch_step(e, step, n)); }

// ---- independent Jack oracle over plain rationals ----

using JackF = std::map<Partition, Rat>;

JackF jack_scale(const JackF& f, const Rat& c) {
    JackF r;
    if (c == 0) return r;
    for (const auto& [lam, x] : f) r.emplace(lam, x * c);
    return r;
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

// one-row Jack Q_n: coefficient of z^n in exp(sum beta p_m z^m / m)
JackF jack_qn(int n, int beta) {
    std::vector<JackF> q{{{Partition(), Rat(1)}}};
    for (int k = 1; k <= n; ++k) {
        JackF acc;
        for (int m = 1; m <= k; ++m)
            for (const auto& [lam, x] : q[k - m]) {
                std::vector<int> parts = lam.parts();
                parts.push_back(m);
                jack_add(acc, Partition(sorted_desc(std::move(parts))), x * beta);
            }
        q.push_back(jack_scale(acc, Rat(1, k)));
    }
    return q[n];
}

JackF jack_g(const Partition& lam, int beta) {
    JackF f{{Partition(), Rat(1)}};
    for (int part : lam.parts()) f = jack_mul(f, jack_qn(part, beta));
    return f;
}

// <p_lam, p_lam> = z_lam / beta^{l(lam)}
Rat jack_scalar(const JackF& f, const JackF& g, int beta) {
    Rat s = 0;
    for (const auto& [lam, cf] : f) {
        auto it = g.find(lam);
        if (it == g.end()) continue;
        Rat w(z_lambda(lam));
        for (int i = 0; i < lam.length(); ++i) w /= beta;
        s += cf * it->second * w;
    }
    return s;
}

JackF jack_gs(const Partition& lam, int beta) {
    std::vector<Partition> higher;
    for (const auto& p : partitions_of(lam.weight()))
        if (dominance_cmp(p, lam) == DomCmp::greater) higher.push_back(p);
    JackF result = jack_g(lam, beta);
    size_t n = higher.size();
    if (n == 0) return result;
    std::vector<JackF> gmu;
    for (const auto& p : higher) gmu.push_back(jack_g(p, beta));
    // Gaussian elimination over Q
    std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n));
    std::vector<Rat> b(n);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) A[r][c] = jack_scalar(gmu[c], gmu[r], beta);
        b[r] = -jack_scalar(result, gmu[r], beta);
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (A[piv][col] == 0) ++piv;
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        Rat inv = 1 / A[col][col];
        for (size_t j = col; j < n; ++j) A[col][j] *= inv;
        b[col] *= inv;
        for (size_t row = 0; row < n; ++row) {
            if (row == col || A[row][col] == 0) continue;
            Rat f = A[row][col];
            for (size_t j = col; j < n; ++j) A[row][j] -= f * A[col][j];
            b[row] -= f * b[col];
        }
    }
    for (size_t c = 0; c < n; ++c)
        for (const auto& [mu, x] : gmu[c]) jack_add(result, mu, x * b[c]);
    return result;
}

}  // namespace

TEST_CASE("one-row functions, low degrees") {
    for (int beta = 1; beta <= 3; ++beta) {
        CHECK(qn(0, beta) == SymFunc::one());
        CHECK(qn(-1, beta).is_zero());
        RatFuncQ e1 = RatFuncQ(PolyQ::one() - PolyQ::qpow(beta)) / rf("1 - q");
        CHECK(qn(1, beta) == SymFunc::term(Partition{1}, e1));
        SymFunc q2 = SymFunc::term(Partition{1, 1}, e1 * e1 * RatFuncQ(Rat(1, 2))) +
                     SymFunc::term(Partition{2},
                                   RatFuncQ(PolyQ::one() - PolyQ::qpow(2 * beta)) /
                                       rf("1 - q^2") * RatFuncQ(Rat(1, 2)));
        CHECK(qn(2, beta) == q2);
    }
}

TEST_CASE("scalar product examples") {
    SymFunc p1 = SymFunc::p(Partition{1});
    SymFunc p2 = SymFunc::p(Partition{2});
    CHECK(scalar_product(p1, p1, 2) == rf("1", "1 + q"));
    CHECK(scalar_product(p1, p2, 2) == RatFuncQ(0));
    for (int beta = 1; beta <= 3; ++beta)
        CHECK(scalar_product(p2, p2, beta) ==
              RatFuncQ(PolyQ::parse("2 - 2*q^2"),
                       PolyQ::one() - PolyQ::qpow(2 * beta)));
}

TEST_CASE("adjoint examples") {
    SymFunc p1 = SymFunc::p(Partition{1});
    SymFunc p2 = SymFunc::p(Partition{2});
    SymFunc p11 = SymFunc::p(Partition{1, 1});
    for (int beta = 1; beta <= 3; ++beta) {
        RatFuncQ w = RatFuncQ(PolyQ::parse("1 - q"),
                              PolyQ::one() - PolyQ::qpow(beta));
        CHECK(adjoint_apply(p1, p1, beta) == SymFunc(w));
        CHECK(adjoint_apply(p2, p11, beta).is_zero());
        CHECK(adjoint_apply(p1, p11, beta) == p1 * (w * RatFuncQ(2)));
    }
}

TEST_CASE("lowering operator action") {
    for (int beta = 1; beta <= 2; ++beta) {
        LaurentPoly ratio = LaurentPoly::term(dvar(1) * dvar(2, -1), RatFuncQ(1));
        CHECK(lowering_apply(ratio, {2, 2}, beta) == qn(1, beta) * qn(3, beta));
        LaurentPoly l2 = LaurentPoly::one() - ratio;
        CHECK(lowering_apply(l2, {1, 1}, beta) ==
              g_of(Partition{1, 1}, beta) - g_of(Partition{2}, beta));
        LaurentPoly d1 = LaurentPoly::term(dvar(1), RatFuncQ(1));
        CHECK(lowering_apply(d1, {0, 1}, beta).is_zero());
    }
    CHECK_THROWS(lowering_apply(
        LaurentPoly::term(Mono::var(VarKind::z, 1), RatFuncQ(1)), {1}, 1));
}

TEST_CASE("Gram-Schmidt small cases") {
    CHECK(macdonald_gs(Partition{1}, 2) == qn(1, 2));
    CHECK(macdonald_gs(Partition{1, 1}, 1) ==
          g_of(Partition{1, 1}, 1) - g_of(Partition{2}, 1));
    SymFunc q21 = macdonald_gs(Partition{2, 1}, 2);
    CHECK(scalar_product(q21, g_of(Partition{3}, 2), 2) == RatFuncQ(0));
    auto gexp = to_g_basis(q21, 2);
    CHECK(gexp.at(Partition{2, 1}).is_one());
    CHECK(gexp.size() == 2);
}

TEST_CASE("orthogonality and triangularity") {
    for (int beta = 1; beta <= 2; ++beta)
        for (int n = 1; n <= 5; ++n) {
            auto ps = partitions_of(n);
            std::vector<SymFunc> qs;
            for (const auto& lam : ps) qs.push_back(macdonald_gs(lam, beta));
            for (size_t i = 0; i < ps.size(); ++i) {
                for (size_t j = i + 1; j < ps.size(); ++j)
                    CHECK(scalar_product(qs[i], qs[j], beta) == RatFuncQ(0));
                auto gexp = to_g_basis(qs[i], beta);
                CHECK(gexp.at(ps[i]).is_one());
                for (const auto& [mu, c] : gexp) {
                    auto cmp = dominance_cmp(mu, ps[i]);
                    CHECK((cmp == DomCmp::greater || cmp == DomCmp::equal));
                }
            }
        }
}

TEST_CASE("norm formula") {
    for (int beta = 1; beta <= 3; ++beta)
        CHECK(norm_closed(Partition{1}, beta) ==
              RatFuncQ(PolyQ::one() - PolyQ::qpow(beta), PolyQ::parse("1 - q")));
    for (int beta = 1; beta <= 2; ++beta)
        for (int n = 1; n <= 5; ++n)
            for (const auto& lam : partitions_of(n)) {
                SymFunc q = macdonald_gs(lam, beta);
                CHECK(scalar_product(q, q, beta) == norm_closed(lam, beta));
            }
}

TEST_CASE("norm of ((k+1)^t, k^s) in closed product form") {
    struct Case { int k, s, t; };
    std::vector<Case> cases{{1, 1, 1}, {1, 2, 1}, {2, 1, 1}, {1, 3, 1},
                            {1, 1, 2}, {1, 2, 2}, {2, 2, 1}};
    for (int beta = 1; beta <= 2; ++beta)
        for (const auto& [k, s, t] : cases) {
            std::vector<int> parts;
            for (int i = 0; i < t; ++i) parts.push_back(k + 1);
            for (int i = 0; i < s; ++i) parts.push_back(k);
            Partition rho(parts);
            RatFuncQ expect =
                poch(s * beta, 1, k) * poch(beta, beta, s - 1) /
                (poch(1, 1, k - 1) * poch(k, beta, s)) *
                poch(1 + (s + t) * beta, 1, k) * poch(1 + (s + 1) * beta, beta, t - 1) /
                (poch(2 + s * beta, 1, k - 1) * poch(k + 1 + s * beta, beta, t)) *
                poch(beta, beta, t) / poch(1, beta, t);
            CHECK(norm_closed(rho, beta) == expect);
        }
}

TEST_CASE("Jacobi-Trudi Schur") {
    CHECK(schur_jt(Partition{3}) == qn(3, 1));
    CHECK(schur_jt(Partition{1, 1}) == qn(1, 1) * qn(1, 1) - qn(2, 1));
    CHECK(schur_jt(Partition{2, 1}) == qn(2, 1) * qn(1, 1) - qn(3, 1));
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : partitions_of(n))
            CHECK(macdonald_gs(lam, 1) == schur_jt(lam));
}

TEST_CASE("q -> 1 limits and the Jack oracle") {
    for (int beta = 1; beta <= 3; ++beta) {
        auto l1 = limit_sym(qn(1, beta));
        CHECK(l1.at(Partition{1}) == beta);
        auto l2 = limit_sym(qn(2, beta));
        CHECK(l2.at(Partition{1, 1}) == Rat(beta * beta) / 2);
        CHECK(l2.at(Partition{2}) == Rat(beta) / 2);
        CHECK(limit_sym(macdonald_gs(Partition{1, 1}, beta)) ==
              jack_gs(Partition{1, 1}, beta));
    }
    for (int beta = 1; beta <= 2; ++beta)
        for (int n = 1; n <= 4; ++n)
            for (const auto& lam : partitions_of(n))
                CHECK(limit_sym(macdonald_gs(lam, beta)) == jack_gs(lam, beta));
}

TEST_CASE("adjointness, randomized") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> deg(1, 4), coef(-3, 3);
    auto random_f = [&] {
        SymFunc f;
        for (int t = 0; t < 3; ++t) {
            auto ps = partitions_of(deg(rng));
            f += SymFunc::term(ps[rng() % ps.size()], RatFuncQ(coef(rng)));
        }
        return f;
    };
    for (int beta = 1; beta <= 2; ++beta)
        for (int trial = 0; trial < 10; ++trial) {
            SymFunc f = random_f(), u = random_f(), v = random_f();
            CHECK(scalar_product(adjoint_apply(f, u, beta), v, beta) ==
                  scalar_product(u, f * v, beta));
        }
}

TEST_CASE("products with rectangles pair only with the complement") {
    for (int beta = 1; beta <= 2; ++beta)
        for (int k = 1; k * 1 <= 6; ++k)
            for (int s = 1; k * s <= 6; ++s) {
                Partition R = Partition::rectangle(k, s);
                SymFunc qr = macdonald_gs(R, beta);
                int n = k * s;
                for (int d = 0; d <= n; ++d)
                    for (const auto& mu : partitions_of(d))
                        for (const auto& nu : partitions_of(n - d)) {
                            SymFunc prod =
                                macdonald_gs(mu, beta) * macdonald_gs(nu, beta);
                            RatFuncQ sp = scalar_product(prod, qr, beta);
                            bool fits = mu.part(1) <= k && mu.length() <= s;
                            bool expect = fits && nu == complement(k, s, mu);
                            CHECK(sp.is_zero() == !expect);
                        }
            }
}

TEST_CASE("g-basis round trip and rendering") {
    for (int beta = 1; beta <= 2; ++beta)
        for (int n = 1; n <= 4; ++n)
            for (const auto& lam : partitions_of(n)) {
                SymFunc f = macdonald_gs(lam, beta);
                SymFunc back;
                for (const auto& [mu, c] : to_g_basis(f, beta))
                    back += g_of(mu, beta) * c;
                CHECK(back == f);
            }
    auto gexp = to_g_basis(macdonald_gs(Partition{1, 1}, 1), 1);
    CHECK(g_basis_str(gexp) == "g[1,1] - g[2]");
}
