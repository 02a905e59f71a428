#include <doctest.h>

#include "qmac/macroutes.hpp"

using namespace qmac;

namespace {

LaurentPoly dyson_d_product(int beta, int s) {
    LaurentPoly p = LaurentPoly::one();
    for (int i = 1; i <= s; ++i)
        for (int j = i + 1; j <= s; ++j) {
            Mono dij = Mono::var(VarKind::d, i) * Mono::var(VarKind::d, j, -1);
            Mono dji = Mono::var(VarKind::d, j) * Mono::var(VarKind::d, i, -1);
            p *= ratio_poch(dij, 0, beta);
            p *= ratio_poch(dji, 1, beta);
        }
    return p;
}

}  // namespace

TEST_CASE("normalization constants") {
    for (int beta = 1; beta <= 3; ++beta) {
        CHECK(c_rho(4, 1, 0, beta) == RatFuncQ(1));
        for (int s = 1; s <= 4; ++s) {
            PolyQ den = PolyQ::one();
            for (int i = 0; i < s; ++i) den *= qpoch(1, beta);
            CHECK(c_rho(2, s, 0, beta) == RatFuncQ(qpoch(1, s * beta), den));
        }
    }
    CHECK(c_rho(1, 2, 0, 1) == RatFuncQ(PolyQ::parse("1 + q")));
    CHECK(epsilon_q(1, 2) == -RatFuncQ::qpow(-1));
    CHECK(epsilon_q(2, 2) == RatFuncQ::qpow(-3));
}

TEST_CASE("lowering route basics") {
    for (int beta = 1; beta <= 2; ++beta)
        for (int k = 1; k <= 3; ++k) {
            RouteResult r = mac_rect_lowering(k, 1, 0, beta);
            CHECK(r.value == qn(k, beta));
            CHECK(r.scalars.at("C_rho") == RatFuncQ(1));
        }
    RouteResult r = mac_rect_lowering(1, 2, 0, 1);
    CHECK(r.value == g_of(Partition{1, 1}, 1) - g_of(Partition{2}, 1));
}

TEST_CASE("incremental evaluation matches the generic operator") {
    struct Case { int k, s, t; };
    std::vector<Case> cases{{2, 2, 0}, {1, 3, 0}, {1, 1, 1}, {2, 1, 1}, {1, 2, 1}};
    for (int beta = 1; beta <= 2; ++beta)
        for (const auto& [k, s, t] : cases) {
            Partition rho = almost_rectangle(k, s, t);
            int n = s + t;
            SymFunc generic = lowering_apply(
                dyson_d_product(beta, n),
                std::vector<int>(rho.parts().begin(), rho.parts().end()), beta);
            RouteResult r = mac_rect_lowering(k, s, t, beta);
            CHECK(r.value * r.scalars.at("C_rho") == generic);
        }
}

TEST_CASE("route agreement on small rectangles") {
    for (int beta = 1; beta <= 2; ++beta)
        for (int k = 1; k <= 4; ++k)
            for (int s = 1; k * s <= 4; ++s) {
                SymFunc gs = macdonald_gs(Partition::rectangle(k, s), beta);
                CHECK(mac_rect_lowering(k, s, 0, beta).value == gs);
                CHECK(mac_rect_comb(k, s, beta).value == gs);
                CHECK(mac_vertex(k, s, 0, beta).value == gs);
            }
}

TEST_CASE("almost-rectangular lowering equals Gram-Schmidt") {
    struct Case { int k, s, t; };
    std::vector<Case> cases{{1, 1, 1}, {1, 2, 1}, {2, 1, 1}};
    for (int beta = 1; beta <= 2; ++beta)
        for (const auto& [k, s, t] : cases) {
            Partition rho = almost_rectangle(k, s, t);
            CHECK(mac_rect_lowering(k, s, t, beta).value == macdonald_gs(rho, beta));
            CHECK(mac_vertex(k, s, t, beta).value == macdonald_gs(rho, beta));
        }
}

TEST_CASE("filtration route") {
    RouteResult rect = mac_filtration(Partition{2, 2}, 2);
    CHECK(rect.value == macdonald_gs(Partition{2, 2}, 2));
    CHECK(rect.scalars.at("c") == RatFuncQ(1));

    CHECK(mac_filtration(Partition{2, 1}, 1).value == schur_jt(Partition{2, 1}));
    struct Case { Partition lam; int beta; };
    std::vector<Case> cases{{Partition{2, 1}, 2}, {Partition{3, 1}, 1},
                            {Partition{2, 2, 1}, 2}, {Partition{3, 2}, 2},
                            {Partition{3, 3, 1}, 2}};
    for (const auto& [lam, beta] : cases) {
        RouteResult r = mac_filtration(lam, beta);
        CHECK(r.value == macdonald_gs(lam, beta));
        CHECK(!r.scalars.at("c").is_zero());
        CHECK(mac_filtration(lam, beta, true).value == r.value);
    }
}

TEST_CASE("Jack hyperdeterminant") {
    // beta=1, t=0, s=2: Q_{(k,k)}(1) = Q_k^2 - Q_{k+1} Q_{k-1}
    for (int k = 1; k <= 3; ++k) {
        SymFunc qk = from_rational(limit_sym(qn(k, 1)));
        SymFunc qk1 = from_rational(limit_sym(qn(k + 1, 1)));
        SymFunc qkm = from_rational(limit_sym(qn(k - 1, 1)));
        CHECK(jack_hyperdet(k, 2, 0, 1).value == qk * qk - qk1 * qkm);
    }
    struct Case { int k, s, t, beta; };
    std::vector<Case> cases{{1, 2, 0, 1}, {2, 2, 0, 1}, {2, 1, 1, 1},
                            {1, 2, 1, 1}, {1, 1, 1, 2}, {1, 2, 0, 2},
                            {3, 1, 0, 3}};
    for (const auto& [k, s, t, beta] : cases) {
        RouteResult jd = jack_hyperdet(k, s, t, beta);
        if (beta == 1)
            CHECK(jd.value == from_rational(limit_sym(schur_jt(jd.shape))));
        CHECK(jd.value ==
              from_rational(limit_sym(mac_rect_lowering(k, s, t, beta).value)));
    }
}
