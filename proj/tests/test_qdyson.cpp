#include <doctest.h>

#include "qmac/qdyson.hpp"

using namespace qmac;

namespace {

// all beta vectors of length s with entries in [1, bmax]
std::vector<std::vector<int>> beta_vectors(int s, int bmax) {
    std::vector<std::vector<int>> out{{}};
    for (int i = 0; i < s; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& v : out)
            for (int b = 1; b <= bmax; ++b) {
                auto w = v;
                w.push_back(b);
                next.push_back(std::move(w));
            }
        out = std::move(next);
    }
    return out;
}

Mono z_pow_w_inv(int a, int n) {
    return Mono::var(VarKind::z, a, n) * Mono::var(VarKind::w, 1, -n);
}

}  // namespace

TEST_CASE("ct product formula examples") {
    for (int b = 1; b <= 4; ++b) CHECK(ct_product({b}) == RatFuncQ(1));
    CHECK(ct_product({1, 1}) == RatFuncQ(PolyQ::parse("1 + q")));
    CHECK(ct_product({1, 1, 1}) ==
          RatFuncQ(PolyQ::parse("1 + q") * PolyQ::parse("1 + q + q^2")));
}

TEST_CASE("ct product equals brute force") {
    for (int s = 2; s <= 3; ++s)
        for (const auto& betas : beta_vectors(s, 2))
            CHECK(ct_product(betas) == expand_F(betas, 0).ct());
    CHECK(ct_product({3, 2}) == expand_F({3, 2}, 0).ct());
    CHECK(ct_product({2, 3}) == expand_F({2, 3}, 0).ct());
}

TEST_CASE("F[s;0] and F[s;1] share the constant term") {
    for (int s = 2; s <= 3; ++s)
        for (const auto& betas : beta_vectors(s, 2))
            CHECK(expand_F(betas, 1, {1}).ct() == expand_F(betas, 0).ct());
}

TEST_CASE("telescoping path agrees with the product formula") {
    for (int s = 1; s <= 4; ++s)
        for (const auto& betas : beta_vectors(s, 2))
            CHECK(ct_telescoping(betas) == ct_product(betas));
    for (const auto& betas : beta_vectors(3, 3))
        CHECK(ct_telescoping(betas) == ct_product(betas));
}

TEST_CASE("kadell coefficient examples") {
    for (int n = 1; n <= 3; ++n) CHECK(kadell_coeff({1}, 1, n) == RatFuncQ(1));
    CHECK(kadell_coeff({2}, 1, 1) == RatFuncQ(PolyQ::parse("1 + q")));
    // s = 1: coefficient of (z/w)^n in (z/w;q)_beta^{-1}
    for (int beta = 1; beta <= 3; ++beta)
        for (int n = 1; n <= 3; ++n)
            CHECK(kadell_coeff({beta}, 1, n) == inv_poch_coeff(n, beta));
}

TEST_CASE("kadell coefficient equals brute force") {
    for (int s = 1; s <= 3; ++s)
        for (const auto& betas : beta_vectors(s, 2)) {
            LaurentPoly f = expand_F(betas, 1, {3});
            for (int a = 1; a <= s; ++a)
                for (int n = 1; n <= 3; ++n)
                    CHECK(kadell_coeff(betas, a, n) == f.coeff(z_pow_w_inv(a, n)));
        }
}

TEST_CASE("kadell vanishing below the diagonal") {
    for (const auto& betas : beta_vectors(3, 2)) {
        LaurentPoly f = expand_F(betas, 1, {2});
        for (const auto& [mono, c] : f.terms()) {
            int n = mono.w_inverse_degree(1);
            if (n < 1 || n > 2) continue;
            std::vector<int> k = mono.exponents(VarKind::z, 3);
            bool all_below = true;
            for (int ki : k) all_below = all_below && ki < n;
            CHECK(!all_below);
            (void)c;
        }
    }
}

TEST_CASE("diagonal coefficient examples") {
    for (int beta = 1; beta <= 4; ++beta)
        CHECK(cla(Partition{1}, beta) ==
              RatFuncQ(PolyQ::one() - PolyQ::qpow(beta),
                       PolyQ::one() - PolyQ::qpow(1)));
}

TEST_CASE("diagonal coefficient equals brute force") {
    std::vector<Partition> shapes{Partition{1},    Partition{1, 1}, Partition{2},
                                  Partition{2, 1}, Partition{1, 1, 1},
                                  Partition{2, 2}, Partition{3, 1}};
    for (int beta = 1; beta <= 2; ++beta)
        for (const Partition& lam : shapes) {
            int s = lam.length();
            std::vector<int> betas(s, beta);
            LaurentPoly f = expand_F(betas, s, std::vector<int>(s, lam.part(1)));
            Mono m;
            for (int i = 1; i <= s; ++i)
                m = m * Mono::var(VarKind::z, i, lam.part(i)) *
                    Mono::var(VarKind::w, i, -lam.part(i));
            CHECK(cla(lam, beta) == f.coeff(m));
        }
}

TEST_CASE("vanishing scan finds no violations") {
    struct Case {
        std::vector<int> betas;
        int t, cap;
    };
    std::vector<Case> cases{{{1, 1}, 1, 2}, {{2, 1}, 1, 2}, {{1, 1}, 2, 3}};
    for (const auto& [betas, t, cap] : cases) {
        CTReport rep = vanishing_scan(betas, t, cap);
        CHECK(rep.ok());
        CHECK(rep.violations.empty());
        CHECK(rep.checked_monomials > 0);
        CHECK(rep.s == static_cast<int>(betas.size()));
        CHECK(rep.t == t);
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(ct_product({}), std::invalid_argument);
    CHECK_THROWS_AS(ct_product({0}), std::invalid_argument);
    CHECK_THROWS_AS(kadell_coeff({1, 1}, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(kadell_coeff({1, 1}, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(cla(Partition{1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(vanishing_scan({1}, 0, 2), std::invalid_argument);
}
