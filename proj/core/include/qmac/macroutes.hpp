/**
 * @file macroutes.hpp
 * @brief Closed-form constructions of Macdonald functions of (almost)
 *        rectangular shapes by several independent routes, the filtration
 *        construction for general shapes, and the Jack hyperdeterminant.
 */
#pragma once

#include "qmac/symfunc.hpp"
#include "qmac/vertexop.hpp"

namespace qmac {

enum class Route {
    gram_schmidt,
    lowering,
    combinatorial,
    vertex,
    filtration,
    hyperdet_jack,
};
std::string route_name(Route r);

struct RouteResult {
    Partition shape;
    int beta = 1;
    Route route = Route::gram_schmidt;
    SymFunc value;
    std::map<std::string, RatFuncQ> scalars;
};

// (-1)^{beta n(n-1)/2} q^{-beta(beta+1)n(n-1)/4}
RatFuncQ epsilon_q(int beta, int n);

// C_rho for rho = ((k+1)^t, k^s):
// q^{st beta} (q;q^beta)_s (q;q^beta)_t (q;q)_{(s+t)beta}
//   / ((q;q^beta)_{s+t} (q;q)_beta^{s+t})
RatFuncQ c_rho(int k, int s, int t, int beta);

// ((k+1)^t, k^s)
Partition almost_rectangle(int k, int s, int t);

// Lowering-operator route: apply prod_{i<j}(D_i/D_j;q)_beta (q D_j/D_i;q)_beta
// to g_rho, then divide by C_rho. Evaluated incrementally pair by pair.
RouteResult mac_rect_lowering(int k, int s, int t, int beta);

// Combinatorial power-sum route for R = (k^s).
RouteResult mac_rect_comb(int k, int s, int beta);

// Vertex route: X_{-rho}.1 (x) e^{-(s+t)eta/2} divided by eps_q * C_rho.
RouteResult mac_vertex(int k, int s, int t, int beta);

// Gram-Schmidt oracle wrapped as a route.
RouteResult mac_gram_schmidt(const Partition& lam, int beta);

// Filtration route for arbitrary nonzero lam; rectangles come from the
// lowering route unless use_gs_rectangles is set. The reported scalar "c" is
// the g-basis coefficient removed by the final normalization.
RouteResult mac_filtration(const Partition& lam, int beta,
                           bool use_gs_rectangles = false);

// Jack hyperdeterminant for rho = ((k+1)^t, k^s); exact rationals.
RouteResult jack_hyperdet(int k, int s, int t, int beta);

}  // namespace qmac
