/**
 * @file jsonio.hpp
 * @brief JSON serialization of the public value types. String-based so the
 *        JSON library stays an implementation detail of the core library.
 *
 * Schemas:
 *   SymFunc     {"basis":"p","beta":B,"terms":[{"partition":[..],"coeff":S}]}
 *   LaurentPoly {"terms":[{"monomial":[["z",1,2],..],"coeff":S}]}
 *   RouteResult {"shape":[..],"beta":B,"route":S,"scalars":{..},"value":SymFunc}
 *   CTReport    {"betas":[..],"s":N,"t":N,"checked_monomials":N,
 *                "violations":[{"monomial":[..],"got":S,"expected":S}],
 *                "elapsed_ms":N}
 * Coefficients are the exact text form of RatFuncQ. Terms follow the
 * canonical container order, so equal values serialize identically.
 */
#pragma once

#include <string>
#include <utility>

#include "qmac/macroutes.hpp"
#include "qmac/qdyson.hpp"

namespace qmac {

// indent < 0: compact single line; otherwise pretty-printed
std::string symfunc_to_json(const SymFunc& f, int beta, int indent = -1);
std::pair<SymFunc, int> symfunc_from_json(const std::string& text);

std::string laurent_to_json(const LaurentPoly& p, int indent = -1);
LaurentPoly laurent_from_json(const std::string& text);

std::string route_result_to_json(const RouteResult& r, int indent = -1);
RouteResult route_result_from_json(const std::string& text);

std::string ct_report_to_json(const CTReport& r, int indent = -1);
CTReport ct_report_from_json(const std::string& text);

Route route_parse(const std::string& name);

}  // namespace qmac
