#include "qmac/jsonio.hpp"

#include <json.hpp>
#include <stdexcept>

namespace qmac {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string dump(const ordered& j, int indent) {
    return indent < 0 ? j.dump() : j.dump(indent);
}

ordered partition_json(const Partition& lam) {
    return ordered(lam.parts());
}

Partition partition_from(const json& j) {
    return Partition(j.get<std::vector<int>>());
}

std::string kind_str(VarKind k) {
    switch (k) {
        case VarKind::z: return "z";
        case VarKind::w: return "w";
        case VarKind::d: return "d";
    }
    return "";
}

ordered mono_json(const Mono& m) {
    ordered a = ordered::array();
    for (const auto& [id, e] : m.factors())
        a.push_back({kind_str(var_kind(id)), var_index(id), e});
    return a;
}

ordered symfunc_json(const SymFunc& f, int beta) {
    ordered terms = ordered::array();
    for (const auto& [lam, c] : f.terms())
        terms.push_back({{"partition", partition_json(lam)}, {"coeff", c.str()}});
    return {{"basis", "p"}, {"beta", beta}, {"terms", std::move(terms)}};
}

SymFunc symfunc_from(const json& j) {
    if (j.at("basis").get<std::string>() != "p")
        throw std::invalid_argument("symfunc_from_json: unknown basis");
    SymFunc f;
    for (const auto& t : j.at("terms"))
        f.add_term(partition_from(t.at("partition")),
                   RatFuncQ::parse(t.at("coeff").get<std::string>()));
    return f;
}

VarKind kind_from(const std::string& s) {
    if (s == "z") return VarKind::z;
    if (s == "w") return VarKind::w;
    if (s == "d") return VarKind::d;
    throw std::invalid_argument("unknown variable kind: " + s);
}

Mono mono_from(const json& j) {
    Mono m;
    for (const auto& f : j)
        m = m * Mono::var(kind_from(f.at(0).get<std::string>()),
                          f.at(1).get<int>(), f.at(2).get<int>());
    return m;
}

}  // namespace

std::string symfunc_to_json(const SymFunc& f, int beta, int indent) {
    return dump(symfunc_json(f, beta), indent);
}

std::pair<SymFunc, int> symfunc_from_json(const std::string& text) {
    json j = json::parse(text);
    return {symfunc_from(j), j.at("beta").get<int>()};
}

std::string laurent_to_json(const LaurentPoly& p, int indent) {
    ordered terms = ordered::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back({{"monomial", mono_json(m)}, {"coeff", c.str()}});
    return dump({{"terms", std::move(terms)}}, indent);
}

LaurentPoly laurent_from_json(const std::string& text) {
    json j = json::parse(text);
    LaurentPoly p;
    for (const auto& t : j.at("terms"))
        p += LaurentPoly::term(mono_from(t.at("monomial")),
                               RatFuncQ::parse(t.at("coeff").get<std::string>()));
    return p;
}

std::string route_result_to_json(const RouteResult& r, int indent) {
    ordered scalars = ordered::object();
    for (const auto& [k, v] : r.scalars) scalars[k] = v.str();
    ordered j = {{"shape", partition_json(r.shape)},
                 {"beta", r.beta},
                 {"route", route_name(r.route)},
                 {"scalars", std::move(scalars)},
                 {"value", symfunc_json(r.value, r.beta)}};
    return dump(j, indent);
}

RouteResult route_result_from_json(const std::string& text) {
    json j = json::parse(text);
    RouteResult r;
    r.shape = partition_from(j.at("shape"));
    r.beta = j.at("beta").get<int>();
    r.route = route_parse(j.at("route").get<std::string>());
    for (const auto& [k, v] : j.at("scalars").items())
        r.scalars.emplace(k, RatFuncQ::parse(v.get<std::string>()));
    r.value = symfunc_from(j.at("value"));
    return r;
}

std::string ct_report_to_json(const CTReport& r, int indent) {
    ordered violations = ordered::array();
    for (const auto& v : r.violations)
        violations.push_back({{"monomial", mono_json(v.monomial)},
                              {"got", v.got.str()},
                              {"expected", v.expected.str()}});
    ordered j = {{"betas", r.betas},
                 {"s", r.s},
                 {"t", r.t},
                 {"checked_monomials", r.checked_monomials},
                 {"violations", std::move(violations)},
                 {"elapsed_ms", r.elapsed_ms}};
    return dump(j, indent);
}

CTReport ct_report_from_json(const std::string& text) {
    json j = json::parse(text);
    CTReport r;
    r.betas = j.at("betas").get<std::vector<int>>();
    r.s = j.at("s").get<int>();
    r.t = j.at("t").get<int>();
    r.checked_monomials = j.at("checked_monomials").get<std::int64_t>();
    for (const auto& v : j.at("violations"))
        r.violations.push_back({mono_from(v.at("monomial")),
                                RatFuncQ::parse(v.at("got").get<std::string>()),
                                RatFuncQ::parse(v.at("expected").get<std::string>())});
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return r;
}

Route route_parse(const std::string& name) {
    for (Route r : {Route::gram_schmidt, Route::lowering, Route::combinatorial,
                    Route::vertex, Route::filtration, Route::hyperdet_jack})
        if (route_name(r) == name) return r;
    throw std::invalid_argument("unknown route: " + name);
}

}  // namespace qmac
