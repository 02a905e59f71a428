#include "qmac/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <tuple>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qmac/cache.hpp"
#include "qmac/jsonio.hpp"
#include "qmac/macroutes.hpp"
#include "qmac/qdyson.hpp"

namespace qmac {

namespace {

// A case returns "" on success and a short failure description otherwise.
using CaseFn = std::function<std::string()>;
struct PendingCase {
    std::string suite, name;
    CaseFn fn;
};

std::string betas_str(const std::vector<int>& betas) {
    std::string s;
    for (size_t i = 0; i < betas.size(); ++i)
        s += (i ? "," : "") + std::to_string(betas[i]);
    return s;
}

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

std::string check_equal(const RatFuncQ& got, const RatFuncQ& expected) {
    if (got == expected) return "";
    return "got " + got.str() + ", expected " + expected.str();
}

std::string check_equal(const SymFunc& got, const SymFunc& expected) {
    if (got == expected) return "";
    return "got " + got.str() + ", expected " + expected.str();
}

// ---- identities -----------------------------------------------------------

// complete homogeneous polynomial h_m(1, q, ..., q^{beta-1})
RatFuncQ complete_homogeneous(int m, int beta) {
    std::vector<RatFuncQ> h(static_cast<size_t>(m) + 1, RatFuncQ(0));
    h[0] = RatFuncQ(1);
    for (int v = 0; v < beta; ++v)
        for (int d = 1; d <= m; ++d) h[d] += h[d - 1] * RatFuncQ::qpow(v);
    return h[m];
}

RatFuncQ partial_fraction_sum(int m, int beta) {
    RatFuncQ total(0);
    for (int b = 0; b < beta; ++b) {
        RatFuncQ w = RatFuncQ::qpow(b * m);
        if (b > 0) w = w / qpoch_rf(-b, b);
        w = w / RatFuncQ(qpoch(1, beta - 1 - b));
        total += w;
    }
    return total;
}

std::string case_cozqbeta(int m, int beta) {
    RatFuncQ a = inv_poch_coeff(m, beta);
    RatFuncQ b = complete_homogeneous(m, beta);
    RatFuncQ c = partial_fraction_sum(m, beta);
    if (a == b && a == c) return "";
    return "expressions disagree: " + a.str() + " / " + b.str() + " / " + c.str();
}

std::string case_anidentity(int m) {
    Mono z = Mono::var(VarKind::z, 1);
    // both sides cleared by (q;q)_m
    LaurentPoly lhs;
    for (int i = 0; i <= m; ++i) {
        RatFuncQ c(qpoch(1, m), qpoch(1, i));
        lhs += ratio_poch(z, 0, i) * LaurentPoly::term(Mono::var(VarKind::z, 1, m - i), c);
    }
    LaurentPoly rhs = ratio_poch(z, 1, m);
    if (lhs == rhs) return "";
    return "cleared identity mismatch at m=" + std::to_string(m);
}

std::string case_zwidentity(int beta) {
    Mono z = Mono::var(VarKind::z, 1);
    // multiply through by (z;q)_beta: sum_b prod_{j!=b}(1-q^j z) * coefficient
    LaurentPoly total;
    for (int b = 0; b < beta; ++b) {
        LaurentPoly prod = LaurentPoly::one();
        for (int j = 0; j < beta; ++j) {
            if (j == b) continue;
            prod *= LaurentPoly::one() - LaurentPoly::term(z, RatFuncQ::qpow(j));
        }
        RatFuncQ w(1);
        if (b > 0) w = w / qpoch_rf(-b, b);
        w = w / RatFuncQ(qpoch(1, beta - 1 - b));
        total += prod * w;
    }
    if (total == LaurentPoly::one()) return "";
    return "cleared identity mismatch at beta=" + std::to_string(beta);
}

std::string case_interchange(int b, int k, int l) {
    Mono x = Mono::var(VarKind::z, 1) * Mono::var(VarKind::z, 2, -1);
    Mono xi = Mono::var(VarKind::z, 2) * Mono::var(VarKind::z, 1, -1);
    LaurentPoly lhs = ratio_poch(x, k, b) * ratio_poch(xi, l, b);
    LaurentPoly rhs = (ratio_poch(x, 1 - b - l, b) * ratio_poch(xi, 1 - b - k, b)) *
                      RatFuncQ::qpow(b * (l + k + b - 1));
    if (lhs == rhs) return "";
    return "interchange mismatch";
}

// ---- route helpers --------------------------------------------------------

std::string jack_equal(const std::map<Partition, Rat>& a,
                       const std::map<Partition, Rat>& b) {
    if (a == b) return "";
    return "rational-limit values disagree";
}

}  // namespace

bool VerifyReport::all_passed() const {
    for (const auto& c : cases)
        if (!c.passed) return false;
    return true;
}

const std::vector<std::string>& verify_suites() {
    static const std::vector<std::string> suites{
        "identities", "splitting", "ctproduct", "kadell", "fcla",
        "routes",     "norms",     "jack",      "filtration", "all"};
    return suites;
}

namespace {

void collect_identities(std::vector<PendingCase>& out, const VerifyLimits&) {
    for (int m = 0; m <= 6; ++m)
        for (int beta = 1; beta <= 4; ++beta)
            out.push_back({"identities",
                           "cozqbeta m=" + std::to_string(m) + " beta=" + std::to_string(beta),
                           [m, beta] { return case_cozqbeta(m, beta); }});
    for (int m = 0; m <= 6; ++m)
        out.push_back({"identities", "anidentity m=" + std::to_string(m),
                       [m] { return case_anidentity(m); }});
    for (int beta = 1; beta <= 4; ++beta)
        out.push_back({"identities", "zwidentity beta=" + std::to_string(beta),
                       [beta] { return case_zwidentity(beta); }});
    for (int b = 0; b <= 3; ++b)
        for (int k = -2; k <= 2; ++k)
            for (int l = -2; l <= 2; ++l)
                out.push_back({"identities",
                               "interchange b=" + std::to_string(b) + " k=" +
                                   std::to_string(k) + " l=" + std::to_string(l),
                               [b, k, l] { return case_interchange(b, k, l); }});
}

void collect_splitting(std::vector<PendingCase>& out, const VerifyLimits& lim) {
    for (int s = 2; s <= lim.max_s; ++s)
        for (const auto& betas : beta_vectors(s, lim.max_beta))
            out.push_back({"splitting", "betas=" + betas_str(betas), [betas] {
                               LaurentPoly sum;
                               for (const auto& h : split_terms_cleared(betas)) sum += h;
                               if (sum == dyson_z_product(betas)) return std::string();
                               return std::string("cleared splitting sum mismatch");
                           }});
}

void collect_ctproduct(std::vector<PendingCase>& out, const VerifyLimits& lim) {
    for (int s = 1; s <= lim.max_s; ++s)
        for (const auto& betas : beta_vectors(s, lim.max_beta)) {
            out.push_back({"ctproduct", "brute betas=" + betas_str(betas), [betas] {
                               return check_equal(expand_F(betas, 0).ct(),
                                                  ct_product(betas));
                           }});
            out.push_back({"ctproduct", "telescoping betas=" + betas_str(betas),
                           [betas] {
                               return check_equal(ct_telescoping(betas),
                                                  ct_product(betas));
                           }});
        }
}

void collect_kadell(std::vector<PendingCase>& out, const VerifyLimits& lim) {
    for (int s = 1; s <= lim.max_s; ++s)
        for (const auto& betas : beta_vectors(s, lim.max_beta))
            out.push_back({"kadell", "betas=" + betas_str(betas), [betas, lim] {
                int s2 = static_cast<int>(betas.size());
                LaurentPoly f = expand_F_cached(betas, 1, {lim.max_n});
                for (int a = 1; a <= s2; ++a)
                    for (int n = 1; n <= lim.max_n; ++n) {
                        Mono m = Mono::var(VarKind::z, a, n) * Mono::var(VarKind::w, 1, -n);
                        std::string err = check_equal(f.coeff(m), kadell_coeff(betas, a, n));
                        if (!err.empty())
                            return "a=" + std::to_string(a) + " n=" + std::to_string(n) +
                                   ": " + err;
                    }
                for (const auto& [mono, c] : f.terms()) {
                    (void)c;
                    int n = mono.w_inverse_degree(1);
                    if (n < 1 || n > lim.max_n) continue;
                    bool all_below = true;
                    for (int ki : mono.exponents(VarKind::z, s2))
                        all_below = all_below && ki < n;
                    if (all_below) return "vanishing violated at " + mono.str();
                }
                return std::string();
            }});
}

void collect_fcla(std::vector<PendingCase>& out, const VerifyLimits& lim) {
    struct Scan {
        std::vector<int> betas;
        int t;
    };
    std::vector<Scan> scans{{{1, 1}, 1}, {{2, 1}, 1}, {{1, 1, 1}, 1},
                            {{1, 1}, 2}, {{2, 1}, 2}};
    for (const auto& [betas, t] : scans) {
        if (static_cast<int>(betas.size()) > lim.max_s) continue;
        int cap = lim.cap;
        out.push_back({"fcla",
                       "scan betas=" + betas_str(betas) + " t=" + std::to_string(t) +
                           " cap=" + std::to_string(cap),
                       [betas, t, cap] {
                           CTReport rep = vanishing_scan(betas, t, cap);
                           if (rep.ok()) return std::string();
                           return std::to_string(rep.violations.size()) +
                                  " dominance violations";
                       }});
    }
    int wmax = std::min(lim.max_weight, 4);
    for (int beta = 1; beta <= lim.max_beta; ++beta)
        for (int w = 1; w <= wmax; ++w)
            for (const Partition& lam : partitions_of(w))
                out.push_back({"fcla",
                               "cla lam=" + lam.str() + " beta=" + std::to_string(beta),
                               [lam, beta] {
                                   int s = lam.length();
                                   LaurentPoly f = expand_F_cached(
                                       std::vector<int>(s, beta), s,
                                       std::vector<int>(s, lam.part(1)));
                                   Mono m;
                                   for (int i = 1; i <= s; ++i)
                                       m = m * Mono::var(VarKind::z, i, lam.part(i)) *
                                           Mono::var(VarKind::w, i, -lam.part(i));
                                   return check_equal(f.coeff(m), cla(lam, beta));
                               }});
}

void collect_routes(std::vector<PendingCase>& out, const VerifyLimits& lim) {
    for (int beta = 1; beta <= lim.max_beta; ++beta) {
        for (int k = 1; k <= lim.max_weight; ++k)
            for (int s = 1; k * s <= lim.max_weight; ++s)
                out.push_back({"routes",
                               "rect k=" + std::to_string(k) + " s=" + std::to_string(s) +
                                   " beta=" + std::to_string(beta),
                               [k, s, beta] {
                                   SymFunc gs = macdonald_gs(Partition::rectangle(k, s), beta);
                                   std::string e = check_equal(mac_rect_lowering(k, s, 0, beta).value, gs);
                                   if (!e.empty()) return "lowering: " + e;
                                   e = check_equal(mac_rect_comb(k, s, beta).value, gs);
                                   if (!e.empty()) return "comb: " + e;
                                   e = check_equal(mac_vertex(k, s, 0, beta).value, gs);
                                   if (!e.empty()) return "vertex: " + e;
                                   return std::string();
                               }});
        struct AR {
            int k, s, t;
        };
        for (const auto& [k, s, t] : std::vector<AR>{{1, 1, 1}, {1, 2, 1}, {2, 1, 1}}) {
            if (k * s + (k + 1) * t > lim.max_weight) continue;
            out.push_back({"routes",
                           "almost k=" + std::to_string(k) + " s=" + std::to_string(s) +
                               " t=" + std::to_string(t) + " beta=" + std::to_string(beta),
                           [k, s, t, beta] {
                               SymFunc gs = macdonald_gs(almost_rectangle(k, s, t), beta);
                               std::string e = check_equal(mac_rect_lowering(k, s, t, beta).value, gs);
                               if (!e.empty()) return "lowering: " + e;
                               e = check_equal(mac_vertex(k, s, t, beta).value, gs);
                               if (!e.empty()) return "vertex: " + e;
                               return std::string();
                           }});
        }
    }
}

void collect_norms(std::vector<PendingCase>& out, const VerifyLimits& lim) {
    for (int beta = 1; beta <= lim.max_beta; ++beta)
        for (int w = 1; w <= std::min(lim.max_weight, 5); ++w)
            for (const Partition& lam : partitions_of(w))
                out.push_back({"norms",
                               "lam=" + lam.str() + " beta=" + std::to_string(beta),
                               [lam, beta] {
                                   SymFunc q = macdonald_gs(lam, beta);
                                   return check_equal(scalar_product(q, q, beta),
                                                      norm_closed(lam, beta));
                               }});
}

void collect_jack(std::vector<PendingCase>& out, const VerifyLimits& lim) {
    struct AR {
        int k, s, t, beta;
    };
    std::vector<AR> cases{{1, 2, 0, 1}, {2, 2, 0, 1}, {1, 1, 1, 1}, {2, 3, 0, 1},
                          {1, 2, 1, 1}, {1, 2, 0, 2}, {2, 2, 0, 2}};
    for (const auto& [k, s, t, beta] : cases) {
        if (k * s + (k + 1) * t > lim.max_weight || beta > lim.max_beta) continue;
        out.push_back({"jack",
                       "k=" + std::to_string(k) + " s=" + std::to_string(s) + " t=" +
                           std::to_string(t) + " beta=" + std::to_string(beta),
                       [k, s, t, beta] {
                           return jack_equal(
                               limit_sym(jack_hyperdet(k, s, t, beta).value),
                               limit_sym(mac_rect_lowering(k, s, t, beta).value));
                       }});
    }
}

void collect_filtration(std::vector<PendingCase>& out, const VerifyLimits& lim) {
    std::vector<Partition> shapes{Partition{2, 1}, Partition{3, 1},
                                  Partition{2, 2, 1}, Partition{3, 2},
                                  Partition{3, 3, 1}};
    for (int beta = 1; beta <= lim.max_beta; ++beta)
        for (const Partition& lam : shapes) {
            if (lam.weight() > lim.max_weight) continue;
            out.push_back({"filtration",
                           "lam=" + lam.str() + " beta=" + std::to_string(beta),
                           [lam, beta] {
                               RouteResult r = mac_filtration(lam, beta);
                               if (r.scalars.at("c").is_zero())
                                   return std::string("vanishing normalization scalar");
                               return check_equal(r.value, macdonald_gs(lam, beta));
                           }});
        }
}

}  // namespace

VerifyReport run_suite(const std::string& suite, const VerifyLimits& lim) {
    bool known = false;
    for (const auto& s : verify_suites()) known = known || s == suite;
    if (!known) throw std::invalid_argument("unknown verify suite: " + suite);

    std::vector<PendingCase> pending;
    bool all = suite == "all";
    if (all || suite == "identities") collect_identities(pending, lim);
    if (all || suite == "splitting") collect_splitting(pending, lim);
    if (all || suite == "ctproduct") collect_ctproduct(pending, lim);
    if (all || suite == "kadell") collect_kadell(pending, lim);
    if (all || suite == "fcla") collect_fcla(pending, lim);
    if (all || suite == "routes") collect_routes(pending, lim);
    if (all || suite == "norms") collect_norms(pending, lim);
    if (all || suite == "jack") collect_jack(pending, lim);
    if (all || suite == "filtration") collect_filtration(pending, lim);

    auto start = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.cases.resize(pending.size());
    std::atomic<size_t> cursor{0};
    auto worker = [&] {
        for (;;) {
            size_t i = cursor.fetch_add(1);
            if (i >= pending.size()) return;
            VerifyCase& c = rep.cases[i];
            c.suite = pending[i].suite;
            c.name = pending[i].name;
            try {
                c.detail = pending[i].fn();
            } catch (const std::exception& e) {
                c.detail = std::string("exception: ") + e.what();
            }
            c.passed = c.detail.empty();
        }
    };
    int jobs = std::max(1, lim.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::sort(rep.cases.begin(), rep.cases.end(),
              [](const VerifyCase& a, const VerifyCase& b) {
                  return std::tie(a.suite, a.name) < std::tie(b.suite, b.name);
              });
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

std::string verify_report_to_json(const VerifyReport& r, int indent) {
    nlohmann::ordered_json cases = nlohmann::ordered_json::array();
    for (const auto& c : r.cases)
        cases.push_back({{"suite", c.suite},
                         {"name", c.name},
                         {"passed", c.passed},
                         {"detail", c.detail}});
    nlohmann::ordered_json j = {{"all_passed", r.all_passed()},
                                {"elapsed_ms", r.elapsed_ms},
                                {"cases", std::move(cases)}};
    return indent < 0 ? j.dump() : j.dump(indent);
}

}  // namespace qmac
