// Batch CLI: Macdonald/Jack functions by several construction routes,
// q-Dyson constant terms, and verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 size refusal (above the configured weight/beta caps).

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qmac/jsonio.hpp"
#include "qmac/verify.hpp"

using namespace qmac;

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSizeRefusal = 3;
constexpr int kDefaultWeightCap = 12;
constexpr int kDefaultBetaCap = 3;

struct Shape {
    int k = 0, s = 0, t = 0;  // ((k+1)^t, k^s); rectangular iff t == 0
};

// Decompose into ((k+1)^t, k^s) if possible.
std::optional<Shape> as_almost_rectangle(const Partition& lam) {
    if (lam.is_zero()) return Shape{0, 0, 0};
    auto runs = lam.runs();
    if (runs.size() == 1) return Shape{runs[0].first, runs[0].second, 0};
    if (runs.size() == 2 && runs[0].first == runs[1].first + 1)
        return Shape{runs[1].first, runs[1].second, runs[0].second};
    return std::nullopt;
}

int check_caps(const Partition& shape, int beta, int weight_cap, int beta_cap) {
    if (weight_cap > kDefaultWeightCap || beta_cap > kDefaultBetaCap)
        std::cerr << "warning: raised size caps; exact arithmetic may be slow\n";
    if (shape.weight() > weight_cap) {
        std::cerr << "error: |shape| = " << shape.weight() << " exceeds the weight cap "
                  << weight_cap << " (raise with --max-weight)\n";
        return kExitSizeRefusal;
    }
    if (beta > beta_cap) {
        std::cerr << "error: beta = " << beta << " exceeds the beta cap " << beta_cap
                  << " (raise with --max-beta)\n";
        return kExitSizeRefusal;
    }
    return 0;
}

void print_route_text(const RouteResult& r) {
    std::cout << g_basis_str(to_g_basis(r.value, r.beta)) << "\n";
    for (const auto& [name, value] : r.scalars)
        std::cout << name << " = " << value.str() << "\n";
}

int cmd_macdonald(const std::string& shape_str, int beta, const std::string& route,
                  const std::string& format, int weight_cap, int beta_cap) {
    Partition shape;
    try {
        shape = Partition::parse(shape_str);
    } catch (const std::exception& e) {
        std::cerr << "error: bad shape: " << e.what() << "\n";
        return kExitUsage;
    }
    if (shape.is_zero()) {
        std::cerr << "error: shape must be a nonzero partition\n";
        return kExitUsage;
    }
    if (beta < 1) {
        std::cerr << "error: beta must be positive\n";
        return kExitUsage;
    }
    if (int rc = check_caps(shape, beta, weight_cap, beta_cap)) return rc;

    std::optional<Shape> ar = as_almost_rectangle(shape);
    RouteResult result;
    if (route == "gs") {
        result = mac_gram_schmidt(shape, beta);
    } else if (route == "filtration") {
        result = mac_filtration(shape, beta);
    } else if (route == "lowering" || route == "vertex") {
        if (!ar) {
            std::cerr << "error: route '" << route
                      << "' needs a rectangular or almost rectangular shape\n";
            return kExitUsage;
        }
        result = route == "lowering" ? mac_rect_lowering(ar->k, ar->s, ar->t, beta)
                                     : mac_vertex(ar->k, ar->s, ar->t, beta);
    } else if (route == "comb") {
        if (!ar || ar->t != 0) {
            std::cerr << "error: route 'comb' needs a rectangular shape\n";
            return kExitUsage;
        }
        result = mac_rect_comb(ar->k, ar->s, beta);
    } else {
        std::cerr << "error: unknown route '" << route << "'\n";
        return kExitUsage;
    }

    if (format == "json")
        std::cout << symfunc_to_json(result.value, beta) << "\n";
    else
        print_route_text(result);
    return 0;
}

int cmd_jack(const std::string& shape_str, int beta, const std::string& format,
             int weight_cap, int beta_cap) {
    Partition shape;
    try {
        shape = Partition::parse(shape_str);
    } catch (const std::exception& e) {
        std::cerr << "error: bad shape: " << e.what() << "\n";
        return kExitUsage;
    }
    if (shape.is_zero() || beta < 1) {
        std::cerr << "error: need a nonzero shape and positive beta\n";
        return kExitUsage;
    }
    if (int rc = check_caps(shape, beta, weight_cap, beta_cap)) return rc;

    std::optional<Shape> ar = as_almost_rectangle(shape);
    SymFunc value;
    if (ar) {
        value = jack_hyperdet(ar->k, ar->s, ar->t, beta).value;
    } else {
        value = from_rational(limit_sym(macdonald_gs(shape, beta)));
    }
    if (format == "json")
        std::cout << symfunc_to_json(value, beta) << "\n";
    else
        std::cout << value.str() << "\n";
    return 0;
}

int cmd_qdyson(const std::string& mode, const std::vector<int>& betas,
               const std::string& shape_str, int beta, int a, int n, int t, int cap,
               const std::string& format) {
    try {
        if (mode == "ct") {
            std::cout << ct_product(betas).str() << "\n";
        } else if (mode == "kadell") {
            std::cout << kadell_coeff(betas, a, n).str() << "\n";
        } else if (mode == "cla") {
            Partition lam = Partition::parse(shape_str);
            std::cout << cla(lam, beta).str() << "\n";
        } else if (mode == "scan") {
            CTReport rep = vanishing_scan(betas, t, cap);
            if (format == "json") {
                std::cout << ct_report_to_json(rep, 2) << "\n";
            } else {
                std::cout << "checked " << rep.checked_monomials << " monomials, "
                          << rep.violations.size() << " violations\n";
                for (const auto& v : rep.violations)
                    std::cout << "violation: " << v.monomial.str() << " -> "
                              << v.got.str() << "\n";
            }
            return rep.ok() ? 0 : kExitVerifyFailure;
        } else {
            std::cerr << "error: unknown qdyson mode '" << mode << "'\n";
            return kExitUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}

int cmd_verify(const std::string& suite, const VerifyLimits& lim,
               const std::string& format) {
    VerifyReport rep;
    try {
        rep = run_suite(suite, lim);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (format == "json") {
        std::cout << verify_report_to_json(rep, 2) << "\n";
    } else {
        int failed = 0;
        for (const auto& c : rep.cases) {
            if (!c.passed) {
                ++failed;
                std::cout << "FAIL [" << c.suite << "] " << c.name << ": " << c.detail
                          << "\n";
            }
        }
        std::cout << rep.cases.size() - failed << "/" << rep.cases.size()
                  << " cases passed in " << rep.elapsed_ms << " ms\n";
    }
    return rep.all_passed() ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Macdonald symmetric functions and q-Dyson constant terms, exactly"};
    app.require_subcommand(1);
    std::string format = "text";

    // macdonald
    auto* mac = app.add_subcommand("macdonald", "Compute a Macdonald function");
    std::string mac_shape, mac_route = "gs";
    int mac_beta = 1, mac_wcap = kDefaultWeightCap, mac_bcap = kDefaultBetaCap;
    mac->add_option("--shape", mac_shape, "Partition, e.g. 2,2,1")->required();
    mac->add_option("--beta", mac_beta, "t = q^beta exponent")->required();
    mac->add_option("--route", mac_route, "gs|lowering|comb|vertex|filtration");
    mac->add_option("--format", format, "text|json");
    mac->add_option("--max-weight", mac_wcap, "Weight cap (default 12)");
    mac->add_option("--max-beta", mac_bcap, "Beta cap (default 3)");

    // jack
    auto* jack = app.add_subcommand("jack", "Compute a Jack function (q -> 1 limit)");
    std::string jack_shape;
    int jack_beta = 1, jack_wcap = kDefaultWeightCap, jack_bcap = kDefaultBetaCap;
    jack->add_option("--shape", jack_shape, "Partition")->required();
    jack->add_option("--beta", jack_beta, "Inverse Jack parameter")->required();
    jack->add_option("--format", format, "text|json");
    jack->add_option("--max-weight", jack_wcap, "Weight cap (default 12)");
    jack->add_option("--max-beta", jack_bcap, "Beta cap (default 3)");

    // qdyson
    auto* qd = app.add_subcommand("qdyson", "q-Dyson constant terms and scans");
    std::string qd_mode, qd_shape;
    std::vector<int> qd_betas;
    int qd_beta = 1, qd_a = 1, qd_n = 1, qd_t = 1, qd_cap = 2;
    qd->add_option("mode", qd_mode, "ct|kadell|cla|scan")->required();
    qd->add_option("--betas", qd_betas, "Comma-separated exponents")->delimiter(',');
    qd->add_option("--shape", qd_shape, "Partition (cla mode)");
    qd->add_option("--beta", qd_beta, "Uniform exponent (cla mode)");
    qd->add_option("--a", qd_a, "Variable index (kadell mode)");
    qd->add_option("--n", qd_n, "Exponent (kadell mode)");
    qd->add_option("--t", qd_t, "Number of w variables (scan mode)");
    qd->add_option("--cap", qd_cap, "w-degree cap (scan mode)");
    qd->add_option("--format", format, "text|json");

    // verify
    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    VerifyLimits lim;
    ver->add_option("--suite", suite, "identities|splitting|ctproduct|kadell|fcla|"
                                      "routes|norms|jack|filtration|all")
        ->required();
    ver->add_option("--max-s", lim.max_s, "Max number of z variables");
    ver->add_option("--max-beta", lim.max_beta, "Max beta");
    ver->add_option("--max-weight", lim.max_weight, "Max partition weight");
    ver->add_option("--max-n", lim.max_n, "Max w exponent");
    ver->add_option("--cap", lim.cap, "Scan degree cap");
    ver->add_option("--jobs", lim.jobs, "Worker threads");
    ver->add_option("--format", format, "text|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (format != "text" && format != "json") {
        std::cerr << "error: unknown format '" << format << "'\n";
        return kExitUsage;
    }

    if (mac->parsed())
        return cmd_macdonald(mac_shape, mac_beta, mac_route, format, mac_wcap, mac_bcap);
    if (jack->parsed())
        return cmd_jack(jack_shape, jack_beta, format, jack_wcap, jack_bcap);
    if (qd->parsed())
        return cmd_qdyson(qd_mode, qd_betas, qd_shape, qd_beta, qd_a, qd_n, qd_t,
                          qd_cap, format);
    if (ver->parsed()) return cmd_verify(suite, lim, format);
    return kExitUsage;
}
