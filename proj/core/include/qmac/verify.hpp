/**
 * @file verify.hpp
 * @brief Named verification suites over configurable ranges: each suite
 *        checks one family of exact identities and returns a structured
 *        pass/fail report suitable for the CLI and for JSON output.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qmac {

struct VerifyLimits {
    int max_s = 3;      // number of z variables in q-Dyson checks
    int max_beta = 2;   // largest beta
    int max_weight = 6; // largest partition weight
    int max_n = 3;      // largest w-exponent in coefficient checks
    int cap = 3;        // w-degree cap for scans
    int jobs = 1;       // worker threads
};

struct VerifyCase {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;  // empty on success
};

struct VerifyReport {
    std::vector<VerifyCase> cases;
    std::int64_t elapsed_ms = 0;
    bool all_passed() const;
};

// {"identities","splitting","ctproduct","kadell","fcla","routes","norms",
//  "jack","filtration","all"}
const std::vector<std::string>& verify_suites();

// Throws std::invalid_argument for an unknown suite name.
VerifyReport run_suite(const std::string& suite, const VerifyLimits& lim);

std::string verify_report_to_json(const VerifyReport& r, int indent = -1);

}  // namespace qmac
