/**
 * @file cache.hpp
 * @brief On-disk content-addressed cache for truncated q-Dyson expansions.
 *
 * Entries are keyed by a hash of the operation parameters and the library
 * version. Each entry is the LaurentPoly JSON form next to a manifest
 * recording the parameters; a manifest mismatch (hash collision or stale
 * format) forces recomputation. The cache is safe to delete at any time,
 * and any I/O failure silently falls back to direct computation.
 */
#pragma once

#include <filesystem>

#include "qmac/laurent.hpp"

namespace qmac {

// QMAC_CACHE_DIR if set, otherwise <home>/.cache/qmac.
std::filesystem::path cache_dir();

// expand_F with a transparent on-disk cache: identical results cold or warm.
LaurentPoly expand_F_cached(const std::vector<int>& betas, int t,
                            const std::vector<int>& wcaps = {});

}  // namespace qmac
