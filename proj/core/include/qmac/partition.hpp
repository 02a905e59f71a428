/**
 * @file partition.hpp
 * @brief Partition combinatorics: dominance orders, multiplicities,
 *        complements, corner numbers and the rectangular filtration.
 */
#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qmac {

enum class DomCmp { greater, less, equal, incomparable };

// Weakly decreasing positive parts; the empty list is the zero partition (0).
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

    // k^s rectangle; (0) when s == 0
    static Partition rectangle(int k, int s);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    int part(int i) const {  // 1-based, 0 beyond the length
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }
    bool is_zero() const { return parts_.empty(); }
    bool is_rectangular() const;

    Partition conjugate() const;
    // multiplicity of i as a part
    int mult(int i) const;
    // distinct parts in decreasing order with multiplicities
    std::vector<std::pair<int, int>> runs() const;
    int corner_number() const { return static_cast<int>(runs().size()); }

    Partition set_union(const Partition& o) const;
    // multiset containment: m_i(o) <= m_i(*this) for all i
    bool contains_multiset(const Partition& o) const;
    // multiset difference; requires contains_multiset(o)
    Partition set_diff(const Partition& o) const;

    auto operator<=>(const Partition& o) const = default;

    // "6,6,3,2,2"; zero partition prints "0"
    std::string str() const;
    // accepts "6,6,3,2,2", "(6^2,3,2^2)", "4^3", "0" and ""
    static Partition parse(std::string_view s);

private:
    std::vector<int> parts_;
    void validate() const;
};

DomCmp dominance_cmp(const Partition& lam, const Partition& mu);

// Generalized dominance on integer vectors, zero-padded partial sums.
bool gen_dominance_geq(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> sorted_desc(std::vector<int> a);

mpz_class z_lambda(const Partition& lam);
// prod_i binom(m_i(lam), m_i(mu)); zero unless mu subset' lam
mpz_class multiplicity_binomial(const Partition& lam, const Partition& mu);

// R -' lam for R = (k^s); requires lam_1 <= k and l(lam) <= s
Partition complement(int k, int s, const Partition& lam);
// (lam_1^{l(lam)}) -' lam
Partition exact_complement(const Partition& lam);

struct Rect {
    int k, s;
    bool operator==(const Rect&) const = default;
};

// Rectangular filtration (recursive definition); lam must be nonzero.
std::vector<Rect> rect_filtration(const Partition& lam);
// Same sequence by the direct two-ended description; used as a cross-check.
std::vector<Rect> rect_filtration_direct(const Partition& lam);

// All partitions of n with parts <= max_part and length <= max_len.
std::vector<Partition> partitions_of(int n, int max_part = -1, int max_len = -1);
// All mu with mu subset' lam (including (0) and lam itself).
std::vector<Partition> submultisets(const Partition& lam);

}  // namespace qmac
