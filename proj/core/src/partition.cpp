#include "qmac/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace qmac {

void Partition::validate() const {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::rectangle(int k, int s) {
    if (s < 0 || (s > 0 && k <= 0)) throw std::invalid_argument("Partition::rectangle");
    return Partition(std::vector<int>(s, k));
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::is_rectangular() const {
    return !parts_.empty() && parts_.front() == parts_.back();
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (parts_.empty()) return Partition();
    c.resize(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
}

int Partition::mult(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::vector<std::pair<int, int>> Partition::runs() const {
    std::vector<std::pair<int, int>> r;
    for (int p : parts_) {
        if (!r.empty() && r.back().first == p) ++r.back().second;
        else r.emplace_back(p, 1);
    }
    return r;
}

Partition Partition::set_union(const Partition& o) const {
    std::vector<int> m(parts_);
    m.insert(m.end(), o.parts_.begin(), o.parts_.end());
    std::sort(m.begin(), m.end(), std::greater<int>());
    return Partition(std::move(m));
}

bool Partition::contains_multiset(const Partition& o) const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    for (int p : o.parts_)
        if (--m[p] < 0) return false;
    return true;
}

Partition Partition::set_diff(const Partition& o) const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    for (int p : o.parts_) {
        if (--m[p] < 0) throw std::invalid_argument("Partition::set_diff: not a sub-multiset");
    }
    std::vector<int> out;
    for (auto it = m.rbegin(); it != m.rend(); ++it)
        for (int c = 0; c < it->second; ++c) out.push_back(it->first);
    return Partition(std::move(out));
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

Partition Partition::parse(std::string_view s) {
    std::vector<int> parts;
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') t += c;
    if (t.empty() || t == "0") return Partition();
    std::stringstream ss(t);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("Partition::parse: empty token");
        size_t caret = tok.find('^');
        int part = std::stoi(tok.substr(0, caret));
        int rep = 1;
        if (caret != std::string::npos) rep = std::stoi(tok.substr(caret + 1));
        if (part == 0 && rep >= 0) continue;
        for (int i = 0; i < rep; ++i) parts.push_back(part);
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

DomCmp dominance_cmp(const Partition& lam, const Partition& mu) {
    if (lam.weight() != mu.weight())
        throw std::invalid_argument("dominance_cmp: weights differ");
    int n = std::max(lam.length(), mu.length());
    bool geq = true, leq = true;
    int sl = 0, sm = 0;
    for (int i = 1; i <= n; ++i) {
        sl += lam.part(i);
        sm += mu.part(i);
        if (sl < sm) geq = false;
        if (sl > sm) leq = false;
    }
    if (geq && leq) return DomCmp::equal;
    if (geq) return DomCmp::greater;
    if (leq) return DomCmp::less;
    return DomCmp::incomparable;
}

std::vector<int> sorted_desc(std::vector<int> a) {
    std::sort(a.begin(), a.end(), std::greater<int>());
    return a;
}

bool gen_dominance_geq(const std::vector<int>& a, const std::vector<int>& b) {
    size_t n = std::max(a.size(), b.size());
    long sa = 0, sb = 0;
    for (size_t i = 0; i < n; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

mpz_class z_lambda(const Partition& lam) {
    mpz_class z(1);
    for (auto [part, m] : lam.runs()) {
        mpz_class pw, fact;
        mpz_ui_pow_ui(pw.get_mpz_t(), part, m);
        mpz_fac_ui(fact.get_mpz_t(), m);
        z *= pw * fact;
    }
    return z;
}

mpz_class multiplicity_binomial(const Partition& lam, const Partition& mu) {
    std::map<int, int> mm;
    for (int p : mu.parts()) ++mm[p];
    mpz_class b(1);
    for (auto [part, m] : mm) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), lam.mult(part), m);
        b *= c;
        if (b == 0) break;
    }
    return b;
}

Partition complement(int k, int s, const Partition& lam) {
    if (lam.part(1) > k || lam.length() > s)
        throw std::invalid_argument("complement: partition does not fit in the rectangle");
    std::vector<int> out;
    for (int i = 1; i <= s; ++i) {
        int v = k - lam.part(s + 1 - i);
        if (v > 0) out.push_back(v);
    }
    return Partition(std::move(out));
}

Partition exact_complement(const Partition& lam) {
    if (lam.is_zero()) return Partition();
    return complement(lam.part(1), lam.length(), lam);
}

std::vector<Rect> rect_filtration(const Partition& lam) {
    if (lam.is_zero()) throw std::invalid_argument("rect_filtration: zero partition");
    std::vector<Rect> out;
    Partition cur = lam;
    while (!cur.is_zero()) {
        out.push_back(Rect{cur.part(1), cur.length()});
        if (cur.is_rectangular()) break;
        cur = exact_complement(cur);
    }
    return out;
}

std::vector<Rect> rect_filtration_direct(const Partition& lam) {
    if (lam.is_zero()) throw std::invalid_argument("rect_filtration_direct: zero partition");
    auto rn = lam.runs();
    int r = static_cast<int>(rn.size());
    // suffix/prefix sums of multiplicities over the surviving index window
    std::vector<Rect> out;
    int lo = 0, hi = r - 1, sign = 1, shift = 0;
    // current part values are sign*a_j + shift on the window [lo,hi]
    int len = 0;
    for (auto& [a, n] : rn) len += n;
    for (int m = 0; m < r; ++m) {
        int jstar = sign > 0 ? lo : hi;
        int value = sign * rn[jstar].first + shift;
        out.push_back(Rect{value, len});
        len -= rn[jstar].second;
        shift = sign * rn[jstar].first;
        sign = -sign;
        if (jstar == lo) ++lo; else --hi;
    }
    return out;
}

namespace {

void gen_partitions(int n, int max_part, int max_len, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(cur));
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(n - p, p, max_len - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_part, int max_len) {
    if (n < 0) return {};
    if (max_part < 0) max_part = n;
    if (max_len < 0) max_len = n;
    std::vector<Partition> out;
    std::vector<int> cur;
    gen_partitions(n, max_part, max_len, cur, out);
    return out;
}

std::vector<Partition> submultisets(const Partition& lam) {
    auto rn = lam.runs();
    std::vector<Partition> out;
    std::vector<int> cur;
    // depth-first over multiplicity choices per distinct part
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == rn.size()) {
            out.push_back(Partition(cur));
            return;
        }
        auto [part, m] = rn[idx];
        for (int c = 0; c <= m; ++c) {
            for (int i = 0; i < c; ++i) cur.push_back(part);
            self(self, idx + 1);
            for (int i = 0; i < c; ++i) cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace qmac
