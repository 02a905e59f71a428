#include "qmac/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qmac {

std::string var_name(uint32_t id) {
    const char* prefix[] = {"z", "w", "D"};
    return prefix[static_cast<int>(var_kind(id))] + std::to_string(var_index(id));
}

void Mono::push(uint32_t id, int exp) {
    if (exp != 0) e_.emplace_back(id, exp);
}

Mono Mono::var(VarKind kind, int index, int exp) {
    Mono m;
    m.push(var_id(kind, index), exp);
    return m;
}

Mono Mono::operator*(const Mono& o) const {
    Mono r;
    size_t i = 0, j = 0;
    while (i < e_.size() && j < o.e_.size()) {
        if (e_[i].first < o.e_[j].first) r.e_.push_back(e_[i++]);
        else if (e_[i].first > o.e_[j].first) r.e_.push_back(o.e_[j++]);
        else {
            int s = e_[i].second + o.e_[j].second;
            if (s != 0) r.e_.emplace_back(e_[i].first, s);
            ++i; ++j;
        }
    }
    while (i < e_.size()) r.e_.push_back(e_[i++]);
    while (j < o.e_.size()) r.e_.push_back(o.e_[j++]);
    return r;
}

int Mono::exp(VarKind kind, int index) const {
    uint32_t id = var_id(kind, index);
    for (const auto& [vid, e] : e_)
        if (vid == id) return e;
    return 0;
}

int Mono::w_inverse_degree() const {
    int d = 0;
    for (const auto& [vid, e] : e_)
        if (var_kind(vid) == VarKind::w && e < 0) d -= e;
    return d;
}

int Mono::w_inverse_degree(int index) const {
    int e = exp(VarKind::w, index);
    return e < 0 ? -e : 0;
}

std::vector<int> Mono::exponents(VarKind kind, int n) const {
    std::vector<int> out(n, 0);
    for (const auto& [vid, e] : e_)
        if (var_kind(vid) == kind && var_index(vid) <= n)
            out[var_index(vid) - 1] = e;
    return out;
}

std::string Mono::str() const {
    if (e_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [vid, e] : e_) {
        if (!first) os << " ";
        first = false;
        os << var_name(vid);
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

LaurentPoly::LaurentPoly(RatFuncQ c) {
    if (!c.is_zero()) terms_.emplace(Mono(), std::move(c));
}

LaurentPoly LaurentPoly::term(Mono m, RatFuncQ c) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

void LaurentPoly::add_term(const Mono& m, const RatFuncQ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r(*this);
    r -= o;
    return r;
}

LaurentPoly mul_impl(const LaurentPoly& a, const LaurentPoly& b,
                     const std::vector<int>* wcaps) {
    LaurentPoly r;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Mono m = ma * mb;
            if (wcaps) {
                bool drop = false;
                for (size_t j = 0; j < wcaps->size(); ++j)
                    if (m.w_inverse_degree(static_cast<int>(j) + 1) > (*wcaps)[j]) {
                        drop = true;
                        break;
                    }
                if (drop) continue;
            }
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    return mul_impl(*this, o, nullptr);
}

LaurentPoly LaurentPoly::mul_truncated(const LaurentPoly& o,
                                       const std::vector<int>& wcaps) const {
    return mul_impl(*this, o, &wcaps);
}

LaurentPoly LaurentPoly::operator*(const RatFuncQ& c) const {
    LaurentPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, x] : terms_) r.terms_.emplace(m, x * c);
    return r;
}

RatFuncQ LaurentPoly::coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RatFuncQ(0) : it->second;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (!m.is_constant()) os << " * " << m.str();
    }
    return os.str();
}

LaurentPoly ratio_poch(const Mono& x, int e, int n) {
    LaurentPoly p = LaurentPoly::one();
    for (int k = 0; k < n; ++k)
        p *= LaurentPoly::one() - LaurentPoly::term(x, RatFuncQ::qpow(e + k));
    return p;
}

LaurentPoly dyson_z_product(const std::vector<int>& betas) {
    int s = static_cast<int>(betas.size());
    LaurentPoly p = LaurentPoly::one();
    for (int i = 1; i <= s; ++i) {
        for (int j = i + 1; j <= s; ++j) {
            Mono zij = Mono::var(VarKind::z, i) * Mono::var(VarKind::z, j, -1);
            Mono zji = Mono::var(VarKind::z, j) * Mono::var(VarKind::z, i, -1);
            p *= ratio_poch(zij, 0, betas[i - 1]);
            p *= ratio_poch(zji, 1, betas[j - 1]);
        }
    }
    return p;
}

LaurentPoly dyson_z_product_omit(const std::vector<int>& betas, int a) {
    int s = static_cast<int>(betas.size());
    LaurentPoly p = LaurentPoly::one();
    for (int i = 1; i <= s; ++i) {
        if (i == a) continue;
        for (int j = i + 1; j <= s; ++j) {
            if (j == a) continue;
            Mono zij = Mono::var(VarKind::z, i) * Mono::var(VarKind::z, j, -1);
            Mono zji = Mono::var(VarKind::z, j) * Mono::var(VarKind::z, i, -1);
            p *= ratio_poch(zij, 0, betas[i - 1]);
            p *= ratio_poch(zji, 1, betas[j - 1]);
        }
    }
    return p;
}

namespace {

// sum_{a=0}^{cap} q^{ba} (z_i/w_j)^a  — one geometric factor of
// (z_i/w_j;q)_{beta}^{-1}
LaurentPoly geometric_series(int i, int j, int b, int cap) {
    LaurentPoly p;
    Mono ratio = Mono::var(VarKind::z, i) * Mono::var(VarKind::w, j, -1);
    Mono m;
    for (int a = 0; a <= cap; ++a) {
        p += LaurentPoly::term(m, RatFuncQ::qpow(b * a));
        m = m * ratio;
    }
    return p;
}

}  // namespace

LaurentPoly expand_F(const std::vector<int>& betas, int t,
                     const std::vector<int>& wcaps) {
    if (static_cast<int>(wcaps.size()) < t)
        throw std::invalid_argument("expand_F: a cap is required per w variable");
    int s = static_cast<int>(betas.size());
    LaurentPoly p = dyson_z_product(betas);
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j <= t; ++j)
            for (int b = 0; b < betas[i - 1]; ++b)
                p = p.mul_truncated(geometric_series(i, j, b, wcaps[j - 1]), wcaps);
    return p;
}

LaurentPoly splitting_B(const std::vector<int>& betas, int a, int b) {
    int s = static_cast<int>(betas.size());
    int ea = 0, eb = 0;
    for (int k = 1; k < a; ++k) ea += betas[k - 1];
    for (int k = a + 1; k <= s; ++k) eb += betas[k - 1];
    RatFuncQ scalar = RatFuncQ::qpow(b * ea + (b + 1) * eb) *
                      (qpoch_rf(-b, b) * RatFuncQ(qpoch(1, betas[a - 1] - b - 1))).inverse();
    LaurentPoly p(scalar);
    for (int i = 1; i < a; ++i) {
        Mono r = Mono::var(VarKind::z, a) * Mono::var(VarKind::z, i, -1);
        p *= ratio_poch(r, 1 - betas[i - 1], b);
        p *= ratio_poch(r, b + 1, betas[a - 1] - b);
    }
    for (int j = a + 1; j <= s; ++j) {
        Mono r = Mono::var(VarKind::z, a) * Mono::var(VarKind::z, j, -1);
        p *= ratio_poch(r, -betas[j - 1], b + 1);
        p *= ratio_poch(r, b + 1, betas[a - 1] - b - 1);
    }
    return p;
}

std::vector<LaurentPoly> split_terms(const std::vector<int>& betas, int cap) {
    int s = static_cast<int>(betas.size());
    std::vector<int> wcaps{cap};
    std::vector<LaurentPoly> out;
    for (int a = 1; a <= s; ++a) {
        for (int b = 0; b < betas[a - 1]; ++b) {
            LaurentPoly g = splitting_B(betas, a, b) * dyson_z_product_omit(betas, a);
            g = g.mul_truncated(geometric_series(a, 1, b, cap), wcaps);
            out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<LaurentPoly> split_terms_cleared(const std::vector<int>& betas) {
    int s = static_cast<int>(betas.size());
    std::vector<LaurentPoly> out;
    for (int a = 1; a <= s; ++a) {
        for (int b = 0; b < betas[a - 1]; ++b) {
            LaurentPoly h = splitting_B(betas, a, b) * dyson_z_product_omit(betas, a);
            // (z_a/w_1;q)_{beta_a} with the b-th linear factor removed
            Mono r = Mono::var(VarKind::z, a) * Mono::var(VarKind::w, 1, -1);
            for (int k = 0; k < betas[a - 1]; ++k) {
                if (k == b) continue;
                h *= LaurentPoly::one() - LaurentPoly::term(r, RatFuncQ::qpow(k));
            }
            for (int i = 1; i <= s; ++i) {
                if (i == a) continue;
                Mono ri = Mono::var(VarKind::z, i) * Mono::var(VarKind::w, 1, -1);
                h *= ratio_poch(ri, 0, betas[i - 1]);
            }
            out.push_back(std::move(h));
        }
    }
    return out;
}

}  // namespace qmac
