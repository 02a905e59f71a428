#include "qmac/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qmac {

SymFunc SymFunc::term(Partition lam, RatFuncQ c) {
    SymFunc f;
    if (!c.is_zero()) f.terms_.emplace(std::move(lam), std::move(c));
    return f;
}

RatFuncQ SymFunc::coeff(const Partition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? RatFuncQ(0) : it->second;
}

int SymFunc::grade() const {
    int g = -1;
    for (const auto& [lam, c] : terms_) {
        if (g == -1) g = lam.weight();
        else if (lam.weight() != g)
            throw std::domain_error("SymFunc::grade: not homogeneous");
    }
    return g;
}

void SymFunc::add_term(const Partition& lam, const RatFuncQ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(lam, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    for (const auto& [lam, c] : o.terms_) add_term(lam, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    for (const auto& [lam, c] : o.terms_) add_term(lam, -c);
    return *this;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    SymFunc r(*this);
    r += o;
    return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
    SymFunc r(*this);
    r -= o;
    return r;
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
    SymFunc r;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_)
            r.add_term(a.set_union(b), ca * cb);
    return r;
}

SymFunc SymFunc::operator*(const RatFuncQ& c) const {
    SymFunc r;
    if (c.is_zero()) return r;
    for (const auto& [lam, x] : terms_) r.terms_.emplace(lam, x * c);
    return r;
}

std::string SymFunc::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (!lam.is_zero()) os << " p[" << lam.str() << "]";
    }
    return os.str();
}

RatFuncQ p_weight(int n, int beta) {
    return RatFuncQ(PolyQ::one() - PolyQ::qpow(n),
                    PolyQ::one() - PolyQ::qpow(n * beta));
}

SymFunc qn(int n, int beta) {
    if (n < 0) return SymFunc();
    static std::map<std::pair<int, int>, SymFunc> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, beta);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    // Q_n = (1/n) sum_{m=1}^n (1-q^{m beta})/(1-q^m) p_m Q_{n-m}
    std::vector<SymFunc> q{SymFunc::one()};
    for (int k = 1; k <= n; ++k) {
        SymFunc acc;
        for (int m = 1; m <= k; ++m) {
            RatFuncQ c = p_weight(m, beta).inverse();
            for (const auto& [lam, x] : q[k - m].terms()) {
                std::vector<int> parts = lam.parts();
                parts.push_back(m);
                acc.add_term(Partition(sorted_desc(std::move(parts))), x * c);
            }
        }
        q.push_back(acc * RatFuncQ(Rat(1, k)));
    }
    for (int k = 0; k <= n; ++k) cache.emplace(std::make_pair(k, beta), q[k]);
    return q[n];
}

SymFunc g_of(const Partition& lam, int beta) {
    SymFunc f = SymFunc::one();
    for (int part : lam.parts()) f = f * qn(part, beta);
    return f;
}

RatFuncQ scalar_product(const SymFunc& f, const SymFunc& g, int beta) {
    RatFuncQ s(0);
    for (const auto& [lam, cf] : f.terms()) {
        RatFuncQ cg = g.coeff(lam);
        if (cg.is_zero()) continue;
        RatFuncQ w(Rat(z_lambda(lam)));
        for (int part : lam.parts()) w *= p_weight(part, beta);
        s += cf * cg * w;
    }
    return s;
}

SymFunc adjoint_apply(const SymFunc& f, const SymFunc& g, int beta) {
    SymFunc out;
    for (const auto& [kap, cf] : f.terms()) {
        SymFunc cur = g;
        for (int n : kap.parts()) {
            // p_n^* = n (1-q^n)/(1-q^{n beta}) d/dp_n
            RatFuncQ w = p_weight(n, beta) * RatFuncQ(n);
            SymFunc next;
            for (const auto& [mu, c] : cur.terms()) {
                int m = mu.mult(n);
                if (m == 0) continue;
                std::vector<int> parts = mu.parts();
                parts.erase(std::find(parts.begin(), parts.end(), n));
                next.add_term(Partition(std::move(parts)), c * w * RatFuncQ(m));
            }
            cur = next;
        }
        out += cur * cf;
    }
    return out;
}

SymFunc lowering_apply(const LaurentPoly& L, const std::vector<int>& lam, int beta) {
    int s = static_cast<int>(lam.size());
    SymFunc out;
    for (const auto& [m, c] : L.terms()) {
        for (const auto& [vid, e] : m.factors()) {
            (void)e;
            if (var_kind(vid) != VarKind::d || var_index(vid) > s)
                throw std::invalid_argument("lowering_apply: non-D variable in operator");
        }
        std::vector<int> shift = m.exponents(VarKind::d, s);
        SymFunc prod = SymFunc::one();
        bool zero = false;
        for (int i = 0; i < s && !zero; ++i) {
            int sub = lam[i] - shift[i];
            if (sub < 0) zero = true;
            else prod = prod * qn(sub, beta);
        }
        if (!zero) out += prod * c;
    }
    return out;
}

std::vector<RatFuncQ> solve_linear(std::vector<std::vector<RatFuncQ>> A,
                                   std::vector<RatFuncQ> b) {
    size_t n = A.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("solve_linear: singular matrix");
        std::swap(A[piv], A[col]);
        std::swap(b[piv], b[col]);
        RatFuncQ inv = A[col][col].inverse();
        for (size_t j = col; j < n; ++j) A[col][j] *= inv;
        b[col] *= inv;
        for (size_t row = 0; row < n; ++row) {
            if (row == col || A[row][col].is_zero()) continue;
            RatFuncQ f = A[row][col];
            for (size_t j = col; j < n; ++j) A[row][j] -= f * A[col][j];
            b[row] -= f * b[col];
        }
    }
    return b;
}

SymFunc macdonald_gs(const Partition& lam, int beta) {
    static std::map<std::pair<Partition, int>, SymFunc> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find({lam, beta}); it != cache.end()) return it->second;
    }
    std::vector<Partition> higher;
    for (const auto& p : partitions_of(lam.weight()))
        if (dominance_cmp(p, lam) == DomCmp::greater) higher.push_back(p);
    SymFunc result = g_of(lam, beta);
    if (!higher.empty()) {
        size_t n = higher.size();
        std::vector<SymFunc> gmu;
        gmu.reserve(n);
        for (const auto& p : higher) gmu.push_back(g_of(p, beta));
        SymFunc glam = result;
        std::vector<std::vector<RatFuncQ>> A(n, std::vector<RatFuncQ>(n));
        std::vector<RatFuncQ> b(n);
        for (size_t r = 0; r < n; ++r) {
            for (size_t c = 0; c < n; ++c) A[r][c] = scalar_product(gmu[c], gmu[r], beta);
            b[r] = -scalar_product(glam, gmu[r], beta);
        }
        std::vector<RatFuncQ> d = solve_linear(std::move(A), std::move(b));
        for (size_t c = 0; c < n; ++c) result += gmu[c] * d[c];
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(lam, beta), result);
    return result;
}

RatFuncQ norm_closed(const Partition& lam, int beta) {
    Partition conj = lam.conjugate();
    RatFuncQ r(1);
    for (int i = 1; i <= lam.length(); ++i) {
        for (int j = 1; j <= lam.part(i); ++j) {
            int arm = lam.part(i) - j, leg = conj.part(j) - i;
            r *= RatFuncQ(PolyQ::one() - PolyQ::qpow(arm + beta * (leg + 1)),
                          PolyQ::one() - PolyQ::qpow(arm + 1 + beta * leg));
        }
    }
    return r;
}

SymFunc schur_jt(const Partition& lam) {
    int l = lam.length();
    if (l == 0) return SymFunc::one();
    std::vector<int> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    SymFunc det;
    // Leibniz expansion; l <= 6 in practice
    std::vector<int> idx = perm;
    do {
        int inv = 0;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (idx[i] > idx[j]) ++inv;
        SymFunc prod = SymFunc::one();
        bool zero = false;
        for (int i = 0; i < l && !zero; ++i) {
            int n = lam.part(i + 1) - (i + 1) + (idx[i] + 1);
            if (n < 0) zero = true;
            else prod = prod * qn(n, 1);
        }
        if (!zero) {
            if (inv % 2) det -= prod;
            else det += prod;
        }
    } while (std::next_permutation(idx.begin(), idx.end()));
    return det;
}

std::map<Partition, Rat> limit_sym(const SymFunc& f) {
    std::map<Partition, Rat> out;
    for (const auto& [lam, c] : f.terms()) {
        Rat v = c.limit_at_one();
        if (v != 0) out.emplace(lam, v);
    }
    return out;
}

SymFunc from_rational(const std::map<Partition, Rat>& f) {
    SymFunc out;
    for (const auto& [lam, c] : f) out.add_term(lam, RatFuncQ(c));
    return out;
}

std::map<Partition, RatFuncQ> to_g_basis(const SymFunc& f, int beta) {
    std::map<Partition, RatFuncQ> out;
    if (f.is_zero()) return out;
    int n = f.grade();
    if (n == 0) {
        out.emplace(Partition(), f.coeff(Partition()));
        return out;
    }
    std::vector<Partition> ps = partitions_of(n);
    size_t m = ps.size();
    std::vector<std::vector<RatFuncQ>> A(m, std::vector<RatFuncQ>(m));
    std::vector<RatFuncQ> b(m);
    for (size_t c = 0; c < m; ++c) {
        SymFunc g = g_of(ps[c], beta);
        for (size_t r = 0; r < m; ++r) A[r][c] = g.coeff(ps[r]);
    }
    for (size_t r = 0; r < m; ++r) b[r] = f.coeff(ps[r]);
    std::vector<RatFuncQ> x = solve_linear(std::move(A), std::move(b));
    for (size_t c = 0; c < m; ++c)
        if (!x[c].is_zero()) out.emplace(ps[c], x[c]);
    return out;
}

std::string g_basis_str(const std::map<Partition, RatFuncQ>& g) {
    if (g.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [lam, c] : g) {
        std::string name = lam.is_zero() ? "1" : "g[" + lam.str() + "]";
        std::string piece;
        if (c.is_one()) piece = name;
        else if ((-c).is_one()) piece = "-" + name;
        else piece = "(" + c.str() + ") " + name;
        if (first) {
            os << piece;
            first = false;
        } else if (piece[0] == '-') {
            os << " - " << piece.substr(1);
        } else {
            os << " + " << piece;
        }
    }
    return os.str();
}

}  // namespace qmac
