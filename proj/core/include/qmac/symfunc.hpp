/**
 * @file symfunc.hpp
 * @brief The algebra Lambda_F in the power-sum basis at t = q^beta.
 *
 * A SymFunc maps partitions to Q(q) coefficients of p_lambda. The scalar
 * product is diagonal here, which is why p is the internal basis; the
 * g-basis (products of one-row functions) is reached by a linear solve.
 */
#pragma once

#include "qmac/laurent.hpp"
#include "qmac/partition.hpp"
#include "qmac/ratfunc.hpp"

namespace qmac {

class SymFunc {
public:
    SymFunc() = default;
    explicit SymFunc(RatFuncQ c) {
        if (!c.is_zero()) terms_.emplace(Partition(), std::move(c));
    }
    static SymFunc one() { return SymFunc(RatFuncQ(1)); }
    static SymFunc p(const Partition& lam) { return term(lam, RatFuncQ(1)); }
    static SymFunc term(Partition lam, RatFuncQ c);

    const std::map<Partition, RatFuncQ>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    RatFuncQ coeff(const Partition& lam) const;
    // homogeneous degree; throws if mixed-weight, -1 for zero
    int grade() const;

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator*(const SymFunc& o) const;  // p-basis: multiset union
    SymFunc operator*(const RatFuncQ& c) const;
    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    bool operator==(const SymFunc& o) const { return terms_ == o.terms_; }

    void add_term(const Partition& lam, const RatFuncQ& c);

    std::string str() const;  // "(c) p[2,1] + ..." in partition order

private:
    std::map<Partition, RatFuncQ> terms_;
};

// <p_n, p_n>-weight of one part: (1 - q^n)/(1 - q^{n beta})
RatFuncQ p_weight(int n, int beta);

// One-row Macdonald function Q_n(q, q^beta); Q_0 = 1, Q_{n<0} = 0. Memoized.
SymFunc qn(int n, int beta);
// g_lambda = prod Q_{lambda_i}
SymFunc g_of(const Partition& lam, int beta);

RatFuncQ scalar_product(const SymFunc& f, const SymFunc& g, int beta);

// f^*.g with <f^*.u, v> = <u, f v>
SymFunc adjoint_apply(const SymFunc& f, const SymFunc& g, int beta);

// Lowering-operator action: L a Laurent polynomial in D_1..D_s applied to
// Q_{lam_1}...Q_{lam_s} (entries of lam may be any integers).
SymFunc lowering_apply(const LaurentPoly& L, const std::vector<int>& lam, int beta);

// Gram-Schmidt Macdonald function (unitriangular in g, orthogonal to higher
// g's); the linear system is uniquely solvable. Memoized.
SymFunc macdonald_gs(const Partition& lam, int beta);

// Norm product formula over the boxes of lambda.
RatFuncQ norm_closed(const Partition& lam, int beta);

// Schur function via Jacobi-Trudi at beta = 1.
SymFunc schur_jt(const Partition& lam);

// Coefficient-wise q -> 1 limit; coefficients become rationals.
std::map<Partition, Rat> limit_sym(const SymFunc& f);
// Embed a rational-coefficient function back into SymFunc (constant coeffs).
SymFunc from_rational(const std::map<Partition, Rat>& f);

// Expansion of a homogeneous f over the g-basis of its degree.
std::map<Partition, RatFuncQ> to_g_basis(const SymFunc& f, int beta);
// Render a g-basis expansion as text: "g[1,1] - g[2]".
std::string g_basis_str(const std::map<Partition, RatFuncQ>& g);

// Dense Gaussian elimination over Q(q); returns the solution of A x = b.
// Throws std::domain_error if A is singular.
std::vector<RatFuncQ> solve_linear(std::vector<std::vector<RatFuncQ>> A,
                                   std::vector<RatFuncQ> b);

}  // namespace qmac
