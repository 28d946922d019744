/** @file cyclic.hpp
 *  @brief Cyclic composition algebras over L = F x F x F in the triple model.
 */
#pragma once

#include "d4/composition.hpp"

#include <array>

namespace d4 {

using LElem = std::array<Cyclo, 3>;

/// L = F^3 with rho the cyclic shift rho(l)_c = l_{c+1}.
struct CubicEtale {
    static LElem one() { return {Cyclo(1), Cyclo(1), Cyclo(1)}; }
    static LElem scalar(const Cyclo& a) { return {a, a, a}; }
    static LElem xi();
    static LElem rho(const LElem& l, int power = 1);
    static LElem tau(const LElem& l);  ///< swap of the last two components
    static LElem mul(const LElem& a, const LElem& b);
    static LElem add(const LElem& a, const LElem& b);
    static LElem inverse(const LElem& a);
    static LElem sharp(const LElem& l) { return mul(rho(l, 1), rho(l, 2)); }
    static LElem norm(const LElem& l) { return mul(l, sharp(l)); }
    static Cyclo trace(const LElem& l) { return l[0] + l[1] + l[2]; }
    /// coordinates in the basis 1, xi, xi^2
    static Vec to_xi(const LElem& l);
    static LElem from_xi(const Vec& c);
};

/// V = S^3 (F-dimension 24, index 8c + i) with
/// (x*y)_c = lambda_c (x_{c+1} . y_{c+2}) and Q(x)_c = mu_c n(x_c); the opposite flag swaps arguments.
class CyclicAlgebra {
public:
    CompositionAlgebra S;
    bool op = false;
    LElem lambda = CubicEtale::one();
    LElem mu = CubicEtale::one();

    CyclicAlgebra() = default;
    CyclicAlgebra(const CyclicAlgebra& o) : S(o.S), op(o.op), lambda(o.lambda), mu(o.mu) {}
    CyclicAlgebra& operator=(const CyclicAlgebra& o)
    {
        S = o.S;
        op = o.op;
        lambda = o.lambda;
        mu = o.mu;
        xi_cache_.reset();
        return *this;
    }

    int dim() const { return 3 * S.dim(); }
    int twist() const { return op ? 2 : 1; }
    Vec mul(const Vec& x, const Vec& y) const;
    LElem bQ(const Vec& x, const Vec& y) const;
    LElem Q(const Vec& x) const;
    Vec act(const LElem& l, const Vec& x) const;

    /// s_i (x) xi^j has index 8j + i; its triple is (s_i, w^j s_i, w^{2j} s_i).
    Vec from_xi(const Vec& v) const;
    Vec to_xi(const Vec& x) const;
    Matrix xi_to_comp() const;
    /// Sorts V (24) and L (3) in the xi bases; maps product, bQ, action, L.
    /// Cached; copies start with an empty cache.
    AlgebraPtr structure_xi() const;

private:
    mutable AlgebraPtr xi_cache_;
};

CyclicAlgebra cyclic_from_symmetric(const CompositionAlgebra& S);
CyclicAlgebra opposite(const CyclicAlgebra& V);
CyclicAlgebra scale(const CyclicAlgebra& V, const LElem& lambda);
Report verify_cyclic_axioms(const CyclicAlgebra& V, std::uint64_t seed = 1);

/// Checks that x -> l x is an isomorphism from scale(V, l^{-1} l^#) to V with Q(lx) = l^2 Q(x).
Report verify_self_similitude(const CyclicAlgebra& V, const LElem& l);

struct ParaSubalgebra {
    Matrix basis;                ///< 24 x 8, component coordinates
    CompositionAlgebra algebra;  ///< restricted product and norm, para-unit recorded as unit
    Report report;
};
ParaSubalgebra para_subalgebra_from_idempotent(const CyclicAlgebra& V, const Vec& eps);

/// Gamma_S (x) Gamma_L on V in the xi basis: deg(s_i (x) xi^j) = deg(s_i) + j h, deg(xi^j) = j h.
Grading tensor_grading(const CyclicAlgebra& V, const Grading& gamma_S, const GroupElem& h);

}  // namespace d4
