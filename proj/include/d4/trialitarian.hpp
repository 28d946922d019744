/** @file trialitarian.hpp
 *  @brief E = End_L(V) with its involution, the even Clifford algebra, the maps alpha and kappa,
 *         the Lie algebra L(E), induced gradings on E and Type detection.
 */
#pragma once

#include "d4/triality.hpp"

namespace d4 {

/// Element of E = End_L(V) as three 8x8 blocks acting on the components of V.
using EElem = std::array<Matrix, 3>;

struct EndAlgebra {
    CyclicAlgebra V;
    Matrix B, Binv;  ///< Gram matrix of n and its inverse
    /// Basis xi^k E_ij (index 64k + 8i + j) acting by s_j (x) xi^m -> s_i (x) xi^{m+k};
    /// map "product" and the involution sigma.
    AlgebraPtr alg;

    int dim() const { return 192; }
    EElem zero() const;
    EElem identity() const;
    EElem from_xi(const Vec& c) const;
    Vec to_xi(const EElem& a) const;
    /// Coordinates 64c + 8i + j of E_ij in block c.
    Vec to_comp(const EElem& a) const;
    EElem from_comp(const Vec& c) const;
    EElem sigma(const EElem& a) const;
    EElem mul(const EElem& a, const EElem& b) const;
    /// Block diagonal 24x24 matrix in component coordinates of V.
    Matrix as_matrix(const EElem& a) const;
    /// Throws if m is not L-linear.
    EElem from_matrix(const Matrix& m) const;
    Vec apply(const EElem& a, const Vec& x) const;
    /// The operator z -> x b_Q(y, z).
    EElem phi(const Vec& x, const Vec& y) const;
    EElem scalar(const LElem& l) const;
};

EndAlgebra end_algebra(const CyclicAlgebra& V);
/// sigma^2 = id, sigma(ab) = sigma(b) sigma(a), b_Q(ax, y) = b_Q(x, sigma(a) y).
Report verify_end_algebra(const EndAlgebra& E);

/// Cl_0(V, Q) = prod_c Cl_0(V_c, mu_c n) with monomials in an orthogonal basis f of (S, n).
/// Index 128c + position of the even mask.
struct CliffordEven {
    CyclicAlgebra V;
    Matrix f, finv;                     ///< columns: orthogonal basis of S
    std::array<std::vector<Cyclo>, 3> q;  ///< q[c][p] = Q(f_p in component c)
    std::vector<unsigned> masks;        ///< even subsets of {0..7}
    std::vector<int> position;          ///< mask -> index in masks, or -1

    int dim() const { return 384; }
    Vec one() const;
    Vec scalar(const LElem& l) const;
    Vec mul(const Vec& a, const Vec& b) const;
    /// x . y for x, y in V (component coordinates).
    Vec pair(const Vec& x, const Vec& y) const;
    /// The standard involution (reversal of monomials).
    Vec reversal(const Vec& a) const;
    std::string label(int k) const;
};

CliffordEven clifford_even(const CyclicAlgebra& V);
/// Basis of the centre of Cl_0 as an F-algebra.
std::vector<Vec> clifford_center(const CliffordEven& C);

/// alpha: Cl_0 -> rho E x rho^2 E, extended from x -> [[0, l_x], [r_x, 0]].
struct AlphaMap {
    std::vector<std::pair<EElem, EElem>> images;  ///< one per Cl_0 basis element
    std::pair<EElem, EElem> apply(const Vec& u) const;
};
AlphaMap alpha(const CliffordEven& C, const EndAlgebra& E);
/// Multiplicativity (low degree exhaustively, random above), bijectivity, involutions,
/// alpha(x.y) = (l_x r_y, r_x l_y) and alpha(x.x) = (rho(Q(x)), rho^2(Q(x))).
Report verify_alpha(const CliffordEven& C, const EndAlgebra& E, const AlphaMap& A, std::uint64_t seed = 1);

/// kappa(x b_Q(y, .)) = x . y, as a 384 x 192 matrix on component coordinates of E.
struct KappaMap {
    Matrix m;
    Vec apply(const EndAlgebra& E, const EElem& a) const;
};
KappaMap kappa(const CliffordEven& C, const EndAlgebra& E);
/// Consistency on random rank-one operators, kappa sigma = reversal kappa, and a non-multiplicativity witness.
Report verify_kappa(const CliffordEven& C, const EndAlgebra& E, const KappaMap& K, std::uint64_t seed = 1);

/// Everything built from one cyclic composition algebra.
struct Trialitarian {
    EndAlgebra E;
    CliffordEven C;
    AlphaMap A;
    KappaMap K;
};
Trialitarian trialitarian(const CyclicAlgebra& V);

/// {x in Skew(E, sigma) : alpha(kappa(x)) = (c x, c x)} for the constant c giving dimension 28.
struct LieOfE {
    Cyclo c;
    std::vector<EElem> basis;
    std::vector<std::pair<Cyclo, int>> tried;  ///< (constant, solution dimension)
};
LieOfE lie_of_E(const Trialitarian& T);

/// E_g = {a : a V_h in V_{g+h}}; basis-aligned when every xi^k E_ij is homogeneous.
Grading induce_E_grading(const EndAlgebra& E, const Grading& gV);
/// alpha(kappa(E_g)) lies in E_g x E_g.
Report verify_alpha_kappa_degrees(const Trialitarian& T, const Grading& gE);

struct TypeInfo {
    int type = 1;                 ///< 1, 2 or 3
    std::optional<GroupElem> h;   ///< degree of xi (Type III) or of the nontrivial component (Type II)
};
TypeInfo detect_type(const EndAlgebra& E, const Grading& gE);

}  // namespace d4
