/** @file brauer.hpp
 *  @brief Graded division algebras and their invariants (T, beta), related triples of gradings on
 *         End_F(S), and checks of the Brauer relations among them.
 */
#pragma once

#include "d4/triality.hpp"

#include <map>

namespace d4 {

/// A G-graded algebra of square matrices given by a homogeneous basis.
struct MatrixGrading {
    AbGroup G;
    std::vector<Matrix> basis;
    std::vector<GroupElem> deg;
    Matrix unit;

    int n() const { return unit.rows(); }
    int dim() const { return static_cast<int>(basis.size()); }
    std::vector<Matrix> component(const GroupElem& g) const;
};

/// Products of basis elements land in the component of the summed degree.
Report verify_matrix_grading(const MatrixGrading& A);

/// Support T of a graded division algebra and its commutation bicharacter X_s X_t = beta(s,t) X_t X_s.
struct DivisionParams {
    AbGroup G;
    std::vector<GroupElem> T;  ///< sorted
    std::map<std::pair<GroupElem, GroupElem>, Cyclo> beta;

    Cyclo at(const GroupElem& s, const GroupElem& t) const { return beta.at({s, t}); }
    bool trivial() const { return T.size() == 1; }
    /// T as an abstract group.
    AbGroup T_group() const;
    /// Every element of T has order at most 2.
    bool elementary_2() const;
    /// beta takes values in {1, -1}.
    bool sign_valued() const;
    /// The radical {s : beta(s, t) = 1 for all t}.
    std::vector<GroupElem> radical() const;
};
bool operator==(const DivisionParams& a, const DivisionParams& b);
std::string describe(const DivisionParams& p);

/// Twisted group algebra F^tau T in its left regular representation, graded by T.
/// beta_gens[i][j] = beta(e_i, e_j) on the generators of T; tau is the bilinear cocycle
/// prod_{i > j} beta(e_i, e_j)^{s_i t_j}. Throws if beta is not an alternating bicharacter.
MatrixGrading graded_division_from_pair(const AbGroup& T, const std::vector<std::vector<Cyclo>>& beta_gens);

/// A primitive idempotent of the semisimple algebra spanned by basis (containing unit).
/// `variant` changes the order in which splitting elements are tried.
Matrix primitive_idempotent(const std::vector<Matrix>& basis, const Matrix& unit, int variant = 0);

/// (T, beta) of D = eps A eps for a primitive idempotent eps of A_e; throws if D is not graded division.
DivisionParams division_params(const MatrixGrading& A, int variant = 0);

/// Gradings Gamma_1, Gamma_2, Gamma_3 on End_F(S) making the three projections of tri(S) graded.
struct RelatedTriple {
    std::array<MatrixGrading, 3> gamma;
    Matrix gram;  ///< Gram matrix of n, for the adjoint involution
};
/// Propagates degrees from the images of the projections; throws on inconsistency.
RelatedTriple related_triple(const TriAlgebra& T, const Grading& gT);
/// sigma_n (a -> B^-1 a^T B) preserves degrees.
Report verify_adjoint_compatible(const MatrixGrading& A, const Matrix& gram);

/// The same grading with the free part of G projected away.
MatrixGrading torsion_image(const MatrixGrading& A);

/// Invertible u_chi with u a = chi(deg a) a u for every basis element a.
Matrix character_unit(const MatrixGrading& A, const Character& chi);
/// The scalar c with u_chi1 u_chi2 = c u_chi2 u_chi1.
Cyclo commutation_factor(const MatrixGrading& A, const Character& chi1, const Character& chi2);

struct BrauerCheck {
    std::array<DivisionParams, 3> params;
    Report report;
};
/// [E_i]^2 = 1 (T_i elementary 2-group, beta_i = +-1) and c_1 = c_2 c_3 on all character pairs.
/// Free parts of the grading group are projected away first.
BrauerCheck verify_brauer_relations(const RelatedTriple& t);

/// For a graded division algebra D with centre of support H: the minimal central idempotents
/// number |H|, the components are isomorphic G/H-graded division algebras, and each has
/// invariants (T/H, beta induced by beta).
Report check_beta_bar(const MatrixGrading& D);

}  // namespace d4
