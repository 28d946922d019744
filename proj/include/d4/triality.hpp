/** @file triality.hpp
 *  @brief The triality Lie algebra tri(S) of a symmetric composition algebra and its gradings.
 */
#pragma once

#include "d4/cyclic.hpp"

#include <array>

namespace d4 {

/// (d1, d2, d3) with d1(x.y) = d2(x).y + x.d3(y).
struct TriTriple {
    std::array<Matrix, 3> d;
};

/// Basis of so(S, n) as B^{-1}(E_pq - E_qp), p < q, where B is the Gram matrix of n.
std::vector<Matrix> so_basis(const CompositionAlgebra& S);
/// Coordinates of d in so_basis(S); nullopt if d is not skew.
std::optional<Vec> so_coords(const CompositionAlgebra& S, const Matrix& d);

Report verify_triple(const CompositionAlgebra& S, const TriTriple& t);
/// (d1, d2, d3) -> (d3, d1, d2)
TriTriple cyclic_shift(const TriTriple& t);
/// (x n(y,.) - y n(x,.), (r_x l_y - r_y l_x)/2, (l_x r_y - l_y r_x)/2) for a para-Hurwitz S.
TriTriple spanning_triple(const CompositionAlgebra& S, const Vec& x, const Vec& y);
TriTriple bracket(const TriTriple& a, const TriTriple& b);

struct TriAlgebra {
    CompositionAlgebra S;
    std::vector<Matrix> so;          ///< so_basis(S)
    std::vector<TriTriple> basis;    ///< first component of basis[k] is so[k]
    AlgebraPtr lie;                  ///< sort "lie", space "tri", map "bracket"

    int dim() const { return static_cast<int>(basis.size()); }
    TriTriple element(const Vec& c) const;
    /// Coordinates read off the first component; throws if t is not in tri(S).
    Vec coords(const TriTriple& t) const;
};

/// Solves the defining identity on so(S,n)^3 over all basis pairs. Throws unless the kernel is 28-dimensional.
TriAlgebra tri_algebra(const CompositionAlgebra& S);

/// Antisymmetry and Jacobi identity on all basis triples of a Lie algebra given by structure constants.
Report verify_lie(const StructAlgebra& lie);
/// ad matrices of the basis elements (column j = [e_i, e_j]).
std::vector<Matrix> ad_matrices(const StructAlgebra& lie);
Matrix killing_form(const StructAlgebra& lie);

struct RootDatum {
    std::vector<Vec> cartan;                   ///< tri coordinates of the Cartan basis h_1..h_4
    std::vector<std::array<int, 4>> roots;     ///< nonzero roots
    std::vector<Vec> root_vectors;             ///< one eigenvector per root (tri coordinates)
    std::vector<std::array<int, 4>> simple;
    std::vector<std::vector<int>> cartan_matrix;
    Cyclo killing_det;
};

/// Cartan subalgebra from a hyperbolic pairing of the basis of S (Gram matrix with one isotropic
/// partner per basis vector); h_p acts by +1 and -1 on the p-th pair.
RootDatum root_datum(const TriAlgebra& T);
/// True if the Cartan matrix is of type D4 up to relabeling.
bool is_d4_cartan_matrix(const std::vector<std::vector<int>>& A);

/// Block-diagonal 24x24 matrix (component coordinates) acting by d_{c+1} on component c.
Matrix der_of_triple(const TriTriple& t);
/// L-linear derivations of (V, *) that are skew for b_Q, as 24x24 matrices in component coordinates.
std::vector<Matrix> der_cyclic(const CyclicAlgebra& V);

/// Grading on tri induced by a grading on V (structure of V.structure_xi()).
Grading induce_tri_grading(const TriAlgebra& T, const CyclicAlgebra& V, const Grading& gV);
/// tri_g V_a in V_{g+a} for every pair of homogeneous basis elements.
Report verify_graded_module(const TriAlgebra& T, const CyclicAlgebra& V, const Grading& gV, const Grading& gT);

/// The group C = {(e1,e2,e3) : e_i = +-1, e1 e2 e3 = 1}, identity first.
std::vector<LElem> center_signs();
/// Regrading of V with components l V_g.
Grading twist_by_center(const CyclicAlgebra& V, const Grading& gV, const LElem& l);
std::vector<Grading> center_orbit(const CyclicAlgebra& V, const Grading& gV);
/// True if the two gradings have the same component subspaces for every degree of every sort.
bool same_components(const Grading& a, const Grading& b);

}  // namespace d4
