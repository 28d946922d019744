/** @file classify.hpp
 *  @brief Type III gradings on cyclic composition algebras: constructors, rank, the similarity
 *         decision procedure, witness (anti-)isomorphisms and the three fine gradings.
 */
#pragma once

#include "d4/triality.hpp"

#include <memory>

namespace d4 {

/// Parameters of one Type III grading. Only the fields of variant r are used.
struct TypeIIIParams {
    int r = 8;                      ///< 0, 1, 2, 4 or 8
    AbGroup G;
    std::vector<GroupElem> K;       ///< r=0: two generators of K = Z_3^2; r=1: three generators of K = Z_2^3
    GroupElem h;
    std::array<GroupElem, 3> gamma; ///< r=2
    GroupElem g;                    ///< r=4
    int delta = 1;                  ///< r=0: +1 or -1
    char t = 'p';                   ///< r=8: 'p' para-Cayley, 'o' Okubo
};

std::string describe(const TypeIIIParams& p);
/// Throws std::invalid_argument naming the failed precondition.
void check_params(const TypeIIIParams& p);

struct GradedCyclic {
    std::shared_ptr<const CyclicAlgebra> V;
    Grading gamma;
};

/// Gamma_S (x) Gamma_L with S and Gamma_S chosen by the variant.
GradedCyclic build(const TypeIIIParams& p);
/// Shared model algebra: 'p' para(zorn), 'd' para(doubled), 'o' Okubo.
std::shared_ptr<const CyclicAlgebra> model(char kind);
/// The same grading on V^op.
GradedCyclic opposite(const GradedCyclic& a);

/// dim V_e; throws unless it lies in {0, 1, 2, 4, 8}.
int rank(const Grading& g);

struct SimilarityVerdict {
    bool similar = false;
    std::string trace;
};
/// Decides similarity of the two parameter tuples; throws on group mismatch.
SimilarityVerdict similar_params(const TypeIIIParams& a, const TypeIIIParams& b);

/// Degree of the element of L spanning the omega-eigenspace of the algebra's own rho
/// (xi for V, xi^2 for V^op).
GroupElem distinguished_h(const GradedCyclic& a);
/// +1 if x * y = 0 for x, y homogeneous of degrees lifting the canonical basis of KH/H, -1 if y * x = 0.
int okubo_orientation(const GradedCyclic& a);
/// Orientation of the parameters (delta corrected by the determinant of K against the canonical basis).
int okubo_orientation(const TypeIIIParams& p);
/// The complete invariant {(delta, h), (-delta, h^-1)} as a sorted pair.
std::array<std::pair<int, GroupElem>, 2> orientation_invariant(const AbGroup& G, int delta, const GroupElem& h);

/// (phi_1, phi_0): phi_1 a 24x24 matrix in component coordinates, phi_0(l)_c = l_{pi(c)}.
struct IsoMap {
    Matrix phi1;
    std::array<int, 3> phi0{0, 1, 2};
    bool opposite = false;  ///< the source is V_A^op
};
Report verify_graded_iso(const IsoMap& m, const GradedCyclic& A, const GradedCyclic& B);

struct Witness {
    std::string kind;
    TypeIIIParams source, target;
    GradedCyclic A, B;  ///< A already replaced by its opposite when m.opposite is set
    IsoMap map;
    Report report;
};
/// kind: rank1_h_flip, rank4_h_flip, rank2_h_flip, rank8_h_flip, rank2_shift, rank0_flip.
Witness witness_map(const std::string& kind, const TypeIIIParams& p);
/// x -> l x from Gamma to l.Gamma for l in the centre orbit.
IsoMap center_map(const LElem& l);

struct FineTypeIII {
    TypeIIIParams params;
    GradedCyclic graded;
    UniversalGroup universal;
};
/// kind: cartan, z2cubed or okubo.
FineTypeIII fine_typeIII(const std::string& kind);

/// Elements of G, with free coordinates in [-bound, bound].
std::vector<GroupElem> box_elements(const AbGroup& G, int bound = 1);
/// All valid tuples of rank r over the elements of box_elements(G, bound). For r=0 and r=1 the
/// generators of K are the canonical basis of each subgroup; r=0 also lists the swapped basis.
std::vector<TypeIIIParams> enumerate_params(const AbGroup& G, int r, int bound = 1);

}  // namespace d4
