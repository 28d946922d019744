/** @file albert.hpp
 *  @brief The Albert algebra J = L + V of a cyclic composition algebra: cubic norm structure,
 *         Jordan product and the grading J_g = L_g + V_g.
 */
#pragma once

#include "d4/cyclic.hpp"

#include <cstdint>

namespace d4 {

struct AlbertElem {
    LElem l;
    Vec v;  ///< component coordinates of V
};

/// Coordinates of J: L in the basis 1, xi, xi^2 (indices 0..2), then V in its xi basis (3..26).
class AlbertAlgebra {
public:
    std::shared_ptr<const CyclicAlgebra> V;
    AlgebraPtr alg;  ///< sort "jordan": space J, maps "product", "trace" (bilinear T), "cross"

    static constexpr int kDim = 27;
    int dim() const { return kDim; }
    Vec unit() const;
    AlbertElem unpack(const Vec& x) const;
    Vec pack(const AlbertElem& e) const;

    Cyclo norm(const Vec& x) const;
    Cyclo trace(const Vec& x) const;
    Cyclo trace(const Vec& x, const Vec& y) const;
    Cyclo quadratic_trace(const Vec& x) const;  ///< S(X) = (T(X)^2 - T(X^2)) / 2
    Vec sharp(const Vec& x) const;
    /// X x Y = (X+Y)^# - X^# - Y^#
    Vec cross(const Vec& x, const Vec& y) const;
    /// (X x Y + T(X) Y + T(Y) X - (T(X) T(Y) - T(X, Y)) 1) / 2
    Vec product_formula(const Vec& x, const Vec& y) const;
    /// Product through the structure constants.
    Vec mul(const Vec& x, const Vec& y) const;
};

/// Builds the structure constants from the norm data; throws if b_Q(v, v*v) is not a scalar.
AlbertAlgebra albert(std::shared_ptr<const CyclicAlgebra> V);

/// L is a subalgebra with its own product, V is T-orthogonal to L, T is nondegenerate,
/// N extends the norm of L, and the structure constants agree with the product formula.
Report verify_albert_structure(const AlbertAlgebra& A);

/// Commutativity, unit and (X^2 Y) X = X^2 (Y X) on all basis pairs of the "product" map.
Report verify_jordan(const StructAlgebra& J, const Vec& unit);

/// X^3 - T(X) X^2 + S(X) X - N(X) 1 = 0.
Report verify_degree3(const AlbertAlgebra& A, const Vec& x);
/// The degree-3 identity on every basis element and on `count` pseudorandom rational elements.
Report verify_degree3_sweep(const AlbertAlgebra& A, int count, std::uint64_t seed);

/// J_g = L_g + V_g for a Type III grading on V (sorts V, L of V.structure_xi()).
Grading grade_albert(const AlbertAlgebra& A, const Grading& gV);

}  // namespace d4
