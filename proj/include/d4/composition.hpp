/** @file composition.hpp
 *  @brief Hurwitz algebras and symmetric composition algebras in explicit bases.
 */
#pragma once

#include "d4/grading.hpp"

#include <cstdint>
#include <random>

namespace d4 {

/// Algebra with product "product" (sort 0 x sort 0 -> sort 0) and polar norm "n" (scalar valued).
struct CompositionAlgebra {
    AlgebraPtr alg;
    std::string kind;  ///< "hurwitz", "para-hurwitz", "okubo", "generic"
    Vec unit;          ///< unit of the Hurwitz algebra (also kept for para-Hurwitz)

    int dim() const { return alg->dim(0); }
    Vec mul(const Vec& x, const Vec& y) const;
    Cyclo polar(const Vec& x, const Vec& y) const;
    Cyclo norm(const Vec& x) const;
    Matrix gram() const;
    Vec basis(int i) const;
    Vec conj(const Vec& x) const;  ///< Hurwitz only: n(x,1)1 - x
    const BilinearMap& product() const { return alg->maps[0]; }
};

CompositionAlgebra field_hurwitz();
CompositionAlgebra split_quadratic();
/// Split octonions as 2x2 Zorn vector matrices, basis e1, e2, u1..u3, v1..v3.
CompositionAlgebra zorn_cayley();
/// (a,b)(c,d) = (ac + mu d^- b, da + b c^-), n(a,b) = n(a) - mu n(b).
CompositionAlgebra cayley_dickson(const CompositionAlgebra& a, const Cyclo& mu);
/// Split octonions obtained by doubling F three times with mu = 1; basis indexed by bitmask.
CompositionAlgebra doubled_cayley();
/// x . y = conj(x) conj(y)
CompositionAlgebra para(const CompositionAlgebra& c);
CompositionAlgebra para_quadratic();
/// Okubo algebra on traceless 3x3 matrices, basis X^a Y^b with (a,b) != (0,0).
CompositionAlgebra okubo_sl3();
/// The 3x3 matrices X^a Y^b used by okubo_sl3 (index as in its basis, plus identity last).
std::vector<Matrix> okubo_matrices();
Vec okubo_coords(const Matrix& m);

Report is_hurwitz(const CompositionAlgebra& c, std::uint64_t seed = 1);
Report is_symmetric_composition(const CompositionAlgebra& s, std::uint64_t seed = 1);

std::vector<Vec> nonzero_idempotents(const CompositionAlgebra& s);
Vec nonzero_idempotent(const CompositionAlgebra& s);

/// Z^2 Cartan grading of the Zorn model (works for zorn_cayley and its para algebra).
Grading cartan_grading_cayley(const CompositionAlgebra& zorn);
/// Z_2^3 grading of the doubled model by bitmask.
Grading z2cubed_grading_cayley(const CompositionAlgebra& doubled);
/// Z_3^2 grading of the Okubo model; sign +1: deg X = (1,0), deg Y = (0,1); -1 swaps them.
Grading okubo_grading(const CompositionAlgebra& okubo, int sign);

/// Seeded random vector with small coefficients in Q(omega) (rational if 3 does not divide N).
Vec random_vector(int n, std::mt19937_64& rng, int range = 4);

}  // namespace d4
