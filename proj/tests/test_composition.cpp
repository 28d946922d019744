#include "doctest.h"

#include "d4/composition.hpp"

#include <algorithm>

using namespace d4;

namespace {

// Oracle for the Okubo product straight from 3x3 matrices.
Matrix okubo_product_matrix(const Matrix& x, const Matrix& y)
{
    const auto& F = default_field();
    Cyclo w = Cyclo::omega(F);
    Cyclo mu = (Cyclo(2) + w) * Cyclo(1, 3);
    Matrix xy = x * y, yx = y * x;
    Cyclo t = xy(0, 0) + xy(1, 1) + xy(2, 2);
    return mu * xy + (Cyclo(1) - mu) * yx - (t * Cyclo(1, 3)) * Matrix::identity(3);
}

}  // namespace

TEST_CASE("split Cayley algebra is Hurwitz")
{
    auto c = zorn_cayley();
    auto r = is_hurwitz(c);
    CHECK(r.ok);
    for (const auto& w : r.witnesses) MESSAGE(w);
    auto d = doubled_cayley();
    CHECK(is_hurwitz(d).ok);
    CHECK(d.dim() == 8);
}

TEST_CASE("Cayley-Dickson of F gives the split quadratic norm a^2 - b^2")
{
    auto k = cayley_dickson(field_hurwitz(), Cyclo(1));
    Vec x{Cyclo(3), Cyclo(2)};
    CHECK(k.norm(x) == Cyclo(9 - 4));
    CHECK(is_hurwitz(k).ok);
}

TEST_CASE("para-Hurwitz and Okubo algebras are symmetric composition algebras")
{
    CHECK(is_symmetric_composition(para(zorn_cayley())).ok);
    CHECK(is_symmetric_composition(para(doubled_cayley())).ok);
    auto o = okubo_sl3();
    auto r = is_symmetric_composition(o);
    for (const auto& w : r.witnesses) MESSAGE(w);
    CHECK(r.ok);
    CHECK(is_symmetric_composition(para_quadratic()).ok);
}

TEST_CASE("ordinary Cayley product is not a symmetric composition")
{
    auto c = zorn_cayley();
    auto r = is_symmetric_composition(c);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("corrupting one structure constant is detected")
{
    auto s = para(zorn_cayley());
    auto a = std::make_shared<StructAlgebra>(*s.alg);
    a->maps[0].at(2, 3).push_back({7, Cyclo(1)});
    std::sort(a->maps[0].at(2, 3).begin(), a->maps[0].at(2, 3).end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    CompositionAlgebra bad{a, s.kind, s.unit};
    auto r = is_symmetric_composition(bad);
    CHECK_FALSE(r.ok);
}

TEST_CASE("Okubo basis products agree with the matrix oracle")
{
    auto o = okubo_sl3();
    auto mats = okubo_matrices();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            Matrix p = okubo_product_matrix(mats[i], mats[j]);
            CHECK(o.mul(o.basis(i), o.basis(j)) == okubo_coords(p));
        }
    // generators are normalized: n(x, x*x) = 1 for x = X and x = Y
    int X = 2, Y = 0;  // X^1Y^0, X^0Y^1
    CHECK(o.polar(o.basis(X), o.mul(o.basis(X), o.basis(X))) == Cyclo(1));
    CHECK(o.polar(o.basis(Y), o.mul(o.basis(Y), o.basis(Y))) == Cyclo(1));
    CHECK(is_zero(o.mul(o.basis(X), o.basis(Y))));
    CHECK(!is_zero(o.mul(o.basis(Y), o.basis(X))));
}

TEST_CASE("nonzero idempotents")
{
    auto o = okubo_sl3();
    Vec e = nonzero_idempotent(o);
    Matrix d(3, 3);
    d(0, 0) = -1;
    d(1, 1) = -1;
    d(2, 2) = 2;
    CHECK(e == okubo_coords(d));
    CHECK(o.norm(e) == Cyclo(1));

    auto pq = para_quadratic();
    auto all = nonzero_idempotents(pq);
    Cyclo w = Cyclo::omega(default_field());
    std::vector<Vec> want{{Cyclo(1), Cyclo(1)}, {w, w * w}, {w * w, w}};
    CHECK(all.size() == 3);
    for (const auto& v : want) CHECK(std::find(all.begin(), all.end(), v) != all.end());

    auto pc = para(zorn_cayley());
    Vec u = nonzero_idempotent(pc);
    CHECK(pc.mul(u, u) == u);
}

TEST_CASE("fine gradings of the composition models")
{
    auto c = zorn_cayley();
    CHECK(verify_grading(cartan_grading_cayley(c)).ok);
    CHECK(verify_grading(cartan_grading_cayley(para(c))).ok);
    auto d = doubled_cayley();
    CHECK(verify_grading(z2cubed_grading_cayley(d)).ok);
    auto o = okubo_sl3();
    CHECK(verify_grading(okubo_grading(o, 1)).ok);
    CHECK(verify_grading(okubo_grading(o, -1)).ok);

    auto u = universal_group(cartan_grading_cayley(c));
    CHECK(u.U.free_rank() == 2);
    CHECK(u.U.invariants().empty());
    auto uo = universal_group(okubo_grading(o, 1));
    CHECK(uo.U.invariants() == std::vector<long long>{3, 3});
    auto uz = universal_group(z2cubed_grading_cayley(d));
    CHECK(uz.U.invariants() == std::vector<long long>{2, 2, 2});
    // relabelled grading coarsens back to the original one
    Grading back = coarsen(u.gamma, u.to_G);
    CHECK(back.deg == cartan_grading_cayley(c).deg);
    CHECK(u.to_G.well_defined());
}

TEST_CASE("a wrong degree is reported with a witness")
{
    auto c = zorn_cayley();
    Grading g = cartan_grading_cayley(c);
    g.deg[0][2] = g.G.elem({2, 0});
    auto r = verify_grading(g);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("refinement on one model")
{
    auto c = zorn_cayley();
    Grading fine = cartan_grading_cayley(c);
    AbGroup Z = make_group(1, {});
    GroupHom h{fine.G, Z, IntMat(1, 2)};
    h.m(0, 0) = 1;
    h.m(0, 1) = 1;
    Grading coarse = coarsen(fine, h);
    CHECK(is_refinement(fine, coarse).ok);
    CHECK_FALSE(is_refinement(coarse, fine).ok);
    CHECK_THROWS(is_refinement(fine, z2cubed_grading_cayley(doubled_cayley())));
}
