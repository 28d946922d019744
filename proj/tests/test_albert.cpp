#include "doctest.h"

#include "d4/albert.hpp"
#include "d4/classify.hpp"

using namespace d4;

namespace {

void show(const Report& r)
{
    for (const auto& w : r.witnesses) MESSAGE(w);
}

const AlbertAlgebra& albert_of(char kind)
{
    static AlbertAlgebra p = albert(model('p')), o = albert(model('o'));
    return kind == 'p' ? p : o;
}

}  // namespace

TEST_CASE("norm data")
{
    const AlbertAlgebra& A = albert_of('p');
    Vec one = A.unit();
    CHECK(A.trace(one) == Cyclo(3));
    CHECK(A.sharp(one) == one);
    CHECK(A.norm(one) == Cyclo(1));
    CHECK(A.quadratic_trace(one) == Cyclo(3));
    Vec zero(27);
    CHECK(A.norm(zero).is_zero());
    CHECK(verify_degree3(A, zero).ok);
    CHECK(verify_degree3(A, one).ok);
}

TEST_CASE("structure and Jordan identity")
{
    for (char kind : {'p', 'o'}) {
        CAPTURE(kind);
        const AlbertAlgebra& A = albert_of(kind);
        CHECK(A.alg->dim() == 27);
        auto s = verify_albert_structure(A);
        show(s);
        CHECK(s.ok);
        auto j = verify_jordan(*A.alg, A.unit());
        show(j);
        CHECK(j.ok);
        auto d = verify_degree3_sweep(A, kind == 'p' ? 100 : 20, 7);
        show(d);
        CHECK(d.ok);
    }
}

TEST_CASE("a corrupted product constant is caught")
{
    const AlbertAlgebra& A = albert_of('p');
    StructAlgebra J = *A.alg;
    auto& P = J.map("product");
    // perturb u_1 * v_1 (both in V) symmetrically
    Vec c = to_dense(P.at(4, 12), 27);
    c[0] += Cyclo(1);
    P.at(4, 12) = to_sparse(c);
    P.at(12, 4) = P.at(4, 12);
    auto r = verify_jordan(J, A.unit());
    CHECK_FALSE(r.ok);
    REQUIRE_FALSE(r.witnesses.empty());
    MESSAGE(r.witnesses[0]);
}

TEST_CASE("graded Albert algebra")
{
    SUBCASE("fine Z_3^3: 27 one-dimensional components")
    {
        FineTypeIII f = fine_typeIII("okubo");
        const AlbertAlgebra& A = albert_of('o');
        Grading g = grade_albert(A, f.graded.gamma);
        CHECK(verify_grading(g).ok);
        auto inv = invariants(g);
        auto tv = type_vector(g);
        REQUIRE(!tv.empty());
        CHECK(tv[0] == 27);
        CHECK(inv.dim_e == 1);
    }
    SUBCASE("rank 8: J_e has dimension 9")
    {
        TypeIIIParams p;
        p.r = 8;
        p.G = make_group(0, {3});
        p.h = p.G.gen(0);
        p.t = 'p';
        GradedCyclic gc = build(p);
        Grading g = grade_albert(albert_of('p'), gc.gamma);
        CHECK(invariants(g).dim_e == 9);
    }
    SUBCASE("trivially graded L is rejected")
    {
        const auto& A = albert_of('p');
        AbGroup G = make_group(0, {3});
        Grading g = aligned_grading(A.V->structure_xi(), G, {std::vector<GroupElem>(24, G.zero()),
                                                             std::vector<GroupElem>(3, G.zero())});
        CHECK_THROWS_AS(grade_albert(A, g), std::invalid_argument);
    }
}
