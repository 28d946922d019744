#include "doctest.h"

#include "d4/brauer.hpp"
#include "d4/classify.hpp"

using namespace d4;

namespace {

void show(const Report& r)
{
    for (const auto& w : r.witnesses) MESSAGE(w);
}

Matrix mat2(long a, long b, long c, long d)
{
    Matrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

/// Pauli grading of M_2 by Z_2^2.
MatrixGrading pauli()
{
    AbGroup G = make_group(0, {2, 2});
    Matrix I = Matrix::identity(2), P = mat2(1, 0, 0, -1), Q = mat2(0, 1, 1, 0);
    return {G, {I, P, Q, P * Q}, {G.elem({0, 0}), G.elem({1, 0}), G.elem({0, 1}), G.elem({1, 1})}, I};
}

/// Elementary grading of M_n: deg E_ij = d_i - d_j.
MatrixGrading elementary(const AbGroup& G, const std::vector<GroupElem>& d)
{
    const int n = static_cast<int>(d.size());
    MatrixGrading A{G, {}, {}, Matrix::identity(n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix e(n, n);
            e(i, j) = 1;
            A.basis.push_back(e);
            A.deg.push_back(G.sub(d[i], d[j]));
        }
    return A;
}

int center_dim(const MatrixGrading& A)
{
    const int n = A.n(), m = A.dim();
    Echelon ech(m);
    for (const auto& b : A.basis) {
        std::vector<Matrix> comm;
        for (const auto& z : A.basis) comm.push_back(z * b - b * z);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                SparseVec v;
                for (int k = 0; k < m; ++k)
                    if (!comm[k](p, q).is_zero()) v.emplace_back(k, comm[k](p, q));
                if (!v.empty()) ech.add(v);
            }
    }
    return m - ech.rank();
}

Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    return k;
}

/// Type I coarsening of a fine Type III grading: kill <h>.
Grading type1(const FineTypeIII& f)
{
    Quotient q = quotient(f.graded.gamma.G, {f.params.h});
    return coarsen(f.graded.gamma, q.proj);
}

}  // namespace

TEST_CASE("twisted group algebras")
{
    SUBCASE("Pauli pair gives M_2")
    {
        AbGroup T = make_group(0, {2, 2});
        MatrixGrading D = graded_division_from_pair(T, {{1, -1}, {-1, 1}});
        CHECK(D.dim() == 4);
        CHECK(verify_matrix_grading(D).ok);
        auto P = division_params(D);
        CHECK(P.T.size() == 4);
        CHECK(P.at(T.elem({1, 0}), T.elem({0, 1})) == Cyclo(-1));
        CHECK(P.elementary_2());
        CHECK(P.sign_valued());
        CHECK(P.radical().size() == 1);
        // split: a primitive idempotent of the whole algebra has half rank in the regular representation
        CHECK(rank(primitive_idempotent(D.basis, D.unit)) == 2);
    }
    SUBCASE("trivial pair gives F")
    {
        MatrixGrading D = graded_division_from_pair(make_group(0, {}), {});
        CHECK(D.dim() == 1);
        CHECK(division_params(D).trivial());
    }
    SUBCASE("Z_3 group algebra")
    {
        AbGroup T = make_group(0, {3});
        MatrixGrading D = graded_division_from_pair(T, {{1}});
        auto P = division_params(D);
        CHECK(P.T.size() == 3);
        CHECK(P.radical().size() == 3);
        CHECK_FALSE(P.elementary_2());
        CHECK(rank(primitive_idempotent(D.basis, D.unit)) == 1);
    }
    SUBCASE("rejected pairs")
    {
        AbGroup T = make_group(0, {2, 2});
        CHECK_THROWS_AS(graded_division_from_pair(T, {{1, 1}, {-1, 1}}), std::invalid_argument);
        CHECK_THROWS_AS(graded_division_from_pair(T, {{-1, 1}, {1, 1}}), std::invalid_argument);
        const auto& F = default_field();
        Cyclo w = Cyclo::omega(F);
        CHECK_THROWS_AS(graded_division_from_pair(T, {{1, w}, {w.inverse(), 1}}), std::invalid_argument);
    }
}

TEST_CASE("division parameters of gradings on matrix algebras")
{
    SUBCASE("Pauli")
    {
        MatrixGrading A = pauli();
        CHECK(verify_matrix_grading(A).ok);
        auto P = division_params(A);
        CHECK(P.T.size() == 4);
        CHECK(P.sign_valued());
        CHECK(P.at(A.G.elem({1, 0}), A.G.elem({0, 1})) == Cyclo(-1));
        CHECK(center_dim(A) == 1);
    }
    SUBCASE("elementary gradings have trivial T")
    {
        AbGroup G = make_group(1, {3});
        MatrixGrading A = elementary(G, {G.elem({0, 0}), G.elem({1, 0}), G.elem({1, 1}), G.elem({-2, 2})});
        CHECK(verify_matrix_grading(A).ok);
        for (int v = 0; v < 3; ++v) CHECK(division_params(A, v).trivial());
    }
    SUBCASE("Pauli tensor elementary")
    {
        // M_2 (x) M_2 with Pauli on the first factor and an elementary Z_2^2-grading on the second
        MatrixGrading P = pauli();
        AbGroup G = P.G;
        MatrixGrading E = elementary(G, {G.zero(), G.elem({1, 0})});
        MatrixGrading A{G, {}, {}, Matrix::identity(4)};
        for (int a = 0; a < P.dim(); ++a)
            for (int b = 0; b < E.dim(); ++b) {
                A.basis.push_back(kron(P.basis[a], E.basis[b]));
                A.deg.push_back(G.add(P.deg[a], E.deg[b]));
            }
        REQUIRE(verify_matrix_grading(A).ok);
        std::vector<DivisionParams> ps;
        for (int v = 0; v < 4; ++v) ps.push_back(division_params(A, v));
        for (const auto& p : ps) CHECK(p == ps[0]);
        CHECK(ps[0].T.size() == 4);
        CHECK(ps[0].at(G.elem({1, 0}), G.elem({0, 1})) == Cyclo(-1));
    }
    SUBCASE("non-division components are reported")
    {
        AbGroup G = make_group(0, {2});
        MatrixGrading A = elementary(G, {G.zero(), G.zero()});
        // A_e = M_2, eps A eps has dimension 1 in degree 0: trivial
        CHECK(division_params(A).trivial());
        MatrixGrading bad{G, {Matrix::identity(2), mat2(0, 1, 0, 0), mat2(0, 0, 1, 0), mat2(1, 0, 0, -1)},
                          {G.zero(), G.gen(0), G.zero(), G.zero()}, Matrix::identity(2)};
        CHECK_FALSE(verify_matrix_grading(bad).ok);
    }
}

TEST_CASE("character units")
{
    MatrixGrading A = pauli();
    const auto chars = characters(A.G, default_field());
    REQUIRE(chars.size() == 4);
    for (const auto& chi : chars) {
        Matrix u = character_unit(A, chi);
        for (int k = 0; k < A.dim(); ++k)
            CHECK(u * A.basis[k] == chi.value(A.G, A.deg[k], default_field()) * (A.basis[k] * u));
    }
    // the Pauli units anticommute for independent characters
    CHECK(commutation_factor(A, chars[1], chars[2]) == Cyclo(-1));
    CHECK(commutation_factor(A, chars[1], chars[1]) == Cyclo(1));
}

TEST_CASE("related triples from Type I gradings")
{
    for (std::string kind : {"cartan", "z2cubed", "okubo"}) {
        CAPTURE(kind);
        FineTypeIII f = fine_typeIII(kind);
        const CyclicAlgebra& V = *f.graded.V;
        TriAlgebra tri = tri_algebra(V.S);
        Grading g1 = type1(f);
        Grading gT = induce_tri_grading(tri, V, g1);
        RelatedTriple t = related_triple(tri, gT);
        for (int i = 0; i < 3; ++i) {
            CHECK(t.gamma[i].dim() == 64);
            auto r = verify_matrix_grading(t.gamma[i]);
            show(r);
            CHECK(r.ok);
            CHECK(verify_adjoint_compatible(t.gamma[i], t.gram).ok);
        }
        BrauerCheck b = verify_brauer_relations(t);
        show(b.report);
        CHECK(b.report.ok);
        for (int i = 0; i < 3; ++i) {
            MESSAGE(kind << " E_" << i + 1 << ": " << describe(b.params[i]));
            CHECK(b.params[i].elementary_2());
        }
    }
}

TEST_CASE("Type III tri gradings have no related triple")
{
    FineTypeIII f = fine_typeIII("okubo");
    const CyclicAlgebra& V = *f.graded.V;
    TriAlgebra tri = tri_algebra(V.S);
    Grading gT = induce_tri_grading(tri, V, f.graded.gamma);
    CHECK_THROWS_AS(related_triple(tri, gT), std::runtime_error);
}

TEST_CASE("central idempotents and the induced commutation factor")
{
    SUBCASE("Z_3 group algebra")
    {
        MatrixGrading D = graded_division_from_pair(make_group(0, {3}), {{1}});
        auto r = check_beta_bar(D);
        show(r);
        CHECK(r.ok);
    }
    SUBCASE("Z_3 x Pauli")
    {
        AbGroup T = make_group(0, {3, 2, 2});
        MatrixGrading D = graded_division_from_pair(T, {{1, 1, 1}, {1, 1, -1}, {1, -1, 1}});
        auto P = division_params(D);
        CHECK(P.radical().size() == 3);
        auto r = check_beta_bar(D);
        show(r);
        CHECK(r.ok);
    }
    SUBCASE("trivial radical")
    {
        MatrixGrading D = graded_division_from_pair(make_group(0, {2, 2}), {{1, -1}, {-1, 1}});
        auto r = check_beta_bar(D);
        show(r);
        CHECK(r.ok);
    }
}
