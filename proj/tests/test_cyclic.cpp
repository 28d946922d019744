#include "doctest.h"

#include "d4/cyclic.hpp"

using namespace d4;

namespace {

Vec tensor(const CyclicAlgebra& V, const Vec& s, const LElem& l)
{
    Vec x(24);
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < 8; ++i) x[8 * c + i] = l[c] * s[i];
    return x;
}

// span equality of two families of vectors
bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, int n)
{
    Echelon ea(n), eb(n), eab(n);
    for (const auto& v : a) ea.add(v), eab.add(v);
    for (const auto& v : b) eb.add(v), eab.add(v);
    return ea.rank() == eb.rank() && eab.rank() == ea.rank();
}

}  // namespace

TEST_CASE("cubic etale algebra invariants")
{
    LElem xi = CubicEtale::xi();
    Cyclo w = Cyclo::omega(default_field());
    CHECK(CubicEtale::norm(xi) == CubicEtale::one());
    CHECK(CubicEtale::sharp(xi) == CubicEtale::mul(xi, xi));
    CHECK(CubicEtale::rho(xi) == LElem{w, w * w, Cyclo(1)});
    CHECK(CubicEtale::rho(xi) == CubicEtale::mul(CubicEtale::scalar(w), xi));
    CHECK(CubicEtale::rho(CubicEtale::rho(CubicEtale::rho(xi))) == xi);
    CHECK(CubicEtale::tau(xi) == CubicEtale::mul(xi, xi));
    LElem l{Cyclo(2), Cyclo(3), w};
    CHECK(CubicEtale::from_xi(CubicEtale::to_xi(l)) == l);
}

TEST_CASE("triple model of para-Cayley")
{
    auto S = para(zorn_cayley());
    auto V = cyclic_from_symmetric(S);
    Vec one = tensor(V, S.unit, CubicEtale::one());
    CHECK(V.mul(one, one) == one);
    CHECK(V.dim() == 24);
    LElem xi = CubicEtale::xi();
    for (int i = 0; i < 8; ++i) {
        Vec x = tensor(V, S.basis(i), xi);
        LElem want = CubicEtale::mul(CubicEtale::scalar(S.norm(S.basis(i))), CubicEtale::mul(xi, xi));
        CHECK(V.Q(x) == want);
    }
    auto r = verify_cyclic_axioms(V);
    for (const auto& w : r.witnesses) MESSAGE(w);
    CHECK(r.ok);
    CHECK_THROWS(cyclic_from_symmetric(para_quadratic()));
}

TEST_CASE("triple model of the Okubo algebra")
{
    auto V = cyclic_from_symmetric(okubo_sl3());
    CHECK(verify_cyclic_axioms(V).ok);
}

TEST_CASE("xi basis round trip")
{
    auto V = cyclic_from_symmetric(okubo_sl3());
    std::mt19937_64 rng(2);
    Vec x = random_vector(24, rng);
    CHECK(V.to_xi(V.from_xi(x)) == x);
    CHECK(V.from_xi(V.to_xi(x)) == x);
}

TEST_CASE("opposite algebra")
{
    auto V = cyclic_from_symmetric(para(zorn_cayley()));
    auto W = opposite(V);
    CHECK(W.twist() == 2);
    auto r = verify_cyclic_axioms(W);
    CHECK(r.ok);
    CHECK_FALSE(opposite(W).op);
    std::mt19937_64 rng(4);
    Vec x = random_vector(24, rng), y = random_vector(24, rng);
    CHECK(W.mul(x, y) == V.mul(y, x));
    CHECK(opposite(W).mul(x, y) == V.mul(x, y));
}

TEST_CASE("scaling and similitudes")
{
    auto V = cyclic_from_symmetric(para(zorn_cayley()));
    LElem xi = CubicEtale::xi();
    auto W = scale(V, xi);
    CHECK(verify_cyclic_axioms(W).ok);
    CHECK(W.mu == CubicEtale::mul(xi, xi));
    auto I = scale(V, CubicEtale::one());
    std::mt19937_64 rng(9);
    Vec x = random_vector(24, rng), y = random_vector(24, rng);
    CHECK(I.mul(x, y) == V.mul(x, y));
    LElem l2{Cyclo(2), Cyclo(-1), Cyclo(3)};
    auto A = scale(scale(V, xi), l2), B = scale(V, CubicEtale::mul(xi, l2));
    CHECK(A.lambda == B.lambda);
    CHECK(A.mu == B.mu);
    CHECK(A.mul(x, y) == B.mul(x, y));
    auto r = verify_self_similitude(V, xi);
    CHECK(r.ok);
    CHECK_THROWS(scale(V, LElem{Cyclo(1), Cyclo(0), Cyclo(1)}));
}

TEST_CASE("a corrupted structure constant is located")
{
    auto S = para(zorn_cayley());
    auto a = std::make_shared<StructAlgebra>(*S.alg);
    auto& e = a->maps[0].at(2, 3);
    for (auto& [k, c] : e) c = c * Cyclo(2);
    CompositionAlgebra bad{a, S.kind, S.unit};
    auto r = verify_cyclic_axioms(cyclic_from_symmetric(bad));
    CHECK_FALSE(r.ok);
    REQUIRE_FALSE(r.witnesses.empty());
    MESSAGE(r.witnesses.front());
}

TEST_CASE("para subalgebras cut by idempotents")
{
    auto C = zorn_cayley();
    auto S = para(C);
    auto V = cyclic_from_symmetric(S);
    Vec one = tensor(V, S.unit, CubicEtale::one());
    auto P = para_subalgebra_from_idempotent(V, one);
    CHECK(P.report.ok);
    std::vector<Vec> c1;
    for (int i = 0; i < 8; ++i) c1.push_back(tensor(V, S.basis(i), CubicEtale::one()));
    CHECK(same_span(c1, [&] {
        std::vector<Vec> v;
        for (int j = 0; j < 8; ++j) v.push_back(P.basis.col(j));
        return v;
    }(), 24));

    Cyclo w = Cyclo::omega(default_field());
    Vec e(8);
    e[0] = w;
    e[1] = w * w;
    Vec eps = tensor(V, e, CubicEtale::one());
    auto Q = para_subalgebra_from_idempotent(V, eps);
    for (const auto& x : Q.report.witnesses) MESSAGE(x);
    CHECK(Q.report.ok);
    LElem xi = CubicEtale::xi(), xi2 = CubicEtale::mul(xi, xi);
    std::vector<Vec> want{tensor(V, S.basis(0), CubicEtale::one()), tensor(V, S.basis(1), CubicEtale::one())};
    for (int i = 2; i < 5; ++i) want.push_back(tensor(V, S.basis(i), xi));
    for (int i = 5; i < 8; ++i) want.push_back(tensor(V, S.basis(i), xi2));
    std::vector<Vec> got;
    for (int j = 0; j < Q.basis.cols(); ++j) got.push_back(Q.basis.col(j));
    CHECK(same_span(want, got, 24));
    CHECK_THROWS(para_subalgebra_from_idempotent(V, tensor(V, S.basis(2), CubicEtale::one())));
}

TEST_CASE("tensor gradings verify against the cyclic product")
{
    auto C = zorn_cayley();
    auto S = para(C);
    auto V = cyclic_from_symmetric(S);
    Grading gs = cartan_grading_cayley(S);
    AbGroup G = make_group(2, {3});
    GroupHom inc{gs.G, G, IntMat(3, 2)};
    inc.m(0, 0) = 1;
    inc.m(1, 1) = 1;
    Grading gS = coarsen(gs, inc);
    Grading g = tensor_grading(V, gS, G.elem({0, 0, 1}));
    auto r = verify_grading(g);
    for (const auto& x : r.witnesses) MESSAGE(x);
    CHECK(r.ok);
    // a wrong h breaks it
    Grading bad = g;
    bad.deg[1][1] = G.elem({1, 0, 1});
    CHECK_FALSE(verify_grading(bad).ok);
}
