#include "doctest.h"

#include "d4/trialitarian.hpp"

#include <map>

using namespace d4;

namespace {

bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b, int n)
{
    Echelon ea(n), eb(n), eab(n);
    for (const auto& v : a) ea.add(v), eab.add(v);
    for (const auto& v : b) eb.add(v), eab.add(v);
    return ea.rank() == eb.rank() && eab.rank() == ea.rank();
}

Vec flat(const Matrix& m)
{
    Vec v;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

Grading type3(const CyclicAlgebra& V, const Grading& gs, AbGroup G)
{
    GroupHom inc{gs.G, G, IntMat(G.ncoords(), gs.G.ncoords())};
    for (int i = 0; i < gs.G.ncoords(); ++i) inc.m(i, i) = 1;
    std::vector<long long> h(G.ncoords());
    h.back() = 1;
    return tensor_grading(V, coarsen(gs, inc), G.elem(h));
}

const Trialitarian& pc()
{
    static Trialitarian T = trialitarian(cyclic_from_symmetric(para(zorn_cayley())));
    return T;
}

void show(const Report& r)
{
    for (const auto& w : r.witnesses) MESSAGE(w);
}

}  // namespace

TEST_CASE("E = End_L(V) with its involution")
{
    const auto& E = pc().E;
    CHECK(E.dim() == 192);
    CHECK(E.alg->dim(0) == 192);
    auto r = verify_end_algebra(E);
    show(r);
    CHECK(r.ok);
    // corrupting one structure constant is detected through the block model
    auto bad = std::make_shared<StructAlgebra>(*E.alg);
    bad->maps[0].at(0, 0) = {{1, Cyclo(1)}};
    EndAlgebra Eb = E;
    Eb.alg = bad;
    CHECK_FALSE(verify_end_algebra(Eb).ok);
}

TEST_CASE("even Clifford algebra")
{
    const auto& C = pc().C;
    CHECK(C.masks.size() == 128);
    CHECK(C.dim() == 384);
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < 8; ++i) {
            Vec x(24);
            x[8 * c + i] = 1;
            CHECK(C.pair(x, x) == C.scalar(C.V.Q(x)));
            for (int j = 0; j < 8; ++j) {
                Vec y(24);
                y[8 * c + j] = 1;
                CHECK(add(C.pair(x, y), C.pair(y, x)) == C.scalar(C.V.bQ(x, y)));
            }
        }
    CHECK(clifford_center(C).size() == 6);
    // associativity on a sample of monomial triples
    for (int a = 0; a < 384; a += 41)
        for (int b = 0; b < 384; b += 43)
            for (int c = 0; c < 384; c += 47) {
                Vec x(384), y(384), z(384);
                x[a] = 1;
                y[b] = 1;
                z[c] = 1;
                CHECK(C.mul(C.mul(x, y), z) == C.mul(x, C.mul(y, z)));
            }
}

TEST_CASE("alpha is an isomorphism with involution")
{
    for (bool okubo : {false, true})
        for (bool op : {false, true}) {
            CyclicAlgebra V = cyclic_from_symmetric(okubo ? okubo_sl3() : para(zorn_cayley()));
            if (op) V = opposite(V);
            Trialitarian T = trialitarian(V);
            auto r = verify_alpha(T.C, T.E, T.A);
            show(r);
            CHECK(r.ok);
            auto k = verify_kappa(T.C, T.E, T.K);
            show(k);
            CHECK(k.ok);
        }
    // swapping the two factors breaks alpha(x.x) = (rho(Q(x)), rho^2(Q(x)))
    const auto& T = pc();
    AlphaMap swapped = T.A;
    for (auto& [a, b] : swapped.images) std::swap(a, b);
    CHECK_FALSE(verify_alpha(T.C, T.E, swapped).ok);
}

TEST_CASE("L(E) equals Der_L(V)")
{
    for (bool okubo : {false, true}) {
        Trialitarian T = okubo ? trialitarian(cyclic_from_symmetric(okubo_sl3())) : pc();
        LieOfE L = lie_of_E(T);
        CHECK(L.c == Cyclo(2));
        REQUIRE(L.basis.size() == 28);
        std::vector<Vec> a, b;
        for (const auto& x : L.basis) a.push_back(flat(T.E.as_matrix(x)));
        for (const auto& d : der_cyclic(T.E.V)) b.push_back(flat(d));
        CHECK(same_span(a, b, 576));
        for (const auto& x : L.basis) CHECK(T.E.sigma(x) == EElem{-1 * x[0], -1 * x[1], -1 * x[2]});
        // other constants give the wrong dimension
        for (const auto& [c, d] : L.tried)
            if (c != Cyclo(2)) CHECK(d != 28);
        Echelon span(576);
        for (const auto& v : a) span.add(v);
        for (std::size_t i = 0; i < L.basis.size(); i += 3)
            for (std::size_t j = 0; j < L.basis.size(); j += 5) {
                Matrix br = T.E.as_matrix(T.E.mul(L.basis[i], L.basis[j])) -
                            T.E.as_matrix(T.E.mul(L.basis[j], L.basis[i]));
                CHECK(span.contains(flat(br)));
            }
    }
}

TEST_CASE("gradings induced on E")
{
    const auto& T = pc();
    const auto& E = T.E;
    CyclicAlgebra V = E.V;

    SUBCASE("trivial")
    {
        AbGroup G = make_group(0, {});
        Grading g = aligned_grading(V.structure_xi(), G, {std::vector<GroupElem>(24, G.zero()),
                                                          std::vector<GroupElem>(3, G.zero())});
        Grading gE = induce_E_grading(E, g);
        CHECK(verify_grading(gE).ok);
        CHECK(detect_type(E, gE).type == 1);
    }
    SUBCASE("Type III from the Cartan grading")
    {
        Grading gV = type3(V, cartan_grading_cayley(V.S), make_group(2, {3}));
        GroupElem h = gV.G.elem({0, 0, 1});
        Grading gE = induce_E_grading(E, gV);
        auto r = verify_grading(gE);
        show(r);
        CHECK(r.ok);
        const bool framed = !gE.frame.empty() && gE.frame[0].has_value();
        CHECK_FALSE(framed);
        TypeInfo ti = detect_type(E, gE);
        CHECK(ti.type == 3);
        REQUIRE(ti.h.has_value());
        CHECK(*ti.h == h);
        CHECK(gE.G.order(*ti.h) == 3);
        // centre components F, F xi, F xi^2
        for (int k = 0; k < 3; ++k) CHECK(gE.deg[0][64 * k] == gE.G.add(gE.deg[0][0], gE.G.mul(k, h)));
        CHECK(verify_alpha_kappa_degrees(T, gE).ok);

        // all four centre-orbit gradings induce the same grading on E
        for (const auto& g : center_orbit(V, gV)) CHECK(same_components(induce_E_grading(E, g), gE));

        // restriction to L(E) is the grading induced on tri
        TriAlgebra tri = tri_algebra(V.S);
        Grading gT = induce_tri_grading(tri, V, gV);
        std::map<GroupElem, Echelon> comps;
        for (int b = 0; b < 192; ++b) comps.try_emplace(gE.deg[0][b], 192).first->second.add(gE.basis_vector(0, b));
        for (int b = 0; b < 28; ++b) {
            Matrix d = der_of_triple(tri.element(gT.basis_vector(0, b)));
            Vec xi = E.to_xi(E.from_matrix(d));
            CHECK(comps.at(gT.deg[0][b]).contains(xi));
        }

        // coarsening by G -> G/<h> commutes with the transport and gives Type I
        AbGroup Q = make_group(2, {});
        GroupHom kill{gV.G, Q, IntMat(2, 3)};
        kill.m(0, 0) = 1;
        kill.m(1, 1) = 1;
        Grading lhs = induce_E_grading(E, coarsen(gV, kill));
        Grading rhs = coarsen(gE, kill);
        CHECK(same_components(lhs, rhs));
        CHECK(detect_type(E, rhs).type == 1);
    }
    SUBCASE("Okubo Z_3^3")
    {
        Trialitarian TO = trialitarian(cyclic_from_symmetric(okubo_sl3()));
        Grading gV = type3(TO.E.V, okubo_grading(TO.E.V.S, 1), make_group(0, {3, 3, 3}));
        Grading gE = induce_E_grading(TO.E, gV);
        CHECK(verify_grading(gE).ok);
        TypeInfo ti = detect_type(TO.E, gE);
        CHECK(ti.type == 3);
        CHECK(*ti.h == gV.G.elem({0, 0, 1}));
    }
}
