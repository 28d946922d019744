#include "doctest.h"

#include "d4/triality.hpp"

#include <random>
#include <set>

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

/// Grading by G' embedded as the first coordinates of G' x Z_3, with h = generator of Z_3.
Grading type3(const CyclicAlgebra& V, const Grading& gs, AbGroup G)
{
    GroupHom inc{gs.G, G, IntMat(G.ncoords(), gs.G.ncoords())};
    for (int i = 0; i < gs.G.ncoords(); ++i) inc.m(i, i) = 1;
    std::vector<long long> h(G.ncoords());
    h.back() = 1;
    return tensor_grading(V, coarsen(gs, inc), G.elem(h));
}

const TriAlgebra& para_cayley_tri()
{
    static TriAlgebra T = tri_algebra(para(zorn_cayley()));
    return T;
}

const TriAlgebra& okubo_tri()
{
    static TriAlgebra T = tri_algebra(okubo_sl3());
    return T;
}

}  // namespace

TEST_CASE("so(S,n) basis")
{
    auto S = para(zorn_cayley());
    auto so = so_basis(S);
    CHECK(so.size() == 28);
    std::vector<Vec> flats;
    for (const auto& d : so) {
        CHECK(so_coords(S, d).has_value());
        flats.push_back(flat(d));
    }
    CHECK(same_span(flats, flats, 64));
    Echelon e(64);
    for (const auto& v : flats) e.add(v);
    CHECK(e.rank() == 28);
    for (std::size_t a = 0; a < so.size(); a += 5)
        for (std::size_t b = 0; b < so.size(); b += 3) CHECK(so_coords(S, so[a] * so[b] - so[b] * so[a]).has_value());
    CHECK_FALSE(so_coords(S, Matrix::identity(8)).has_value());
}

TEST_CASE("tri of the para-Cayley algebra")
{
    const auto& T = para_cayley_tri();
    REQUIRE(T.dim() == 28);
    for (const auto& t : T.basis) {
        CHECK(verify_triple(T.S, t).ok);
        auto s = cyclic_shift(t);
        CHECK(verify_triple(T.S, s).ok);
        CHECK(verify_triple(T.S, cyclic_shift(s)).ok);
    }
    for (int k = 0; k < 3; ++k) {
        std::vector<Vec> proj;
        for (const auto& t : T.basis) proj.push_back(flat(t.d[k]));
        Echelon e(64);
        for (const auto& v : proj) e.add(v);
        CHECK(e.rank() == 28);
    }
    auto r = verify_lie(*T.lie);
    for (const auto& w : r.witnesses) MESSAGE(w);
    CHECK(r.ok);
    // a perturbed triple is rejected
    TriTriple bad = T.basis[3];
    bad.d[1] = bad.d[1] + T.so[5];
    CHECK_FALSE(verify_triple(T.S, bad).ok);
    CHECK_THROWS(T.coords(bad));
}

TEST_CASE("spanning triples of tri(C)")
{
    const auto& T = para_cayley_tri();
    std::vector<Vec> span;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            TriTriple t = spanning_triple(T.S, T.S.basis(i), T.S.basis(j));
            auto r = verify_triple(T.S, t);
            for (const auto& w : r.witnesses) MESSAGE(w);
            CHECK(r.ok);
            span.push_back(T.coords(t));
        }
    Echelon e(28);
    for (const auto& v : span) e.add(v);
    CHECK(e.rank() == 28);
}

TEST_CASE("tri of the Okubo algebra")
{
    const auto& T = okubo_tri();
    REQUIRE(T.dim() == 28);
    for (const auto& t : T.basis) {
        CHECK(verify_triple(T.S, t).ok);
        CHECK(verify_triple(T.S, cyclic_shift(t)).ok);
    }
    CHECK(verify_lie(*T.lie).ok);
}

TEST_CASE("root datum of type D4")
{
    for (const TriAlgebra* T : {&para_cayley_tri(), &okubo_tri()}) {
        RootDatum R = root_datum(*T);
        CHECK(R.cartan.size() == 4);
        CHECK(R.roots.size() == 24);
        std::set<std::array<int, 4>> rs(R.roots.begin(), R.roots.end());
        for (const auto& a : R.roots) CHECK(rs.count({-a[0], -a[1], -a[2], -a[3]}) == 1);
        CHECK(R.simple.size() == 4);
        CHECK(is_d4_cartan_matrix(R.cartan_matrix));
        CHECK_FALSE(R.killing_det.is_zero());
    }
    CHECK_FALSE(is_d4_cartan_matrix({{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}));
    CHECK_THROWS(root_datum(tri_algebra(para(doubled_cayley()))));
}

TEST_CASE("derivations of V agree with tri")
{
    auto S = para(zorn_cayley());
    const auto& T = para_cayley_tri();
    for (bool op : {false, true}) {
        CyclicAlgebra V = cyclic_from_symmetric(S);
        if (op) V = opposite(V);
        auto der = der_cyclic(V);
        CHECK(der.size() == 28);
        std::vector<Vec> a, b;
        for (const auto& d : der) a.push_back(flat(d));
        for (const auto& t : T.basis) b.push_back(flat(der_of_triple(t)));
        CHECK(same_span(a, b, 576));
        std::mt19937_64 rng(7);
        Vec x = random_vector(24, rng), y = random_vector(24, rng);
        for (int k = 0; k < 28; k += 9) {
            Matrix d = der_of_triple(T.basis[k]);
            CHECK(d * V.mul(x, y) == add(V.mul(d * x, y), V.mul(x, d * y)));
        }
    }
}

TEST_CASE("induced gradings on tri")
{
    const auto& T = para_cayley_tri();
    CyclicAlgebra V = cyclic_from_symmetric(T.S);

    SUBCASE("trivial")
    {
        AbGroup G = make_group(0, {});
        std::vector<GroupElem> dv(24, G.zero()), dl(3, G.zero());
        Grading g = aligned_grading(V.structure_xi(), G, {dv, dl});
        Grading t = induce_tri_grading(T, V, g);
        for (const auto& d : t.deg[0]) CHECK(G.is_zero(d));
        CHECK(verify_grading(t).ok);
    }
    SUBCASE("Cartan tensor L and coarsening")
    {
        Grading gV = type3(V, cartan_grading_cayley(T.S), make_group(2, {3}));
        REQUIRE(verify_grading(gV).ok);
        Grading gT = induce_tri_grading(T, V, gV);
        auto r = verify_grading(gT);
        for (const auto& w : r.witnesses) MESSAGE(w);
        CHECK(r.ok);
        CHECK(verify_graded_module(T, V, gV, gT).ok);
        auto tv = type_vector(gT);
        int total = 0;
        for (std::size_t i = 0; i < tv.size(); ++i) total += static_cast<int>(i + 1) * tv[i];
        CHECK(total == 28);
        // xi of degree h fixes a G2 inside tri; the Z^2 part leaves its Cartan subalgebra
        CHECK(invariants(gT).dim_e == 2);

        AbGroup Q = make_group(0, {3});
        GroupHom kill{gV.G, Q, IntMat(1, 3)};
        kill.m(0, 2) = 1;
        Grading lhs = induce_tri_grading(T, V, coarsen(gV, kill));
        Grading rhs = coarsen(gT, kill);
        CHECK(same_components(lhs, rhs));
    }
    SUBCASE("Okubo Z_3^3")
    {
        auto O = okubo_sl3();
        const auto& TO = okubo_tri();
        CyclicAlgebra W = cyclic_from_symmetric(O);
        Grading gV = type3(W, okubo_grading(O, 1), make_group(0, {3, 3, 3}));
        REQUIRE(verify_grading(gV).ok);
        Grading gT = induce_tri_grading(TO, W, gV);
        CHECK(verify_grading(gT).ok);
        CHECK(verify_graded_module(TO, W, gV, gT).ok);
        CHECK(invariants(gT).dim_e == 0);
        auto tv = type_vector(gT);
        int total = 0, count = 0;
        for (std::size_t i = 0; i < tv.size(); ++i) {
            total += static_cast<int>(i + 1) * tv[i];
            count += tv[i];
        }
        CHECK(total == 28);
        CHECK(count == 26);
    }
}

TEST_CASE("center orbit")
{
    const auto& T = para_cayley_tri();
    CyclicAlgebra V = cyclic_from_symmetric(T.S);
    Grading gV = type3(V, cartan_grading_cayley(T.S), make_group(2, {3}));
    auto orbit = center_orbit(V, gV);
    REQUIRE(orbit.size() == 4);
    CHECK(same_components(orbit[0], gV));
    for (const auto& l : center_signs()) CHECK(CubicEtale::sharp(l) == l);
    Grading t0 = induce_tri_grading(T, V, orbit[0]);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(verify_grading(orbit[i]).ok);
        CHECK(same_components(induce_tri_grading(T, V, orbit[i]), t0));
        for (std::size_t j = i + 1; j < 4; ++j) CHECK_FALSE(same_components(orbit[i], orbit[j]));
    }
}
