#include "doctest.h"

#include "d4/classify.hpp"

#include <map>

using namespace d4;

namespace {

void show(const Report& r)
{
    for (const auto& w : r.witnesses) MESSAGE(w);
}

TypeIIIParams rank0(const AbGroup& G, GroupElem k1, GroupElem k2, GroupElem h, int delta)
{
    TypeIIIParams p;
    p.r = 0;
    p.G = G;
    p.K = {k1, k2};
    p.h = h;
    p.delta = delta;
    return p;
}

TypeIIIParams rank2(const AbGroup& G, GroupElem g1, GroupElem g2, GroupElem h)
{
    TypeIIIParams p;
    p.r = 2;
    p.G = G;
    p.gamma = {g1, g2, G.neg(G.add(g1, g2))};
    p.h = h;
    return p;
}

TypeIIIParams rank4(const AbGroup& G, GroupElem g, GroupElem h)
{
    TypeIIIParams p;
    p.r = 4;
    p.G = G;
    p.g = g;
    p.h = h;
    return p;
}

TypeIIIParams rank8(const AbGroup& G, GroupElem h, char t)
{
    TypeIIIParams p;
    p.r = 8;
    p.G = G;
    p.h = h;
    p.t = t;
    return p;
}

TypeIIIParams rank1(const AbGroup& G)
{
    TypeIIIParams p;
    p.r = 1;
    p.G = G;
    p.K = {G.gen(0), G.gen(1), G.gen(2)};
    p.h = G.gen(3);
    return p;
}

/// Checks reflexivity, symmetry and transitivity of similar_params on ps.
bool equivalence(const std::vector<TypeIIIParams>& ps, int* classes = nullptr)
{
    const std::size_t n = ps.size();
    std::vector<std::vector<bool>> s(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i][j] = similar_params(ps[i], ps[j]).similar;
    int count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!s[i][i]) return false;
        bool first = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (s[i][j] != s[j][i]) return false;
            if (s[i][j] && s[i] != s[j]) return false;
            if (s[i][j] && j < i) first = false;
        }
        if (first) ++count;
    }
    if (classes) *classes = count;
    return true;
}

}  // namespace

TEST_CASE("constructors and ranks")
{
    AbGroup Z33 = make_group(0, {3, 3, 3});
    SUBCASE("r = 0 over Z_3^3")
    {
        auto p = rank0(Z33, Z33.gen(0), Z33.gen(1), Z33.gen(2), 1);
        GradedCyclic a = build(p);
        auto r = verify_grading(a.gamma);
        show(r);
        CHECK(r.ok);
        CHECK(rank(a.gamma) == 0);
        // support is KH minus H, all components one-dimensional
        auto inv = invariants(a.gamma);
        CHECK(inv.support.size() == 24);
        for (const auto& [d, k] : inv.support) {
            CHECK(k == 1);
            CHECK(d.c[0] + d.c[1] > 0);
        }
    }
    SUBCASE("r = 1, 2, 4, 8")
    {
        GradedCyclic a1 = build(rank1(make_group(0, {2, 2, 2, 3})));
        CHECK(rank(a1.gamma) == 1);
        AbGroup ZZ3 = make_group(1, {3});
        GradedCyclic a4 = build(rank4(ZZ3, ZZ3.elem({1, 0}), ZZ3.elem({0, 1})));
        CHECK(rank(a4.gamma) == 4);
        GradedCyclic a2 = build(rank2(Z33, Z33.gen(0), Z33.gen(1), Z33.gen(2)));
        CHECK(rank(a2.gamma) == 2);
        GradedCyclic a8 = build(rank8(Z33, Z33.gen(2), 'o'));
        CHECK(rank(a8.gamma) == 8);
        for (const GradedCyclic* a : {&a1, &a2, &a4, &a8}) {
            CHECK(verify_grading(a->gamma).ok);
            CHECK(verify_cyclic_axioms(*a->V).ok);
        }
    }
    SUBCASE("preconditions")
    {
        auto bad2 = rank2(Z33, Z33.gen(2), Z33.gen(0), Z33.gen(2));
        CHECK_THROWS_WITH_AS(build(bad2), "precondition failed: g_i is not in <h>", std::invalid_argument);
        auto bad0 = rank0(Z33, Z33.gen(0), Z33.gen(1), Z33.gen(0), 1);
        CHECK_THROWS_WITH_AS(build(bad0), "precondition failed: h is not in K", std::invalid_argument);
        auto bad8 = rank8(Z33, Z33.zero(), 'p');
        CHECK_THROWS_WITH_AS(build(bad8), "precondition failed: h has order 3", std::invalid_argument);
        auto bad1 = rank1(make_group(0, {2, 2, 3, 3}));
        CHECK_THROWS_AS(build(bad1), std::invalid_argument);
        Grading g = build(rank8(Z33, Z33.gen(0), 'p')).gamma;
        g.deg[0][0] = Z33.gen(1);
        CHECK_THROWS(rank(g));
    }
}

TEST_CASE("similarity decisions")
{
    AbGroup Z33 = make_group(0, {3, 3, 3});
    auto h = Z33.gen(2), hi = Z33.neg(Z33.gen(2));
    auto g = Z33.gen(0);
    auto v = similar_params(rank4(Z33, g, h), rank4(Z33, Z33.neg(g), h));
    CHECK(v.similar);
    CHECK(v.trace == "r=4: <h'> = <h> and g' = g^-1");
    CHECK_FALSE(similar_params(rank4(Z33, g, h), rank4(Z33, Z33.gen(1), h)).similar);
    CHECK(similar_params(rank0(Z33, Z33.gen(0), Z33.gen(1), h, 1), rank0(Z33, Z33.gen(0), Z33.gen(1), hi, -1)).similar);
    CHECK_FALSE(similar_params(rank0(Z33, Z33.gen(0), Z33.gen(1), h, 1), rank0(Z33, Z33.gen(0), Z33.gen(1), hi, 1)).similar);
    // swapping the generators of K reverses the orientation
    CHECK(similar_params(rank0(Z33, Z33.gen(0), Z33.gen(1), h, 1), rank0(Z33, Z33.gen(1), Z33.gen(0), h, -1)).similar);
    CHECK_FALSE(similar_params(rank8(Z33, h, 'p'), rank8(Z33, h, 'o')).similar);
    CHECK(similar_params(rank8(Z33, h, 'p'), rank8(Z33, hi, 'p')).similar);
    auto v2 = similar_params(rank2(Z33, Z33.gen(0), Z33.gen(1), h),
                             rank2(Z33, Z33.add(Z33.gen(1), h), Z33.add(Z33.gen(0), h), h));
    CHECK(v2.similar);
    CHECK(v2.trace.find("pi = (1 0 2)") != std::string::npos);
    CHECK_FALSE(similar_params(rank8(Z33, h, 'p'), rank4(Z33, g, h)).similar);
    CHECK_THROWS(similar_params(rank8(Z33, h, 'p'), rank8(make_group(0, {3}), make_group(0, {3}).gen(0), 'p')));
}

TEST_CASE("Okubo orientation")
{
    AbGroup Z33 = make_group(0, {3, 3, 3});
    auto p = rank0(Z33, Z33.gen(0), Z33.gen(1), Z33.gen(2), 1);
    GradedCyclic a = build(p);
    CHECK(okubo_orientation(a) == 1);
    CHECK(okubo_orientation(p) == 1);
    CHECK(distinguished_h(a) == Z33.gen(2));
    // the opposite algebra reverses the product and inverts the distinguished element
    GradedCyclic ao = opposite(a);
    CHECK(okubo_orientation(ao) == -1);
    CHECK(distinguished_h(ao) == Z33.neg(Z33.gen(2)));
    CHECK(orientation_invariant(Z33, 1, Z33.gen(2)) == orientation_invariant(Z33, -1, distinguished_h(ao)));
    // regrading by the centre orbit does not change it
    for (const auto& g : center_orbit(*a.V, a.gamma)) CHECK(okubo_orientation(GradedCyclic{a.V, g}) == 1);
    // delta = - and other generators of K
    for (const auto& q : enumerate_params(Z33, 0)) {
        if (!(q.K[0] == Z33.gen(0) || q.K[1] == Z33.gen(0))) continue;
        CHECK(okubo_orientation(build(q)) == okubo_orientation(q));
    }
    // (+, h) and (+, h^-1) are not similar: the invariant pairs differ
    CHECK(orientation_invariant(Z33, 1, Z33.gen(2)) != orientation_invariant(Z33, 1, Z33.neg(Z33.gen(2))));
    CHECK_THROWS(okubo_orientation(build(rank8(Z33, Z33.gen(2), 'o'))));
}

TEST_CASE("graded isomorphisms")
{
    AbGroup G = make_group(2, {3});
    auto p = rank2(G, G.gen(0), G.gen(1), G.gen(2));
    GradedCyclic a = build(p);
    IsoMap id;
    id.phi1 = Matrix::identity(24);
    CHECK(verify_graded_iso(id, a, a).ok);
    for (const auto& l : center_signs()) {
        GradedCyclic b{a.V, twist_by_center(*a.V, a.gamma, l)};
        auto r = verify_graded_iso(center_map(l), a, b);
        show(r);
        CHECK(r.ok);
    }
    // sigma (x) tau reverses the product, so it fails without the opposite flag
    Witness w = witness_map("rank2_h_flip", p);
    CHECK(w.report.ok);
    IsoMap plain = w.map;
    plain.opposite = false;
    CHECK_FALSE(verify_graded_iso(plain, build(w.source), w.B).ok);
    // a degree-changing map is rejected
    auto q = p;
    q.gamma = {G.gen(1), G.gen(0), p.gamma[2]};
    CHECK_FALSE(verify_graded_iso(id, a, build(q)).ok);
}

TEST_CASE("witness maps")
{
    AbGroup Z33 = make_group(0, {3, 3, 3});
    AbGroup ZZ3 = make_group(1, {3});
    std::vector<std::pair<std::string, TypeIIIParams>> cases{
        {"rank1_h_flip", rank1(make_group(0, {2, 2, 2, 3}))},
        {"rank4_h_flip", rank4(ZZ3, ZZ3.gen(0), ZZ3.gen(1))},
        {"rank2_h_flip", rank2(Z33, Z33.gen(0), Z33.gen(1), Z33.gen(2))},
        {"rank2_shift", rank2(Z33, Z33.gen(0), Z33.gen(1), Z33.gen(2))},
        {"rank2_shift", rank2(make_group(2, {3}), make_group(2, {3}).gen(0), make_group(2, {3}).gen(1),
                              make_group(2, {3}).gen(2))},
        {"rank8_h_flip", rank8(Z33, Z33.gen(2), 'p')},
        {"rank8_h_flip", rank8(Z33, Z33.gen(2), 'o')},
        {"rank0_flip", rank0(Z33, Z33.gen(0), Z33.gen(1), Z33.gen(2), 1)},
    };
    for (const auto& [kind, p] : cases) {
        CAPTURE(kind);
        Witness w = witness_map(kind, p);
        show(w.report);
        CHECK(w.report.ok);
        CHECK(similar_params(w.source, w.target).similar);
    }
    CHECK_THROWS(witness_map("rank0_flip", rank8(Z33, Z33.gen(2), 'o')));
}

TEST_CASE("fine Type III gradings")
{
    std::map<std::string, FineTypeIII> f;
    for (const char* k : {"cartan", "z2cubed", "okubo"}) f.emplace(k, fine_typeIII(k));
    CHECK(isomorphic(f.at("cartan").universal.U, make_group(2, {3})));
    CHECK(isomorphic(f.at("z2cubed").universal.U, make_group(0, {2, 2, 2, 3})));
    CHECK(isomorphic(f.at("okubo").universal.U, make_group(0, {3, 3, 3})));
    for (const auto& [a, fa] : f)
        for (const auto& [b, fb] : f) {
            if (a == b) continue;
            CAPTURE(a);
            CAPTURE(b);
            CHECK_FALSE(refinement_obstruction(fa.graded.gamma, fb.graded.gamma).empty());
        }
}

TEST_CASE("similarity is an equivalence relation")
{
    AbGroup Z33 = make_group(0, {3, 3, 3});
    AbGroup Z2Z3 = make_group(0, {2, 2, 2, 3});
    int classes = 0;
    for (int r : {0, 4, 8}) {
        auto ps = enumerate_params(Z33, r);
        CAPTURE(r);
        CHECK(equivalence(ps, &classes));
        MESSAGE("Z_3^3 rank " << r << ": " << ps.size() << " tuples, " << classes << " classes");
    }
    for (int r : {1, 2, 4, 8}) {
        auto ps = enumerate_params(Z2Z3, r);
        CAPTURE(r);
        CHECK(equivalence(ps, &classes));
        MESSAGE("Z_2^3 x Z_3 rank " << r << ": " << ps.size() << " tuples, " << classes << " classes");
    }
    CHECK(enumerate_params(Z2Z3, 0).empty());
    CHECK(enumerate_params(Z33, 1).empty());
}
