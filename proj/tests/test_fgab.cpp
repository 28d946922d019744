#include "doctest.h"

#include "d4/fgab.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace d4;

namespace {

IntMat random_mat(int r, int c, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> d(-6, 6);
    IntMat m(r, c);
    for (auto& x : m.a) x = d(rng);
    return m;
}

}  // namespace

TEST_CASE("Smith normal form certificates")
{
    std::mt19937_64 rng(3);
    for (int t = 0; t < 60; ++t) {
        int r = 1 + t % 5, c = 1 + (t / 5) % 5;
        IntMat m = random_mat(r, c, rng);
        SNF s = smith_normal_form(m);
        IntMat d = s.U * m * s.V;
        CHECK(d.a == s.D.a);
        CHECK((s.U * s.Uinv).a == IntMat::identity(r).a);
        CHECK((s.V * s.Vinv).a == IntMat::identity(c).a);
        auto diag = s.diagonal();
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (i != j) CHECK(s.D(i, j) == 0);
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            CHECK(diag[i] >= 0);
            if (diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
            else CHECK(diag[i + 1] == 0);
        }
    }
}

TEST_CASE("canonical invariants")
{
    CHECK(make_group(0, {2, 2, 2, 3}).invariants() == std::vector<long long>{2, 2, 6});
    CHECK(make_group(2, {3}).invariants() == std::vector<long long>{3});
    CHECK(make_group(2, {3}).str() == "Z^2 x Z_3");
    CHECK(isomorphic(make_group(0, {6}), make_group(0, {2, 3})));
    CHECK(!isomorphic(make_group(0, {9, 3}), make_group(0, {3, 3, 3})));
    CHECK_THROWS(make_group(0, {1}));
}

TEST_CASE("element arithmetic and orders")
{
    AbGroup g = make_group(1, {9, 3});
    auto x = g.elem({2, 3, 1});
    CHECK(g.order(x) == 0);
    auto y = g.elem({0, 3, 1});
    CHECK(g.order(y) == 3);
    CHECK(g.is_zero(g.add(y, g.neg(y))));
    CHECK(g.mul(3, y) == g.zero());
    CHECK(g.elem({0, -1, 4}) == g.elem({0, 8, 1}));
}

TEST_CASE("quotients and subgroups")
{
    AbGroup g = make_group(0, {3, 3, 3});
    auto h = g.elem({0, 0, 1});
    Quotient q = quotient(g, {h});
    CHECK(q.group.invariants() == std::vector<long long>{3, 3});
    CHECK(q.group.is_zero(q.proj.apply(h)));
    CHECK(q.proj.surjective());
    CHECK(q.proj.well_defined());

    Subgroup s = subgroup_generated(g, {g.elem({1, 1, 0}), g.elem({2, 2, 0})});
    CHECK(s.group.order() == 3);
    CHECK(s.incl.well_defined());
    CHECK(s.incl.injective());

    AbGroup z = make_group(2, {3});
    Quotient qz = quotient(z, {z.elem({1, 1, 0})});
    CHECK(qz.group.free_rank() == 1);
    CHECK(qz.group.invariants() == std::vector<long long>{3});
    Quotient qz2 = quotient(z, {z.elem({3, 0, 0})});
    CHECK(qz2.group.invariants() == std::vector<long long>{3, 3});

    CHECK(contains(g, {g.elem({1, 0, 0}), g.elem({0, 1, 0})}, g.elem({2, 1, 0})));
    CHECK(!contains(g, {g.elem({1, 0, 0}), g.elem({0, 1, 0})}, g.elem({2, 1, 1})));
    CHECK(same_subgroup(g, {g.elem({1, 0, 0})}, {g.elem({2, 0, 0})}));
}

TEST_CASE("subgroup orders match brute-force closure")
{
    AbGroup g = make_group(0, {2, 2, 6});
    std::mt19937_64 rng(5);
    auto all = g.elements();
    for (int t = 0; t < 30; ++t) {
        std::vector<GroupElem> gens{all[rng() % all.size()], all[rng() % all.size()]};
        std::set<GroupElem> closure{g.zero()};
        bool grew = true;
        while (grew) {
            grew = false;
            for (auto x : std::vector<GroupElem>(closure.begin(), closure.end()))
                for (const auto& y : gens) grew |= closure.insert(g.add(x, y)).second;
        }
        Subgroup s = subgroup_generated(g, gens);
        CHECK(s.group.order() == static_cast<long long>(closure.size()));
        Quotient q = quotient(g, gens);
        CHECK(q.group.order() * static_cast<long long>(closure.size()) == g.order());
    }
}

TEST_CASE("quotient-existence bounds")
{
    CHECK(may_be_quotient(make_group(0, {3, 3, 3}), make_group(0, {3, 3})));
    CHECK(!may_be_quotient(make_group(0, {3, 3, 3}), make_group(0, {9})));
    CHECK(!may_be_quotient(make_group(0, {2, 2, 6}), make_group(1, {})));
    CHECK(may_be_quotient(make_group(2, {3}), make_group(0, {9, 3})));
    CHECK(p_layer(make_group(0, {9, 3}), 3, 2) == 1);
}

TEST_CASE("characters are orthogonal")
{
    const auto& F = make_field(12);
    AbGroup g = make_group(0, {2, 6});
    auto chars = characters(g, F);
    CHECK(chars.size() == 12);
    auto all = g.elements();
    for (const auto& c : chars) {
        Cyclo s;
        for (const auto& x : all) s += c.value(g, x, F);
        bool trivial = std::all_of(c.a.begin(), c.a.end(), [](long long v) { return v == 0; });
        CHECK(s == Cyclo(trivial ? 12 : 0));
        for (const auto& x : all)
            for (const auto& y : all)
                CHECK(c.value(g, g.add(x, y), F) == c.value(g, x, F) * c.value(g, y, F));
    }
    CHECK_THROWS_AS(characters(make_group(0, {9}), F), FieldError);
}
