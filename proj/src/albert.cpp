#include "d4/albert.hpp"

#include <random>
#include <stdexcept>

namespace d4 {

namespace {

Vec basis_vec(int n, int k)
{
    Vec e(n);
    e[k] = 1;
    return e;
}

Vec combine(const std::vector<std::pair<Cyclo, const Vec*>>& terms, int n)
{
    Vec r(n);
    for (const auto& [c, v] : terms)
        if (!c.is_zero())
            for (int i = 0; i < n; ++i)
                if (!(*v)[i].is_zero()) r[i] += c * (*v)[i];
    return r;
}

}  // namespace

Vec AlbertAlgebra::unit() const { return basis_vec(kDim, 0); }

AlbertElem AlbertAlgebra::unpack(const Vec& x) const
{
    Vec l(x.begin(), x.begin() + 3), v(x.begin() + 3, x.end());
    return {CubicEtale::from_xi(l), V->from_xi(v)};
}

Vec AlbertAlgebra::pack(const AlbertElem& e) const
{
    Vec x = CubicEtale::to_xi(e.l);
    Vec v = V->to_xi(e.v);
    x.insert(x.end(), v.begin(), v.end());
    return x;
}

Cyclo AlbertAlgebra::norm(const Vec& x) const
{
    auto [l, v] = unpack(x);
    LElem b = V->bQ(v, V->mul(v, v));
    if (b[0] != b[1] || b[0] != b[2]) throw std::logic_error("b_Q(v, v*v) is not a scalar");
    return CubicEtale::norm(l)[0] + b[0] - CubicEtale::trace(CubicEtale::mul(l, V->Q(v)));
}

Cyclo AlbertAlgebra::trace(const Vec& x) const { return CubicEtale::trace(unpack(x).l); }

Cyclo AlbertAlgebra::trace(const Vec& x, const Vec& y) const
{
    auto a = unpack(x), b = unpack(y);
    return CubicEtale::trace(CubicEtale::mul(a.l, b.l)) + CubicEtale::trace(V->bQ(a.v, b.v));
}

Cyclo AlbertAlgebra::quadratic_trace(const Vec& x) const
{
    Cyclo t = trace(x);
    return Cyclo(1, 2) * (t * t - trace(mul(x, x)));
}

Vec AlbertAlgebra::sharp(const Vec& x) const
{
    auto [l, v] = unpack(x);
    LElem q = V->Q(v);
    LElem ls = CubicEtale::sharp(l);
    AlbertElem r;
    for (int c = 0; c < 3; ++c) r.l[c] = ls[c] - q[c];
    Vec vv = V->mul(v, v), lv = V->act(l, v);
    r.v = Vec(vv.size());
    for (std::size_t i = 0; i < vv.size(); ++i) r.v[i] = vv[i] - lv[i];
    return pack(r);
}

Vec AlbertAlgebra::cross(const Vec& x, const Vec& y) const
{
    Vec s(kDim);
    for (int i = 0; i < kDim; ++i) s[i] = x[i] + y[i];
    Vec a = sharp(s), b = sharp(x), c = sharp(y);
    for (int i = 0; i < kDim; ++i) a[i] = a[i] - b[i] - c[i];
    return a;
}

Vec AlbertAlgebra::product_formula(const Vec& x, const Vec& y) const
{
    Vec c = cross(x, y);
    const Cyclo tx = trace(x), ty = trace(y);
    const Vec one = unit();
    Vec r = combine({{Cyclo(1), &c}, {tx, &y}, {ty, &x}, {trace(x, y) - tx * ty, &one}}, kDim);
    for (auto& a : r) a = Cyclo(1, 2) * a;
    return r;
}

Vec AlbertAlgebra::mul(const Vec& x, const Vec& y) const { return alg->apply("product", x, y); }

AlbertAlgebra albert(std::shared_ptr<const CyclicAlgebra> V)
{
    if (V->dim() != 24) throw std::invalid_argument("the Albert construction needs a cyclic composition algebra of rank 8");
    AlbertAlgebra A;
    A.V = std::move(V);
    const int n = AlbertAlgebra::kDim;
    auto a = std::make_shared<StructAlgebra>();
    a->sort = "jordan";
    std::vector<std::string> labels{"1", "xi", "xi^2"};
    const auto& vl = A.V->structure_xi()->spaces[0].labels;
    labels.insert(labels.end(), vl.begin(), vl.end());
    a->spaces.push_back(Space{"J", n, labels});
    a->maps.emplace_back("product", 0, 0, 0, n, n);
    a->maps.emplace_back("trace", 0, 0, -1, n, n);
    a->maps.emplace_back("cross", 0, 0, 0, n, n);
    std::vector<Vec> e;
    for (int k = 0; k < n; ++k) e.push_back(basis_vec(n, k));
    for (int p = 0; p < n; ++p)
        for (int q = p; q < n; ++q) {
            SparseVec prod = to_sparse(A.product_formula(e[p], e[q]));
            SparseVec cr = to_sparse(A.cross(e[p], e[q]));
            Cyclo t = A.trace(e[p], e[q]);
            SparseVec tr;
            if (!t.is_zero()) tr.emplace_back(0, t);
            for (auto [i, j] : {std::pair{p, q}, std::pair{q, p}}) {
                a->maps[0].at(i, j) = prod;
                a->maps[1].at(i, j) = tr;
                a->maps[2].at(i, j) = cr;
            }
        }
    A.alg = a;
    return A;
}

Report verify_albert_structure(const AlbertAlgebra& A)
{
    Report rep;
    const int n = A.dim();
    std::vector<Vec> e;
    for (int k = 0; k < n; ++k) e.push_back(basis_vec(n, k));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            auto li = A.unpack(e[i]).l, lj = A.unpack(e[j]).l;
            if (A.mul(e[i], e[j]) != A.pack({CubicEtale::mul(li, lj), Vec(24)}))
                rep.fail("L is not a subalgebra: product of L basis elements " + std::to_string(i) + ", " +
                         std::to_string(j));
        }
    Matrix gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            gram(i, j) = A.trace(e[i], e[j]);
            if (i < 3 && j >= 3 && !gram(i, j).is_zero()) rep.fail("V is not orthogonal to L at J[" + std::to_string(j) + "]");
        }
    if (det(gram).is_zero()) rep.fail("trace form is degenerate");
    for (const LElem& l : {CubicEtale::one(), CubicEtale::xi(), LElem{Cyclo(2), Cyclo(3), Cyclo(5)}})
        if (A.norm(A.pack({l, Vec(24)})) != l[0] * l[1] * l[2]) rep.fail("N does not extend the norm of L");
    const Vec one = A.unit();
    if (A.norm(one) != Cyclo(1) || A.trace(one) != Cyclo(3) || A.sharp(one) != one) rep.fail("unit norm data");
    for (int k = 0; k < n; ++k) {
        if (A.mul(one, e[k]) != e[k]) rep.fail("1 is not a unit on J[" + std::to_string(k) + "]");
        // X^# = X^2 - T(X) X + S(X) 1
        Vec x2 = A.mul(e[k], e[k]);
        const Cyclo t = A.trace(e[k]);
        Vec s = A.sharp(e[k]);
        Vec rhs = combine({{Cyclo(1), &x2}, {-t, &e[k]}, {A.quadratic_trace(e[k]), &one}}, n);
        if (s != rhs) rep.fail("X^# != X^2 - T(X) X + S(X) 1 for X = J[" + std::to_string(k) + "]");
    }
    return rep;
}

Report verify_jordan(const StructAlgebra& J, const Vec& unit)
{
    Report rep;
    const auto& P = J.map("product");
    const int n = J.dim();
    auto prod = [&](const Vec& x, const Vec& y) { return P.apply(x, y, n); };
    std::vector<Vec> e, sq;
    for (int k = 0; k < n; ++k) {
        e.push_back(basis_vec(n, k));
        sq.push_back(prod(e[k], e[k]));
    }
    const auto& lab = J.spaces[0].labels;
    for (int i = 0; i < n; ++i) {
        if (prod(unit, e[i]) != e[i] || prod(e[i], unit) != e[i]) rep.fail("unit fails on " + lab[i]);
        for (int j = 0; j < n; ++j) {
            if (P.at(i, j) != P.at(j, i)) rep.fail("not commutative on " + lab[i] + ", " + lab[j]);
            Vec lhs = prod(prod(sq[i], e[j]), e[i]);
            Vec rhs = prod(sq[i], prod(e[j], e[i]));
            if (lhs != rhs) rep.fail("Jordan identity fails for X = " + lab[i] + ", Y = " + lab[j]);
        }
    }
    return rep;
}

Report verify_degree3(const AlbertAlgebra& A, const Vec& x)
{
    Report rep;
    Vec x2 = A.mul(x, x), x3 = A.mul(x2, x);
    const Vec one = A.unit();
    Vec r = combine({{Cyclo(1), &x3}, {-A.trace(x), &x2}, {A.quadratic_trace(x), &x}, {-A.norm(x), &one}}, A.dim());
    for (const auto& c : r)
        if (!c.is_zero()) {
            rep.fail("X^3 - T(X) X^2 + S(X) X - N(X) 1 is nonzero");
            break;
        }
    return rep;
}

Report verify_degree3_sweep(const AlbertAlgebra& A, int count, std::uint64_t seed)
{
    Report rep;
    const int n = A.dim();
    for (int k = 0; k < n; ++k) rep.merge(verify_degree3(A, basis_vec(n, k)), "J[" + std::to_string(k) + "]: ");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-5, 5), den(1, 3);
    for (int s = 0; s < count; ++s) {
        Vec x(n);
        for (auto& c : x) c = Cyclo(num(rng), den(rng));
        rep.merge(verify_degree3(A, x), "random element " + std::to_string(s) + ": ");
    }
    return rep;
}

Grading grade_albert(const AlbertAlgebra& A, const Grading& gV)
{
    if (gV.nspaces() != 2 || gV.alg->dim(0) != 24 || gV.alg->dim(1) != 3)
        throw std::invalid_argument("expected a grading on the sorts V, L of a cyclic composition algebra");
    auto r = verify_grading(gV);
    if (!r.ok) throw std::invalid_argument("grading on V does not verify: " + r.witnesses[0]);
    bool type3 = false;
    for (const auto& d : gV.deg[1])
        if (!gV.G.is_zero(d)) type3 = true;
    if (!type3) throw std::invalid_argument("precondition failed: the grading is not of Type III (L is trivially graded)");
    Grading g;
    g.alg = A.alg;
    g.G = gV.G;
    std::vector<GroupElem> deg = gV.deg[1];
    deg.insert(deg.end(), gV.deg[0].begin(), gV.deg[0].end());
    g.deg = {deg};
    auto frame = [&](int s) { return s < static_cast<int>(gV.frame.size()) ? gV.frame[s] : std::nullopt; };
    if (frame(0) || frame(1)) {
        Matrix f(27, 27);
        Matrix fl = frame(1) ? *frame(1) : Matrix::identity(3);
        Matrix fv = frame(0) ? *frame(0) : Matrix::identity(24);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) f(i, j) = fl(i, j);
        for (int i = 0; i < 24; ++i)
            for (int j = 0; j < 24; ++j) f(3 + i, 3 + j) = fv(i, j);
        g.frame = {f};
    } else {
        g.frame = {std::nullopt};
    }
    auto rj = verify_grading(g);
    if (!rj.ok) throw std::runtime_error("extended grading on J does not verify: " + rj.witnesses[0]);
    return g;
}

}  // namespace d4
