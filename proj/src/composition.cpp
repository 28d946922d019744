#include "d4/composition.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace d4 {

Vec CompositionAlgebra::mul(const Vec& x, const Vec& y) const { return product().apply(x, y, dim()); }

Cyclo CompositionAlgebra::polar(const Vec& x, const Vec& y) const { return alg->map("n").apply(x, y, 1)[0]; }

Cyclo CompositionAlgebra::norm(const Vec& x) const { return polar(x, x) * Cyclo(1, 2); }

Matrix CompositionAlgebra::gram() const
{
    const auto& n = alg->map("n");
    Matrix g(dim(), dim());
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            if (!n.at(i, j).empty()) g(i, j) = n.at(i, j)[0].second;
    return g;
}

Vec CompositionAlgebra::basis(int i) const
{
    Vec v(dim());
    v[i] = 1;
    return v;
}

Vec CompositionAlgebra::conj(const Vec& x) const
{
    if (unit.empty()) throw std::logic_error("conjugation needs a unital composition algebra");
    return sub(scale(polar(x, unit), unit), x);
}

namespace {

std::shared_ptr<StructAlgebra> make_alg(const std::string& sort, int d, std::vector<std::string> labels)
{
    auto a = std::make_shared<StructAlgebra>();
    a->sort = sort;
    a->spaces.push_back(Space{"S", d, std::move(labels)});
    a->maps.emplace_back("product", 0, 0, 0, d, d);
    a->maps.emplace_back("n", 0, 0, -1, d, d);
    return a;
}

void set_polar(StructAlgebra& a, const Matrix& g)
{
    auto& n = a.map("n");
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) n.at(i, j) = g(i, j).is_zero() ? SparseVec{} : SparseVec{{0, g(i, j)}};
}

Matrix conj_matrix(const CompositionAlgebra& c)
{
    Matrix m(c.dim(), c.dim());
    for (int j = 0; j < c.dim(); ++j) m.set_col(j, c.conj(c.basis(j)));
    return m;
}

// Zorn vector matrix [[a,u],[v,b]]
struct Zorn {
    Cyclo a, b;
    std::array<Cyclo, 3> u, v;
};

Cyclo zdot(const std::array<Cyclo, 3>& x, const std::array<Cyclo, 3>& y)
{
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

std::array<Cyclo, 3> zcross(const std::array<Cyclo, 3>& x, const std::array<Cyclo, 3>& y)
{
    return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

Zorn zmul(const Zorn& x, const Zorn& y)
{
    Zorn r;
    r.a = x.a * y.a + zdot(x.u, y.v);
    r.b = x.b * y.b + zdot(x.v, y.u);
    auto c1 = zcross(x.v, y.v), c2 = zcross(x.u, y.u);
    for (int i = 0; i < 3; ++i) {
        r.u[i] = x.a * y.u[i] + y.b * x.u[i] - c1[i];
        r.v[i] = y.a * x.v[i] + x.b * y.v[i] + c2[i];
    }
    return r;
}

// basis order e1 (b slot), e2 (a slot), u1..u3, v1..v3
Zorn zbasis(int k)
{
    Zorn z;
    if (k == 0) z.b = 1;
    if (k == 1) z.a = 1;
    if (k >= 2 && k < 5) z.u[k - 2] = 1;
    if (k >= 5) z.v[k - 5] = 1;
    return z;
}

Vec zvec(const Zorn& z)
{
    Vec v(8);
    v[0] = z.b;
    v[1] = z.a;
    for (int i = 0; i < 3; ++i) {
        v[2 + i] = z.u[i];
        v[5 + i] = z.v[i];
    }
    return v;
}

}  // namespace

CompositionAlgebra field_hurwitz()
{
    auto a = make_alg("composition", 1, {"1"});
    a->maps[0].at(0, 0) = {{0, Cyclo(1)}};
    Matrix g(1, 1);
    g(0, 0) = 2;
    set_polar(*a, g);
    a->involution = Matrix::identity(1);
    return CompositionAlgebra{a, "hurwitz", Vec{Cyclo(1)}};
}

CompositionAlgebra split_quadratic()
{
    auto a = make_alg("composition", 2, {"f1", "f2"});
    a->maps[0].at(0, 0) = {{0, Cyclo(1)}};
    a->maps[0].at(1, 1) = {{1, Cyclo(1)}};
    Matrix g(2, 2);
    g(0, 1) = g(1, 0) = 1;
    set_polar(*a, g);
    CompositionAlgebra c{a, "hurwitz", Vec{Cyclo(1), Cyclo(1)}};
    a->involution = conj_matrix(c);
    return c;
}

CompositionAlgebra zorn_cayley()
{
    auto a = make_alg("composition", 8, {"e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"});
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) a->maps[0].at(i, j) = to_sparse(zvec(zmul(zbasis(i), zbasis(j))));
    // n = ab - u.v
    Matrix g(8, 8);
    g(0, 1) = g(1, 0) = 1;
    for (int i = 0; i < 3; ++i) g(2 + i, 5 + i) = g(5 + i, 2 + i) = -1;
    set_polar(*a, g);
    Vec unit(8);
    unit[0] = unit[1] = 1;
    CompositionAlgebra c{a, "hurwitz", unit};
    a->involution = conj_matrix(c);
    return c;
}

CompositionAlgebra cayley_dickson(const CompositionAlgebra& A, const Cyclo& mu)
{
    const int d = A.dim();
    std::vector<std::string> labels;
    for (const auto& l : A.alg->spaces[0].labels) labels.push_back("(" + l + ",0)");
    for (const auto& l : A.alg->spaces[0].labels) labels.push_back("(0," + l + ")");
    auto a = make_alg("composition", 2 * d, labels);
    auto split = [d](const Vec& x) {
        return std::pair<Vec, Vec>{Vec(x.begin(), x.begin() + d), Vec(x.begin() + d, x.end())};
    };
    auto join = [](const Vec& x, const Vec& y) {
        Vec r = x;
        r.insert(r.end(), y.begin(), y.end());
        return r;
    };
    for (int i = 0; i < 2 * d; ++i)
        for (int j = 0; j < 2 * d; ++j) {
            Vec x(2 * d), y(2 * d);
            x[i] = 1;
            y[j] = 1;
            auto [p, q] = split(x);
            auto [r, s] = split(y);
            Vec first = add(A.mul(p, r), scale(mu, A.mul(A.conj(s), q)));
            Vec second = add(A.mul(s, p), A.mul(q, A.conj(r)));
            a->maps[0].at(i, j) = to_sparse(join(first, second));
        }
    Matrix g(2 * d, 2 * d), ga = A.gram();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            g(i, j) = ga(i, j);
            g(d + i, d + j) = -mu * ga(i, j);
        }
    set_polar(*a, g);
    Vec unit = join(A.unit, Vec(d));
    CompositionAlgebra c{a, "hurwitz", unit};
    a->involution = conj_matrix(c);
    return c;
}

CompositionAlgebra doubled_cayley()
{
    CompositionAlgebra c = field_hurwitz();
    for (int k = 0; k < 3; ++k) c = cayley_dickson(c, Cyclo(1));
    return c;
}

CompositionAlgebra para(const CompositionAlgebra& c)
{
    const int d = c.dim();
    auto a = make_alg("symmetric-composition", d, c.alg->spaces[0].labels);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a->maps[0].at(i, j) = to_sparse(c.mul(c.conj(c.basis(i)), c.conj(c.basis(j))));
    a->maps[1] = c.alg->map("n");
    return CompositionAlgebra{a, "para-hurwitz", c.unit};
}

CompositionAlgebra para_quadratic() { return para(split_quadratic()); }

namespace {

struct OkuboData {
    std::vector<Matrix> mats;  // 8 basis matrices then identity
    std::vector<Matrix> invs;
    std::vector<std::array<int, 2>> ab;
};

const OkuboData& okubo_data(const FieldDescriptor& F)
{
    static std::map<int, OkuboData> cache;
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(F.conductor);
    if (it != cache.end()) return it->second;
    Cyclo w = Cyclo::omega(F);
    Matrix X(3, 3), Y(3, 3);
    X(0, 0) = 1;
    X(1, 1) = w;
    X(2, 2) = w * w;
    for (int j = 0; j < 3; ++j) Y((j + 1) % 3, j) = 1;
    auto mpow = [](const Matrix& m, int e) {
        Matrix r = Matrix::identity(3);
        for (int i = 0; i < e; ++i) r = r * m;
        return r;
    };
    OkuboData d;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == 0 && b == 0) continue;
            d.ab.push_back({a, b});
            d.mats.push_back(mpow(X, a) * mpow(Y, b));
        }
    d.ab.push_back({0, 0});
    d.mats.push_back(Matrix::identity(3));
    for (const auto& m : d.mats) d.invs.push_back(*inverse(m));
    return cache.emplace(F.conductor, std::move(d)).first->second;
}

Cyclo trace(const Matrix& m) { return m(0, 0) + m(1, 1) + m(2, 2); }

}  // namespace

std::vector<Matrix> okubo_matrices() { return okubo_data(default_field()).mats; }

Vec okubo_coords(const Matrix& m)
{
    const auto& d = okubo_data(default_field());
    Vec v(8);
    for (int k = 0; k < 8; ++k) v[k] = trace(m * d.invs[k]) * Cyclo(1, 3);
    if (!trace(m).is_zero()) throw std::invalid_argument("matrix is not traceless");
    return v;
}

CompositionAlgebra okubo_sl3()
{
    const auto& F = default_field();
    const auto& d = okubo_data(F);
    Cyclo w = Cyclo::omega(F);
    Cyclo mu = (Cyclo(2) + w) * Cyclo(1, 3);
    Cyclo nu = Cyclo(1) - mu;
    std::vector<std::string> labels;
    for (int k = 0; k < 8; ++k)
        labels.push_back("X^" + std::to_string(d.ab[k][0]) + "Y^" + std::to_string(d.ab[k][1]));
    auto a = make_alg("symmetric-composition", 8, labels);
    Matrix g(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            Matrix xy = d.mats[i] * d.mats[j], yx = d.mats[j] * d.mats[i];
            Cyclo t = trace(xy);
            Matrix p = mu * xy + nu * yx - (t * Cyclo(1, 3)) * Matrix::identity(3);
            a->maps[0].at(i, j) = to_sparse(okubo_coords(p));
            g(i, j) = t * Cyclo(1, 3);
        }
    set_polar(*a, g);
    return CompositionAlgebra{a, "okubo", {}};
}

Vec random_vector(int n, std::mt19937_64& rng, int range)
{
    const auto& F = default_field();
    bool has_omega = F.conductor % 3 == 0;
    std::uniform_int_distribution<int> d(-range, range);
    Vec v(n);
    for (auto& x : v) {
        x = Cyclo(d(rng));
        if (has_omega && rng() % 3 == 0) x += Cyclo(d(rng)) * Cyclo::omega(F);
    }
    return v;
}

namespace {

std::string vstr(const Vec& v)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << "]";
    return os.str();
}

std::string lab(const CompositionAlgebra& c, int i) { return c.alg->spaces[0].labels.at(i); }

void check_nondegenerate(const CompositionAlgebra& c, Report& rep)
{
    Matrix g = c.gram();
    if (!(g == g.transpose())) rep.fail("polar form is not symmetric");
    if (det(g).is_zero()) rep.fail("norm is degenerate");
}

}  // namespace

Report is_hurwitz(const CompositionAlgebra& c, std::uint64_t seed)
{
    Report rep;
    const int d = c.dim();
    if (c.unit.empty()) {
        rep.fail("no unit element recorded");
        return rep;
    }
    check_nondegenerate(c, rep);
    for (int i = 0; i < d; ++i) {
        Vec x = c.basis(i);
        if (c.mul(c.unit, x) != x || c.mul(x, c.unit) != x) rep.fail("unit fails on " + lab(c, i));
    }
    if (c.norm(c.unit) != Cyclo(1)) rep.fail("n(1) != 1");
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec x = c.basis(i), y = c.basis(j);
            Vec xy = c.mul(x, y);
            if (c.norm(xy) != c.norm(x) * c.norm(y))
                rep.fail("n(" + lab(c, i) + "*" + lab(c, j) + ") != n(" + lab(c, i) + ")n(" + lab(c, j) + ")");
            if (c.conj(xy) != c.mul(c.conj(y), c.conj(x)))
                rep.fail("conjugation is not an anti-automorphism on " + lab(c, i) + ", " + lab(c, j));
        }
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 20; ++t) {
        Vec x = random_vector(d, rng), y = random_vector(d, rng);
        if (c.norm(c.mul(x, y)) != c.norm(x) * c.norm(y)) rep.fail("n(xy) != n(x)n(y) for x = " + vstr(x) + ", y = " + vstr(y));
        if (c.conj(c.conj(x)) != x) rep.fail("conjugation is not an involution");
    }
    return rep;
}

Report is_symmetric_composition(const CompositionAlgebra& s, std::uint64_t seed)
{
    Report rep;
    const int d = s.dim();
    check_nondegenerate(s, rep);
    std::vector<Vec> prod(static_cast<std::size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) prod[i * d + j] = s.mul(s.basis(i), s.basis(j));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec x = s.basis(i), y = s.basis(j);
            const Vec& xy = prod[i * d + j];
            if (s.norm(xy) != s.norm(x) * s.norm(y))
                rep.fail("n(" + lab(s, i) + "*" + lab(s, j) + ") != n(" + lab(s, i) + ")n(" + lab(s, j) + ")");
            Vec nxy = scale(s.norm(x), y);
            if (s.mul(xy, x) != nxy) rep.fail("(x*y)*x != n(x)y for x = " + lab(s, i) + ", y = " + lab(s, j));
            if (s.mul(x, prod[j * d + i]) != nxy) rep.fail("x*(y*x) != n(x)y for x = " + lab(s, i) + ", y = " + lab(s, j));
            for (int k = 0; k < d; ++k)
                if (s.polar(xy, s.basis(k)) != s.polar(x, prod[j * d + k]))
                    rep.fail("n(x*y,z) != n(x,y*z) for " + lab(s, i) + ", " + lab(s, j) + ", " + lab(s, k));
        }
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 20; ++t) {
        Vec x = random_vector(d, rng), y = random_vector(d, rng);
        Vec xy = s.mul(x, y);
        if (s.norm(xy) != s.norm(x) * s.norm(y)) rep.fail("n(x*y) != n(x)n(y) for x = " + vstr(x) + ", y = " + vstr(y));
        Vec nxy = scale(s.norm(x), y);
        if (s.mul(xy, x) != nxy || s.mul(x, s.mul(y, x)) != nxy)
            rep.fail("(x*y)*x = n(x)y = x*(y*x) fails for x = " + vstr(x) + ", y = " + vstr(y));
    }
    return rep;
}

std::vector<Vec> nonzero_idempotents(const CompositionAlgebra& s)
{
    const int d = s.dim();
    std::vector<Vec> cands;
    if (s.kind == "para-hurwitz" && !s.unit.empty()) cands.push_back(s.unit);
    if (s.kind == "okubo") {
        // diagonal ansatz: traceless diagonal d with d_i^2 - tr(d^2)/3 = d_i
        for (int pos = 2; pos >= 0; --pos) {
            Matrix m(3, 3);
            for (int i = 0; i < 3; ++i) m(i, i) = i == pos ? 2 : -1;
            cands.push_back(okubo_coords(m));
        }
    }
    // basis pairs spanning a para-quadratic subalgebra: b_i*b_i = alpha b_j, b_j*b_j = beta b_i,
    // b_i*b_j = b_j*b_i = 0; then x b_i + y b_j is idempotent iff x = beta y^2, y^3 = 1/(alpha beta^2).
    const auto& F = default_field();
    std::vector<Cyclo> roots{Cyclo(1)};
    if (F.conductor % 3 == 0) {
        Cyclo w = Cyclo::omega(F);
        roots.push_back(w);
        roots.push_back(w * w);
    }
    for (int i = 0; i < d; ++i) {
        const auto& ii = s.product().at(i, i);
        if (ii.size() == 1 && ii[0].first == i) {
            Vec e = s.basis(i);
            e[i] = ii[0].second.inverse();
            cands.push_back(e);
        }
        for (int j = i + 1; j < d; ++j) {
            const auto& jj = s.product().at(j, j);
            if (ii.size() != 1 || jj.size() != 1 || ii[0].first != j || jj[0].first != i) continue;
            if (!s.product().at(i, j).empty() || !s.product().at(j, i).empty()) continue;
            Cyclo alpha = ii[0].second, beta = jj[0].second;
            Cyclo target = (alpha * beta * beta).inverse();
            if (!target.is_one()) continue;
            for (const auto& y : roots) {
                Vec e(d);
                e[i] = beta * y * y;
                e[j] = y;
                cands.push_back(e);
            }
        }
    }
    std::vector<Vec> out;
    for (const auto& e : cands) {
        if (is_zero(e) || s.mul(e, e) != e) continue;
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    }
    return out;
}

Vec nonzero_idempotent(const CompositionAlgebra& s)
{
    auto all = nonzero_idempotents(s);
    if (all.empty()) throw std::runtime_error("no nonzero idempotent found by the structured search");
    return all.front();
}

Grading cartan_grading_cayley(const CompositionAlgebra& zorn)
{
    AbGroup G = make_group(2, {});
    std::vector<GroupElem> deg(8, G.zero());
    const long long u[3][2] = {{1, 0}, {0, 1}, {-1, -1}};
    for (int i = 0; i < 3; ++i) {
        deg[2 + i] = G.elem({u[i][0], u[i][1]});
        deg[5 + i] = G.elem({-u[i][0], -u[i][1]});
    }
    return aligned_grading(zorn.alg, G, {deg});
}

Grading z2cubed_grading_cayley(const CompositionAlgebra& doubled)
{
    AbGroup G = make_group(0, {2, 2, 2});
    std::vector<GroupElem> deg;
    for (int m = 0; m < 8; ++m) deg.push_back(G.elem({m & 1, (m >> 1) & 1, (m >> 2) & 1}));
    return aligned_grading(doubled.alg, G, {deg});
}

Grading okubo_grading(const CompositionAlgebra& okubo, int sign)
{
    AbGroup G = make_group(0, {3, 3});
    const auto& d = okubo_data(default_field());
    std::vector<GroupElem> deg;
    for (int k = 0; k < 8; ++k) {
        long long a = d.ab[k][0], b = d.ab[k][1];
        deg.push_back(sign > 0 ? G.elem({a, b}) : G.elem({b, a}));
    }
    return aligned_grading(okubo.alg, G, {deg});
}

}  // namespace d4
