#include "d4/cyclic.hpp"

#include <sstream>
#include <stdexcept>

namespace d4 {

namespace {

Cyclo omega() { return Cyclo::omega(default_field()); }

Cyclo omega_pow(long k)
{
    k %= 3;
    if (k < 0) k += 3;
    Cyclo w = omega();
    return k == 0 ? Cyclo(1) : k == 1 ? w : w * w;
}

}  // namespace

LElem CubicEtale::xi()
{
    Cyclo w = omega();
    return {Cyclo(1), w, w * w};
}

LElem CubicEtale::rho(const LElem& l, int power)
{
    power = ((power % 3) + 3) % 3;
    return {l[power % 3], l[(power + 1) % 3], l[(power + 2) % 3]};
}

LElem CubicEtale::tau(const LElem& l) { return {l[0], l[2], l[1]}; }

LElem CubicEtale::mul(const LElem& a, const LElem& b) { return {a[0] * b[0], a[1] * b[1], a[2] * b[2]}; }

LElem CubicEtale::add(const LElem& a, const LElem& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

LElem CubicEtale::inverse(const LElem& a)
{
    for (const auto& x : a)
        if (x.is_zero()) throw std::domain_error("element of L is not invertible");
    return {a[0].inverse(), a[1].inverse(), a[2].inverse()};
}

Vec CubicEtale::to_xi(const LElem& l)
{
    Vec c(3);
    for (int k = 0; k < 3; ++k) {
        Cyclo s;
        for (int j = 0; j < 3; ++j) s += omega_pow(-k * j) * l[j];
        c[k] = s * Cyclo(1, 3);
    }
    return c;
}

LElem CubicEtale::from_xi(const Vec& c)
{
    LElem l;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
            if (!c[k].is_zero()) l[j] += omega_pow(k * j) * c[k];
    return l;
}

Vec CyclicAlgebra::mul(const Vec& x, const Vec& y) const
{
    const Vec& a = op ? y : x;
    const Vec& b = op ? x : y;
    const int d = S.dim();
    auto part = [&](const Vec& v, int c) { return Vec(v.begin() + d * c, v.begin() + d * (c + 1)); };
    Vec r(3 * d);
    for (int c = 0; c < 3; ++c) {
        Vec p = S.mul(part(a, (c + 1) % 3), part(b, (c + 2) % 3));
        for (int i = 0; i < d; ++i)
            if (!p[i].is_zero()) r[d * c + i] = lambda[c] * p[i];
    }
    return r;
}

LElem CyclicAlgebra::bQ(const Vec& x, const Vec& y) const
{
    const int d = S.dim();
    LElem r;
    for (int c = 0; c < 3; ++c) {
        Vec a(x.begin() + d * c, x.begin() + d * (c + 1)), b(y.begin() + d * c, y.begin() + d * (c + 1));
        r[c] = mu[c] * S.polar(a, b);
    }
    return r;
}

LElem CyclicAlgebra::Q(const Vec& x) const
{
    LElem b = bQ(x, x);
    for (auto& v : b) v *= Cyclo(1, 2);
    return b;
}

Vec CyclicAlgebra::act(const LElem& l, const Vec& x) const
{
    const int d = S.dim();
    Vec r(x.size());
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < d; ++i)
            if (!x[d * c + i].is_zero()) r[d * c + i] = l[c] * x[d * c + i];
    return r;
}

Vec CyclicAlgebra::from_xi(const Vec& v) const
{
    const int d = S.dim();
    Vec x(3 * d);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < d; ++i) {
            const Cyclo& a = v[d * j + i];
            if (a.is_zero()) continue;
            for (int c = 0; c < 3; ++c) x[d * c + i] += omega_pow(j * c) * a;
        }
    return x;
}

Vec CyclicAlgebra::to_xi(const Vec& x) const
{
    const int d = S.dim();
    Vec v(3 * d);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < d; ++i) {
            Cyclo s;
            for (int c = 0; c < 3; ++c)
                if (!x[d * c + i].is_zero()) s += omega_pow(-j * c) * x[d * c + i];
            v[d * j + i] = s * Cyclo(1, 3);
        }
    return v;
}

Matrix CyclicAlgebra::xi_to_comp() const
{
    Matrix m(dim(), dim());
    for (int k = 0; k < dim(); ++k) {
        Vec e(dim());
        e[k] = 1;
        m.set_col(k, from_xi(e));
    }
    return m;
}

AlgebraPtr CyclicAlgebra::structure_xi() const
{
    if (xi_cache_) return xi_cache_;
    const int n = dim(), d = S.dim();
    auto a = std::make_shared<StructAlgebra>();
    a->sort = "cyclic";
    std::vector<std::string> vl, ll{"1", "xi", "xi^2"};
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < d; ++i)
            vl.push_back(S.alg->spaces[0].labels[i] + (j == 0 ? "" : j == 1 ? "(x)xi" : "(x)xi^2"));
    a->spaces.push_back(Space{"V", n, vl});
    a->spaces.push_back(Space{"L", 3, ll});
    a->maps.emplace_back("product", 0, 0, 0, n, n);
    a->maps.emplace_back("bQ", 0, 0, 1, n, n);
    a->maps.emplace_back("action", 1, 0, 0, 3, n);
    a->maps.emplace_back("L", 1, 1, 1, 3, 3);
    std::vector<Vec> comp(n);
    for (int k = 0; k < n; ++k) {
        Vec e(n);
        e[k] = 1;
        comp[k] = from_xi(e);
    }
    std::vector<LElem> lb;
    for (int k = 0; k < 3; ++k) {
        Vec e(3);
        e[k] = 1;
        lb.push_back(CubicEtale::from_xi(e));
    }
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            a->maps[0].at(p, q) = to_sparse(to_xi(mul(comp[p], comp[q])));
            a->maps[1].at(p, q) = to_sparse(CubicEtale::to_xi(bQ(comp[p], comp[q])));
        }
    for (int k = 0; k < 3; ++k) {
        for (int q = 0; q < n; ++q) a->maps[2].at(k, q) = to_sparse(to_xi(act(lb[k], comp[q])));
        for (int q = 0; q < 3; ++q) a->maps[3].at(k, q) = to_sparse(CubicEtale::to_xi(CubicEtale::mul(lb[k], lb[q])));
    }
    (void)d;
    xi_cache_ = a;
    return a;
}

CyclicAlgebra cyclic_from_symmetric(const CompositionAlgebra& S)
{
    if (S.dim() != 8) throw std::invalid_argument("cyclic composition algebras need an 8-dimensional S");
    CyclicAlgebra V;
    V.S = S;
    return V;
}

CyclicAlgebra opposite(const CyclicAlgebra& V)
{
    CyclicAlgebra W = V;
    W.op = !V.op;
    return W;
}

CyclicAlgebra scale(const CyclicAlgebra& V, const LElem& lambda)
{
    CubicEtale::inverse(lambda);
    CyclicAlgebra W = V;
    W.lambda = CubicEtale::mul(V.lambda, lambda);
    W.mu = CubicEtale::mul(V.mu, CubicEtale::sharp(lambda));
    return W;
}

namespace {

std::string lstr(const LElem& l)
{
    std::ostringstream os;
    os << "(" << l[0] << ", " << l[1] << ", " << l[2] << ")";
    return os.str();
}

bool lzero(const LElem& l) { return l[0].is_zero() && l[1].is_zero() && l[2].is_zero(); }

}  // namespace

Report verify_cyclic_axioms(const CyclicAlgebra& V, std::uint64_t seed)
{
    Report rep;
    const int n = V.dim();
    const int t = V.twist();
    auto xi_basis = [&](int k) {
        Vec e(n);
        e[k] = 1;
        return V.from_xi(e);
    };
    std::vector<Vec> B(n);
    for (int k = 0; k < n; ++k) B[k] = xi_basis(k);
    std::vector<Vec> P(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) P[i * n + j] = V.mul(B[i], B[j]);
    const LElem xi = CubicEtale::xi();
    const auto lab = [&](int k) { return V.structure_xi()->spaces[0].labels[k]; };
    // nondegenerate form
    if (det(V.S.gram()).is_zero()) rep.fail("b_Q is degenerate");
    for (int i = 0; i < n; ++i) {
        Vec xx = V.act(xi, B[i]);
        for (int j = 0; j < n; ++j) {
            const Vec& xy = P[i * n + j];
            if (V.mul(xx, B[j]) != V.act(CubicEtale::rho(xi, t), xy))
                rep.fail("(xi x)*y != rho(xi)(x*y) for x = " + lab(i) + ", y = " + lab(j));
            if (V.mul(B[j], xx) != V.act(CubicEtale::rho(xi, 2 * t), P[j * n + i]))
                rep.fail("y*(xi x) != rho^2(xi)(y*x) for x = " + lab(i) + ", y = " + lab(j));
            if (V.Q(xy) != CubicEtale::mul(CubicEtale::rho(V.Q(B[i]), t), CubicEtale::rho(V.Q(B[j]), 2 * t)))
                rep.fail("Q(x*y) != rho(Q(x)) rho^2(Q(y)) for x = " + lab(i) + ", y = " + lab(j));
            // cyclic composition identities
            LElem qx = V.Q(B[i]);
            if (V.mul(xy, B[i]) != V.act(CubicEtale::rho(qx, 2 * t), B[j]))
                rep.fail("(x*y)*x != rho^2(Q(x)) y for x = " + lab(i) + ", y = " + lab(j));
            if (V.mul(B[i], P[j * n + i]) != V.act(CubicEtale::rho(qx, t), B[j]))
                rep.fail("x*(y*x) != rho(Q(x)) y for x = " + lab(i) + ", y = " + lab(j));
            if (V.bQ(B[i], B[j]) != V.bQ(B[j], B[i])) rep.fail("b_Q not symmetric on " + lab(i) + ", " + lab(j));
        }
    }
    // b_Q(x*y, z) = rho(b_Q(y*z, x)) = rho^2(b_Q(z*x, y)) on all basis triples
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                LElem a = V.bQ(P[i * n + j], B[k]);
                LElem b = CubicEtale::rho(V.bQ(P[j * n + k], B[i]), t);
                LElem c = CubicEtale::rho(V.bQ(P[k * n + i], B[j]), 2 * t);
                if (a != b || a != c)
                    rep.fail("b_Q cyclic identity fails on " + lab(i) + ", " + lab(j) + ", " + lab(k) + ": " + lstr(a) +
                             " vs " + lstr(b) + " vs " + lstr(c));
            }
    std::mt19937_64 rng(seed);
    for (int r = 0; r < 10; ++r) {
        Vec x = random_vector(n, rng), y = random_vector(n, rng);
        Vec xy = V.mul(x, y);
        LElem qx = V.Q(x);
        if (V.Q(xy) != CubicEtale::mul(CubicEtale::rho(qx, t), CubicEtale::rho(V.Q(y), 2 * t)))
            rep.fail("Q(x*y) != rho(Q(x)) rho^2(Q(y)) on a random pair");
        if (V.mul(xy, x) != V.act(CubicEtale::rho(qx, 2 * t), y)) rep.fail("(x*y)*x != rho^2(Q(x)) y on a random pair");
        if (V.mul(x, V.mul(y, x)) != V.act(CubicEtale::rho(qx, t), y))
            rep.fail("x*(y*x) != rho(Q(x)) y on a random pair");
    }
    (void)lzero;
    return rep;
}

Report verify_self_similitude(const CyclicAlgebra& V, const LElem& l)
{
    Report rep;
    LElem param = CubicEtale::mul(CubicEtale::inverse(l), CubicEtale::sharp(l));
    LElem mult = CubicEtale::mul(l, l);
    if (mult != CubicEtale::sharp(param)) rep.fail("multiplier is not the adjoint of the parameter");
    CyclicAlgebra W = scale(V, param);
    const int n = V.dim();
    for (int i = 0; i < n; ++i) {
        Vec x(n);
        x[i] = 1;
        Vec lx = V.act(l, x);
        if (V.Q(lx) != CubicEtale::mul(mult, V.Q(x))) rep.fail("Q(lx) != l^2 Q(x) at basis vector " + std::to_string(i));
        for (int j = 0; j < n; ++j) {
            Vec y(n);
            y[j] = 1;
            if (V.mul(lx, V.act(l, y)) != V.act(l, W.mul(x, y)))
                rep.fail("(lx)*(ly) != l (x *' y) at " + std::to_string(i) + ", " + std::to_string(j));
        }
    }
    return rep;
}

ParaSubalgebra para_subalgebra_from_idempotent(const CyclicAlgebra& V, const Vec& eps)
{
    const int n = V.dim();
    if (is_zero(eps) || V.mul(eps, eps) != eps) throw std::invalid_argument("epsilon is not a nonzero idempotent");
    ParaSubalgebra out;
    if (V.Q(eps) != CubicEtale::one()) out.report.fail("Q(eps) != 1");
    // X*eps - b_Q(X,eps) eps + X = 0, linear in X
    Matrix A(n, n);
    for (int k = 0; k < n; ++k) {
        Vec x(n);
        x[k] = 1;
        Vec r = add(sub(V.mul(x, eps), V.act(V.bQ(x, eps), eps)), x);
        A.set_col(k, r);
    }
    Matrix K = nullspace(A);
    out.basis = K;
    if (K.cols() != 8) {
        out.report.fail("C_eps has dimension " + std::to_string(K.cols()) + ", expected 8");
        return out;
    }
    const int d = 8;
    auto alg = std::make_shared<StructAlgebra>();
    alg->sort = "symmetric-composition";
    std::vector<std::string> labels;
    for (int i = 0; i < d; ++i) labels.push_back("c" + std::to_string(i));
    alg->spaces.push_back(Space{"C_eps", d, labels});
    alg->maps.emplace_back("product", 0, 0, 0, d, d);
    alg->maps.emplace_back("n", 0, 0, -1, d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec p = V.mul(K.col(i), K.col(j));
            auto c = coordinates(K, p);
            if (!c) {
                out.report.fail("C_eps is not closed under the product");
                return out;
            }
            alg->maps[0].at(i, j) = to_sparse(*c);
            LElem b = V.bQ(K.col(i), K.col(j));
            if (b[0] != b[1] || b[0] != b[2]) out.report.fail("b_Q on C_eps is not scalar valued");
            if (!b[0].is_zero()) alg->maps[1].at(i, j) = {{0, b[0]}};
        }
    auto ecoords = coordinates(K, eps);
    if (!ecoords) {
        out.report.fail("eps does not lie in C_eps");
        return out;
    }
    out.algebra = CompositionAlgebra{alg, "para-hurwitz", *ecoords};
    out.report.merge(is_symmetric_composition(out.algebra), "restriction: ");
    // para-unit: eps . x = x . eps = n(x, eps) eps - x
    for (int i = 0; i < d; ++i) {
        Vec x(d);
        x[i] = 1;
        Vec bar = sub(scale(out.algebra.polar(x, *ecoords), *ecoords), x);
        if (out.algebra.mul(*ecoords, x) != bar || out.algebra.mul(x, *ecoords) != bar)
            out.report.fail("eps is not a para-unit on basis vector " + std::to_string(i));
    }
    return out;
}

Grading tensor_grading(const CyclicAlgebra& V, const Grading& gamma_S, const GroupElem& h)
{
    if (gamma_S.alg != V.S.alg) throw std::invalid_argument("grading is not on the algebra underlying V");
    if (gamma_S.frame.size() > 0 && gamma_S.frame[0]) throw std::invalid_argument("tensor grading needs an aligned grading on S");
    const AbGroup& G = gamma_S.G;
    const int d = V.S.dim();
    std::vector<GroupElem> dv(3 * d), dl(3);
    for (int j = 0; j < 3; ++j) {
        GroupElem jh = G.mul(j, h);
        dl[j] = jh;
        for (int i = 0; i < d; ++i) dv[d * j + i] = G.add(gamma_S.deg[0][i], jh);
    }
    return aligned_grading(V.structure_xi(), G, {dv, dl});
}

}  // namespace d4
