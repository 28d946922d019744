#include "d4/trialitarian.hpp"

#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace d4 {

namespace {

Cyclo omega_pow(long k)
{
    k %= 3;
    if (k < 0) k += 3;
    Cyclo w = Cyclo::omega(default_field());
    return k == 0 ? Cyclo(1) : k == 1 ? w : w * w;
}

Matrix inverse_or_throw(const Matrix& m, const char* what)
{
    auto inv = inverse(m);
    if (!inv) throw std::domain_error(what);
    return *inv;
}

bool equal(const EElem& a, const EElem& b) { return a[0] == b[0] && a[1] == b[1] && a[2] == b[2]; }

EElem scaled(const EElem& a, const Cyclo& s) { return {s * a[0], s * a[1], s * a[2]}; }

EElem added(const EElem& a, const EElem& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

/// 24x24 matrix of z -> x * z (left) or z -> z * x (right) in component coordinates.
Matrix mult_matrix(const CyclicAlgebra& V, const Vec& x, bool left)
{
    const int N = V.dim();
    Matrix m(N, N);
    for (int j = 0; j < N; ++j) {
        Vec e(N);
        e[j] = 1;
        m.set_col(j, left ? V.mul(x, e) : V.mul(e, x));
    }
    return m;
}

Matrix block(const Matrix& m, int r0, int c0, int n)
{
    Matrix b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = m(r0 + i, c0 + j);
    return b;
}

std::vector<Vec> independent(const std::vector<Vec>& vs, int n)
{
    Echelon e(n);
    std::vector<Vec> out;
    for (const auto& v : vs)
        if (e.add(v)) out.push_back(v);
    return out;
}

}  // namespace

// ---------------------------------------------------------------- E

EElem EndAlgebra::zero() const { return {Matrix(8, 8), Matrix(8, 8), Matrix(8, 8)}; }

EElem EndAlgebra::identity() const { return {Matrix::identity(8), Matrix::identity(8), Matrix::identity(8)}; }

EElem EndAlgebra::from_xi(const Vec& c) const
{
    EElem a = zero();
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                const Cyclo& x = c[64 * k + 8 * i + j];
                if (x.is_zero()) continue;
                for (int b = 0; b < 3; ++b) a[b](i, j) += omega_pow(k * b) * x;
            }
    return a;
}

Vec EndAlgebra::to_xi(const EElem& a) const
{
    Vec c(192);
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                Cyclo s;
                for (int b = 0; b < 3; ++b)
                    if (!a[b](i, j).is_zero()) s += omega_pow(-k * b) * a[b](i, j);
                c[64 * k + 8 * i + j] = s * Cyclo(1, 3);
            }
    return c;
}

Vec EndAlgebra::to_comp(const EElem& a) const
{
    Vec c(192);
    for (int b = 0; b < 3; ++b)
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) c[64 * b + 8 * i + j] = a[b](i, j);
    return c;
}

EElem EndAlgebra::from_comp(const Vec& c) const
{
    EElem a = zero();
    for (int b = 0; b < 3; ++b)
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) a[b](i, j) = c[64 * b + 8 * i + j];
    return a;
}

EElem EndAlgebra::sigma(const EElem& a) const
{
    return {Binv * a[0].transpose() * B, Binv * a[1].transpose() * B, Binv * a[2].transpose() * B};
}

EElem EndAlgebra::mul(const EElem& a, const EElem& b) const { return {a[0] * b[0], a[1] * b[1], a[2] * b[2]}; }

Matrix EndAlgebra::as_matrix(const EElem& a) const
{
    Matrix m(24, 24);
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) m(8 * c + i, 8 * c + j) = a[c](i, j);
    return m;
}

EElem EndAlgebra::from_matrix(const Matrix& m) const
{
    EElem a = {block(m, 0, 0, 8), block(m, 8, 8, 8), block(m, 16, 16, 8)};
    if (as_matrix(a) != m) throw std::invalid_argument("operator is not L-linear");
    return a;
}

Vec EndAlgebra::apply(const EElem& a, const Vec& x) const { return as_matrix(a) * x; }

EElem EndAlgebra::phi(const Vec& x, const Vec& y) const
{
    EElem a = zero();
    for (int c = 0; c < 3; ++c) {
        Vec xc(x.begin() + 8 * c, x.begin() + 8 * c + 8), yc(y.begin() + 8 * c, y.begin() + 8 * c + 8);
        Vec by = B * yc;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                if (!xc[i].is_zero() && !by[j].is_zero()) a[c](i, j) = V.mu[c] * xc[i] * by[j];
    }
    return a;
}

EElem EndAlgebra::scalar(const LElem& l) const
{
    return {l[0] * Matrix::identity(8), l[1] * Matrix::identity(8), l[2] * Matrix::identity(8)};
}

EndAlgebra end_algebra(const CyclicAlgebra& V)
{
    if (V.S.dim() != 8) throw std::invalid_argument("E needs an 8-dimensional S");
    EndAlgebra E;
    E.V = V;
    E.B = V.S.gram();
    E.Binv = inverse_or_throw(E.B, "b_Q is degenerate");
    auto a = std::make_shared<StructAlgebra>();
    a->sort = "associative";
    std::vector<std::string> labels;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                labels.push_back((k == 0 ? std::string() : k == 1 ? std::string("xi ") : std::string("xi^2 ")) + "E" +
                                 std::to_string(i) + std::to_string(j));
    a->spaces.push_back(Space{"E", 192, labels});
    a->maps.emplace_back("product", 0, 0, 0, 192, 192);
    auto& p = a->maps[0];
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                for (int l = 0; l < 3; ++l)
                    for (int q = 0; q < 8; ++q)
                        p.at(64 * k + 8 * i + j, 64 * l + 8 * j + q) = {{64 * ((k + l) % 3) + 8 * i + q, Cyclo(1)}};
    Matrix J(192, 192);
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                // sigma(E_ij) = B^{-1} E_ji B = sum_{p,q} Binv(p,j) B(i,q) E_pq
                for (int pp = 0; pp < 8; ++pp) {
                    if (E.Binv(pp, j).is_zero()) continue;
                    for (int qq = 0; qq < 8; ++qq)
                        if (!E.B(i, qq).is_zero())
                            J(64 * k + 8 * pp + qq, 64 * k + 8 * i + j) += E.Binv(pp, j) * E.B(i, qq);
                }
            }
    a->involution = J;
    E.alg = a;
    return E;
}

Report verify_end_algebra(const EndAlgebra& E)
{
    Report rep;
    const Matrix& J = *E.alg->involution;
    if (!(J * J).is_identity()) rep.fail("sigma^2 != id");
    if (!equal(E.sigma(E.identity()), E.identity())) rep.fail("sigma(1) != 1");
    const auto& p = E.alg->maps[0];
    // sigma(ab) = sigma(b) sigma(a) on basis pairs of the first block
    for (int a = 0; a < 64; ++a)
        for (int b = 0; b < 64; ++b) {
            Vec ab(192);
            for (const auto& [k, x] : p.at(a, b)) ab[k] = x;
            Vec lhs = J * ab;
            Vec ja = J.col(a), jb = J.col(b);
            Vec rhs = E.alg->maps[0].apply(jb, ja, 192);
            if (lhs != rhs) rep.fail("sigma is not an anti-automorphism on " + E.alg->spaces[0].labels[a] + ", " +
                                     E.alg->spaces[0].labels[b]);
        }
    // b_Q(ax, y) = b_Q(x, sigma(a) y) on component bases
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                EElem a = E.zero();
                a[c](i, j) = 1;
                EElem s = E.sigma(a);
                for (int u = 0; u < 8; ++u)
                    for (int v = 0; v < 8; ++v) {
                        Vec x(24), y(24);
                        x[8 * c + u] = 1;
                        y[8 * c + v] = 1;
                        if (E.V.bQ(E.apply(a, x), y) != E.V.bQ(x, E.apply(s, y)))
                            rep.fail("sigma is not adjoint to b_Q at block " + std::to_string(c));
                    }
            }
    // xi basis agrees with the block model
    for (int b = 0; b < 192; b += 37) {
        Vec e(192);
        e[b] = 1;
        EElem a = E.from_xi(e);
        if (E.to_xi(a) != e) rep.fail("xi coordinates do not round trip");
        for (int b2 = 0; b2 < 192; b2 += 23) {
            Vec f(192);
            f[b2] = 1;
            Vec prod(192);
            for (const auto& [k, x] : p.at(b, b2)) prod[k] = x;
            if (!equal(E.from_xi(prod), E.mul(a, E.from_xi(f)))) rep.fail("structure constants of E disagree with blocks");
        }
    }
    return rep;
}

// ---------------------------------------------------------------- Clifford

Vec CliffordEven::one() const
{
    Vec v(384);
    for (int c = 0; c < 3; ++c) v[128 * c + position[0]] = 1;
    return v;
}

Vec CliffordEven::scalar(const LElem& l) const
{
    Vec v(384);
    for (int c = 0; c < 3; ++c) v[128 * c + position[0]] = l[c];
    return v;
}

Vec CliffordEven::mul(const Vec& a, const Vec& b) const
{
    Vec r(384);
    for (int c = 0; c < 3; ++c)
        for (int x = 0; x < 128; ++x) {
            const Cyclo& ax = a[128 * c + x];
            if (ax.is_zero()) continue;
            const unsigned I = masks[x];
            for (int y = 0; y < 128; ++y) {
                const Cyclo& by = b[128 * c + y];
                if (by.is_zero()) continue;
                const unsigned J = masks[y];
                int swaps = 0;
                for (unsigned j = J; j; j &= j - 1) {
                    int jb = std::countr_zero(j);
                    swaps += std::popcount(I >> (jb + 1));
                }
                Cyclo s = ax * by;
                if (swaps & 1) s = -s;
                for (unsigned k = I & J; k; k &= k - 1) s *= q[c][std::countr_zero(k)];
                r[128 * c + position[I ^ J]] += s;
            }
        }
    return r;
}

Vec CliffordEven::pair(const Vec& x, const Vec& y) const
{
    Vec r(384);
    for (int c = 0; c < 3; ++c) {
        Vec xc = finv * Vec(x.begin() + 8 * c, x.begin() + 8 * c + 8);
        Vec yc = finv * Vec(y.begin() + 8 * c, y.begin() + 8 * c + 8);
        for (int p = 0; p < 8; ++p) {
            if (xc[p].is_zero()) continue;
            for (int s = 0; s < 8; ++s) {
                if (yc[s].is_zero()) continue;
                Cyclo v = xc[p] * yc[s];
                if (p == s) r[128 * c + position[0]] += v * q[c][p];
                else if (p < s) r[128 * c + position[(1u << p) | (1u << s)]] += v;
                else r[128 * c + position[(1u << p) | (1u << s)]] -= v;
            }
        }
    }
    return r;
}

Vec CliffordEven::reversal(const Vec& a) const
{
    Vec r = a;
    for (int c = 0; c < 3; ++c)
        for (int x = 0; x < 128; ++x) {
            int k = std::popcount(masks[x]);
            if ((k * (k - 1) / 2) & 1) r[128 * c + x] = -r[128 * c + x];
        }
    return r;
}

std::string CliffordEven::label(int k) const
{
    std::string s = "c" + std::to_string(k / 128) + ":";
    unsigned m = masks[k % 128];
    if (!m) return s + "1";
    for (int p = 0; p < 8; ++p)
        if (m >> p & 1) s += "f" + std::to_string(p);
    return s;
}

CliffordEven clifford_even(const CyclicAlgebra& V)
{
    CliffordEven C;
    C.V = V;
    const auto& S = V.S;
    // Gram-Schmidt allowing isotropic starting vectors
    std::vector<Vec> rest;
    for (int i = 0; i < 8; ++i) rest.push_back(S.basis(i));
    std::vector<Vec> f;
    while (!rest.empty()) {
        Vec pick;
        for (const auto& w : rest)
            if (!S.norm(w).is_zero()) {
                pick = w;
                break;
            }
        if (pick.empty())
            for (std::size_t i = 0; i < rest.size() && pick.empty(); ++i)
                for (std::size_t j = i + 1; j < rest.size(); ++j) {
                    Vec w = add(rest[i], rest[j]);
                    if (!S.norm(w).is_zero()) {
                        pick = w;
                        break;
                    }
                }
        if (pick.empty()) throw std::domain_error("n is degenerate");
        Cyclo bb = S.polar(pick, pick);
        std::vector<Vec> next;
        Echelon e(8);
        e.add(pick);
        for (const auto& w : rest) {
            Vec p = sub(w, scale(S.polar(w, pick) / bb, pick));
            if (is_zero(p)) continue;
            if (e.add(p)) next.push_back(p);
        }
        f.push_back(pick);
        rest = std::move(next);
    }
    C.f = Matrix::from_columns(f, 8);
    C.finv = inverse_or_throw(C.f, "orthogonal basis is singular");
    for (int c = 0; c < 3; ++c)
        for (int p = 0; p < 8; ++p) C.q[c].push_back(V.mu[c] * S.norm(f[p]));
    C.position.assign(256, -1);
    for (unsigned m = 0; m < 256; ++m)
        if (std::popcount(m) % 2 == 0) {
            C.position[m] = static_cast<int>(C.masks.size());
            C.masks.push_back(m);
        }
    return C;
}

std::vector<Vec> clifford_center(const CliffordEven& C)
{
    std::vector<Vec> out;
    for (int c = 0; c < 3; ++c) {
        Echelon ech(128);
        for (int p = 0; p < 8; ++p)
            for (int s = p + 1; s < 8; ++s) {
                Vec g(384);
                g[128 * c + C.position[(1u << p) | (1u << s)]] = 1;
                std::vector<Vec> cols;
                for (int x = 0; x < 128; ++x) {
                    Vec e(384);
                    e[128 * c + x] = 1;
                    cols.push_back(sub(C.mul(e, g), C.mul(g, e)));
                }
                for (int r = 0; r < 128; ++r) {
                    SparseVec row;
                    for (int x = 0; x < 128; ++x)
                        if (!cols[x][128 * c + r].is_zero()) row.emplace_back(x, cols[x][128 * c + r]);
                    if (!row.empty()) ech.add(std::move(row));
                }
            }
        for (const auto& k : ech.kernel()) {
            Vec v(384);
            for (const auto& [i, x] : k) v[128 * c + i] = x;
            out.push_back(std::move(v));
        }
    }
    return out;
}

// ---------------------------------------------------------------- alpha

std::pair<EElem, EElem> AlphaMap::apply(const Vec& u) const
{
    const Matrix z(8, 8);
    std::pair<EElem, EElem> r{{z, z, z}, {z, z, z}};
    for (std::size_t k = 0; k < images.size(); ++k) {
        if (u[k].is_zero()) continue;
        r.first = added(r.first, scaled(images[k].first, u[k]));
        r.second = added(r.second, scaled(images[k].second, u[k]));
    }
    return r;
}

AlphaMap alpha(const CliffordEven& C, const EndAlgebra& E)
{
    const CyclicAlgebra& V = C.V;
    const int t = V.twist();
    AlphaMap A;
    A.images.resize(384);
    for (int a = 0; a < 3; ++a) {
        const int first = (a + 2 * t) % 3, second = (a + t) % 3;
        std::vector<Matrix> gens;
        for (int p = 0; p < 8; ++p) {
            Vec x(24);
            for (int i = 0; i < 8; ++i) x[8 * a + i] = C.f(i, p);
            Matrix l = mult_matrix(V, x, true), r = mult_matrix(V, x, false);
            Matrix lb = block(l, 8 * first, 8 * second, 8), rb = block(r, 8 * second, 8 * first, 8);
            Matrix lchk(24, 24), rchk(24, 24);
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) {
                    lchk(8 * first + i, 8 * second + j) = lb(i, j);
                    rchk(8 * second + i, 8 * first + j) = rb(i, j);
                }
            if (lchk != l || rchk != r) throw std::logic_error("left/right multiplications do not have the expected block shape");
            Matrix g(16, 16);
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) {
                    g(i, 8 + j) = lb(i, j);
                    g(8 + i, j) = rb(i, j);
                }
            if (g * g != C.q[a][p] * Matrix::identity(16)) throw std::logic_error("alpha(f)^2 != Q(f)");
            gens.push_back(std::move(g));
        }
        std::vector<Matrix> mono(256);
        mono[0] = Matrix::identity(16);
        for (unsigned m = 1; m < 256; ++m) {
            int top = 31 - std::countl_zero(m);
            mono[m] = mono[m & ~(1u << top)] * gens[top];
        }
        for (int x = 0; x < 128; ++x) {
            const Matrix& M = mono[C.masks[x]];
            if (!block(M, 0, 8, 8).is_zero() || !block(M, 8, 0, 8).is_zero())
                throw std::logic_error("even Clifford element is not block diagonal");
            EElem p1 = E.zero(), p2 = E.zero();
            p1[first] = block(M, 0, 0, 8);
            p2[second] = block(M, 8, 8, 8);
            A.images[128 * a + x] = {p1, p2};
        }
    }
    return A;
}

Report verify_alpha(const CliffordEven& C, const EndAlgebra& E, const AlphaMap& A, std::uint64_t seed)
{
    Report rep;
    const CyclicAlgebra& V = C.V;
    const int t = V.twist();
    auto same = [](const std::pair<EElem, EElem>& a, const std::pair<EElem, EElem>& b) {
        return equal(a.first, b.first) && equal(a.second, b.second);
    };
    auto prod = [&](const std::pair<EElem, EElem>& a, const std::pair<EElem, EElem>& b) {
        return std::pair<EElem, EElem>{E.mul(a.first, b.first), E.mul(a.second, b.second)};
    };
    // bijective
    Echelon ech(384);
    for (const auto& [p1, p2] : A.images) {
        Vec v = E.to_comp(p1);
        Vec w = E.to_comp(p2);
        v.insert(v.end(), w.begin(), w.end());
        ech.add(v);
    }
    if (ech.rank() != 384) rep.fail("alpha has rank " + std::to_string(ech.rank()) + ", expected 384");
    // multiplicative on monomials of degree <= 2
    std::vector<int> low;
    for (int k = 0; k < 384; ++k)
        if (std::popcount(C.masks[k % 128]) <= 2) low.push_back(k);
    for (int x : low)
        for (int y : low) {
            Vec ex(384), ey(384);
            ex[x] = 1;
            ey[y] = 1;
            if (!same(A.apply(C.mul(ex, ey)), prod(A.images[x], A.images[y])))
                rep.fail("alpha(uv) != alpha(u) alpha(v) for u = " + C.label(x) + ", v = " + C.label(y));
        }
    // multiplicative on random elements with monomials of all degrees
    std::mt19937_64 rng(seed);
    for (int r = 0; r < 3; ++r) {
        Vec u = random_vector(384, rng, 2), v = random_vector(384, rng, 2);
        if (!same(A.apply(C.mul(u, v)), prod(A.apply(u), A.apply(v))))
            rep.fail("alpha(uv) != alpha(u) alpha(v) on a random pair");
    }
    // involutions
    for (int k = 0; k < 384; ++k) {
        Vec e(384);
        e[k] = 1;
        auto lhs = A.apply(C.reversal(e));
        std::pair<EElem, EElem> rhs{E.sigma(A.images[k].first), E.sigma(A.images[k].second)};
        if (!same(lhs, rhs)) rep.fail("alpha does not intertwine the involutions at " + C.label(k));
    }
    // generators
    for (int r = 0; r < 3; ++r) {
        Vec x = random_vector(24, rng), y = random_vector(24, rng);
        Matrix lx = mult_matrix(V, x, true), rx = mult_matrix(V, x, false);
        Matrix ly = mult_matrix(V, y, true), ry = mult_matrix(V, y, false);
        std::pair<EElem, EElem> want{E.from_matrix(lx * ry), E.from_matrix(rx * ly)};
        if (!same(A.apply(C.pair(x, y)), want)) rep.fail("alpha(x.y) != (l_x r_y, r_x l_y) on a random pair");
        LElem qx = V.Q(x);
        std::pair<EElem, EElem> sq{E.scalar(CubicEtale::rho(qx, t)), E.scalar(CubicEtale::rho(qx, 2 * t))};
        if (!same(A.apply(C.pair(x, x)), sq)) rep.fail("alpha(x.x) != (rho(Q(x)), rho^2(Q(x)))");
        if (C.pair(x, x) != C.scalar(qx)) rep.fail("x.x != Q(x) in the Clifford algebra");
    }
    return rep;
}

// ---------------------------------------------------------------- kappa

Vec KappaMap::apply(const EndAlgebra& E, const EElem& a) const { return m * E.to_comp(a); }

KappaMap kappa(const CliffordEven& C, const EndAlgebra& E)
{
    KappaMap K;
    K.m = Matrix(384, 192);
    for (int c = 0; c < 3; ++c) {
        Cyclo inv_mu = C.V.mu[c].inverse();
        for (int i = 0; i < 8; ++i)
            for (int k = 0; k < 8; ++k) {
                // E_ik in block c equals phi(e_i, y) with y = mu_c^{-1} B^{-1} e_k
                Vec x(24), y(24);
                x[8 * c + i] = 1;
                for (int j = 0; j < 8; ++j) y[8 * c + j] = inv_mu * E.Binv(j, k);
                K.m.set_col(64 * c + 8 * i + k, C.pair(x, y));
            }
    }
    return K;
}

Report verify_kappa(const CliffordEven& C, const EndAlgebra& E, const KappaMap& K, std::uint64_t seed)
{
    Report rep;
    std::mt19937_64 rng(seed);
    for (int r = 0; r < 5; ++r) {
        Vec x = random_vector(24, rng), y = random_vector(24, rng);
        if (K.apply(E, E.phi(x, y)) != C.pair(x, y)) rep.fail("kappa(x b_Q(y,.)) != x.y on a random pair");
        if (K.apply(E, E.phi(x, x)) != C.scalar(C.V.Q(x))) rep.fail("kappa(x b_Q(x,.)) != Q(x)");
    }
    for (int b = 0; b < 192; ++b) {
        Vec e(192);
        e[b] = 1;
        EElem a = E.from_comp(e);
        if (K.apply(E, E.sigma(a)) != C.reversal(K.m.col(b)))
            rep.fail("kappa sigma != reversal kappa at basis element " + std::to_string(b));
    }
    bool witness = false;
    for (int a = 0; a < 64 && !witness; ++a)
        for (int b = 0; b < 64 && !witness; ++b) {
            Vec ea(192), eb(192);
            ea[a] = 1;
            eb[b] = 1;
            EElem x = E.from_comp(ea), y = E.from_comp(eb);
            if (K.apply(E, E.mul(x, y)) != C.mul(K.m.col(a), K.m.col(b))) witness = true;
        }
    if (!witness) rep.fail("kappa is multiplicative on all basis pairs of a block");
    return rep;
}

Trialitarian trialitarian(const CyclicAlgebra& V)
{
    Trialitarian T{end_algebra(V), clifford_even(V), {}, {}};
    T.A = alpha(T.C, T.E);
    T.K = kappa(T.C, T.E);
    return T;
}

// ---------------------------------------------------------------- L(E)

LieOfE lie_of_E(const Trialitarian& T)
{
    const EndAlgebra& E = T.E;
    auto so = so_basis(E.V.S);
    std::vector<EElem> skew;
    for (int c = 0; c < 3; ++c)
        for (const auto& d : so) {
            EElem a = E.zero();
            a[c] = d;
            skew.push_back(a);
        }
    const int m = static_cast<int>(skew.size());
    std::vector<Vec> ak1, ak2, s;
    for (const auto& a : skew) {
        auto img = T.A.apply(T.K.apply(E, a));
        ak1.push_back(E.to_comp(img.first));
        ak2.push_back(E.to_comp(img.second));
        s.push_back(E.to_comp(a));
    }
    LieOfE out;
    const std::vector<Cyclo> candidates{Cyclo(2), Cyclo(1), Cyclo(1, 2), Cyclo(-2), Cyclo(-1), Cyclo(-1, 2), Cyclo(4), Cyclo(1, 4)};
    for (const auto& c : candidates) {
        Echelon ech(m);
        for (int r = 0; r < 192; ++r)
            for (int part = 0; part < 2; ++part) {
                SparseVec row;
                for (int k = 0; k < m; ++k) {
                    Cyclo v = (part == 0 ? ak1[k][r] : ak2[k][r]) - c * s[k][r];
                    if (!v.is_zero()) row.emplace_back(k, v);
                }
                if (!row.empty()) ech.add(std::move(row));
            }
        auto ker = ech.kernel();
        out.tried.emplace_back(c, static_cast<int>(ker.size()));
        if (ker.size() == 28) {
            out.c = c;
            for (const auto& v : ker) {
                EElem a = E.zero();
                for (const auto& [k, x] : v) a = added(a, scaled(skew[k], x));
                out.basis.push_back(a);
            }
            return out;
        }
    }
    throw std::runtime_error("no constant gives a 28-dimensional L(E)");
}

// ---------------------------------------------------------------- gradings

Grading induce_E_grading(const EndAlgebra& E, const Grading& gV)
{
    const int N = 24;
    const AbGroup& G = gV.G;
    std::optional<Matrix> P, Pinv;
    if (!gV.frame.empty() && gV.frame[0]) {
        P = *gV.frame[0];
        Pinv = inverse_or_throw(*P, "homogeneous frame is singular");
    }
    std::map<GroupElem, std::vector<Vec>> parts;
    std::vector<GroupElem> aligned_deg(192);
    bool aligned = true;
    for (int b = 0; b < 192; ++b) {
        const int k = b / 64, i = (b / 8) % 8, j = b % 8;
        Matrix M(N, N);
        for (int m = 0; m < 3; ++m) M(8 * ((m + k) % 3) + i, 8 * m + j) = 1;
        Matrix Mf = P ? (*Pinv) * M * (*P) : M;
        std::map<GroupElem, Matrix> proj;
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c) {
                if (Mf(r, c).is_zero()) continue;
                GroupElem g = G.sub(gV.deg[0][r], gV.deg[0][c]);
                proj.try_emplace(g, N, N).first->second(r, c) = Mf(r, c);
            }
        if (proj.size() == 1) aligned_deg[b] = proj.begin()->first;
        else aligned = false;
        for (auto& [g, Q] : proj) {
            Matrix back = P ? (*P) * Q * (*Pinv) : Q;
            Vec coef(192);
            for (int kk = 0; kk < 3; ++kk)
                for (int ii = 0; ii < 8; ++ii)
                    for (int jj = 0; jj < 8; ++jj) coef[64 * kk + 8 * ii + jj] = back(8 * kk + ii, jj);
            Matrix chk(N, N);
            for (int kk = 0; kk < 3; ++kk)
                for (int ii = 0; ii < 8; ++ii)
                    for (int jj = 0; jj < 8; ++jj)
                        for (int m = 0; m < 3; ++m) chk(8 * ((m + kk) % 3) + ii, 8 * m + jj) = coef[64 * kk + 8 * ii + jj];
            if (chk != back) throw std::runtime_error("homogeneous projection of an element of E is not L-linear");
            parts[g].push_back(std::move(coef));
        }
    }
    if (aligned) return aligned_grading(E.alg, G, {aligned_deg});
    std::vector<Vec> cols;
    std::vector<GroupElem> deg;
    for (auto& [g, vs] : parts)
        for (auto& v : independent(vs, 192)) {
            cols.push_back(v);
            deg.push_back(g);
        }
    if (cols.size() != 192) throw std::runtime_error("homogeneous components do not decompose E");
    Grading out;
    out.alg = E.alg;
    out.G = G;
    out.deg = {deg};
    out.frame = {Matrix::from_columns(cols, 192)};
    return out;
}

Report verify_alpha_kappa_degrees(const Trialitarian& T, const Grading& gE)
{
    Report rep;
    const EndAlgebra& E = T.E;
    std::map<GroupElem, Echelon> comps;
    for (int b = 0; b < 192; ++b) comps.try_emplace(gE.deg[0][b], 192).first->second.add(gE.basis_vector(0, b));
    for (int b = 0; b < 192; ++b) {
        EElem a = E.from_xi(gE.basis_vector(0, b));
        auto img = T.A.apply(T.K.apply(E, a));
        const auto& comp = comps.at(gE.deg[0][b]);
        if (!comp.contains(E.to_xi(img.first)) || !comp.contains(E.to_xi(img.second)))
            rep.fail("alpha(kappa(a)) leaves the component of degree " + gE.G.str(gE.deg[0][b]));
    }
    return rep;
}

TypeInfo detect_type(const EndAlgebra& E, const Grading& gE)
{
    (void)E;
    const AbGroup& G = gE.G;
    std::map<GroupElem, std::vector<Vec>> parts;
    std::vector<Vec> centre;
    for (int k = 0; k < 3; ++k) {
        Vec z(192);
        for (int i = 0; i < 8; ++i) z[64 * k + 9 * i] = 1;
        centre.push_back(z);
    }
    std::optional<GroupElem> xi_deg;
    for (int k = 0; k < 3; ++k) {
        Vec c = gE.frame_coords(0, centre[k]);
        std::map<GroupElem, Vec> proj;
        for (int b = 0; b < 192; ++b) {
            if (c[b].is_zero()) continue;
            auto it = proj.try_emplace(gE.deg[0][b], Vec(192)).first;
            it->second = add(it->second, scale(c[b], gE.basis_vector(0, b)));
        }
        for (auto& [g, v] : proj) parts[g].push_back(v);
        if (k == 1 && proj.size() == 1) xi_deg = proj.begin()->first;
    }
    std::map<GroupElem, int> dims;
    int total = 0;
    for (auto& [g, vs] : parts) {
        int d = static_cast<int>(independent(vs, 192).size());
        dims[g] = d;
        total += d;
    }
    if (total != 3) throw std::runtime_error("the centre of E is not a graded subspace");
    TypeInfo info;
    if (dims.size() == 1 && G.is_zero(dims.begin()->first)) {
        info.type = 1;
        return info;
    }
    if (dims.size() == 2) {
        for (const auto& [g, d] : dims)
            if (d == 1 && !G.is_zero(g) && G.order(g) == 2) {
                info.type = 2;
                info.h = g;
                return info;
            }
    }
    if (dims.size() == 3 && xi_deg && G.order(*xi_deg) == 3) {
        info.type = 3;
        info.h = xi_deg;
        return info;
    }
    throw std::runtime_error("malformed grading on the centre of E");
}

}  // namespace d4
