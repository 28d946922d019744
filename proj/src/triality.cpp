#include "d4/triality.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace d4 {

namespace {

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix inverse_or_throw(const Matrix& m, const char* what)
{
    auto inv = inverse(m);
    if (!inv) throw std::domain_error(what);
    return *inv;
}

Matrix left_mult(const CompositionAlgebra& S, const Vec& x)
{
    Matrix m(S.dim(), S.dim());
    for (int j = 0; j < S.dim(); ++j) m.set_col(j, S.mul(x, S.basis(j)));
    return m;
}

Matrix right_mult(const CompositionAlgebra& S, const Vec& y)
{
    Matrix m(S.dim(), S.dim());
    for (int j = 0; j < S.dim(); ++j) m.set_col(j, S.mul(S.basis(j), y));
    return m;
}

Matrix combine(const std::vector<Matrix>& mats, const Vec& c)
{
    Matrix r(mats.at(0).rows(), mats.at(0).cols());
    for (std::size_t k = 0; k < mats.size(); ++k)
        if (!c[k].is_zero()) r = r + c[k] * mats[k];
    return r;
}

}  // namespace

std::vector<Matrix> so_basis(const CompositionAlgebra& S)
{
    const int n = S.dim();
    Matrix binv = inverse_or_throw(S.gram(), "polar form of n is degenerate");
    std::vector<Matrix> out;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            Matrix k(n, n);
            k(p, q) = 1;
            k(q, p) = -1;
            out.push_back(binv * k);
        }
    return out;
}

std::optional<Vec> so_coords(const CompositionAlgebra& S, const Matrix& d)
{
    const int n = S.dim();
    Matrix bd = S.gram() * d;
    Vec c;
    for (int p = 0; p < n; ++p) {
        if (!bd(p, p).is_zero()) return std::nullopt;
        for (int q = p + 1; q < n; ++q) {
            if (bd(p, q) != -bd(q, p)) return std::nullopt;
            c.push_back(bd(p, q));
        }
    }
    return c;
}

Report verify_triple(const CompositionAlgebra& S, const TriTriple& t)
{
    Report rep;
    const int n = S.dim();
    for (int k = 0; k < 3; ++k)
        if (!so_coords(S, t.d[k])) rep.fail("component " + std::to_string(k + 1) + " is not skew for n");
    std::vector<Vec> e(n);
    for (int i = 0; i < n; ++i) e[i] = S.basis(i);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec lhs = t.d[0] * S.mul(e[i], e[j]);
            Vec rhs = add(S.mul(t.d[1] * e[i], e[j]), S.mul(e[i], t.d[2] * e[j]));
            if (lhs != rhs)
                rep.fail("d1(x.y) != d2(x).y + x.d3(y) for x = " + S.alg->spaces[0].labels[i] +
                         ", y = " + S.alg->spaces[0].labels[j]);
        }
    return rep;
}

TriTriple cyclic_shift(const TriTriple& t) { return TriTriple{{t.d[2], t.d[0], t.d[1]}}; }

TriTriple spanning_triple(const CompositionAlgebra& S, const Vec& x, const Vec& y)
{
    const int n = S.dim();
    Matrix d1(n, n);
    for (int j = 0; j < n; ++j) {
        Vec z = S.basis(j);
        d1.set_col(j, sub(scale(S.polar(y, z), x), scale(S.polar(x, z), y)));
    }
    Matrix lx = left_mult(S, x), ly = left_mult(S, y), rx = right_mult(S, x), ry = right_mult(S, y);
    Cyclo half(1, 2);
    return TriTriple{{d1, half * (rx * ly - ry * lx), half * (lx * ry - ly * rx)}};
}

TriTriple bracket(const TriTriple& a, const TriTriple& b)
{
    return TriTriple{{commutator(a.d[0], b.d[0]), commutator(a.d[1], b.d[1]), commutator(a.d[2], b.d[2])}};
}

TriTriple TriAlgebra::element(const Vec& c) const
{
    TriTriple t;
    for (int k = 0; k < 3; ++k) {
        std::vector<Matrix> comp;
        for (const auto& b : basis) comp.push_back(b.d[k]);
        t.d[k] = combine(comp, c);
    }
    return t;
}

Vec TriAlgebra::coords(const TriTriple& t) const
{
    auto c = so_coords(S, t.d[0]);
    if (!c) throw std::invalid_argument("first component is not skew");
    TriTriple r = element(*c);
    if (r.d[1] != t.d[1] || r.d[2] != t.d[2]) throw std::invalid_argument("triple is not in tri(S)");
    return *c;
}

TriAlgebra tri_algebra(const CompositionAlgebra& S)
{
    TriAlgebra T;
    T.S = S;
    T.so = so_basis(S);
    const int n = S.dim(), m = static_cast<int>(T.so.size());
    // unknowns: d2 coords [0,m), d3 coords [m,2m), d1 coords [2m,3m)
    Echelon ech(3 * m);
    std::vector<Vec> e(n);
    for (int i = 0; i < n; ++i) e[i] = S.basis(i);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec xy = S.mul(e[i], e[j]);
            std::vector<Vec> cols(3 * m);
            for (int k = 0; k < m; ++k) {
                cols[k] = scale(Cyclo(-1), S.mul(T.so[k].col(i), e[j]));
                cols[m + k] = scale(Cyclo(-1), S.mul(e[i], T.so[k].col(j)));
                cols[2 * m + k] = T.so[k] * xy;
            }
            for (int r = 0; r < n; ++r) {
                SparseVec row;
                for (int k = 0; k < 3 * m; ++k)
                    if (!cols[k][r].is_zero()) row.emplace_back(k, cols[k][r]);
                if (!row.empty()) ech.add(std::move(row));
            }
        }
    auto ker = ech.kernel();
    if (static_cast<int>(ker.size()) != m)
        throw std::runtime_error("tri(S) has dimension " + std::to_string(ker.size()) + ", expected " +
                                 std::to_string(m));
    Matrix K(3 * m, m);
    for (int c = 0; c < m; ++c)
        for (const auto& [i, x] : ker[c]) K(i, c) = x;
    Matrix P(m, m);
    for (int i = 0; i < m; ++i)
        for (int c = 0; c < m; ++c) P(i, c) = K(2 * m + i, c);
    K = K * inverse_or_throw(P, "first projection of tri(S) is not injective");
    for (int c = 0; c < m; ++c) {
        Vec col = K.col(c);
        TriTriple t;
        t.d[0] = T.so[c];
        t.d[1] = combine(T.so, Vec(col.begin(), col.begin() + m));
        t.d[2] = combine(T.so, Vec(col.begin() + m, col.begin() + 2 * m));
        T.basis.push_back(std::move(t));
    }

    auto lie = std::make_shared<StructAlgebra>();
    lie->sort = "lie";
    std::vector<std::string> labels;
    for (int k = 0; k < m; ++k) labels.push_back("t" + std::to_string(k));
    lie->spaces.push_back(Space{"tri", m, labels});
    lie->maps.emplace_back("bracket", 0, 0, 0, m, m);
    auto& br = lie->maps[0];
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            Vec c = T.coords(bracket(T.basis[a], T.basis[b]));
            br.at(a, b) = to_sparse(c);
            br.at(b, a) = to_sparse(scale(Cyclo(-1), c));
        }
    T.lie = lie;
    return T;
}

Report verify_lie(const StructAlgebra& lie)
{
    Report rep;
    const auto& br = lie.maps.at(0);
    const int m = lie.dim(0);
    for (int a = 0; a < m; ++a) {
        if (!br.at(a, a).empty()) rep.fail("[x,x] != 0 for basis element " + std::to_string(a));
        for (int b = a + 1; b < m; ++b) {
            SparseVec s = br.at(a, b);
            axpy(s, Cyclo(1), br.at(b, a));
            if (!s.empty()) rep.fail("bracket not antisymmetric on " + std::to_string(a) + ", " + std::to_string(b));
        }
    }
    auto br_left = [&](const SparseVec& x, int c) {
        SparseVec r;
        for (const auto& [i, v] : x) axpy(r, v, br.at(i, c));
        return r;
    };
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) {
                SparseVec s = br_left(br.at(a, b), c);
                axpy(s, Cyclo(1), br_left(br.at(b, c), a));
                axpy(s, Cyclo(1), br_left(br.at(c, a), b));
                if (!s.empty())
                    rep.fail("Jacobi identity fails on " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                             std::to_string(c));
            }
    return rep;
}

std::vector<Matrix> ad_matrices(const StructAlgebra& lie)
{
    const auto& br = lie.maps.at(0);
    const int m = lie.dim(0);
    std::vector<Matrix> ad(m, Matrix(m, m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (const auto& [i, v] : br.at(a, b)) ad[a](i, b) = v;
    return ad;
}

Matrix killing_form(const StructAlgebra& lie)
{
    auto ad = ad_matrices(lie);
    const int m = lie.dim(0);
    Matrix k(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = a; b < m; ++b) {
            Cyclo s;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    if (!ad[a](i, j).is_zero() && !ad[b](j, i).is_zero()) s.add_mul(ad[a](i, j), ad[b](j, i));
            k(a, b) = s;
            k(b, a) = s;
        }
    return k;
}

namespace {

/// Pairs (i, j), i < j, with n(e_i, e_j) != 0 and every basis vector isotropic and orthogonal to the rest.
std::vector<std::pair<int, int>> hyperbolic_pairs(const CompositionAlgebra& S)
{
    Matrix g = S.gram();
    const int n = S.dim();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        std::vector<int> nz;
        for (int j = 0; j < n; ++j)
            if (!g(i, j).is_zero()) nz.push_back(j);
        if (nz.size() != 1 || nz[0] == i)
            throw std::invalid_argument("basis of S is not a hyperbolic basis; no diagonal Cartan subalgebra");
        if (i < nz[0]) pairs.emplace_back(i, nz[0]);
    }
    return pairs;
}

std::vector<Vec> basis_of(const std::vector<Vec>& vs, int n)
{
    Echelon e(n);
    std::vector<Vec> out;
    for (const auto& v : vs)
        if (e.add(v)) out.push_back(v);
    return out;
}

}  // namespace

RootDatum root_datum(const TriAlgebra& T)
{
    RootDatum R;
    const int m = T.dim(), n = T.S.dim();
    auto pairs = hyperbolic_pairs(T.S);
    if (pairs.size() != 4) throw std::invalid_argument("expected four hyperbolic pairs");
    auto ad = ad_matrices(*T.lie);
    std::vector<Matrix> adh;
    for (const auto& [i, j] : pairs) {
        Matrix h(n, n);
        h(i, i) = 1;
        h(j, j) = -1;
        auto c = so_coords(T.S, h);
        if (!c) throw std::logic_error("diagonal map is not skew");
        R.cartan.push_back(*c);
        adh.push_back(combine(ad, *c));
    }
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (!(adh[a] * adh[b] - adh[b] * adh[a]).is_zero()) throw std::logic_error("Cartan elements do not commute");

    // joint eigenspaces by successive refinement
    struct Piece {
        std::vector<int> weight;
        std::vector<Vec> basis;
    };
    std::vector<Piece> pieces;
    {
        Piece all;
        for (int k = 0; k < m; ++k) {
            Vec e(m);
            e[k] = 1;
            all.basis.push_back(e);
        }
        pieces.push_back(all);
    }
    for (int p = 0; p < 4; ++p) {
        std::vector<Piece> next;
        for (const auto& pc : pieces) {
            int found = 0;
            const int d = static_cast<int>(pc.basis.size());
            Matrix W = Matrix::from_columns(pc.basis, m);
            for (int lam = -4; lam <= 4; ++lam) {
                Matrix A = adh[p] - Cyclo(lam) * Matrix::identity(m);
                Matrix ker = nullspace(A * W);
                if (ker.cols() == 0) continue;
                Piece q{pc.weight, {}};
                q.weight.push_back(lam);
                for (int c = 0; c < ker.cols(); ++c) q.basis.push_back(W * ker.col(c));
                found += ker.cols();
                next.push_back(std::move(q));
            }
            if (found != d) throw std::runtime_error("ad h is not diagonalizable with integral eigenvalues");
        }
        pieces = std::move(next);
    }
    int zero_dim = 0;
    for (const auto& pc : pieces) {
        std::array<int, 4> w{pc.weight[0], pc.weight[1], pc.weight[2], pc.weight[3]};
        if (w == std::array<int, 4>{0, 0, 0, 0}) {
            zero_dim = static_cast<int>(pc.basis.size());
            continue;
        }
        if (pc.basis.size() != 1) throw std::runtime_error("root space of dimension > 1");
        R.roots.push_back(w);
        R.root_vectors.push_back(pc.basis[0]);
    }
    if (zero_dim != 4) throw std::runtime_error("Cartan subalgebra is not self-centralizing");

    auto height = [](const std::array<int, 4>& a) { return 1000 * a[0] + 100 * a[1] + 10 * a[2] + a[3]; };
    std::set<std::array<int, 4>> rootset(R.roots.begin(), R.roots.end());
    std::vector<std::array<int, 4>> pos;
    for (const auto& a : R.roots)
        if (height(a) > 0) pos.push_back(a);
    for (const auto& a : pos) {
        bool decomposable = false;
        for (const auto& b : pos) {
            std::array<int, 4> c;
            for (int i = 0; i < 4; ++i) c[i] = a[i] - b[i];
            if (height(c) > 0 && rootset.count(c)) decomposable = true;
        }
        if (!decomposable) R.simple.push_back(a);
    }
    std::sort(R.simple.begin(), R.simple.end(), [&](const auto& a, const auto& b) { return height(a) > height(b); });
    const int r = static_cast<int>(R.simple.size());
    R.cartan_matrix.assign(r, std::vector<int>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            if (i == j) {
                R.cartan_matrix[i][j] = 2;
                continue;
            }
            auto shift = [&](int k) {
                std::array<int, 4> c;
                for (int t = 0; t < 4; ++t) c[t] = R.simple[i][t] + k * R.simple[j][t];
                return c;
            };
            int p = 0, q = 0;
            while (rootset.count(shift(-(p + 1)))) ++p;
            while (rootset.count(shift(q + 1))) ++q;
            R.cartan_matrix[i][j] = p - q;
        }
    R.killing_det = det(killing_form(*T.lie));
    return R;
}

bool is_d4_cartan_matrix(const std::vector<std::vector<int>>& A)
{
    if (A.size() != 4) return false;
    int centre = 0, leaves = 0;
    for (int i = 0; i < 4; ++i) {
        if (A[i].size() != 4 || A[i][i] != 2) return false;
        int deg = 0;
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            if (A[i][j] != 0 && A[i][j] != -1) return false;
            if ((A[i][j] == 0) != (A[j][i] == 0)) return false;
            if (A[i][j] == -1) ++deg;
        }
        if (deg == 3) ++centre;
        else if (deg == 1) ++leaves;
        else return false;
    }
    return centre == 1 && leaves == 3;
}

Matrix der_of_triple(const TriTriple& t)
{
    const int n = t.d[0].rows();
    Matrix m(3 * n, 3 * n);
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(c * n + i, c * n + j) = t.d[c](i, j);
    return m;
}

std::vector<Matrix> der_cyclic(const CyclicAlgebra& V)
{
    const int n = V.S.dim(), N = V.dim();
    auto so = so_basis(V.S);
    const int m = static_cast<int>(so.size());
    // unknown block D_c = sum_k a_{c,k} so_k; skewness for b_Q holds since mu_c is a scalar on component c
    std::vector<Matrix> gens;
    for (int c = 0; c < 3; ++c)
        for (int k = 0; k < m; ++k) {
            Matrix g(N, N);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) g(c * n + i, c * n + j) = so[k](i, j);
            gens.push_back(std::move(g));
        }
    std::vector<Vec> e(N);
    for (int i = 0; i < N; ++i) {
        e[i] = Vec(N);
        e[i][i] = 1;
    }
    Echelon ech(3 * m);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            Vec xy = V.mul(e[i], e[j]);
            if (is_zero(xy) && (i / n) == (j / n)) continue;
            std::vector<Vec> cols(3 * m);
            for (int k = 0; k < 3 * m; ++k)
                cols[k] = sub(gens[k] * xy, add(V.mul(gens[k].col(i), e[j]), V.mul(e[i], gens[k].col(j))));
            for (int r = 0; r < N; ++r) {
                SparseVec row;
                for (int k = 0; k < 3 * m; ++k)
                    if (!cols[k][r].is_zero()) row.emplace_back(k, cols[k][r]);
                if (!row.empty()) ech.add(std::move(row));
            }
        }
    auto ker = ech.kernel();
    if (static_cast<int>(ker.size()) != m)
        throw std::runtime_error("Der_L(V) has dimension " + std::to_string(ker.size()) + ", expected 28");
    std::vector<Matrix> out;
    for (const auto& v : ker) {
        Matrix d(N, N);
        for (const auto& [k, x] : v) d = d + x * gens[k];
        out.push_back(std::move(d));
    }
    // skewness for b_Q on all basis pairs
    for (const auto& d : out)
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                LElem s = CubicEtale::add(V.bQ(d.col(i), e[j]), V.bQ(e[i], d.col(j)));
                for (const auto& x : s)
                    if (!x.is_zero()) throw std::logic_error("derivation is not skew for b_Q");
            }
    return out;
}

namespace {

/// 24x24 matrix whose columns are the homogeneous basis of V in component coordinates.
Matrix frame_comp(const CyclicAlgebra& V, const Grading& gV)
{
    std::vector<Vec> cols;
    for (int k = 0; k < V.dim(); ++k) cols.push_back(V.from_xi(gV.basis_vector(0, k)));
    return Matrix::from_columns(cols, V.dim());
}

}  // namespace

Grading induce_tri_grading(const TriAlgebra& T, const CyclicAlgebra& V, const Grading& gV)
{
    const int N = V.dim(), m = T.dim(), n = V.S.dim();
    const AbGroup& G = gV.G;
    Matrix P = frame_comp(V, gV);
    Matrix Pinv = inverse_or_throw(P, "homogeneous frame is singular");
    std::map<GroupElem, std::vector<Vec>> parts;
    for (int b = 0; b < m; ++b) {
        Matrix D = Pinv * der_of_triple(T.basis[b]) * P;
        std::map<GroupElem, Matrix> proj;
        for (int k = 0; k < N; ++k)
            for (int l = 0; l < N; ++l) {
                if (D(k, l).is_zero()) continue;
                GroupElem g = G.sub(gV.deg[0][k], gV.deg[0][l]);
                auto it = proj.try_emplace(g, N, N).first;
                it->second(k, l) = D(k, l);
            }
        for (auto& [g, M] : proj) {
            Matrix back = P * M * Pinv;
            TriTriple t;
            for (int c = 0; c < 3; ++c) {
                t.d[c] = Matrix(n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) t.d[c](i, j) = back(c * n + i, c * n + j);
            }
            if (der_of_triple(t) != back) throw std::runtime_error("projection of a derivation is not L-linear");
            parts[g].push_back(T.coords(t));
        }
    }
    std::vector<Vec> cols;
    std::vector<GroupElem> deg;
    for (auto& [g, vs] : parts)
        for (auto& v : basis_of(vs, m)) {
            cols.push_back(v);
            deg.push_back(g);
        }
    if (static_cast<int>(cols.size()) != m)
        throw std::runtime_error("homogeneous components do not form a direct sum decomposition of tri");
    Grading out;
    out.alg = T.lie;
    out.G = G;
    out.deg = {deg};
    out.frame = {Matrix::from_columns(cols, m)};
    if (rank(*out.frame[0]) != m) throw std::runtime_error("homogeneous components of tri are not independent");
    return out;
}

Report verify_graded_module(const TriAlgebra& T, const CyclicAlgebra& V, const Grading& gV, const Grading& gT)
{
    Report rep;
    const int N = V.dim();
    Matrix P = frame_comp(V, gV);
    Matrix Pinv = inverse_or_throw(P, "homogeneous frame is singular");
    for (int b = 0; b < T.dim(); ++b) {
        Matrix D = Pinv * der_of_triple(T.element(gT.basis_vector(0, b))) * P;
        for (int k = 0; k < N; ++k)
            for (int l = 0; l < N; ++l)
                if (!D(k, l).is_zero() && gV.deg[0][k] != gV.G.add(gT.deg[0][b], gV.deg[0][l]))
                    rep.fail("tri component " + gV.G.str(gT.deg[0][b]) + " maps V_" + gV.G.str(gV.deg[0][l]) +
                             " outside V_" + gV.G.str(gV.G.add(gT.deg[0][b], gV.deg[0][l])));
    }
    return rep;
}

std::vector<LElem> center_signs()
{
    return {LElem{Cyclo(1), Cyclo(1), Cyclo(1)}, LElem{Cyclo(1), Cyclo(-1), Cyclo(-1)},
            LElem{Cyclo(-1), Cyclo(1), Cyclo(-1)}, LElem{Cyclo(-1), Cyclo(-1), Cyclo(1)}};
}

Grading twist_by_center(const CyclicAlgebra& V, const Grading& gV, const LElem& l)
{
    Grading out = gV;
    std::vector<Vec> cols;
    for (int k = 0; k < V.dim(); ++k) cols.push_back(V.to_xi(V.act(l, V.from_xi(gV.basis_vector(0, k)))));
    if (out.frame.size() < 1) out.frame.resize(1);
    out.frame[0] = Matrix::from_columns(cols, V.dim());
    return out;
}

std::vector<Grading> center_orbit(const CyclicAlgebra& V, const Grading& gV)
{
    std::vector<Grading> out;
    for (const auto& l : center_signs()) out.push_back(twist_by_center(V, gV, l));
    return out;
}

bool same_components(const Grading& a, const Grading& b)
{
    if (a.nspaces() != b.nspaces() || !(a.G == b.G)) return false;
    for (int s = 0; s < a.nspaces(); ++s) {
        std::set<GroupElem> degs(a.deg[s].begin(), a.deg[s].end());
        degs.insert(b.deg[s].begin(), b.deg[s].end());
        const int n = a.alg->dim(s);
        for (const auto& g : degs) {
            auto ca = a.component(s, g), cb = b.component(s, g);
            if (ca.size() != cb.size()) return false;
            Echelon e(n);
            for (const auto& v : ca) e.add(v);
            for (const auto& v : cb)
                if (!e.contains(v)) return false;
        }
    }
    return true;
}

}  // namespace d4
