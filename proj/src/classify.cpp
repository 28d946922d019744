#include "d4/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace d4 {

namespace {

bool in_cyclic(const AbGroup& G, const GroupElem& h, const GroupElem& x)
{
    return G.is_zero(x) || x == h || x == G.add(h, h);
}

bool same_cyclic(const AbGroup& G, const GroupElem& a, const GroupElem& b)
{
    return b == a || b == G.neg(a);
}

GroupElem canonical_generator(const AbGroup& G, const GroupElem& h)
{
    GroupElem n = G.neg(h);
    return n < h ? n : h;
}

std::string perm_str(const std::array<int, 3>& p)
{
    return "(" + std::to_string(p[0]) + " " + std::to_string(p[1]) + " " + std::to_string(p[2]) + ")";
}

/// The subgroup spanned by a, b in an elementary abelian 3-group, with its lexicographically
/// first basis; returns the determinant of (a, b) in that basis (1 or 2 mod 3).
int det_against_canonical(const AbGroup& Q, const GroupElem& a, const GroupElem& b,
                          std::array<GroupElem, 2>* basis = nullptr)
{
    std::set<GroupElem> span;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) span.insert(Q.add(Q.mul(i, a), Q.mul(j, b)));
    if (span.size() != 9) throw std::invalid_argument("KH/H is not of order 9");
    std::vector<GroupElem> el(span.begin(), span.end());
    GroupElem c1 = el[1], c2;
    for (const auto& x : el)
        if (!Q.is_zero(x) && x != c1 && x != Q.add(c1, c1)) {
            c2 = x;
            break;
        }
    if (basis) *basis = {c1, c2};
    auto coords = [&](const GroupElem& x) {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (Q.add(Q.mul(i, c1), Q.mul(j, c2)) == x) return std::array<int, 2>{i, j};
        throw std::logic_error("element outside the canonical span");
    };
    auto x = coords(a), y = coords(b);
    int d = ((x[0] * y[1] - x[1] * y[0]) % 3 + 3) % 3;
    if (d == 0) throw std::invalid_argument("K does not map onto KH/H");
    return d;
}

GroupHom hom_from_columns(const AbGroup& dom, const AbGroup& cod, const std::vector<GroupElem>& cols)
{
    GroupHom f{dom, cod, IntMat(cod.ncoords(), dom.ncoords())};
    for (int j = 0; j < dom.ncoords(); ++j)
        for (int i = 0; i < cod.ncoords(); ++i) f.m(i, j) = static_cast<long>(cols[j].c[i]);
    if (!f.well_defined()) throw std::invalid_argument("degree assignment is not a homomorphism");
    return f;
}

int order_of_subgroup(const AbGroup& G, const std::vector<GroupElem>& gens)
{
    Subgroup s = subgroup_generated(G, gens);
    if (!s.group.finite()) return 0;
    return static_cast<int>(s.group.order());
}

Matrix block_map(const Matrix& s, const std::array<int, 3>& pi)
{
    const int d = s.rows();
    Matrix m(3 * d, 3 * d);
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (!s(i, j).is_zero()) m(d * c + i, d * pi[c] + j) = s(i, j);
    return m;
}

LElem apply_phi0(const std::array<int, 3>& pi, const LElem& l) { return {l[pi[0]], l[pi[1]], l[pi[2]]}; }

bool in_span(const std::vector<Vec>& basis, const Vec& v)
{
    if (basis.empty()) return is_zero(v);
    Echelon e(static_cast<int>(v.size()));
    for (const auto& b : basis) e.add(b);
    return e.contains(v);
}

/// Anti-automorphism x -> g x^T g^-1 of the Okubo algebra sending X^a Y^b to a multiple of X^b Y^a.
Matrix okubo_flip_matrix()
{
    const auto mats = okubo_matrices();
    // okubo_sl3 orders X^a Y^b lexicographically in (a, b), skipping (0, 0)
    const Matrix& X = mats[2];
    const Matrix& Y = mats[0];
    Matrix X2 = X * X;
    Cyclo w = Cyclo::omega(default_field());
    const std::array<Cyclo, 3> roots{Cyclo(1), w, w * w};
    for (const auto& lam : roots)
        for (const auto& mu : roots) {
            // unknown g (row-major, 9 entries); equations g X - lam Y g = 0 and g Y - mu X^2 g = 0
            Matrix A(18, 9);
            for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 3; ++q)
                    for (int k = 0; k < 3; ++k) {
                        // (g M)_{pq} = sum_k g_{pk} M_{kq}; (N g)_{pq} = sum_k N_{pk} g_{kq}
                        A(3 * p + q, 3 * p + k) += X(k, q);
                        A(3 * p + q, 3 * k + q) -= lam * Y(p, k);
                        A(9 + 3 * p + q, 3 * p + k) += Y(k, q);
                        A(9 + 3 * p + q, 3 * k + q) -= mu * X2(p, k);
                    }
            Matrix N = nullspace(A);
            std::vector<Vec> cands;
            Vec sum(9);
            for (int c = 0; c < N.cols(); ++c) {
                cands.push_back(N.col(c));
                sum = add(sum, N.col(c));
            }
            cands.push_back(sum);
            for (const auto& v : cands) {
                Matrix g(3, 3);
                for (int k = 0; k < 9; ++k) g(k / 3, k % 3) = v[k];
                auto gi = inverse(g);
                if (!gi) continue;
                Matrix s(8, 8);
                for (int k = 0; k < 8; ++k) s.set_col(k, okubo_coords(g * mats[k].transpose() * *gi));
                return s;
            }
        }
    throw std::logic_error("no grading-compatible Okubo automorphism found");
}

}  // namespace

std::string describe(const TypeIIIParams& p)
{
    const AbGroup& G = p.G;
    std::ostringstream os;
    os << "r=" << p.r << " G=" << G.str();
    switch (p.r) {
    case 0:
    case 1:
        os << " K=<";
        for (std::size_t i = 0; i < p.K.size(); ++i) os << (i ? "," : "") << G.str(p.K[i]);
        os << "> h=" << G.str(p.h);
        if (p.r == 0) os << " delta=" << (p.delta > 0 ? "+" : "-");
        break;
    case 2:
        os << " gamma=(" << G.str(p.gamma[0]) << "," << G.str(p.gamma[1]) << "," << G.str(p.gamma[2])
           << ") h=" << G.str(p.h);
        break;
    case 4: os << " g=" << G.str(p.g) << " h=" << G.str(p.h); break;
    default: os << " h=" << G.str(p.h) << " t=" << p.t; break;
    }
    return os.str();
}

void check_params(const TypeIIIParams& p)
{
    const AbGroup& G = p.G;
    auto need = [](bool ok, const std::string& what) {
        if (!ok) throw std::invalid_argument("precondition failed: " + what);
    };
    auto valid = [&](const GroupElem& x) { return static_cast<int>(x.c.size()) == G.ncoords(); };
    need(valid(p.h), "h is an element of G");
    need(G.order(p.h) == 3, "h has order 3");
    switch (p.r) {
    case 0:
        need(p.K.size() == 2 && valid(p.K[0]) && valid(p.K[1]), "K is given by two generators");
        need(G.order(p.K[0]) == 3 && G.order(p.K[1]) == 3 && order_of_subgroup(G, p.K) == 9, "K is isomorphic to Z_3^2");
        need(!contains(G, p.K, p.h), "h is not in K");
        need(p.delta == 1 || p.delta == -1, "delta is + or -");
        break;
    case 1:
        need(p.K.size() == 3 && valid(p.K[0]) && valid(p.K[1]) && valid(p.K[2]), "K is given by three generators");
        for (const auto& k : p.K) need(G.order(k) == 2, "the generators of K have order 2");
        need(order_of_subgroup(G, p.K) == 8, "K is isomorphic to Z_2^3");
        need(!contains(G, p.K, p.h), "h is not in K");
        break;
    case 2:
        for (const auto& g : p.gamma) {
            need(valid(g), "g_i are elements of G");
            need(!in_cyclic(G, p.h, g), "g_i is not in <h>");
        }
        need(G.is_zero(G.add(G.add(p.gamma[0], p.gamma[1]), p.gamma[2])), "g_1 g_2 g_3 = e");
        break;
    case 4:
        need(valid(p.g), "g is an element of G");
        need(!in_cyclic(G, p.h, p.g), "g is not in <h>");
        break;
    case 8: need(p.t == 'p' || p.t == 'o', "t is p or o"); break;
    default: need(false, "r is one of 0, 1, 2, 4, 8");
    }
}

std::shared_ptr<const CyclicAlgebra> model(char kind)
{
    static std::mutex lock;
    static std::map<std::pair<char, int>, std::shared_ptr<const CyclicAlgebra>> cache;
    std::lock_guard<std::mutex> guard(lock);
    auto key = std::make_pair(kind, default_field().conductor);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    CompositionAlgebra S;
    switch (kind) {
    case 'p': S = para(zorn_cayley()); break;
    case 'd': S = para(doubled_cayley()); break;
    case 'o': S = okubo_sl3(); break;
    default: throw std::invalid_argument(std::string("unknown model ") + kind);
    }
    auto V = std::make_shared<CyclicAlgebra>(cyclic_from_symmetric(S));
    V->structure_xi();
    return cache.emplace(key, V).first->second;
}

GradedCyclic build(const TypeIIIParams& p)
{
    check_params(p);
    const AbGroup& G = p.G;
    std::shared_ptr<const CyclicAlgebra> V;
    Grading gs;
    switch (p.r) {
    case 0: {
        V = model('o');
        gs = coarsen(okubo_grading(V->S, p.delta), hom_from_columns(make_group(0, {3, 3}), G, p.K));
        break;
    }
    case 1: {
        V = model('d');
        gs = coarsen(z2cubed_grading_cayley(V->S), hom_from_columns(make_group(0, {2, 2, 2}), G, p.K));
        break;
    }
    case 2:
    case 4: {
        V = model('p');
        std::vector<GroupElem> cols = p.r == 2 ? std::vector<GroupElem>{p.gamma[0], p.gamma[1]}
                                               : std::vector<GroupElem>{G.zero(), p.g};
        gs = coarsen(cartan_grading_cayley(V->S), hom_from_columns(make_group(2, {}), G, cols));
        break;
    }
    default: {
        V = model(p.t == 'o' ? 'o' : 'p');
        gs = aligned_grading(V->S.alg, G, {std::vector<GroupElem>(8, G.zero())});
        break;
    }
    }
    return {V, tensor_grading(*V, gs, p.h)};
}

GradedCyclic opposite(const GradedCyclic& a)
{
    auto W = std::make_shared<CyclicAlgebra>(opposite(*a.V));
    GradedCyclic out{W, a.gamma};
    out.gamma.alg = W->structure_xi();
    return out;
}

int rank(const Grading& g)
{
    const int r = static_cast<int>(g.component(0, g.G.zero()).size());
    if (r != 0 && r != 1 && r != 2 && r != 4 && r != 8)
        throw std::invalid_argument("identity component of dimension " + std::to_string(r) + " is not a Type III rank");
    return r;
}

SimilarityVerdict similar_params(const TypeIIIParams& a, const TypeIIIParams& b)
{
    if (!(a.G == b.G)) throw std::invalid_argument("parameters live on different groups");
    const AbGroup& G = a.G;
    SimilarityVerdict v;
    if (a.r != b.r) {
        v.trace = "ranks differ (" + std::to_string(a.r) + " vs " + std::to_string(b.r) + ")";
        return v;
    }
    if (!same_cyclic(G, a.h, b.h)) {
        v.trace = "r=" + std::to_string(a.r) + ": <h'> != <h>";
        return v;
    }
    const bool h_equal = a.h == b.h;
    switch (a.r) {
    case 0: {
        std::vector<GroupElem> ka{a.K[0], a.K[1], a.h}, kb{b.K[0], b.K[1], b.h};
        if (!same_subgroup(G, ka, kb)) {
            v.trace = "r=0: K'H' != KH";
            return v;
        }
        const int da = okubo_orientation(a), db = okubo_orientation(b);
        if (da == db && h_equal) {
            v.similar = true;
            v.trace = "r=0: same KH and <h>; delta' = delta and h' = h";
        } else if (da == -db && !h_equal) {
            v.similar = true;
            v.trace = "r=0: same KH and <h>; delta' = -delta and h' = h^-1";
        } else {
            v.trace = "r=0: same KH and <h> but the orientation pairs {(delta,h),(-delta,h^-1)} differ";
        }
        return v;
    }
    case 1:
        v.similar = same_subgroup(G, a.K, b.K);
        v.trace = v.similar ? "r=1: K' = K and <h'> = <h>" : "r=1: K' != K";
        return v;
    case 2: {
        std::array<int, 3> pi{0, 1, 2};
        do {
            for (int j = 1; j <= 3; ++j) {
                GroupElem jh = G.mul(j, a.h);
                for (int sign : {1, -1}) {
                    bool ok = true;
                    for (int i = 0; i < 3 && ok; ++i) {
                        const GroupElem& g = a.gamma[pi[i]];
                        ok = b.gamma[i] == G.add(sign > 0 ? g : G.neg(g), jh);
                    }
                    if (ok) {
                        v.similar = true;
                        v.trace = "r=2: <h'> = <h>; g'_i = g_pi(i)" + std::string(sign > 0 ? "" : "^-1") +
                                  " h^" + std::to_string(j) + " with pi = " + perm_str(pi);
                        return v;
                    }
                }
            }
        } while (std::next_permutation(pi.begin(), pi.end()));
        v.trace = "r=2: no permutation, shift and inversion matches gamma'";
        return v;
    }
    case 4:
        if (b.g == a.g) {
            v.similar = true;
            v.trace = "r=4: <h'> = <h> and g' = g";
        } else if (b.g == G.neg(a.g)) {
            v.similar = true;
            v.trace = "r=4: <h'> = <h> and g' = g^-1";
        } else {
            v.trace = "r=4: g' is neither g nor g^-1";
        }
        return v;
    default:
        v.similar = a.t == b.t;
        v.trace = v.similar ? std::string("r=8: <h'> = <h> and t' = t = ") + a.t : "r=8: t' != t";
        return v;
    }
}

GroupElem distinguished_h(const GradedCyclic& a)
{
    const Grading& g = a.gamma;
    const int want = a.V->twist();  // index of xi (own rho) in the basis 1, xi, xi^2
    for (int k = 0; k < 3; ++k) {
        Vec v = g.basis_vector(1, k);
        bool ok = !v[want].is_zero();
        for (int i = 0; i < 3; ++i)
            if (i != want && !v[i].is_zero()) ok = false;
        if (ok) return g.deg[1][k];
    }
    throw std::invalid_argument("the grading on L is not the standard Z_3-grading");
}

int okubo_orientation(const TypeIIIParams& p)
{
    if (p.r != 0) throw std::invalid_argument("orientation is defined for rank 0");
    Quotient q = quotient(p.G, {canonical_generator(p.G, p.h)});
    const int d = det_against_canonical(q.group, q.proj.apply(p.K[0]), q.proj.apply(p.K[1]));
    return d == 1 ? p.delta : -p.delta;
}

int okubo_orientation(const GradedCyclic& a)
{
    const Grading& g = a.gamma;
    if (rank(g) != 0) throw std::invalid_argument("orientation needs a rank 0 grading");
    const AbGroup& G = g.G;
    GroupElem h = distinguished_h(a);
    Quotient q = quotient(G, {canonical_generator(G, h)});
    std::map<GroupElem, GroupElem> lift;
    for (const auto& d : g.deg[0]) lift.emplace(q.proj.apply(d), d);
    if (lift.size() < 3) throw std::invalid_argument("support does not generate KH/H");
    std::vector<GroupElem> img;
    for (const auto& [x, d] : lift) img.push_back(x);
    // any two independent images span KH/H
    std::array<GroupElem, 2> basis;
    bool found = false;
    for (std::size_t i = 0; i < img.size() && !found; ++i)
        for (std::size_t j = 0; j < img.size() && !found; ++j) {
            try {
                det_against_canonical(q.group, img[i], img[j], &basis);
                found = true;
            } catch (const std::invalid_argument&) {
            }
        }
    if (!found) throw std::invalid_argument("support does not generate a Z_3^2 modulo <h>");
    if (!lift.count(basis[0]) || !lift.count(basis[1])) throw std::invalid_argument("support misses KH/H");
    const CyclicAlgebra& V = *a.V;
    Vec x = V.from_xi(g.component(0, lift.at(basis[0])).at(0));
    Vec y = V.from_xi(g.component(0, lift.at(basis[1])).at(0));
    for (const Vec& z : {x, y}) {
        LElem n = V.bQ(z, V.mul(z, z));
        if (n[0].is_zero() || n[0] != n[1] || n[1] != n[2])
            throw std::invalid_argument("homogeneous generator cannot be normalized: n(x, x*x) is not a nonzero scalar");
    }
    const bool xy = is_zero(V.mul(x, y)), yx = is_zero(V.mul(y, x));
    if (xy == yx) throw std::invalid_argument("exactly one of x*y, y*x must vanish");
    return xy ? 1 : -1;
}

std::array<std::pair<int, GroupElem>, 2> orientation_invariant(const AbGroup& G, int delta, const GroupElem& h)
{
    std::array<std::pair<int, GroupElem>, 2> out{std::make_pair(delta, h), std::make_pair(-delta, G.neg(h))};
    std::sort(out.begin(), out.end());
    return out;
}

Report verify_graded_iso(const IsoMap& m, const GradedCyclic& A0, const GradedCyclic& B)
{
    Report rep;
    GradedCyclic A = m.opposite ? opposite(A0) : A0;
    const CyclicAlgebra& VA = *A.V;
    const CyclicAlgebra& VB = *B.V;
    const int n = VA.dim();
    if (VB.dim() != n || m.phi1.rows() != n || m.phi1.cols() != n) {
        rep.fail("dimension mismatch");
        return rep;
    }
    if (!(A.gamma.G == B.gamma.G)) {
        rep.fail("gradings by different groups");
        return rep;
    }
    const auto& pi = m.phi0;
    {
        std::array<int, 3> s = pi;
        std::sort(s.begin(), s.end());
        if (s != std::array<int, 3>{0, 1, 2}) {
            rep.fail("phi_0 is not a permutation of the components of L");
            return rep;
        }
    }
    const int tA = VA.twist(), tB = VB.twist();
    for (int c = 0; c < 3; ++c)
        if ((pi[c] + tA) % 3 != pi[(c + tB) % 3])
            rep.fail("phi_0 rho != rho' phi_0 at component " + std::to_string(c));
    if (!inverse(m.phi1)) rep.fail("phi_1 is singular");
    if (!rep.ok) return rep;

    std::vector<Vec> e(n), img(n);
    for (int i = 0; i < n; ++i) {
        e[i] = Vec(n);
        e[i][i] = 1;
        img[i] = m.phi1.col(i);
    }
    for (int c = 0; c < 3; ++c) {
        LElem idem{};
        idem[c] = 1;
        LElem idem_img = apply_phi0(pi, idem);
        for (int i = 0; i < n; ++i)
            if (m.phi1 * VA.act(idem, e[i]) != VB.act(idem_img, img[i]))
                rep.fail("phi_1 is not phi_0-semilinear at basis vector " + std::to_string(i));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (m.phi1 * VA.mul(e[i], e[j]) != VB.mul(img[i], img[j]))
                rep.fail("product not preserved on (" + std::to_string(i) + "," + std::to_string(j) + ")");
            if (apply_phi0(pi, VA.bQ(e[i], e[j])) != VB.bQ(img[i], img[j]))
                rep.fail("b_Q not preserved on (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    for (int i = 0; i < n; ++i)
        if (apply_phi0(pi, VA.Q(e[i])) != VB.Q(img[i])) rep.fail("Q not preserved on " + std::to_string(i));

    const AbGroup& G = A.gamma.G;
    std::map<GroupElem, std::vector<Vec>> compsV, compsL;
    for (int k = 0; k < n; ++k) compsV[B.gamma.deg[0][k]].push_back(B.gamma.basis_vector(0, k));
    for (int k = 0; k < 3; ++k) compsL[B.gamma.deg[1][k]].push_back(B.gamma.basis_vector(1, k));
    for (int k = 0; k < n; ++k) {
        const GroupElem& d = A.gamma.deg[0][k];
        Vec w = VB.to_xi(m.phi1 * VA.from_xi(A.gamma.basis_vector(0, k)));
        auto it = compsV.find(d);
        if (it == compsV.end() || !in_span(it->second, w))
            rep.fail("homogeneous element " + std::to_string(k) + " of degree " + G.str(d) + " leaves its degree");
    }
    for (int k = 0; k < 3; ++k) {
        const GroupElem& d = A.gamma.deg[1][k];
        Vec w = CubicEtale::to_xi(apply_phi0(pi, CubicEtale::from_xi(A.gamma.basis_vector(1, k))));
        auto it = compsL.find(d);
        if (it == compsL.end() || !in_span(it->second, w))
            rep.fail("L component of degree " + G.str(d) + " is not preserved by phi_0");
    }
    return rep;
}

IsoMap center_map(const LElem& l)
{
    IsoMap m;
    m.phi1 = Matrix(24, 24);
    for (int c = 0; c < 3; ++c)
        for (int i = 0; i < 8; ++i) m.phi1(8 * c + i, 8 * c + i) = l[c];
    return m;
}

Witness witness_map(const std::string& kind, const TypeIIIParams& p)
{
    Witness w;
    w.kind = kind;
    w.source = p;
    w.target = p;
    const AbGroup& G = p.G;
    const std::array<int, 3> tau{0, 2, 1};
    auto flip = [&](int r) {
        if (p.r != r) throw std::invalid_argument(kind + " needs rank " + std::to_string(r) + " parameters");
        w.target.h = G.neg(p.h);
        w.map.opposite = true;
        w.map.phi0 = tau;
    };
    if (kind == "rank1_h_flip" || kind == "rank4_h_flip" || kind == "rank2_h_flip" || kind == "rank8_h_flip") {
        flip(kind[4] - '0');
        const CyclicAlgebra& V = *build(p).V;
        if (V.S.unit.empty()) {
            // Okubo: transpose is an anti-automorphism
            Matrix s(8, 8);
            const auto mats = okubo_matrices();
            for (int k = 0; k < 8; ++k) s.set_col(k, okubo_coords(mats[k].transpose()));
            w.map.phi1 = block_map(s, tau);
        } else {
            Matrix s(8, 8);
            for (int k = 0; k < 8; ++k) s.set_col(k, V.S.conj(V.S.basis(k)));
            w.map.phi1 = block_map(s, tau);
        }
    } else if (kind == "rank0_flip") {
        flip(0);
        if (p.delta != 1) throw std::invalid_argument("rank0_flip starts from delta = +");
        w.target.delta = -1;
        w.map.phi1 = block_map(okubo_flip_matrix(), tau);
    } else if (kind == "rank2_shift") {
        if (p.r != 2) throw std::invalid_argument("rank2_shift needs rank 2 parameters");
        for (int i = 0; i < 3; ++i) w.source.gamma[i] = G.add(p.gamma[i], p.h);
        // para-unit omega e1 + omega^2 e2; e1, e2 scaled, u_i (x) xi, v_i (x) xi^2
        Cyclo om = Cyclo::omega(default_field());
        LElem xi = CubicEtale::xi();
        std::array<LElem, 8> l;
        l[0] = CubicEtale::scalar(om);
        l[1] = CubicEtale::scalar(om * om);
        for (int i = 2; i < 5; ++i) l[i] = xi;
        for (int i = 5; i < 8; ++i) l[i] = CubicEtale::mul(xi, xi);
        w.map.phi1 = Matrix(24, 24);
        for (int c = 0; c < 3; ++c)
            for (int i = 0; i < 8; ++i) w.map.phi1(8 * c + i, 8 * c + i) = l[i][c];
    } else {
        throw std::invalid_argument("unknown witness case " + kind);
    }
    w.A = build(w.source);
    w.B = build(w.target);
    w.report = verify_graded_iso(w.map, w.A, w.B);
    if (w.map.opposite) w.A = opposite(w.A);
    return w;
}

FineTypeIII fine_typeIII(const std::string& kind)
{
    TypeIIIParams p;
    if (kind == "cartan") {
        p.r = 2;
        p.G = make_group(2, {3});
        p.gamma = {p.G.elem({1, 0, 0}), p.G.elem({0, 1, 0}), p.G.elem({-1, -1, 0})};
        p.h = p.G.elem({0, 0, 1});
    } else if (kind == "z2cubed") {
        p.r = 1;
        p.G = make_group(0, {2, 2, 2, 3});
        p.K = {p.G.gen(0), p.G.gen(1), p.G.gen(2)};
        p.h = p.G.gen(3);
    } else if (kind == "okubo") {
        p.r = 0;
        p.G = make_group(0, {3, 3, 3});
        p.K = {p.G.gen(0), p.G.gen(1)};
        p.h = p.G.gen(2);
    } else {
        throw std::invalid_argument("unknown fine grading " + kind);
    }
    FineTypeIII f{p, build(p), {}};
    f.universal = universal_group(f.graded.gamma);
    return f;
}

std::vector<GroupElem> box_elements(const AbGroup& G, int bound)
{
    std::vector<long long> lo(G.ncoords()), hi(G.ncoords());
    for (int i = 0; i < G.ncoords(); ++i) {
        if (i < G.free_rank()) {
            lo[i] = -bound;
            hi[i] = bound;
        } else {
            hi[i] = G.moduli()[i - G.free_rank()] - 1;
        }
    }
    std::vector<GroupElem> out;
    std::vector<long long> c = lo;
    for (;;) {
        out.push_back(G.elem(c));
        int i = G.ncoords() - 1;
        while (i >= 0 && ++c[i] > hi[i]) c[i] = lo[i], --i;
        if (i < 0) break;
    }
    return out;
}

std::vector<TypeIIIParams> enumerate_params(const AbGroup& G, int r, int bound)
{
    const auto el = box_elements(G, bound);
    std::vector<GroupElem> order3, order2;
    for (const auto& x : el) {
        long long o = G.order(x);
        if (o == 3) order3.push_back(x);
        if (o == 2) order2.push_back(x);
    }
    std::vector<TypeIIIParams> out;
    TypeIIIParams p;
    p.r = r;
    p.G = G;
    // canonical bases of elementary abelian subgroups: lexicographically first generating tuple
    auto subgroups = [&](const std::vector<GroupElem>& cand, std::size_t rank, long long order) {
        std::set<std::set<GroupElem>> seen;
        std::vector<std::vector<GroupElem>> bases;
        std::vector<GroupElem> cur;
        std::function<void(std::size_t)> rec = [&](std::size_t start) {
            if (cur.size() == rank) {
                if (order_of_subgroup(G, cur) != order) return;
                std::set<GroupElem> members;
                for (const auto& x : el)
                    if (contains(G, cur, x)) members.insert(x);
                if (seen.insert(members).second) bases.push_back(cur);
                return;
            }
            for (std::size_t i = start; i < cand.size(); ++i) {
                cur.push_back(cand[i]);
                rec(i + 1);
                cur.pop_back();
            }
        };
        rec(0);
        return bases;
    };
    switch (r) {
    case 0:
        for (const auto& K : subgroups(order3, 2, 9))
            for (const auto& h : order3) {
                if (contains(G, K, h)) continue;
                for (bool swap : {false, true})
                    for (int d : {1, -1}) {
                        p.K = swap ? std::vector<GroupElem>{K[1], K[0]} : K;
                        p.h = h;
                        p.delta = d;
                        out.push_back(p);
                    }
            }
        break;
    case 1:
        for (const auto& K : subgroups(order2, 3, 8))
            for (const auto& h : order3) {
                p.K = K;
                p.h = h;
                out.push_back(p);
            }
        break;
    case 2:
        for (const auto& h : order3)
            for (const auto& g1 : el) {
                if (in_cyclic(G, h, g1)) continue;
                for (const auto& g2 : el) {
                    if (in_cyclic(G, h, g2)) continue;
                    GroupElem g3 = G.neg(G.add(g1, g2));
                    if (in_cyclic(G, h, g3)) continue;
                    p.gamma = {g1, g2, g3};
                    p.h = h;
                    out.push_back(p);
                }
            }
        break;
    case 4:
        for (const auto& h : order3)
            for (const auto& g : el) {
                if (in_cyclic(G, h, g)) continue;
                p.g = g;
                p.h = h;
                out.push_back(p);
            }
        break;
    case 8:
        for (const auto& h : order3)
            for (char t : {'p', 'o'}) {
                p.h = h;
                p.t = t;
                out.push_back(p);
            }
        break;
    default: throw std::invalid_argument("r is one of 0, 1, 2, 4, 8");
    }
    return out;
}

}  // namespace d4
