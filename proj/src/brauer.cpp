#include "d4/brauer.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace d4 {

namespace {

SparseVec flat(const Matrix& m)
{
    SparseVec v;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) v.emplace_back(i * m.cols() + j, m(i, j));
    return v;
}

Matrix unflat(const SparseVec& v, int n)
{
    Matrix m(n, n);
    for (const auto& [k, x] : v) m(k / n, k % n) = x;
    return m;
}

bool is_zero_matrix(const Matrix& m)
{
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

/// c with a = c b, if it exists (b nonzero).
std::optional<Cyclo> proportional(const Matrix& a, const Matrix& b)
{
    std::optional<Cyclo> c;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (b(i, j).is_zero()) {
                if (!a(i, j).is_zero()) return std::nullopt;
                continue;
            }
            if (!c) c = a(i, j) / b(i, j);
            else if (a(i, j) != *c * b(i, j)) return std::nullopt;
        }
    return c;
}

Matrix mpow(const Matrix& m, long e, const Matrix& unit)
{
    Matrix r = unit;
    for (long i = 0; i < e; ++i) r = r * m;
    return r;
}

std::map<GroupElem, Echelon> component_spans(const MatrixGrading& A)
{
    std::map<GroupElem, Echelon> comp;
    const int n2 = A.n() * A.n();
    for (int k = 0; k < A.dim(); ++k) comp.try_emplace(A.deg[k], n2).first->second.add(flat(A.basis[k]));
    return comp;
}

/// Solves sum_k c_k P_kj = R_j (j = 1..m) for c, stopping once the coefficient rank is full.
std::optional<Vec> left_identity_coeffs(const std::vector<Matrix>& R)
{
    const int k = static_cast<int>(R.size());
    Echelon ech(k + 1);
    bool full = false;
    for (int j = 0; j < k && !full; ++j) {
        std::vector<Matrix> P;
        for (int a = 0; a < k; ++a) P.push_back(R[a] * R[j]);
        const int n = R[j].rows();
        for (int p = 0; p < n && !full; ++p)
            for (int q = 0; q < n && !full; ++q) {
                SparseVec row;
                for (int a = 0; a < k; ++a)
                    if (!P[a](p, q).is_zero()) row.emplace_back(a, P[a](p, q));
                if (!R[j](p, q).is_zero()) row.emplace_back(k, R[j](p, q));
                if (row.empty()) continue;
                ech.add(row);
                int coeff_rank = 0;
                for (const auto& [piv, r] : ech.rref())
                    if (piv < k) ++coeff_rank;
                full = coeff_rank == k;
            }
    }
    Vec c(k);
    for (const auto& [piv, r] : ech.rref()) {
        if (piv == k) return std::nullopt;
        for (const auto& [col, x] : r)
            if (col == k) c[piv] = x;
    }
    return c;
}

/// Roots of the form q zeta^a with small rationals q.
std::optional<Cyclo> small_root(const Vec& monic_low)
{
    const FieldDescriptor& F = default_field();
    const int d = static_cast<int>(monic_low.size());
    static const long nums[][2] = {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {1, 2}, {1, 3}, {1, 4}, {3, 2}, {2, 3}, {0, 1}};
    for (const auto& nq : nums)
        for (int a = 0; a < F.conductor; ++a) {
            Cyclo lam = Cyclo(nq[0], nq[1]) * Cyclo::zeta(F, a);
            Cyclo acc(1);  // Horner on x^d + sum low_i x^i
            for (int i = d - 1; i >= 0; --i) acc = acc * lam + monic_low[i];
            if (acc.is_zero()) return lam;
            if (nq[0] == 0) break;
        }
    return std::nullopt;
}

}  // namespace

std::vector<Matrix> MatrixGrading::component(const GroupElem& g) const
{
    std::vector<Matrix> out;
    for (int k = 0; k < dim(); ++k)
        if (deg[k] == g) out.push_back(basis[k]);
    return out;
}

Report verify_matrix_grading(const MatrixGrading& A)
{
    Report rep;
    const int n2 = A.n() * A.n();
    Echelon all(n2);
    for (const auto& b : A.basis)
        if (!all.add(flat(b))) rep.fail("basis is linearly dependent");
    auto comp = component_spans(A);
    if (!comp.count(A.G.zero()) || !comp.at(A.G.zero()).contains(flat(A.unit))) rep.fail("unit is not of degree e");
    for (int a = 0; a < A.dim(); ++a)
        for (int b = 0; b < A.dim(); ++b) {
            Matrix p = A.basis[a] * A.basis[b];
            if (is_zero_matrix(p)) continue;
            GroupElem d = A.G.add(A.deg[a], A.deg[b]);
            auto it = comp.find(d);
            if (it == comp.end() || !it->second.contains(flat(p)))
                rep.fail("product of basis elements " + std::to_string(a) + ", " + std::to_string(b) +
                         " leaves degree " + A.G.str(d));
        }
    return rep;
}

AbGroup DivisionParams::T_group() const { return subgroup_generated(G, T).group; }

bool DivisionParams::elementary_2() const
{
    for (const auto& t : T)
        if (G.order(t) > 2) return false;
    return true;
}

bool DivisionParams::sign_valued() const
{
    for (const auto& [k, v] : beta)
        if (v != Cyclo(1) && v != Cyclo(-1)) return false;
    return true;
}

std::vector<GroupElem> DivisionParams::radical() const
{
    std::vector<GroupElem> out;
    for (const auto& s : T) {
        bool central = true;
        for (const auto& t : T)
            if (at(s, t) != Cyclo(1)) central = false;
        if (central) out.push_back(s);
    }
    return out;
}

bool operator==(const DivisionParams& a, const DivisionParams& b)
{
    return a.G == b.G && a.T == b.T && a.beta == b.beta;
}

std::string describe(const DivisionParams& p)
{
    std::ostringstream os;
    os << "T = " << p.T_group().str() << " (" << p.T.size() << " elements)";
    std::set<std::string> values;
    for (const auto& [k, v] : p.beta) values.insert(v.str());
    os << ", beta values {";
    bool first = true;
    for (const auto& v : values) os << (first ? "" : ", ") << v, first = false;
    os << "}";
    return os.str();
}

MatrixGrading graded_division_from_pair(const AbGroup& T, const std::vector<std::vector<Cyclo>>& bg)
{
    if (!T.finite()) throw std::invalid_argument("T must be finite");
    const int k = T.ncoords();
    if (static_cast<int>(bg.size()) != k) throw std::invalid_argument("beta needs one row per generator");
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(bg[i].size()) != k) throw std::invalid_argument("beta needs one column per generator");
        if (bg[i][i] != Cyclo(1)) throw std::invalid_argument("beta is not alternating: beta(e_i, e_i) != 1");
        for (int j = 0; j < k; ++j) {
            if (bg[i][j] * bg[j][i] != Cyclo(1))
                throw std::invalid_argument("beta is not alternating: beta(e_i, e_j) beta(e_j, e_i) != 1");
            if (bg[i][j].pow(T.moduli()[i]) != Cyclo(1) || bg[i][j].pow(T.moduli()[j]) != Cyclo(1))
                throw std::invalid_argument("beta is not a bicharacter on T: a value has the wrong order");
        }
    }
    const auto el = T.elements();
    std::map<GroupElem, int> idx;
    for (std::size_t i = 0; i < el.size(); ++i) idx[el[i]] = static_cast<int>(i);
    auto tau = [&](const GroupElem& s, const GroupElem& t) {
        Cyclo v(1);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < i; ++j) v *= bg[i][j].pow(s.c[i] * t.c[j]);
        return v;
    };
    const int m = static_cast<int>(el.size());
    MatrixGrading D{T, {}, {}, Matrix::identity(m)};
    for (const auto& s : el) {
        Matrix L(m, m);
        for (const auto& t : el) L(idx.at(T.add(s, t)), idx.at(t)) = tau(s, t);
        D.basis.push_back(L);
        D.deg.push_back(s);
    }
    return D;
}

Matrix primitive_idempotent(const std::vector<Matrix>& basis, const Matrix& unit, int variant)
{
    const int n = unit.rows();
    Matrix e = unit;
    for (int iter = 0; iter <= n; ++iter) {
        Echelon span(n * n);
        std::vector<Matrix> eBe;
        for (const auto& b : basis) {
            Matrix m = e * b * e;
            if (span.add(flat(m))) eBe.push_back(m);
        }
        if (eBe.size() <= 1) return e;
        // compressed basis elements first (homogeneous inputs have roots of unity as eigenvalues)
        std::vector<Matrix> cand;
        for (const auto& b : basis) {
            Matrix m = e * b * e;
            if (!is_zero_matrix(m)) cand.push_back(m);
        }
        for (const auto& [p, row] : span.rref()) cand.push_back(unflat(row, n));
        if (variant % 2) std::reverse(cand.begin(), cand.end());
        const int re = rank(e);
        auto singular = [&](const Matrix& s) {
            const int r = rank(s);
            return r > 0 && r < re;
        };
        std::optional<Matrix> s;
        for (const auto& c : cand)
            if (singular(c)) {
                s = c;
                break;
            }
        for (std::size_t i = 0; i < cand.size() && !s; ++i)
            for (std::size_t j = 0; j < cand.size() && !s; ++j) {
                Matrix p = cand[i] * cand[j];
                if (singular(p)) s = p;
            }
        for (std::size_t i = 0; i < cand.size() && !s; ++i) {
            // minimal polynomial of cand[i] in eBe, then a root of the form q zeta^a
            std::vector<Vec> pw{to_dense(flat(e), n * n)};
            Matrix cur = e;
            for (;;) {
                cur = cur * cand[i];
                Vec v = to_dense(flat(cur), n * n);
                auto c = coordinates(Matrix::from_columns(pw, n * n), v);
                if (c) {
                    Vec low(c->size());
                    for (std::size_t t = 0; t < c->size(); ++t) low[t] = -(*c)[t];
                    if (auto lam = small_root(low)) {
                        Matrix t = cand[i] - *lam * e;
                        if (singular(t)) s = t;
                    }
                    break;
                }
                pw.push_back(v);
            }
        }
        if (!s) throw std::runtime_error("no splitting element found in the identity component");
        Echelon rsp(n * n);
        std::vector<Matrix> R;
        for (const auto& x : eBe) {
            Matrix m = *s * x;
            if (rsp.add(flat(m))) R.push_back(m);
        }
        auto c = left_identity_coeffs(R);
        if (!c) throw std::runtime_error("right ideal without left identity: the algebra is not semisimple");
        Matrix f(n, n);
        for (std::size_t a = 0; a < R.size(); ++a) f = f + (*c)[a] * R[a];
        if (!(f * f == f) || is_zero_matrix(f)) throw std::runtime_error("left identity is not an idempotent");
        e = f;
    }
    throw std::logic_error("idempotent refinement did not terminate");
}

DivisionParams division_params(const MatrixGrading& A, int variant)
{
    const AbGroup& G = A.G;
    Matrix eps = primitive_idempotent(A.component(G.zero()), A.unit, variant);
    const int n2 = A.n() * A.n();
    std::map<GroupElem, Echelon> spans;
    std::map<GroupElem, Matrix> X;
    for (int k = 0; k < A.dim(); ++k) {
        Matrix m = eps * A.basis[k] * eps;
        if (is_zero_matrix(m)) continue;
        auto& sp = spans.try_emplace(A.deg[k], n2).first->second;
        if (sp.add(flat(m)) && sp.rank() == 1) X.emplace(A.deg[k], m);
    }
    for (const auto& [g, sp] : spans)
        if (sp.rank() > 1)
            throw std::runtime_error("eps A eps is not graded division: component " + G.str(g) + " has dimension " +
                                     std::to_string(sp.rank()));
    DivisionParams P;
    P.G = G;
    for (const auto& [g, m] : X) P.T.push_back(g);
    for (const auto& s : P.T) {
        const Matrix& xs = X.at(s);
        auto inv = X.find(G.neg(s));
        if (inv == X.end()) throw std::runtime_error("support of eps A eps is not a subgroup");
        auto c = proportional(xs * inv->second, eps);
        if (!c || c->is_zero()) throw std::runtime_error("homogeneous element of degree " + G.str(s) + " is not invertible");
        for (const auto& t : P.T) {
            const Matrix& xt = X.at(t);
            Matrix st = xs * xt, ts = xt * xs;
            auto b = proportional(st, ts);
            if (!b || b->is_zero()) throw std::runtime_error("homogeneous elements do not commute up to a scalar");
            auto it = X.find(G.add(s, t));
            if (it == X.end() || !proportional(st, it->second)) throw std::runtime_error("support is not closed");
            P.beta[{s, t}] = *b;
        }
    }
    return P;
}

RelatedTriple related_triple(const TriAlgebra& T, const Grading& gT)
{
    const AbGroup& G = gT.G;
    const int n = T.S.dim();
    const int n2 = n * n;
    RelatedTriple out;
    out.gram = T.S.gram();
    std::vector<std::pair<TriTriple, GroupElem>> gens;
    for (int k = 0; k < static_cast<int>(gT.deg[0].size()); ++k)
        gens.emplace_back(T.element(gT.basis_vector(0, k)), gT.deg[0][k]);
    for (int i = 0; i < 3; ++i) {
        MatrixGrading A{G, {}, {}, Matrix::identity(n)};
        Echelon total(n2);
        auto push = [&](const Matrix& m, const GroupElem& d) {
            if (total.add(flat(m))) {
                A.basis.push_back(m);
                A.deg.push_back(d);
            }
        };
        push(A.unit, G.zero());
        for (const auto& [t, d] : gens) push(t.d[i], d);
        for (std::size_t q = 0; q < A.basis.size() && total.rank() < n2; ++q)
            for (const auto& [t, d] : gens) push(A.basis[q] * t.d[i], G.add(A.deg[q], d));
        if (A.dim() != n2)
            throw std::runtime_error("projection " + std::to_string(i + 1) + " does not generate End(S)");
        auto comp = component_spans(A);
        for (const auto& [t, d] : gens)
            if (!comp.count(d) || !comp.at(d).contains(flat(t.d[i])))
                throw std::runtime_error("propagation inconsistency: projection " + std::to_string(i + 1) +
                                         " of a homogeneous element of degree " + G.str(d) + " is not homogeneous");
        auto r = verify_matrix_grading(A);
        if (!r.ok) throw std::runtime_error("propagation inconsistency in Gamma_" + std::to_string(i + 1) + ": " + r.witnesses[0]);
        auto s = verify_adjoint_compatible(A, out.gram);
        if (!s.ok) throw std::runtime_error("Gamma_" + std::to_string(i + 1) + ": " + s.witnesses[0]);
        out.gamma[i] = std::move(A);
    }
    return out;
}

Report verify_adjoint_compatible(const MatrixGrading& A, const Matrix& gram)
{
    Report rep;
    auto Binv = inverse(gram);
    if (!Binv) {
        rep.fail("degenerate form");
        return rep;
    }
    auto comp = component_spans(A);
    for (int k = 0; k < A.dim(); ++k) {
        Matrix adj = *Binv * A.basis[k].transpose() * gram;
        if (!comp.at(A.deg[k]).contains(flat(adj)))
            rep.fail("adjoint of basis element " + std::to_string(k) + " changes degree");
    }
    return rep;
}

MatrixGrading torsion_image(const MatrixGrading& A)
{
    const int f = A.G.free_rank();
    MatrixGrading out = A;
    out.G = make_group(0, A.G.moduli());
    for (auto& d : out.deg) {
        std::vector<long long> c(d.c.begin() + f, d.c.end());
        d = out.G.elem(c);
    }
    return out;
}

Matrix character_unit(const MatrixGrading& A, const Character& chi)
{
    const FieldDescriptor& F = default_field();
    const int n = A.n(), n2 = n * n;
    Echelon ech(n2);
    for (int k = 0; k < A.dim() && ech.rank() < n2 - 1; ++k) {
        const Matrix& a = A.basis[k];
        Cyclo c = chi.value(A.G, A.deg[k], F);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                // (u a)_pq - c (a u)_pq
                std::map<int, Cyclo> row;
                for (int r = 0; r < n; ++r) {
                    if (!a(r, q).is_zero()) row[p * n + r] += a(r, q);
                    if (!a(p, r).is_zero()) row[r * n + q] -= c * a(p, r);
                }
                SparseVec v;
                for (const auto& [i, x] : row)
                    if (!x.is_zero()) v.emplace_back(i, x);
                if (!v.empty()) ech.add(v);
            }
    }
    auto ker = ech.kernel();
    if (ker.size() != 1) throw std::runtime_error("character action is not inner by a unique unit");
    Matrix u = unflat(ker[0], n);
    if (!inverse(u)) throw std::runtime_error("no invertible solution for the character action");
    return u;
}

Cyclo commutation_factor(const MatrixGrading& A, const Character& chi1, const Character& chi2)
{
    Matrix u1 = character_unit(A, chi1), u2 = character_unit(A, chi2);
    auto c = proportional(u1 * u2, u2 * u1);
    if (!c) throw std::runtime_error("units do not commute up to a scalar");
    return *c;
}

BrauerCheck verify_brauer_relations(const RelatedTriple& t)
{
    BrauerCheck out;
    std::array<MatrixGrading, 3> A;
    for (int i = 0; i < 3; ++i) {
        A[i] = torsion_image(t.gamma[i]);
        out.params[i] = division_params(A[i]);
        const std::string tag = "[E_" + std::to_string(i + 1) + "]: ";
        if (!out.params[i].elementary_2()) out.report.fail(tag + "T is not an elementary 2-group");
        if (!out.params[i].sign_valued()) out.report.fail(tag + "beta is not +-1 valued");
    }
    const auto chars = characters(A[0].G, default_field());
    std::array<std::vector<Matrix>, 3> units;
    for (int i = 0; i < 3; ++i)
        for (const auto& chi : chars) units[i].push_back(character_unit(A[i], chi));
    for (std::size_t a = 0; a < chars.size(); ++a)
        for (std::size_t b = 0; b < chars.size(); ++b) {
            std::array<Cyclo, 3> c;
            for (int i = 0; i < 3; ++i) {
                auto v = proportional(units[i][a] * units[i][b], units[i][b] * units[i][a]);
                if (!v) throw std::runtime_error("units do not commute up to a scalar");
                c[i] = *v;
            }
            if (c[0] != c[1] * c[2])
                out.report.fail("commutation factors violate c_1 = c_2 c_3 at characters " + std::to_string(a) + ", " +
                                std::to_string(b));
        }
    return out;
}

Report check_beta_bar(const MatrixGrading& D)
{
    Report rep;
    const FieldDescriptor& F = default_field();
    const AbGroup& G = D.G;
    DivisionParams P = division_params(D);
    if (!is_zero_matrix(primitive_idempotent(D.component(G.zero()), D.unit) - D.unit)) {
        rep.fail("identity component is not one-dimensional");
        return rep;
    }
    std::map<GroupElem, Matrix> X;
    for (const auto& t : P.T) X.emplace(t, D.component(t).at(0));
    const auto H = P.radical();
    Subgroup sub = subgroup_generated(G, H);
    const int k = static_cast<int>(H.size());
    // homomorphic normalization h -> Xt_h on the canonical generators of H
    std::vector<Matrix> gen_unit;
    for (int j = 0; j < sub.group.ncoords(); ++j) {
        GroupElem g = sub.incl.apply(sub.group.gen(j));
        const long m = sub.group.moduli()[j];
        Matrix p = mpow(X.at(g), m, D.unit);
        auto c = proportional(p, D.unit);
        if (!c) throw std::runtime_error("X_h^m is not a scalar");
        std::optional<int> root;
        for (int a = 0; a < F.conductor && !root; ++a)
            if (Cyclo::zeta(F, a * m) == *c) root = a;
        if (!root) throw std::runtime_error("the centre does not split over the field");
        gen_unit.push_back(Cyclo::zeta(F, F.conductor - *root) * X.at(g));
    }
    std::map<GroupElem, std::pair<GroupElem, Matrix>> Xt;  // h -> (canonical coords, normalized element)
    for (const auto& c : sub.group.elements()) {
        Matrix m = D.unit;
        for (int j = 0; j < sub.group.ncoords(); ++j) m = m * mpow(gen_unit[j], c.c[j], D.unit);
        Xt.emplace(sub.incl.apply(c), std::make_pair(c, m));
    }
    const auto hchars = characters(sub.group, F);
    std::vector<Matrix> eps;
    for (const auto& chi : hchars) {
        Matrix e(D.n(), D.n());
        for (const auto& [h, cm] : Xt) e = e + chi.value(sub.group, cm.first, F).inverse() * cm.second;
        eps.push_back(Cyclo(1, k) * e);
    }
    if (static_cast<int>(eps.size()) != k) rep.fail("number of central idempotents differs from |H|");
    Matrix sum(D.n(), D.n());
    for (std::size_t a = 0; a < eps.size(); ++a) {
        sum = sum + eps[a];
        if (!(eps[a] * eps[a] == eps[a])) rep.fail("central element " + std::to_string(a) + " is not idempotent");
        for (std::size_t b = 0; b < eps.size(); ++b)
            if (a != b && !is_zero_matrix(eps[a] * eps[b])) rep.fail("central idempotents are not orthogonal");
        for (const auto& x : D.basis)
            if (!(eps[a] * x == x * eps[a])) rep.fail("idempotent " + std::to_string(a) + " is not central");
    }
    if (!(sum == D.unit)) rep.fail("central idempotents do not sum to 1");

    Quotient q = quotient(G, H);
    std::map<GroupElem, GroupElem> rep_of;  // coset image -> representative in T
    for (const auto& t : P.T) rep_of.emplace(q.proj.apply(t), t);
    DivisionParams expected;
    expected.G = q.group;
    for (const auto& [tb, t] : rep_of) expected.T.push_back(tb);
    for (const auto& [sb, s] : rep_of)
        for (const auto& [tb, t] : rep_of) expected.beta[{sb, tb}] = P.at(s, t);

    std::vector<MatrixGrading> comps;
    for (const auto& e : eps) {
        MatrixGrading Di{q.group, {}, {}, e};
        for (const auto& [tb, t] : rep_of) {
            Di.basis.push_back(e * X.at(t));
            Di.deg.push_back(tb);
        }
        auto r = verify_matrix_grading(Di);
        rep.merge(r, "component grading: ");
        DivisionParams Pi = division_params(Di);
        if (!(Pi == expected)) rep.fail("component invariants " + describe(Pi) + " differ from " + describe(expected));
        comps.push_back(std::move(Di));
    }
    // character maps X_t -> psi(t) X_t permute the components; check they give graded isomorphisms
    const auto gchars = characters(G, F);
    for (std::size_t i = 1; i < comps.size(); ++i) {
        bool found = false;
        for (const auto& psi : gchars) {
            auto image = [&](const GroupElem& t) { return psi.value(G, t, F) * (eps[i] * X.at(t)); };
            // alpha_psi(eps_0) computed through the normalized central elements
            Matrix a0(D.n(), D.n());
            for (const auto& chi0 : {hchars[0]})
                for (const auto& [h, cm] : Xt)
                    a0 = a0 + (chi0.value(sub.group, cm.first, F).inverse() * psi.value(G, h, F)) * cm.second;
            if (!(Cyclo(1, k) * a0 == eps[i])) continue;
            found = true;
            bool ok = true;
            std::vector<GroupElem> reps;
            for (const auto& [tb, t] : rep_of) reps.push_back(t);
            for (const auto& s : reps)
                for (const auto& t : reps) {
                    Matrix lhs_src = comps[0].unit * X.at(s) * X.at(t);
                    // express the source product through the representative of s+t
                    const GroupElem st = G.add(s, t);
                    const GroupElem r = rep_of.at(q.proj.apply(st));
                    auto c = proportional(lhs_src, eps[0] * X.at(r));
                    if (!c) {
                        ok = false;
                        continue;
                    }
                    Matrix img = image(s) * image(t);
                    if (!(img == *c * image(r))) ok = false;
                }
            if (!ok) rep.fail("character map onto component " + std::to_string(i) + " is not multiplicative");
            break;
        }
        if (!found) rep.fail("no character map sends component 0 to component " + std::to_string(i));
    }
    return rep;
}

}  // namespace d4
