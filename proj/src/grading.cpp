#include "d4/grading.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace d4 {

Vec BilinearMap::apply(const Vec& x, const Vec& y, int dim_target) const
{
    Vec r(dim_target);
    for (int a = 0; a < dl; ++a) {
        if (x[a].is_zero()) continue;
        for (int b = 0; b < dr; ++b) {
            if (y[b].is_zero()) continue;
            const auto& e = at(a, b);
            if (e.empty()) continue;
            Cyclo xy = x[a] * y[b];
            for (const auto& [k, c] : e) r[k].add_mul(xy, c);
        }
    }
    return r;
}

int StructAlgebra::map_index(const std::string& name) const
{
    for (std::size_t i = 0; i < maps.size(); ++i)
        if (maps[i].name == name) return static_cast<int>(i);
    throw std::out_of_range("no bilinear map named " + name);
}

Vec StructAlgebra::apply(const std::string& name, const Vec& x, const Vec& y) const
{
    const auto& m = map(name);
    return m.apply(x, y, target_dim(m));
}

StructAlgebra change_basis(const StructAlgebra& a, const std::vector<std::optional<Matrix>>& frames)
{
    const int ns = static_cast<int>(a.spaces.size());
    std::vector<Matrix> P(ns), Pinv(ns);
    std::vector<bool> has(ns, false);
    for (int s = 0; s < ns; ++s) {
        if (s < static_cast<int>(frames.size()) && frames[s]) {
            P[s] = *frames[s];
            auto inv = inverse(P[s]);
            if (!inv) throw std::invalid_argument("frame of sort " + a.spaces[s].name + " is singular");
            Pinv[s] = *inv;
            has[s] = true;
        }
    }
    auto column = [&](int s, int k) {
        if (has[s]) return P[s].col(k);
        Vec v(a.dim(s));
        v[k] = 1;
        return v;
    };
    StructAlgebra out = a;
    for (std::size_t mi = 0; mi < a.maps.size(); ++mi) {
        const auto& m = a.maps[mi];
        auto& nm = out.maps[mi];
        if (!has[m.left] && !has[m.right] && (m.target < 0 || !has[m.target])) continue;
        int dt = a.target_dim(m);
        for (int i = 0; i < m.dl; ++i) {
            Vec x = column(m.left, i);
            for (int j = 0; j < m.dr; ++j) {
                Vec r = m.apply(x, column(m.right, j), dt);
                if (m.target >= 0 && has[m.target]) r = Pinv[m.target] * r;
                nm.at(i, j) = to_sparse(r);
            }
        }
    }
    if (a.involution && has[0]) out.involution = Pinv[0] * *a.involution * P[0];
    return out;
}

Vec Grading::basis_vector(int s, int k) const
{
    if (s < static_cast<int>(frame.size()) && frame[s]) return frame[s]->col(k);
    Vec v(alg->dim(s));
    v[k] = 1;
    return v;
}

std::vector<Vec> Grading::component(int s, const GroupElem& g) const
{
    std::vector<Vec> out;
    for (int k = 0; k < static_cast<int>(deg[s].size()); ++k)
        if (deg[s][k] == g) out.push_back(basis_vector(s, k));
    return out;
}

Vec Grading::frame_coords(int s, const Vec& v) const
{
    if (s >= static_cast<int>(frame.size()) || !frame[s]) return v;
    auto c = coordinates(*frame[s], v);
    if (!c) throw std::logic_error("vector outside the span of the frame");
    return *c;
}

Grading aligned_grading(AlgebraPtr alg, AbGroup G, std::vector<std::vector<GroupElem>> deg)
{
    Grading g;
    g.alg = std::move(alg);
    g.G = std::move(G);
    g.deg = std::move(deg);
    g.frame.assign(g.deg.size(), std::nullopt);
    return g;
}

AlgebraPtr aligned_structure(const Grading& g)
{
    bool any = std::any_of(g.frame.begin(), g.frame.end(), [](const auto& f) { return f.has_value(); });
    if (!any) return g.alg;
    return std::make_shared<StructAlgebra>(change_basis(*g.alg, g.frame));
}

namespace {

std::string deg_str(const AbGroup& G, const GroupElem& x) { return G.str(x); }

}  // namespace

Report verify_grading(const Grading& g)
{
    Report rep;
    const auto& A = *g.alg;
    if (g.nspaces() != static_cast<int>(A.spaces.size())) {
        rep.fail("grading covers " + std::to_string(g.nspaces()) + " sorts, algebra has " +
                 std::to_string(A.spaces.size()));
        return rep;
    }
    for (int s = 0; s < g.nspaces(); ++s) {
        if (static_cast<int>(g.deg[s].size()) != A.dim(s)) {
            rep.fail("sort " + A.spaces[s].name + ": " + std::to_string(g.deg[s].size()) + " degrees for dimension " +
                     std::to_string(A.dim(s)));
            return rep;
        }
        for (const auto& d : g.deg[s])
            if (static_cast<int>(d.c.size()) != g.G.ncoords()) {
                rep.fail("degree with wrong number of coordinates in sort " + A.spaces[s].name);
                return rep;
            }
    }
    AlgebraPtr al;
    try {
        al = aligned_structure(g);
    } catch (const std::exception& e) {
        rep.fail(e.what());
        return rep;
    }
    GroupElem zero = g.G.zero();
    for (const auto& m : al->maps) {
        for (int i = 0; i < m.dl; ++i)
            for (int j = 0; j < m.dr; ++j) {
                const auto& e = m.at(i, j);
                if (e.empty()) continue;
                GroupElem sum = g.G.add(g.deg[m.left][i], g.deg[m.right][j]);
                for (const auto& [k, c] : e) {
                    const GroupElem& want = m.target < 0 ? zero : g.deg[m.target][k];
                    if (sum != want) {
                        std::ostringstream os;
                        os << m.name << ": " << A.spaces[m.left].name << "[" << i << "] x "
                           << A.spaces[m.right].name << "[" << j << "] has a component on "
                           << (m.target < 0 ? std::string("F") : A.spaces[m.target].name + "[" + std::to_string(k) + "]")
                           << " of degree " << deg_str(g.G, want) << ", expected " << deg_str(g.G, sum);
                        rep.fail(os.str());
                    }
                }
            }
    }
    if (al->involution) {
        const Matrix& J = *al->involution;
        for (int i = 0; i < J.cols(); ++i)
            for (int k = 0; k < J.rows(); ++k)
                if (!J(k, i).is_zero() && g.deg[0][k] != g.deg[0][i])
                    rep.fail("involution does not preserve the degree of basis vector " + std::to_string(i));
    }
    return rep;
}

Grading coarsen(const Grading& g, const GroupHom& hom)
{
    if (!(hom.dom == g.G)) throw std::invalid_argument("coarsening map does not start at the grading group");
    Grading out = g;
    out.G = hom.cod;
    for (auto& d : out.deg)
        for (auto& x : d) x = hom.apply(x);
    return out;
}

RelationPattern relation_pattern(const StructAlgebra& a)
{
    RelationPattern p;
    for (const auto& s : a.spaces) {
        p.offset.push_back(p.total);
        p.total += s.dim;
    }
    std::set<std::array<int, 3>> seen;
    for (const auto& m : a.maps)
        for (int i = 0; i < m.dl; ++i)
            for (int j = 0; j < m.dr; ++j)
                for (const auto& [k, c] : m.at(i, j)) {
                    int x = p.offset[m.left] + i, y = p.offset[m.right] + j;
                    if (x > y) std::swap(x, y);
                    seen.insert({x, y, m.target < 0 ? -1 : p.offset[m.target] + k});
                }
    p.triples.assign(seen.begin(), seen.end());
    return p;
}

UniversalGroup universal_group(const Grading& g, const RelationPattern* pattern)
{
    RelationPattern local;
    if (!pattern) {
        local = relation_pattern(*aligned_structure(g));
        pattern = &local;
    }
    std::map<GroupElem, int> index;
    std::vector<int> gen_of(pattern->total);
    for (int s = 0; s < g.nspaces(); ++s)
        for (std::size_t k = 0; k < g.deg[s].size(); ++k) {
            auto it = index.emplace(g.deg[s][k], static_cast<int>(index.size())).first;
            gen_of[pattern->offset[s] + k] = it->second;
        }
    const int n = static_cast<int>(index.size());
    std::set<std::array<int, 3>> rels;
    for (const auto& t : pattern->triples) {
        int a = gen_of[t[0]], b = gen_of[t[1]];
        if (a > b) std::swap(a, b);
        rels.insert({a, b, t[2] < 0 ? -1 : gen_of[t[2]]});
    }
    IntMat R(static_cast<int>(rels.size()), n);
    int r = 0;
    for (const auto& t : rels) {
        R(r, t[0]) += 1;
        R(r, t[1]) += 1;
        if (t[2] >= 0) R(r, t[2]) -= 1;
        ++r;
    }
    Quotient q = quotient_of_free(n, R);
    UniversalGroup out;
    out.U = q.group;
    out.support.resize(n);
    for (const auto& [d, i] : index) out.support[i] = d;
    std::vector<GroupElem> udeg(n);
    for (int i = 0; i < n; ++i) {
        GroupElem x = out.U.zero();
        for (int k = 0; k < out.U.ncoords(); ++k) x.c[k] = q.proj.m(k, i).get_si();
        out.U.reduce(x);
        udeg[i] = x;
    }
    out.gamma = g;
    out.gamma.G = out.U;
    for (int s = 0; s < g.nspaces(); ++s)
        for (std::size_t k = 0; k < g.deg[s].size(); ++k) out.gamma.deg[s][k] = udeg[gen_of[pattern->offset[s] + k]];
    IntMat S(g.G.ncoords(), n);
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < g.G.ncoords(); ++c) S(c, i) = static_cast<long>(out.support[i].c[c]);
    out.to_G.dom = out.U;
    out.to_G.cod = g.G;
    out.to_G.m = S * q.section;
    return out;
}

std::vector<int> type_vector(const Grading& g, int sort)
{
    std::map<GroupElem, int> dims;
    for (const auto& d : g.deg[sort]) ++dims[d];
    int mx = 0;
    for (const auto& [d, k] : dims) mx = std::max(mx, k);
    std::vector<int> t(mx, 0);
    for (const auto& [d, k] : dims) ++t[k - 1];
    return t;
}

GradingInvariants invariants(const Grading& g, const RelationPattern* pattern)
{
    GradingInvariants inv;
    std::map<GroupElem, int> dims;
    for (const auto& d : g.deg[0]) ++dims[d];
    inv.support.assign(dims.begin(), dims.end());
    inv.type = type_vector(g, 0);
    auto it = dims.find(g.G.zero());
    inv.dim_e = it == dims.end() ? 0 : it->second;
    inv.universal = universal_group(g, pattern).U;
    return inv;
}

Report is_refinement(const Grading& fine, const Grading& coarse)
{
    if (fine.alg != coarse.alg)
        throw std::invalid_argument("is_refinement needs both gradings on the same algebra object");
    Report rep;
    for (int s = 0; s < fine.nspaces(); ++s) {
        std::optional<Matrix> Q;
        if (s < static_cast<int>(coarse.frame.size()) && coarse.frame[s]) {
            Q = inverse(*coarse.frame[s]);
            if (!Q) throw std::invalid_argument("singular frame");
        }
        std::map<GroupElem, GroupElem> image;
        for (int k = 0; k < static_cast<int>(fine.deg[s].size()); ++k) {
            Vec v = fine.basis_vector(s, k);
            Vec c = Q ? *Q * v : v;
            std::optional<GroupElem> target;
            bool split = false;
            for (int i = 0; i < static_cast<int>(c.size()); ++i) {
                if (c[i].is_zero()) continue;
                if (target && *target != coarse.deg[s][i]) split = true;
                target = coarse.deg[s][i];
            }
            if (split || !target) {
                rep.fail(fine.alg->spaces[s].name + " homogeneous vector " + std::to_string(k) +
                         " is not homogeneous for the coarse grading");
                continue;
            }
            auto [it, fresh] = image.emplace(fine.deg[s][k], *target);
            if (!fresh && it->second != *target)
                rep.fail(fine.alg->spaces[s].name + " component of degree " + fine.G.str(fine.deg[s][k]) +
                         " meets two coarse components");
        }
    }
    return rep;
}

std::string refinement_obstruction(const Grading& fine, const Grading& coarse)
{
    UniversalGroup uf = universal_group(fine), uc = universal_group(coarse);
    if (!may_be_quotient(uf.U, uc.U))
        return "universal group " + uc.U.str() + " is not a quotient of " + uf.U.str();
    if (uc.support.size() > uf.support.size()) return "coarse grading has more components";
    auto dim_zero = [](const UniversalGroup& u) {
        int d = 0;
        GroupElem z = u.U.zero();
        for (const auto& x : u.gamma.deg[0])
            if (x == z) ++d;
        return d;
    };
    if (dim_zero(uc) < dim_zero(uf))
        return "identity component of dimension " + std::to_string(dim_zero(uc)) + " cannot contain one of dimension " +
               std::to_string(dim_zero(uf));
    return {};
}

}  // namespace d4
