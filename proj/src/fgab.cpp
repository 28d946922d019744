#include "d4/fgab.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace d4 {

IntMat IntMat::identity(int n)
{
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMat operator*(const IntMat& x, const IntMat& y)
{
    if (x.cols != y.rows) throw std::invalid_argument("IntMat shape mismatch");
    IntMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x(i, k) == 0) continue;
            for (int j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
        }
    return r;
}

std::vector<Integer> SNF::diagonal() const
{
    std::vector<Integer> d;
    for (int i = 0; i < std::min(D.rows, D.cols); ++i) d.push_back(D(i, i));
    return d;
}

namespace {

struct SnfWork {
    SNF s;
    int r, c;

    void row_addmul(int i, int t, const Integer& q)  // R_i -= q R_t
    {
        for (int j = 0; j < c; ++j) s.D(i, j) -= q * s.D(t, j);
        for (int j = 0; j < r; ++j) s.U(i, j) -= q * s.U(t, j);
        for (int j = 0; j < r; ++j) s.Uinv(j, t) += q * s.Uinv(j, i);
    }
    void col_addmul(int j, int t, const Integer& q)  // C_j -= q C_t
    {
        for (int i = 0; i < r; ++i) s.D(i, j) -= q * s.D(i, t);
        for (int i = 0; i < c; ++i) s.V(i, j) -= q * s.V(i, t);
        for (int i = 0; i < c; ++i) s.Vinv(t, i) += q * s.Vinv(j, i);
    }
    void row_swap(int i, int k)
    {
        if (i == k) return;
        for (int j = 0; j < c; ++j) std::swap(s.D(i, j), s.D(k, j));
        for (int j = 0; j < r; ++j) std::swap(s.U(i, j), s.U(k, j));
        for (int j = 0; j < r; ++j) std::swap(s.Uinv(j, i), s.Uinv(j, k));
    }
    void col_swap(int j, int k)
    {
        if (j == k) return;
        for (int i = 0; i < r; ++i) std::swap(s.D(i, j), s.D(i, k));
        for (int i = 0; i < c; ++i) std::swap(s.V(i, j), s.V(i, k));
        for (int i = 0; i < c; ++i) std::swap(s.Vinv(j, i), s.Vinv(k, i));
    }
    void row_negate(int i)
    {
        for (int j = 0; j < c; ++j) s.D(i, j) = -s.D(i, j);
        for (int j = 0; j < r; ++j) s.U(i, j) = -s.U(i, j);
        for (int j = 0; j < r; ++j) s.Uinv(j, i) = -s.Uinv(j, i);
    }
};

}  // namespace

SNF smith_normal_form(const IntMat& m)
{
    SnfWork w;
    w.r = m.rows;
    w.c = m.cols;
    w.s.D = m;
    w.s.U = w.s.Uinv = IntMat::identity(m.rows);
    w.s.V = w.s.Vinv = IntMat::identity(m.cols);
    auto& D = w.s.D;
    const int n = std::min(w.r, w.c);
    for (int t = 0; t < n; ++t) {
        // smallest nonzero entry as pivot
        int pi = -1, pj = -1;
        for (int i = t; i < w.r; ++i)
            for (int j = t; j < w.c; ++j)
                if (D(i, j) != 0 && (pi < 0 || abs(D(i, j)) < abs(D(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);
        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < w.r; ++i) {
                if (D(i, t) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
                w.row_addmul(i, t, q);
                if (D(i, t) != 0) {
                    w.row_swap(t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < w.c; ++j) {
                if (D(t, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
                w.col_addmul(j, t, q);
                if (D(t, j) != 0) {
                    w.col_swap(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            int bad = -1;
            for (int i = t + 1; i < w.r && bad < 0; ++i)
                for (int j = t + 1; j < w.c; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            w.row_addmul(t, bad, Integer(-1));
        }
        if (D(t, t) < 0) w.row_negate(t);
    }
    return w.s;
}

namespace {

long long to_ll(const Integer& z)
{
    if (!z.fits_slong_p()) throw std::overflow_error("integer too large for group coordinate");
    return z.get_si();
}

long long floor_mod(long long a, long long m)
{
    long long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

AbGroup::AbGroup(int free_rank, std::vector<long long> moduli) : free_(free_rank), mod_(std::move(moduli))
{
    if (free_rank < 0) throw std::invalid_argument("negative free rank");
    for (auto m : mod_)
        if (m < 2) throw std::invalid_argument("torsion moduli must be >= 2");
    if (!mod_.empty()) {
        IntMat d(static_cast<int>(mod_.size()), static_cast<int>(mod_.size()));
        for (std::size_t i = 0; i < mod_.size(); ++i) d(i, i) = static_cast<long>(mod_[i]);
        for (const auto& x : smith_normal_form(d).diagonal())
            if (x > 1) inv_.push_back(to_ll(x));
    }
}

long long AbGroup::order() const
{
    if (!finite()) throw std::logic_error("order of an infinite group");
    long long o = 1;
    for (auto m : mod_) o *= m;
    return o;
}

long long AbGroup::exponent() const
{
    if (!finite()) return 0;
    return inv_.empty() ? 1 : inv_.back();
}

GroupElem AbGroup::zero() const
{
    GroupElem e;
    e.c.assign(ncoords(), 0);
    return e;
}

GroupElem AbGroup::elem(std::vector<long long> c) const
{
    if (static_cast<int>(c.size()) != ncoords())
        throw std::invalid_argument("element has " + std::to_string(c.size()) + " coordinates, group " + str() +
                                    " needs " + std::to_string(ncoords()));
    GroupElem e;
    e.c.assign(c.begin(), c.end());
    reduce(e);
    return e;
}

GroupElem AbGroup::gen(int i) const
{
    GroupElem e = zero();
    e.c[i] = 1;
    reduce(e);
    return e;
}

void AbGroup::reduce(GroupElem& x) const
{
    for (std::size_t i = 0; i < mod_.size(); ++i) x.c[free_ + i] = floor_mod(x.c[free_ + i], mod_[i]);
}

GroupElem AbGroup::add(const GroupElem& a, const GroupElem& b) const
{
    GroupElem r = a;
    for (int i = 0; i < ncoords(); ++i) r.c[i] += b.c[i];
    for (std::size_t i = 0; i < mod_.size(); ++i)
        if (r.c[free_ + i] >= mod_[i]) r.c[free_ + i] -= mod_[i];
    return r;
}

GroupElem AbGroup::sub(const GroupElem& a, const GroupElem& b) const { return add(a, neg(b)); }

GroupElem AbGroup::neg(const GroupElem& a) const
{
    GroupElem r = a;
    for (int i = 0; i < free_; ++i) r.c[i] = -r.c[i];
    for (std::size_t i = 0; i < mod_.size(); ++i) {
        auto& x = r.c[free_ + i];
        x = x == 0 ? 0 : mod_[i] - x;
    }
    return r;
}

GroupElem AbGroup::mul(long long k, const GroupElem& a) const
{
    GroupElem r = a;
    for (auto& x : r.c) x *= k;
    reduce(r);
    return r;
}

long long AbGroup::order(const GroupElem& a) const
{
    for (int i = 0; i < free_; ++i)
        if (a.c[i] != 0) return 0;
    long long o = 1;
    for (std::size_t i = 0; i < mod_.size(); ++i) {
        long long m = mod_[i];
        o = std::lcm(o, m / std::gcd(a.c[free_ + i], m));
    }
    return o;
}

bool AbGroup::is_zero(const GroupElem& a) const
{
    return std::all_of(a.c.begin(), a.c.end(), [](long long x) { return x == 0; });
}

std::vector<GroupElem> AbGroup::elements() const
{
    if (!finite()) throw std::logic_error("cannot list an infinite group");
    std::vector<GroupElem> out;
    GroupElem e = zero();
    for (;;) {
        out.push_back(e);
        int i = ncoords() - 1;
        while (i >= 0 && ++e.c[i] == mod_[i]) e.c[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

std::string AbGroup::str() const
{
    std::ostringstream os;
    bool first = true;
    if (free_ > 0) {
        os << "Z";
        if (free_ > 1) os << "^" << free_;
        first = false;
    }
    for (auto m : mod_) {
        if (!first) os << " x ";
        os << "Z_" << m;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string AbGroup::str(const GroupElem& a) const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.c.size(); ++i) os << (i ? "," : "") << a.c[i];
    os << ")";
    return os.str();
}

AbGroup make_group(int free_rank, std::vector<long long> torsion) { return AbGroup(free_rank, std::move(torsion)); }

bool isomorphic(const AbGroup& a, const AbGroup& b)
{
    return a.free_rank() == b.free_rank() && a.invariants() == b.invariants();
}

GroupElem GroupHom::apply(const GroupElem& x) const
{
    GroupElem r = cod.zero();
    for (int i = 0; i < m.rows; ++i) {
        long long s = 0;
        for (int j = 0; j < m.cols; ++j) s += m(i, j).get_si() * x.c[j];
        r.c[i] = s;
    }
    cod.reduce(r);
    return r;
}

bool GroupHom::well_defined() const
{
    if (m.rows != cod.ncoords() || m.cols != dom.ncoords()) return false;
    // each torsion relation m_i e_i must map to zero
    for (std::size_t i = 0; i < dom.moduli().size(); ++i) {
        int j = dom.free_rank() + static_cast<int>(i);
        GroupElem x = cod.zero();
        for (int k = 0; k < m.rows; ++k) x.c[k] = m(k, j).get_si() * dom.moduli()[i];
        cod.reduce(x);
        if (!cod.is_zero(x)) return false;
    }
    return true;
}

IntMat relation_matrix(const AbGroup& g)
{
    IntMat r(static_cast<int>(g.moduli().size()), g.ncoords());
    for (std::size_t i = 0; i < g.moduli().size(); ++i) r(i, g.free_rank() + i) = static_cast<long>(g.moduli()[i]);
    return r;
}

Quotient quotient_of_free(int n, const IntMat& rel)
{
    SNF s = smith_normal_form(rel);
    std::vector<int> free_idx, tors_idx;
    std::vector<long long> tors;
    for (int i = 0; i < n; ++i) {
        Integer d = i < std::min(rel.rows, rel.cols) ? s.D(i, i) : Integer(0);
        if (d == 0)
            free_idx.push_back(i);
        else if (d > 1) {
            tors_idx.push_back(i);
            tors.push_back(to_ll(d));
        }
    }
    Quotient q;
    q.group = AbGroup(static_cast<int>(free_idx.size()), tors);
    std::vector<int> kept = free_idx;
    kept.insert(kept.end(), tors_idx.begin(), tors_idx.end());
    q.proj.dom = AbGroup(n, {});
    q.proj.cod = q.group;
    q.proj.m = IntMat(static_cast<int>(kept.size()), n);
    q.section = IntMat(n, static_cast<int>(kept.size()));
    for (std::size_t r = 0; r < kept.size(); ++r)
        for (int k = 0; k < n; ++k) {
            q.proj.m(r, k) = s.V(k, kept[r]);
            q.section(k, r) = s.Vinv(kept[r], k);
        }
    return q;
}

namespace {

IntMat stack(const IntMat& a, const IntMat& b)
{
    IntMat r(a.rows + b.rows, a.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r(i, j) = a(i, j);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r(a.rows + i, j) = b(i, j);
    return r;
}

IntMat rows_of(const AbGroup& g, const std::vector<GroupElem>& gens)
{
    IntMat r(static_cast<int>(gens.size()), g.ncoords());
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (int j = 0; j < g.ncoords(); ++j) r(i, j) = static_cast<long>(gens[i].c[j]);
    return r;
}

}  // namespace

Quotient quotient(const AbGroup& g, const std::vector<GroupElem>& gens)
{
    Quotient q = quotient_of_free(g.ncoords(), stack(relation_matrix(g), rows_of(g, gens)));
    q.proj.dom = g;
    return q;
}

Subgroup subgroup_generated(const AbGroup& g, const std::vector<GroupElem>& gens)
{
    const int n = g.ncoords();
    const int k = static_cast<int>(gens.size());
    IntMat R = relation_matrix(g);
    // integer kernel of [A | -R^T]
    IntMat B(n, k + R.rows);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) B(i, j) = static_cast<long>(gens[j].c[i]);
    for (int j = 0; j < R.rows; ++j)
        for (int i = 0; i < n; ++i) B(i, k + j) = -R(j, i);
    SNF s = smith_normal_form(B);
    int rk = 0;
    for (int i = 0; i < std::min(B.rows, B.cols); ++i)
        if (s.D(i, i) != 0) ++rk;
    IntMat K(B.cols - rk, k);
    for (int j = rk; j < B.cols; ++j)
        for (int i = 0; i < k; ++i) K(j - rk, i) = s.V(i, j);
    Quotient h = quotient_of_free(k, K);
    const IntMat& sec = h.section;
    IntMat A(n, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) A(i, j) = static_cast<long>(gens[j].c[i]);
    Subgroup out;
    out.group = h.group;
    out.incl.dom = h.group;
    out.incl.cod = g;
    out.incl.m = A * sec;
    return out;
}

bool contains(const AbGroup& g, const std::vector<GroupElem>& gens, const GroupElem& x)
{
    Quotient q = quotient(g, gens);
    return q.group.is_zero(q.proj.apply(x));
}

bool same_subgroup(const AbGroup& g, const std::vector<GroupElem>& a, const std::vector<GroupElem>& b)
{
    Quotient qa = quotient(g, a), qb = quotient(g, b);
    for (const auto& x : b)
        if (!qa.group.is_zero(qa.proj.apply(x))) return false;
    for (const auto& x : a)
        if (!qb.group.is_zero(qb.proj.apply(x))) return false;
    return true;
}

GroupHom compose(const GroupHom& g, const GroupHom& f)
{
    GroupHom h;
    h.dom = f.dom;
    h.cod = g.cod;
    h.m = g.m * f.m;
    return h;
}

bool GroupHom::injective() const
{
    std::vector<GroupElem> imgs;
    for (int i = 0; i < dom.ncoords(); ++i) imgs.push_back(apply(dom.gen(i)));
    Subgroup s = subgroup_generated(cod, imgs);
    return isomorphic(s.group, dom);
}

bool GroupHom::surjective() const
{
    std::vector<GroupElem> imgs;
    for (int i = 0; i < dom.ncoords(); ++i) imgs.push_back(apply(dom.gen(i)));
    Quotient q = quotient(cod, imgs);
    return q.group.ncoords() == 0;
}

int p_layer(const AbGroup& g, long long p, int k)
{
    int d = g.free_rank();
    for (long long m : g.invariants()) {
        int v = 0;
        while (m % p == 0) {
            m /= p;
            ++v;
        }
        if (v >= k) ++d;
    }
    return d;
}

bool may_be_quotient(const AbGroup& a, const AbGroup& b)
{
    if (b.free_rank() > a.free_rank()) return false;
    std::set<long long> primes;
    for (long long m : b.invariants()) {
        for (long long p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                primes.insert(p);
                while (m % p == 0) m /= p;
            }
        if (m > 1) primes.insert(m);
    }
    for (long long p : primes)
        for (int k = 1; k <= 64; ++k) {
            int lb = p_layer(b, p, k);
            if (lb == b.free_rank()) break;
            if (lb > p_layer(a, p, k)) return false;
        }
    return true;
}

long long Character::exponent_at(const AbGroup& g, const GroupElem& x, int N) const
{
    long long e = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        long long m = g.moduli()[i];
        e = (e + a[i] * x.c[g.free_rank() + i] % m * (N / m)) % N;
    }
    return e;
}

Cyclo Character::value(const AbGroup& g, const GroupElem& x, const FieldDescriptor& F) const
{
    return Cyclo::zeta(F, exponent_at(g, x, F.conductor));
}

std::vector<Character> characters(const AbGroup& g, const FieldDescriptor& F)
{
    if (!g.finite()) throw std::invalid_argument("characters of an infinite group");
    for (auto m : g.moduli())
        if (F.conductor % m != 0)
            throw FieldError("group exponent does not divide the conductor " + std::to_string(F.conductor));
    AbGroup dual(0, g.moduli());
    std::vector<Character> out;
    for (const auto& e : dual.elements()) out.push_back(Character{std::vector<long long>(e.c.begin(), e.c.end())});
    return out;
}

}  // namespace d4
