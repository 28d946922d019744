#include "d4/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace d4 {

Matrix Matrix::identity(int n)
{
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, int rows)
{
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) m.set_col(j, cols[j]);
    return m;
}

Vec Matrix::col(int j) const
{
    Vec v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Matrix::row(int i) const
{
    return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i) * c_,
               a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * c_);
}

void Matrix::set_col(int j, const Vec& v)
{
    if (static_cast<int>(v.size()) != r_) throw std::invalid_argument("column length mismatch");
    for (int i = 0; i < r_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::transpose() const
{
    Matrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const
{
    return std::all_of(a_.begin(), a_.end(), [](const Cyclo& x) { return x.is_zero(); });
}

bool Matrix::is_identity() const
{
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if ((*this)(i, j) != Cyclo(i == j ? 1 : 0)) return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
        for (int k = 0; k < a.c_; ++k) {
            const Cyclo& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.c_; ++j)
                if (!b(k, j).is_zero()) m(i, j).add_mul(x, b(k, j));
        }
    return m;
}

Vec operator*(const Matrix& a, const Vec& v)
{
    if (a.c_ != static_cast<int>(v.size())) throw std::invalid_argument("matrix/vector mismatch");
    Vec r(a.r_);
    for (int k = 0; k < a.c_; ++k) {
        if (v[k].is_zero()) continue;
        for (int i = 0; i < a.r_; ++i)
            if (!a(i, k).is_zero()) r[i].add_mul(a(i, k), v[k]);
    }
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
    return m;
}

Matrix operator*(const Cyclo& s, const Matrix& a)
{
    Matrix m = a;
    for (auto& x : m.a_)
        if (!x.is_zero()) x = s * x;
    return m;
}

SparseVec to_sparse(const Vec& v)
{
    SparseVec s;
    for (int i = 0; i < static_cast<int>(v.size()); ++i)
        if (!v[i].is_zero()) s.emplace_back(i, v[i]);
    return s;
}

Vec to_dense(const SparseVec& v, int n)
{
    Vec d(n);
    for (const auto& [i, x] : v) d[i] = x;
    return d;
}

void axpy(SparseVec& y, const Cyclo& a, const SparseVec& x)
{
    if (a.is_zero() || x.empty()) return;
    SparseVec out;
    out.reserve(y.size() + x.size());
    std::size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(std::move(y[i++]));
        } else if (i == y.size() || x[j].first < y[i].first) {
            out.emplace_back(x[j].first, a * x[j].second);
            ++j;
        } else {
            Cyclo s = std::move(y[i].second);
            s.add_mul(a, x[j].second);
            if (!s.is_zero()) out.emplace_back(x[j].first, std::move(s));
            ++i;
            ++j;
        }
    }
    y = std::move(out);
}

SparseVec scaled(const SparseVec& x, const Cyclo& a)
{
    SparseVec r;
    if (a.is_zero()) return r;
    r.reserve(x.size());
    for (const auto& [i, v] : x) r.emplace_back(i, a * v);
    return r;
}

Cyclo dot(const Vec& a, const Vec& b)
{
    Cyclo s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s.add_mul(a[i], b[i]);
    return s;
}

Vec add(const Vec& a, const Vec& b)
{
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b)
{
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Cyclo& s, const Vec& a)
{
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) r[i] = s * a[i];
    return r;
}

bool is_zero(const Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Cyclo& x) { return x.is_zero(); });
}

SparseVec Echelon::reduce(SparseVec v) const
{
    std::size_t pos = 0;
    while (pos < v.size()) {
        int r = pivot_of_col_[v[pos].first];
        if (r < 0) {
            ++pos;
            continue;
        }
        Cyclo c = -v[pos].second;
        axpy(v, c, rows_[r]);
    }
    return v;
}

bool Echelon::add(SparseVec v)
{
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Cyclo inv = v.front().second.inverse();
    for (auto& e : v) e.second *= inv;
    pivot_of_col_[v.front().first] = static_cast<int>(rows_.size());
    pivot_col_.push_back(v.front().first);
    rows_.push_back(std::move(v));
    return true;
}

std::vector<std::pair<int, SparseVec>> Echelon::rref() const
{
    std::vector<SparseVec> rows = rows_;
    for (int k = static_cast<int>(rows.size()) - 1; k >= 0; --k) {
        int c = pivot_col_[k];
        for (int r = 0; r < k; ++r) {
            auto it = std::lower_bound(rows[r].begin(), rows[r].end(), c,
                                       [](const auto& e, int col) { return e.first < col; });
            if (it != rows[r].end() && it->first == c) {
                Cyclo m = -it->second;
                axpy(rows[r], m, rows[k]);
            }
        }
    }
    std::vector<std::pair<int, SparseVec>> out;
    for (std::size_t k = 0; k < rows.size(); ++k) out.emplace_back(pivot_col_[k], std::move(rows[k]));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<SparseVec> Echelon::kernel() const
{
    auto rr = rref();
    std::vector<SparseVec> ker;
    for (int f = 0; f < n_; ++f) {
        if (pivot_of_col_[f] >= 0) continue;
        SparseVec x;
        for (const auto& [p, row] : rr) {
            auto it = std::lower_bound(row.begin(), row.end(), f,
                                       [](const auto& e, int col) { return e.first < col; });
            if (it != row.end() && it->first == f) x.emplace_back(p, -it->second);
        }
        x.emplace_back(f, Cyclo(1));
        std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        ker.push_back(std::move(x));
    }
    return ker;
}

int rank(const Matrix& a)
{
    Echelon e(a.cols());
    for (int i = 0; i < a.rows(); ++i) e.add(a.row(i));
    return e.rank();
}

Matrix nullspace(const Matrix& a)
{
    Echelon e(a.cols());
    for (int i = 0; i < a.rows(); ++i) e.add(a.row(i));
    auto ker = e.kernel();
    Matrix m(a.cols(), static_cast<int>(ker.size()));
    for (int j = 0; j < m.cols(); ++j)
        for (const auto& [i, x] : ker[j]) m(i, j) = x;
    return m;
}

std::optional<Matrix> inverse(const Matrix& a)
{
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    int n = a.rows();
    Matrix m = a, inv = Matrix::identity(n);
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return std::nullopt;
        if (p != c)
            for (int j = 0; j < n; ++j) {
                std::swap(m(p, j), m(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        Cyclo s = m(c, c).inverse();
        for (int j = 0; j < n; ++j) {
            if (!m(c, j).is_zero()) m(c, j) *= s;
            if (!inv(c, j).is_zero()) inv(c, j) *= s;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || m(r, c).is_zero()) continue;
            Cyclo f = m(r, c);
            for (int j = 0; j < n; ++j) {
                if (!m(c, j).is_zero()) m(r, j).sub_mul(f, m(c, j));
                if (!inv(c, j).is_zero()) inv(r, j).sub_mul(f, inv(c, j));
            }
        }
    }
    return inv;
}

Cyclo det(Matrix m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    int n = m.rows();
    Cyclo d(1);
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return Cyclo(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        Cyclo s = m(c, c).inverse();
        for (int r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            Cyclo f = m(r, c) * s;
            for (int j = c; j < n; ++j)
                if (!m(c, j).is_zero()) m(r, j).sub_mul(f, m(c, j));
        }
    }
    return d;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b)
{
    // augmented system [a | b]; particular solution with free variables zero
    int n = a.cols();
    Echelon e(n + 1);
    for (int i = 0; i < a.rows(); ++i) {
        Vec r = a.row(i);
        r.push_back(b[i]);
        e.add(r);
    }
    auto rr = e.rref();
    Vec x(n);
    for (const auto& [p, row] : rr) {
        if (p == n) return std::nullopt;
        if (row.back().first == n) x[p] = row.back().second;
    }
    return x;
}

std::optional<Vec> coordinates(const Matrix& b, const Vec& v)
{
    auto x = solve(b, v);
    if (!x) return std::nullopt;
    if (b * *x != v) return std::nullopt;
    return x;
}

}  // namespace d4
