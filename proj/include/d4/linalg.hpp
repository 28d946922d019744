/** @file linalg.hpp
 *  @brief Exact dense and sparse linear algebra over Q(zeta_N).
 */
#pragma once

#include "d4/scalars.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace d4 {

using Vec = std::vector<Cyclo>;
using SparseVec = std::vector<std::pair<int, Cyclo>>;  ///< sorted by index, no zeros

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static Matrix identity(int n);
    static Matrix from_columns(const std::vector<Vec>& cols, int rows);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Cyclo& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const Cyclo& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    Vec col(int j) const;
    Vec row(int i) const;
    void set_col(int j, const Vec& v);
    Matrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vec operator*(const Matrix& a, const Vec& v);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Cyclo& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<Cyclo> a_;
};

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, int n);
/// y += a*x
void axpy(SparseVec& y, const Cyclo& a, const SparseVec& x);
SparseVec scaled(const SparseVec& x, const Cyclo& a);
Cyclo dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Cyclo& s, const Vec& a);
bool is_zero(const Vec& v);

/// Incremental row echelon form over sparse rows.
class Echelon {
public:
    explicit Echelon(int ncols) : n_(ncols), pivot_of_col_(ncols, -1) {}

    /// Adds a row; returns true if it was independent of the previous rows.
    bool add(SparseVec v);
    bool add(const Vec& v) { return add(to_sparse(v)); }
    SparseVec reduce(SparseVec v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }
    bool contains(const Vec& v) const { return contains(to_sparse(v)); }
    int rank() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return n_; }
    /// Basis of {x : r.x = 0 for every stored row r}.
    std::vector<SparseVec> kernel() const;
    /// Fully reduced rows with their pivot columns.
    std::vector<std::pair<int, SparseVec>> rref() const;
    const std::vector<SparseVec>& rows() const { return rows_; }

private:
    int n_;
    std::vector<int> pivot_of_col_;
    std::vector<SparseVec> rows_;
    std::vector<int> pivot_col_;
};

int rank(const Matrix& a);
/// Columns form a basis of the right kernel {x : a x = 0}.
Matrix nullspace(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a);
Cyclo det(Matrix a);
std::optional<Vec> solve(const Matrix& a, const Vec& b);
/// Coordinates of v in the basis given by the columns of b (exact or nullopt).
std::optional<Vec> coordinates(const Matrix& b, const Vec& v);

}  // namespace d4
