/** @file fgab.hpp
 *  @brief Finitely generated abelian groups, homomorphisms and characters.
 */
#pragma once

#include "d4/scalars.hpp"

#include <boost/container/small_vector.hpp>

#include <optional>
#include <string>
#include <vector>

namespace d4 {

/// Dense integer matrix used for presentations and Smith normal form.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Integer> a;
    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
    Integer& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Integer& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
    static IntMat identity(int n);
};
IntMat operator*(const IntMat& x, const IntMat& y);

/// U*M*V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, nonnegative.
struct SNF {
    IntMat D, U, V, Uinv, Vinv;
    std::vector<Integer> diagonal() const;
};
SNF smith_normal_form(const IntMat& m);

using Coords = boost::container::small_vector<long long, 8>;

struct GroupElem {
    Coords c;
    friend bool operator==(const GroupElem& a, const GroupElem& b) { return a.c == b.c; }
    friend bool operator!=(const GroupElem& a, const GroupElem& b) { return !(a == b); }
    friend bool operator<(const GroupElem& a, const GroupElem& b) { return a.c < b.c; }
};

/// Z^free_rank x Z/m_1 x ... x Z/m_k in user coordinates (free first).
class AbGroup {
public:
    AbGroup() = default;
    AbGroup(int free_rank, std::vector<long long> moduli);

    int free_rank() const { return free_; }
    const std::vector<long long>& moduli() const { return mod_; }
    int ncoords() const { return free_ + static_cast<int>(mod_.size()); }
    bool finite() const { return free_ == 0; }
    /// Canonical torsion invariants d_1 | d_2 | ... (all >= 2).
    const std::vector<long long>& invariants() const { return inv_; }
    long long order() const;  ///< finite groups only
    long long exponent() const;

    GroupElem zero() const;
    GroupElem elem(std::vector<long long> c) const;
    GroupElem gen(int i) const;
    void reduce(GroupElem& x) const;
    GroupElem add(const GroupElem& a, const GroupElem& b) const;
    GroupElem sub(const GroupElem& a, const GroupElem& b) const;
    GroupElem neg(const GroupElem& a) const;
    GroupElem mul(long long k, const GroupElem& a) const;
    /// 0 means infinite order.
    long long order(const GroupElem& a) const;
    bool is_zero(const GroupElem& a) const;
    std::vector<GroupElem> elements() const;  ///< finite groups, lexicographic
    std::string str() const;
    std::string str(const GroupElem& a) const;

    friend bool operator==(const AbGroup& a, const AbGroup& b)
    {
        return a.free_ == b.free_ && a.mod_ == b.mod_;
    }

private:
    int free_ = 0;
    std::vector<long long> mod_;
    std::vector<long long> inv_;
};

AbGroup make_group(int free_rank, std::vector<long long> torsion);
bool isomorphic(const AbGroup& a, const AbGroup& b);

/// Homomorphism given by an integer matrix (codomain coords x domain coords).
struct GroupHom {
    AbGroup dom, cod;
    IntMat m;
    GroupElem apply(const GroupElem& x) const;
    bool well_defined() const;
    bool injective() const;
    bool surjective() const;
};
GroupHom compose(const GroupHom& g, const GroupHom& f);

struct Subgroup {
    AbGroup group;    ///< abstract group in canonical coordinates
    GroupHom incl;    ///< group -> ambient
};
struct Quotient {
    AbGroup group;
    GroupHom proj;    ///< ambient -> group
    IntMat section;   ///< canonical coords -> ambient coords, proj(section(y)) = y
};

/// Integer relation matrix of a group presentation (one row per modulus).
IntMat relation_matrix(const AbGroup& g);
Subgroup subgroup_generated(const AbGroup& g, const std::vector<GroupElem>& gens);
Quotient quotient(const AbGroup& g, const std::vector<GroupElem>& gens);
/// Abelian group Z^n / rowspace(rel) with canonical coordinates and projection.
Quotient quotient_of_free(int n, const IntMat& rel);
bool contains(const AbGroup& g, const std::vector<GroupElem>& gens, const GroupElem& x);
bool same_subgroup(const AbGroup& g, const std::vector<GroupElem>& a, const std::vector<GroupElem>& b);
/// Dimension of p^{k-1}X / p^k X over F_p for the torsion part.
int p_layer(const AbGroup& g, long long p, int k);
/// Necessary conditions for b to be a quotient of a (rank and p-layer bounds).
bool may_be_quotient(const AbGroup& a, const AbGroup& b);

/// chi(x) = zeta_N^{sum_i a_i x_i N/m_i}; the exponent of G must divide N.
struct Character {
    std::vector<long long> a;
    long long exponent_at(const AbGroup& g, const GroupElem& x, int N) const;
    Cyclo value(const AbGroup& g, const GroupElem& x, const FieldDescriptor& F) const;
};
std::vector<Character> characters(const AbGroup& g, const FieldDescriptor& F);

}  // namespace d4
