/** @file grading.hpp
 *  @brief Multi-sorted algebras given by structure constants, and group gradings on them.
 */
#pragma once

#include "d4/fgab.hpp"
#include "d4/linalg.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace d4 {

struct Space {
    std::string name;
    int dim = 0;
    std::vector<std::string> labels;
};

/// Bilinear map between spaces; target == -1 means scalar valued.
struct BilinearMap {
    std::string name;
    int left = 0, right = 0, target = 0;
    int dl = 0, dr = 0;
    std::vector<SparseVec> table;  ///< index i*dr + j

    BilinearMap() = default;
    BilinearMap(std::string n, int l, int r, int t, int dim_l, int dim_r)
        : name(std::move(n)), left(l), right(r), target(t), dl(dim_l), dr(dim_r),
          table(static_cast<std::size_t>(dim_l) * dim_r)
    {
    }
    const SparseVec& at(int i, int j) const { return table[static_cast<std::size_t>(i) * dr + j]; }
    SparseVec& at(int i, int j) { return table[static_cast<std::size_t>(i) * dr + j]; }
    /// Result has length dim_target (1 for scalar maps).
    Vec apply(const Vec& x, const Vec& y, int dim_target) const;
};

struct StructAlgebra {
    std::string sort;  ///< "composition", "symmetric-composition", "cyclic", "lie", "jordan", ...
    std::vector<Space> spaces;
    std::vector<BilinearMap> maps;
    std::optional<Matrix> involution;  ///< on space 0

    int dim(int s = 0) const { return spaces.at(s).dim; }
    int target_dim(const BilinearMap& m) const { return m.target < 0 ? 1 : dim(m.target); }
    int map_index(const std::string& name) const;
    const BilinearMap& map(const std::string& name) const { return maps.at(map_index(name)); }
    BilinearMap& map(const std::string& name) { return maps.at(map_index(name)); }
    Vec apply(const std::string& name, const Vec& x, const Vec& y) const;
};

using AlgebraPtr = std::shared_ptr<const StructAlgebra>;

/// Structure constants with respect to new bases (columns of frames[s] in old coordinates).
StructAlgebra change_basis(const StructAlgebra& a, const std::vector<std::optional<Matrix>>& frames);

/// G-grading: degrees of the homogeneous basis of every sort. frame[s] (if set) holds the
/// homogeneous basis as columns in structure coordinates; otherwise the standard basis.
struct Grading {
    AlgebraPtr alg;
    AbGroup G;
    std::vector<std::vector<GroupElem>> deg;
    std::vector<std::optional<Matrix>> frame;

    int nspaces() const { return static_cast<int>(deg.size()); }
    /// Homogeneous basis vector k of sort s in structure coordinates.
    Vec basis_vector(int s, int k) const;
    /// Basis of the component of degree g in sort s (structure coordinates).
    std::vector<Vec> component(int s, const GroupElem& g) const;
    /// Frame coordinates of a structure-coordinate vector.
    Vec frame_coords(int s, const Vec& v) const;
};

Grading aligned_grading(AlgebraPtr alg, AbGroup G, std::vector<std::vector<GroupElem>> deg);
/// Structure constants in the homogeneous frame of the grading.
AlgebraPtr aligned_structure(const Grading& g);

struct Report {
    bool ok = true;
    std::vector<std::string> witnesses;
    void fail(std::string w)
    {
        ok = false;
        if (witnesses.size() < 32) witnesses.push_back(std::move(w));
    }
    void merge(const Report& r, const std::string& prefix = "")
    {
        for (const auto& w : r.witnesses) fail(prefix + w);
        if (!r.ok) ok = false;
    }
};

Report verify_grading(const Grading& g);
Grading coarsen(const Grading& g, const GroupHom& hom);

/// Relation pattern: (a, b, c) over global frame indices, c = -1 for scalar targets.
struct RelationPattern {
    std::vector<int> offset;  ///< global index offset of each sort
    int total = 0;
    std::vector<std::array<int, 3>> triples;
};
RelationPattern relation_pattern(const StructAlgebra& aligned);

struct UniversalGroup {
    AbGroup U;
    Grading gamma;               ///< same decomposition, degrees in U
    GroupHom to_G;               ///< U -> G sending each support class to its degree
    std::vector<GroupElem> support;  ///< distinct degrees (in G) used as generators
};
UniversalGroup universal_group(const Grading& g, const RelationPattern* pattern = nullptr);

struct GradingInvariants {
    std::vector<std::pair<GroupElem, int>> support;  ///< sort 0: degree, dimension
    std::vector<int> type;                           ///< type[i] = #components of dim i+1
    int dim_e = 0;
    AbGroup universal;
};
GradingInvariants invariants(const Grading& g, const RelationPattern* pattern = nullptr);
/// Multiset of component dimensions of sort 0.
std::vector<int> type_vector(const Grading& g, int sort = 0);

/// True if every component of `fine` lies in a component of `coarse` (same algebra object).
Report is_refinement(const Grading& fine, const Grading& coarse);
/// Invariant obstruction to `coarse` being a coarsening of `fine`, possibly on another model.
/// Returns a description of the obstruction or an empty string if none is found.
std::string refinement_obstruction(const Grading& fine, const Grading& coarse);

}  // namespace d4
