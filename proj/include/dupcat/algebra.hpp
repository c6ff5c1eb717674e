#pragma once

// Finite-dimensional algebras kQ/I for an acyclic quiver Q and an ideal I
// generated by linear combinations of parallel paths, together with the
// homological toolkit on their finite-dimensional right modules.
//
// Conventions.  A path is read in travel order and the product p*q means
// "p, then q".  A right module is a representation: one vector space per
// vertex and, for an arrow a: s -> t, a matrix of shape dim_t x dim_s.
// e_s L e_t is spanned by the paths from s to t, so the indecomposable
// projective P_v = e_v L lives on the paths starting at v and the
// injective I_v = D(L e_v) on the duals of the paths ending at v.

#include "dupcat/linalg.hpp"
#include "dupcat/quiver.hpp"

#include <map>
#include <utility>
#include <vector>

namespace dupcat {

/// A representation of the algebra's quiver.
struct Rep {
    std::vector<std::size_t> dims;
    std::vector<Matrix> maps;  // maps[a] : dims[target(a)] x dims[source(a)]

    std::size_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    bool operator==(const Rep&) const = default;
};

/// A morphism of representations, one matrix per vertex.
struct RepMap {
    std::vector<Matrix> comps;  // comps[v] : target.dims[v] x source.dims[v]
    bool is_zero() const;
    bool operator==(const RepMap&) const = default;
};

/// A linear combination of parallel paths that vanishes in the algebra.
struct Relation {
    std::vector<std::pair<Rational, Path>> terms;
};

/// Direct sum of indecomposable projectives (or injectives) with the
/// bookkeeping needed to address each summand.
struct StandardSum {
    std::vector<std::size_t> vertices;            // summand i is P_{vertices[i]}
    Rep rep;
    std::vector<std::vector<std::size_t>> offset;  // offset[i][u]: first row of summand i at u
};

class QuiverAlgebra {
public:
    QuiverAlgebra(Quiver quiver, std::vector<Relation> relations);

    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    std::size_t num_vertices() const { return quiver_.num_vertices(); }
    std::size_t num_arrows() const { return quiver_.num_arrows(); }

    // --- the algebra itself -------------------------------------------------

    /// dim e_from L e_to.
    std::size_t space_dim(std::size_t from, std::size_t to) const;
    std::size_t dimension() const;
    /// Paths forming the chosen basis of e_from L e_to.
    const std::vector<Path>& normal_words(std::size_t from, std::size_t to) const;
    /// Coordinates (column) of a path in the basis of e_start L e_end.
    Matrix reduce(const Path& p) const;
    /// Product of two elements given by coordinates.
    Matrix multiply(std::size_t a, std::size_t b, const Matrix& x, std::size_t c, const Matrix& y) const;
    /// Dimension of rad/rad^2 between two vertices: the number of arrows
    /// from `from` to `to` in a minimal presentation.
    std::size_t arrow_count_minimal(std::size_t from, std::size_t to) const;

    // --- standard modules ---------------------------------------------------

    const Rep& projective(std::size_t v) const { return projectives_.at(v); }
    const Rep& injective(std::size_t v) const { return injectives_.at(v); }
    Rep simple(std::size_t v) const;
    Rep zero_rep() const;
    StandardSum projective_sum(std::vector<std::size_t> vertices) const;
    StandardSum injective_sum(std::vector<std::size_t> vertices) const;

    // --- representations and maps -------------------------------------------

    /// Shapes match the quiver and every relation holds.
    bool is_module(const Rep& m) const;
    bool is_morphism(const Rep& from, const Rep& to, const RepMap& f) const;
    RepMap zero_map(const Rep& from, const Rep& to) const;
    RepMap identity_map(const Rep& m) const;
    RepMap compose(const RepMap& g, const RepMap& f) const;  // g after f
    RepMap add(const RepMap& f, const RepMap& g) const;
    RepMap scale(const RepMap& f, const Rational& s) const;
    Rep direct_sum(const std::vector<Rep>& parts) const;
    std::vector<std::size_t> dim_vector(const Rep& m) const { return m.dims; }
    /// The action of a path on the space at its start vertex.
    Matrix path_action(const Rep& m, const Path& p) const;

    struct Sub {
        Rep rep;
        RepMap inclusion;
    };
    struct Quot {
        Rep rep;
        RepMap projection;
    };
    Sub kernel(const Rep& from, const Rep& to, const RepMap& f) const;
    Quot cokernel(const Rep& from, const Rep& to, const RepMap& f) const;
    Sub image(const Rep& from, const Rep& to, const RepMap& f) const;
    /// Submodule spanned by the given columns at each vertex (must be closed).
    Sub submodule(const Rep& m, const std::vector<Matrix>& spans) const;

    Sub radical(const Rep& m) const;
    Sub socle(const Rep& m) const;
    Quot top(const Rep& m) const;
    /// Dimension vector of top(M) / soc(M).
    std::vector<std::size_t> top_vector(const Rep& m) const;
    std::vector<std::size_t> socle_vector(const Rep& m) const;

    /// The map P_v -> M sending the idempotent e_v to `element` in M_v.
    RepMap map_from_projective(std::size_t v, const Rep& m, const Matrix& element) const;
    /// The map M -> I_v whose socle component is the functional `row` on M_v.
    RepMap map_to_injective(std::size_t v, const Rep& m, const Matrix& row) const;

    struct Cover {
        StandardSum projective;
        RepMap map;  // onto M
    };
    struct Envelope {
        StandardSum injective;
        RepMap map;  // from M
    };
    Cover projective_cover(const Rep& m) const;
    Envelope injective_envelope(const Rep& m) const;
    Rep syzygy(const Rep& m) const;
    Rep cosyzygy(const Rep& m) const;

    /// Auslander-Reiten translates via the transpose; zero exactly when the
    /// module is projective (resp. injective) for indecomposable input.
    Rep tau(const Rep& m) const;
    Rep tau_inverse(const Rep& m) const;

    /// Components z_ij in e_{target_i} L e_{source_j} of a map between sums of
    /// projectives; the map is x -> z x on each summand pair.
    std::vector<std::vector<Matrix>> projective_components(const StandardSum& from, const StandardSum& to,
                                                           const RepMap& f) const;
    /// Components of a map between sums of injectives: the component from
    /// I_v to I_w corresponds to z in e_w L e_v acting by phi -> phi(- z).
    std::vector<std::vector<Matrix>> injective_components(const StandardSum& from, const StandardSum& to,
                                                          const RepMap& g) const;
    /// Nakayama functor on a map between sums of projectives.
    RepMap nakayama_on_projectives(const StandardSum& from, const StandardSum& to, const RepMap& f,
                                   const StandardSum& inj_from, const StandardSum& inj_to) const;
    /// Inverse Nakayama functor on a map between sums of injectives.
    RepMap inverse_nakayama_on_injectives(const StandardSum& from, const StandardSum& to, const RepMap& g,
                                          const StandardSum& proj_from, const StandardSum& proj_to) const;

    // --- Hom, Ext, homological dimensions -----------------------------------

    std::vector<RepMap> hom_basis(const Rep& m, const Rep& n) const;
    std::size_t hom_dim(const Rep& m, const Rep& n) const;
    /// dim Ext^1(M, N) from the projective presentation 0 -> OM -> P0 -> M.
    std::size_t ext1_dim(const Rep& m, const Rep& n) const;
    /// Same with a precomputed syzygy and top of M.
    std::size_t ext1_dim(const Rep& m, const Rep& syz_m, const std::vector<std::size_t>& top_m,
                         const Rep& n) const;
    /// Projective dimension, or `cap + 1` if no resolution of length <= cap.
    std::size_t projective_dimension(const Rep& m, std::size_t cap) const;

    bool is_projective(const Rep& m) const;
    bool is_injective(const Rep& m) const;
    bool is_isomorphic(const Rep& m, const Rep& n) const;

private:
    struct PairSpace {
        std::vector<Path> paths;   // every path from -> to
        Cokernel quotient;         // modulo the ideal
        std::vector<Path> normal;  // paths picked as the quotient basis
    };
    const PairSpace& pair(std::size_t from, std::size_t to) const { return spaces_[from * num_vertices() + to]; }
    std::size_t local_index(const Path& p) const;
    Path concat(const Path& p, const Path& q) const;
    StandardSum standard_sum(const std::vector<std::size_t>& vertices, bool projective) const;

    Quiver quiver_;
    std::vector<Relation> relations_;
    std::vector<PairSpace> spaces_;
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> path_index_;
    std::vector<Rep> projectives_;
    std::vector<Rep> injectives_;
};

}  // namespace dupcat
