#pragma once

// The duplicated algebra of kQ: the triangular matrix algebra with two
// copies of A on the diagonal glued by the bimodule DA.
//
// It is presented here as a bound quiver.  Vertices 0..n-1 are Q, vertices
// n..2n-1 the primed copy Q'.  Besides the arrows of Q and Q' there is one
// arrow phi_p : x' -> y for every path p : y ~> x of Q (trivial paths
// included), standing for the dual basis vector p* of e'_x DA e_y.  The
// relations make the family (phi_p) a module map nu(Y) -> X, so an
// Abar-module is the same thing as a triple (X, Y, theta: nu(Y) -> X); the
// accessors below translate between the two descriptions.

#include "dupcat/algebra.hpp"
#include "dupcat/ar_catalog.hpp"
#include "dupcat/rep_hereditary.hpp"

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace dupcat {

using DupModule = Rep;

/// A morphism split into its A-part f (on X) and A'-part g (on Y).
struct DupMap {
    RepMap f;
    RepMap g;
};

class DuplicatedAlgebra {
public:
    explicit DuplicatedAlgebra(const Quiver& q);

    const PathAlgebra& base() const { return base_; }
    const QuiverAlgebra& algebra() const { return bar_; }
    std::size_t n() const { return n_; }
    std::size_t prime(std::size_t x) const { return x + n_; }
    /// Arrow of the bound quiver standing for the path with the given index
    /// in base().paths().
    std::size_t connector(std::size_t path_index) const { return 2 * base_.num_arrows() + path_index; }
    std::size_t primed_arrow(std::size_t a) const { return base_.num_arrows() + a; }

    // --- triple view --------------------------------------------------------

    Rep x_part(const DupModule& m) const;
    Rep y_part(const DupModule& m) const;
    /// theta : nu(Y) -> X.
    RepMap theta(const DupModule& m) const;
    DupModule from_triple(const Rep& x, const Rep& y, const RepMap& theta) const;
    DupMap split(const RepMap& f) const;
    RepMap join(const DupMap& f) const;

    DupModule embed(const Rep& x) const;
    bool in_image_of_A(const DupModule& m) const;

    // --- standard modules ---------------------------------------------------

    DupModule projective(std::size_t x) const { return bar_.projective(x); }
    DupModule projective_prime(std::size_t x) const { return bar_.projective(prime(x)); }
    DupModule injective(std::size_t x) const { return bar_.injective(x); }
    DupModule injective_prime(std::size_t x) const { return bar_.injective(prime(x)); }
    DupModule simple(std::size_t x) const { return bar_.simple(x); }
    DupModule simple_prime(std::size_t x) const { return bar_.simple(prime(x)); }

    // --- homological operations ---------------------------------------------

    std::vector<DupMap> hom_basis(const DupModule& m, const DupModule& n) const;
    std::size_t hom_dim(const DupModule& m, const DupModule& n) const { return bar_.hom_dim(m, n); }
    std::size_t ext1(const DupModule& m, const DupModule& n) const { return bar_.ext1_dim(m, n); }
    /// Projective dimension, capped at dim Abar.
    std::size_t pd(const DupModule& m) const;
    bool is_isomorphic(const DupModule& m, const DupModule& n) const { return bar_.is_isomorphic(m, n); }
    bool is_projective_injective(const DupModule& m) const
    {
        return bar_.is_projective(m) && bar_.is_injective(m);
    }

    struct Structure {
        DupModule top, socle, radical;
    };
    Structure structure(const DupModule& m) const;
    std::pair<DupModule, DupModule> syzygy_pair(const DupModule& m) const;
    std::pair<std::optional<DupModule>, std::optional<DupModule>> tau_pair(const DupModule& m) const;

    /// Name of a module by its dimension vector, e.g. "10|01" (Q part, then Q').
    std::string dims_name(const DupModule& m) const;

private:
    static Quiver build_quiver(const Quiver& q);
    static std::vector<Relation> build_relations(const Quiver& q);

    std::size_t n_;
    PathAlgebra base_;
    QuiverAlgebra bar_;
};

/// Complete catalog of ind Abar.
ARCatalog knit_ind_dup(const DuplicatedAlgebra& d, const KnitOptions& opts = {});

/// The quiver of Abar in its minimal form, computed from rad / rad^2.
struct DupQuiverReport {
    Quiver base;
    /// (x, y, multiplicity) for arrows x' -> y.
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> connecting;
    /// hom_table[x][y] = dim e'_x Abar e_y.
    std::vector<std::vector<std::size_t>> hom_table;
    std::size_t maximal_paths = 0;
    /// Length-two composites of minimal arrows that vanish.
    std::vector<std::string> zero_composites;
    /// Groups of parallel nonzero length-two composites that are linearly
    /// dependent, with the number of independent relations among them.
    struct Commutativity {
        std::vector<std::string> composites;
        std::size_t relations;
    };
    std::vector<Commutativity> commutativity;

    std::string to_text() const;
    std::string to_dot() const;
};

DupQuiverReport duplicated_quiver(const DuplicatedAlgebra& d);

}  // namespace dupcat
