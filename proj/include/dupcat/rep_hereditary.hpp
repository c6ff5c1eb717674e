#pragma once

// mod A for A = kQ with Q acyclic.

#include "dupcat/algebra.hpp"
#include "dupcat/ar_catalog.hpp"

#include <optional>

namespace dupcat {

struct StandardReps {
    std::vector<Rep> simple;
    std::vector<Rep> projective;
    std::vector<Rep> injective;
};

/// Y tensored with DA over A, presented at each vertex y as a quotient of
/// the generator space G_y = (+) over paths p: y ~> x of Y_x.
struct TensorDA {
    Rep rep;
    // slots[y]: indices (into Quiver::all_paths order) of the paths from y,
    // slot_offset[y][k]: first coordinate of slot k in G_y.
    std::vector<std::vector<std::size_t>> slots;
    std::vector<std::vector<std::size_t>> slot_offset;
    std::vector<std::size_t> generator_dim;
    std::vector<Cokernel> quotient;
};

class PathAlgebra : public QuiverAlgebra {
public:
    explicit PathAlgebra(Quiver q);

    StandardReps standard_reps() const;

    /// Pair (tau M, tau^-1 M); an empty slot flags a projective, resp.
    /// injective, argument.
    std::pair<std::optional<Rep>, std::optional<Rep>> tau_pair(const Rep& m) const;

    /// The Nakayama functor D Hom(-, A), realised as - (x) DA.
    TensorDA nakayama(const Rep& y) const;
    RepMap nakayama_map(const TensorDA& from, const TensorDA& to, const RepMap& g) const;

    const std::vector<Path>& paths() const { return paths_; }
    std::size_t path_index(const Path& p) const;

private:
    std::vector<Path> paths_;
};

/// Complete catalog of ind A; throws CapExceeded for representation-infinite
/// quivers.
ARCatalog knit_ind_A(const PathAlgebra& a, const KnitOptions& opts = {});

}  // namespace dupcat
