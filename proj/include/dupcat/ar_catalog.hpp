#pragma once

// Auslander-Reiten catalogs built by knitting along tau^-1 orbits.

#include "dupcat/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dupcat {

struct KnitOptions {
    std::size_t cap = 10000;    // most indecomposables to produce
    std::size_t max_dim = 64;   // largest total dimension accepted
};

struct IrreducibleArrow {
    std::size_t from;
    std::size_t to;
    std::size_t multiplicity;
    bool operator==(const IrreducibleArrow&) const = default;
};

struct ARCatalog {
    std::vector<Rep> modules;
    std::vector<bool> projective;
    std::vector<bool> injective;
    std::vector<std::optional<std::size_t>> tau;
    std::vector<std::optional<std::size_t>> tau_inverse;
    std::vector<IrreducibleArrow> arrows;

    std::size_t size() const { return modules.size(); }
    std::vector<std::size_t> successors(std::size_t i) const;
    std::vector<std::size_t> predecessors(std::size_t i) const;
};

/// Knits the tau^-1 orbits of the indecomposable projectives in round-robin
/// order, then computes irreducible maps as rad / rad^2 between entries.
///
/// Throws CapExceeded once more than `cap` modules are produced or a module
/// exceeds `max_dim`, and KnittingError when a new module is isomorphic to an
/// earlier one or has a nontrivial endomorphism ring.
ARCatalog knit(const QuiverAlgebra& alg, const KnitOptions& opts = {});

/// Index of the catalog entry isomorphic to m.
std::optional<std::size_t> find_module(const QuiverAlgebra& alg, const ARCatalog& cat, const Rep& m);

/// Maps M -> X whose classes form a basis of rad(M,X) / rad^2(M,X).
std::vector<RepMap> irreducible_maps(const QuiverAlgebra& alg, const ARCatalog& cat, std::size_t from,
                                     std::size_t to);

struct ARSequenceCheck {
    std::size_t module;
    bool dimension_balance = false;  // dim M + dim tau^-1 M = dim E
    bool left_map_injective = false;
    bool cokernel_matches = false;   // coker(M -> E) ~ tau^-1 M
    bool ok() const { return dimension_balance && left_map_injective && cokernel_matches; }
};

/// Rebuilds 0 -> M -> E -> tau^-1 M -> 0 for every non-injective entry from
/// the catalog arrows and checks it.
std::vector<ARSequenceCheck> check_ar_sequences(const QuiverAlgebra& alg, const ARCatalog& cat);

}  // namespace dupcat
