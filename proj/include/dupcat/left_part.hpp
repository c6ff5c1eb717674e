#pragma once

// The left part of mod Abar and its Ext-injectives Sigma.

#include "dupcat/ar_catalog.hpp"
#include "dupcat/dup_algebra.hpp"
#include "dupcat/report.hpp"

#include <string>
#include <vector>

namespace dupcat {

enum class MemberKind {
    IndA,       // an indecomposable A-module
    Cosyzygy,   // tau^-1 I_x
    ProjInj,    // P_x' lying in the left part
};

struct LeftMember {
    DupModule module;
    MemberKind kind;
    std::size_t index;  // catalog index for IndA, vertex x otherwise
    std::string name;
    bool in_sigma() const { return kind != MemberKind::IndA; }
};

struct LeftPartCatalog {
    ARCatalog ind_a;
    std::vector<LeftMember> members;
    std::vector<std::size_t> proj_inj_outside;  // x with P_x' outside the left part

    std::vector<std::size_t> sigma() const;
    std::vector<std::size_t> non_proj_inj() const;
    std::optional<std::size_t> find(const DuplicatedAlgebra& d, const DupModule& m) const;
};

/// tau^-1 I_x for every vertex, computed through the transpose.
std::vector<DupModule> cosyzygy_sigma(const DuplicatedAlgebra& d);

/// Whether P_x' lies in the left part.  A nonzero non-invertible map into
/// P_x' factors through rad P_x', which has simple socle, so P_x' is in the
/// left part exactly when rad P_x' is: that is, when it is an A-module or
/// isomorphic to one of the cosyzygies.
bool proj_inj_in_left_part(const DuplicatedAlgebra& d, std::size_t x, const std::vector<DupModule>& cosyzygies);

/// Sigma; throws NotDynkin.
std::vector<LeftMember> sigma_catalog(const DuplicatedAlgebra& d);

/// ind A together with Sigma; throws NotDynkin.
LeftPartCatalog left_part_catalog(const DuplicatedAlgebra& d, const KnitOptions& opts = {});

// --- cross-checks ------------------------------------------------------------

/// Members are pairwise non-isomorphic with pd <= 1, and there are exactly n
/// cosyzygies.
Report verify_left_part_structure(const DuplicatedAlgebra& d, const LeftPartCatalog& lp);

/// Brute force: Ext-injectivity in add L and tau^-1 M outside L both
/// characterise Sigma.
Report verify_ext_injectives(const DuplicatedAlgebra& d, const LeftPartCatalog& lp);

/// The left part recomputed from its definition over a full catalog.
struct DefinitionRoute {
    std::vector<std::size_t> pd;                       // per catalog entry
    std::vector<std::vector<bool>> reaches;            // reaches[i][j]: path i ~> j
    std::vector<bool> in_left;
};
DefinitionRoute left_part_by_definition(const DuplicatedAlgebra& d, const ARCatalog& full);

Report verify_left_part_definition(const DuplicatedAlgebra& d, const LeftPartCatalog& lp, const ARCatalog& full,
                                   const DefinitionRoute& def);

/// For every sink a with P_a' in L and every member M, all paths of
/// irreducible maps P_a' ~> M are sectional.
Report sectional_check(const DuplicatedAlgebra& d, const LeftPartCatalog& lp, const ARCatalog& full,
                       const DefinitionRoute& def);

/// pd M <= 1 iff Hom(DAbar, tau M) = 0 on every catalog entry; ind A and
/// its tau^-1 lie in L; every other module is reached from some P_a' with a
/// a sink; and the four descriptions of Sigma agree.
Report verify_catalog_characterisations(const DuplicatedAlgebra& d, const LeftPartCatalog& lp,
                                        const ARCatalog& full, const DefinitionRoute& def);

/// Omega^-1 P_x ~ tau^-1 I_x for every x, and for every sink a the almost
/// split sequence 0 -> I_a -> Ibar_a (+) I_a/S_a -> Ibar_a/S_a -> 0.
Report verify_cosyzygy_identity(const DuplicatedAlgebra& d);

/// The sink vertices a whose P_a' lies in the left part.
std::vector<std::size_t> sinks_in_left_part(const DuplicatedAlgebra& d, const LeftPartCatalog& lp);

/// Canonical tilting module U (+) V with U the sum of Sigma and V the sum of
/// the projectives outside the left part.
struct CanonicalTilting {
    std::vector<DupModule> summands;
    std::vector<std::string> names;
};
CanonicalTilting canonical_tilting(const DuplicatedAlgebra& d, const LeftPartCatalog& lp);

}  // namespace dupcat
