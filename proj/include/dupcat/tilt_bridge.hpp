#pragma once

// Tilting Abar-modules with free part in the left part, and their
// correspondence with cluster-tilting objects.

#include "dupcat/cluster.hpp"
#include "dupcat/dup_algebra.hpp"
#include "dupcat/left_part.hpp"
#include "dupcat/report.hpp"

#include <string>
#include <vector>

namespace dupcat {

struct TiltingVerdict {
    bool count_ok = false;        // 2n summands
    bool pd_ok = false;           // every summand has pd <= 1
    bool ext_ok = false;          // Ext^1(T, T) = 0
    bool proj_inj_present = false;  // every P_x' is a summand
    std::string failure;
    bool tilting() const { return count_ok && pd_ok && ext_ok; }
};

/// Classical tilting test for a multiplicity-free list of indecomposables.
TiltingVerdict is_tilting_module(const DuplicatedAlgebra& d, const std::vector<DupModule>& summands);

struct TiltingRecord {
    std::vector<std::size_t> free_part;  // indices into LeftPartCatalog::members
    TiltingVerdict verdict;
};

/// Every tilting module T0 (+) e'Abar with T0 in add L, ordered by free part.
std::vector<TiltingRecord> enumerate_L_tilting(const DuplicatedAlgebra& d, const LeftPartCatalog& lp);

/// The cluster object attached to a non-projective-injective member of L.
/// Throws NotInDomain for projective-injectives and modules outside L.
ClusterObject pi_bar(const DuplicatedAlgebra& d, const LeftPartCatalog& lp, const ClusterCategory& c,
                     const DupModule& m);

struct Bijection {
    std::vector<TiltingRecord> left;
    std::vector<std::vector<std::size_t>> cluster;
    std::vector<std::vector<std::size_t>> images;  // pi_bar of each left record, as object indices
    Report report;
};

/// Applies pi_bar to every L-tilting free part and compares with the
/// cluster-tilting objects.
Bijection verify_bijection(const DuplicatedAlgebra& d, const LeftPartCatalog& lp, const ClusterCategory& c);

/// Ext-symmetry on the cluster side and agreement of cluster orthogonality
/// with two-sided Ext vanishing over Abar.
Report verify_ext_models(const DuplicatedAlgebra& d, const LeftPartCatalog& lp, const ClusterCategory& c);

}  // namespace dupcat
