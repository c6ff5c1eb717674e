#pragma once

// The end-to-end computation for one quiver and the full verification run
// built on top of it.

#include "dupcat/cluster.hpp"
#include "dupcat/io.hpp"

#include <memory>

namespace dupcat {

/// Owns the algebras so that the cluster category's reference stays valid.
struct Pipeline {
    DuplicatedAlgebra dup;
    Analysis analysis;
    std::unique_ptr<ClusterCategory> cluster;

    /// Knits ind Abar, builds the left part and both tilting lists.
    /// Throws NotDynkin or CapExceeded.
    Pipeline(const Quiver& q, const KnitOptions& opts);
};

/// Hom and Ext over A agree with Hom and Ext between the embedded modules,
/// and tau commutes with the embedding.
Report verify_embedding(const DuplicatedAlgebra& d, const ARCatalog& ind_a);

/// Deliberate corruptions used to check that verification notices them.
enum class Fault { None, DropMember, SwapCosyzygy };

/// Every check, grouped under section headers in the check names.
Report verify_all(const Pipeline& p, Fault fault = Fault::None);

}  // namespace dupcat
