#pragma once

// The cluster category of A on its fundamental domain ind A + {P_x[1]}.

#include "dupcat/ar_catalog.hpp"
#include "dupcat/quiver.hpp"
#include "dupcat/rep_hereditary.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace dupcat {

struct ClusterObject {
    enum class Kind { Module, ShiftedProjective };
    Kind kind;
    std::size_t index;  // ind A catalog index, or vertex

    static ClusterObject module(std::size_t i) { return {Kind::Module, i}; }
    static ClusterObject shifted(std::size_t x) { return {Kind::ShiftedProjective, x}; }
    auto operator<=>(const ClusterObject&) const = default;
};

class ClusterCategory {
public:
    ClusterCategory(const PathAlgebra& a, ARCatalog ind_a);

    const PathAlgebra& algebra() const { return a_; }
    const ARCatalog& ind_a() const { return cat_; }
    /// Fundamental-domain representatives: every module, then every P_x[1].
    const std::vector<ClusterObject>& objects() const { return objects_; }
    std::size_t object_index(const ClusterObject& o) const;

    std::size_t ext1(const ClusterObject& o1, const ClusterObject& o2) const;
    std::size_t hom_modules(const Rep& m, const Rep& n) const;

    /// All n-element Ext-orthogonal sets, as sorted indices into objects().
    std::vector<std::vector<std::size_t>> enumerate_tilting() const;
    /// No further object can be added to the set keeping orthogonality.
    bool is_maximal(const std::vector<std::size_t>& set) const;

    std::string name(const ClusterObject& o) const;

private:
    const PathAlgebra& a_;
    ARCatalog cat_;
    std::vector<ClusterObject> objects_;
    std::vector<std::vector<std::size_t>> ext_;  // symmetric table over objects()
};

/// W-Catalan number prod (d_i + h) / d_i over the degrees of the Weyl group.
mpz_class expected_count(const DynkinType& t);

}  // namespace dupcat
