#pragma once

// JSON export/import of catalogs and Graphviz output for the AR quiver of
// the duplicated algebra.  Every number is exact: matrices are written as
// nested arrays of "p/q" strings.

#include "dupcat/ar_catalog.hpp"
#include "dupcat/left_part.hpp"
#include "dupcat/report.hpp"
#include "dupcat/tilt_bridge.hpp"

#include "json.hpp"

#include <optional>
#include <string>

namespace dupcat {

nlohmann::json matrix_to_json(const Matrix& m);
/// Throws Error on malformed input.
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json rep_to_json(const Rep& m);
Rep rep_from_json(const nlohmann::json& j);

nlohmann::json catalog_to_json(const ARCatalog& cat);
ARCatalog catalog_from_json(const nlohmann::json& j);

/// Everything computed for a Dynkin quiver, in one document.
struct Analysis {
    ARCatalog ind_abar;
    LeftPartCatalog left;
    std::vector<TiltingRecord> tilting;
    std::vector<std::vector<std::size_t>> cluster_tilting;
};

nlohmann::json analysis_to_json(const DuplicatedAlgebra& d, const ClusterCategory& c, const Analysis& a);

struct DotStyle {
    /// Tilting record whose free part is drawn with diamonds.
    std::optional<std::size_t> tilting;
};

/// The AR quiver of Abar: the left part boxed, Sigma filled, the free part
/// of a chosen tilting module as diamonds and projective-injectives as
/// circles.  Dashed edges are the translation.
std::string ar_quiver_dot(const DuplicatedAlgebra& d, const Analysis& a, const DotStyle& style = {});

}  // namespace dupcat
