#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dupcat {

struct Arrow {
    std::string name;
    std::size_t source;
    std::size_t target;
    bool operator==(const Arrow&) const = default;
};

/// A path given by its start vertex and arrow indices in travel order.
/// The trivial path at v has no arrows.
struct Path {
    std::size_t start = 0;
    std::size_t end = 0;
    std::vector<std::size_t> arrows;
    std::size_t length() const { return arrows.size(); }
    auto operator<=>(const Path&) const = default;
};

/// Finite quiver with labelled vertices and named arrows.
///
/// Construction through `Quiver::make` or `parse_quiver` validates labels,
/// rejects loops, and (unless `allow_cycles`) rejects oriented cycles.
class Quiver {
public:
    Quiver() = default;
    static Quiver make(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    std::size_t num_vertices() const { return labels_.size(); }
    std::size_t num_arrows() const { return arrows_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t v) const { return labels_.at(v); }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
    std::optional<std::size_t> vertex_index(std::string_view label) const;

    const std::vector<std::size_t>& arrows_out(std::size_t v) const { return out_.at(v); }
    const std::vector<std::size_t>& arrows_in(std::size_t v) const { return in_.at(v); }

    /// Vertices in an order where every arrow goes forward.
    const std::vector<std::size_t>& topological_order() const { return topo_; }

    /// Every path of the quiver, trivial ones included, in a fixed order:
    /// grouped by start vertex, then by length, then lexicographically.
    std::vector<Path> all_paths() const;
    std::vector<Path> paths_between(std::size_t from, std::size_t to) const;
    std::size_t count_paths(std::size_t from, std::size_t to) const;
    /// Paths that cannot be extended at either end.
    std::vector<Path> maximal_paths() const;

    bool operator==(const Quiver&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<std::size_t>> out_, in_;
    std::vector<std::size_t> topo_;
};

/// Parses the line format
///
///     # comment
///     vertices 1 2 3
///     arrow a 2 1
///
/// Throws ParseError, InvalidQuiver, LoopError or CyclicQuiver.
Quiver parse_quiver(std::string_view text);
Quiver load_quiver(const std::string& path);
std::string format_quiver(const Quiver& q);

/// All arrows reversed; names and labels kept.
Quiver opposite(const Quiver& q);

/// Sinks (no outgoing arrows) and sources (no incoming arrows).
struct SinksAndSources {
    std::vector<std::size_t> sinks;
    std::vector<std::size_t> sources;
};
SinksAndSources sinks_and_sources(const Quiver& q);

enum class DynkinFamily { A, D, E, NotDynkin };

struct DynkinType {
    DynkinFamily family = DynkinFamily::NotDynkin;
    std::size_t rank = 0;
    bool is_dynkin() const { return family != DynkinFamily::NotDynkin; }
    std::string name() const;
    bool operator==(const DynkinType&) const = default;
};

/// Classifies the underlying graph.  Disconnected graphs, multiple edges
/// and graphs with a cycle are reported as NotDynkin.
DynkinType classify_dynkin(const Quiver& q);

/// Number of positive roots of a Dynkin type, i.e. |ind kQ|.
std::size_t positive_root_count(const DynkinType& t);

}  // namespace dupcat
