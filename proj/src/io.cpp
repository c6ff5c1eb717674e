#include "dupcat/io.hpp"

#include "dupcat/errors.hpp"

#include <set>
#include <sstream>

namespace dupcat {

using nlohmann::json;

json matrix_to_json(const Matrix& m)
{
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Matrix matrix_from_json(const json& j)
{
    try {
        std::size_t rows = j.at("rows"), cols = j.at("cols");
        const auto& e = j.at("entries");
        if (e.size() != rows)
            throw Error("matrix: expected " + std::to_string(rows) + " rows");
        Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            if (e[r].size() != cols)
                throw Error("matrix: row " + std::to_string(r) + " has the wrong length");
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = parse_rational(e[r][c].get<std::string>());
        }
        return m;
    } catch (const json::exception& ex) {
        throw Error(std::string("matrix: ") + ex.what());
    }
}

json rep_to_json(const Rep& m)
{
    json maps = json::array();
    for (const auto& a : m.maps)
        maps.push_back(matrix_to_json(a));
    return {{"dims", m.dims}, {"maps", maps}};
}

Rep rep_from_json(const json& j)
{
    Rep m;
    try {
        m.dims = j.at("dims").get<std::vector<std::size_t>>();
        for (const auto& a : j.at("maps"))
            m.maps.push_back(matrix_from_json(a));
    } catch (const json::exception& ex) {
        throw Error(std::string("module: ") + ex.what());
    }
    return m;
}

namespace {

json optional_index(const std::optional<std::size_t>& i)
{
    return i ? json(*i) : json(nullptr);
}

}  // namespace

json catalog_to_json(const ARCatalog& cat)
{
    json modules = json::array();
    for (std::size_t i = 0; i < cat.size(); ++i)
        modules.push_back({{"module", rep_to_json(cat.modules[i])},
                           {"projective", bool(cat.projective[i])},
                           {"injective", bool(cat.injective[i])},
                           {"tau", optional_index(cat.tau[i])},
                           {"tau_inverse", optional_index(cat.tau_inverse[i])}});
    json arrows = json::array();
    for (const auto& a : cat.arrows)
        arrows.push_back({{"from", a.from}, {"to", a.to}, {"multiplicity", a.multiplicity}});
    return {{"modules", modules}, {"arrows", arrows}};
}

ARCatalog catalog_from_json(const json& j)
{
    ARCatalog cat;
    try {
        for (const auto& e : j.at("modules")) {
            cat.modules.push_back(rep_from_json(e.at("module")));
            cat.projective.push_back(e.at("projective").get<bool>());
            cat.injective.push_back(e.at("injective").get<bool>());
            for (auto [key, field] : {std::pair{"tau", &cat.tau}, std::pair{"tau_inverse", &cat.tau_inverse}}) {
                const auto& v = e.at(key);
                field->push_back(v.is_null() ? std::nullopt : std::optional<std::size_t>(v.get<std::size_t>()));
            }
        }
        for (const auto& a : j.at("arrows"))
            cat.arrows.push_back({a.at("from"), a.at("to"), a.at("multiplicity")});
    } catch (const json::exception& ex) {
        throw Error(std::string("catalog: ") + ex.what());
    }
    const std::size_t n = cat.size();
    auto check = [n](std::optional<std::size_t> i) {
        if (i && *i >= n)
            throw Error("catalog: index " + std::to_string(*i) + " out of range");
    };
    for (std::size_t i = 0; i < n; ++i) {
        check(cat.tau[i]);
        check(cat.tau_inverse[i]);
    }
    for (const auto& a : cat.arrows) {
        check(a.from);
        check(a.to);
    }
    return cat;
}

namespace {

const char* kind_name(MemberKind k)
{
    switch (k) {
    case MemberKind::IndA:
        return "ind A";
    case MemberKind::Cosyzygy:
        return "cosyzygy";
    default:
        return "projective-injective";
    }
}

// Full-catalog index of every left-part member.
std::vector<std::size_t> member_positions(const DuplicatedAlgebra& d, const Analysis& a)
{
    std::vector<std::size_t> pos;
    for (const auto& m : a.left.members) {
        auto i = find_module(d.algebra(), a.ind_abar, m.module);
        if (!i)
            throw Error("left part member " + m.name + " is missing from the catalog of ind Abar");
        pos.push_back(*i);
    }
    return pos;
}

}  // namespace

json analysis_to_json(const DuplicatedAlgebra& d, const ClusterCategory& c, const Analysis& a)
{
    auto pos = member_positions(d, a);
    json members = json::array();
    for (std::size_t i = 0; i < a.left.members.size(); ++i) {
        const auto& m = a.left.members[i];
        members.push_back({{"name", m.name},
                           {"kind", kind_name(m.kind)},
                           {"dims", d.dims_name(m.module)},
                           {"catalog_index", pos[i]},
                           {"sigma", m.in_sigma()}});
    }
    json tilting = json::array();
    for (const auto& t : a.tilting) {
        json free = json::array();
        for (auto i : t.free_part)
            free.push_back(a.left.members[i].name);
        tilting.push_back(free);
    }
    json cluster = json::array();
    for (const auto& s : a.cluster_tilting) {
        json names = json::array();
        for (auto i : s)
            names.push_back(c.name(c.objects()[i]));
        cluster.push_back(names);
    }
    auto type = classify_dynkin(d.base().quiver());
    return {{"quiver", format_quiver(d.base().quiver())},
            {"dynkin", type.name()},
            {"ind_A", catalog_to_json(a.left.ind_a)},
            {"ind_Abar", catalog_to_json(a.ind_abar)},
            {"left_part", members},
            {"L_tilting", tilting},
            {"cluster_tilting", cluster}};
}

std::string ar_quiver_dot(const DuplicatedAlgebra& d, const Analysis& a, const DotStyle& style)
{
    const auto& cat = a.ind_abar;
    auto pos = member_positions(d, a);
    std::set<std::size_t> left(pos.begin(), pos.end()), sigma, diamonds;
    for (std::size_t i = 0; i < pos.size(); ++i)
        if (a.left.members[i].in_sigma())
            sigma.insert(pos[i]);
    if (style.tilting) {
        if (*style.tilting >= a.tilting.size())
            throw Error("tilting index " + std::to_string(*style.tilting) + " out of range (" +
                        std::to_string(a.tilting.size()) + " L-tilting modules)");
        for (auto i : a.tilting[*style.tilting].free_part)
            diamonds.insert(pos[i]);
    }

    std::ostringstream out;
    auto node = [&](std::size_t i, const char* indent) {
        out << indent << "m" << i << " [label=\"" << d.dims_name(cat.modules[i]) << "\"";
        if (cat.projective[i] && cat.injective[i])
            out << ", shape=circle";
        else if (diamonds.count(i))
            out << ", shape=diamond";
        if (sigma.count(i))
            out << ", style=filled, fillcolor=lightblue";
        out << "];\n";
    };

    out << "digraph ARQuiver {\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n";
    out << "  subgraph cluster_left {\n    label=\"left part\";\n    style=rounded;\n";
    for (auto i : left)
        node(i, "    ");
    out << "  }\n";
    for (std::size_t i = 0; i < cat.size(); ++i)
        if (!left.count(i))
            node(i, "  ");
    for (const auto& e : cat.arrows) {
        out << "  m" << e.from << " -> m" << e.to;
        if (e.multiplicity > 1)
            out << " [label=\"" << e.multiplicity << "\"]";
        out << ";\n";
    }
    for (std::size_t i = 0; i < cat.size(); ++i)
        if (cat.tau_inverse[i])
            out << "  m" << i << " -> m" << *cat.tau_inverse[i] << " [style=dashed, arrowhead=none, constraint=false];\n";
    out << "}\n";
    return out.str();
}

}  // namespace dupcat
