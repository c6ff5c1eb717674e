#include "dupcat/quiver.hpp"

#include "dupcat/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace dupcat {

Quiver Quiver::make(std::vector<std::string> vertices, std::vector<Arrow> arrows)
{
    Quiver q;
    std::set<std::string> seen;
    for (const auto& v : vertices) {
        if (v.empty())
            throw InvalidQuiver("empty vertex label");
        if (!seen.insert(v).second)
            throw InvalidQuiver("duplicate vertex label '" + v + "'");
    }
    std::set<std::string> names;
    for (const auto& a : arrows) {
        if (a.source >= vertices.size() || a.target >= vertices.size())
            throw InvalidQuiver("arrow '" + a.name + "' has an unknown endpoint");
        if (!names.insert(a.name).second)
            throw InvalidQuiver("duplicate arrow name '" + a.name + "'");
        if (a.source == a.target)
            throw LoopError("arrow '" + a.name + "' is a loop at vertex '" + vertices[a.source] + "'");
    }
    q.labels_ = std::move(vertices);
    q.arrows_ = std::move(arrows);
    const std::size_t n = q.labels_.size();
    q.out_.assign(n, {});
    q.in_.assign(n, {});
    for (std::size_t a = 0; a < q.arrows_.size(); ++a) {
        q.out_[q.arrows_[a].source].push_back(a);
        q.in_[q.arrows_[a].target].push_back(a);
    }
    // Kahn's algorithm, smallest index first for a stable order.
    std::vector<std::size_t> indeg(n);
    for (std::size_t v = 0; v < n; ++v)
        indeg[v] = q.in_[v].size();
    std::set<std::size_t> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (indeg[v] == 0)
            ready.insert(v);
    while (!ready.empty()) {
        std::size_t v = *ready.begin();
        ready.erase(ready.begin());
        q.topo_.push_back(v);
        for (auto a : q.out_[v])
            if (--indeg[q.arrows_[a].target] == 0)
                ready.insert(q.arrows_[a].target);
    }
    if (q.topo_.size() != n)
        throw CyclicQuiver("quiver has an oriented cycle");
    return q;
}

std::optional<std::size_t> Quiver::vertex_index(std::string_view label) const
{
    for (std::size_t v = 0; v < labels_.size(); ++v)
        if (labels_[v] == label)
            return v;
    return std::nullopt;
}

std::vector<Path> Quiver::all_paths() const
{
    std::vector<Path> out;
    for (std::size_t v = 0; v < num_vertices(); ++v) {
        std::vector<Path> layer{Path{v, v, {}}};
        while (!layer.empty()) {
            std::vector<Path> next;
            for (const auto& p : layer) {
                out.push_back(p);
                for (auto a : out_[p.end]) {
                    Path e = p;
                    e.arrows.push_back(a);
                    e.end = arrows_[a].target;
                    next.push_back(std::move(e));
                }
            }
            layer = std::move(next);
        }
    }
    return out;
}

std::vector<Path> Quiver::paths_between(std::size_t from, std::size_t to) const
{
    std::vector<Path> out;
    for (auto& p : all_paths())
        if (p.start == from && p.end == to)
            out.push_back(std::move(p));
    return out;
}

std::size_t Quiver::count_paths(std::size_t from, std::size_t to) const
{
    // Dynamic programming along the topological order.
    std::vector<std::size_t> ways(num_vertices(), 0);
    ways[from] = 1;
    for (auto v : topo_)
        for (auto a : out_[v])
            ways[arrows_[a].target] += ways[v];
    return ways[to];
}

std::vector<Path> Quiver::maximal_paths() const
{
    std::vector<Path> out;
    for (auto& p : all_paths())
        if (in_[p.start].empty() && out_[p.end].empty())
            out.push_back(std::move(p));
    return out;
}

namespace {

std::vector<std::string> split_words(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> words;
    for (std::string w; in >> w;)
        words.push_back(w);
    return words;
}

}  // namespace

Quiver parse_quiver(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::vector<std::string> vertices;
    bool have_vertices = false;
    struct RawArrow {
        std::string name, source, target;
        std::size_t line;
    };
    std::vector<RawArrow> raw;
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        auto words = split_words(line);
        if (words.empty())
            continue;
        if (words[0] == "vertices") {
            if (have_vertices)
                throw ParseError(lineno, "second 'vertices' line");
            if (words.size() < 2)
                throw ParseError(lineno, "'vertices' needs at least one label");
            vertices.assign(words.begin() + 1, words.end());
            have_vertices = true;
        } else if (words[0] == "arrow") {
            if (words.size() != 4)
                throw ParseError(lineno, "expected 'arrow <name> <source> <target>'");
            raw.push_back({words[1], words[2], words[3], lineno});
        } else {
            throw ParseError(lineno, "unknown directive '" + words[0] + "'");
        }
    }
    if (!have_vertices)
        throw ParseError(lineno, "missing 'vertices' line");
    std::map<std::string, std::size_t> index;
    for (std::size_t v = 0; v < vertices.size(); ++v)
        if (!index.emplace(vertices[v], v).second)
            throw InvalidQuiver("duplicate vertex label '" + vertices[v] + "'");
    std::vector<Arrow> arrows;
    for (const auto& r : raw) {
        auto s = index.find(r.source), t = index.find(r.target);
        if (s == index.end())
            throw ParseError(r.line, "unknown vertex '" + r.source + "'");
        if (t == index.end())
            throw ParseError(r.line, "unknown vertex '" + r.target + "'");
        arrows.push_back({r.name, s->second, t->second});
    }
    return Quiver::make(std::move(vertices), std::move(arrows));
}

Quiver load_quiver(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open quiver file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_quiver(buf.str());
}

std::string format_quiver(const Quiver& q)
{
    std::ostringstream out;
    out << "vertices";
    for (const auto& l : q.labels())
        out << ' ' << l;
    out << '\n';
    for (const auto& a : q.arrows())
        out << "arrow " << a.name << ' ' << q.label(a.source) << ' ' << q.label(a.target) << '\n';
    return out.str();
}

Quiver opposite(const Quiver& q)
{
    std::vector<Arrow> arrows;
    for (const auto& a : q.arrows())
        arrows.push_back({a.name, a.target, a.source});
    return Quiver::make(q.labels(), std::move(arrows));
}

SinksAndSources sinks_and_sources(const Quiver& q)
{
    SinksAndSources out;
    for (std::size_t v = 0; v < q.num_vertices(); ++v) {
        if (q.arrows_out(v).empty())
            out.sinks.push_back(v);
        if (q.arrows_in(v).empty())
            out.sources.push_back(v);
    }
    return out;
}

std::string DynkinType::name() const
{
    switch (family) {
    case DynkinFamily::A:
        return "A" + std::to_string(rank);
    case DynkinFamily::D:
        return "D" + std::to_string(rank);
    case DynkinFamily::E:
        return "E" + std::to_string(rank);
    default:
        return "not Dynkin";
    }
}

DynkinType classify_dynkin(const Quiver& q)
{
    const std::size_t n = q.num_vertices();
    DynkinType none;
    if (n == 0)
        return none;
    // A tree on n vertices has n - 1 edges; with connectivity this also
    // excludes multiple edges and undirected cycles.
    if (q.num_arrows() != n - 1)
        return none;
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& a : q.arrows()) {
        adj[a.source].push_back(a.target);
        adj[a.target].push_back(a.source);
    }
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != n)
        return none;

    std::vector<std::size_t> branch;
    for (std::size_t v = 0; v < n; ++v) {
        if (adj[v].size() > 3)
            return none;
        if (adj[v].size() == 3)
            branch.push_back(v);
    }
    if (branch.empty())
        return {DynkinFamily::A, n};
    if (branch.size() > 1)
        return none;
    // Arm lengths from the branch vertex.
    std::vector<std::size_t> arms;
    std::size_t c = branch.front();
    for (auto start : adj[c]) {
        std::size_t len = 1, prev = c, cur = start;
        while (adj[cur].size() == 2) {
            std::size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1)
        return {DynkinFamily::D, n};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        return {DynkinFamily::E, n};
    return none;
}

std::size_t positive_root_count(const DynkinType& t)
{
    const std::size_t n = t.rank;
    switch (t.family) {
    case DynkinFamily::A:
        return n * (n + 1) / 2;
    case DynkinFamily::D:
        return n * (n - 1);
    case DynkinFamily::E:
        return n == 6 ? 36 : n == 7 ? 63 : 120;
    default:
        throw NotDynkin("positive_root_count: not a Dynkin type");
    }
}

}  // namespace dupcat
