#include "dupcat/dup_algebra.hpp"

#include "dupcat/errors.hpp"

#include <map>
#include <sstream>

namespace dupcat {

namespace {

std::string connector_name(const Quiver& q, const Path& p)
{
    if (p.arrows.empty())
        return "phi[" + q.label(p.start) + "]";
    std::string s = "phi[";
    for (std::size_t i = 0; i < p.arrows.size(); ++i)
        s += (i ? "." : "") + q.arrow(p.arrows[i]).name;
    return s + "]";
}

std::string join_dims(const std::vector<std::size_t>& d, std::size_t from, std::size_t to)
{
    bool small = true;
    for (std::size_t i = from; i < to; ++i)
        small = small && d[i] < 10;
    std::string s;
    for (std::size_t i = from; i < to; ++i)
        s += (i > from && !small ? "," : "") + std::to_string(d[i]);
    return s;
}

}  // namespace

Quiver DuplicatedAlgebra::build_quiver(const Quiver& q)
{
    const std::size_t n = q.num_vertices();
    std::vector<std::string> labels = q.labels();
    for (std::size_t x = 0; x < n; ++x)
        labels.push_back(q.label(x) + "'");
    std::vector<Arrow> arrows = q.arrows();
    for (const auto& a : q.arrows())
        arrows.push_back({a.name + "'", a.source + n, a.target + n});
    for (const auto& p : q.all_paths())
        arrows.push_back({connector_name(q, p), p.end + n, p.start});
    return Quiver::make(std::move(labels), std::move(arrows));
}

std::vector<Relation> DuplicatedAlgebra::build_relations(const Quiver& q)
{
    const std::size_t n = q.num_vertices(), m = q.num_arrows();
    const auto paths = q.all_paths();
    std::map<Path, std::size_t> index;
    for (std::size_t i = 0; i < paths.size(); ++i)
        index[paths[i]] = i;
    auto conn = [&](std::size_t i) { return 2 * m + i; };

    std::vector<Relation> rels;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const Path& p = paths[i];
        // phi_p after b' : equals phi_z when p = z b, zero otherwise.
        for (auto b : q.arrows_in(p.end)) {
            std::size_t x0 = q.arrow(b).source;
            Relation r;
            r.terms.push_back({Rational(1), Path{x0 + n, p.start, {m + b, conn(i)}}});
            if (!p.arrows.empty() && p.arrows.back() == b) {
                Path z{p.start, x0, {p.arrows.begin(), p.arrows.end() - 1}};
                r.terms.push_back({Rational(-1), Path{x0 + n, p.start, {conn(index.at(z))}}});
            }
            rels.push_back(std::move(r));
        }
        // c after phi_p : equals phi_w when p = c w, zero otherwise.
        for (auto c : q.arrows_out(p.start)) {
            std::size_t y1 = q.arrow(c).target;
            Relation r;
            r.terms.push_back({Rational(1), Path{p.end + n, y1, {conn(i), c}}});
            if (!p.arrows.empty() && p.arrows.front() == c) {
                Path w{y1, p.end, {p.arrows.begin() + 1, p.arrows.end()}};
                r.terms.push_back({Rational(-1), Path{p.end + n, y1, {conn(index.at(w))}}});
            }
            rels.push_back(std::move(r));
        }
    }
    return rels;
}

DuplicatedAlgebra::DuplicatedAlgebra(const Quiver& q)
    : n_(q.num_vertices()), base_(q), bar_(build_quiver(q), build_relations(q))
{
}

Rep DuplicatedAlgebra::x_part(const DupModule& m) const
{
    Rep x;
    x.dims.assign(m.dims.begin(), m.dims.begin() + n_);
    x.maps.assign(m.maps.begin(), m.maps.begin() + base_.num_arrows());
    return x;
}

Rep DuplicatedAlgebra::y_part(const DupModule& m) const
{
    Rep y;
    y.dims.assign(m.dims.begin() + n_, m.dims.begin() + 2 * n_);
    y.maps.assign(m.maps.begin() + base_.num_arrows(), m.maps.begin() + 2 * base_.num_arrows());
    return y;
}

RepMap DuplicatedAlgebra::theta(const DupModule& m) const
{
    Rep x = x_part(m), y = y_part(m);
    TensorDA ny = base_.nakayama(y);
    RepMap t;
    for (std::size_t v = 0; v < n_; ++v) {
        std::vector<Matrix> phis;
        for (auto idx : ny.slots[v])
            phis.push_back(m.maps[connector(idx)]);
        Matrix phi = hstack(phis, x.dims[v]);
        t.comps.push_back(phi * ny.quotient[v].section());
    }
    return t;
}

DupModule DuplicatedAlgebra::from_triple(const Rep& x, const Rep& y, const RepMap& th) const
{
    TensorDA ny = base_.nakayama(y);
    DupModule m = bar_.zero_rep();
    for (std::size_t v = 0; v < n_; ++v) {
        m.dims[v] = x.dims[v];
        m.dims[prime(v)] = y.dims[v];
    }
    const std::size_t arrows = base_.num_arrows();
    for (std::size_t a = 0; a < arrows; ++a) {
        m.maps[a] = x.maps[a];
        m.maps[primed_arrow(a)] = y.maps[a];
    }
    for (std::size_t v = 0; v < n_; ++v)
        for (std::size_t k = 0; k < ny.slots[v].size(); ++k) {
            std::size_t idx = ny.slots[v][k];
            std::size_t w = base_.paths()[idx].end;
            Matrix iota = ny.quotient[v].projection.block(0, ny.slot_offset[v][k], ny.rep.dims[v], y.dims[w]);
            m.maps[connector(idx)] = th.comps[v] * iota;
        }
    return m;
}

DupMap DuplicatedAlgebra::split(const RepMap& f) const
{
    DupMap d;
    d.f.comps.assign(f.comps.begin(), f.comps.begin() + n_);
    d.g.comps.assign(f.comps.begin() + n_, f.comps.end());
    return d;
}

RepMap DuplicatedAlgebra::join(const DupMap& d) const
{
    RepMap f = d.f;
    f.comps.insert(f.comps.end(), d.g.comps.begin(), d.g.comps.end());
    return f;
}

DupModule DuplicatedAlgebra::embed(const Rep& x) const
{
    Rep y = base_.zero_rep();
    for (std::size_t a = 0; a < base_.num_arrows(); ++a)
        y.maps[a] = Matrix(0, 0);
    TensorDA ny = base_.nakayama(y);
    return from_triple(x, y, base_.zero_map(ny.rep, x));
}

bool DuplicatedAlgebra::in_image_of_A(const DupModule& m) const { return y_part(m).is_zero(); }

std::vector<DupMap> DuplicatedAlgebra::hom_basis(const DupModule& m, const DupModule& n) const
{
    std::vector<DupMap> out;
    for (const auto& f : bar_.hom_basis(m, n))
        out.push_back(split(f));
    return out;
}

std::size_t DuplicatedAlgebra::pd(const DupModule& m) const { return bar_.projective_dimension(m, bar_.dimension()); }

DuplicatedAlgebra::Structure DuplicatedAlgebra::structure(const DupModule& m) const
{
    return {bar_.top(m).rep, bar_.socle(m).rep, bar_.radical(m).rep};
}

std::pair<DupModule, DupModule> DuplicatedAlgebra::syzygy_pair(const DupModule& m) const
{
    return {bar_.syzygy(m), bar_.cosyzygy(m)};
}

std::pair<std::optional<DupModule>, std::optional<DupModule>> DuplicatedAlgebra::tau_pair(const DupModule& m) const
{
    std::pair<std::optional<DupModule>, std::optional<DupModule>> out;
    if (!bar_.is_projective(m))
        out.first = bar_.tau(m);
    if (!bar_.is_injective(m))
        out.second = bar_.tau_inverse(m);
    return out;
}

std::string DuplicatedAlgebra::dims_name(const DupModule& m) const
{
    return join_dims(m.dims, 0, n_) + "|" + join_dims(m.dims, n_, 2 * n_);
}

ARCatalog knit_ind_dup(const DuplicatedAlgebra& d, const KnitOptions& opts) { return knit(d.algebra(), opts); }

DupQuiverReport duplicated_quiver(const DuplicatedAlgebra& d)
{
    const Quiver& q = d.base().quiver();
    const QuiverAlgebra& bar = d.algebra();
    const Quiver& bq = bar.quiver();
    const std::size_t n = d.n();
    DupQuiverReport r;
    r.base = q;
    r.maximal_paths = q.maximal_paths().size();
    r.hom_table.assign(n, std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            r.hom_table[x][y] = bar.space_dim(d.prime(x), y);
            if (std::size_t k = bar.arrow_count_minimal(d.prime(x), y); k > 0)
                r.connecting.emplace_back(x, y, k);
        }

    // Minimal arrows: those of Q and Q', and phi_p for maximal paths p.
    std::vector<std::size_t> minimal;
    for (std::size_t a = 0; a < 2 * q.num_arrows(); ++a)
        minimal.push_back(a);
    const auto& paths = d.base().paths();
    for (std::size_t i = 0; i < paths.size(); ++i)
        if (q.arrows_in(paths[i].start).empty() && q.arrows_out(paths[i].end).empty())
            minimal.push_back(d.connector(i));

    // Group composites by endpoints.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::string, Matrix>>> groups;
    for (auto u : minimal)
        for (auto v : minimal) {
            if (bq.arrow(u).target != bq.arrow(v).source)
                continue;
            Path p{bq.arrow(u).source, bq.arrow(v).target, {u, v}};
            Matrix img = bar.reduce(p);
            std::string name = bq.arrow(u).name + "*" + bq.arrow(v).name;
            if (img.is_zero())
                r.zero_composites.push_back(name);
            else
                groups[{p.start, p.end}].emplace_back(name, img);
        }
    for (auto& [ends, members] : groups) {
        if (members.size() < 2)
            continue;
        std::vector<Matrix> cols;
        for (auto& [name, img] : members)
            cols.push_back(img);
        std::size_t rk = rank(hstack(cols, cols.front().rows()));
        if (rk == members.size())
            continue;
        DupQuiverReport::Commutativity c;
        for (auto& [name, img] : members)
            c.composites.push_back(name);
        c.relations = members.size() - rk;
        r.commutativity.push_back(std::move(c));
    }
    return r;
}

std::string DupQuiverReport::to_text() const
{
    std::ostringstream out;
    const std::size_t n = base.num_vertices();
    out << "duplicated quiver: " << 2 * n << " vertices\n";
    out << "connecting arrows (" << connecting.size() << ", maximal paths " << maximal_paths << "):";
    for (const auto& [x, y, k] : connecting) {
        out << ' ' << base.label(x) << "'->" << base.label(y);
        if (k > 1)
            out << " x" << k;
    }
    out << "\ndim e'_x Abar e_y (rows x, columns y):\n";
    for (std::size_t x = 0; x < n; ++x) {
        out << "  " << base.label(x) << "':";
        for (std::size_t y = 0; y < n; ++y)
            out << ' ' << hom_table[x][y];
        out << '\n';
    }
    out << "zero composites (" << zero_composites.size() << "):";
    for (const auto& z : zero_composites)
        out << ' ' << z;
    out << '\n';
    for (const auto& c : commutativity) {
        out << "commutativity (" << c.relations << " relations):";
        for (std::size_t i = 0; i < c.composites.size(); ++i)
            out << (i ? " = " : " ") << c.composites[i];
        out << '\n';
    }
    return out.str();
}

std::string DupQuiverReport::to_dot() const
{
    std::ostringstream out;
    const std::size_t n = base.num_vertices();
    out << "digraph duplicated_quiver {\n  rankdir=RL;\n";
    for (std::size_t v = 0; v < n; ++v) {
        out << "  \"" << base.label(v) << "\";\n";
        out << "  \"" << base.label(v) << "'\";\n";
    }
    for (const auto& a : base.arrows()) {
        out << "  \"" << base.label(a.source) << "\" -> \"" << base.label(a.target) << "\" [label=\"" << a.name
            << "\"];\n";
        out << "  \"" << base.label(a.source) << "'\" -> \"" << base.label(a.target) << "'\" [label=\"" << a.name
            << "'\"];\n";
    }
    for (const auto& [x, y, k] : connecting)
        for (std::size_t i = 0; i < k; ++i)
            out << "  \"" << base.label(x) << "'\" -> \"" << base.label(y) << "\" [style=dashed];\n";
    out << "}\n";
    return out.str();
}

}  // namespace dupcat
