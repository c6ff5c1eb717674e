#include "dupcat/algebra.hpp"

#include "dupcat/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dupcat {

std::size_t Rep::total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

bool RepMap::is_zero() const
{
    return std::all_of(comps.begin(), comps.end(), [](const Matrix& m) { return m.is_zero(); });
}

namespace {

Matrix unit_column(std::size_t n, std::size_t i)
{
    Matrix e(n, 1);
    e(i, 0) = 1;
    return e;
}

Path arrow_path(const Quiver& q, std::size_t a) { return Path{q.arrow(a).source, q.arrow(a).target, {a}}; }

}  // namespace

QuiverAlgebra::QuiverAlgebra(Quiver quiver, std::vector<Relation> relations)
    : quiver_(std::move(quiver)), relations_(std::move(relations))
{
    const std::size_t n = num_vertices();
    spaces_.assign(n * n, {});
    for (auto& p : quiver_.all_paths()) {
        auto& sp = spaces_[p.start * n + p.end];
        path_index_[{p.start, p.arrows}] = sp.paths.size();
        sp.paths.push_back(std::move(p));
    }
    for (const auto& r : relations_) {
        if (r.terms.empty())
            throw std::invalid_argument("empty relation");
        for (const auto& [c, p] : r.terms)
            if (p.start != r.terms.front().second.start || p.end != r.terms.front().second.end)
                throw std::invalid_argument("relation terms are not parallel");
    }
    // The ideal in e_s L e_t is spanned by u * r * w over relations r.
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) {
            auto& sp = spaces_[s * n + t];
            std::vector<Matrix> gens;
            for (const auto& r : relations_) {
                std::size_t a = r.terms.front().second.start, b = r.terms.front().second.end;
                for (const auto& u : spaces_[s * n + a].paths)
                    for (const auto& w : spaces_[b * n + t].paths) {
                        Matrix v(sp.paths.size(), 1);
                        for (const auto& [c, p] : r.terms)
                            v(local_index(concat(concat(u, p), w)), 0) += c;
                        gens.push_back(std::move(v));
                    }
            }
            sp.quotient = cokernel_basis(hstack(gens, sp.paths.size()));
            for (auto row : sp.quotient.section_rows)
                sp.normal.push_back(sp.paths[row]);
        }

    for (std::size_t v = 0; v < n; ++v) {
        Rep p, i;
        for (std::size_t u = 0; u < n; ++u) {
            p.dims.push_back(space_dim(v, u));
            i.dims.push_back(space_dim(u, v));
        }
        for (std::size_t a = 0; a < num_arrows(); ++a) {
            const auto& arr = quiver_.arrow(a);
            Path ap = arrow_path(quiver_, a);
            Matrix pm(p.dims[arr.target], p.dims[arr.source]);
            const auto& words = normal_words(v, arr.source);
            for (std::size_t j = 0; j < words.size(); ++j)
                pm.set_block(0, j, reduce(concat(words[j], ap)));
            p.maps.push_back(std::move(pm));
            // Dual of y -> a y from e_target L e_v to e_source L e_v.
            Matrix left(i.dims[arr.source], i.dims[arr.target]);
            const auto& ys = normal_words(arr.target, v);
            for (std::size_t l = 0; l < ys.size(); ++l)
                left.set_block(0, l, reduce(concat(ap, ys[l])));
            i.maps.push_back(left.transpose());
        }
        projectives_.push_back(std::move(p));
        injectives_.push_back(std::move(i));
    }
}

std::size_t QuiverAlgebra::space_dim(std::size_t from, std::size_t to) const
{
    return pair(from, to).quotient.dimension();
}

std::size_t QuiverAlgebra::dimension() const
{
    std::size_t d = 0;
    for (const auto& sp : spaces_)
        d += sp.quotient.dimension();
    return d;
}

const std::vector<Path>& QuiverAlgebra::normal_words(std::size_t from, std::size_t to) const
{
    return pair(from, to).normal;
}

std::size_t QuiverAlgebra::local_index(const Path& p) const
{
    auto it = path_index_.find({p.start, p.arrows});
    if (it == path_index_.end())
        throw std::logic_error("unknown path");
    return it->second;
}

Path QuiverAlgebra::concat(const Path& p, const Path& q) const
{
    if (p.end != q.start)
        throw std::logic_error("concatenating non-composable paths");
    Path r{p.start, q.end, p.arrows};
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

Matrix QuiverAlgebra::reduce(const Path& p) const
{
    return pair(p.start, p.end).quotient.projection.col(local_index(p));
}

Matrix QuiverAlgebra::multiply(std::size_t a, std::size_t b, const Matrix& x, std::size_t c, const Matrix& y) const
{
    const auto& left = normal_words(a, b);
    const auto& right = normal_words(b, c);
    Matrix out(space_dim(a, c), 1);
    for (std::size_t i = 0; i < left.size(); ++i) {
        if (sgn(x(i, 0)) == 0)
            continue;
        for (std::size_t j = 0; j < right.size(); ++j) {
            if (sgn(y(j, 0)) == 0)
                continue;
            out += reduce(concat(left[i], right[j])).scaled(x(i, 0) * y(j, 0));
        }
    }
    return out;
}

std::size_t QuiverAlgebra::arrow_count_minimal(std::size_t from, std::size_t to) const
{
    if (from == to)
        return 0;
    const auto& sp = pair(from, to);
    std::vector<std::size_t> all, long_paths;
    for (std::size_t i = 0; i < sp.paths.size(); ++i) {
        all.push_back(i);
        if (sp.paths[i].length() >= 2)
            long_paths.push_back(i);
    }
    return rank(sp.quotient.projection.select_cols(all)) - rank(sp.quotient.projection.select_cols(long_paths));
}

Rep QuiverAlgebra::simple(std::size_t v) const
{
    Rep s = zero_rep();
    s.dims[v] = 1;
    for (std::size_t a = 0; a < num_arrows(); ++a)
        s.maps[a] = Matrix(s.dims[quiver_.arrow(a).target], s.dims[quiver_.arrow(a).source]);
    return s;
}

Rep QuiverAlgebra::zero_rep() const
{
    Rep z;
    z.dims.assign(num_vertices(), 0);
    z.maps.assign(num_arrows(), Matrix());
    return z;
}

StandardSum QuiverAlgebra::standard_sum(const std::vector<std::size_t>& vertices, bool projective) const
{
    StandardSum s;
    s.vertices = vertices;
    std::vector<Rep> parts;
    std::vector<std::size_t> running(num_vertices(), 0);
    for (auto v : vertices) {
        const Rep& r = projective ? projectives_.at(v) : injectives_.at(v);
        s.offset.push_back(running);
        for (std::size_t u = 0; u < num_vertices(); ++u)
            running[u] += r.dims[u];
        parts.push_back(r);
    }
    s.rep = direct_sum(parts);
    return s;
}

StandardSum QuiverAlgebra::projective_sum(std::vector<std::size_t> vertices) const
{
    return standard_sum(vertices, true);
}

StandardSum QuiverAlgebra::injective_sum(std::vector<std::size_t> vertices) const
{
    return standard_sum(vertices, false);
}

bool QuiverAlgebra::is_module(const Rep& m) const
{
    if (m.dims.size() != num_vertices() || m.maps.size() != num_arrows())
        return false;
    for (std::size_t a = 0; a < num_arrows(); ++a) {
        const auto& arr = quiver_.arrow(a);
        if (m.maps[a].rows() != m.dims[arr.target] || m.maps[a].cols() != m.dims[arr.source])
            return false;
    }
    for (const auto& r : relations_) {
        const Path& p0 = r.terms.front().second;
        Matrix sum(m.dims[p0.end], m.dims[p0.start]);
        for (const auto& [c, p] : r.terms)
            sum += path_action(m, p).scaled(c);
        if (!sum.is_zero())
            return false;
    }
    return true;
}

bool QuiverAlgebra::is_morphism(const Rep& from, const Rep& to, const RepMap& f) const
{
    if (f.comps.size() != num_vertices())
        return false;
    for (std::size_t v = 0; v < num_vertices(); ++v)
        if (f.comps[v].rows() != to.dims[v] || f.comps[v].cols() != from.dims[v])
            return false;
    for (std::size_t a = 0; a < num_arrows(); ++a) {
        const auto& arr = quiver_.arrow(a);
        if (to.maps[a] * f.comps[arr.source] != f.comps[arr.target] * from.maps[a])
            return false;
    }
    return true;
}

RepMap QuiverAlgebra::zero_map(const Rep& from, const Rep& to) const
{
    RepMap f;
    for (std::size_t v = 0; v < num_vertices(); ++v)
        f.comps.emplace_back(to.dims[v], from.dims[v]);
    return f;
}

RepMap QuiverAlgebra::identity_map(const Rep& m) const
{
    RepMap f;
    for (auto d : m.dims)
        f.comps.push_back(Matrix::identity(d));
    return f;
}

RepMap QuiverAlgebra::compose(const RepMap& g, const RepMap& f) const
{
    RepMap h;
    for (std::size_t v = 0; v < num_vertices(); ++v)
        h.comps.push_back(g.comps[v] * f.comps[v]);
    return h;
}

RepMap QuiverAlgebra::add(const RepMap& f, const RepMap& g) const
{
    RepMap h;
    for (std::size_t v = 0; v < num_vertices(); ++v)
        h.comps.push_back(f.comps[v] + g.comps[v]);
    return h;
}

RepMap QuiverAlgebra::scale(const RepMap& f, const Rational& s) const
{
    RepMap h;
    for (const auto& c : f.comps)
        h.comps.push_back(c.scaled(s));
    return h;
}

Rep QuiverAlgebra::direct_sum(const std::vector<Rep>& parts) const
{
    Rep s = zero_rep();
    for (const auto& p : parts)
        for (std::size_t v = 0; v < num_vertices(); ++v)
            s.dims[v] += p.dims[v];
    for (std::size_t a = 0; a < num_arrows(); ++a) {
        std::vector<Matrix> blocks;
        for (const auto& p : parts)
            blocks.push_back(p.maps[a]);
        s.maps[a] = block_diagonal(blocks);
    }
    return s;
}

Matrix QuiverAlgebra::path_action(const Rep& m, const Path& p) const
{
    Matrix acc = Matrix::identity(m.dims[p.start]);
    for (auto a : p.arrows)
        acc = m.maps[a] * acc;
    return acc;
}

QuiverAlgebra::Sub QuiverAlgebra::submodule(const Rep& m, const std::vector<Matrix>& spans) const
{
    Sub s;
    s.rep = zero_rep();
    std::vector<Matrix> lefts;
    for (std::size_t v = 0; v < num_vertices(); ++v) {
        s.rep.dims[v] = spans[v].cols();
        lefts.push_back(left_inverse(spans[v]));
    }
    for (std::size_t a = 0; a < num_arrows(); ++a) {
        const auto& arr = quiver_.arrow(a);
        s.rep.maps[a] = lefts[arr.target] * (m.maps[a] * spans[arr.source]);
    }
    s.inclusion.comps = spans;
    return s;
}

QuiverAlgebra::Sub QuiverAlgebra::kernel(const Rep& from, const Rep&, const RepMap& f) const
{
    std::vector<Matrix> spans;
    for (std::size_t v = 0; v < num_vertices(); ++v)
        spans.push_back(nullspace(f.comps[v]));
    return submodule(from, spans);
}

QuiverAlgebra::Sub QuiverAlgebra::image(const Rep&, const Rep& to, const RepMap& f) const
{
    std::vector<Matrix> spans;
    for (std::size_t v = 0; v < num_vertices(); ++v) {
        auto idx = independent_columns(f.comps[v]);
        spans.push_back(f.comps[v].select_cols(idx));
    }
    return submodule(to, spans);
}

QuiverAlgebra::Quot QuiverAlgebra::cokernel(const Rep&, const Rep& to, const RepMap& f) const
{
    Quot q;
    q.rep = zero_rep();
    std::vector<Cokernel> cks;
    for (std::size_t v = 0; v < num_vertices(); ++v) {
        cks.push_back(cokernel_basis(f.comps[v]));
        q.rep.dims[v] = cks.back().dimension();
        q.projection.comps.push_back(cks.back().projection);
    }
    for (std::size_t a = 0; a < num_arrows(); ++a) {
        const auto& arr = quiver_.arrow(a);
        q.rep.maps[a] = cks[arr.target].projection * (to.maps[a] * cks[arr.source].section());
    }
    return q;
}

QuiverAlgebra::Sub QuiverAlgebra::radical(const Rep& m) const
{
    std::vector<Matrix> spans;
    for (std::size_t t = 0; t < num_vertices(); ++t) {
        std::vector<Matrix> imgs;
        for (auto a : quiver_.arrows_in(t))
            imgs.push_back(m.maps[a]);
        Matrix all = hstack(imgs, m.dims[t]);
        spans.push_back(all.select_cols(independent_columns(all)));
    }
    return submodule(m, spans);
}

QuiverAlgebra::Sub QuiverAlgebra::socle(const Rep& m) const
{
    std::vector<Matrix> spans;
    for (std::size_t t = 0; t < num_vertices(); ++t) {
        std::vector<Matrix> outs;
        for (auto a : quiver_.arrows_out(t))
            outs.push_back(m.maps[a]);
        spans.push_back(nullspace(vstack(outs, m.dims[t])));
    }
    return submodule(m, spans);
}

QuiverAlgebra::Quot QuiverAlgebra::top(const Rep& m) const
{
    Sub r = radical(m);
    return cokernel(r.rep, m, r.inclusion);
}

std::vector<std::size_t> QuiverAlgebra::top_vector(const Rep& m) const
{
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < num_vertices(); ++t) {
        std::vector<Matrix> imgs;
        for (auto a : quiver_.arrows_in(t))
            imgs.push_back(m.maps[a]);
        out.push_back(m.dims[t] - rank(hstack(imgs, m.dims[t])));
    }
    return out;
}

std::vector<std::size_t> QuiverAlgebra::socle_vector(const Rep& m) const
{
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < num_vertices(); ++t) {
        std::vector<Matrix> outs;
        for (auto a : quiver_.arrows_out(t))
            outs.push_back(m.maps[a]);
        out.push_back(m.dims[t] - rank(vstack(outs, m.dims[t])));
    }
    return out;
}

RepMap QuiverAlgebra::map_from_projective(std::size_t v, const Rep& m, const Matrix& element) const
{
    RepMap f;
    for (std::size_t u = 0; u < num_vertices(); ++u) {
        const auto& words = normal_words(v, u);
        Matrix c(m.dims[u], words.size());
        for (std::size_t j = 0; j < words.size(); ++j)
            c.set_block(0, j, path_action(m, words[j]) * element);
        f.comps.push_back(std::move(c));
    }
    return f;
}

RepMap QuiverAlgebra::map_to_injective(std::size_t v, const Rep& m, const Matrix& row) const
{
    RepMap f;
    for (std::size_t u = 0; u < num_vertices(); ++u) {
        const auto& words = normal_words(u, v);
        Matrix c(words.size(), m.dims[u]);
        for (std::size_t l = 0; l < words.size(); ++l)
            c.set_block(l, 0, row * path_action(m, words[l]));
        f.comps.push_back(std::move(c));
    }
    return f;
}

QuiverAlgebra::Cover QuiverAlgebra::projective_cover(const Rep& m) const
{
    std::vector<std::size_t> vertices;
    std::vector<Matrix> elements;
    for (std::size_t t = 0; t < num_vertices(); ++t) {
        std::vector<Matrix> imgs;
        for (auto a : quiver_.arrows_in(t))
            imgs.push_back(m.maps[a]);
        Cokernel ck = cokernel_basis(hstack(imgs, m.dims[t]));
        for (auto r : ck.section_rows) {
            vertices.push_back(t);
            elements.push_back(unit_column(m.dims[t], r));
        }
    }
    Cover c{projective_sum(vertices), {}};
    for (std::size_t u = 0; u < num_vertices(); ++u)
        c.map.comps.emplace_back(m.dims[u], c.projective.rep.dims[u]);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        RepMap part = map_from_projective(vertices[i], m, elements[i]);
        for (std::size_t u = 0; u < num_vertices(); ++u)
            c.map.comps[u].set_block(0, c.projective.offset[i][u], part.comps[u]);
    }
    return c;
}

QuiverAlgebra::Envelope QuiverAlgebra::injective_envelope(const Rep& m) const
{
    std::vector<std::size_t> vertices;
    std::vector<Matrix> functionals;
    for (std::size_t t = 0; t < num_vertices(); ++t) {
        std::vector<Matrix> outs;
        for (auto a : quiver_.arrows_out(t))
            outs.push_back(m.maps[a]);
        Matrix soc = nullspace(vstack(outs, m.dims[t]));
        Matrix dual = left_inverse(soc);
        for (std::size_t i = 0; i < soc.cols(); ++i) {
            vertices.push_back(t);
            functionals.push_back(dual.row(i));
        }
    }
    Envelope e{injective_sum(vertices), {}};
    for (std::size_t u = 0; u < num_vertices(); ++u)
        e.map.comps.emplace_back(e.injective.rep.dims[u], m.dims[u]);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        RepMap part = map_to_injective(vertices[i], m, functionals[i]);
        for (std::size_t u = 0; u < num_vertices(); ++u)
            e.map.comps[u].set_block(e.injective.offset[i][u], 0, part.comps[u]);
    }
    return e;
}

Rep QuiverAlgebra::syzygy(const Rep& m) const
{
    Cover c = projective_cover(m);
    return kernel(c.projective.rep, m, c.map).rep;
}

Rep QuiverAlgebra::cosyzygy(const Rep& m) const
{
    Envelope e = injective_envelope(m);
    return cokernel(m, e.injective.rep, e.map).rep;
}

std::vector<std::vector<Matrix>> QuiverAlgebra::projective_components(const StandardSum& from,
                                                                      const StandardSum& to,
                                                                      const RepMap& f) const
{
    std::vector<std::vector<Matrix>> z(to.vertices.size(), std::vector<Matrix>(from.vertices.size()));
    for (std::size_t j = 0; j < from.vertices.size(); ++j) {
        std::size_t w = from.vertices[j];
        Matrix image = f.comps[w].col(from.offset[j][w]);
        for (std::size_t i = 0; i < to.vertices.size(); ++i)
            z[i][j] = image.block(to.offset[i][w], 0, space_dim(to.vertices[i], w), 1);
    }
    return z;
}

std::vector<std::vector<Matrix>> QuiverAlgebra::injective_components(const StandardSum& from,
                                                                     const StandardSum& to,
                                                                     const RepMap& g) const
{
    std::vector<std::vector<Matrix>> z(to.vertices.size(), std::vector<Matrix>(from.vertices.size()));
    for (std::size_t i = 0; i < to.vertices.size(); ++i) {
        std::size_t w = to.vertices[i];
        Matrix row = g.comps[w].row(to.offset[i][w]);
        for (std::size_t j = 0; j < from.vertices.size(); ++j)
            z[i][j] = row.block(0, from.offset[j][w], 1, space_dim(w, from.vertices[j])).transpose();
    }
    return z;
}

RepMap QuiverAlgebra::nakayama_on_projectives(const StandardSum& from, const StandardSum& to, const RepMap& f,
                                              const StandardSum& inj_from, const StandardSum& inj_to) const
{
    auto z = projective_components(from, to, f);
    RepMap out = zero_map(inj_from.rep, inj_to.rep);
    for (std::size_t i = 0; i < to.vertices.size(); ++i)
        for (std::size_t j = 0; j < from.vertices.size(); ++j) {
            if (z[i][j].is_zero())
                continue;
            std::size_t v = to.vertices[i], w = from.vertices[j];
            // I_w -> I_v, phi -> phi(- z) with z in e_v L e_w.
            for (std::size_t u = 0; u < num_vertices(); ++u) {
                std::size_t rows = space_dim(u, v), cols = space_dim(u, w);
                Matrix blk(rows, cols);
                for (std::size_t l = 0; l < rows; ++l)
                    blk.set_block(l, 0, multiply(u, v, unit_column(rows, l), w, z[i][j]).transpose());
                out.comps[u].set_block(inj_to.offset[i][u], inj_from.offset[j][u], blk);
            }
        }
    return out;
}

RepMap QuiverAlgebra::inverse_nakayama_on_injectives(const StandardSum& from, const StandardSum& to,
                                                     const RepMap& g, const StandardSum& proj_from,
                                                     const StandardSum& proj_to) const
{
    auto z = injective_components(from, to, g);
    RepMap out = zero_map(proj_from.rep, proj_to.rep);
    for (std::size_t i = 0; i < to.vertices.size(); ++i)
        for (std::size_t j = 0; j < from.vertices.size(); ++j) {
            if (z[i][j].is_zero())
                continue;
            std::size_t w = to.vertices[i], v = from.vertices[j];
            // P_v -> P_w, x -> z x with z in e_w L e_v.
            for (std::size_t u = 0; u < num_vertices(); ++u) {
                std::size_t rows = space_dim(w, u), cols = space_dim(v, u);
                Matrix blk(rows, cols);
                for (std::size_t k = 0; k < cols; ++k)
                    blk.set_block(0, k, multiply(w, v, z[i][j], u, unit_column(cols, k)));
                out.comps[u].set_block(proj_to.offset[i][u], proj_from.offset[j][u], blk);
            }
        }
    return out;
}

Rep QuiverAlgebra::tau(const Rep& m) const
{
    Cover c0 = projective_cover(m);
    Sub omega = kernel(c0.projective.rep, m, c0.map);
    Cover c1 = projective_cover(omega.rep);
    RepMap f = compose(omega.inclusion, c1.map);
    StandardSum i1 = injective_sum(c1.projective.vertices);
    StandardSum i0 = injective_sum(c0.projective.vertices);
    RepMap nf = nakayama_on_projectives(c1.projective, c0.projective, f, i1, i0);
    return kernel(i1.rep, i0.rep, nf).rep;
}

Rep QuiverAlgebra::tau_inverse(const Rep& m) const
{
    Envelope e0 = injective_envelope(m);
    Quot omega = cokernel(m, e0.injective.rep, e0.map);
    Envelope e1 = injective_envelope(omega.rep);
    RepMap g = compose(e1.map, omega.projection);
    StandardSum p0 = projective_sum(e0.injective.vertices);
    StandardSum p1 = projective_sum(e1.injective.vertices);
    RepMap ng = inverse_nakayama_on_injectives(e0.injective, e1.injective, g, p0, p1);
    return cokernel(p0.rep, p1.rep, ng).rep;
}

std::vector<RepMap> QuiverAlgebra::hom_basis(const Rep& m, const Rep& n) const
{
    const std::size_t nv = num_vertices();
    std::vector<std::size_t> off(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v)
        off[v + 1] = off[v] + n.dims[v] * m.dims[v];
    const std::size_t unknowns = off[nv];
    if (unknowns == 0)
        return {};
    // F_v is n_v x m_v, stored row-major at off[v].
    std::size_t eqs = 0;
    for (std::size_t a = 0; a < num_arrows(); ++a)
        eqs += n.dims[quiver_.arrow(a).target] * m.dims[quiver_.arrow(a).source];
    Matrix sys(eqs, unknowns);
    std::size_t row = 0;
    for (std::size_t a = 0; a < num_arrows(); ++a) {
        const std::size_t s = quiver_.arrow(a).source, t = quiver_.arrow(a).target;
        const Matrix& na = n.maps[a];
        const Matrix& ma = m.maps[a];
        // (N_a F_s - F_t M_a)_{ij} = 0
        for (std::size_t i = 0; i < n.dims[t]; ++i)
            for (std::size_t j = 0; j < m.dims[s]; ++j, ++row) {
                for (std::size_t k = 0; k < n.dims[s]; ++k)
                    if (sgn(na(i, k)) != 0)
                        sys(row, off[s] + k * m.dims[s] + j) += na(i, k);
                for (std::size_t k = 0; k < m.dims[t]; ++k)
                    if (sgn(ma(k, j)) != 0)
                        sys(row, off[t] + i * m.dims[t] + k) -= ma(k, j);
            }
    }
    Matrix basis = nullspace(sys);
    std::vector<RepMap> out;
    for (std::size_t b = 0; b < basis.cols(); ++b) {
        RepMap f;
        for (std::size_t v = 0; v < nv; ++v) {
            Matrix c(n.dims[v], m.dims[v]);
            for (std::size_t i = 0; i < n.dims[v]; ++i)
                for (std::size_t j = 0; j < m.dims[v]; ++j)
                    c(i, j) = basis(off[v] + i * m.dims[v] + j, b);
            f.comps.push_back(std::move(c));
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::size_t QuiverAlgebra::hom_dim(const Rep& m, const Rep& n) const { return hom_basis(m, n).size(); }

std::size_t QuiverAlgebra::ext1_dim(const Rep& m, const Rep& n) const
{
    return ext1_dim(m, syzygy(m), top_vector(m), n);
}

std::size_t QuiverAlgebra::ext1_dim(const Rep& m, const Rep& syz_m, const std::vector<std::size_t>& top_m,
                                    const Rep& n) const
{
    // 0 -> Hom(M,N) -> Hom(P0,N) -> Hom(OM,N) -> Ext^1(M,N) -> 0
    std::size_t hom_p0 = 0;
    for (std::size_t v = 0; v < num_vertices(); ++v)
        hom_p0 += top_m[v] * n.dims[v];
    return hom_dim(syz_m, n) + hom_dim(m, n) - hom_p0;
}

std::size_t QuiverAlgebra::projective_dimension(const Rep& m, std::size_t cap) const
{
    Rep cur = m;
    for (std::size_t k = 0; k <= cap; ++k) {
        if (is_projective(cur))
            return k;
        cur = syzygy(cur);
    }
    return cap + 1;
}

bool QuiverAlgebra::is_projective(const Rep& m) const
{
    auto top = top_vector(m);
    std::size_t d = 0;
    for (std::size_t v = 0; v < num_vertices(); ++v)
        d += top[v] * projectives_[v].total_dim();
    return d == m.total_dim();
}

bool QuiverAlgebra::is_injective(const Rep& m) const
{
    auto soc = socle_vector(m);
    std::size_t d = 0;
    for (std::size_t v = 0; v < num_vertices(); ++v)
        d += soc[v] * injectives_[v].total_dim();
    return d == m.total_dim();
}

bool QuiverAlgebra::is_isomorphic(const Rep& m, const Rep& n) const
{
    if (m.dims != n.dims)
        return false;
    const std::size_t d = m.total_dim();
    if (d == 0)
        return true;
    std::vector<Matrix> space;
    for (const auto& f : hom_basis(m, n))
        space.push_back(block_diagonal(f.comps));
    if (space.empty())
        return false;
    return rank(generic_max_rank(space, d, d)) == d;
}

}  // namespace dupcat
