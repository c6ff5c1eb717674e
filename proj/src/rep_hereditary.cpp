#include "dupcat/rep_hereditary.hpp"

#include <algorithm>
#include <stdexcept>

namespace dupcat {

PathAlgebra::PathAlgebra(Quiver q) : QuiverAlgebra(q, {}), paths_(q.all_paths()) {}

std::size_t PathAlgebra::path_index(const Path& p) const
{
    auto it = std::lower_bound(paths_.begin(), paths_.end(), p, [](const Path& a, const Path& b) {
        if (a.start != b.start)
            return a.start < b.start;
        if (a.length() != b.length())
            return a.length() < b.length();
        return a.arrows < b.arrows;
    });
    if (it == paths_.end() || *it != p)
        throw std::logic_error("path not in quiver");
    return static_cast<std::size_t>(it - paths_.begin());
}

StandardReps PathAlgebra::standard_reps() const
{
    StandardReps s;
    for (std::size_t v = 0; v < num_vertices(); ++v) {
        s.simple.push_back(simple(v));
        s.projective.push_back(projective(v));
        s.injective.push_back(injective(v));
    }
    return s;
}

std::pair<std::optional<Rep>, std::optional<Rep>> PathAlgebra::tau_pair(const Rep& m) const
{
    std::pair<std::optional<Rep>, std::optional<Rep>> out;
    if (!is_projective(m))
        out.first = tau(m);
    if (!is_injective(m))
        out.second = tau_inverse(m);
    return out;
}

TensorDA PathAlgebra::nakayama(const Rep& y) const
{
    const std::size_t n = num_vertices();
    const Quiver& q = quiver();
    TensorDA t;
    t.slots.resize(n);
    t.slot_offset.resize(n);
    t.generator_dim.assign(n, 0);
    for (std::size_t i = 0; i < paths_.size(); ++i) {
        const Path& p = paths_[i];
        t.slots[p.start].push_back(i);
        t.slot_offset[p.start].push_back(t.generator_dim[p.start]);
        t.generator_dim[p.start] += y.dims[p.end];
    }
    auto slot_of = [&](std::size_t y0, std::size_t path) {
        auto it = std::find(t.slots[y0].begin(), t.slots[y0].end(), path);
        return static_cast<std::size_t>(it - t.slots[y0].begin());
    };

    // Balancing relations: (m b) (x) p* = m (x) (b p*), where b p* = z* if
    // p = z b and 0 otherwise.
    for (std::size_t y0 = 0; y0 < n; ++y0) {
        std::vector<Matrix> rels;
        for (std::size_t k = 0; k < t.slots[y0].size(); ++k) {
            const Path& p = paths_[t.slots[y0][k]];
            for (auto b : q.arrows_in(p.end)) {
                std::size_t x0 = q.arrow(b).source;
                std::optional<std::size_t> z_slot;
                if (!p.arrows.empty() && p.arrows.back() == b) {
                    Path z{p.start, x0, {p.arrows.begin(), p.arrows.end() - 1}};
                    z_slot = slot_of(y0, path_index(z));
                }
                Matrix r(t.generator_dim[y0], y.dims[x0]);
                r.set_block(t.slot_offset[y0][k], 0, y.maps[b]);
                if (z_slot)
                    r.set_block(t.slot_offset[y0][*z_slot], 0, -Matrix::identity(y.dims[x0]));
                rels.push_back(std::move(r));
            }
        }
        t.quotient.push_back(cokernel_basis(hstack(rels, t.generator_dim[y0])));
    }

    t.rep = zero_rep();
    for (std::size_t v = 0; v < n; ++v)
        t.rep.dims[v] = t.quotient[v].dimension();
    // p* c = w* if p = c w, else 0.
    for (std::size_t c = 0; c < num_arrows(); ++c) {
        std::size_t y0 = q.arrow(c).source, y1 = q.arrow(c).target;
        Matrix lift(t.generator_dim[y1], t.generator_dim[y0]);
        for (std::size_t k = 0; k < t.slots[y0].size(); ++k) {
            const Path& p = paths_[t.slots[y0][k]];
            if (p.arrows.empty() || p.arrows.front() != c)
                continue;
            Path w{y1, p.end, {p.arrows.begin() + 1, p.arrows.end()}};
            std::size_t ws = slot_of(y1, path_index(w));
            lift.set_block(t.slot_offset[y1][ws], t.slot_offset[y0][k], Matrix::identity(y.dims[p.end]));
        }
        t.rep.maps[c] = t.quotient[y1].projection * (lift * t.quotient[y0].section());
    }
    return t;
}

RepMap PathAlgebra::nakayama_map(const TensorDA& from, const TensorDA& to, const RepMap& g) const
{
    RepMap out;
    for (std::size_t y0 = 0; y0 < num_vertices(); ++y0) {
        std::vector<Matrix> blocks;
        for (auto idx : from.slots[y0])
            blocks.push_back(g.comps[paths_[idx].end]);
        Matrix lifted = block_diagonal(blocks);
        out.comps.push_back(to.quotient[y0].projection * (lifted * from.quotient[y0].section()));
    }
    return out;
}

ARCatalog knit_ind_A(const PathAlgebra& a, const KnitOptions& opts) { return knit(a, opts); }

}  // namespace dupcat
