#include "dupcat/ar_catalog.hpp"

#include "dupcat/errors.hpp"

#include <algorithm>

namespace dupcat {

std::vector<std::size_t> ARCatalog::successors(std::size_t i) const
{
    std::vector<std::size_t> out;
    for (const auto& a : arrows)
        if (a.from == i)
            out.push_back(a.to);
    return out;
}

std::vector<std::size_t> ARCatalog::predecessors(std::size_t i) const
{
    std::vector<std::size_t> out;
    for (const auto& a : arrows)
        if (a.to == i)
            out.push_back(a.from);
    return out;
}

namespace {

Matrix flatten(const RepMap& f)
{
    std::vector<Rational> entries;
    for (const auto& c : f.comps)
        entries.insert(entries.end(), c.entries().begin(), c.entries().end());
    return Matrix::column(entries);
}

std::size_t flat_size(const Rep& m, const Rep& n)
{
    std::size_t s = 0;
    for (std::size_t v = 0; v < m.dims.size(); ++v)
        s += m.dims[v] * n.dims[v];
    return s;
}

using HomTable = std::vector<std::vector<std::vector<RepMap>>>;

// Columns spanning rad^2(M, N) inside the flattened Hom space.
Matrix radical_square(const QuiverAlgebra& alg, const ARCatalog& cat, const HomTable& hom, std::size_t from,
                      std::size_t to)
{
    std::vector<Matrix> cols;
    for (std::size_t x = 0; x < cat.size(); ++x) {
        if (x == from || x == to)
            continue;
        for (const auto& f : hom[from][x])
            for (const auto& g : hom[x][to])
                cols.push_back(flatten(alg.compose(g, f)));
    }
    Matrix all = hstack(cols, flat_size(cat.modules[from], cat.modules[to]));
    return all.select_cols(independent_columns(all));
}

// Hom spaces needed for rad^2 between `from` and `to`, or for every pair.
HomTable hom_table(const QuiverAlgebra& alg, const ARCatalog& cat, std::optional<std::pair<std::size_t, std::size_t>> only)
{
    const std::size_t n = cat.size();
    HomTable hom(n, std::vector<std::vector<RepMap>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (only && i != only->first && j != only->second)
                continue;
            hom[i][j] = alg.hom_basis(cat.modules[i], cat.modules[j]);
        }
    return hom;
}

std::vector<RepMap> lift_irreducible(const QuiverAlgebra& alg, const ARCatalog& cat, const HomTable& hom,
                                     std::size_t from, std::size_t to)
{
    if (from == to || hom[from][to].empty())
        return {};
    Matrix span = radical_square(alg, cat, hom, from, to);
    std::size_t r = span.cols();
    std::vector<RepMap> out;
    for (const auto& f : hom[from][to]) {
        Matrix trial = hstack({span, flatten(f)}, span.rows());
        if (rank(trial) > r) {
            span = std::move(trial);
            ++r;
            out.push_back(f);
        }
    }
    return out;
}

}  // namespace

ARCatalog knit(const QuiverAlgebra& alg, const KnitOptions& opts)
{
    ARCatalog cat;
    auto add = [&](Rep m) {
        if (cat.size() >= opts.cap)
            throw CapExceeded(opts.cap, "knitting produced more than " + std::to_string(opts.cap) +
                                            " indecomposable modules");
        if (m.total_dim() > opts.max_dim)
            throw CapExceeded(opts.cap, "knitting produced a module of dimension " + std::to_string(m.total_dim()) +
                                            " (limit " + std::to_string(opts.max_dim) + ")");
        for (std::size_t i = 0; i < cat.size(); ++i)
            if (alg.is_isomorphic(cat.modules[i], m))
                throw KnittingError("cycle detected: knitting reached entry " + std::to_string(i) + " again");
        if (alg.hom_dim(m, m) != 1)
            throw KnittingError("knitting produced a module whose endomorphism ring is not the ground field");
        cat.projective.push_back(alg.is_projective(m));
        cat.injective.push_back(alg.is_injective(m));
        cat.tau.push_back(std::nullopt);
        cat.tau_inverse.push_back(std::nullopt);
        cat.modules.push_back(std::move(m));
        return cat.size() - 1;
    };

    std::vector<std::size_t> frontier;
    for (std::size_t v = 0; v < alg.num_vertices(); ++v)
        frontier.push_back(add(alg.projective(v)));
    std::vector<bool> open(frontier.size(), true);
    for (bool progress = true; progress;) {
        progress = false;
        for (std::size_t o = 0; o < frontier.size(); ++o) {
            if (!open[o])
                continue;
            std::size_t cur = frontier[o];
            if (cat.injective[cur]) {
                open[o] = false;
                continue;
            }
            Rep next = alg.tau_inverse(cat.modules[cur]);
            if (next.is_zero())
                throw KnittingError("tau^-1 vanished on a non-injective module");
            std::size_t idx = add(std::move(next));
            cat.tau_inverse[cur] = idx;
            cat.tau[idx] = cur;
            frontier[o] = idx;
            progress = true;
        }
    }

    HomTable hom = hom_table(alg, cat, std::nullopt);
    for (std::size_t i = 0; i < cat.size(); ++i)
        for (std::size_t j = 0; j < cat.size(); ++j) {
            std::size_t d = lift_irreducible(alg, cat, hom, i, j).size();
            if (d > 0)
                cat.arrows.push_back({i, j, d});
        }
    return cat;
}

std::optional<std::size_t> find_module(const QuiverAlgebra& alg, const ARCatalog& cat, const Rep& m)
{
    for (std::size_t i = 0; i < cat.size(); ++i)
        if (cat.modules[i].dims == m.dims && alg.is_isomorphic(cat.modules[i], m))
            return i;
    return std::nullopt;
}

std::vector<RepMap> irreducible_maps(const QuiverAlgebra& alg, const ARCatalog& cat, std::size_t from,
                                     std::size_t to)
{
    HomTable hom = hom_table(alg, cat, std::pair{from, to});
    return lift_irreducible(alg, cat, hom, from, to);
}

std::vector<ARSequenceCheck> check_ar_sequences(const QuiverAlgebra& alg, const ARCatalog& cat)
{
    HomTable hom = hom_table(alg, cat, std::nullopt);
    std::vector<ARSequenceCheck> out;
    for (std::size_t i = 0; i < cat.size(); ++i) {
        if (!cat.tau_inverse[i])
            continue;
        ARSequenceCheck chk{i};
        const Rep& m = cat.modules[i];
        const Rep& right = cat.modules[*cat.tau_inverse[i]];
        std::vector<Rep> middle;
        std::vector<RepMap> legs;
        for (std::size_t x = 0; x < cat.size(); ++x)
            for (auto& f : lift_irreducible(alg, cat, hom, i, x)) {
                middle.push_back(cat.modules[x]);
                legs.push_back(std::move(f));
            }
        Rep e = alg.direct_sum(middle);
        std::vector<std::size_t> expect(m.dims.size());
        for (std::size_t v = 0; v < expect.size(); ++v)
            expect[v] = m.dims[v] + right.dims[v];
        chk.dimension_balance = expect == e.dims;

        RepMap left;
        for (std::size_t v = 0; v < m.dims.size(); ++v) {
            std::vector<Matrix> rows;
            for (const auto& f : legs)
                rows.push_back(f.comps[v]);
            left.comps.push_back(vstack(rows, m.dims[v]));
        }
        chk.left_map_injective = true;
        for (std::size_t v = 0; v < m.dims.size(); ++v)
            if (rank(left.comps[v]) != m.dims[v])
                chk.left_map_injective = false;
        chk.cokernel_matches = alg.is_isomorphic(alg.cokernel(m, e, left).rep, right);
        out.push_back(chk);
    }
    return out;
}

}  // namespace dupcat
