#include "dupcat/left_part.hpp"

#include "dupcat/errors.hpp"

#include <deque>
#include <set>
#include <tuple>

namespace dupcat {

namespace {

void require_dynkin(const DuplicatedAlgebra& d)
{
    if (!classify_dynkin(d.base().quiver()).is_dynkin())
        throw NotDynkin("the quiver is not of Dynkin type");
}

std::string a_module_name(const Rep& m)
{
    std::string s = "A:";
    for (auto v : m.dims)
        s += std::to_string(v);
    return s;
}

Matrix flatten(const RepMap& f)
{
    std::vector<Rational> entries;
    for (const auto& c : f.comps)
        entries.insert(entries.end(), c.entries().begin(), c.entries().end());
    return Matrix::column(entries);
}

// Whether u : M -> E admits a retraction.
bool is_split_mono(const QuiverAlgebra& alg, const Rep& m, const Rep& e, const RepMap& u)
{
    Matrix id = flatten(alg.identity_map(m));
    std::vector<Matrix> cols;
    for (const auto& h : alg.hom_basis(e, m))
        cols.push_back(flatten(alg.compose(h, u)));
    Matrix span = hstack(cols, id.rows());
    return rank(span) == rank(hstack({span, id}, id.rows()));
}

std::optional<std::size_t> catalog_index(const DuplicatedAlgebra& d, const ARCatalog& full, const DupModule& m)
{
    return find_module(d.algebra(), full, m);
}

std::vector<std::size_t> sink_starts(const DuplicatedAlgebra& d, const ARCatalog& full)
{
    std::vector<std::size_t> out;
    for (auto a : sinks_and_sources(d.base().quiver()).sinks)
        if (auto i = catalog_index(d, full, d.projective_prime(a)))
            out.push_back(*i);
    return out;
}

// Irreducible-path reachability from `start`, split into "some path with a
// non-sectional step" and "some path".  Witness: first bad step found.
struct PathScan {
    std::vector<bool> reached;
    std::vector<bool> dirty;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> bad_steps;  // (prev, cur, next)
};

PathScan scan_paths(const ARCatalog& full, std::size_t start)
{
    const std::size_t n = full.size();
    const std::size_t none = n;
    PathScan s{std::vector<bool>(n, false), std::vector<bool>(n, false), {}};
    std::vector<std::vector<std::size_t>> succ(n);
    for (const auto& a : full.arrows)
        succ[a.from].push_back(a.to);
    std::set<std::tuple<std::size_t, std::size_t, bool>> seen;
    std::deque<std::tuple<std::size_t, std::size_t, bool>> queue{{none, start, true}};
    seen.insert(queue.front());
    while (!queue.empty()) {
        auto [prev, cur, clean] = queue.front();
        queue.pop_front();
        s.reached[cur] = true;
        if (!clean)
            s.dirty[cur] = true;
        for (auto next : succ[cur]) {
            bool step_ok = prev == none || full.tau[next] != prev;
            if (!step_ok && clean)
                s.bad_steps.emplace_back(prev, cur, next);
            std::tuple<std::size_t, std::size_t, bool> st{cur, next, clean && step_ok};
            if (seen.insert(st).second)
                queue.push_back(st);
        }
    }
    return s;
}

}  // namespace

std::vector<std::size_t> LeftPartCatalog::sigma() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i].in_sigma())
            out.push_back(i);
    return out;
}

std::vector<std::size_t> LeftPartCatalog::non_proj_inj() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i].kind != MemberKind::ProjInj)
            out.push_back(i);
    return out;
}

std::optional<std::size_t> LeftPartCatalog::find(const DuplicatedAlgebra& d, const DupModule& m) const
{
    for (std::size_t i = 0; i < members.size(); ++i)
        if (members[i].module.dims == m.dims && d.is_isomorphic(members[i].module, m))
            return i;
    return std::nullopt;
}

std::vector<DupModule> cosyzygy_sigma(const DuplicatedAlgebra& d)
{
    std::vector<DupModule> out;
    for (std::size_t x = 0; x < d.n(); ++x) {
        auto t = d.tau_pair(d.embed(d.base().injective(x))).second;
        if (!t)
            throw Error("tau^-1 of an injective A-module vanished in mod Abar");
        out.push_back(std::move(*t));
    }
    return out;
}

bool proj_inj_in_left_part(const DuplicatedAlgebra& d, std::size_t x, const std::vector<DupModule>& cosyzygies)
{
    DupModule rad = d.structure(d.projective_prime(x)).radical;
    if (d.in_image_of_A(rad))
        return true;
    for (const auto& c : cosyzygies)
        if (c.dims == rad.dims && d.is_isomorphic(c, rad))
            return true;
    return false;
}

std::vector<LeftMember> sigma_catalog(const DuplicatedAlgebra& d)
{
    require_dynkin(d);
    const Quiver& q = d.base().quiver();
    auto cos = cosyzygy_sigma(d);
    std::vector<LeftMember> out;
    for (std::size_t x = 0; x < d.n(); ++x)
        out.push_back({cos[x], MemberKind::Cosyzygy, x, "tau^-1 I_" + q.label(x)});
    for (std::size_t x = 0; x < d.n(); ++x)
        if (proj_inj_in_left_part(d, x, cos))
            out.push_back({d.projective_prime(x), MemberKind::ProjInj, x, "P_" + q.label(x) + "'"});
    return out;
}

LeftPartCatalog left_part_catalog(const DuplicatedAlgebra& d, const KnitOptions& opts)
{
    require_dynkin(d);
    LeftPartCatalog lp;
    lp.ind_a = knit_ind_A(d.base(), opts);
    for (std::size_t i = 0; i < lp.ind_a.size(); ++i)
        lp.members.push_back({d.embed(lp.ind_a.modules[i]), MemberKind::IndA, i, a_module_name(lp.ind_a.modules[i])});
    for (auto& m : sigma_catalog(d))
        lp.members.push_back(std::move(m));
    for (std::size_t x = 0; x < d.n(); ++x) {
        bool inside = false;
        for (const auto& m : lp.members)
            inside = inside || (m.kind == MemberKind::ProjInj && m.index == x);
        if (!inside)
            lp.proj_inj_outside.push_back(x);
    }
    return lp;
}

Report verify_left_part_structure(const DuplicatedAlgebra& d, const LeftPartCatalog& lp)
{
    Report r;
    std::string dup;
    for (std::size_t i = 0; i < lp.members.size(); ++i)
        for (std::size_t j = i + 1; j < lp.members.size(); ++j)
            if (d.is_isomorphic(lp.members[i].module, lp.members[j].module))
                dup = lp.members[i].name + " ~ " + lp.members[j].name;
    r.add("left part members pairwise non-isomorphic", dup.empty(), dup);

    std::string high;
    for (const auto& m : lp.members)
        if (d.pd(m.module) > 1)
            high = m.name;
    r.add("left part members have pd <= 1", high.empty(), high);

    std::size_t cos = 0;
    std::string bad;
    for (const auto& m : lp.members)
        if (m.kind == MemberKind::Cosyzygy) {
            ++cos;
            if (d.is_projective_injective(m.module) || d.in_image_of_A(m.module))
                bad = m.name;
        }
    r.add("Sigma has one cosyzygy per vertex, none projective-injective or an A-module",
          cos == d.n() && bad.empty(), bad.empty() ? "count " + std::to_string(cos) : bad);

    std::size_t expected = lp.ind_a.size() + d.n();
    std::size_t got = lp.non_proj_inj().size();
    r.add("non-projective-injective members = |ind A| + n", got == expected,
          std::to_string(got) + " vs " + std::to_string(expected));
    r.add("Sigma and the projective-injectives outside L number 2n",
          lp.sigma().size() + lp.proj_inj_outside.size() == 2 * d.n(),
          std::to_string(lp.sigma().size()) + " + " + std::to_string(lp.proj_inj_outside.size()));
    return r;
}

Report verify_ext_injectives(const DuplicatedAlgebra& d, const LeftPartCatalog& lp)
{
    Report r;
    std::string ext_witness, ar_witness;
    for (const auto& m : lp.members) {
        bool ext_injective = true;
        for (const auto& n : lp.members)
            if (d.ext1(n.module, m.module) != 0)
                ext_injective = false;
        if (ext_injective != m.in_sigma())
            ext_witness += m.name + " ";
        auto ti = d.tau_pair(m.module).second;
        bool outside = !ti || !lp.find(d, *ti);
        if (outside != m.in_sigma())
            ar_witness += m.name + " ";
    }
    r.add("Ext-injectives of add L are exactly Sigma", ext_witness.empty(), ext_witness);
    r.add("tau^-1 M lies outside L exactly for M in Sigma", ar_witness.empty(), ar_witness);
    return r;
}

DefinitionRoute left_part_by_definition(const DuplicatedAlgebra& d, const ARCatalog& full)
{
    const std::size_t n = full.size();
    DefinitionRoute def;
    for (const auto& m : full.modules)
        def.pd.push_back(d.pd(m));
    def.reaches.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            def.reaches[i][j] = i == j || d.hom_dim(full.modules[i], full.modules[j]) > 0;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (def.reaches[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (def.reaches[k][j])
                        def.reaches[i][j] = true;
    def.in_left.assign(n, true);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (def.reaches[i][j] && def.pd[i] > 1)
                def.in_left[j] = false;
    return def;
}

Report verify_left_part_definition(const DuplicatedAlgebra& d, const LeftPartCatalog& lp, const ARCatalog& full,
                                   const DefinitionRoute& def)
{
    Report r;
    std::vector<bool> structural(full.size(), false);
    std::string missing;
    for (const auto& m : lp.members) {
        if (auto i = catalog_index(d, full, m.module))
            structural[*i] = true;
        else
            missing += m.name + " ";
    }
    std::string diff;
    for (std::size_t i = 0; i < full.size(); ++i)
        if (structural[i] != def.in_left[i])
            diff += (def.in_left[i] ? "+" : "-") + d.dims_name(full.modules[i]) + " ";
    if (!missing.empty())
        diff += "not in catalog: " + missing;
    std::size_t count = 0;
    for (bool b : def.in_left)
        count += b;
    r.add("left part by definition equals ind A and Sigma", diff.empty(),
          diff.empty() ? std::to_string(count) + " members" : diff);
    return r;
}

std::vector<std::size_t> sinks_in_left_part(const DuplicatedAlgebra& d, const LeftPartCatalog& lp)
{
    std::vector<std::size_t> out;
    for (auto a : sinks_and_sources(d.base().quiver()).sinks)
        for (const auto& m : lp.members)
            if (m.kind == MemberKind::ProjInj && m.index == a)
                out.push_back(a);
    return out;
}

Report sectional_check(const DuplicatedAlgebra& d, const LeftPartCatalog& lp, const ARCatalog& full,
                       const DefinitionRoute& def)
{
    Report r;
    std::string witness;
    std::size_t checked = 0;
    for (auto a : sinks_in_left_part(d, lp)) {
        auto start = catalog_index(d, full, d.projective_prime(a));
        if (!start) {
            witness += "P_" + d.base().quiver().label(a) + "' missing ";
            continue;
        }
        PathScan s = scan_paths(full, *start);
        for (std::size_t j = 0; j < full.size(); ++j) {
            if (!def.in_left[j] || !s.reached[j])
                continue;
            ++checked;
            if (s.dirty[j])
                witness += d.dims_name(full.modules[j]) + " ";
        }
    }
    r.add("irreducible paths from sinks P_a' in L to members of L are sectional", witness.empty(),
          witness.empty() ? std::to_string(checked) + " targets" : witness);

    // Outside L, reachability from a sink comes with a non-sectional path or a
    // predecessor of projective dimension at least two.
    std::string outside;
    std::vector<PathScan> scans;
    for (auto s : sink_starts(d, full))
        scans.push_back(scan_paths(full, s));
    for (std::size_t j = 0; j < full.size(); ++j) {
        if (def.in_left[j])
            continue;
        bool reached = false, dirty = false, high_pred = false;
        for (const auto& s : scans) {
            reached = reached || s.reached[j];
            dirty = dirty || s.dirty[j];
        }
        for (std::size_t i = 0; i < full.size(); ++i)
            high_pred = high_pred || (def.reaches[i][j] && def.pd[i] > 1);
        if (reached && !dirty && !high_pred)
            outside += d.dims_name(full.modules[j]) + " ";
    }
    r.add("modules outside L reached from a sink have a non-sectional path or a pd >= 2 predecessor",
          outside.empty(), outside);
    return r;
}

Report verify_catalog_characterisations(const DuplicatedAlgebra& d, const LeftPartCatalog& lp,
                                        const ARCatalog& full, const DefinitionRoute& def)
{
    Report r;
    const QuiverAlgebra& bar = d.algebra();
    const std::size_t n = full.size();

    std::string pd_witness;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t hom = 0;
        if (full.tau[i])
            for (std::size_t v = 0; v < bar.num_vertices(); ++v)
                hom += bar.hom_dim(bar.injective(v), full.modules[*full.tau[i]]);
        if ((def.pd[i] <= 1) != (hom == 0))
            pd_witness += d.dims_name(full.modules[i]) + " ";
    }
    r.add("pd M <= 1 iff Hom(DAbar, tau M) = 0", pd_witness.empty(), pd_witness);

    std::string below;
    for (const auto& m : lp.members) {
        if (m.kind != MemberKind::IndA)
            continue;
        auto i = catalog_index(d, full, m.module);
        if (!i || !def.in_left[*i]) {
            below += m.name + " ";
            continue;
        }
        if (full.tau_inverse[*i] && !def.in_left[*full.tau_inverse[*i]])
            below += "tau^-1 " + m.name + " ";
    }
    r.add("ind A and its tau^-1 lie in L", below.empty(), below);

    auto starts = sink_starts(d, full);
    auto from_sink = [&](std::size_t j) {
        for (auto s : starts)
            if (def.reaches[s][j])
                return true;
        return false;
    };
    std::string unreached;
    for (std::size_t j = 0; j < n; ++j)
        if (!d.in_image_of_A(full.modules[j]) && !from_sink(j))
            unreached += d.dims_name(full.modules[j]) + " ";
    r.add("modules outside ind A are reached from some P_a' with a a sink", unreached.empty(), unreached);

    std::vector<PathScan> scans;
    for (auto s : starts)
        scans.push_back(scan_paths(full, s));
    std::string four;
    for (std::size_t j = 0; j < n; ++j) {
        auto member = lp.find(d, full.modules[j]);
        bool a = member && lp.members[*member].in_sigma();
        bool b = def.in_left[j] && !d.in_image_of_A(full.modules[j]);
        bool c = def.in_left[j] && from_sink(j);
        bool dirty = false;
        for (const auto& s : scans)
            dirty = dirty || s.dirty[j];
        bool dd = from_sink(j) && !dirty;
        if (!(a == b && b == c && c == dd))
            four += d.dims_name(full.modules[j]) + " ";
    }
    r.add("Sigma = (L minus ind A) = (L reached from a sink) = (reached from a sink, all paths sectional)",
          four.empty(), four);

    std::size_t pi = 0;
    std::string pi_witness;
    for (std::size_t j = 0; j < n; ++j)
        if (d.is_projective_injective(full.modules[j])) {
            ++pi;
            bool matched = false;
            for (std::size_t x = 0; x < d.n(); ++x)
                matched = matched || d.is_isomorphic(full.modules[j], d.projective_prime(x));
            if (!matched)
                pi_witness += d.dims_name(full.modules[j]) + " ";
        }
    r.add("projective-injective entries are exactly the P_x'", pi == d.n() && pi_witness.empty(),
          std::to_string(pi) + " found " + pi_witness);
    return r;
}

Report verify_cosyzygy_identity(const DuplicatedAlgebra& d)
{
    Report r;
    const QuiverAlgebra& bar = d.algebra();
    const Quiver& q = d.base().quiver();
    std::string witness;
    for (std::size_t x = 0; x < d.n(); ++x) {
        DupModule lhs = d.syzygy_pair(d.embed(d.base().projective(x))).second;
        auto rhs = d.tau_pair(d.embed(d.base().injective(x))).second;
        if (!rhs || !d.is_isomorphic(lhs, *rhs))
            witness += q.label(x) + " ";
    }
    r.add("Omega^-1 P_x ~ tau^-1 I_x for every vertex", witness.empty(), witness);

    std::string seq;
    for (auto a : sinks_and_sources(q).sinks) {
        DupModule ibar = d.injective(a);
        auto rad = bar.radical(ibar);
        auto soc_rad = bar.socle(rad.rep);
        auto quot = bar.cokernel(soc_rad.rep, rad.rep, soc_rad.inclusion);
        Rep e = bar.direct_sum({ibar, quot.rep});
        RepMap u;
        for (std::size_t v = 0; v < bar.num_vertices(); ++v)
            u.comps.push_back(vstack({rad.inclusion.comps[v], quot.projection.comps[v]}, rad.rep.dims[v]));
        auto soc_ibar = bar.socle(ibar);
        Rep right = bar.cokernel(soc_ibar.rep, ibar, soc_ibar.inclusion).rep;
        bool left_ok = d.is_isomorphic(rad.rep, d.embed(d.base().injective(a)));
        bool simple_socle = d.is_isomorphic(soc_rad.rep, d.simple(a));
        bool injective = true;
        for (std::size_t v = 0; v < bar.num_vertices(); ++v)
            injective = injective && rank(u.comps[v]) == rad.rep.dims[v];
        bool exact = injective && d.is_isomorphic(bar.cokernel(rad.rep, e, u).rep, right);
        auto t = d.tau_pair(right).first;
        bool almost_split = t && d.is_isomorphic(*t, rad.rep);
        bool non_split = !is_split_mono(bar, rad.rep, e, u);
        if (!(left_ok && simple_socle && exact && almost_split && non_split))
            seq += q.label(a) + " ";
    }
    r.add("0 -> I_a -> Ibar_a + I_a/S_a -> Ibar_a/S_a -> 0 is exact, non-split, almost split for sinks a",
          seq.empty(), seq);
    return r;
}

CanonicalTilting canonical_tilting(const DuplicatedAlgebra& d, const LeftPartCatalog& lp)
{
    CanonicalTilting t;
    for (auto i : lp.sigma()) {
        t.summands.push_back(lp.members[i].module);
        t.names.push_back(lp.members[i].name);
    }
    for (auto x : lp.proj_inj_outside) {
        t.summands.push_back(d.projective_prime(x));
        t.names.push_back("P_" + d.base().quiver().label(x) + "'");
    }
    return t;
}

}  // namespace dupcat
