#include "dupcat/pipeline.hpp"

#include "dupcat/errors.hpp"

namespace dupcat {

Pipeline::Pipeline(const Quiver& q, const KnitOptions& opts) : dup(q)
{
    if (!classify_dynkin(q).is_dynkin())
        throw NotDynkin("the quiver is not of Dynkin type");
    analysis.ind_abar = knit_ind_dup(dup, opts);
    analysis.left = left_part_catalog(dup, opts);
    cluster = std::make_unique<ClusterCategory>(dup.base(), analysis.left.ind_a);
    analysis.tilting = enumerate_L_tilting(dup, analysis.left);
    analysis.cluster_tilting = cluster->enumerate_tilting();
}

Report verify_embedding(const DuplicatedAlgebra& d, const ARCatalog& ind_a)
{
    Report r;
    const auto& a = d.base();
    std::string hom, ext, tau;
    for (std::size_t i = 0; i < ind_a.size(); ++i) {
        const Rep& m = ind_a.modules[i];
        DupModule em = d.embed(m);
        for (std::size_t j = 0; j < ind_a.size(); ++j) {
            const Rep& n = ind_a.modules[j];
            DupModule en = d.embed(n);
            if (a.hom_dim(m, n) != d.hom_dim(em, en))
                hom += std::to_string(i) + "," + std::to_string(j) + " ";
            if (a.ext1_dim(m, n) != d.ext1(em, en))
                ext += std::to_string(i) + "," + std::to_string(j) + " ";
        }
        if (ind_a.tau[i]) {
            auto t = d.tau_pair(em).first;
            if (!t || !d.is_isomorphic(*t, d.embed(ind_a.modules[*ind_a.tau[i]])))
                tau += std::to_string(i) + " ";
        }
    }
    r.add("embedding preserves Hom", hom.empty(), hom);
    r.add("embedding preserves Ext^1", ext.empty(), ext);
    r.add("embedding commutes with tau on non-projectives", tau.empty(), tau);
    return r;
}

namespace {

void section(Report& into, const std::string& title, const Report& part)
{
    for (auto c : part.checks) {
        c.name = title + ": " + c.name;
        into.add(std::move(c));
    }
}

}  // namespace

Report verify_all(const Pipeline& p, Fault fault)
{
    const auto& d = p.dup;
    LeftPartCatalog lp = p.analysis.left;
    switch (fault) {
    case Fault::None:
        break;
    case Fault::DropMember:
        lp.members.erase(lp.members.begin() + lp.non_proj_inj().back());
        break;
    case Fault::SwapCosyzygy:
        for (auto& m : lp.members)
            if (m.kind == MemberKind::Cosyzygy) {
                m.module = d.simple_prime(m.index);
                break;
            }
        break;
    }
    const auto& full = p.analysis.ind_abar;
    const auto& c = *p.cluster;

    Report r;
    r.title = "verification for " + classify_dynkin(d.base().quiver()).name();
    section(r, "embedding", verify_embedding(d, lp.ind_a));

    Report ar;
    std::string bad;
    for (const auto& s : check_ar_sequences(d.algebra(), full))
        if (!s.ok())
            bad += d.dims_name(full.modules[s.module]) + " ";
    ar.add("every almost split sequence of ind Abar is exact", bad.empty(), bad);
    std::size_t pi = 0;
    for (std::size_t i = 0; i < full.size(); ++i)
        pi += full.projective[i] && full.injective[i];
    ar.add("ind Abar has n projective-injectives", pi == d.n(), std::to_string(pi));
    section(r, "knitting", ar);

    auto def = left_part_by_definition(d, full);
    section(r, "left part", verify_left_part_structure(d, lp));
    section(r, "left part", verify_left_part_definition(d, lp, full, def));
    section(r, "left part", verify_catalog_characterisations(d, lp, full, def));
    section(r, "left part", sectional_check(d, lp, full, def));
    section(r, "Sigma", verify_ext_injectives(d, lp));
    section(r, "cosyzygies", verify_cosyzygy_identity(d));

    Report counts;
    const std::size_t domain = lp.non_proj_inj().size();
    counts.add("non-projective-injective left part has |ind A| + n members", domain == lp.ind_a.size() + d.n(),
               std::to_string(domain) + " vs " + std::to_string(lp.ind_a.size() + d.n()));
    counts.add("cluster fundamental domain has |ind A| + n objects", c.objects().size() == domain,
               std::to_string(c.objects().size()));
    section(r, "fundamental domain", counts);

    auto b = verify_bijection(d, lp, c);
    Report expected;
    auto want = expected_count(classify_dynkin(d.base().quiver()));
    expected.add("L-tilting count equals the W-Catalan number", mpz_class(b.left.size()) == want,
                 std::to_string(b.left.size()) + " vs " + want.get_str());
    section(r, "tilting", b.report);
    section(r, "tilting", expected);
    section(r, "cluster category", verify_ext_models(d, lp, c));

    Report canon;
    auto t = canonical_tilting(d, lp);
    auto v = is_tilting_module(d, t.summands);
    canon.add("U (+) V is a tilting module with 2n summands", v.tilting(), v.failure);
    section(r, "canonical tilting", canon);
    return r;
}

}  // namespace dupcat
