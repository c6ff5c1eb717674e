#include "dupcat/tilt_bridge.hpp"

#include "dupcat/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace dupcat {

TiltingVerdict is_tilting_module(const DuplicatedAlgebra& d, const std::vector<DupModule>& summands)
{
    TiltingVerdict v;
    v.count_ok = summands.size() == 2 * d.n();
    if (!v.count_ok)
        v.failure = std::to_string(summands.size()) + " summands instead of " + std::to_string(2 * d.n());
    v.pd_ok = true;
    for (std::size_t i = 0; i < summands.size(); ++i)
        if (d.pd(summands[i]) > 1) {
            v.pd_ok = false;
            v.failure = "summand " + std::to_string(i) + " has pd >= 2";
        }
    v.ext_ok = true;
    for (std::size_t i = 0; i < summands.size() && v.ext_ok; ++i)
        for (std::size_t j = 0; j < summands.size(); ++j)
            if (d.ext1(summands[i], summands[j]) != 0) {
                v.ext_ok = false;
                v.failure = "Ext^1(T_" + std::to_string(i) + ", T_" + std::to_string(j) + ") != 0";
                break;
            }
    v.proj_inj_present = true;
    for (std::size_t x = 0; x < d.n(); ++x) {
        bool found = false;
        for (const auto& s : summands)
            found = found || (s.dims == d.projective_prime(x).dims && d.is_isomorphic(s, d.projective_prime(x)));
        v.proj_inj_present = v.proj_inj_present && found;
    }
    return v;
}

std::vector<TiltingRecord> enumerate_L_tilting(const DuplicatedAlgebra& d, const LeftPartCatalog& lp)
{
    auto candidates = lp.non_proj_inj();
    const std::size_t k = candidates.size();
    std::vector<std::vector<bool>> orth(k, std::vector<bool>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            orth[i][j] = d.ext1(lp.members[candidates[i]].module, lp.members[candidates[j]].module) == 0;

    std::vector<TiltingRecord> out;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
        if (chosen.size() == d.n()) {
            TiltingRecord rec;
            std::vector<DupModule> summands;
            for (auto c : chosen) {
                rec.free_part.push_back(candidates[c]);
                summands.push_back(lp.members[candidates[c]].module);
            }
            for (std::size_t x = 0; x < d.n(); ++x)
                summands.push_back(d.projective_prime(x));
            rec.verdict = is_tilting_module(d, summands);
            if (rec.verdict.tilting())
                out.push_back(std::move(rec));
            return;
        }
        for (std::size_t c = from; c < k; ++c) {
            if (!orth[c][c])
                continue;
            bool ok = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t s) { return orth[s][c] && orth[c][s]; });
            if (!ok)
                continue;
            chosen.push_back(c);
            extend(c + 1);
            chosen.pop_back();
        }
    };
    extend(0);
    return out;
}

ClusterObject pi_bar(const DuplicatedAlgebra& d, const LeftPartCatalog& lp, const ClusterCategory& c,
                     const DupModule& m)
{
    if (d.is_projective_injective(m))
        throw NotInDomain("projective-injective modules vanish in the stable category");
    if (!lp.find(d, m))
        throw NotInDomain("module " + d.dims_name(m) + " is not in the left part");
    if (d.in_image_of_A(m)) {
        if (auto i = find_module(c.algebra(), c.ind_a(), d.x_part(m)))
            return ClusterObject::module(*i);
        throw NotInDomain("A-module missing from the catalog of ind A");
    }
    for (std::size_t x = 0; x < d.n(); ++x) {
        DupModule cos = d.syzygy_pair(d.embed(d.base().projective(x))).second;
        if (cos.dims == m.dims && d.is_isomorphic(cos, m))
            return ClusterObject::shifted(x);
    }
    throw NotInDomain("module " + d.dims_name(m) + " is not a cosyzygy of a projective A-module");
}

Bijection verify_bijection(const DuplicatedAlgebra& d, const LeftPartCatalog& lp, const ClusterCategory& c)
{
    Bijection b;
    b.left = enumerate_L_tilting(d, lp);
    b.cluster = c.enumerate_tilting();

    std::map<std::size_t, std::size_t> image_of;  // member -> object
    std::string domain;
    for (auto i : lp.non_proj_inj()) {
        try {
            image_of[i] = c.object_index(pi_bar(d, lp, c, lp.members[i].module));
        } catch (const NotInDomain& e) {
            domain += lp.members[i].name + " ";
        }
    }
    std::set<std::size_t> values;
    for (auto& [k, v] : image_of)
        values.insert(v);
    b.report.add("pi_bar is a bijection from non-projective-injective L onto ind C_A",
                 domain.empty() && values.size() == image_of.size() && values.size() == c.objects().size(),
                 domain.empty() ? std::to_string(values.size()) + " objects" : "undefined on " + domain);

    for (const auto& rec : b.left) {
        std::vector<std::size_t> img;
        for (auto i : rec.free_part)
            if (image_of.count(i))
                img.push_back(image_of[i]);
        std::sort(img.begin(), img.end());
        b.images.push_back(std::move(img));
    }
    std::set<std::vector<std::size_t>> left_set(b.images.begin(), b.images.end());
    std::set<std::vector<std::size_t>> right_set(b.cluster.begin(), b.cluster.end());
    b.report.add("pi_bar is injective on L-tilting modules", left_set.size() == b.images.size(),
                 std::to_string(left_set.size()) + " distinct images of " + std::to_string(b.images.size()));
    std::string unmatched;
    for (const auto& s : left_set)
        if (!right_set.count(s))
            unmatched += "left ";
    for (const auto& s : right_set)
        if (!left_set.count(s))
            unmatched += "cluster ";
    b.report.add("L-tilting modules correspond to cluster-tilting objects", unmatched.empty() && left_set == right_set,
                 std::to_string(b.left.size()) + " <-> " + std::to_string(b.cluster.size()) +
                     (unmatched.empty() ? "" : " unmatched: " + unmatched));
    std::string not_max;
    for (const auto& s : b.cluster)
        if (!c.is_maximal(s))
            not_max += "set ";
    b.report.add("cluster-tilting objects are maximal orthogonal", not_max.empty(), not_max);
    std::string forced;
    for (const auto& rec : b.left)
        if (!rec.verdict.proj_inj_present)
            forced += "record ";
    b.report.add("L-tilting modules contain every projective-injective", forced.empty(), forced);
    return b;
}

Report verify_ext_models(const DuplicatedAlgebra& d, const LeftPartCatalog& lp, const ClusterCategory& c)
{
    Report r;
    const auto& objs = c.objects();
    std::string asym;
    for (const auto& o1 : objs)
        for (const auto& o2 : objs)
            if (c.ext1(o1, o2) != c.ext1(o2, o1))
                asym += c.name(o1) + "/" + c.name(o2) + " ";
    r.add("Ext^1 in the cluster category is symmetric", asym.empty(), asym);

    std::string cross;
    auto members = lp.non_proj_inj();
    std::vector<ClusterObject> image;
    for (auto i : members)
        image.push_back(pi_bar(d, lp, c, lp.members[i].module));
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = 0; j < members.size(); ++j) {
            const auto &m = lp.members[members[i]].module, &n = lp.members[members[j]].module;
            bool abar = d.ext1(m, n) == 0 && d.ext1(n, m) == 0;
            bool cl = c.ext1(image[i], image[j]) == 0;
            if (abar != cl)
                cross += lp.members[members[i]].name + "/" + lp.members[members[j]].name + " ";
        }
    r.add("cluster orthogonality agrees with two-sided Ext vanishing over Abar", cross.empty(), cross);
    return r;
}

}  // namespace dupcat
