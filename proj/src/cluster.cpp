#include "dupcat/cluster.hpp"

#include "dupcat/errors.hpp"

#include <algorithm>
#include <functional>

namespace dupcat {

ClusterCategory::ClusterCategory(const PathAlgebra& a, ARCatalog ind_a) : a_(a), cat_(std::move(ind_a))
{
    for (std::size_t i = 0; i < cat_.size(); ++i)
        objects_.push_back(ClusterObject::module(i));
    for (std::size_t x = 0; x < a_.num_vertices(); ++x)
        objects_.push_back(ClusterObject::shifted(x));

    const std::size_t n = objects_.size();
    std::vector<std::vector<std::size_t>> ext_a(cat_.size(), std::vector<std::size_t>(cat_.size()));
    for (std::size_t i = 0; i < cat_.size(); ++i) {
        Rep syz = a_.syzygy(cat_.modules[i]);
        auto top = a_.top_vector(cat_.modules[i]);
        for (std::size_t j = 0; j < cat_.size(); ++j)
            ext_a[i][j] = a_.ext1_dim(cat_.modules[i], syz, top, cat_.modules[j]);
    }
    ext_.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto &o1 = objects_[i], &o2 = objects_[j];
            using K = ClusterObject::Kind;
            if (o1.kind == K::Module && o2.kind == K::Module)
                ext_[i][j] = ext_a[o1.index][o2.index] + ext_a[o2.index][o1.index];
            else if (o1.kind == K::ShiftedProjective && o2.kind == K::Module)
                ext_[i][j] = cat_.modules[o2.index].dims[o1.index];
            else if (o1.kind == K::Module && o2.kind == K::ShiftedProjective)
                ext_[i][j] = cat_.modules[o1.index].dims[o2.index];
        }
}

std::size_t ClusterCategory::object_index(const ClusterObject& o) const
{
    auto it = std::find(objects_.begin(), objects_.end(), o);
    if (it == objects_.end())
        throw Error("cluster object out of range");
    return static_cast<std::size_t>(it - objects_.begin());
}

std::size_t ClusterCategory::ext1(const ClusterObject& o1, const ClusterObject& o2) const
{
    return ext_[object_index(o1)][object_index(o2)];
}

std::size_t ClusterCategory::hom_modules(const Rep& m, const Rep& n) const
{
    std::size_t h = a_.hom_dim(m, n);
    if (!a_.is_projective(m))
        h += a_.ext1_dim(a_.tau(m), n);
    return h;
}

std::vector<std::vector<std::size_t>> ClusterCategory::enumerate_tilting() const
{
    const std::size_t n = objects_.size(), want = a_.num_vertices();
    std::vector<std::size_t> rigid;
    for (std::size_t i = 0; i < n; ++i)
        if (ext_[i][i] == 0)
            rigid.push_back(i);
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
        if (chosen.size() == want) {
            out.push_back(chosen);
            return;
        }
        for (std::size_t k = from; k < rigid.size(); ++k) {
            std::size_t c = rigid[k];
            bool ok = std::all_of(chosen.begin(), chosen.end(), [&](std::size_t s) { return ext_[s][c] == 0; });
            if (!ok)
                continue;
            chosen.push_back(c);
            extend(k + 1);
            chosen.pop_back();
        }
    };
    extend(0);
    return out;
}

bool ClusterCategory::is_maximal(const std::vector<std::size_t>& set) const
{
    for (std::size_t c = 0; c < objects_.size(); ++c) {
        if (std::find(set.begin(), set.end(), c) != set.end())
            continue;
        bool compatible = ext_[c][c] == 0;
        for (auto s : set)
            compatible = compatible && ext_[s][c] == 0;
        if (compatible)
            return false;
    }
    return true;
}

std::string ClusterCategory::name(const ClusterObject& o) const
{
    if (o.kind == ClusterObject::Kind::ShiftedProjective)
        return "P_" + a_.quiver().label(o.index) + "[1]";
    std::string s = "A:";
    for (auto v : cat_.modules[o.index].dims)
        s += std::to_string(v);
    return s;
}

mpz_class expected_count(const DynkinType& t)
{
    std::vector<unsigned long> degrees;
    unsigned long h = 0;
    const unsigned long n = t.rank;
    switch (t.family) {
    case DynkinFamily::A:
        for (unsigned long i = 2; i <= n + 1; ++i)
            degrees.push_back(i);
        h = n + 1;
        break;
    case DynkinFamily::D:
        if (n < 4)
            throw NotDynkin("D_n needs n >= 4");
        for (unsigned long i = 1; i < n; ++i)
            degrees.push_back(2 * i);
        degrees.push_back(n);
        h = 2 * n - 2;
        break;
    case DynkinFamily::E:
        if (n == 6)
            degrees = {2, 5, 6, 8, 9, 12};
        else if (n == 7)
            degrees = {2, 6, 8, 10, 12, 14, 18};
        else if (n == 8)
            degrees = {2, 8, 12, 14, 18, 20, 24, 30};
        else
            throw NotDynkin("E_n needs n in {6, 7, 8}");
        h = degrees.back();
        break;
    default:
        throw NotDynkin("expected_count: not a Dynkin type");
    }
    mpq_class c = 1;
    for (auto d : degrees) {
        mpq_class f(d + h, d);
        f.canonicalize();
        c *= f;
    }
    return c.get_num();
}

}  // namespace dupcat
