#include "doctest.h"
#include "dupcat/cluster.hpp"
#include "fixture_path.hpp"

#include <set>

using namespace dupcat;

namespace {

std::size_t module_index(const ClusterCategory& c, const std::string& dims)
{
    for (std::size_t i = 0; i < c.ind_a().size(); ++i)
        if (c.name(ClusterObject::module(i)) == "A:" + dims)
            return i;
    FAIL("no module " << dims);
    return 0;
}

// Binomial-free oracle for the Catalan numbers: the ballot recurrence.
std::size_t catalan(std::size_t n)
{
    std::vector<std::size_t> c(n + 1, 0);
    c[0] = 1;
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t i = 0; i < k; ++i)
            c[k] += c[i] * c[k - 1 - i];
    return c[n];
}

}  // namespace

TEST_CASE("A2 Ext and Hom formulas")
{
    PathAlgebra a(fixture("a2"));
    ClusterCategory c(a, knit_ind_A(a));
    auto p1 = ClusterObject::module(module_index(c, "10"));
    auto p2 = ClusterObject::module(module_index(c, "11"));
    auto s2 = ClusterObject::module(module_index(c, "01"));
    CHECK(c.ext1(s2, p1) == 1);
    CHECK(c.ext1(p1, s2) == 1);
    CHECK(c.ext1(ClusterObject::shifted(0), ClusterObject::shifted(1)) == 0);
    CHECK(c.ext1(ClusterObject::shifted(0), p2) == 1);
    CHECK(c.ext1(ClusterObject::shifted(1), p1) == 0);

    const auto& cat = c.ind_a();
    auto m = [&](const char* dims) { return cat.modules[module_index(c, dims)]; };
    CHECK(c.hom_modules(m("11"), m("11")) == 1);
    CHECK(c.hom_modules(m("01"), m("01")) == 1);
    CHECK(c.hom_modules(m("01"), m("10")) == 0);
    // P_1 is projective, so only Hom_A(P_1, S_2) = 0 contributes.
    CHECK(c.hom_modules(m("10"), m("01")) == 0);
}

TEST_CASE("A2 pentagon")
{
    PathAlgebra a(fixture("a2"));
    ClusterCategory c(a, knit_ind_A(a));
    CHECK(c.objects().size() == 5);
    std::set<std::set<std::string>> got;
    for (const auto& s : c.enumerate_tilting()) {
        std::set<std::string> names;
        for (auto i : s)
            names.insert(c.name(c.objects()[i]));
        got.insert(names);
    }
    std::set<std::set<std::string>> expected{
        {"A:10", "A:11"}, {"A:11", "A:01"}, {"A:01", "P_1[1]"}, {"P_1[1]", "P_2[1]"}, {"P_2[1]", "A:10"}};
    CHECK(got == expected);
}

TEST_CASE("cluster-tilting counts match the W-Catalan numbers")
{
    struct Case {
        const char* fixture;
        std::size_t count;
    } cases[] = {{"a1", 2}, {"a2", 5}, {"a3", 14}, {"a3_sink", 14}, {"a3_source", 14}, {"a4", 42}, {"d4", 50}};
    for (auto [f, count] : cases) {
        CAPTURE(f);
        Quiver q = fixture(f);
        PathAlgebra a(q);
        ClusterCategory c(a, knit_ind_A(a));
        auto sets = c.enumerate_tilting();
        CHECK(sets.size() == count);
        CHECK(expected_count(classify_dynkin(q)) == count);
        CHECK(c.objects().size() == c.ind_a().size() + q.num_vertices());
        for (const auto& s : sets)
            CHECK(c.is_maximal(s));
        for (const auto& o1 : c.objects())
            for (const auto& o2 : c.objects())
                CHECK(c.ext1(o1, o2) == c.ext1(o2, o1));
    }
}

TEST_CASE("expected counts against independent oracles")
{
    for (std::size_t n = 1; n <= 8; ++n)
        CHECK(expected_count({DynkinFamily::A, n}) == catalan(n + 1));
    // (3n - 2)/n * C(2n - 2, n - 1) for type D.
    CHECK(expected_count({DynkinFamily::D, 4}) == 50);
    CHECK(expected_count({DynkinFamily::D, 5}) == 182);
    CHECK(expected_count({DynkinFamily::E, 6}) == 833);
    CHECK(expected_count({DynkinFamily::E, 7}) == 4160);
    CHECK(expected_count({DynkinFamily::E, 8}) == 25080);
}
