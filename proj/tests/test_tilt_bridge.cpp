#include "doctest.h"
#include "dupcat/errors.hpp"
#include "dupcat/tilt_bridge.hpp"
#include "fixture_path.hpp"

#include <set>

using namespace dupcat;

namespace {

const DupModule& member(const LeftPartCatalog& lp, const std::string& name)
{
    for (const auto& m : lp.members)
        if (m.name == name)
            return m.module;
    throw std::runtime_error("no member " + name);
}

struct Setup {
    explicit Setup(const char* f) : q(fixture(f)), d(q), lp(left_part_catalog(d)), c(d.base(), lp.ind_a) {}
    Quiver q;
    DuplicatedAlgebra d;
    LeftPartCatalog lp;
    ClusterCategory c;
};

}  // namespace

TEST_CASE("A2 tilting verdicts")
{
    Setup s("a2");
    const auto& d = s.d;
    auto p1 = d.projective_prime(0), p2 = d.projective_prime(1);
    auto t1 = is_tilting_module(d, {p1, p2, member(s.lp, "A:10"), member(s.lp, "A:11")});
    CHECK(t1.tilting());
    CHECK(t1.proj_inj_present);
    auto t2 = is_tilting_module(d, {p1, p2, member(s.lp, "A:01"), member(s.lp, "tau^-1 I_1")});
    CHECK(t2.tilting());
    auto t3 = is_tilting_module(
        d, {member(s.lp, "A:10"), member(s.lp, "A:11"), member(s.lp, "A:01"), member(s.lp, "tau^-1 I_1")});
    CHECK_FALSE(t3.tilting());
    CHECK_FALSE(t3.ext_ok);
    CHECK_FALSE(t3.proj_inj_present);
    auto t4 = is_tilting_module(d, {p1, p2, member(s.lp, "A:10")});
    CHECK_FALSE(t4.count_ok);
    auto t5 = is_tilting_module(d, {p1, p2, member(s.lp, "A:10"), d.simple_prime(1)});
    CHECK_FALSE(t5.pd_ok);
}

TEST_CASE("A2 L-tilting modules form the pentagon")
{
    Setup s("a2");
    std::set<std::set<std::string>> got;
    for (const auto& rec : enumerate_L_tilting(s.d, s.lp)) {
        std::set<std::string> names;
        for (auto i : rec.free_part)
            names.insert(s.lp.members[i].name);
        got.insert(names);
    }
    std::set<std::set<std::string>> expected{{"A:10", "A:11"},
                                             {"A:11", "A:01"},
                                             {"A:01", "tau^-1 I_1"},
                                             {"tau^-1 I_1", "tau^-1 I_2"},
                                             {"tau^-1 I_2", "A:10"}};
    CHECK(got == expected);
}

TEST_CASE("pi_bar on A2")
{
    Setup s("a2");
    CHECK(pi_bar(s.d, s.lp, s.c, member(s.lp, "tau^-1 I_1")) == ClusterObject::shifted(0));
    auto o = pi_bar(s.d, s.lp, s.c, member(s.lp, "A:11"));
    CHECK(s.c.name(o) == "A:11");
    CHECK_THROWS_AS(pi_bar(s.d, s.lp, s.c, s.d.projective_prime(0)), NotInDomain);
    CHECK_THROWS_AS(pi_bar(s.d, s.lp, s.c, s.d.simple_prime(1)), NotInDomain);
}

TEST_CASE("the bijection on every Dynkin fixture")
{
    struct Case {
        const char* fixture;
        std::size_t count;
    } cases[] = {{"a1", 2}, {"a2", 5}, {"a3", 14}, {"a3_sink", 14}, {"a3_source", 14}, {"a4", 42}, {"d4", 50}};
    for (auto [f, count] : cases) {
        CAPTURE(f);
        Setup s(f);
        auto b = verify_bijection(s.d, s.lp, s.c);
        INFO(b.report.to_text());
        CHECK(b.report.ok());
        CHECK(b.left.size() == count);
        CHECK(b.cluster.size() == count);
        auto ext = verify_ext_models(s.d, s.lp, s.c);
        INFO(ext.to_text());
        CHECK(ext.ok());
        auto canon = canonical_tilting(s.d, s.lp);
        CHECK(is_tilting_module(s.d, canon.summands).tilting());
    }
}
