#include "doctest.h"
#include "dupcat/errors.hpp"
#include "dupcat/quiver.hpp"
#include "fixture_path.hpp"

#include <functional>

using namespace dupcat;

namespace {

// Depth-first path count, independent of the library's dynamic programme.
std::size_t dfs_paths(const Quiver& q, std::size_t from, std::size_t to)
{
    if (from == to)
        return 1;
    std::size_t total = 0;
    for (auto a : q.arrows_out(from))
        total += dfs_paths(q, q.arrow(a).target, to);
    return total;
}

}  // namespace

TEST_CASE("parsing")
{
    Quiver a2 = parse_quiver("vertices 1 2\narrow a 2 1");
    CHECK(a2.num_vertices() == 2);
    REQUIRE(a2.num_arrows() == 1);
    CHECK(a2.arrow(0).source == 1);
    CHECK(a2.arrow(0).target == 0);
    CHECK_THROWS_AS(parse_quiver("vertices 1\narrow a 1 1"), LoopError);
    CHECK_THROWS_AS(parse_quiver("vertices 1 2\narrow a 1 2\narrow b 2 1"), CyclicQuiver);
    CHECK_THROWS_AS(parse_quiver("vertices 1 1"), InvalidQuiver);
    CHECK_THROWS_AS(parse_quiver("vertices 1 2\narrow a 1 2\narrow a 1 2"), InvalidQuiver);
    CHECK_THROWS_AS(parse_quiver("arrow a 1 2"), ParseError);
    CHECK_THROWS_AS(parse_quiver("vertices 1 2\narrow a 1 3"), ParseError);
    CHECK_THROWS_AS(parse_quiver("vertices 1 2\nfoo"), ParseError);
    Quiver with_comments = parse_quiver("# comment\nvertices 1 2   # trailing\n\narrow a 2 1\n");
    CHECK(with_comments == a2);
    CHECK(parse_quiver(format_quiver(a2)) == a2);
}

TEST_CASE("Dynkin classification")
{
    CHECK(classify_dynkin(fixture("a1")).name() == "A1");
    CHECK(classify_dynkin(fixture("a2")).name() == "A2");
    CHECK(classify_dynkin(fixture("d4")).name() == "D4");
    CHECK_FALSE(classify_dynkin(fixture("kronecker")).is_dynkin());
    CHECK(classify_dynkin(parse_quiver("vertices 1 2 3 4 5 6\narrow a 1 2\narrow b 2 3\narrow c 3 4\narrow d 4 5\n"
                                       "arrow e 3 6"))
              .name() == "E6");
    CHECK(classify_dynkin(parse_quiver("vertices 1 2 3 4 5\narrow a 1 2\narrow b 2 3\narrow c 3 4\narrow d 3 5"))
              .name() == "D5");
    CHECK_FALSE(classify_dynkin(parse_quiver("vertices 1 2 3 4 5\narrow a 1 5\narrow b 2 5\narrow c 3 5\narrow d 4 5"))
                    .is_dynkin());
    CHECK_FALSE(classify_dynkin(parse_quiver("vertices 1 2 3\narrow a 1 2")).is_dynkin());
    for (const char* f : {"a1", "a2", "a3", "a3_sink", "a3_source", "a4", "d4", "kronecker"}) {
        Quiver q = fixture(f);
        CHECK(classify_dynkin(q) == classify_dynkin(opposite(q)));
        CHECK(opposite(opposite(q)) == q);
    }
    CHECK(positive_root_count({DynkinFamily::D, 4}) == 12);
    CHECK(positive_root_count({DynkinFamily::A, 3}) == 6);
    CHECK_THROWS_AS(positive_root_count({}), NotDynkin);
}

TEST_CASE("sinks and sources")
{
    auto a2 = sinks_and_sources(fixture("a2"));
    CHECK(a2.sinks == std::vector<std::size_t>{0});
    CHECK(a2.sources == std::vector<std::size_t>{1});
    auto d4 = sinks_and_sources(fixture("d4"));
    CHECK(d4.sinks == std::vector<std::size_t>{0});
    CHECK(d4.sources == std::vector<std::size_t>{1, 2, 3});
    auto a1 = sinks_and_sources(fixture("a1"));
    CHECK(a1.sinks == a1.sources);
    auto op = sinks_and_sources(opposite(fixture("d4")));
    CHECK(op.sources == std::vector<std::size_t>{0});
}

TEST_CASE("path enumeration agrees with depth-first counting")
{
    for (const char* f : {"a1", "a2", "a3", "a3_sink", "a3_source", "a4", "d4", "kronecker"}) {
        Quiver q = fixture(f);
        std::size_t total = 0;
        for (std::size_t x = 0; x < q.num_vertices(); ++x)
            for (std::size_t y = 0; y < q.num_vertices(); ++y) {
                CHECK(q.count_paths(x, y) == dfs_paths(q, x, y));
                CHECK(q.paths_between(x, y).size() == dfs_paths(q, x, y));
                total += dfs_paths(q, x, y);
            }
        CHECK(q.all_paths().size() == total);
    }
    CHECK(fixture("d4").maximal_paths().size() == 3);
    CHECK(fixture("a3").maximal_paths().size() == 1);
    CHECK(fixture("a3_source").maximal_paths().size() == 2);
}
