#include "doctest.h"
#include "dupcat/dup_algebra.hpp"
#include "fixture_path.hpp"

using namespace dupcat;
using Dims = std::vector<std::size_t>;

namespace {

const char* const kAll[] = {"a1", "a2", "a3", "a3_sink", "a3_source", "a4", "d4"};

Dims dims2(const Dims& x, const Dims& y)
{
    Dims d = x;
    d.insert(d.end(), y.begin(), y.end());
    return d;
}

}  // namespace

TEST_CASE("the bound quiver has the right size")
{
    for (const char* f : kAll) {
        Quiver q = fixture(f);
        DuplicatedAlgebra d(q);
        CHECK(d.algebra().dimension() == 3 * q.all_paths().size());
        for (std::size_t x = 0; x < q.num_vertices(); ++x)
            for (std::size_t y = 0; y < q.num_vertices(); ++y) {
                CHECK(d.projective_prime(x).dims[y] == d.base().injective(x).dims[y]);
                CHECK(d.projective_prime(x).dims[d.prime(y)] == d.base().projective(x).dims[y]);
                CHECK(d.algebra().space_dim(d.prime(x), y) == q.count_paths(y, x));
                CHECK(d.algebra().space_dim(y, d.prime(x)) == 0);
            }
    }
}

TEST_CASE("standard modules and the triple view")
{
    for (const char* f : kAll) {
        Quiver q = fixture(f);
        DuplicatedAlgebra d(q);
        const PathAlgebra& A = d.base();
        for (std::size_t x = 0; x < q.num_vertices(); ++x) {
            DupModule pp = d.projective_prime(x);
            CHECK(A.is_isomorphic(d.x_part(pp), A.injective(x)));
            CHECK(A.is_isomorphic(d.y_part(pp), A.projective(x)));
            RepMap th = d.theta(pp);
            std::size_t total = 0;
            for (const auto& c : th.comps) {
                CHECK(c.rows() == c.cols());
                total += rank(c);
            }
            CHECK(total == A.injective(x).total_dim());
            CHECK(d.projective(x) == d.embed(A.projective(x)));
            CHECK(d.is_isomorphic(d.injective(x), pp));
            CHECK(d.is_projective_injective(pp));
            CHECK(d.injective_prime(x).dims == dims2(Dims(q.num_vertices(), 0), A.injective(x).dims));
            auto st = d.structure(pp);
            CHECK(st.top == d.simple_prime(x));
            CHECK(st.socle.dims == d.simple(x).dims);
            // Round trip through (X, Y, theta).
            CHECK(d.from_triple(d.x_part(pp), d.y_part(pp), th) == pp);
        }
    }
}

TEST_CASE("A2 examples")
{
    DuplicatedAlgebra d(fixture("a2"));
    const PathAlgebra& A = d.base();
    const auto& bar = d.algebra();
    DupModule p1 = d.embed(A.projective(0)), p2 = d.embed(A.projective(1)), s2 = d.embed(A.simple(1));
    DupModule pp1 = d.projective_prime(0), pp2 = d.projective_prime(1);
    CHECK(pp1.dims == Dims{1, 1, 1, 0});
    CHECK(d.hom_dim(p1, pp1) == 1);
    CHECK(d.hom_dim(d.simple_prime(0), p1) == 0);
    CHECK(d.hom_dim(pp1, pp1) == 1);
    CHECK(d.is_isomorphic(d.structure(pp1).radical, d.embed(A.injective(0))));
    CHECK(d.structure(d.simple(1)).top == d.simple(1));
    CHECK(d.structure(d.simple(1)).socle == d.simple(1));
    CHECK(d.structure(pp2).socle.dims == d.simple(1).dims);

    auto env = bar.injective_envelope(p1);
    CHECK(d.is_isomorphic(env.injective.rep, pp1));
    CHECK(d.is_isomorphic(bar.projective_cover(pp1).projective.rep, pp1));
    CHECK(d.is_isomorphic(bar.projective_cover(d.simple_prime(0)).projective.rep, pp1));

    DupModule z1 = d.syzygy_pair(p1).second;
    CHECK(z1.dims == Dims{0, 1, 1, 0});
    CHECK(d.is_isomorphic(d.syzygy_pair(p2).second, d.simple_prime(0)));
    CHECK(d.syzygy_pair(d.projective(1)).first.is_zero());

    auto ti = d.tau_pair(d.embed(A.injective(0))).second;
    REQUIRE(ti);
    CHECK(d.is_isomorphic(*ti, z1));
    auto t = d.tau_pair(z1).first;
    REQUIRE(t);
    CHECK(d.is_isomorphic(*t, d.embed(A.injective(0))));
    auto ts2 = d.tau_pair(s2).first;
    REQUIRE(ts2);
    CHECK(d.is_isomorphic(*ts2, p1));

    CHECK(d.ext1(s2, p1) == 1);
    CHECK(d.ext1(s2, z1) == 0);
    for (const auto& n : {p1, p2, s2, z1, pp1})
        CHECK(d.ext1(pp2, n) == 0);

    CHECK(d.pd(d.projective(0)) == 0);
    CHECK(d.pd(d.simple_prime(0)) == 1);
    CHECK(d.pd(d.simple_prime(1)) == 2);
    CHECK(d.is_isomorphic(d.syzygy_pair(d.simple_prime(1)).first, z1));
    CHECK_FALSE(d.is_isomorphic(p2, pp2));
}

TEST_CASE("morphisms respect theta")
{
    DuplicatedAlgebra d(fixture("a3_sink"));
    const PathAlgebra& A = d.base();
    auto cat = knit_ind_dup(d);
    for (std::size_t i = 0; i < cat.size(); ++i) {
        const auto& m = cat.modules[i];
        CHECK(d.from_triple(d.x_part(m), d.y_part(m), d.theta(m)) == m);
        CHECK(A.is_morphism(A.nakayama(d.y_part(m)).rep, d.x_part(m), d.theta(m)));
        for (std::size_t j = 0; j < cat.size(); ++j) {
            const auto& n = cat.modules[j];
            auto ny_m = A.nakayama(d.y_part(m)), ny_n = A.nakayama(d.y_part(n));
            for (const auto& fg : d.hom_basis(m, n)) {
                CHECK(A.is_morphism(d.x_part(m), d.x_part(n), fg.f));
                CHECK(A.is_morphism(d.y_part(m), d.y_part(n), fg.g));
                CHECK(A.compose(fg.f, d.theta(m)) == A.compose(d.theta(n), A.nakayama_map(ny_m, ny_n, fg.g)));
                CHECK(d.join(d.split(d.join(fg))) == d.join(fg));
            }
        }
    }
}

TEST_CASE("knitting ind Abar")
{
    auto count_pi = [](const DuplicatedAlgebra& d, const ARCatalog& c) {
        std::size_t k = 0;
        for (const auto& m : c.modules)
            k += d.is_projective_injective(m);
        return k;
    };
    DuplicatedAlgebra a1(fixture("a1"));
    CHECK(knit_ind_dup(a1).size() == 3);
    DuplicatedAlgebra a2(fixture("a2"));
    auto c2 = knit_ind_dup(a2);
    CHECK(c2.size() == 9);
    CHECK(count_pi(a2, c2) == 2);
    DuplicatedAlgebra d4(fixture("d4"));
    auto c4 = knit_ind_dup(d4);
    CHECK(c4.size() == 36);
    CHECK(count_pi(d4, c4) == 4);
    for (const auto& chk : check_ar_sequences(d4.algebra(), c4))
        CHECK(chk.ok());
    for (const auto& chk : check_ar_sequences(a2.algebra(), c2))
        CHECK(chk.ok());
}

TEST_CASE("embedding of mod A is full, exact and preserves tau")
{
    for (const char* f : {"a2", "a3", "a3_source", "d4"}) {
        DuplicatedAlgebra d(fixture(f));
        const PathAlgebra& A = d.base();
        auto c = knit_ind_A(A);
        for (std::size_t i = 0; i < c.size(); ++i) {
            DupModule em = d.embed(c.modules[i]);
            for (std::size_t j = 0; j < c.size(); ++j) {
                DupModule en = d.embed(c.modules[j]);
                CHECK(d.hom_dim(em, en) == A.hom_dim(c.modules[i], c.modules[j]));
                CHECK(d.ext1(em, en) == A.ext1_dim(c.modules[i], c.modules[j]));
            }
            if (c.tau[i]) {
                auto t = d.tau_pair(em).first;
                REQUIRE(t);
                CHECK(d.is_isomorphic(*t, d.embed(c.modules[*c.tau[i]])));
            }
        }
    }
}

TEST_CASE("cosyzygies of projectives are tau^-1 of injectives")
{
    for (const char* f : kAll) {
        DuplicatedAlgebra d(fixture(f));
        for (std::size_t x = 0; x < d.n(); ++x) {
            DupModule lhs = d.syzygy_pair(d.projective(x)).second;
            auto rhs = d.tau_pair(d.embed(d.base().injective(x))).second;
            REQUIRE(rhs);
            CHECK(d.is_isomorphic(lhs, *rhs));
        }
    }
}

TEST_CASE("duplicated quiver report")
{
    DuplicatedAlgebra d4(fixture("d4"));
    auto r = duplicated_quiver(d4);
    using C = std::tuple<std::size_t, std::size_t, std::size_t>;
    CHECK(r.connecting == std::vector<C>{{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
    CHECK(r.zero_composites.size() == 6);
    std::vector<std::string> zeros = r.zero_composites;
    std::sort(zeros.begin(), zeros.end());
    CHECK(zeros == std::vector<std::string>{"alpha'*phi[beta]", "alpha'*phi[gamma]", "beta'*phi[alpha]",
                                            "beta'*phi[gamma]", "gamma'*phi[alpha]", "gamma'*phi[beta]"});
    REQUIRE(r.commutativity.size() == 1);
    CHECK(r.commutativity[0].composites.size() == 3);
    CHECK(r.commutativity[0].relations == 2);

    DuplicatedAlgebra a2(fixture("a2"));
    auto ra = duplicated_quiver(a2);
    CHECK(ra.connecting == std::vector<C>{{0, 1, 1}});
    CHECK(ra.hom_table[1][0] == 0);
    CHECK(a2.algebra().reduce(Path{3, 0, {1, 4, 0}}).rows() == 0);

    DuplicatedAlgebra a1(fixture("a1"));
    CHECK(duplicated_quiver(a1).connecting == std::vector<C>{{0, 0, 1}});
    CHECK(a1.algebra().dimension() == 3);

    for (const char* f : kAll) {
        Quiver q = fixture(f);
        DuplicatedAlgebra d(q);
        auto rep = duplicated_quiver(d);
        std::size_t arrows = 0;
        for (const auto& [x, y, k] : rep.connecting)
            arrows += k;
        CHECK(arrows == q.maximal_paths().size());
        for (std::size_t x = 0; x < q.num_vertices(); ++x)
            for (std::size_t y = 0; y < q.num_vertices(); ++y)
                CHECK(rep.hom_table[x][y] == q.count_paths(y, x));
    }
}
