#include "doctest.h"
#include "dupcat/errors.hpp"
#include "dupcat/rep_hereditary.hpp"
#include "fixture_path.hpp"

using namespace dupcat;
using Dims = std::vector<std::size_t>;

namespace {

const char* const kAll[] = {"a1", "a2", "a3", "a3_sink", "a3_source", "a4", "d4"};

// Euler form of the quiver on dimension vectors.
long euler(const Quiver& q, const Dims& m, const Dims& n)
{
    long s = 0;
    for (std::size_t v = 0; v < m.size(); ++v)
        s += static_cast<long>(m[v] * n[v]);
    for (const auto& a : q.arrows())
        s -= static_cast<long>(m[a.source] * n[a.target]);
    return s;
}

// Ext^1(M, N) from an injective copresentation of N rather than a projective
// presentation of M.
std::size_t ext_via_injectives(const PathAlgebra& A, const Rep& m, const Rep& n)
{
    auto env = A.injective_envelope(n);
    auto co = A.cokernel(n, env.injective.rep, env.map);
    // Hom(M, I0) -> Hom(M, coker) is onto Ext^1 with kernel image of Hom(M, N).
    std::size_t hom_i0 = A.hom_dim(m, env.injective.rep);
    std::size_t hom_c = A.hom_dim(m, co.rep);
    std::size_t hom_n = A.hom_dim(m, n);
    return hom_c - (hom_i0 - hom_n);
}

}  // namespace

TEST_CASE("standard representations")
{
    PathAlgebra a2(fixture("a2"));
    auto s = a2.standard_reps();
    CHECK(s.projective[1].dims == Dims{1, 1});
    CHECK(s.projective[0] == s.simple[0]);
    CHECK(s.injective[0].dims == Dims{1, 1});
    PathAlgebra a1(fixture("a1"));
    auto t = a1.standard_reps();
    CHECK(t.simple[0] == t.projective[0]);
    CHECK(t.simple[0] == t.injective[0]);
    PathAlgebra d4(fixture("d4"));
    CHECK(d4.projective(1).dims == Dims{1, 1, 0, 0});
    CHECK(d4.injective(0).dims == Dims{1, 1, 1, 1});
    for (const char* f : kAll) {
        Quiver q = fixture(f);
        PathAlgebra A(q);
        for (std::size_t x = 0; x < q.num_vertices(); ++x)
            for (std::size_t y = 0; y < q.num_vertices(); ++y) {
                CHECK(A.projective(x).dims[y] == q.count_paths(x, y));
                CHECK(A.injective(x).dims[y] == q.count_paths(y, x));
            }
    }
}

TEST_CASE("Hom, Ext and tau on A2")
{
    PathAlgebra A(fixture("a2"));
    Rep p1 = A.projective(0), p2 = A.projective(1), s2 = A.simple(1), s1 = A.simple(0);
    CHECK(A.hom_dim(p1, p2) == 1);
    CHECK(A.hom_dim(s2, p1) == 0);
    CHECK(A.hom_dim(p2, s2) == 1);
    CHECK(A.ext1_dim(s2, p1) == 1);
    CHECK(A.ext1_dim(s2, s2) == 0);
    for (const auto& n : {p1, p2, s2})
        CHECK(A.ext1_dim(p2, n) == 0);
    auto [t, ti] = A.tau_pair(s2);
    REQUIRE(t);
    CHECK(A.is_isomorphic(*t, p1));
    CHECK_FALSE(ti);
    CHECK_FALSE(A.tau_pair(p1).first);
    auto back = A.tau_pair(p1).second;
    REQUIRE(back);
    CHECK(A.is_isomorphic(*back, s2));
    CHECK(A.is_isomorphic(p2, A.injective(0)));
    CHECK_FALSE(A.is_isomorphic(A.direct_sum({s1, s2}), p2));
    CHECK(A.hom_dim(p2, s1) == 0);
}

TEST_CASE("Nakayama functor")
{
    PathAlgebra a2(fixture("a2"));
    auto np2 = a2.nakayama(a2.projective(1));
    CHECK(np2.rep.dims == Dims{0, 1});
    CHECK(a2.nakayama(a2.projective(0)).rep.dims == Dims{1, 1});
    for (const char* f : kAll) {
        PathAlgebra A(fixture(f));
        for (std::size_t x = 0; x < A.num_vertices(); ++x) {
            auto nu = A.nakayama(A.projective(x));
            CHECK(A.is_module(nu.rep));
            CHECK(A.is_isomorphic(nu.rep, A.injective(x)));
        }
        // Functoriality on maps between projectives.
        for (std::size_t x = 0; x < A.num_vertices(); ++x)
            for (std::size_t y = 0; y < A.num_vertices(); ++y) {
                const Rep &px = A.projective(x), &py = A.projective(y);
                auto nx = A.nakayama(px), ny = A.nakayama(py);
                CHECK(A.nakayama_map(nx, nx, A.identity_map(px)) == A.identity_map(nx.rep));
                for (const auto& g : A.hom_basis(px, py)) {
                    RepMap ng = A.nakayama_map(nx, ny, g);
                    CHECK(A.is_morphism(nx.rep, ny.rep, ng));
                    for (std::size_t z = 0; z < A.num_vertices(); ++z) {
                        const Rep& pz = A.projective(z);
                        auto nz = A.nakayama(pz);
                        for (const auto& h : A.hom_basis(py, pz))
                            CHECK(A.nakayama_map(nx, nz, A.compose(h, g)) ==
                                  A.compose(A.nakayama_map(ny, nz, h), ng));
                    }
                }
            }
    }
}

TEST_CASE("knitting ind A")
{
    PathAlgebra a2(fixture("a2"));
    auto cat = knit_ind_A(a2);
    REQUIRE(cat.size() == 3);
    std::vector<Dims> dims;
    for (const auto& m : cat.modules)
        dims.push_back(m.dims);
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<Dims>{{0, 1}, {1, 0}, {1, 1}});
    CHECK(knit_ind_A(PathAlgebra(fixture("a1"))).size() == 1);
    CHECK(knit_ind_A(PathAlgebra(fixture("d4"))).size() == 12);

    for (const char* f : kAll) {
        Quiver q = fixture(f);
        PathAlgebra A(q);
        auto c = knit_ind_A(A);
        CHECK(c.size() == positive_root_count(classify_dynkin(q)));
        for (const auto& chk : check_ar_sequences(A, c))
            CHECK(chk.ok());
        // tau links only between non-projective and non-injective partners.
        for (std::size_t i = 0; i < c.size(); ++i) {
            CHECK(c.tau[i].has_value() == !c.projective[i]);
            CHECK(c.tau_inverse[i].has_value() == !c.injective[i]);
            if (c.tau[i])
                CHECK(c.tau_inverse[*c.tau[i]] == i);
        }
        // Isomorphism classes: reflexive, and the entries are distinct.
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < c.size(); ++j)
                CHECK(A.is_isomorphic(c.modules[i], c.modules[j]) == (i == j));
    }
}

TEST_CASE("Ext agrees with the Euler form, injective resolutions and the AR formula")
{
    for (const char* f : {"a2", "a3", "a3_sink", "d4"}) {
        Quiver q = fixture(f);
        PathAlgebra A(q);
        auto c = knit_ind_A(A);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < c.size(); ++j) {
                const Rep &m = c.modules[i], &n = c.modules[j];
                std::size_t ext = A.ext1_dim(m, n);
                CHECK(static_cast<long>(A.hom_dim(m, n)) - static_cast<long>(ext) == euler(q, m.dims, n.dims));
                CHECK(ext == ext_via_injectives(A, m, n));
                if (c.tau[i])
                    CHECK(ext == A.hom_dim(n, c.modules[*c.tau[i]]));
            }
    }
}

TEST_CASE("representation-infinite quiver exceeds the cap")
{
    PathAlgebra k(fixture("kronecker"));
    CHECK_THROWS_AS(knit_ind_A(k, {10000, 24}), CapExceeded);
    CHECK_THROWS_AS(knit_ind_A(k, {5, 1000}), CapExceeded);
}
