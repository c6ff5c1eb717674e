#include "doctest.h"
#include "dupcat/algebra.hpp"

using namespace dupcat;

namespace {

using Dims = std::vector<std::size_t>;

QuiverAlgebra a2() { return QuiverAlgebra(parse_quiver("vertices 1 2\narrow a 2 1\n"), {}); }

// 1 -> 2 -> 3 with the composite a b = 0.
QuiverAlgebra a3_zero()
{
    Quiver q = parse_quiver("vertices 1 2 3\narrow a 1 2\narrow b 2 3\n");
    Relation r{{{Rational(1), Path{0, 2, {0, 1}}}}};
    return QuiverAlgebra(q, {r});
}

// Commutative square 1 -> 2 -> 4, 1 -> 3 -> 4.
QuiverAlgebra square()
{
    Quiver q = parse_quiver("vertices 1 2 3 4\narrow a 1 2\narrow b 2 4\narrow c 1 3\narrow d 3 4\n");
    Relation r{{{Rational(1), Path{0, 3, {0, 1}}}, {Rational(-1), Path{0, 3, {2, 3}}}}};
    return QuiverAlgebra(q, {r});
}

}  // namespace

TEST_CASE("path algebra of A2")
{
    auto A = a2();
    CHECK(A.dimension() == 3);
    CHECK(A.projective(1).dims == Dims{1, 1});
    CHECK(A.projective(0).dims == Dims{1, 0});
    CHECK(A.injective(0).dims == Dims{1, 1});
    CHECK(A.injective(1).dims == Dims{0, 1});
    for (std::size_t v = 0; v < 2; ++v) {
        CHECK(A.is_module(A.projective(v)));
        CHECK(A.is_module(A.injective(v)));
    }
    Rep s1 = A.simple(0), s2 = A.simple(1);
    CHECK(A.hom_dim(A.projective(0), A.projective(1)) == 1);
    CHECK(A.hom_dim(s2, A.projective(0)) == 0);
    CHECK(A.hom_dim(A.projective(1), s2) == 1);
    CHECK(A.ext1_dim(s2, A.projective(0)) == 1);
    CHECK(A.ext1_dim(s2, s2) == 0);
    CHECK(A.ext1_dim(A.projective(1), s1) == 0);
    CHECK(A.is_isomorphic(A.tau(s2), A.projective(0)));
    CHECK(A.tau(A.projective(0)).is_zero());
    CHECK(A.is_isomorphic(A.tau_inverse(A.projective(0)), s2));
    CHECK(A.tau_inverse(A.injective(1)).is_zero());
    CHECK(A.is_isomorphic(A.projective(1), A.injective(0)));
    CHECK_FALSE(A.is_isomorphic(A.direct_sum({s1, s2}), A.projective(1)));
    CHECK(A.projective_dimension(s2, 5) == 1);
    CHECK(A.is_projective(A.projective(1)));
    CHECK_FALSE(A.is_projective(s2));
    CHECK(A.is_injective(s2));
}

TEST_CASE("zero relation on A3")
{
    auto A = a3_zero();
    CHECK(A.dimension() == 5);
    CHECK(A.projective(0).dims == Dims{1, 1, 0});
    CHECK(A.injective(2).dims == Dims{0, 1, 1});
    CHECK(A.arrow_count_minimal(0, 1) == 1);
    CHECK(A.arrow_count_minimal(0, 2) == 0);
    Rep s1 = A.simple(0);
    // 0 -> S3 -> P2 -> P1 -> S1 -> 0 gives pd S1 = 2.
    CHECK(A.projective_dimension(s1, 5) == 2);
    CHECK(A.is_isomorphic(A.syzygy(s1), A.simple(1)));
    CHECK(A.ext1_dim(s1, A.simple(1)) == 1);
    CHECK(A.ext1_dim(s1, A.simple(2)) == 0);
    // P2 is projective-injective; S2 = tau^-1 S3 and tau S1 = S2.
    CHECK(A.is_injective(A.projective(1)));
    CHECK(A.is_isomorphic(A.tau(s1), A.simple(1)));
    CHECK(A.is_isomorphic(A.tau_inverse(A.simple(2)), A.simple(1)));
    CHECK(A.is_isomorphic(A.tau(A.tau_inverse(A.simple(1))), A.simple(1)));
}

TEST_CASE("commutative square")
{
    auto A = square();
    CHECK(A.space_dim(0, 3) == 1);
    CHECK(A.dimension() == 4 + 4 + 1);
    CHECK(A.projective(0).dims == Dims{1, 1, 1, 1});
    CHECK(A.is_module(A.projective(0)));
    CHECK(A.is_module(A.injective(3)));
    CHECK(A.is_isomorphic(A.projective(0), A.injective(3)));
    // tau of the simple at the source is the radical of P1 modulo its socle... check via tau tau^-1.
    Rep s1 = A.simple(0);
    Rep t = A.tau(s1);
    CHECK(A.is_module(t));
    CHECK(A.is_isomorphic(A.tau_inverse(t), s1));
    CHECK(A.hom_dim(A.projective(0), A.projective(0)) == 1);
}

TEST_CASE("kernels, cokernels and covers are consistent")
{
    auto A = square();
    Rep m = A.injective(3);
    auto cov = A.projective_cover(m);
    CHECK(A.is_morphism(cov.projective.rep, m, cov.map));
    auto env = A.injective_envelope(A.simple(1));
    CHECK(A.is_morphism(A.simple(1), env.injective.rep, env.map));
    CHECK(env.injective.vertices == std::vector<std::size_t>{1});
    auto rad = A.radical(A.projective(0));
    CHECK(rad.rep.dims == Dims{0, 1, 1, 1});
    CHECK(A.top_vector(A.projective(0)) == Dims{1, 0, 0, 0});
    CHECK(A.socle_vector(A.projective(0)) == Dims{0, 0, 0, 1});
}
