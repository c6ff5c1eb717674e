#include "doctest.h"
#include "dupcat/linalg.hpp"

#include <random>

using namespace dupcat;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int density)
{
    std::uniform_int_distribution<int> val(-3, 3), keep(0, 9);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (keep(rng) < density) {
                m(i, j) = Rational(val(rng), 1 + std::abs(val(rng)));
                m(i, j).canonicalize();
            }
    return m;
}

// Rank by plain floating-free elimination on a copy, kept deliberately naive
// so it shares no code with the library routine.
std::size_t naive_rank(Matrix m)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            std::swap(m(p, j), m(r, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            Rational f = m(i, c) / m(r, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace

TEST_CASE("rank examples")
{
    CHECK(rank(Matrix::identity(2)) == 2);
    CHECK(rank(Matrix(3, 4)) == 0);
    CHECK(rank(Matrix::from_rows({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(Matrix(0, 5)) == 0);
}

TEST_CASE("nullspace examples")
{
    CHECK(nullspace_basis(Matrix::identity(2)).empty());
    CHECK(nullspace_basis(Matrix(2, 3)).size() == 3);
    auto ns = nullspace_basis(Matrix::from_rows({{1, 2}, {2, 4}}));
    REQUIRE(ns.size() == 1);
    // proportional to (2, -1)
    CHECK(ns[0](0, 0) == -2 * ns[0](1, 0));
    CHECK(ns[0](1, 0) != 0);
}

TEST_CASE("cokernel examples")
{
    CHECK(cokernel_basis(Matrix::identity(2)).dimension() == 0);
    auto z = cokernel_basis(Matrix(2, 1));
    CHECK(z.dimension() == 2);
    CHECK(z.projection == Matrix::identity(2));
    auto d = cokernel_basis(Matrix::from_rows({{1}, {1}}));
    CHECK(d.dimension() == 1);
    CHECK((d.projection * Matrix::from_rows({{1}, {1}})).is_zero());
}

TEST_CASE("rational parsing and printing")
{
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-2")) == "-2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("random matrices: rank-nullity, kernel and cokernel contracts")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = rng() % 6, c = rng() % 6;
        Matrix m = random_matrix(rng, r, c, 1 + trial % 9);
        std::size_t rk = rank(m);
        CHECK(rk == naive_rank(m));
        Matrix ns = nullspace(m);
        CHECK(rk + ns.cols() == c);
        CHECK((m * ns).is_zero());
        CHECK(rank(ns) == ns.cols());
        Cokernel ck = cokernel_basis(m);
        CHECK((ck.projection * m).is_zero());
        CHECK(rank(ck.projection) == r - rk);
        CHECK(ck.projection * ck.section() == Matrix::identity(ck.dimension()));
        if (rk == c && c > 0)
            CHECK(left_inverse(m) * m == Matrix::identity(c));
        if (rk == r && r > 0)
            CHECK(m * right_inverse(m) == Matrix::identity(r));
    }
}

TEST_CASE("generic_max_rank examples")
{
    std::vector<Matrix> id{Matrix::identity(2)};
    CHECK(rank(generic_max_rank(id, 2, 2)) == 2);
    std::vector<Matrix> diag{Matrix::from_rows({{1, 0}, {0, 0}}), Matrix::from_rows({{0, 0}, {0, 1}})};
    CHECK(rank(generic_max_rank(diag, 2, 2)) == 2);
    std::vector<Matrix> e12{Matrix::from_rows({{0, 1}, {0, 0}})};
    CHECK(rank(generic_max_rank(e12, 2, 2)) == 1);
    CHECK(generic_max_rank({}, 2, 3) == Matrix(2, 3));
    // A span where coordinate-wise greedy combination stalls at rank 1.
    std::vector<Matrix> tricky{Matrix::from_rows({{1, 0}, {0, 0}}), Matrix::from_rows({{0, 1}, {0, 0}}),
                               Matrix::from_rows({{0, 0}, {1, 1}})};
    CHECK(rank(generic_max_rank(tricky, 2, 2)) == 2);
}

TEST_CASE("generic_max_rank dominates random combinations")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Matrix> span;
        for (int k = 0; k < 3; ++k)
            span.push_back(random_matrix(rng, 4, 4, 2));
        // Force rank deficiency on some trials.
        if (trial % 2 == 0)
            for (auto& m : span)
                for (std::size_t j = 0; j < 4; ++j)
                    m(3, j) = 0;
        std::size_t best = rank(generic_max_rank(span, 4, 4));
        std::uniform_int_distribution<int> coef(-5, 5);
        std::size_t seen = 0;
        for (int s = 0; s < 1000; ++s) {
            Matrix comb(4, 4);
            for (auto& m : span)
            {
                Rational c(coef(rng), 1 + std::abs(coef(rng)));
                c.canonicalize();
                comb += m.scaled(c);
            }
            seen = std::max(seen, rank(comb));
        }
        CHECK(best >= seen);
    }
}
