#include "dupcat/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <random>
#include <stdexcept>

namespace dupcat {

Rational parse_rational(const std::string& text)
{
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational number: '" + text + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != rows * cols)
        throw std::invalid_argument("Matrix: entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long>>& rows)
{
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != nc)
            throw std::invalid_argument("Matrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < nc; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::column(std::span<const Rational> entries)
{
    return Matrix(entries.size(), 1, std::vector<Rational>(entries.begin(), entries.end()));
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::col(std::size_t c) const { return block(0, c, rows_, 1); }
Matrix Matrix::row(std::size_t r) const { return block(r, 0, 1, cols_); }

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const
{
    Matrix m(rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < idx.size(); ++j)
            m(r, j) = (*this)(r, idx[j]);
    return m;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const
{
    Matrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c)
            m(i, c) = (*this)(idx[i], c);
    return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw std::out_of_range("Matrix::block out of range");
    Matrix m(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            m(r, c) = (*this)(r0 + r, c0 + c);
    return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m)
{
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_)
        throw std::out_of_range("Matrix::set_block out of range");
    for (std::size_t r = 0; r < m.rows_; ++r)
        for (std::size_t c = 0; c < m.cols_; ++c)
            (*this)(r0 + r, c0 + c) = m(r, c);
}

Matrix Matrix::operator*(const Matrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("Matrix product: shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(r, k);
            if (sgn(a) == 0)
                continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c)
                if (sgn(rhs(k, c)) != 0)
                    out(r, c) += a * rhs(k, c);
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const
{
    Matrix out = *this;
    out += rhs;
    return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("Matrix sum: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += rhs.data_[i];
    return *this;
}

Matrix Matrix::operator-(const Matrix& rhs) const { return *this + (-rhs); }

Matrix Matrix::operator-() const { return scaled(-1); }

Matrix Matrix::scaled(const Rational& s) const
{
    Matrix out = *this;
    for (auto& x : out.data_)
        x *= s;
    return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m)
{
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? " [" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c)
            os << (c ? " " : "") << m(r, c);
        os << ']';
    }
    return os << ']';
}

Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows)
{
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows)
            throw std::invalid_argument("hstack: row mismatch");
        cols += b.cols();
    }
    Matrix out(rows, cols);
    std::size_t c = 0;
    for (const auto& b : blocks) {
        out.set_block(0, c, b);
        c += b.cols();
    }
    return out;
}

Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols)
{
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols)
            throw std::invalid_argument("vstack: column mismatch");
        rows += b.rows();
    }
    Matrix out(rows, cols);
    std::size_t r = 0;
    for (const auto& b : blocks) {
        out.set_block(r, 0, b);
        r += b.rows();
    }
    return out;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks)
{
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix out(rows, cols);
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        out.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return out;
}

RowEchelon row_reduce(Matrix m)
{
    RowEchelon out;
    const std::size_t nr = m.rows(), nc = m.cols();
    std::size_t prow = 0;
    for (std::size_t c = 0; c < nc && prow < nr; ++c) {
        std::size_t sel = nr;
        for (std::size_t r = prow; r < nr; ++r)
            if (sgn(m(r, c)) != 0) {
                sel = r;
                break;
            }
        if (sel == nr)
            continue;
        if (sel != prow)
            for (std::size_t k = c; k < nc; ++k)
                swap(m(sel, k), m(prow, k));
        Rational inv = 1 / m(prow, c);
        for (std::size_t k = c; k < nc; ++k)
            if (sgn(m(prow, k)) != 0)
                m(prow, k) *= inv;
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == prow || sgn(m(r, c)) == 0)
                continue;
            Rational f = m(r, c);
            for (std::size_t k = c; k < nc; ++k)
                if (sgn(m(prow, k)) != 0)
                    m(r, k) -= f * m(prow, k);
        }
        out.pivots.push_back(c);
        ++prow;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m)
{
    const std::size_t nr = m.rows(), nc = m.cols();
    if (nr == 0 || nc == 0)
        return 0;
    // Clear denominators row by row, then run Bareiss on integers.
    std::vector<mpz_class> a(nr * nc);
    for (std::size_t r = 0; r < nr; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < nc; ++c)
            if (sgn(m(r, c)) != 0)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < nc; ++c) {
            if (sgn(m(r, c)) == 0)
                continue;
            a[r * nc + c] = m(r, c).get_num() * (l / m(r, c).get_den());
        }
    }
    auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * nc + c]; };
    mpz_class prev = 1;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < nc && rk < nr; ++c) {
        std::size_t sel = nr;
        for (std::size_t r = rk; r < nr; ++r)
            if (sgn(at(r, c)) != 0) {
                sel = r;
                break;
            }
        if (sel == nr)
            continue;
        if (sel != rk)
            for (std::size_t k = 0; k < nc; ++k)
                swap(at(sel, k), at(rk, k));
        for (std::size_t r = rk + 1; r < nr; ++r) {
            for (std::size_t k = c + 1; k < nc; ++k) {
                mpz_class v = at(rk, c) * at(r, k) - at(r, c) * at(rk, k);
                mpz_divexact(at(r, k).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            at(r, c) = 0;
        }
        prev = at(rk, c);
        ++rk;
    }
    return rk;
}

Matrix nullspace(const Matrix& m)
{
    const std::size_t nc = m.cols();
    RowEchelon e = row_reduce(m);
    std::vector<bool> is_pivot(nc, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < nc; ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    Matrix basis(nc, free_cols.size());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::size_t f = free_cols[j];
        basis(f, j) = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            basis(e.pivots[i], j) = -e.reduced(i, f);
    }
    return basis;
}

std::vector<Matrix> nullspace_basis(const Matrix& m)
{
    Matrix n = nullspace(m);
    std::vector<Matrix> out;
    out.reserve(n.cols());
    for (std::size_t j = 0; j < n.cols(); ++j)
        out.push_back(n.col(j));
    return out;
}

Matrix Cokernel::section() const
{
    Matrix s(projection.cols(), section_rows.size());
    for (std::size_t j = 0; j < section_rows.size(); ++j)
        s(section_rows[j], j) = 1;
    return s;
}

Cokernel cokernel_basis(const Matrix& m)
{
    // Row-reduce the spanning vectors (columns of m, as rows).  A vector is
    // reduced modulo the column space by eliminating its pivot coordinates;
    // the surviving coordinates are the quotient coordinates.
    const std::size_t n = m.rows();
    RowEchelon e = row_reduce(m.transpose());
    std::vector<long> pivot_row(n, -1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        pivot_row[e.pivots[i]] = static_cast<long>(i);
    Cokernel out;
    std::vector<long> quotient_index(n, -1);
    for (std::size_t c = 0; c < n; ++c)
        if (pivot_row[c] < 0) {
            quotient_index[c] = static_cast<long>(out.section_rows.size());
            out.section_rows.push_back(c);
        }
    out.projection = Matrix(out.section_rows.size(), n);
    for (std::size_t c = 0; c < n; ++c) {
        if (pivot_row[c] < 0) {
            out.projection(quotient_index[c], c) = 1;
            continue;
        }
        // e_c == row_i - (non-pivot part of row_i) modulo the span.
        std::size_t i = pivot_row[c];
        for (std::size_t k = 0; k < n; ++k)
            if (pivot_row[k] < 0 && sgn(e.reduced(i, k)) != 0)
                out.projection(quotient_index[k], c) = -e.reduced(i, k);
    }
    return out;
}

std::vector<std::size_t> independent_columns(const Matrix& m) { return row_reduce(m).pivots; }

Matrix inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse: matrix is not square");
    const std::size_t n = m.rows();
    RowEchelon e = row_reduce(hstack({m, Matrix::identity(n)}, n));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
        throw std::invalid_argument("inverse: matrix is singular");
    return e.reduced.block(0, n, n, n);
}

Matrix left_inverse(const Matrix& m)
{
    // Pick rows of m forming an invertible square block and invert it.
    std::vector<std::size_t> rows = independent_columns(m.transpose());
    if (rows.size() != m.cols())
        throw std::invalid_argument("left_inverse: columns are dependent");
    Matrix sq_inv = inverse(m.select_rows(rows));
    Matrix out(m.cols(), m.rows());
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i)
            out(i, rows[j]) = sq_inv(i, j);
    return out;
}

Matrix right_inverse(const Matrix& m) { return left_inverse(m.transpose()).transpose(); }

Matrix generic_max_rank(std::span<const Matrix> space, std::size_t rows, std::size_t cols)
{
    if (space.empty())
        return Matrix(rows, cols);
    for (const auto& b : space)
        if (b.rows() != rows || b.cols() != cols)
            throw std::invalid_argument("generic_max_rank: shape mismatch");
    if (space.size() == 1)
        return space.front();
    // Schwartz-Zippel: a nonzero minor of degree <= min(rows, cols) vanishes
    // at a random point of [1, 2^40]^k with probability at most
    // min(rows, cols) / 2^40.  Several draws push this far below any
    // practical concern, and a full-rank draw ends the search early.
    std::mt19937_64 rng(0x5eed'd0c5'a7a1'0001ULL);
    std::uniform_int_distribution<unsigned long> dist(1, (1UL << 40));
    const std::size_t full = std::min(rows, cols);
    Matrix best(rows, cols);
    std::size_t best_rank = 0;
    for (int attempt = 0; attempt < 3; ++attempt) {
        Matrix c(rows, cols);
        for (const auto& b : space) {
            Rational coef = mpz_class(std::to_string(dist(rng)));
            if (attempt % 2 == 1)
                coef = -coef;
            c += b.scaled(coef);
        }
        std::size_t r = rank(c);
        if (attempt == 0 || r > best_rank) {
            best = std::move(c);
            best_rank = r;
        }
        if (best_rank == full)
            break;
    }
    return best;
}

}  // namespace dupcat
