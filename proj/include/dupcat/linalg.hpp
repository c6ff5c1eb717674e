#pragma once

// Exact dense linear algebra over the rationals.

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace dupcat {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

/// Row-major dense matrix of exact rationals.  Zero-sized dimensions are
/// allowed and common (maps into or out of a zero vector space).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    /// Builds a matrix from integer rows; all rows must have equal length.
    static Matrix from_rows(const std::vector<std::vector<long>>& rows);
    /// A single column.
    static Matrix column(std::span<const Rational> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Rational>& entries() const { return data_; }

    bool is_zero() const;
    Matrix transpose() const;
    Matrix col(std::size_t c) const;
    Matrix row(std::size_t r) const;
    /// Columns `idx` in the given order.
    Matrix select_cols(std::span<const std::size_t> idx) const;
    Matrix select_rows(std::span<const std::size_t> idx) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator-() const;
    Matrix& operator+=(const Matrix& rhs);
    Matrix scaled(const Rational& s) const;

    bool operator==(const Matrix& rhs) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows);
Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols);
Matrix block_diagonal(const std::vector<Matrix>& blocks);

/// Reduced row echelon form together with the pivot columns.
struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};
RowEchelon row_reduce(Matrix m);

/// Rank computed by fraction-free (Bareiss) elimination on an integer
/// rescaling of the rows.
std::size_t rank(const Matrix& m);

/// Basis of the right kernel as the columns of the result
/// (cols(m) - rank(m) columns).  The basis is the standard one read off
/// the reduced echelon form, so it is canonical for a given matrix.
Matrix nullspace(const Matrix& m);
std::vector<Matrix> nullspace_basis(const Matrix& m);

/// Quotient of the target space of `m` by its column space.
/// `projection` is dim x rows(m) with projection * m == 0; `section_rows`
/// lists the standard basis vectors that map onto the quotient basis, so
/// projection restricted to them is the identity.
struct Cokernel {
    Matrix projection;
    std::vector<std::size_t> section_rows;
    std::size_t dimension() const { return section_rows.size(); }
    /// rows(m) x dim matrix with projection * section() == identity.
    Matrix section() const;
};
Cokernel cokernel_basis(const Matrix& m);

/// Left inverse of a matrix with full column rank.
/// Throws std::invalid_argument if the columns are dependent.
Matrix left_inverse(const Matrix& m);
/// Right inverse of a matrix with full row rank.
Matrix right_inverse(const Matrix& m);
/// Inverse of a square invertible matrix; throws std::invalid_argument.
Matrix inverse(const Matrix& m);

/// Columns of `m` that form a basis of its column space (first maximal
/// independent subset, left to right).
std::vector<std::size_t> independent_columns(const Matrix& m);

/// A member of the span of `space` attaining the largest rank on that span.
/// Coefficients are drawn from a fixed-seed generator over a wide integer
/// range, and the best of several draws is kept, so results are
/// reproducible.  An empty span yields the zero matrix of shape rows x cols.
Matrix generic_max_rank(std::span<const Matrix> space, std::size_t rows, std::size_t cols);

}  // namespace dupcat
