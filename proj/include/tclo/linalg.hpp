#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tclo/scalar.hpp"

namespace tclo {

using CoordVector = std::vector<Scalar>;

/// Dense matrix over one field; exact entries, row-major storage.
class Matrix {
public:
    Matrix(FieldSpec fs, std::size_t rows, std::size_t cols)
        : fs_(fs), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(fs)) {}

    static Matrix from_columns(FieldSpec fs, std::size_t rows, const std::vector<CoordVector>& cols);
    static Matrix from_rows(FieldSpec fs, std::size_t cols, const std::vector<CoordVector>& rows);

    const FieldSpec& field() const { return fs_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    CoordVector row(std::size_t r) const;
    CoordVector column(std::size_t c) const;

private:
    FieldSpec fs_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

/// Exact rank.
std::size_t rank(const Matrix& m);

/// Canonical basis of the right kernel {x : Mx = 0}: the basis vectors, laid out
/// as rows, form a reduced row echelon matrix. Deterministic.
std::vector<CoordVector> kernel_basis(const Matrix& m);

/// One exact solution of Mx = v, or nullopt when inconsistent.
std::optional<CoordVector> solve_columns(const Matrix& m, const CoordVector& v);

/// Canonical reduced row echelon form of the row space; zero rows dropped.
struct RowBasis {
    std::vector<CoordVector> rows;
    std::vector<std::size_t> pivots; // pivot column of each row, strictly increasing
};
RowBasis rref_rows(const Matrix& m);

/// Membership of v in the row span of basis, with combination coefficients
/// (v = sum coeff[i] * basis[i]) as the certificate.
std::optional<CoordVector> span_membership(const CoordVector& v, const std::vector<CoordVector>& basis);

/// Column in sparse form: (row, value) entries sorted by row, values nonzero.
struct SparseCol {
    std::vector<std::pair<std::size_t, Scalar>> entries;
};

/// rank of the matrix whose columns are given sparsely; never materializes the
/// dense zero blocks, so monomial-heavy systems stay cheap.
std::size_t rank_sparse(const FieldSpec& fs, std::size_t rows, const std::vector<SparseCol>& cols);

/// Solve (columns) x = v in sparse form; nullopt when v is outside the span.
std::optional<CoordVector> solve_sparse(const FieldSpec& fs, std::size_t rows,
                                        const std::vector<SparseCol>& cols, const CoordVector& v);

} // namespace tclo
