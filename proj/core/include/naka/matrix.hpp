#ifndef NAKA_MATRIX_HPP
#define NAKA_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "naka/field.hpp"

namespace naka {

/// Dense exact-scalar matrix. All entries share one FieldSpec.
/// Immutable by convention once handed out of a construction routine.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const FieldSpec& f);

    static Matrix identity(std::size_t n, const FieldSpec& f);
    static Matrix zero(std::size_t rows, std::size_t cols, const FieldSpec& f) {
        return Matrix(rows, cols, f);
    }
    /// Builds from integer rows; rows must be nonempty and rectangular.
    static Matrix from_int_rows(const FieldSpec& f, const std::vector<std::vector<long>>& rows);
    static Matrix column(const std::vector<Scalar>& entries, const FieldSpec& f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    std::string str() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    FieldSpec field_ = FieldSpec::rationals();
    std::vector<Scalar> entries_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& c, const Matrix& m);
Matrix operator-(const Matrix& m);
Matrix transpose(const Matrix& m);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
/// Columns of m selected by idx, in the given order.
Matrix select_columns(const Matrix& m, const std::vector<std::size_t>& idx);

/// Row-reduced echelon form. Pivots are found by scanning columns
/// left-to-right and rows top-to-bottom; this fixes every downstream
/// normal form and tie-break.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
};
Echelon rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of the null space, one column per free variable of the RREF:
/// the free coordinate is 1, pivot coordinates are the negated RREF
/// entries, remaining coordinates are 0. Columns ordered by free column.
Matrix kernel_basis(const Matrix& m);

/// Particular solution X of a*X = b with free variables set to 0, or
/// nullopt when the system is inconsistent. Throws on row-count mismatch.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Inverse of a square matrix; throws when singular.
Matrix inverse(const Matrix& m);

/// Kronecker product, blocks ordered by rows of a:
/// (a (x) b)[(i1,i2),(j1,j2)] = a[i1][j1] * b[i2][j2].
Matrix kron(const Matrix& a, const Matrix& b);

/// dim Ker(d_out) - rank(d_in) for a composable pair with d_out * d_in = 0.
/// Throws when the composite is nonzero or the dimensions do not match.
std::size_t homology_dim(const Matrix& d_in, const Matrix& d_out);

/// Canonical basis of the column space: the nonzero rows of rref(m^T),
/// transposed back to columns.
Matrix column_space_basis(const Matrix& m);

/// Deterministic complement data for a subspace W = col(basis) of k^t:
/// proj * basis = 0, proj * section = identity, and ker(proj) = W.
/// section columns are the standard basis vectors at the non-pivot
/// coordinates of the column-echelon form of basis.
struct QuotientMaps {
    Matrix proj;     // (t - r) x t
    Matrix section;  // t x (t - r)
    std::vector<std::size_t> complement;  // the chosen coordinate indices
};
QuotientMaps quotient_by_column_space(const Matrix& basis, std::size_t ambient_dim);

/// Solves basis * X = vecs exactly; throws when some column lies outside
/// the span. Used to express vectors in a subspace basis.
Matrix coordinates_in_basis(const Matrix& basis, const Matrix& vecs);

}  // namespace naka

#endif
