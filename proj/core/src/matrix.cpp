#include "naka/matrix.hpp"

#include <sstream>

namespace naka {

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& f)
    : rows_(rows), cols_(cols), field_(f), entries_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, const FieldSpec& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_int_rows(const FieldSpec& f, const std::vector<std::vector<long>>& rows) {
    if (rows.empty()) throw std::invalid_argument("from_int_rows: empty row list");
    Matrix m(rows.size(), rows[0].size(), f);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("from_int_rows: ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = Scalar::from_int(f, rows[i][j]);
    }
    return m;
}

Matrix Matrix::column(const std::vector<Scalar>& entries, const FieldSpec& f) {
    Matrix m(entries.size(), 1, f);
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, 0) = entries[i];
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) return false;
    for (std::size_t k = 0; k < entries_.size(); ++k)
        if (entries_[k] != o.entries_[k]) return false;
    return true;
}

std::string Matrix::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "[") << at(i, j).str();
        out << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0) out << "[]";
    return out.str();
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || !(a.field() == b.field()))
        throw std::invalid_argument("matrix shape/field mismatch");
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) += b.at(i, j);
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = r.at(i, j) - b.at(i, j);
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows() || !(a.field() == b.field()))
        throw std::invalid_argument("matrix product shape/field mismatch");
    Matrix r(a.rows(), b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;  // inputs are sparse in practice
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Scalar& bkj = b.at(k, j);
                if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

Matrix operator*(const Scalar& c, const Matrix& m) {
    Matrix r = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = c * r.at(i, j);
    return r;
}

Matrix operator-(const Matrix& m) { return (-Scalar::one(m.field())) * m; }

Matrix transpose(const Matrix& m) {
    Matrix r(m.cols(), m.rows(), m.field());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r.at(j, i) = m.at(i, j);
    return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || !(a.field() == b.field()))
        throw std::invalid_argument("hstack mismatch");
    Matrix r(a.rows(), a.cols() + b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols() || !(a.field() == b.field()))
        throw std::invalid_argument("vstack mismatch");
    Matrix r(a.rows() + b.rows(), a.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

Matrix select_columns(const Matrix& m, const std::vector<std::size_t>& idx) {
    Matrix r(m.rows(), idx.size(), m.field());
    for (std::size_t j = 0; j < idx.size(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) r.at(i, j) = m.at(i, idx[j]);
    return r;
}

Echelon rref(const Matrix& m) {
    Echelon e{m, {}};
    Matrix& a = e.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != row)
            for (std::size_t j = col; j < a.cols(); ++j) std::swap(a.at(row, j), a.at(pivot, j));
        Scalar inv = a.at(row, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) = inv * a.at(row, j);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col).is_zero()) continue;
            Scalar factor = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(i, j) = a.at(i, j) - factor * a.at(row, j);
        }
        e.pivot_cols.push_back(col);
        ++row;
    }
    return e;
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_cols.size(); }

Matrix kernel_basis(const Matrix& m) {
    Echelon e = rref(m);
    std::vector<std::size_t> free_cols;
    {
        std::size_t p = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (p < e.pivot_cols.size() && e.pivot_cols[p] == c)
                ++p;
            else
                free_cols.push_back(c);
        }
    }
    Matrix k(m.cols(), free_cols.size(), m.field());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        k.at(free_cols[j], j) = Scalar::one(m.field());
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
            k.at(e.pivot_cols[i], j) = -e.reduced.at(i, free_cols[j]);
    }
    return k;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
    Echelon e = rref(hstack(a, b));
    for (std::size_t c : e.pivot_cols)
        if (c >= a.cols()) return std::nullopt;
    Matrix x(a.cols(), b.cols(), a.field());
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(e.pivot_cols[i], j) = e.reduced.at(i, a.cols() + j);
    return x;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    auto x = solve(m, Matrix::identity(m.rows(), m.field()));
    if (!x || rank(m) != m.rows()) throw std::domain_error("inverse: singular matrix");
    return *x;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("kron: field mismatch");
    Matrix r(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
        for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
            const Scalar& c = a.at(i1, j1);
            if (c.is_zero()) continue;
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
                for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
                    if (!b.at(i2, j2).is_zero())
                        r.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = c * b.at(i2, j2);
        }
    return r;
}

std::size_t homology_dim(const Matrix& d_in, const Matrix& d_out) {
    if (d_out.cols() != d_in.rows())
        throw std::invalid_argument("homology_dim: differentials not composable");
    if (!(d_out * d_in).is_zero())
        throw std::domain_error("homology_dim: composite of differentials is nonzero");
    std::size_t ker = d_out.cols() - rank(d_out);
    return ker - rank(d_in);
}

Matrix column_space_basis(const Matrix& m) {
    Echelon e = rref(transpose(m));
    Matrix basis(m.rows(), e.pivot_cols.size(), m.field());
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) basis.at(j, i) = e.reduced.at(i, j);
    return basis;
}

QuotientMaps quotient_by_column_space(const Matrix& basis, std::size_t ambient_dim) {
    if (basis.cols() > 0 && basis.rows() != ambient_dim)
        throw std::invalid_argument("quotient: basis rows do not match ambient dimension");
    Matrix eb = basis.cols() == 0 ? Matrix(ambient_dim, 0, basis.field())
                                  : column_space_basis(basis);
    // Pivot coordinates of the echelon basis; the complement indices are
    // the remaining standard coordinates.
    std::vector<bool> is_pivot(ambient_dim, false);
    {
        Echelon e = rref(transpose(eb));
        for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    }
    QuotientMaps q;
    for (std::size_t i = 0; i < ambient_dim; ++i)
        if (!is_pivot[i]) q.complement.push_back(i);
    const FieldSpec& f = basis.field();
    q.section = Matrix(ambient_dim, q.complement.size(), f);
    for (std::size_t j = 0; j < q.complement.size(); ++j)
        q.section.at(q.complement[j], j) = Scalar::one(f);
    Matrix full = hstack(eb, q.section);
    Matrix inv = inverse(full);
    q.proj = Matrix(q.complement.size(), ambient_dim, f);
    for (std::size_t i = 0; i < q.complement.size(); ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j)
            q.proj.at(i, j) = inv.at(eb.cols() + i, j);
    return q;
}

Matrix coordinates_in_basis(const Matrix& basis, const Matrix& vecs) {
    auto x = solve(basis, vecs);
    if (!x) throw std::domain_error("coordinates_in_basis: vector outside span");
    return *x;
}

}  // namespace naka
