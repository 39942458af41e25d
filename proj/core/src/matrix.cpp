#include "octorank/matrix.hpp"

#include <utility>

namespace octorank {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, field.zero()) {}

ExactMatrix ExactMatrix::identity(std::size_t n, const FieldSpec& field) {
    ExactMatrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<FieldElement>>& rows,
                                   const FieldSpec& field) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    ExactMatrix m(r, c, field);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw Error("ragged row list");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

ExactMatrix ExactMatrix::from_columns(const std::vector<std::vector<FieldElement>>& cols,
                                      const FieldSpec& field) {
    return from_rows(cols, field).transposed();
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix m(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix shape mismatch in +");
    ExactMatrix m(rows_, cols_, field_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] + rhs.data_[k];
    return m;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw Error("matrix shape mismatch in -");
    ExactMatrix m(rows_, cols_, field_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] - rhs.data_[k];
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw Error("matrix shape mismatch in *");
    ExactMatrix m(rows_, rhs.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const FieldElement& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const FieldElement& b = rhs.at(k, j);
                if (b.is_zero()) continue;
                m.at(i, j) += a * b;
            }
        }
    }
    return m;
}

ExactMatrix ExactMatrix::scaled(const FieldElement& c) const {
    ExactMatrix m(rows_, cols_, field_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] * c;
    return m;
}

bool ExactMatrix::operator==(const ExactMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!(data_[k] == rhs.data_[k])) return false;
    return true;
}

std::vector<FieldElement> ExactMatrix::apply(const std::vector<FieldElement>& v) const {
    if (v.size() != cols_) throw Error("vector length mismatch in apply");
    std::vector<FieldElement> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

std::vector<FieldElement> ExactMatrix::row(std::size_t i) const {
    std::vector<FieldElement> out(cols_, field_.zero());
    for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

std::vector<FieldElement> ExactMatrix::column(std::size_t j) const {
    std::vector<FieldElement> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

ExactMatrix ExactMatrix::submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                                   std::size_t ncols) const {
    ExactMatrix m(nrows, ncols, field_);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = at(row0 + i, col0 + j);
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const FieldElement& e : data_)
        if (!e.is_zero()) return false;
    return true;
}

ExactMatrix ExactMatrix::rref(std::vector<std::size_t>* pivot_cols) const {
    ExactMatrix m(*this);
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        std::size_t r = pivot_row;
        while (r < rows_ && m.at(r, col).is_zero()) ++r;
        if (r == rows_) continue;
        if (r != pivot_row) {
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap(m.at(r, j), m.at(pivot_row, j));
        }
        const FieldElement inv = m.at(pivot_row, col).inverse();
        for (std::size_t j = col; j < cols_; ++j) m.at(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == pivot_row || m.at(i, col).is_zero()) continue;
            const FieldElement factor = m.at(i, col);
            for (std::size_t j = col; j < cols_; ++j)
                m.at(i, j) -= factor * m.at(pivot_row, j);
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    if (pivot_cols) *pivot_cols = std::move(pivots);
    return m;
}

std::size_t ExactMatrix::rank() const {
    std::vector<std::size_t> pivots;
    rref(&pivots);
    return pivots.size();
}

std::vector<std::vector<FieldElement>> ExactMatrix::kernel_basis() const {
    std::vector<std::size_t> pivots;
    const ExactMatrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (is_pivot[j]) continue;
        std::vector<FieldElement> v(cols_, field_.zero());
        v[j] = field_.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<FieldElement>> ExactMatrix::solve(
    const std::vector<FieldElement>& b) const {
    if (b.size() != rows_) throw Error("rhs length mismatch in solve");
    ExactMatrix aug(rows_, cols_ + 1, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<std::size_t> pivots;
    const ExactMatrix r = aug.rref(&pivots);
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<FieldElement> x(cols_, field_.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r.at(i, cols_);
    return x;
}

ExactMatrix ExactMatrix::inverted() const {
    if (rows_ != cols_) throw NotInvertible("inverse of a non-square matrix");
    ExactMatrix aug(rows_, 2 * cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = field_.one();
    }
    std::vector<std::size_t> pivots;
    const ExactMatrix r = aug.rref(&pivots);
    if (pivots.size() != rows_ || pivots.back() != rows_ - 1) {
        throw NotInvertible("matrix is singular");
    }
    return r.submatrix(0, cols_, rows_, cols_);
}

FieldElement ExactMatrix::determinant() const {
    if (rows_ != cols_) throw Error("determinant of a non-square matrix");
    ExactMatrix m(*this);
    FieldElement det = field_.one();
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t r = col;
        while (r < rows_ && m.at(r, col).is_zero()) ++r;
        if (r == rows_) return field_.zero();
        if (r != col) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(r, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        const FieldElement inv = m.at(col, col).inverse();
        for (std::size_t i = col + 1; i < rows_; ++i) {
            if (m.at(i, col).is_zero()) continue;
            const FieldElement factor = m.at(i, col) * inv;
            for (std::size_t j = col; j < cols_; ++j)
                m.at(i, j) -= factor * m.at(col, j);
        }
    }
    return det;
}

std::size_t stacked_rank(const ExactMatrix& a,
                         const std::vector<std::vector<FieldElement>>& extra) {
    ExactMatrix m(a.rows() + extra.size(), a.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < extra.size(); ++i) {
        if (extra[i].size() != a.cols()) throw Error("row length mismatch in stacked_rank");
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(a.rows() + i, j) = extra[i][j];
    }
    return m.rank();
}

bool in_row_span(const ExactMatrix& basis, const std::vector<FieldElement>& v) {
    return stacked_rank(basis, {v}) == basis.rank();
}

}  // namespace octorank
