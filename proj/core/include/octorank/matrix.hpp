#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "octorank/field.hpp"

namespace octorank {

/// Dense matrix of exact scalars over a single field. Rank, kernel and
/// solving use Gauss-Jordan elimination with exact division; GMP keeps
/// rational entries canonical, so no fraction-free bookkeeping is needed.
/// The pivot rule (first nonzero entry in column order) is deterministic,
/// which makes kernel bases reproducible.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols, const FieldSpec& field);

    static ExactMatrix identity(std::size_t n, const FieldSpec& field);
    static ExactMatrix from_rows(const std::vector<std::vector<FieldElement>>& rows,
                                 const FieldSpec& field);
    static ExactMatrix from_columns(const std::vector<std::vector<FieldElement>>& cols,
                                    const FieldSpec& field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    FieldElement& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const FieldElement& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ExactMatrix transposed() const;
    ExactMatrix operator+(const ExactMatrix& rhs) const;
    ExactMatrix operator-(const ExactMatrix& rhs) const;
    ExactMatrix operator*(const ExactMatrix& rhs) const;
    ExactMatrix scaled(const FieldElement& c) const;
    bool operator==(const ExactMatrix& rhs) const;

    std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

    std::vector<FieldElement> row(std::size_t i) const;
    std::vector<FieldElement> column(std::size_t j) const;
    ExactMatrix submatrix(std::size_t row0, std::size_t col0, std::size_t nrows,
                          std::size_t ncols) const;

    bool is_zero() const;

    std::size_t rank() const;

    /// Basis of the right null space; size is cols() - rank(). Deterministic:
    /// one vector per free column in increasing column order, free entry 1.
    std::vector<std::vector<FieldElement>> kernel_basis() const;

    /// One solution of  this * x = b, or nullopt when inconsistent
    /// (free variables are set to zero).
    std::optional<std::vector<FieldElement>> solve(const std::vector<FieldElement>& b) const;

    /// Inverse of a square matrix; NotInvertible when singular.
    ExactMatrix inverted() const;

    FieldElement determinant() const;

    /// Reduced row echelon form; pivot columns reported in order.
    ExactMatrix rref(std::vector<std::size_t>* pivot_cols = nullptr) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    FieldSpec field_;
    std::vector<FieldElement> data_;
};

/// rank of the stacked rows of a and the extra rows; used for span
/// membership: extra rows lie in the row span of a iff the rank is rank(a).
std::size_t stacked_rank(const ExactMatrix& a, const std::vector<std::vector<FieldElement>>& extra);

/// True iff v lies in the row span of basis (given as rows).
bool in_row_span(const ExactMatrix& basis, const std::vector<FieldElement>& v);

}  // namespace octorank
