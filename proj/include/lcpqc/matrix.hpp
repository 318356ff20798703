#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcpqc/field.hpp"

namespace lcpqc {

/// Dense row-major matrix over a finite field.
class GenMatrix {
public:
    GenMatrix(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static GenMatrix identity(Field field, std::size_t n);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    Elem& at(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    std::span<const Elem> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    const std::vector<Elem>& data() const noexcept { return data_; }

    void append_row(std::span<const Elem> values);
    GenMatrix transposed() const;

    friend bool operator==(const GenMatrix& a, const GenMatrix& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.field_ == b.field_;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

struct RrefResult {
    std::size_t rank = 0;
    GenMatrix rref;                   // rank nonzero rows, then zero rows
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination to the canonical reduced row echelon form.
RrefResult rank_rref(const GenMatrix& m);
std::size_t rank(const GenMatrix& m);

/// Vertical stack; throws ShapeMismatch on differing column counts or fields.
GenMatrix stack(const GenMatrix& top, const GenMatrix& bottom);
GenMatrix multiply(const GenMatrix& a, const GenMatrix& b);
/// Basis of the row space: the nonzero rows of the RREF.
GenMatrix row_basis(const GenMatrix& m);
bool same_row_space(const GenMatrix& a, const GenMatrix& b);

/// Parity-check matrix H with G * H^T = 0 and rank n - k. Requires full row
/// rank (RankDeficient otherwise).
GenMatrix dual_matrix(const GenMatrix& g);

/// One row per line, space-separated element tokens.
std::string matrix_format(const GenMatrix& m);
GenMatrix matrix_parse(std::string_view text, const Field& field);

}  // namespace lcpqc
