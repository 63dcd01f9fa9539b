#pragma once

#include "ellpos/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace ellpos {

// Dense row-major matrix over the rationals. Only what the positivity
// computations need: rank, nullspace, square solves.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    static Matrix from_rows(const std::vector<RationalVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    void append_row(std::span<const Rational> row);

    Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
    RationalVector operator*(std::span<const Rational> v) const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RowEchelon {
    Matrix reduced;                     // reduced row echelon form
    std::vector<std::size_t> pivots;    // pivot column of each nonzero row
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);

// basis of {x : m x = 0}; one vector per free column, scaled to be
// primitive integral with positive leading entry
std::vector<RationalVector> nullspace(const Matrix& m);

// unique solution of a square nonsingular system, nullopt if singular
std::optional<RationalVector> solve(const Matrix& a, std::span<const Rational> b);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

} // namespace ellpos
