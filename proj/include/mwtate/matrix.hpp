#pragma once

#include "mwtate/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <vector>

namespace mwtate {

using IntVector = std::vector<BigInt>;

/// Dense rectangular matrix of exact integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntMatrix identity(std::size_t n);
    /// Matrix whose columns are the given vectors (all of length `rows`).
    static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector column(std::size_t c) const;
    IntVector row(std::size_t r) const;
    bool is_zero() const;
    bool is_diagonal() const;

    IntMatrix transpose() const;
    /// Rows [r0, r1) and columns [c0, c1).
    IntMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
    IntMatrix select_rows(const std::vector<std::size_t>& idx) const;
    IntMatrix select_cols(const std::vector<std::size_t>& idx) const;
    /// [this | other]
    IntMatrix hcat(const IntMatrix& other) const;
    /// [this ; other]
    IntMatrix vcat(const IntMatrix& other) const;

    // elementary operations used by the reductions
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);  // row dst += k*row src
    void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);  // col dst += k*col src
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
IntMatrix scale(const IntMatrix& a, const BigInt& k);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace mwtate
