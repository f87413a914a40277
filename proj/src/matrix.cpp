#include "mwtate/matrix.hpp"

#include "mwtate/error.hpp"

#include <ostream>
#include <utility>

namespace mwtate {

std::int64_t to_i64(const BigInt& a)
{
    if (a > BigInt(INT64_MAX) || a < BigInt(INT64_MIN))
        throw std::overflow_error("integer does not fit in 64 bits: " + a.str());
    return static_cast<std::int64_t>(a);
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
        for (long long x : r)
            data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& cols)
{
    IntMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows)
            throw Error(ErrorCode::DimensionMismatch, "column length");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = cols[c][r];
    }
    return m;
}

IntVector IntMatrix::column(std::size_t c) const
{
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

IntVector IntMatrix::row(std::size_t r) const
{
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool IntMatrix::is_zero() const
{
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

bool IntMatrix::is_diagonal() const
{
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (r != c && (*this)(r, c) != 0)
                return false;
    return true;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const
{
    IntMatrix b(r1 - r0, c1 - c0);
    for (std::size_t r = r0; r < r1; ++r)
        for (std::size_t c = c0; c < c1; ++c)
            b(r - r0, c - c0) = (*this)(r, c);
    return b;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& idx) const
{
    IntMatrix b(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c)
            b(i, c) = (*this)(idx[i], c);
    return b;
}

IntMatrix IntMatrix::select_cols(const std::vector<std::size_t>& idx) const
{
    IntMatrix b(rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t i = 0; i < idx.size(); ++i)
            b(r, i) = (*this)(r, idx[i]);
    return b;
}

IntMatrix IntMatrix::hcat(const IntMatrix& other) const
{
    if (rows_ != other.rows_)
        throw Error(ErrorCode::DimensionMismatch, "hcat");
    IntMatrix m(rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            m(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < other.cols_; ++c)
            m(r, cols_ + c) = other(r, c);
    }
    return m;
}

IntMatrix IntMatrix::vcat(const IntMatrix& other) const
{
    if (cols_ != other.cols_)
        throw Error(ErrorCode::DimensionMismatch, "vcat");
    IntMatrix m(rows_ + other.rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m(r, c) = (*this)(r, c);
    for (std::size_t r = 0; r < other.rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m(rows_ + r, c) = other(r, c);
    return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k)
{
    if (k == 0)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(src, c) != 0)
            (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k)
{
    if (k == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        if ((*this)(r, src) != 0)
            (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r)
{
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c)
{
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorCode::DimensionMismatch, "matrix product");
    IntMatrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const BigInt& x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0)
                    m(i, j) += x * b(k, j);
        }
    return m;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw Error(ErrorCode::DimensionMismatch, "matrix sum");
    IntMatrix m = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) += b(i, j);
    return m;
}

IntVector operator*(const IntMatrix& a, const IntVector& v)
{
    if (a.cols() != v.size())
        throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
    IntVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a(i, k) != 0 && v[k] != 0)
                out[i] += a(i, k) * v[k];
    return out;
}

IntMatrix scale(const IntMatrix& a, const BigInt& k)
{
    IntMatrix m = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) *= k;
    return m;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m)
{
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < m.cols(); ++c)
            os << (c ? " " : "") << m(r, c);
    }
    return os << ']';
}

std::string_view error_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::NonComposable: return "NonComposable";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidParity: return "InvalidParity";
    case ErrorCode::EvenInput: return "EvenInput";
    case ErrorCode::EvenS: return "EvenS";
    case ErrorCode::InvalidComplex: return "InvalidComplex";
    case ErrorCode::OddBlockNotRealizable: return "OddBlockNotRealizable";
    case ErrorCode::IllegalEntry: return "IllegalEntry";
    case ErrorCode::NonComposableResult: return "NonComposableResult";
    case ErrorCode::NonpositiveL: return "NonpositiveL";
    case ErrorCode::PageTooSmall: return "PageTooSmall";
    case ErrorCode::InexactCouple: return "InexactCouple";
    case ErrorCode::RankTooSmall: return "RankTooSmall";
    case ErrorCode::OddCodimension: return "OddCodimension";
    case ErrorCode::IllegalGysinEntry: return "IllegalGysinEntry";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Malformed: return "Malformed";
    }
    return "Unknown";
}

}  // namespace mwtate
