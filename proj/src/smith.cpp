#include "mwtate/smith.hpp"

#include "mwtate/error.hpp"

namespace mwtate {

namespace {

// Row/column operations mirrored onto U, U^{-1}, V, V^{-1} so that
// U * M0 * V == M and U * Uinv == I at every step.
struct Tracker {
    IntMatrix& m;
    SmithReduction& r;

    void swap_rows(std::size_t a, std::size_t b)
    {
        m.swap_rows(a, b);
        r.U.swap_rows(a, b);
        r.Uinv.swap_cols(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        m.swap_cols(a, b);
        r.V.swap_cols(a, b);
        r.Vinv.swap_rows(a, b);
    }
    void add_row(std::size_t dst, std::size_t src, const BigInt& k)
    {
        m.add_row_multiple(dst, src, k);
        r.U.add_row_multiple(dst, src, k);
        r.Uinv.add_col_multiple(src, dst, -k);
    }
    void add_col(std::size_t dst, std::size_t src, const BigInt& k)
    {
        m.add_col_multiple(dst, src, k);
        r.V.add_col_multiple(dst, src, k);
        r.Vinv.add_row_multiple(src, dst, -k);
    }
    void negate_row(std::size_t a)
    {
        m.negate_row(a);
        r.U.negate_row(a);
        r.Uinv.negate_col(a);
    }
};

// Floor-free quotient rounding toward zero is fine here: we only need
// |remainder| < |pivot| for termination.
BigInt quot(const BigInt& a, const BigInt& b) { return a / b; }

}  // namespace

std::vector<BigInt> SmithReduction::invariant_factors() const
{
    std::vector<BigInt> d;
    for (std::size_t i = 0; i < rank; ++i)
        d.push_back(S(i, i));
    return d;
}

SmithReduction smith_reduce(const IntMatrix& input)
{
    const std::size_t rows = input.rows();
    const std::size_t cols = input.cols();
    SmithReduction red;
    red.U = IntMatrix::identity(rows);
    red.Uinv = IntMatrix::identity(rows);
    red.V = IntMatrix::identity(cols);
    red.Vinv = IntMatrix::identity(cols);
    IntMatrix m = input;
    Tracker ops{m, red};

    const std::size_t diag = std::min(rows, cols);
    std::size_t t = 0;
    for (; t < diag; ++t) {
        for (;;) {
            // pivot: smallest nonzero |entry| in the trailing block
            std::size_t pr = rows, pc = cols;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (m(r, c) != 0 && (pr == rows || abs(m(r, c)) < abs(m(pr, pc)))) {
                        pr = r;
                        pc = c;
                    }
            if (pr == rows)
                goto done;
            ops.swap_rows(t, pr);
            ops.swap_cols(t, pc);

            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r)
                if (m(r, t) != 0) {
                    ops.add_row(r, t, -quot(m(r, t), m(t, t)));
                    clean = clean && m(r, t) == 0;
                }
            for (std::size_t c = t + 1; c < cols; ++c)
                if (m(t, c) != 0) {
                    ops.add_col(c, t, -quot(m(t, c), m(t, t)));
                    clean = clean && m(t, c) == 0;
                }
            if (!clean)
                continue;

            // divisibility of the remaining block by the pivot
            std::size_t bad_row = rows;
            for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (m(r, c) % m(t, t) != 0) {
                        bad_row = r;
                        break;
                    }
            if (bad_row == rows)
                break;
            ops.add_row(t, bad_row, 1);
        }
        if (m(t, t) < 0)
            ops.negate_row(t);
    }
done:
    red.rank = t;
    red.S = std::move(m);
    return red;
}

SmithForm smith_normal_form(const IntMatrix& m)
{
    SmithReduction r = smith_reduce(m);
    return {std::move(r.U), std::move(r.S), std::move(r.V)};
}

IntMatrix integer_kernel(const IntMatrix& m)
{
    SmithReduction r = smith_reduce(m);
    std::vector<std::size_t> idx;
    for (std::size_t c = r.rank; c < m.cols(); ++c)
        idx.push_back(c);
    return r.V.select_cols(idx);
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b)
{
    if (b.size() != m.rows())
        throw Error(ErrorCode::DimensionMismatch, "solve_integer");
    SmithReduction r = smith_reduce(m);
    IntVector ub = r.U * b;
    IntVector y(m.cols());
    for (std::size_t k = 0; k < ub.size(); ++k) {
        if (k < r.rank) {
            if (ub[k] % r.S(k, k) != 0)
                return std::nullopt;
            y[k] = ub[k] / r.S(k, k);
        } else if (ub[k] != 0) {
            return std::nullopt;
        }
    }
    return r.V * y;
}

}  // namespace mwtate
