#pragma once

#include "mwtate/complex.hpp"
#include "mwtate/matrix.hpp"
#include "mwtate/motives.hpp"

#include <random>

namespace mwtate::checks {

/// Random unimodular n x n matrix built from elementary operations.
inline IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 12)
{
    IntMatrix u = IntMatrix::identity(n);
    if (n == 0)
        return u;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int s = 0; s < steps; ++s) {
        std::size_t a = pick(rng), b = pick(rng);
        if (a == b) {
            if (coeff(rng) < 0)
                u.negate_row(a);
            continue;
        }
        u.add_row_multiple(a, b, coeff(rng));
    }
    return u;
}

/// Random unimodular matrix together with its inverse.
inline std::pair<IntMatrix, IntMatrix> random_unimodular_pair(std::size_t n, std::mt19937_64& rng, int steps = 12)
{
    IntMatrix u = IntMatrix::identity(n), inv = IntMatrix::identity(n);
    if (n < 2)
        return {u, inv};
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (int s = 0; s < steps; ++s) {
        std::size_t a = pick(rng), b = pick(rng);
        if (a == b)
            continue;
        int k = coeff(rng);
        u.add_row_multiple(a, b, k);
        inv.add_col_multiple(b, a, -k);
    }
    return {u, inv};
}

/// Rank over F_p by Gaussian elimination, p prime.
inline std::size_t rank_mod_p(const IntMatrix& m, long long p)
{
    std::vector<std::vector<long long>> a(m.rows(), std::vector<long long>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            BigInt v = m(r, c) % p;
            if (v < 0)
                v += p;
            a[r][c] = static_cast<long long>(v);
        }
    auto inverse = [p](long long x) {
        long long r = 1, e = p - 2;
        x %= p;
        while (e > 0) {
            if (e & 1)
                r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < m.rows() && a[piv][c] == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        std::swap(a[piv], a[rank]);
        long long inv = inverse(a[rank][c]);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || a[r][c] == 0)
                continue;
            long long f = a[r][c] * inv % p;
            for (std::size_t k = c; k < m.cols(); ++k)
                a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

inline IntMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int lo = -9, int hi = 9)
{
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = d(rng);
    return m;
}

/// Determinant by fraction-free Bareiss elimination (independent of Smith code).
inline BigInt determinant(IntMatrix m)
{
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

struct NormalFormSpec {
    int max_blocks = 8;
    int min_weight = -2;
    int max_weight = 4;
    unsigned max_t = 4;
    bool odd = true;        // allow odd blocks
    unsigned max_r = 2;
};

NormalForm random_normal_form(std::mt19937_64& rng, const NormalFormSpec& shape = {});

/// Conjugates every differential by random unimodular base changes.
FreeComplex scramble(const FreeComplex& c, std::mt19937_64& rng);
TateComplex scramble(const TateComplex& c, std::mt19937_64& rng);

/// Random adjacent-degree integer complex with at most `max_cells` generators and entries in
/// [-9, 9] for the first differential; later differentials are built from kernel vectors
/// so the result is composable.
FreeComplex random_free_complex(std::mt19937_64& rng, int max_cells = 8);

}  // namespace mwtate::checks
