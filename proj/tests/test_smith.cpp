#include "mwtate/smith.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace mwtate;
using mwtate::checks::determinant;

namespace {

void check_form(const IntMatrix& m, const SmithForm& f)
{
    CHECK(f.U * m * f.V == f.S);
    CHECK(f.S.is_diagonal());
    CHECK(abs(determinant(f.U)) == 1);
    CHECK(abs(determinant(f.V)) == 1);
    std::size_t n = std::min(f.S.rows(), f.S.cols());
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(f.S(i, i) >= 0);
        if (i + 1 < n && f.S(i, i) != 0)
            CHECK(f.S(i + 1, i + 1) % f.S(i, i) == 0);
        if (i + 1 < n && f.S(i, i) == 0)
            CHECK(f.S(i + 1, i + 1) == 0);
    }
}

/// gcd of all k x k minors, the classical determinantal-divisor oracle (small matrices only).
BigInt minor_gcd(const IntMatrix& m, std::size_t k)
{
    BigInt g = 0;
    std::vector<std::size_t> rows(k), cols(k);
    auto next = [](std::vector<std::size_t>& idx, std::size_t n) {
        std::size_t k = idx.size();
        for (std::size_t i = k; i-- > 0;) {
            if (idx[i] < n - k + i) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j)
                    idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < k; ++i)
        rows[i] = i;
    do {
        for (std::size_t i = 0; i < k; ++i)
            cols[i] = i;
        do {
            g = gcd(g, determinant(m.select_rows(rows).select_cols(cols)));
        } while (next(cols, m.cols()));
    } while (next(rows, m.rows()));
    return g;
}

}  // namespace

TEST_CASE("smith normal form on fixed matrices")
{
    IntMatrix id = IntMatrix::identity(2);
    auto f = smith_normal_form(id);
    check_form(id, f);
    CHECK(f.S == IntMatrix{{1, 0}, {0, 1}});

    IntMatrix z(2, 3);
    f = smith_normal_form(z);
    check_form(z, f);
    CHECK(f.S.is_zero());

    IntMatrix m{{2, 4}, {6, 8}};
    f = smith_normal_form(m);
    check_form(m, f);
    CHECK(f.S == IntMatrix{{2, 0}, {0, 4}});
}

TEST_CASE("smith diagonal matches determinantal divisors")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        IntMatrix m = mwtate::checks::random_matrix(r, c, rng);
        if (trial % 3 == 0)
            m = scale(m, 6);
        auto f = smith_normal_form(m);
        check_form(m, f);
        BigInt prod = 1, prev = 1;
        for (std::size_t k = 1; k <= std::min(r, c); ++k) {
            BigInt dk = minor_gcd(m, k);
            if (dk == 0) {
                CHECK(f.S(k - 1, k - 1) == 0);
                continue;
            }
            CHECK(f.S(k - 1, k - 1) * prev == dk);
            prev = dk;
            prod *= f.S(k - 1, k - 1);
        }
    }
}

TEST_CASE("reduction inverses and kernel")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        IntMatrix m = mwtate::checks::random_matrix(r, c, rng, -4, 4);
        auto red = smith_reduce(m);
        CHECK(red.U * red.Uinv == IntMatrix::identity(r));
        CHECK(red.V * red.Vinv == IntMatrix::identity(c));
        IntMatrix k = integer_kernel(m);
        CHECK(k.cols() == c - red.rank);
        CHECK((m * k).is_zero());

        IntVector x(c);
        for (auto& e : x)
            e = static_cast<int>(rng() % 7) - 3;
        IntVector b = m * x;
        auto sol = solve_integer(m, b);
        REQUIRE(sol.has_value());
        CHECK(m * *sol == b);
    }
    IntMatrix two{{2}};
    CHECK_FALSE(solve_integer(two, IntVector{1}).has_value());
}

TEST_CASE("big entries stay exact")
{
    IntMatrix m(2, 2);
    m(0, 0) = pow2(200);
    m(0, 1) = pow2(100) * 3;
    m(1, 0) = 5;
    m(1, 1) = 7;
    auto f = smith_normal_form(m);
    check_form(m, f);
    CHECK(f.S(0, 0) * f.S(1, 1) == abs(determinant(m)));
}
