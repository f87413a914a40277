#include "generators.hpp"

#include "mwtate/smith.hpp"

#include <algorithm>

namespace mwtate::checks {

NormalForm random_normal_form(std::mt19937_64& rng, const NormalFormSpec& shape)
{
    static const int primes[] = {3, 5, 7};
    std::vector<AtomicBlock> blocks;
    std::uniform_int_distribution<int> count(0, shape.max_blocks);
    std::uniform_int_distribution<int> weight(shape.min_weight, shape.max_weight);
    std::uniform_int_distribution<unsigned> texp(0, shape.max_t);
    std::uniform_int_distribution<unsigned> rexp(1, shape.max_r);
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        int kind = static_cast<int>(rng() % (shape.odd ? 6 : 5));
        int w = weight(rng);
        if (kind < 2)
            blocks.push_back(AtomicBlock::free(w));
        else if (kind < 5)
            blocks.push_back(AtomicBlock::dyadic(texp(rng), w));
        else
            blocks.push_back(AtomicBlock::odd(primes[rng() % 3], rexp(rng), w));
    }
    return NormalForm(std::move(blocks));
}

FreeComplex scramble(const FreeComplex& c, std::mt19937_64& rng)
{
    auto degs = c.degrees();
    FreeComplex out;
    if (degs.empty())
        return out;
    std::map<int, std::pair<IntMatrix, IntMatrix>> b;
    for (int w = degs.front(); w <= degs.back() + 1; ++w) {
        b[w] = random_unimodular_pair(c.rank(w), rng);
        out.set_rank(w, c.rank(w));
    }
    for (int w = degs.front(); w <= degs.back(); ++w)
        out.set_differential(w, b[w].first * c.differential(w) * b[w + 1].second);
    return out;
}

TateComplex scramble(const TateComplex& c, std::mt19937_64& rng)
{
    return tate_complex_from(scramble(c.free_complex(), rng));
}

FreeComplex random_free_complex(std::mt19937_64& rng, int max_cells)
{
    FreeComplex c;
    int total = 1 + static_cast<int>(rng() % max_cells);
    int lo = static_cast<int>(rng() % 3) - 1;
    // spread cells over up to four consecutive degrees
    int span = 1 + static_cast<int>(rng() % 4);
    std::map<int, std::size_t> ranks;
    for (int i = 0; i < total; ++i)
        ++ranks[lo + static_cast<int>(rng() % span)];
    for (const auto& [d, r] : ranks)
        c.set_rank(d, r);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<int> small(-2, 2);
    for (int w = lo; w < lo + span - 1; ++w) {
        const std::size_t rows = c.rank(w), cols = c.rank(w + 1);
        if (rows == 0 || cols == 0)
            continue;
        IntMatrix prev = c.differential(w - 1);  // C_w -> C_{w-1}
        IntMatrix d(rows, cols);
        if (prev.rows() == 0 || prev.is_zero()) {
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t col = 0; col < cols; ++col)
                    d(r, col) = entry(rng);
        } else {
            // columns must lie in ker(prev)
            IntMatrix ker = integer_kernel(prev);
            if (ker.cols() == 0)
                continue;
            for (std::size_t col = 0; col < cols; ++col) {
                // rejection keeps entries inside [-9, 9]; falls back to a zero column
                for (int attempt = 0; attempt < 20; ++attempt) {
                    IntVector v(rows);
                    for (std::size_t k = 0; k < ker.cols(); ++k) {
                        int coef = small(rng);
                        for (std::size_t r = 0; r < rows; ++r)
                            v[r] += coef * ker(r, k);
                    }
                    bool bounded = std::all_of(v.begin(), v.end(), [](const BigInt& x) { return abs(x) <= 9; });
                    if (!bounded)
                        continue;
                    for (std::size_t r = 0; r < rows; ++r)
                        d(r, col) = v[r];
                    break;
                }
            }
        }
        if (rng() % 5 == 0)
            continue;  // leave some differentials zero
        c.set_differential(w, std::move(d));
    }
    return c;
}

}  // namespace mwtate::checks
