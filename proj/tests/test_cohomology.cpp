#include "mwtate/cohomology.hpp"
#include "mwtate/error.hpp"

#include "generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace mwtate;
using B = AtomicBlock;

namespace {

GradedGroup graded(std::initializer_list<std::pair<int, FormalGroup>> xs)
{
    GradedGroup g;
    for (const auto& [d, x] : xs)
        g.add(d, x);
    return g;
}

FormalGroup Z(int n = 0) { return FormalGroup::cyclic(n); }

}  // namespace

TEST_CASE("chow")
{
    CHECK(chow(NormalForm{B::free(2)}) == graded({{2, Z()}}));
    CHECK(chow(NormalForm{B::dyadic(3, 1)}) == graded({{1, Z()}, {2, Z()}}));
    CHECK(chow(NormalForm{B::odd(3, 1, 0)}).is_zero());
    CHECK(chow(NormalForm{B::dyadic(3, 1)}, true) == graded({{1, Z(2)}, {2, Z(2)}}));
}

TEST_CASE("witt cohomology")
{
    NormalForm pe{B::free(0), B::dyadic(2, 1), B::free(3)};
    CHECK(witt_cohomology(pe) == graded({{0, Z()}, {2, Z(4)}, {3, Z()}}));
    CHECK(witt_cohomology(NormalForm{B::odd(3, 1, 3)}) == graded({{4, Z(3)}}));
    CHECK(witt_cohomology(NormalForm{B::dyadic(2, 0)}, 2) == graded({{0, Z(2)}, {1, Z(2)}}));
    CHECK(witt_cohomology(NormalForm{B::dyadic(0, 5)}).is_zero());
}

TEST_CASE("mod2 motivic generators")
{
    CHECK(mod2_motivic(NormalForm{B::free(1)}).generators == std::vector<std::pair<int, int>>{{2, 1}});
    CHECK(mod2_motivic(NormalForm{B::dyadic(0, 0)}).generators == std::vector<std::pair<int, int>>{{0, 0}, {2, 1}});
    CHECK(mod2_motivic(NormalForm{B::odd(5, 2, 1)}).generators.empty());
}

TEST_CASE("eta inverted")
{
    CHECK(eta_inverted(NormalForm{B::free(0)}, 0, 0) == Z());
    CHECK(eta_inverted(NormalForm{B::dyadic(2, 1)}, 5, 3) == Z(2));
    CHECK(eta_inverted(NormalForm{B::dyadic(2, 1)}, 2, 0) == Z(4));
    CHECK(eta_inverted(NormalForm{B::dyadic(2, 1)}, 6, 4).is_zero());
}

TEST_CASE("hom_cone spot values")
{
    CHECK(hom_cone(6, 3, 2, HomCategory::MW) == Z(3) + Z(4));
    CHECK(hom_cone(2, 1, 3, HomCategory::MW).is_zero());
    CHECK(hom_cone(4, 3, 2, HomCategory::W) == Z(8));
    CHECK(hom_cone(1, 1, 0, HomCategory::MW).is_zero());
    CHECK(hom_cone(1, 2, 1, HomCategory::MW) == Z(2) + Z());
    CHECK(hom_cone(2, 2, 1, HomCategory::MW) == Z(4) + Z());
    CHECK(hom_cone(2, 0, 0, HomCategory::MW) == Z());
    CHECK(hom_cone(2, 2, 2, HomCategory::W) == Z(2));
    CHECK_THROWS_AS(hom_cone(0, 1, 0, HomCategory::MW), Error);
}

TEST_CASE("hom_cone splits along the dyadic and odd parts")
{
    for (int l = 1; l <= 24; ++l) {
        unsigned t = v2(l);
        BigInt s = BigInt(l) >> t;
        for (int p = -6; p <= 6; ++p)
            for (int q = -6; q <= 6; ++q)
                for (auto cat : {HomCategory::MW, HomCategory::W}) {
                    CHECK(hom_cone(l, p, q, cat) == hom_cone(pow2(t), p, q, cat) + hom_odd_block(s, p, q));
                    CHECK(hom_cone(l, p, q, cat) + hom_cone(1, p, q, cat) ==
                          hom_cone(pow2(t), p, q, cat) + hom_cone(s, p, q, cat));
                }
    }
}

TEST_CASE("mw diagonal")
{
    CHECK(mw_diagonal(NormalForm{B::free(0)}, 0) == FormalGroup::free(2));
    CHECK(mw_diagonal(NormalForm{B::free(2)}, 1).is_zero());
    CHECK(mw_diagonal(NormalForm{B::odd(3, 1, 0)}, 1) == Z(3));
    CHECK(mw_diagonal(NormalForm{B::dyadic(2, 0)}, 0) == Z());
    CHECK(mw_diagonal(NormalForm{B::dyadic(2, 0)}, 1) == Z(8) + Z());
}

TEST_CASE("witt cohomology satisfies the integral Kunneth formula")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        NormalForm a = checks::random_normal_form(rng), b = checks::random_normal_form(rng);
        NormalForm ab = tensor(a, b);
        CHECK(witt_cohomology(ab) == checks::graded_kunneth(witt_cohomology(a), witt_cohomology(b)));
        CHECK(chow(ab) == checks::graded_tensor(chow(a), chow(b)));
    }
}

TEST_CASE("chow doubling and generator counts")
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        NormalForm a = checks::random_normal_form(rng);
        for (unsigned j = 1; j <= 3; ++j) {
            NormalForm aj = tensor(a, NormalForm{B::dyadic(j, 0)});
            GradedGroup ca = chow(a), caj = chow(aj);
            for (int n = -5; n <= 8; ++n)
                CHECK(caj[n + 1].free_rank() == ca[n].free_rank() + ca[n + 1].free_rank());
        }
        HModule h = mod2_motivic(a);
        GradedGroup c2 = chow(a, true);
        for (int i = -5; i <= 8; ++i) {
            auto count = std::count(h.generators.begin(), h.generators.end(), std::make_pair(2 * i, i));
            CHECK(static_cast<std::size_t>(count) == c2[i].torsion().size());
        }
        CHECK(h.generators.size() == [&] {
            std::size_t n = 0;
            for (const auto& [d, g] : c2.degrees())
                n += g.torsion().size();
            return n;
        }());
    }
}

TEST_CASE("eta inverted periodicity where the exponent stays nonpositive")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        NormalForm a = checks::random_normal_form(rng);
        for (int p = -6; p <= 8; ++p)
            for (int q = -6; q <= 8; ++q) {
                if (2 * (q + 1) - (p + 1) > 0)
                    continue;
                CHECK(eta_inverted(a, p, q) == eta_inverted(a, p + 1, q + 1));
            }
    }
}

TEST_CASE("invariants of a complex agree with those of its normal form")
{
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 80; ++trial) {
        FreeComplex fc = checks::random_free_complex(rng);
        TateComplex c = tate_complex_from(fc);
        NormalForm a = decompose(c);
        CHECK(chow(a) == chow_of_complex(c));
        CHECK(chow(a, true) == chow_of_complex(c, true));
        for (int m : {0, 2, 4, 8})
            CHECK(witt_cohomology(a, m) == witt_cohomology_of_complex(c, m));
    }
}
