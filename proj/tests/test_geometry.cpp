#include "mwtate/cohomology.hpp"
#include "mwtate/error.hpp"
#include "mwtate/geometry.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace mwtate;

namespace {

BigInt chow_rank(const NormalForm& a)
{
    BigInt r = 0;
    const GradedGroup ch = chow(a);
    for (const auto& [d, g] : ch.degrees())
        r += g.free_rank();
    return r;
}

TateComplex surface_like()
{
    return {{{"a", 0}, {"b", 1}, {"c", 2}}, {}};
}

TateComplex single_cell(int w) { return {{{"e", w}}, {}}; }

}  // namespace

TEST_CASE("hp1 classification examples")
{
    auto free = hp1_classify(2, GWElement{0, 0});
    CHECK(free.is_free);
    CHECK_FALSE(free.stably_free_nontrivial);

    auto sf = hp1_classify(2, GWElement{0, 4});
    CHECK(sf.stably_free_nontrivial);
    CHECK_FALSE(sf.is_free);
    CHECK(*sf.representative == GWElement{0, 4});
    CHECK(*hp1_classify(2, GWElement{0, -4}).representative == GWElement{0, 4});

    auto c = hp1_classify(5, BigInt(7));
    CHECK(*c.c2 == 7);
    CHECK_FALSE(c.is_free);
    CHECK(hp1_classify(3, BigInt(0)).is_free);

    CHECK_THROWS_AS(hp1_classify(1, GWElement{0, 0}), Error);
    CHECK_THROWS_AS(hp1_classify(1, BigInt(3)), Error);
    CHECK_THROWS_AS(hp1_classify(2, GWElement{1, 0}), Error);
    CHECK_THROWS_AS(hp1_classify(2, BigInt(3)), Error);
    CHECK_THROWS_AS(hp1_classify(4, GWElement{0, 0}), Error);
    try {
        hp1_classify(0, BigInt(1));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::RankTooSmall);
    }
}

TEST_CASE("hp1 classification grid")
{
    for (int r = -7; r <= 7; ++r)
        for (int s = -9; s <= 9; ++s) {
            if ((r - s) % 2 != 0) {
                CHECK_THROWS_AS(hp1_classify(2, GWElement{r, s}), Error);
                continue;
            }
            GWElement e{r, s};
            auto c = hp1_classify(2, e);
            CHECK(c.representative->signature >= 0);
            CHECK(c == hp1_classify(2, GWElement::minus_one() * e));
            CHECK(kx_orbit_canonical(*c.representative) == *c.representative);
            CHECK(c.stably_free_nontrivial == (r == 0 && s != 0));
            CHECK(c.is_free == (r == 0 && s == 0));
        }
}

TEST_CASE("projective bundles over HP1")
{
    CHECK(decompose(projective_bundle_hp1({0, 4})) ==
          NormalForm{AtomicBlock::free(0), AtomicBlock::dyadic(2, 1), AtomicBlock::free(3)});
    CHECK(decompose(projective_bundle_hp1({0, 0})) ==
          NormalForm{AtomicBlock::free(0), AtomicBlock::free(1), AtomicBlock::free(2), AtomicBlock::free(3)});
    CHECK(decompose(projective_bundle_hp1({1, 3})) ==
          NormalForm{AtomicBlock::free(0), AtomicBlock::dyadic(0, 1), AtomicBlock::odd(3, 1, 1),
                     AtomicBlock::free(3)});
    CHECK_THROWS_AS(projective_bundle_hp1({1, 2}), Error);

    for (int n = 1; n <= 6; ++n) {
        BigInt s = BigInt(1) << n;
        NormalForm a = decompose(projective_bundle_hp1({0, s}));
        CHECK(witt_cohomology(a)[2] == FormalGroup::cyclic(s));
        CHECK(degeneracy_page(a) == n + 2);
    }
    NormalForm three = decompose(projective_bundle_hp1({1, 3}));
    CHECK(witt_cohomology(three)[2] == FormalGroup::cyclic(3));
    CHECK(degeneracy_page(three) == 2);
}

TEST_CASE("P(E) degeneracy tracks the dyadic valuation of the signature")
{
    for (int s = -40; s <= 40; ++s) {
        NormalForm a = decompose(projective_bundle_hp1({s, s}));
        int r = 0;
        for (int v = std::abs(s); v != 0 && v % 2 == 0; v /= 2)
            ++r;
        CHECK(degeneracy_page(a) == r + 2);
        // Witt torsion at degree 2 is Z/|s| and nothing else.
        if (std::abs(s) > 1)
            CHECK(witt_cohomology(a)[2] == FormalGroup::cyclic(std::abs(s)));
        else
            CHECK(witt_cohomology(a)[2].torsion().empty());
    }
}

TEST_CASE("blow-up examples")
{
    NormalForm Z{AtomicBlock::free(0)};
    auto b = blowup_motive(surface_like(), Z, 2, single_cell(1), {{"c", "e", 1}});
    CHECK(b.total == NormalForm{AtomicBlock::free(0), AtomicBlock::free(1), AtomicBlock::dyadic(0, 1)});
    CHECK(b.eta_terms.empty());
    CHECK(blowup_eta_check(b).holds);

    auto split = blowup_motive(surface_like(), Z, 2, single_cell(1), {});
    CHECK(split.total ==
          NormalForm{AtomicBlock::free(0), AtomicBlock::free(1), AtomicBlock::free(2), AtomicBlock::free(1)});
    CHECK(blowup_eta_check(split).holds);

    auto four = blowup_motive(surface_like(), Z, 4, single_cell(-1), {{"c", "e", 1}});
    CHECK(four.eta_terms == twist(tensor(Z, NormalForm{AtomicBlock::dyadic(0, 0)}), 1));
    CHECK(four.eta_terms == NormalForm{AtomicBlock::dyadic(0, 1)});
    auto rep = blowup_eta_check(four);
    CHECK(rep.holds);
    CHECK(rep.trace.back() == "1 vanishing eta summand(s)");
}

TEST_CASE("blow-up errors")
{
    NormalForm Z{AtomicBlock::free(0)};
    auto expect = [](auto f, ErrorCode code) {
        try {
            f();
            CHECK_MESSAGE(false, "no error");
        } catch (const Error& e) {
            CHECK(e.code() == code);
        }
    };
    expect([&] { blowup_motive(surface_like(), Z, 3, single_cell(1), {}); }, ErrorCode::OddCodimension);
    expect([&] { blowup_motive(surface_like(), Z, 0, single_cell(1), {}); }, ErrorCode::OddCodimension);
    expect([&] { blowup_motive(surface_like(), Z, 2, single_cell(1), {{"b", "e", 1}}); },
           ErrorCode::IllegalGysinEntry);
    expect([&] { blowup_motive(surface_like(), Z, 2, single_cell(1), {{"zz", "e", 1}}); },
           ErrorCode::IllegalGysinEntry);
    // c -> b followed by the Gysin entry b -> e is a nonzero composite
    TateComplex X{{{"a", 0}, {"b", 1}, {"c", 2}}, {{"c", "b", 1}}};
    TateComplex Th{{{"e", 0}}, {}};
    expect([&] { blowup_motive(X, Z, 2, Th, {{"b", "e", 1}}); }, ErrorCode::NonComposableResult);
}

TEST_CASE("blow-up chow count and eta check on random inputs")
{
    std::mt19937_64 rng(11);
    checks::NormalFormSpec shape;
    shape.max_blocks = 4;
    shape.odd = false;
    for (int trial = 0; trial < 80; ++trial) {
        int n = 2 * (1 + static_cast<int>(rng() % 3));
        // Free-cell X and Th so every Gysin matrix composes.
        TateComplex X;
        int xs = 1 + static_cast<int>(rng() % 5);
        for (int k = 0; k < xs; ++k)
            X.cells.push_back({"x" + std::to_string(k), static_cast<int>(rng() % 5)});
        NormalForm Z;
        int zs = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < zs; ++k)
            Z += NormalForm{AtomicBlock::free(static_cast<int>(rng() % 3))};
        TateComplex Th = realize(twist(Z, 1));
        for (auto& c : Th.cells)
            c.weight -= n - 2;
        std::vector<EtaEntry> g;
        for (const auto& u : X.cells)
            for (const auto& v : Th.cells)
                if (u.weight == v.weight + n - 1 && rng() % 2)
                    g.push_back({u.id, v.id, static_cast<int>(rng() % 7) - 3});
        auto b = blowup_motive(X, Z, n, Th, g);
        CHECK(chow_rank(b.total) == chow_rank(decompose(X)) + chow_rank(Z) * (n - 1));
        CHECK(blowup_eta_check(b).holds);
    }

    // With g = 0 the cone splits, for arbitrary (odd-free) Z and X.
    for (int trial = 0; trial < 40; ++trial) {
        NormalForm xa = checks::random_normal_form(rng, shape);
        NormalForm Z = checks::random_normal_form(rng, shape);
        int n = 2 * (1 + static_cast<int>(rng() % 3));
        TateComplex Th = realize(twist(Z, 1));
        auto b = blowup_motive(realize(xa), Z, n, Th, {});
        NormalForm th_shifted = twist(Z, 1 + n - 2);
        NormalForm eta;
        for (int i = 1; i <= n / 2 - 1; ++i)
            eta += twist(tensor(Z, NormalForm{AtomicBlock::dyadic(0, 0)}), 2 * i - 1);
        CHECK(b.total == xa + th_shifted + eta);
        CHECK(blowup_eta_check(b).holds);
    }
}
