#include "mwtate/error.hpp"
#include "mwtate/motives.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace mwtate;
using B = AtomicBlock;
using mwtate::checks::scramble;

namespace {

TateComplex cells(std::initializer_list<std::pair<const char*, int>> cs, std::vector<Attachment> att = {})
{
    TateComplex t;
    for (auto [id, w] : cs)
        t.cells.push_back({id, w});
    t.attach = std::move(att);
    return t;
}

NormalForm random_odd_free(std::mt19937_64& rng, int max_blocks)
{
    std::vector<B> blocks;
    int n = static_cast<int>(rng() % (max_blocks + 1));
    for (int i = 0; i < n; ++i) {
        int w = static_cast<int>(rng() % 7) - 2;
        if (rng() % 3 == 0)
            blocks.push_back(B::free(w));
        else
            blocks.push_back(B::dyadic(static_cast<unsigned>(rng() % 5), w));
    }
    return NormalForm(blocks);
}

std::vector<B> small_blocks()
{
    std::vector<B> out;
    for (int w = -1; w <= 2; ++w) {
        out.push_back(B::free(w));
        for (unsigned t = 0; t <= 4; ++t)
            out.push_back(B::dyadic(t, w));
        for (int p : {3, 5})
            for (unsigned r = 1; r <= 2; ++r)
                out.push_back(B::odd(p, r, w));
    }
    return out;
}

}  // namespace

TEST_CASE("validate_complex")
{
    CHECK(validate_complex(cells({{"a", 0}})).ok());
    auto rep = validate_complex(cells({{"a", 0}, {"b", 2}}, {{"b", "a", 1}}));
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].kind == Violation::Kind::NonAdjacent);
    rep = validate_complex(cells({{"a", 0}, {"b", 1}, {"c", 2}}, {{"b", "a", 2}, {"c", "b", 3}}));
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].kind == Violation::Kind::NonComposable);
    CHECK(rep.violations[0].cells == std::vector<std::string>{"c", "a"});
    // cancelling composite is fine
    CHECK(validate_complex(cells({{"a", 0}, {"b", 1}, {"b2", 1}, {"c", 2}},
                                 {{"b", "a", 1}, {"b2", "a", 1}, {"c", "b", 1}, {"c", "b2", -1}}))
              .ok());
    CHECK(validate_complex(cells({{"a", 0}, {"a", 1}})).violations[0].kind == Violation::Kind::DuplicateId);
}

TEST_CASE("decompose examples")
{
    CHECK(decompose(cells({{"a", 0}, {"b", 1}}, {{"b", "a", 6}})) == NormalForm{B::dyadic(1, 0), B::odd(3, 1, 0)});
    CHECK(decompose(cells({{"a", 2}})) == NormalForm{B::free(2)});
    auto four = cells({{"a", 0}, {"b", 1}, {"c", 1}, {"d", 2}}, {{"b", "a", 2}, {"d", "c", 3}});
    CHECK(decompose(four) == NormalForm{B::dyadic(1, 0), B::dyadic(0, 1), B::odd(3, 1, 1)});
    CHECK(decompose(cells({{"a", 0}, {"b", 1}}, {{"b", "a", -8}})) == NormalForm{B::dyadic(3, 0)});
    CHECK(decompose(cells({{"a", 0}, {"b", 1}}, {{"b", "a", 45}})) ==
          NormalForm{B::dyadic(0, 0), B::odd(3, 2, 0), B::odd(5, 1, 0)});
    CHECK_THROWS_AS(decompose(cells({{"a", 0}, {"b", 2}}, {{"b", "a", 1}})), Error);
}

TEST_CASE("realize")
{
    CHECK(realize(NormalForm{B::free(0)}).cells.size() == 1);
    auto t = realize(NormalForm{B::dyadic(2, 1)});
    REQUIRE(t.cells.size() == 2);
    CHECK(t.cells[0].weight == 1);
    CHECK(t.cells[1].weight == 2);
    REQUIRE(t.attach.size() == 1);
    CHECK(t.attach[0].coeff == 4);
    try {
        realize(NormalForm{B::odd(3, 1, 0)});
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OddBlockNotRealizable);
    }
}

TEST_CASE("decompose inverts realize and ignores base change")
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 150; ++trial) {
        NormalForm a = random_odd_free(rng, 8);
        TateComplex c = realize(a);
        CHECK(decompose(c) == a);
        for (int k = 0; k < 5; ++k)
            CHECK(decompose(scramble(c, rng)) == a);
    }
}

TEST_CASE("tensor examples")
{
    CHECK(tensor(NormalForm{B::free(2)}, NormalForm{B::dyadic(3, 1)}) == NormalForm{B::dyadic(3, 3)});
    CHECK(tensor(NormalForm{B::dyadic(1, 0)}, NormalForm{B::dyadic(2, 0)}) ==
          NormalForm{B::dyadic(1, 1), B::dyadic(1, 0)});
    CHECK(tensor(NormalForm{B::odd(3, 1, 0)}, NormalForm{B::odd(5, 1, 0)}).empty());
    CHECK(tensor(NormalForm{B::dyadic(2, 0)}, NormalForm{B::odd(3, 1, 0)}).empty());
    CHECK(tensor(NormalForm{B::odd(3, 1, 0)}, NormalForm{B::odd(3, 2, 1)}) ==
          NormalForm{B::odd(3, 1, 1), B::odd(3, 1, 2)});
}

TEST_CASE("tensor is commutative, associative and unital on small blocks")
{
    auto blocks = small_blocks();
    NormalForm unit{B::free(0)};
    for (const auto& a : blocks) {
        NormalForm A{a};
        CHECK(tensor(A, unit) == A);
        CHECK(tensor(unit, A) == A);
        for (const auto& b : blocks) {
            NormalForm Bn{b};
            CHECK(tensor(A, Bn) == tensor(Bn, A));
        }
    }
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 3000; ++trial) {
        NormalForm A{blocks[rng() % blocks.size()]}, Bn{blocks[rng() % blocks.size()]},
            C{blocks[rng() % blocks.size()]};
        CHECK(tensor(tensor(A, Bn), C) == tensor(A, tensor(Bn, C)));
    }
    for (int trial = 0; trial < 40; ++trial) {
        NormalForm A = random_odd_free(rng, 5), Bn = random_odd_free(rng, 5), C = random_odd_free(rng, 3);
        A += NormalForm{B::odd(3, 1 + rng() % 2, 0)};
        CHECK(tensor(A, Bn) == tensor(Bn, A));
        CHECK(tensor(tensor(A, Bn), C) == tensor(A, tensor(Bn, C)));
    }
}

TEST_CASE("twist")
{
    CHECK(twist(NormalForm{B::free(1)}, 2) == NormalForm{B::free(3)});
    CHECK(twist(NormalForm{B::odd(3, 1, 0)}, 1) == NormalForm{B::odd(3, 1, 1)});
    CHECK(twist(NormalForm{B::dyadic(2, 1)}, -1) == NormalForm{B::dyadic(2, 0)});
}

TEST_CASE("cone_eta_map")
{
    auto src = cells({{"s", 1}});
    auto tgt = cells({{"t", 0}});
    auto disjoint = cone_eta_map(src, tgt, {});
    CHECK(disjoint.cells.size() == 2);
    CHECK(disjoint.attach.empty());
    CHECK(decompose(cone_eta_map(src, tgt, {{"s", "t", 2}})) == NormalForm{B::dyadic(1, 0)});

    auto src2 = cells({{"x1", 1}, {"x2", 2}});
    CHECK(decompose(cone_eta_map(src2, tgt, {{"x1", "t", 3}})) ==
          NormalForm{B::dyadic(0, 0), B::odd(3, 1, 0), B::free(2)});

    try {
        cone_eta_map(src2, tgt, {{"x2", "t", 1}});
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IllegalEntry);
    }
    // target has a -> b attachment, source cell maps onto the top: composite nonzero
    auto tgt2 = cells({{"a", 0}, {"b", 1}}, {{"b", "a", 1}});
    try {
        cone_eta_map(cells({{"z", 2}}), tgt2, {{"z", "b", 1}});
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonComposableResult);
    }
    // clashing ids are renamed
    auto clash = cone_eta_map(cells({{"t", 1}}), tgt, {{"t", "t", 2}});
    CHECK(decompose(clash) == NormalForm{B::dyadic(1, 0)});
}
