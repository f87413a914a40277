#include "mwtate/error.hpp"
#include "mwtate/steenrod.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace mwtate;

namespace {

// Classical mod-2 Steenrod algebra in the admissible basis, reduced by Adem relations.
using Adm = std::set<std::vector<int>>;

bool binom_odd(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return false;
    return (k & ~n) == 0;
}

void add(Adm& s, const std::vector<int>& w)
{
    auto [it, ins] = s.insert(w);
    if (!ins)
        s.erase(it);
}

Adm adem_reduce(std::vector<int> w)
{
    std::erase(w, 0);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        int a = w[i], b = w[i + 1];
        if (a >= 2 * b)
            continue;
        Adm out;
        for (int c = 0; c <= a / 2; ++c) {
            if (!binom_odd(b - c - 1, a - 2 * c))
                continue;
            std::vector<int> v(w.begin(), w.begin() + static_cast<long>(i));
            v.push_back(a + b - c);
            v.push_back(c);
            v.insert(v.end(), w.begin() + static_cast<long>(i) + 2, w.end());
            for (const auto& t : adem_reduce(v))
                add(out, t);
        }
        return out;
    }
    return {w};
}

/// Specializes tau = 1, rho = 0 and reduces classically.
Adm classical(const OpPoly& p)
{
    Adm out;
    for (const auto& w : p.terms()) {
        if (std::find(w.begin(), w.end(), kRho) != w.end())
            continue;
        std::vector<int> v;
        for (Letter l : w)
            if (l != kTau)
                v.push_back(l);
        for (const auto& t : adem_reduce(v))
            add(out, t);
    }
    return out;
}

OpPoly P(const char* s) { return OpPoly::parse(s); }

}  // namespace

TEST_CASE("adem oracle sanity")
{
    CHECK(adem_reduce({1, 1}).empty());
    CHECK(adem_reduce({1, 2}) == Adm{{3}});
    CHECK(adem_reduce({2, 2}) == Adm{{3, 1}});
    CHECK(adem_reduce({1, 3, 1}).empty());
}

TEST_CASE("quoted identities are classically true")
{
    const auto rs = RewriteSystem::quoted_identities();
    for (const auto& r : rs.rules())
        CHECK_MESSAGE(classical(OpPoly(r.lhs)) == classical(r.rhs), r.to_string());
}

TEST_CASE("polynomial arithmetic")
{
    CHECK(P("Sq2 + Sq2").is_zero());
    CHECK(P("0").is_zero());
    CHECK(P("1") * P("tau") == P("tau"));
    CHECK((P("Sq2 + rho Sq1") * P("Sq2 + rho Sq1")) ==
          P("Sq2 Sq2 + Sq2 rho Sq1 + rho Sq1 Sq2 + rho Sq1 rho Sq1"));
    CHECK(P("tau Sq3 Sq1").to_string() == "tau Sq3 Sq1");
    CHECK_THROWS_AS(P("Sq"), Error);
    CHECK_THROWS_AS(P("Sq2 +"), Error);
    CHECK_THROWS_AS(P("Sq0"), Error);
}

TEST_CASE("reduction of the proven entries")
{
    auto rs = RewriteSystem::quoted_identities();
    OpMatrix sq = steenrod_d_matrix() * steenrod_d_matrix();
    CHECK(sq[0][0] == P("Sq2 Sq2 + tau Sq3 Sq1"));
    CHECK(rs.reduce(sq[0][0]).is_zero());
    CHECK(sq[1][0] == P("Sq3 Sq1 Sq2 + Sq2 Sq3 Sq1 + rho Sq1 Sq3 Sq1"));
    CHECK(rs.reduce(sq[1][0]).is_zero());
    CHECK(rs.reduce(sq[0][1]).is_zero());
}

TEST_CASE("dsquare check under exactly the quoted identities")
{
    // The bottom-right entry Sq3Sq1 tau + (Sq2 + rho Sq1)^2 contains Sq1 tau, Sq2 rho, Sq1 rho,
    // none of which is touched by the quoted set.
    CheckReport rep = steenrod_dsquare_check();
    CHECK_FALSE(rep.holds);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].rfind("entry (1,1)", 0) == 0);
    CHECK_FALSE(rep.trace.empty());

    // Classically (tau = 1, rho = 0) that entry does vanish.
    OpMatrix sq = steenrod_d_matrix() * steenrod_d_matrix();
    for (auto& row : sq)
        for (auto& e : row)
            CHECK(classical(e).empty());
}

TEST_CASE("mutation: dropping Sq2Sq2 breaks the top-left entry")
{
    auto rs = RewriteSystem::quoted_identities();
    auto mutated = rs.without(*P("Sq2 Sq2").terms().begin());
    CHECK(mutated.rules().size() == rs.rules().size() - 1);
    CheckReport rep = steenrod_dsquare_check(mutated);
    CHECK_FALSE(rep.holds);
    bool top_left = false;
    for (const auto& f : rep.failures)
        top_left = top_left || f.rfind("entry (0,0)", 0) == 0;
    CHECK(top_left);
}

TEST_CASE("rho central and tau commutators close the system")
{
    auto rule = [](const char* l, const char* r) { return RewriteRule{*P(l).terms().begin(), P(r)}; };
    auto rs = RewriteSystem::quoted_identities()
                  .with(rule("Sq1 tau", "tau Sq1 + rho"))
                  .with(rule("Sq3 tau", "tau Sq3 + rho Sq2 + rho rho Sq1"))
                  .with(rule("Sq1 Sq2", "Sq3"))
                  .with(rule("rho tau", "tau rho"));
    for (int n : {1, 2, 3, 5})
        rs = rs.with(RewriteRule{{n, kRho}, OpPoly(Word{kRho, n})});
    CHECK(steenrod_dsquare_check(rs).holds);
}

TEST_CASE("identity matrix squares to identity")
{
    OpMatrix id{{{P("1"), P("0")}, {P("0"), P("1")}}};
    CHECK(square_check(id, id, RewriteSystem::quoted_identities()).holds);
    CHECK_FALSE(square_check(id, OpMatrix{}, RewriteSystem::quoted_identities()).holds);
}

TEST_CASE("reduction agrees with the classical quotient on random words")
{
    // Every quoted rule holds classically, so rewriting never changes the classical value.
    std::mt19937_64 rng(7);
    const Letter alphabet[] = {1, 2, 3, kTau, kRho};
    auto rs = RewriteSystem::quoted_identities();
    for (int trial = 0; trial < 300; ++trial) {
        OpPoly p;
        int terms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < terms; ++t) {
            Word w;
            int len = 1 + static_cast<int>(rng() % 5);
            for (int k = 0; k < len; ++k)
                w.push_back(alphabet[rng() % 5]);
            p += OpPoly(w);
        }
        OpPoly r = rs.reduce(p);
        CHECK(classical(r) == classical(p));
        CHECK(rs.reduce(r) == r);
    }
}

TEST_CASE("non-terminating systems are reported")
{
    RewriteSystem loop({RewriteRule{{2}, P("Sq2 Sq2 + Sq2")}});
    CHECK_THROWS_AS(loop.reduce(P("Sq2"), nullptr, 50), Error);
}
