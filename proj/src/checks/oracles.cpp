#include "oracles.hpp"

namespace mwtate::checks {

namespace {

std::vector<BigInt> cyclic_orders(const FormalGroup& g)
{
    std::vector<BigInt> out(g.free_rank(), BigInt(0));
    out.insert(out.end(), g.torsion().begin(), g.torsion().end());
    return out;
}

// Z/a ⊗ Z/b = Z/gcd(a, b) and Tor(Z/a, Z/b) = Z/gcd(a, b), with Z/0 = Z.
GradedGroup combine(const GradedGroup& a, const GradedGroup& b, bool with_tor)
{
    GradedGroup out;
    for (const auto& [da, ga] : a.degrees())
        for (const auto& [db, gb] : b.degrees())
            for (const auto& x : cyclic_orders(ga))
                for (const auto& y : cyclic_orders(gb)) {
                    out.add(da + db, FormalGroup::cyclic(gcd(x, y)));
                    if (with_tor && x != 0 && y != 0)
                        out.add(da + db - 1, FormalGroup::cyclic(gcd(x, y)));
                }
    return out;
}

}  // namespace

GradedGroup graded_kunneth(const GradedGroup& a, const GradedGroup& b) { return combine(a, b, true); }
GradedGroup graded_tensor(const GradedGroup& a, const GradedGroup& b) { return combine(a, b, false); }

}  // namespace mwtate::checks
