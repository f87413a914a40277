#include "mwtate/cohomology.hpp"

#include "mwtate/error.hpp"

#include <algorithm>

namespace mwtate {

using Kind = AtomicBlock::Kind;

GradedGroup chow(const NormalForm& a, bool mod2)
{
    const FormalGroup unit = mod2 ? FormalGroup::cyclic(2) : FormalGroup::free(1);
    GradedGroup out;
    for (const auto& b : a.blocks()) {
        if (b.kind == Kind::Free) {
            out.add(b.weight, unit);
        } else if (b.kind == Kind::Dyadic) {
            out.add(b.weight, unit);
            out.add(b.weight + 1, unit);
        }
    }
    return out;
}

namespace {

GradedGroup reduce_coefficients(const GradedGroup& h, const BigInt& m)
{
    if (m == 0)
        return h;
    GradedGroup out;
    for (const auto& [d, g] : h.degrees()) {
        out.add(d, g.tensor_cyclic(m));
        out.add(d - 1, g.tor_cyclic(m));
    }
    return out;
}

}  // namespace

GradedGroup witt_cohomology(const NormalForm& a, const BigInt& modulus)
{
    if (modulus < 0)
        throw Error(ErrorCode::InvalidArgument, "modulus must be nonnegative");
    GradedGroup h;
    for (const auto& b : a.blocks()) {
        switch (b.kind) {
        case Kind::Free: h.add(b.weight, FormalGroup::free(1)); break;
        case Kind::Dyadic: h.add(b.weight + 1, FormalGroup::cyclic(pow2(b.t))); break;
        case Kind::Odd: h.add(b.weight + 1, FormalGroup::cyclic(ipow(b.p, b.r))); break;
        }
    }
    return reduce_coefficients(h, modulus);
}

HModule mod2_motivic(const NormalForm& a)
{
    HModule m;
    for (const auto& b : a.blocks()) {
        if (b.kind == Kind::Odd)
            continue;
        m.generators.emplace_back(2 * b.weight, b.weight);
        if (b.kind == Kind::Dyadic)
            m.generators.emplace_back(2 * b.weight + 2, b.weight + 1);
    }
    std::sort(m.generators.begin(), m.generators.end());
    return m;
}

FormalGroup eta_inverted(const NormalForm& a, int p, int q)
{
    const int m = 2 * q - p;
    const FormalGroup h = witt_cohomology(a)[p - q];
    if (m <= 0)
        return h;
    // 2^m (Z/2^t) = Z/2^{t-m}; free and odd summands are unchanged as abstract groups
    std::vector<BigInt> factors;
    for (std::size_t i = 0; i < h.free_rank(); ++i)
        factors.push_back(0);
    for (const auto& q_e : h.torsion()) {
        if (q_e % 2 != 0) {
            factors.push_back(q_e);
            continue;
        }
        int t = static_cast<int>(v2(q_e));
        if (t > m)
            factors.push_back(pow2(static_cast<unsigned>(t - m)));
    }
    return FormalGroup::from_invariants(factors);
}

FormalGroup hom_cone(const BigInt& l, int p, int q, HomCategory cat)
{
    namespace mm = minimal_model;
    if (l <= 0)
        throw Error(ErrorCode::NonpositiveL, "l must be positive, got " + l.str());
    const unsigned t = v2(l);
    const BigInt s = l >> t;
    if (p == q + 1) {
        // I^q / s I^q  ⊕  I^{q-1} / 2^t I^q  (⊕ 2K^M_{q-1} for MW), with I^m = 2^{max(m,0)} Z
        int index = static_cast<int>(t) + std::max(q, 0) - std::max(q - 1, 0);
        FormalGroup g = FormalGroup::cyclic(s) + FormalGroup::cyclic(pow2(static_cast<unsigned>(index)));
        if (cat == HomCategory::MW)
            g += mm::two_milnor_k(q - 1);
        return g;
    }
    if (p == q) {
        if (cat == HomCategory::MW)
            return mm::two_milnor_k(q) + mm::motivic_integral(p - 2, q - 1);
        return mm::motivic_mod2(p - 2, q - 1);
    }
    if (cat == HomCategory::MW)
        return mm::motivic_integral(p, q) + mm::motivic_integral(p - 2, q - 1);
    return mm::motivic_mod2(p, q) + mm::motivic_mod2(p - 2, q - 1);
}

FormalGroup hom_odd_block(const BigInt& s, int p, int q)
{
    if (s <= 0 || s % 2 == 0)
        throw Error(ErrorCode::EvenS, "odd block needs a positive odd order, got " + s.str());
    return p == q + 1 ? FormalGroup::cyclic(s) : FormalGroup::zero();
}

FormalGroup mw_diagonal(const NormalForm& a, int n)
{
    FormalGroup out;
    for (const auto& b : a.blocks()) {
        switch (b.kind) {
        case Kind::Free:
            // [Z(i)[2i], Z(n)[2n]] is GW(k) = Z^2 for n = i and vanishes otherwise
            if (n == b.weight)
                out += FormalGroup::free(2);
            break;
        case Kind::Dyadic: {
            int m = n - b.weight;
            out += hom_cone(pow2(b.t), 2 * m, m, HomCategory::MW);
            break;
        }
        case Kind::Odd: out += hom_odd_block(ipow(b.p, b.r), 2 * n - b.shift(), n); break;
        }
    }
    return out;
}

GradedGroup chow_of_complex(const TateComplex& c, bool mod2)
{
    GradedGroup out;
    for (const auto& cell : c.cells)
        out.add(cell.weight, mod2 ? FormalGroup::cyclic(2) : FormalGroup::free(1));
    return out;
}

GradedGroup witt_cohomology_of_complex(const TateComplex& c, const BigInt& modulus)
{
    auto rep = validate_complex(c);
    if (!rep.ok())
        throw Error(ErrorCode::InvalidComplex, rep.to_string());
    return integer_cohomology(c.free_complex(), modulus);
}

}  // namespace mwtate
