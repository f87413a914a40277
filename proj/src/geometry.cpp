#include "mwtate/geometry.hpp"

#include "mwtate/cohomology.hpp"
#include "mwtate/error.hpp"

namespace mwtate {

namespace {

void check_rank(int n)
{
    if (n < 2)
        throw Error(ErrorCode::RankTooSmall, "bundle rank " + std::to_string(n) + " < 2");
}

}  // namespace

Hp1BundleClass hp1_classify(int n, const GWElement& euler)
{
    check_rank(n);
    if (n != 2)
        throw Error(ErrorCode::InvalidArgument, "rank >= 3 bundles are classified by c2");
    Hp1BundleClass c;
    c.rank = 2;
    c.representative = kx_orbit_canonical(euler);
    c.is_free = euler.rank == 0 && euler.signature == 0;
    c.stably_free_nontrivial = euler.rank == 0 && euler.signature != 0;
    return c;
}

Hp1BundleClass hp1_classify(int n, const BigInt& c2)
{
    check_rank(n);
    if (n == 2)
        throw Error(ErrorCode::InvalidArgument, "rank 2 bundles are classified by the Euler class");
    Hp1BundleClass c;
    c.rank = n;
    c.c2 = c2;
    c.is_free = c2 == 0;
    return c;
}

TateComplex projective_bundle_hp1(const GWElement& e)
{
    e.validate();
    TateComplex c;
    for (int w = 0; w < 4; ++w)
        c.cells.push_back({"x" + std::to_string(w), w});
    if (e.signature != 0)
        c.attach.push_back({"x2", "x1", e.signature});
    return c;
}

BlowupMotive blowup_motive(const TateComplex& X, const NormalForm& Z, int n, const TateComplex& Th,
                           const std::vector<EtaEntry>& g)
{
    if (n < 2 || n % 2 != 0)
        throw Error(ErrorCode::OddCodimension, "codimension " + std::to_string(n) + " is not even and >= 2");
    TateComplex shifted = Th;
    for (auto& cell : shifted.cells)
        cell.weight += n - 2;
    for (const auto& e : g) {
        const TateCell* u = X.find(e.source);
        const TateCell* v = shifted.find(e.target);
        if (!u || !v)
            throw Error(ErrorCode::IllegalGysinEntry, "unknown cell in " + e.source + " -> " + e.target);
        if (u->weight != v->weight + 1)
            throw Error(ErrorCode::IllegalGysinEntry,
                        e.source + " (weight " + std::to_string(u->weight) + ") -> " + e.target + " (weight " +
                            std::to_string(v->weight - n + 2) + ") is not a legal Gysin entry");
    }

    BlowupMotive out;
    out.cone_part = decompose(cone_eta_map(X, shifted, g));
    NormalForm z_eta = tensor(Z, NormalForm{AtomicBlock::dyadic(0, 0)});
    for (int i = 1; i <= n / 2 - 1; ++i)
        out.eta_terms += twist(z_eta, 2 * i - 1);
    out.total = out.cone_part + out.eta_terms;
    return out;
}

CheckReport blowup_eta_check(const BlowupMotive& b, int window)
{
    CheckReport rep;
    for (const auto& blk : b.eta_terms.blocks())
        if (blk.kind != AtomicBlock::Kind::Dyadic || blk.t != 0)
            rep.fail("eta term " + blk.to_string() + " is not a Z/eta block");
    if (!witt_cohomology(b.eta_terms).is_zero())
        rep.fail("eta terms have nonzero Witt cohomology");
    if (!(witt_cohomology(b.total) == witt_cohomology(b.cone_part)))
        rep.fail("Witt cohomology of the blow-up differs from the cone part");
    for (int p = -window; p <= window; ++p)
        for (int q = -window; q <= window; ++q)
            if (!(eta_inverted(b.total, p, q) == eta_inverted(b.cone_part, p, q)))
                rep.fail("eta-inverted group differs at (" + std::to_string(p) + "," + std::to_string(q) + ")");
    rep.trace.push_back(std::to_string(b.eta_terms.size()) + " vanishing eta summand(s)");
    return rep;
}

}  // namespace mwtate
