#pragma once

#include "mwtate/bockstein.hpp"
#include "mwtate/motives.hpp"
#include "mwtate/witt.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mwtate {

/// Isomorphism class of a rank-n bundle on HP^1: the Euler class orbit for n = 2, c2 for n >= 3.
struct Hp1BundleClass {
    int rank = 2;
    std::optional<GWElement> representative;
    std::optional<BigInt> c2;
    bool is_free = false;
    bool stably_free_nontrivial = false;

    friend bool operator==(const Hp1BundleClass&, const Hp1BundleClass&) = default;
};

/// Rank 2 from an Euler class. RankTooSmall if n < 2, InvalidParity on a bad GW value,
/// InvalidArgument if n >= 3 (those ranks take c2).
Hp1BundleClass hp1_classify(int n, const GWElement& euler);
/// Rank >= 3 from c2. RankTooSmall if n < 2, InvalidArgument if n == 2.
Hp1BundleClass hp1_classify(int n, const BigInt& c2);

/// Cells x0..x3 of weights 0..3 with one attachment signature(e) from x2 to x1.
TateComplex projective_bundle_hp1(const GWElement& e);

struct BlowupMotive {
    NormalForm total;
    /// decompose of the cone of g.
    NormalForm cone_part;
    /// The twisted copies of tensor(Z, Z/eta).
    NormalForm eta_terms;
};

/// Th is shifted up by n - 2 in weight; g runs from X cells of weight u to Th cells of
/// (unshifted) weight u - n + 1. Errors: OddCodimension, IllegalGysinEntry, NonComposableResult.
BlowupMotive blowup_motive(const TateComplex& X, const NormalForm& Z, int n, const TateComplex& Th,
                           const std::vector<EtaEntry>& g);

/// The eta-cone terms have zero Witt cohomology, so the eta-inverted groups of the total equal
/// those of the cone part (compared on |p|, |q| <= window).
CheckReport blowup_eta_check(const BlowupMotive& b, int window = 8);

}  // namespace mwtate
