#pragma once

#include "mwtate/complex.hpp"
#include "mwtate/group.hpp"
#include "mwtate/lattice.hpp"

#include <map>
#include <optional>
#include <vector>

namespace mwtate {

/// Graded exact couple D --i--> D --j--> E --k--> D with every group a subquotient of a
/// free Z-module. Maps are keyed by source degree; i, j, k raise degree by di, dj, dk.
struct ExactCouple {
    std::map<int, Subquotient> D, E;
    std::map<int, SubHom> i, j, k;
    int di = 0, dj = 0, dk = 1;

    /// The group in a degree, or the zero subquotient of rank-0 ambient.
    const Subquotient& d_at(int n) const;
    const Subquotient& e_at(int n) const;
    std::vector<int> degrees() const;

    /// First failure of exactness at D or E, described; empty if exact.
    std::optional<std::string> exactness_failure() const;

    /// Mod-m Bockstein couple of a chain complex (d_w : C_{w+1} -> C_w): D = H(C), E = H(C/m),
    /// i = multiplication by m, j = reduction, k = connecting map (degree -1).
    static ExactCouple bockstein(const FreeComplex& c, const BigInt& m = 2);
};

/// Derived couple: D' = i(D), E' = ker(jk)/im(jk), i' = i|, j'(i x) = [j x], k' = k|.
/// Throws InexactCouple if the input is not exact.
ExactCouple couple_derive(const ExactCouple& x);

struct CoupleAnalysis {
    /// E_1, E_2, ... computed by iterated derivation.
    std::vector<GradedGroup> pages;
    GradedGroup e_infinity;
    /// Least r >= 1 with ker(i^{r+1}) = ker(i^r) in every degree.
    int torsion_order = 1;
    /// E_{r+1} = ker(k)/j(ker i^infinity) as subquotients, and E_{r+1} = E_{r+2}.
    bool degenerates = false;
    /// 0 -> D_1 ∩ ker(i^inf) -> D -> ker(k) ⊕ D-bar -> E_inf -> 0 is exact in every degree.
    bool four_term_exactness = false;
    /// For every tested x in ker(i^inf): x = 0 iff j^(n)(x) = 0 for all n < r.
    bool identification_holds = false;
    /// Direct Z_n/B_n agrees with iterated derivation.
    bool pages_agree = false;
    /// When r = 1: D is the fiber product of ker(k) and D-bar over E_2.
    std::optional<bool> cartesian;
};

/// Pages up to max(min_pages, r + 2). Throws InexactCouple if the couple is not exact.
CoupleAnalysis couple_analyze(const ExactCouple& x, int min_pages = 2);

}  // namespace mwtate
