#pragma once

#include "mwtate/group.hpp"
#include "mwtate/motives.hpp"
#include "mwtate/witt.hpp"

#include <utility>
#include <vector>

namespace mwtate {

/// Free module over Z/2[rho, tau] given by generator bidegrees (p, q), sorted.
struct HModule {
    std::vector<std::pair<int, int>> generators;
    friend bool operator==(const HModule&, const HModule&) = default;
};

/// Chow groups: Free{i} gives Z at i, DyadicEta{t,i} gives Z at i and i+1.
GradedGroup chow(const NormalForm& a, bool mod2 = false);

/// Witt cohomology in the cochain convention; modulus 0 means integral coefficients.
GradedGroup witt_cohomology(const NormalForm& a, const BigInt& modulus = 0);

HModule mod2_motivic(const NormalForm& a);

/// The eta-inverted group I^{2q-p} H^{p-q}(A, W), as an abstract group.
FormalGroup eta_inverted(const NormalForm& a, int p, int q);

enum class HomCategory { MW, W };

/// [Z/l eta, Z(q)[p]] in the minimal coefficient model.
FormalGroup hom_cone(const BigInt& l, int p, int q, HomCategory cat);

/// [Z/s, Z(q)[p]] for the odd eta-local block Z/s (s odd): Z/s when p = q+1.
FormalGroup hom_odd_block(const BigInt& s, int p, int q);

/// MW cohomology of A in bidegree (2n, n), assembled block by block (minimal model).
FormalGroup mw_diagonal(const NormalForm& a, int n);

/// Invariants read off a cell complex without decomposing it.
GradedGroup chow_of_complex(const TateComplex& c, bool mod2 = false);
GradedGroup witt_cohomology_of_complex(const TateComplex& c, const BigInt& modulus = 0);

}  // namespace mwtate
