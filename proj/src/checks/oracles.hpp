#pragma once

#include "mwtate/group.hpp"

namespace mwtate::checks {

/// Cochain Künneth over Z: sum of H^a ⊗ H^b at a+b plus Tor(H^a, H^b) at a+b-1,
/// computed from cyclic decompositions summand by summand.
GradedGroup graded_kunneth(const GradedGroup& a, const GradedGroup& b);

/// Tensor of graded groups without Tor terms.
GradedGroup graded_tensor(const GradedGroup& a, const GradedGroup& b);

}  // namespace mwtate::checks

namespace mwtate::checks {

/// dim E_i^{p,q}(Z/2^j eta) read directly from the four-case table (j >= 1, i >= 2).
inline std::size_t higher_table_dim(int j, int i, int p, int q)
{
    if (i <= j + 1 && p == q && q >= 0)
        return 1;
    if (i <= j + 1 && p == q + 1 && q >= 1)
        return 1;
    if (p == q + 1 && 0 < q && q < j + 1)
        return 1;
    return 0;
}

/// Whether the page-i differential leaving (p, q) is nonzero for Z/2^j eta.
inline bool higher_table_differential(int j, int i, int p, int q)
{
    return p == q && q >= 0 && i == j + 1;
}

}  // namespace mwtate::checks
