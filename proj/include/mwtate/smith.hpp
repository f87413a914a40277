#pragma once

#include "mwtate/matrix.hpp"

#include <optional>
#include <vector>

namespace mwtate {

/// U * M * V = S with U, V unimodular and S diagonal, d1 | d2 | ..., di >= 0.
struct SmithForm {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;
};

/// Full reduction data: also carries U^{-1}, V^{-1} and the rank.
struct SmithReduction {
    IntMatrix U, Uinv;
    IntMatrix S;
    IntMatrix V, Vinv;
    std::size_t rank = 0;

    /// Nonzero diagonal entries d1 | d2 | ... | d_rank.
    std::vector<BigInt> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);
SmithReduction smith_reduce(const IntMatrix& m);

/// Basis (as columns) of the integer kernel {x : M x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// Some integer x with M x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b);

}  // namespace mwtate
