#pragma once

#include "mwtate/group.hpp"
#include "mwtate/matrix.hpp"

#include <map>
#include <optional>
#include <vector>

namespace mwtate {

/// Bounded complex of free Z-modules with differentials d_w : C_{w+1} -> C_w.
/// d_w has rank(C_w) rows and rank(C_{w+1}) columns.
class FreeComplex {
public:
    void set_rank(int degree, std::size_t rank);
    /// Installs d_w; its shape must match the current ranks.
    void set_differential(int w, IntMatrix d);

    std::size_t rank(int degree) const;
    /// d_w, or a zero matrix of the right shape.
    IntMatrix differential(int w) const;
    /// Degrees with nonzero rank, ascending.
    std::vector<int> degrees() const;
    bool empty() const { return degrees().empty(); }

    /// Lowest w with d_w * d_{w+1} != 0, if any.
    std::optional<int> composability_failure() const;
    /// Throws NonComposable if some consecutive product is nonzero.
    void require_composable() const;

private:
    std::map<int, std::size_t> ranks_;
    std::map<int, IntMatrix> diffs_;
};

struct FreeCell {
    int degree;
    friend auto operator<=>(const FreeCell&, const FreeCell&) = default;
};

/// Generator at lower_degree+1 mapping to n times a generator at lower_degree.
struct ConePair {
    BigInt n;
    int lower_degree;
    friend bool operator==(const ConePair&, const ConePair&) = default;
    friend bool operator<(const ConePair& a, const ConePair& b)
    {
        if (a.lower_degree != b.lower_degree)
            return a.lower_degree < b.lower_degree;
        return a.n < b.n;
    }
};

struct FreeDecomposition {
    std::vector<FreeCell> free_cells;
    std::vector<ConePair> cones;
    /// Per degree: columns are the adapted basis in original coordinates, and its inverse.
    std::map<int, IntMatrix> basis;
    std::map<int, IntMatrix> basis_inverse;
};

/// Splits C into elementary summands by iterated Smith normal form.
FreeDecomposition decompose_free_complex(const FreeComplex& c);

/// Complex assembled from elementary summands (one generator per free cell, two per cone).
FreeComplex assemble(const std::vector<FreeCell>& cells, const std::vector<ConePair>& cones);

/// Cohomology of Hom(C, Z) (m = 0) or Hom(C, Z/m).
GradedGroup integer_cohomology(const FreeComplex& c, const BigInt& m = 0);

}  // namespace mwtate
