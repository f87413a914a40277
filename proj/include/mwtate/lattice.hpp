#pragma once

#include "mwtate/group.hpp"
#include "mwtate/matrix.hpp"
#include "mwtate/smith.hpp"

#include <memory>
#include <optional>

namespace mwtate {

/// Sublattice of Z^n stored by a basis (columns of an n x k matrix of full column rank).
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(std::size_t ambient) : basis_(ambient, 0) {}

    /// Sublattice generated by the columns of `gens` (any rank).
    static Lattice span(const IntMatrix& gens);
    static Lattice full(std::size_t ambient);

    std::size_t ambient() const noexcept { return basis_.rows(); }
    std::size_t rank() const noexcept { return basis_.cols(); }
    const IntMatrix& basis() const noexcept { return basis_; }

    /// Coordinates of v in the basis, if v lies in the lattice.
    std::optional<IntVector> coordinates(const IntVector& v) const;
    bool contains(const IntVector& v) const { return coordinates(v).has_value(); }
    bool contains(const Lattice& other) const;
    /// Coordinates of every basis vector of `sub` (must be contained).
    IntMatrix coordinates_of(const Lattice& sub) const;

    Lattice operator+(const Lattice& other) const;
    Lattice intersect(const Lattice& other) const;
    Lattice scaled(const BigInt& k) const;

    friend bool operator==(const Lattice& a, const Lattice& b) { return a.contains(b) && b.contains(a); }

private:
    void set_basis(IntMatrix b);

    IntMatrix basis_;
    std::shared_ptr<const SmithReduction> red_;
};

/// The abelian group Z/B for lattices B ⊆ Z ⊆ Z^n.
struct Subquotient {
    Lattice Z;
    Lattice B;

    static Subquotient make(Lattice z, Lattice b);
    std::size_t ambient() const { return Z.ambient(); }
    FormalGroup structure() const;
    /// Structure of L/B for an intermediate lattice B ⊆ L ⊆ Z.
    FormalGroup structure_of(const Lattice& L) const;
    bool is_zero_element(const IntVector& v) const { return B.contains(v); }
};

/// Homomorphism of subquotients, given as a matrix taking Z-coordinates of the source
/// to ambient vectors of the target (which must lie in the target's Z).
struct SubHom {
    Subquotient source;
    Subquotient target;
    IntMatrix F;

    IntVector apply(const IntVector& ambient_vec) const;
    /// Image of an intermediate lattice of the source, as a lattice containing target.B.
    Lattice image(const Lattice& L) const;
    Lattice image() const { return image(source.Z); }
    /// Preimage of an intermediate lattice of the target.
    Lattice preimage(const Lattice& L) const;
    Lattice kernel() const { return preimage(target.B); }
    /// Checks that F maps Z into target.Z and B into target.B.
    bool well_defined() const;
};

/// Direct sum of subquotients in the concatenated ambient space.
Subquotient direct_sum(const Subquotient& a, const Subquotient& b);

}  // namespace mwtate
