#pragma once

#include "mwtate/bigint.hpp"

#include <map>
#include <string>
#include <vector>

namespace mwtate {

/// Prime-power factorization of |n| >= 2 as (p, p^e) pairs, ascending in p.
std::vector<std::pair<BigInt, BigInt>> prime_power_split(const BigInt& n);
bool is_prime(const BigInt& n);

/// Finitely generated abelian group Z^free ⊕ ⊕ Z/(p^e), torsion CRT-split.
class FormalGroup {
public:
    FormalGroup() = default;

    static FormalGroup zero() { return {}; }
    static FormalGroup free(std::size_t rank);
    /// Z/n for n >= 0 (n = 0 gives Z, n = 1 the zero group).
    static FormalGroup cyclic(const BigInt& n);
    /// From invariant factors as produced by Smith normal form (0 = Z summand).
    static FormalGroup from_invariants(const std::vector<BigInt>& factors);

    std::size_t free_rank() const noexcept { return free_rank_; }
    const std::vector<BigInt>& torsion() const noexcept { return torsion_; }
    bool is_zero() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const noexcept { return free_rank_ == 0; }

    /// Order of the torsion subgroup.
    BigInt torsion_order() const;
    /// Exponent of the largest 2-primary cyclic summand, 0 if none.
    unsigned max_dyadic_exponent() const;
    /// Multiplicity of Z/2^e among the torsion summands.
    std::size_t dyadic_count(unsigned e) const;
    FormalGroup two_primary() const;
    FormalGroup odd_part() const;

    FormalGroup& operator+=(const FormalGroup& other);
    friend FormalGroup operator+(FormalGroup a, const FormalGroup& b) { return a += b; }

    /// G ⊗ Z/m (m >= 0).
    FormalGroup tensor_cyclic(const BigInt& m) const;
    /// Tor(G, Z/m) (m >= 0).
    FormalGroup tor_cyclic(const BigInt& m) const;
    /// ℤ/2-dimension of G ⊗ Z/2.
    std::size_t mod2_dimension() const;

    std::string to_string() const;

    friend bool operator==(const FormalGroup&, const FormalGroup&) = default;
    friend bool operator<(const FormalGroup& a, const FormalGroup& b)
    {
        if (a.free_rank_ != b.free_rank_)
            return a.free_rank_ < b.free_rank_;
        return a.torsion_ < b.torsion_;
    }

private:
    void add_torsion(const BigInt& n);
    void normalize();

    std::size_t free_rank_ = 0;
    std::vector<BigInt> torsion_;
};

/// Groups indexed by an integer degree; absent degrees are zero.
class GradedGroup {
public:
    using Map = std::map<int, FormalGroup>;

    const FormalGroup& operator[](int degree) const;
    void add(int degree, const FormalGroup& g);
    void set(int degree, const FormalGroup& g);

    const Map& degrees() const noexcept { return groups_; }
    bool is_zero() const noexcept { return groups_.empty(); }
    /// Degree-wise direct sum.
    GradedGroup& operator+=(const GradedGroup& other);
    GradedGroup shifted(int by) const;

    std::string to_string() const;
    friend bool operator==(const GradedGroup&, const GradedGroup&) = default;

private:
    Map groups_;
};

}  // namespace mwtate
