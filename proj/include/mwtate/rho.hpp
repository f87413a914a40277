#pragma once

#include <map>
#include <string>
#include <vector>

namespace mwtate {

/// Summand shapes of complexes of graded Z/2[rho]-modules.
///  Line:       Z/2[rho] alone in chain degree d (the page of a free Tate cell).
///  FreeTower:  S  = (Z/2[rho] --0--> Z/2[rho]) in degrees d, d+1.
///  ConeTower:  S_j = (Z/2[rho] --rho^j--> Z/2[rho]) in degrees d, d+1, j >= 1.
/// A generator in chain degree a sits in internal weight a.
enum class RhoShape { Line, FreeTower, ConeTower };

struct RhoSummand {
    RhoShape shape;
    int j = 0;  // only for ConeTower
    int degree = 0;

    friend bool operator==(const RhoSummand&, const RhoSummand&) = default;
    friend bool operator<(const RhoSummand& a, const RhoSummand& b)
    {
        if (a.degree != b.degree)
            return a.degree < b.degree;
        if (a.shape != b.shape)
            return a.shape < b.shape;
        return a.j < b.j;
    }
};

class RhoComplex {
public:
    RhoComplex() = default;
    explicit RhoComplex(std::vector<RhoSummand> s);

    static RhoComplex line(int degree) { return RhoComplex({{RhoShape::Line, 0, degree}}); }
    static RhoComplex free_tower(int degree) { return RhoComplex({{RhoShape::FreeTower, 0, degree}}); }
    static RhoComplex cone_tower(int j, int degree);

    const std::vector<RhoSummand>& summands() const noexcept { return summands_; }
    RhoComplex& operator+=(const RhoComplex& other);
    RhoComplex shifted(int by) const;
    std::string to_string() const;

    friend bool operator==(const RhoComplex&, const RhoComplex&) = default;

private:
    std::vector<RhoSummand> summands_;
};

/// Derived tensor product over Z/2[rho], summand by summand.
RhoComplex rho_module_tensor(const RhoComplex& x, const RhoComplex& y);

/// Homology in one chain degree: free rank and the exponents j of Z/2[rho]/rho^j summands.
struct RhoHomology {
    std::size_t free = 0;
    std::vector<int> torsion;  // sorted

    friend bool operator==(const RhoHomology&, const RhoHomology&) = default;
};

/// Homology per chain degree. Over the PID Z/2[rho] this determines the complex up to
/// quasi-isomorphism, so it is used as the comparison invariant.
std::map<int, RhoHomology> rho_homology(const RhoComplex& x);

}  // namespace mwtate
