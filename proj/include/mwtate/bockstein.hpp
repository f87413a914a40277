#pragma once

#include "mwtate/cohomology.hpp"
#include "mwtate/group.hpp"
#include "mwtate/motives.hpp"
#include "mwtate/rho.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mwtate {

enum class TowerLabel { U, V, Plain };

std::string_view label_name(TowerLabel l);

/// A rho-cyclic tower: entries at (p+k, q+k) for 0 <= k < height (height empty = infinite).
/// Its row is p - q, the chain degree of the page complex.
struct Tower {
    int p = 0;
    int q = 0;
    std::optional<int> height;
    TowerLabel label = TowerLabel::Plain;

    int row() const { return p - q; }
    bool infinite() const { return !height.has_value(); }
    /// Index k with (p+k, q+k) = (pp, qq), if that entry is nonzero.
    std::optional<int> index_at(int pp, int qq) const;

    friend bool operator==(const Tower&, const Tower&) = default;
    friend bool operator<(const Tower& a, const Tower& b);
};

/// Differential component: entry k of `from` goes to entry k + power of `to`.
struct Arrow {
    std::size_t from;
    std::size_t to;
    int power;
};

/// One page E_i of the Bockstein spectral sequence, with its differential of bidegree (i+1, i).
class Page {
public:
    Page() = default;
    explicit Page(int index) : index_(index) {}

    int index() const noexcept { return index_; }
    const std::vector<Tower>& towers() const noexcept { return towers_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

    std::size_t add_tower(const Tower& t);
    void add_arrow(std::size_t from, std::size_t to, int power);
    /// Appends the towers and arrows of another page.
    Page& operator+=(const Page& other);
    /// Sorts towers canonically and remaps arrows.
    void normalize();

    /// Z/2-dimension in bidegree (p, q).
    std::size_t dim(int p, int q) const;
    /// Rank of the differential leaving bidegree (p, q).
    std::size_t differential_rank(int p, int q) const;
    /// Least and greatest q of a base among the towers.
    std::pair<int, int> base_q_range() const;

    std::string to_string() const;

    /// Towers compared as a multiset; arrows as a multiset of (source, target, power).
    friend bool operator==(const Page& a, const Page& b);

private:
    int index_ = 2;
    std::vector<Tower> towers_;
    std::vector<Arrow> arrows_;
};

/// Closed-form page of one atomic block; PageTooSmall for i < 2.
Page block_pages(const AtomicBlock& b, int i);
/// Direct sum of block pages.
Page pages(const NormalForm& a, int i);
/// Page read off Witt cohomology in the cochain convention; odd torsion is ignored.
Page pages_from_witt(const GradedGroup& h, int i);
/// r + 2, where 2^r is the largest dyadic torsion order in the Witt cohomology.
int degeneracy_page(const NormalForm& a);

/// The page complex E_i(A) over Z/2[rho] as a sum of Line, S and S_j summands.
RhoComplex page_complex(const NormalForm& a, int i);
/// The same complex read from page data: lone towers, arrow pairs, truncated towers.
RhoComplex page_complex(const Page& page);

struct CheckReport {
    bool holds = true;
    std::vector<std::string> trace;
    std::vector<std::string> failures;

    void fail(std::string msg)
    {
        holds = false;
        failures.push_back(std::move(msg));
    }
};

/// Compares E_i(A) (x)^L E_i(B) with E_i(A (x) B) for every page from 2 to the joint
/// degeneration page; the first discrepancy (if any) is reported.
CheckReport kunneth_e2(const NormalForm& a, const NormalForm& b);

/// Dimension additivity of 0 -> E_i(A)[-2,-1] -> E_i(A/2^j eta) -> E_i(A) -> 0 for
/// 2 <= i <= j+1, and the dimension count of the rho^j long exact sequence on page j+2.
CheckReport truncated_check(const NormalForm& a, int j);

/// Pages of Z/2^j eta (x) Z/2^k eta computed from the product basis with the Leibniz
/// differential, compared page by page against the closed-form block pages.
CheckReport leibniz_check(int j, int k);

struct VGroupResult {
    std::size_t dim_V = 0;
    FormalGroup fiber_product;
    /// dim E_{j+2}^{2n+2,n+1}(A/2^j eta) agrees with the mod 2 rank of H^n(A, W/2^j).
    bool consistent = true;
};

/// V(A, j)^n = {(x, y) : beta^{j+1}(x) = rho^j y} and its fiber product with
/// H^n(A, W/2^j) over E_{j+2}^{2n+2,n+1}(A/2^j eta).
VGroupResult v_group(const NormalForm& a, int j, int n);

}  // namespace mwtate
