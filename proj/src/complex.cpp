#include "mwtate/complex.hpp"

#include "mwtate/error.hpp"
#include "mwtate/smith.hpp"

#include <algorithm>

namespace mwtate {

void FreeComplex::set_rank(int degree, std::size_t rank)
{
    if (rank == 0)
        ranks_.erase(degree);
    else
        ranks_[degree] = rank;
}

void FreeComplex::set_differential(int w, IntMatrix d)
{
    if (d.rows() != rank(w) || d.cols() != rank(w + 1))
        throw Error(ErrorCode::DimensionMismatch, "differential shape does not match ranks");
    if (d.is_zero())
        diffs_.erase(w);
    else
        diffs_[w] = std::move(d);
}

std::size_t FreeComplex::rank(int degree) const
{
    auto it = ranks_.find(degree);
    return it == ranks_.end() ? 0 : it->second;
}

IntMatrix FreeComplex::differential(int w) const
{
    auto it = diffs_.find(w);
    if (it != diffs_.end())
        return it->second;
    return IntMatrix(rank(w), rank(w + 1));
}

std::vector<int> FreeComplex::degrees() const
{
    std::vector<int> out;
    for (const auto& [d, r] : ranks_)
        out.push_back(d);
    return out;
}

std::optional<int> FreeComplex::composability_failure() const
{
    for (const auto& [w, d] : diffs_) {
        auto next = diffs_.find(w + 1);
        if (next != diffs_.end() && !(d * next->second).is_zero())
            return w;
    }
    return std::nullopt;
}

void FreeComplex::require_composable() const
{
    if (auto w = composability_failure())
        throw Error(ErrorCode::NonComposable,
                    "d_" + std::to_string(*w) + " * d_" + std::to_string(*w + 1) + " is nonzero");
}

namespace {

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            m(a.rows() + r, a.cols() + c) = b(r, c);
    return m;
}

}  // namespace

FreeDecomposition decompose_free_complex(const FreeComplex& c)
{
    c.require_composable();
    FreeDecomposition out;
    auto degs = c.degrees();
    if (degs.empty())
        return out;

    // Invariant at the start of step w: C_w carries basis V (columns) whose first
    // `paired` vectors are cone sources for degree w-1; the rest span ker d_{w-1}.
    IntMatrix V = IntMatrix::identity(c.rank(degs.front()));
    IntMatrix Vinv = V;
    std::size_t paired = 0;
    for (int w = degs.front(); w <= degs.back(); ++w) {
        const std::size_t n = c.rank(w);
        const std::size_t kdim = n - paired;
        IntMatrix d = Vinv * c.differential(w);  // C_{w+1} -> C_w in the V basis
        IntMatrix M = d.block(paired, n, 0, d.cols());
        auto red = smith_reduce(M);

        out.basis[w] = V * block_diag(IntMatrix::identity(paired), red.Uinv);
        out.basis_inverse[w] = block_diag(IntMatrix::identity(paired), red.U) * Vinv;
        for (std::size_t i = 0; i < red.rank; ++i)
            out.cones.push_back({red.S(i, i), w});
        for (std::size_t i = red.rank; i < kdim; ++i)
            out.free_cells.push_back({w});

        V = red.V;
        Vinv = red.Vinv;
        paired = red.rank;
    }
    std::sort(out.free_cells.begin(), out.free_cells.end());
    std::sort(out.cones.begin(), out.cones.end());
    return out;
}

FreeComplex assemble(const std::vector<FreeCell>& cells, const std::vector<ConePair>& cones)
{
    std::map<int, std::size_t> ranks;
    for (const auto& f : cells)
        ++ranks[f.degree];
    for (const auto& p : cones) {
        ++ranks[p.lower_degree];
        ++ranks[p.lower_degree + 1];
    }
    FreeComplex out;
    for (const auto& [d, r] : ranks)
        out.set_rank(d, r);
    std::map<int, IntMatrix> diffs;
    std::map<int, std::size_t> next;  // next unused generator index per degree
    for (const auto& f : cells)
        ++next[f.degree];
    for (const auto& p : cones) {
        int w = p.lower_degree;
        auto& d = diffs.try_emplace(w, IntMatrix(out.rank(w), out.rank(w + 1))).first->second;
        d(next[w]++, next[w + 1]++) = p.n;
    }
    for (auto& [w, d] : diffs)
        out.set_differential(w, std::move(d));
    return out;
}

GradedGroup integer_cohomology(const FreeComplex& c, const BigInt& m)
{
    c.require_composable();
    GradedGroup integral;
    auto degs = c.degrees();
    if (degs.empty())
        return integral;
    for (int w = degs.front(); w <= degs.back() + 1; ++w) {
        const std::size_t n = c.rank(w);
        if (n == 0)
            continue;
        // cocycles: ker of delta^w = d_w^T; coboundaries: image of d_{w-1}^T
        auto red = smith_reduce(c.differential(w).transpose());
        const std::size_t kdim = n - red.rank;
        IntMatrix inc = c.differential(w - 1).transpose();
        IntMatrix coords = red.Vinv * inc;  // rows >= rank are coordinates inside the kernel
        IntMatrix rel = coords.block(red.rank, n, 0, coords.cols());
        std::vector<BigInt> factors;
        std::size_t r = 0;
        if (!rel.empty()) {
            auto rr = smith_reduce(rel);
            factors = rr.invariant_factors();
            r = rr.rank;
        }
        for (std::size_t i = r; i < kdim; ++i)
            factors.push_back(0);
        integral.add(w, FormalGroup::from_invariants(factors));
    }
    if (m == 0)
        return integral;
    GradedGroup out;
    for (int w = degs.front() - 1; w <= degs.back() + 1; ++w)
        out.add(w, integral[w].tensor_cyclic(m) + integral[w + 1].tor_cyclic(m));
    return out;
}

}  // namespace mwtate
