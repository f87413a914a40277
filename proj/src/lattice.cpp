#include "mwtate/lattice.hpp"

#include "mwtate/error.hpp"
#include "mwtate/smith.hpp"

namespace mwtate {

Lattice Lattice::span(const IntMatrix& gens)
{
    Lattice out(gens.rows());
    if (gens.cols() == 0)
        return out;
    auto red = smith_reduce(gens);
    // gens * V = Uinv * S, so the first `rank` columns of Uinv scaled by d_i form a basis.
    IntMatrix b(gens.rows(), red.rank);
    for (std::size_t c = 0; c < red.rank; ++c)
        for (std::size_t r = 0; r < gens.rows(); ++r)
            b(r, c) = red.Uinv(r, c) * red.S(c, c);
    out.set_basis(std::move(b));
    return out;
}

Lattice Lattice::full(std::size_t ambient)
{
    Lattice out(ambient);
    out.set_basis(IntMatrix::identity(ambient));
    return out;
}

void Lattice::set_basis(IntMatrix b)
{
    basis_ = std::move(b);
    red_ = std::make_shared<const SmithReduction>(smith_reduce(basis_));
}

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const
{
    if (v.size() != ambient())
        throw Error(ErrorCode::DimensionMismatch, "vector length does not match lattice ambient");
    if (rank() == 0) {
        for (const auto& e : v)
            if (e != 0)
                return std::nullopt;
        return IntVector{};
    }
    // basis has full column rank, so S is square-diagonal on top
    IntVector ub = red_->U * v;
    IntVector y(rank());
    for (std::size_t k = 0; k < ub.size(); ++k) {
        if (k < rank()) {
            if (ub[k] % red_->S(k, k) != 0)
                return std::nullopt;
            y[k] = ub[k] / red_->S(k, k);
        } else if (ub[k] != 0) {
            return std::nullopt;
        }
    }
    return red_->V * y;
}

bool Lattice::contains(const Lattice& other) const
{
    for (std::size_t c = 0; c < other.rank(); ++c)
        if (!contains(other.basis_.column(c)))
            return false;
    return true;
}

IntMatrix Lattice::coordinates_of(const Lattice& sub) const
{
    std::vector<IntVector> cols;
    for (std::size_t c = 0; c < sub.rank(); ++c) {
        auto x = coordinates(sub.basis_.column(c));
        if (!x)
            throw Error(ErrorCode::InvalidArgument, "lattice is not contained in the reference lattice");
        cols.push_back(std::move(*x));
    }
    return IntMatrix::from_columns(rank(), cols);
}

Lattice Lattice::operator+(const Lattice& other) const
{
    if (ambient() != other.ambient())
        throw Error(ErrorCode::DimensionMismatch, "lattice ambients differ");
    return span(basis_.hcat(other.basis_));
}

Lattice Lattice::intersect(const Lattice& other) const
{
    if (ambient() != other.ambient())
        throw Error(ErrorCode::DimensionMismatch, "lattice ambients differ");
    if (rank() == 0 || other.rank() == 0)
        return Lattice(ambient());
    // a x = b y  <=>  [A | -B] (x; y) = 0
    IntMatrix joint = basis_.hcat(scale(other.basis_, -1));
    IntMatrix ker = integer_kernel(joint);
    IntMatrix xs = ker.block(0, rank(), 0, ker.cols());
    return span(basis_ * xs);
}

Lattice Lattice::scaled(const BigInt& k) const { return span(scale(basis_, k)); }

Subquotient Subquotient::make(Lattice z, Lattice b)
{
    if (!z.contains(b))
        throw Error(ErrorCode::InvalidArgument, "relation lattice is not inside the cycle lattice");
    return {std::move(z), std::move(b)};
}

FormalGroup Subquotient::structure() const { return structure_of(Z); }

FormalGroup Subquotient::structure_of(const Lattice& L) const
{
    IntMatrix rel = L.coordinates_of(B);
    std::vector<BigInt> factors;
    std::size_t nonzero = 0;
    if (rel.cols() > 0 && rel.rows() > 0) {
        auto red = smith_reduce(rel);
        factors = red.invariant_factors();
        nonzero = red.rank;
    }
    for (std::size_t i = nonzero; i < L.rank(); ++i)
        factors.push_back(0);
    return FormalGroup::from_invariants(factors);
}

IntVector SubHom::apply(const IntVector& ambient_vec) const
{
    auto c = source.Z.coordinates(ambient_vec);
    if (!c)
        throw Error(ErrorCode::InvalidArgument, "element is not a cycle of the source");
    if (c->empty())
        return IntVector(target.ambient());
    return F * *c;
}

Lattice SubHom::image(const Lattice& L) const
{
    IntMatrix coords = source.Z.coordinates_of(L);
    IntMatrix imgs = coords.cols() == 0 ? IntMatrix(target.ambient(), 0) : F * coords;
    return Lattice::span(imgs.hcat(target.B.basis()));
}

Lattice SubHom::preimage(const Lattice& L) const
{
    const std::size_t z = source.Z.rank();
    if (z == 0)
        return Lattice(source.ambient());
    // F c = L y  <=>  [F | -L] (c; y) = 0
    IntMatrix joint = F.hcat(scale(L.basis(), -1));
    IntMatrix ker = integer_kernel(joint);
    IntMatrix cs = ker.block(0, z, 0, ker.cols());
    return Lattice::span((source.Z.basis() * cs).hcat(source.B.basis()));
}

bool SubHom::well_defined() const
{
    if (F.rows() != target.ambient() || F.cols() != source.Z.rank())
        return false;
    for (std::size_t c = 0; c < F.cols(); ++c)
        if (!target.Z.contains(F.column(c)))
            return false;
    return target.B.contains(image(source.B));
}

Subquotient direct_sum(const Subquotient& a, const Subquotient& b)
{
    auto block = [](const IntMatrix& x, const IntMatrix& y) {
        IntMatrix m(x.rows() + y.rows(), x.cols() + y.cols());
        for (std::size_t r = 0; r < x.rows(); ++r)
            for (std::size_t c = 0; c < x.cols(); ++c)
                m(r, c) = x(r, c);
        for (std::size_t r = 0; r < y.rows(); ++r)
            for (std::size_t c = 0; c < y.cols(); ++c)
                m(x.rows() + r, x.cols() + c) = y(r, c);
        return m;
    };
    return {Lattice::span(block(a.Z.basis(), b.Z.basis())), Lattice::span(block(a.B.basis(), b.B.basis()))};
}

}  // namespace mwtate
