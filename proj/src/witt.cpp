#include "mwtate/witt.hpp"

#include "mwtate/error.hpp"

namespace mwtate {

void GWElement::validate() const
{
    if ((rank - signature) % 2 != 0)
        throw Error(ErrorCode::InvalidParity,
                    "rank " + rank.str() + " and signature " + signature.str() + " differ in parity");
}

GWElement gw_ring(GWOp op, const GWElement& a, const GWElement& b)
{
    a.validate();
    if (op != GWOp::Neg)
        b.validate();
    switch (op) {
    case GWOp::Add: return {a.rank + b.rank, a.signature + b.signature};
    case GWOp::Mul: return {a.rank * b.rank, a.signature * b.signature};
    case GWOp::Neg: return {-a.rank, -a.signature};
    }
    return {};
}

GWElement p_bold(const BigInt& p)
{
    if (p < 1 || p % 2 == 0)
        throw Error(ErrorCode::EvenInput, "p must be odd and positive, got " + p.str());
    return {1, p};
}

bool in_ideal_power(const WittClass& w, int q)
{
    if (q <= 0)
        return true;
    return w.value % pow2(static_cast<unsigned>(q)) == 0;
}

IdealFiltration ideal_filtration(const WittClass& w, int q, const BigInt& s, unsigned t)
{
    if (s % 2 == 0)
        throw Error(ErrorCode::EvenS, "s must be odd, got " + s.str());
    if (q < 1)
        throw Error(ErrorCode::InvalidArgument, "quotient queries need q >= 1");
    IdealFiltration f;
    f.in_Iq = in_ideal_power(w, q);
    // I^q = 2^q Z, so I^q / s I^q = Z/s and I^{q-1} / 2^t I^q = 2^{q-1} Z / 2^{q+t} Z.
    f.Iq_mod_sIq = FormalGroup::cyclic(abs(s));
    f.Iq1_mod_2tIq = FormalGroup::cyclic(pow2(t + 1));
    return f;
}

GWElement kx_orbit_canonical(const GWElement& e)
{
    e.validate();
    return {e.rank, abs(e.signature)};
}

namespace minimal_model {

FormalGroup motivic_mod2(int a, int b)
{
    return (0 <= a && a <= b) ? FormalGroup::cyclic(2) : FormalGroup::zero();
}

FormalGroup motivic_integral(int a, int b)
{
    if (a == 0 && b == 0)
        return FormalGroup::free(1);
    if (a == b && a >= 1)
        return FormalGroup::cyclic(2);
    return FormalGroup::zero();
}

FormalGroup two_milnor_k(int q) { return q == 0 ? FormalGroup::free(1) : FormalGroup::zero(); }

}  // namespace minimal_model

std::string to_string(const GWElement& e) { return "(" + e.rank.str() + ", " + e.signature.str() + ")"; }

}  // namespace mwtate
