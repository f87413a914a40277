#pragma once

#include "mwtate/bigint.hpp"
#include "mwtate/group.hpp"

#include <string>

namespace mwtate {

/// Element of GW(k) for Euclidean k, identified with (rank, signature), rank ≡ signature mod 2.
struct GWElement {
    BigInt rank;
    BigInt signature;

    /// Throws InvalidParity unless rank and signature have equal parity.
    void validate() const;

    static GWElement epsilon() { return {-1, 1}; }
    static GWElement minus_one() { return {1, -1}; }  // <-1>
    static GWElement one() { return {1, 1}; }

    friend bool operator==(const GWElement&, const GWElement&) = default;
};

enum class GWOp { Add, Mul, Neg };

GWElement gw_ring(GWOp op, const GWElement& a, const GWElement& b = {});
inline GWElement operator+(const GWElement& a, const GWElement& b) { return gw_ring(GWOp::Add, a, b); }
inline GWElement operator*(const GWElement& a, const GWElement& b) { return gw_ring(GWOp::Mul, a, b); }
inline GWElement operator-(const GWElement& a) { return gw_ring(GWOp::Neg, a); }

/// The sum of eps^i for i < p; p odd and positive, else EvenInput.
GWElement p_bold(const BigInt& p);

/// Image of GW(k) -> W(k) = Z.
struct WittClass {
    BigInt value;
    friend bool operator==(const WittClass&, const WittClass&) = default;
};

inline WittClass witt_image(const GWElement& e) { return {e.signature}; }

struct IdealFiltration {
    bool in_Iq;
    FormalGroup Iq_mod_sIq;
    FormalGroup Iq1_mod_2tIq;
};

/// I^m inside W(k) = Z is 2^max(m,0) Z.
bool in_ideal_power(const WittClass& w, int q);
/// I^q / s I^q and I^{q-1} / 2^t I^q (s odd, t >= 0, q >= 1).
IdealFiltration ideal_filtration(const WittClass& w, int q, const BigInt& s, unsigned t);

/// Canonical representative of the k^x-orbit {(r, s), (r, -s)}: signature >= 0.
GWElement kx_orbit_canonical(const GWElement& e);

/// Coefficient values with the 2-divisible summands of Milnor K-theory set to zero.
enum class CoefficientModel { MinimalEuclidean };

inline std::string model_name(CoefficientModel) { return "minimal-euclidean"; }

namespace minimal_model {

/// H^{a,b}_M(k, Z/2): Z/2 (the monomial rho^a tau^{b-a}) for 0 <= a <= b.
FormalGroup motivic_mod2(int a, int b);
/// H^{a,b}_M(k, Z): Z at (0,0), Z/2 at a = b >= 1.
FormalGroup motivic_integral(int a, int b);
/// 2 K^M_q(k): Z for q = 0, zero otherwise.
FormalGroup two_milnor_k(int q);

}  // namespace minimal_model

std::string to_string(const GWElement& e);

}  // namespace mwtate
