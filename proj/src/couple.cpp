#include "mwtate/couple.hpp"

#include "mwtate/error.hpp"
#include "mwtate/smith.hpp"

#include <set>

namespace mwtate {

namespace {

const Subquotient& zero_subquotient()
{
    static const Subquotient z{Lattice(0), Lattice(0)};
    return z;
}

const SubHom* find(const std::map<int, SubHom>& m, int n)
{
    auto it = m.find(n);
    return it == m.end() ? nullptr : &it->second;
}

/// Z-coordinates (in `q.Z`) of the columns of an ambient matrix.
IntMatrix z_coords(const Subquotient& q, const IntMatrix& cols)
{
    std::vector<IntVector> out;
    for (std::size_t c = 0; c < cols.cols(); ++c) {
        auto x = q.Z.coordinates(cols.column(c));
        if (!x)
            throw Error(ErrorCode::InexactCouple, "map leaves the cycle lattice of its target");
        out.push_back(std::move(*x));
    }
    return IntMatrix::from_columns(q.Z.rank(), out);
}

IntMatrix mul(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() == 0 || b.cols() == 0)
        return IntMatrix(a.rows(), b.cols());
    return a * b;
}

/// g after f.
SubHom compose(const SubHom& g, const SubHom& f) { return {f.source, g.target, mul(g.F, z_coords(g.source, f.F))}; }

/// Zero homomorphism between two subquotients.
SubHom zero_hom(const Subquotient& s, const Subquotient& t) { return {s, t, IntMatrix(t.ambient(), s.Z.rank())}; }

/// Image lattice of a map into `target`, or target.B when the map is absent.
Lattice image_or_b(const SubHom* h, const Subquotient& target) { return h ? h->image() : target.B; }

/// Kernel lattice of a map out of `source`, or source.Z when the map is absent.
Lattice kernel_or_z(const SubHom* h, const Subquotient& source) { return h ? h->kernel() : source.Z; }

/// i^n as a map out of degree m (identity when n = 0).
SubHom i_power(const ExactCouple& x, int m, int n)
{
    const Subquotient& src = x.d_at(m);
    SubHom acc{src, src, src.Z.basis()};
    for (int s = 0; s < n; ++s) {
        int deg = m + s * x.di;
        const SubHom* h = find(x.i, deg);
        SubHom step = h ? *h : zero_hom(x.d_at(deg), x.d_at(deg + x.di));
        acc = compose(step, acc);
    }
    return acc;
}

/// ker(i^n) inside D^m.
Lattice ker_i_power(const ExactCouple& x, int m, int n) { return i_power(x, m, n).kernel(); }

/// Im(i^n) inside D^m (plus the boundary lattice).
Lattice im_i_power(const ExactCouple& x, int m, int n)
{
    int src = m - n * x.di;
    if (x.D.count(src) == 0 && n > 0)
        return x.d_at(m).B;
    return i_power(x, src, n).image();
}

bool lattice_map_equal(const std::map<int, Lattice>& a, const std::map<int, Lattice>& b)
{
    for (const auto& [n, l] : a) {
        auto it = b.find(n);
        if (it == b.end() || !(it->second == l))
            return false;
    }
    return a.size() == b.size();
}

}  // namespace

const Subquotient& ExactCouple::d_at(int n) const
{
    auto it = D.find(n);
    return it == D.end() ? zero_subquotient() : it->second;
}

const Subquotient& ExactCouple::e_at(int n) const
{
    auto it = E.find(n);
    return it == E.end() ? zero_subquotient() : it->second;
}

std::vector<int> ExactCouple::degrees() const
{
    std::set<int> s;
    for (const auto& [n, g] : D)
        s.insert(n);
    for (const auto& [n, g] : E)
        s.insert(n);
    return {s.begin(), s.end()};
}

std::optional<std::string> ExactCouple::exactness_failure() const
{
    for (const auto& [n, h] : i)
        if (!h.well_defined())
            return "i is not well defined out of degree " + std::to_string(n);
    for (const auto& [n, h] : j)
        if (!h.well_defined())
            return "j is not well defined out of degree " + std::to_string(n);
    for (const auto& [n, h] : k)
        if (!h.well_defined())
            return "k is not well defined out of degree " + std::to_string(n);
    for (int n : degrees()) {
        const Subquotient& d = d_at(n);
        const Subquotient& e = e_at(n);
        if (!(kernel_or_z(find(i, n), d) == image_or_b(find(k, n - dk), d)))
            return "ker i != im k at D^" + std::to_string(n);
        if (!(kernel_or_z(find(j, n), d) == image_or_b(find(i, n - di), d)))
            return "ker j != im i at D^" + std::to_string(n);
        if (!(kernel_or_z(find(k, n), e) == image_or_b(find(j, n - dj), e)))
            return "ker k != im j at E^" + std::to_string(n);
    }
    return std::nullopt;
}

ExactCouple ExactCouple::bockstein(const FreeComplex& c, const BigInt& m)
{
    if (m < 2)
        throw Error(ErrorCode::InvalidArgument, "Bockstein modulus must be >= 2");
    ExactCouple x;
    x.di = 0;
    x.dj = 0;
    x.dk = -1;
    auto degs = c.degrees();
    for (int w : degs) {
        const std::size_t r = c.rank(w), rl = c.rank(w - 1);
        IntMatrix del = c.differential(w - 1);   // C_w -> C_{w-1}
        IntMatrix into = c.differential(w);      // C_{w+1} -> C_w
        Lattice zd = rl == 0 ? Lattice::full(r) : Lattice::span(integer_kernel(del));
        Lattice bd = Lattice::span(into);
        x.D[w] = Subquotient::make(zd, bd);
        Lattice ze = Lattice::full(r);
        if (rl > 0) {
            IntMatrix joint = del.hcat(scale(IntMatrix::identity(rl), -m));
            IntMatrix ker = integer_kernel(joint);
            ze = Lattice::span(ker.block(0, r, 0, ker.cols()));
        }
        Lattice be = bd + Lattice::full(r).scaled(m);
        x.E[w] = Subquotient::make(ze, be);
    }
    for (int w : degs) {
        const Subquotient& d = x.D[w];
        const Subquotient& e = x.E[w];
        x.i[w] = SubHom{d, d, scale(d.Z.basis(), m)};
        x.j[w] = SubHom{d, e, d.Z.basis()};
        if (c.rank(w - 1) > 0) {
            IntMatrix img = mul(c.differential(w - 1), e.Z.basis());
            for (std::size_t r = 0; r < img.rows(); ++r)
                for (std::size_t col = 0; col < img.cols(); ++col)
                    img(r, col) /= m;
            x.k[w] = SubHom{e, x.D[w - 1], img};
        }
    }
    return x;
}

ExactCouple couple_derive(const ExactCouple& x)
{
    if (auto f = x.exactness_failure())
        throw Error(ErrorCode::InexactCouple, *f);
    ExactCouple y;
    y.di = x.di;
    y.dj = x.dj - x.di;
    y.dk = x.dk;
    for (const auto& [n, d] : x.D)
        y.D[n] = Subquotient::make(image_or_b(find(x.i, n - x.di), d), d.B);
    for (const auto& [n, e] : x.E) {
        const SubHom* kk = find(x.k, n);
        SubHom jk = kk && find(x.j, n + x.dk) ? compose(*find(x.j, n + x.dk), *kk)
                                              : zero_hom(e, x.e_at(n + x.dk + x.dj));
        Lattice z = jk.kernel();
        Lattice b = e.B;
        int src = n - x.dk - x.dj;
        const SubHom* ks = find(x.k, src);
        if (ks && find(x.j, src + x.dk))
            b = compose(*find(x.j, src + x.dk), *ks).image();
        y.E[n] = Subquotient::make(z, b);
    }
    for (const auto& [n, h] : x.i) {
        const Subquotient& dn = y.D.at(n);
        IntMatrix F = mul(h.F, z_coords(h.source, dn.Z.basis()));
        y.i[n] = SubHom{dn, y.d_at(n + x.di), F};
    }
    for (const auto& [n, dn] : y.D) {
        // j'(i(x)) = [j(x)] with x in D^{n - di}
        int src = n - x.di;
        const SubHom* ih = find(x.i, src);
        const SubHom* jh = find(x.j, src);
        const Subquotient& target = y.e_at(src + x.dj);
        IntMatrix F(target.ambient(), dn.Z.rank());
        if (ih && jh) {
            IntMatrix sys = ih->F.hcat(dn.B.basis());
            for (std::size_t c = 0; c < dn.Z.rank(); ++c) {
                auto sol = solve_integer(sys, dn.Z.basis().column(c));
                if (!sol)
                    throw Error(ErrorCode::InexactCouple, "element of i(D) without an i-preimage");
                IntVector xs(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(ih->F.cols()));
                IntVector v = xs.empty() ? IntVector(target.ambient()) : jh->F * xs;
                for (std::size_t r = 0; r < v.size(); ++r)
                    F(r, c) = v[r];
            }
        }
        if (dn.Z.rank() > 0 || y.E.count(src + x.dj))
            y.j[n] = SubHom{dn, target, F};
    }
    for (const auto& [n, h] : x.k) {
        const Subquotient& en = y.E.at(n);
        IntMatrix F = mul(h.F, z_coords(h.source, en.Z.basis()));
        y.k[n] = SubHom{en, y.d_at(n + x.dk), F};
    }
    return y;
}

namespace {

GradedGroup structures(const std::map<int, Subquotient>& m)
{
    GradedGroup g;
    for (const auto& [n, q] : m) {
        FormalGroup s = q.structure();
        if (!s.is_zero())
            g.set(n, s);
    }
    return g;
}

}  // namespace

CoupleAnalysis couple_analyze(const ExactCouple& x, int min_pages)
{
    if (auto f = x.exactness_failure())
        throw Error(ErrorCode::InexactCouple, *f);
    CoupleAnalysis out;
    const auto degs = x.degrees();

    // torsion exponent: ker(i^{r+1}) = ker(i^r)
    auto kernels = [&](int n) {
        std::map<int, Lattice> m;
        for (const auto& [d, q] : x.D)
            m[d] = ker_i_power(x, d, n);
        return m;
    };
    int r = 1;
    auto kr = kernels(1);
    for (;; ++r) {
        auto next = kernels(r + 1);
        if (lattice_map_equal(kr, next))
            break;
        kr = std::move(next);
        if (r > 256)
            throw Error(ErrorCode::InvalidArgument, "i-torsion does not stabilize");
    }
    out.torsion_order = r;
    const std::map<int, Lattice>& kinf = kr;

    // E_inf = ker(k) / j(ker i^inf)
    std::map<int, Subquotient> einf;
    for (const auto& [n, e] : x.E) {
        Lattice z = kernel_or_z(find(x.k, n), e);
        Lattice b = e.B;
        int src = n - x.dj;
        if (const SubHom* jh = find(x.j, src); jh && kinf.count(src))
            b = jh->image(kinf.at(src));
        einf[n] = Subquotient::make(z, b);
    }
    out.e_infinity = structures(einf);

    // pages by derivation, and directly as Z_n / B_n
    const int last = std::max(min_pages, r + 2);
    ExactCouple cur = x;
    bool agree = true;
    std::vector<std::map<int, Subquotient>> page_subq;
    for (int p = 1; p <= last; ++p) {
        if (p > 1)
            cur = couple_derive(cur);
        page_subq.push_back(cur.E);
        out.pages.push_back(structures(cur.E));
        const int nn = p - 1;  // E_p = Z_{p-1} / B_{p-1}
        for (const auto& [deg, e] : x.E) {
            int tgt = deg + x.dk;
            Lattice zn = e.Z;
            if (const SubHom* kh = find(x.k, deg))
                zn = kh->preimage(im_i_power(x, tgt, nn));
            Lattice bn = e.B;
            int src = deg - x.dj;
            if (const SubHom* jh = find(x.j, src))
                bn = jh->image(ker_i_power(x, src, nn));
            const Subquotient& derived = cur.E.at(deg);
            if (!(derived.Z == zn) || !(derived.B == bn))
                agree = false;
        }
    }
    out.pages_agree = agree;

    bool degen = true;
    for (const auto& [n, q] : einf) {
        const Subquotient& er1 = page_subq[static_cast<std::size_t>(r)].at(n);
        const Subquotient& er2 = page_subq[static_cast<std::size_t>(r + 1)].at(n);
        if (!(er1.Z == q.Z) || !(er1.B == q.B) || !(er2.Z == q.Z) || !(er2.B == q.B))
            degen = false;
    }
    out.degenerates = degen;

    // four-term sequence per degree n of D, with ker(k) and E_inf in degree n + dj
    bool four = true;
    std::optional<bool> cart;
    if (r == 1)
        cart = true;
    for (const auto& [n, d] : x.D) {
        const int m = n + x.dj;
        const Subquotient& e = x.e_at(m);
        Lattice kk = kernel_or_z(find(x.k, m), e);
        const Lattice& K = kinf.at(n);
        Lattice im_i = image_or_b(find(x.i, n - x.di), d);
        IntMatrix Fj = find(x.j, n) ? find(x.j, n)->F : IntMatrix(e.ambient(), d.Z.rank());

        // exactness at D: ker(j, p) = D_1 ∩ ker(i^inf)
        Lattice ker_j = kernel_or_z(find(x.j, n), d);
        if (!(ker_j.intersect(K) == im_i.intersect(K)))
            four = false;

        // middle: im(j, p) = ker(pi, -jbar) inside ker(k) ⊕ Dbar
        Subquotient kerk{kk, e.B};
        Subquotient dbar{d.Z, K};
        Subquotient mid = direct_sum(kerk, dbar);
        const Subquotient& einf_m = einf.count(m) ? einf.at(m) : Subquotient{kk, e.B};
        SubHom jp{d, mid, Fj.vcat(d.Z.basis())};
        IntMatrix left = kk.basis();
        IntMatrix right = scale(Fj, -1);
        IntMatrix Fpsi = left.hcat(right);
        // psi is given on the block basis; rewrite it in the basis chosen for mid.Z
        IntMatrix blockZ(mid.ambient(), kk.rank() + d.Z.rank());
        for (std::size_t rr = 0; rr < kk.ambient(); ++rr)
            for (std::size_t c = 0; c < kk.rank(); ++c)
                blockZ(rr, c) = kk.basis()(rr, c);
        for (std::size_t rr = 0; rr < d.Z.ambient(); ++rr)
            for (std::size_t c = 0; c < d.Z.rank(); ++c)
                blockZ(kk.ambient() + rr, kk.rank() + c) = d.Z.basis()(rr, c);
        IntMatrix Fmid(e.ambient(), mid.Z.rank());
        for (std::size_t c = 0; c < mid.Z.rank(); ++c) {
            auto sol = solve_integer(blockZ, mid.Z.basis().column(c));
            if (!sol)
                throw Error(ErrorCode::InexactCouple, "direct sum basis mismatch");
            IntVector v = Fpsi * *sol;
            for (std::size_t rr = 0; rr < v.size(); ++rr)
                Fmid(rr, c) = v[rr];
        }
        SubHom psi{mid, einf_m, Fmid};
        if (!(jp.image() == psi.kernel()))
            four = false;
        if (!(psi.image() == einf_m.Z))
            four = false;

        if (cart) {
            // D -> ker(k) x_{E_2} Dbar is an isomorphism
            Subquotient fiber{psi.kernel(), mid.B};
            if (!(d.structure() == fiber.structure()) || !(ker_j.intersect(K) == d.B))
                cart = false;
        }
    }
    out.four_term_exactness = four;
    out.cartesian = cart;

    // identification: on generators x of ker(i^inf), x = 0 iff every j^(n)(x) vanishes, n < r
    bool ident = true;
    for (const auto& [n, d] : x.D) {
        const Lattice& K = kinf.at(n);
        std::vector<IntVector> tests;
        for (std::size_t c = 0; c < K.rank(); ++c)
            tests.push_back(K.basis().column(c));
        for (std::size_t c = 0; c + 1 < K.rank(); ++c) {
            IntVector v = K.basis().column(c);
            IntVector w = K.basis().column(c + 1);
            for (std::size_t t = 0; t < v.size(); ++t)
                v[t] += 3 * w[t];
            tests.push_back(v);
        }
        for (const auto& v : tests) {
            bool is_zero = d.B.contains(v);
            bool all_vanish = true;
            for (int s = 0; s < r && all_vanish; ++s) {
                // find y with i^s(y) = v mod B, then test j(y) in B_s = j(ker i^s)
                int src = n - s * x.di;
                SubHom is = i_power(x, src, s);
                auto sol = solve_integer(is.F.hcat(d.B.basis()), v);
                if (!sol) {
                    all_vanish = false;
                    break;
                }
                IntVector y(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(is.F.cols()));
                const SubHom* js = find(x.j, src);
                if (!js)
                    continue;
                IntVector jy = y.empty() ? IntVector(js->target.ambient()) : js->F * y;
                Lattice bs = js->image(ker_i_power(x, src, s));
                if (!bs.contains(jy))
                    all_vanish = false;
            }
            if (is_zero != all_vanish)
                ident = false;
        }
    }
    out.identification_holds = ident;
    return out;
}

}  // namespace mwtate
