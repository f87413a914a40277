#include "mwtate/bockstein.hpp"

#include "mwtate/error.hpp"
#include "mwtate/lattice.hpp"
#include "mwtate/smith.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

namespace mwtate {

using Kind = AtomicBlock::Kind;

std::string_view label_name(TowerLabel l)
{
    switch (l) {
    case TowerLabel::U: return "u";
    case TowerLabel::V: return "v";
    case TowerLabel::Plain: return "plain";
    }
    return "?";
}

std::optional<int> Tower::index_at(int pp, int qq) const
{
    int k = qq - q;
    if (pp - p != k || k < 0)
        return std::nullopt;
    if (height && k >= *height)
        return std::nullopt;
    return k;
}

bool operator<(const Tower& a, const Tower& b)
{
    // infinite sorts after every finite height
    auto h = [](const Tower& t) { return t.height.value_or(std::numeric_limits<int>::max()); };
    return std::make_tuple(a.q, a.p, h(a), a.label) < std::make_tuple(b.q, b.p, h(b), b.label);
}

std::size_t Page::add_tower(const Tower& t)
{
    towers_.push_back(t);
    return towers_.size() - 1;
}

void Page::add_arrow(std::size_t from, std::size_t to, int power)
{
    arrows_.push_back({from, to, power});
}

Page& Page::operator+=(const Page& other)
{
    std::size_t off = towers_.size();
    towers_.insert(towers_.end(), other.towers_.begin(), other.towers_.end());
    for (const auto& a : other.arrows_)
        arrows_.push_back({a.from + off, a.to + off, a.power});
    return *this;
}

void Page::normalize()
{
    std::vector<std::size_t> order(towers_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return towers_[x] < towers_[y]; });
    std::vector<std::size_t> where(order.size());
    std::vector<Tower> sorted;
    for (std::size_t k = 0; k < order.size(); ++k) {
        where[order[k]] = k;
        sorted.push_back(towers_[order[k]]);
    }
    towers_ = std::move(sorted);
    for (auto& a : arrows_) {
        a.from = where[a.from];
        a.to = where[a.to];
    }
    std::sort(arrows_.begin(), arrows_.end(), [](const Arrow& x, const Arrow& y) {
        return std::tie(x.from, x.to, x.power) < std::tie(y.from, y.to, y.power);
    });
}

std::size_t Page::dim(int p, int q) const
{
    std::size_t d = 0;
    for (const auto& t : towers_)
        if (t.index_at(p, q))
            ++d;
    return d;
}

std::size_t Page::differential_rank(int p, int q) const
{
    std::size_t r = 0;
    for (const auto& a : arrows_) {
        auto k = towers_[a.from].index_at(p, q);
        if (!k)
            continue;
        const Tower& tgt = towers_[a.to];
        if (!tgt.height || *k + a.power < *tgt.height)
            ++r;
    }
    return r;
}

std::pair<int, int> Page::base_q_range() const
{
    if (towers_.empty())
        return {0, 0};
    int lo = towers_.front().q, hi = lo;
    for (const auto& t : towers_) {
        lo = std::min(lo, t.q);
        hi = std::max(hi, t.q);
    }
    return {lo, hi};
}

std::string Page::to_string() const
{
    std::ostringstream os;
    os << "E_" << index_ << ":";
    for (std::size_t k = 0; k < towers_.size(); ++k) {
        const auto& t = towers_[k];
        os << " [" << k << "] " << label_name(t.label) << "(" << t.p << "," << t.q << ")^";
        if (t.height)
            os << *t.height;
        else
            os << "inf";
    }
    for (const auto& a : arrows_)
        os << " d[" << a.from << "->" << a.to << "]=rho^" << a.power;
    return os.str();
}

bool operator==(const Page& a, const Page& b)
{
    if (a.index_ != b.index_)
        return false;
    auto towers = [](const Page& x) {
        auto t = x.towers_;
        std::sort(t.begin(), t.end());
        return t;
    };
    if (towers(a) != towers(b))
        return false;
    auto arrows = [](const Page& x) {
        std::vector<std::tuple<Tower, Tower, int>> v;
        for (const auto& ar : x.arrows_)
            v.emplace_back(x.towers_[ar.from], x.towers_[ar.to], ar.power);
        std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) {
            const auto& [l0, l1, l2] = l;
            const auto& [r0, r1, r2] = r;
            if (l0 < r0 || r0 < l0)
                return l0 < r0;
            if (l1 < r1 || r1 < l1)
                return l1 < r1;
            return l2 < r2;
        });
        return v;
    };
    return arrows(a) == arrows(b);
}

namespace {

void require_page(int i)
{
    if (i < 2)
        throw Error(ErrorCode::PageTooSmall, "page index " + std::to_string(i) + " < 2");
}

/// Page contribution of a Z/2^j summand whose u-row is `row` (so the v-row is row + 1).
void add_dyadic(Page& page, int j, int row, int i)
{
    Tower v{2 * row + 2, row + 1, std::nullopt, TowerLabel::V};
    if (i <= j + 1) {
        std::size_t ui = page.add_tower({2 * row, row, std::nullopt, TowerLabel::U});
        std::size_t vi = page.add_tower(v);
        if (i == j + 1)
            page.add_arrow(ui, vi, j);
    } else {
        v.height = j;
        page.add_tower(v);
    }
}

}  // namespace

Page block_pages(const AtomicBlock& b, int i)
{
    require_page(i);
    Page page(i);
    if (b.kind == Kind::Free)
        page.add_tower({2 * b.weight, b.weight, std::nullopt, TowerLabel::Plain});
    else if (b.kind == Kind::Dyadic && b.t >= 1)
        add_dyadic(page, static_cast<int>(b.t), b.weight, i);
    page.normalize();
    return page;
}

Page pages(const NormalForm& a, int i)
{
    require_page(i);
    Page page(i);
    for (const auto& b : a.blocks())
        page += block_pages(b, i);
    page.normalize();
    return page;
}

Page pages_from_witt(const GradedGroup& h, int i)
{
    require_page(i);
    Page page(i);
    for (const auto& [d, g] : h.degrees()) {
        for (std::size_t k = 0; k < g.free_rank(); ++k)
            page.add_tower({2 * d, d, std::nullopt, TowerLabel::Plain});
        for (const auto& n : g.torsion()) {
            if (n % 2 != 0)
                continue;
            add_dyadic(page, static_cast<int>(v2(n)), d - 1, i);
        }
    }
    page.normalize();
    return page;
}

int degeneracy_page(const NormalForm& a)
{
    unsigned r = 0;
    const GradedGroup h = witt_cohomology(a);
    for (const auto& [d, g] : h.degrees())
        r = std::max(r, g.max_dyadic_exponent());
    return static_cast<int>(r) + 2;
}

RhoComplex page_complex(const NormalForm& a, int i)
{
    require_page(i);
    RhoComplex c;
    for (const auto& b : a.blocks()) {
        if (b.kind == Kind::Free)
            c += RhoComplex::line(b.weight);
        else if (b.kind == Kind::Dyadic && b.t >= 1) {
            int j = static_cast<int>(b.t);
            c += i < j + 1 ? RhoComplex::free_tower(b.weight) : RhoComplex::cone_tower(j, b.weight);
        }
    }
    return c;
}

RhoComplex page_complex(const Page& page)
{
    RhoComplex c;
    std::vector<bool> used(page.towers().size(), false);
    for (const auto& a : page.arrows()) {
        const Tower& src = page.towers()[a.from];
        c += RhoComplex::cone_tower(a.power, src.row());
        used[a.from] = used[a.to] = true;
    }
    for (std::size_t k = 0; k < page.towers().size(); ++k) {
        if (used[k])
            continue;
        const Tower& t = page.towers()[k];
        c += t.infinite() ? RhoComplex::line(t.row()) : RhoComplex::cone_tower(*t.height, t.row() - 1);
    }
    return c;
}

namespace {

std::string homology_string(const std::map<int, RhoHomology>& h)
{
    std::ostringstream os;
    for (const auto& [d, x] : h) {
        os << " H" << d << "=(free " << x.free;
        for (int j : x.torsion)
            os << ", rho^" << j;
        os << ")";
    }
    return os.str();
}

}  // namespace

CheckReport kunneth_e2(const NormalForm& a, const NormalForm& b)
{
    CheckReport rep;
    NormalForm ab = tensor(a, b);
    int last = std::max({degeneracy_page(a), degeneracy_page(b), degeneracy_page(ab)}) + 1;
    for (int i = 2; i <= last; ++i) {
        auto lhs = rho_homology(rho_module_tensor(page_complex(a, i), page_complex(b, i)));
        auto rhs = rho_homology(page_complex(pages(ab, i)));
        if (lhs != rhs) {
            rep.fail("page " + std::to_string(i) + ": tensor of pages" + homology_string(lhs) +
                     " vs page of tensor" + homology_string(rhs));
            return rep;
        }
        rep.trace.push_back("page " + std::to_string(i) + ":" + homology_string(lhs));
    }
    return rep;
}

CheckReport truncated_check(const NormalForm& a, int j)
{
    if (j < 1)
        throw Error(ErrorCode::InvalidArgument, "truncation exponent must be >= 1");
    CheckReport rep;
    NormalForm aj = tensor(a, NormalForm{AtomicBlock::dyadic(static_cast<unsigned>(j), 0)});

    int qlo = 0, qhi = 0, rlo = 0, rhi = 0;
    bool any = false;
    for (const auto& b : aj.blocks() ) {
        int w = b.weight;
        if (!any) {
            qlo = qhi = w;
            rlo = rhi = w;
            any = true;
        }
        qlo = std::min(qlo, w);
        qhi = std::max(qhi, w);
        rlo = std::min(rlo, w);
        rhi = std::max(rhi, w);
    }
    for (const auto& b : a.blocks()) {
        qlo = std::min(qlo, b.weight);
        rlo = std::min(rlo, b.weight);
    }
    qlo -= 3;
    rlo -= 3;
    qhi += 2 * j + 8;
    rhi += 3;

    for (int i = 2; i <= j + 1; ++i) {
        Page pa = pages(a, i), paj = pages(aj, i);
        std::size_t checked = 0;
        for (int row = rlo; row <= rhi; ++row)
            for (int q = qlo; q <= qhi; ++q) {
                int p = row + q;
                std::size_t lhs = paj.dim(p, q);
                std::size_t rhs = pa.dim(p, q) + pa.dim(p - 2, q - 1);
                ++checked;
                if (lhs != rhs)
                    rep.fail("page " + std::to_string(i) + " at (" + std::to_string(p) + "," + std::to_string(q) +
                             "): " + std::to_string(lhs) + " != " + std::to_string(rhs));
            }
        rep.trace.push_back("page " + std::to_string(i) + ": additivity on " + std::to_string(checked) + " bidegrees");
    }

    // page j+2: dim E(A/2^j)^{p,q} = dim coker(rho^j into E^{p-2,q-1}(A)) + dim ker(rho^j on E^{p,q}(A))
    Page pa = pages(a, j + 2), paj = pages(aj, j + 2);
    auto ker_rho = [&](int p, int q) {
        std::size_t n = 0;
        for (const auto& t : pa.towers()) {
            auto k = t.index_at(p, q);
            if (k && t.height && *k + j >= *t.height)
                ++n;
        }
        return n;
    };
    auto coker_rho = [&](int p, int q) {
        std::size_t n = 0;
        for (const auto& t : pa.towers()) {
            auto k = t.index_at(p, q);
            if (k && *k < j)
                ++n;
        }
        return n;
    };
    for (int row = rlo; row <= rhi; ++row)
        for (int q = qlo; q <= qhi; ++q) {
            int p = row + q;
            std::size_t lhs = paj.dim(p, q);
            std::size_t rhs = coker_rho(p - 2, q - 1) + ker_rho(p, q);
            if (lhs != rhs)
                rep.fail("page " + std::to_string(j + 2) + " long exact sequence at (" + std::to_string(p) + "," +
                         std::to_string(q) + "): " + std::to_string(lhs) + " != " + std::to_string(rhs));
        }
    rep.trace.push_back("page " + std::to_string(j + 2) + ": rho^" + std::to_string(j) + " sequence counted");
    return rep;
}

namespace {

/// Subspace of F_2^n (n <= 32) with basis vectors having distinct leading bits.
struct F2Span {
    std::vector<std::uint32_t> basis;

    static int lead(std::uint32_t v) { return 31 - std::countl_zero(v); }

    std::uint32_t reduce(std::uint32_t v) const
    {
        for (auto b : basis)
            if (v & (1u << lead(b)))
                v ^= b;
        return v;
    }
    bool add(std::uint32_t v)
    {
        v = reduce(v);
        if (!v)
            return false;
        basis.push_back(v);
        std::sort(basis.begin(), basis.end(), std::greater<>());
        return true;
    }
    bool contains(std::uint32_t v) const { return reduce(v) == 0; }
    std::size_t dim() const { return basis.size(); }
};

/// The spectral sequence of a (x) b computed from E_2(a) (x) E_2(b) with the Leibniz
/// differential beta_i(x*y) = beta_i(x)*y + x*beta_i(y).
class ProductModel {
public:
    struct Pair {
        Tower x, y;
        int p, q;
        int row() const { return p - q; }
    };

    ProductModel(const AtomicBlock& a, const AtomicBlock& b, int max_page) : a_(a), b_(b)
    {
        Page pa = block_pages(a, 2), pb = block_pages(b, 2);
        for (const auto& x : pa.towers())
            for (const auto& y : pb.towers())
                pairs_.push_back({x, y, x.p + y.p, x.q + y.q});
        if (pairs_.size() > 32)
            throw Error(ErrorCode::InvalidArgument, "product model too large");
        int qb = 0, slack = 12;
        for (const auto& pr : pairs_)
            qb = std::max(qb, pr.q);
        for (int i = 2; i <= max_page; ++i)
            slack += i;
        q_top_ = qb + slack;
        valid_ = q_top_;
        for (const auto& pr : pairs_) {
            row_lo_ = std::min(row_lo_, pr.row());
            row_hi_ = std::max(row_hi_, pr.row());
            q_lo_ = std::min(q_lo_, pr.q);
        }
        for (int row = row_lo_; row <= row_hi_; ++row)
            for (int q = q_lo_; q <= q_top_; ++q) {
                F2Span z;
                for (std::size_t k = 0; k < pairs_.size(); ++k)
                    if (pairs_[k].row() == row && q >= pairs_[k].q)
                        z.add(1u << k);
                Z_[{row, q}] = z;
                B_[{row, q}] = F2Span{};
            }
    }

    int page() const { return page_; }
    int valid_q() const { return valid_; }
    const std::vector<Pair>& pairs() const { return pairs_; }
    const F2Span& Z(int row, int q) const { return at(Z_, row, q); }
    const F2Span& B(int row, int q) const { return at(B_, row, q); }

    std::size_t dim(int row, int q) const { return Z(row, q).dim() - B(row, q).dim(); }

    /// Leibniz differential on E_2-level vectors at (row, q), landing in (row + 1, q + page).
    std::uint32_t apply(int row, int q, std::uint32_t v) const
    {
        std::uint32_t out = 0;
        for (std::size_t k = 0; k < pairs_.size(); ++k) {
            if (!(v & (1u << k)))
                continue;
            const Pair& pr = pairs_[k];
            if (pr.row() != row)
                continue;
            int n = q - pr.q;
            if (auto x2 = factor_target(pa_i_, pr.x))
                out ^= bit_of(x2->first, pr.y, q + page_, n + x2->second);
            if (auto y2 = factor_target(pb_i_, pr.y))
                out ^= bit_of(pr.x, y2->first, q + page_, n + y2->second);
        }
        return out;
    }

    /// Rank of the induced differential on E_page leaving (row, q).
    std::size_t differential_rank(int row, int q) const
    {
        F2Span img = B(row + 1, q + page_);
        std::size_t base = img.dim();
        for (auto z : Z(row, q).basis)
            img.add(apply(row, q, z));
        return img.dim() - base;
    }

    /// Checks that the differential maps cycles to cycles and boundaries to boundaries.
    bool well_defined(int row, int q) const
    {
        const F2Span& zt = Z(row + 1, q + page_);
        const F2Span& bt = B(row + 1, q + page_);
        for (auto z : Z(row, q).basis)
            if (!zt.contains(apply(row, q, z)))
                return false;
        for (auto b : B(row, q).basis)
            if (!bt.contains(apply(row, q, b)))
                return false;
        return true;
    }

    void advance()
    {
        auto nz = Z_;
        auto nb = B_;
        for (auto& [key, z] : Z_) {
            auto [row, q] = key;
            if (q + page_ > q_top_) {
                nz[key] = F2Span{};
                continue;
            }
            const F2Span& bt = B(row + 1, q + page_);
            // cycles: kernel of Z -> E_2 / B_target, by enumeration (dim <= 4 in practice)
            F2Span keep;
            std::size_t d = z.dim();
            for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
                std::uint32_t v = 0;
                for (std::size_t s = 0; s < d; ++s)
                    if (mask & (1u << s))
                        v ^= z.basis[s];
                if (bt.contains(apply(row, q, v)))
                    keep.add(v);
            }
            for (auto b : B(row, q).basis)
                keep.add(b);
            nz[key] = keep;
            auto tgt = nb.find({row + 1, q + page_});
            if (tgt != nb.end())
                for (auto v : z.basis)
                    tgt->second.add(apply(row, q, v));
        }
        Z_ = std::move(nz);
        B_ = std::move(nb);
        valid_ -= page_;
        ++page_;
        pa_i_ = block_pages(a_, page_);
        pb_i_ = block_pages(b_, page_);
    }

    /// Bit of the E_2 element rho^n (x * y) at height q, or 0 if outside the window.
    std::uint32_t bit_of(const Tower& x, const Tower& y, int q, int n) const
    {
        for (std::size_t k = 0; k < pairs_.size(); ++k)
            if (pairs_[k].x.label == x.label && pairs_[k].y.label == y.label) {
                if (q - pairs_[k].q != n)
                    throw Error(ErrorCode::InvalidArgument, "inconsistent rho degree in product model");
                return q > q_top_ ? 0u : (1u << k);
            }
        return 0;
    }

    std::string describe(std::uint32_t v, int q) const
    {
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < pairs_.size(); ++k) {
            if (!(v & (1u << k)))
                continue;
            os << (first ? "" : " + ");
            first = false;
            int n = q - pairs_[k].q;
            if (n > 0)
                os << "rho^" << n << " ";
            os << label_name(pairs_[k].x.label) << "x" << label_name(pairs_[k].y.label);
        }
        return first ? "0" : os.str();
    }

    int row_lo() const { return row_lo_; }
    int row_hi() const { return row_hi_; }
    int q_lo() const { return q_lo_; }

private:
    static const F2Span& at(const std::map<std::pair<int, int>, F2Span>& m, int row, int q)
    {
        static const F2Span empty;
        auto it = m.find({row, q});
        return it == m.end() ? empty : it->second;
    }

    /// Where beta_i sends the E_2 tower x in its own factor: (target tower, rho power).
    static std::optional<std::pair<Tower, int>> factor_target(const Page& pi, const Tower& x)
    {
        for (const auto& ar : pi.arrows())
            if (pi.towers()[ar.from].label == x.label)
                return std::make_pair(pi.towers()[ar.to], ar.power);
        return std::nullopt;
    }

    AtomicBlock a_, b_;
    std::vector<Pair> pairs_;
    std::map<std::pair<int, int>, F2Span> Z_, B_;
    int page_ = 2;
    int q_top_ = 0;
    int valid_ = 0;
    int row_lo_ = 1 << 20, row_hi_ = -(1 << 20), q_lo_ = 1 << 20;
    Page pa_i_ = block_pages(a_, 2), pb_i_ = block_pages(b_, 2);
};

}  // namespace

CheckReport leibniz_check(int j, int k)
{
    if (j < 1 || k < 1)
        throw Error(ErrorCode::InvalidArgument, "block exponents must be >= 1");
    CheckReport rep;
    AtomicBlock a = AtomicBlock::dyadic(static_cast<unsigned>(j), 0);
    AtomicBlock b = AtomicBlock::dyadic(static_cast<unsigned>(k), 0);
    NormalForm ab = tensor(a, b);
    int last = std::max(j, k) + 3;
    ProductModel model(a, b, last);
    for (int i = 2; i <= last; ++i) {
        Page blocks = pages(ab, i);
        for (int row = model.row_lo(); row <= model.row_hi(); ++row)
            for (int q = model.q_lo(); q <= model.valid_q(); ++q) {
                int p = row + q;
                if (model.dim(row, q) != blocks.dim(p, q))
                    rep.fail("page " + std::to_string(i) + " dim at (" + std::to_string(p) + "," + std::to_string(q) +
                             "): product " + std::to_string(model.dim(row, q)) + " vs blocks " +
                             std::to_string(blocks.dim(p, q)));
                if (q + i > model.valid_q())
                    continue;
                if (!model.well_defined(row, q))
                    rep.fail("page " + std::to_string(i) + ": Leibniz differential not well defined at (" +
                             std::to_string(p) + "," + std::to_string(q) + ")");
                if (model.differential_rank(row, q) != blocks.differential_rank(p, q))
                    rep.fail("page " + std::to_string(i) + " rank at (" + std::to_string(p) + "," +
                             std::to_string(q) + "): product " + std::to_string(model.differential_rank(row, q)) +
                             " vs blocks " + std::to_string(blocks.differential_rank(p, q)));
            }
        for (std::size_t s = 0; s < model.pairs().size(); ++s) {
            const auto& pr = model.pairs()[s];
            if (!model.Z(pr.row(), pr.q).contains(1u << s))
                continue;
            std::uint32_t img = model.apply(pr.row(), pr.q, 1u << s);
            if (!model.B(pr.row() + 1, pr.q + i).contains(img))
                rep.trace.push_back("beta_" + std::to_string(i) + "(" + model.describe(1u << s, pr.q) +
                                    ") = " + model.describe(img, pr.q + i));
        }
        if (i < last)
            model.advance();
    }
    return rep;
}

namespace {

struct Entry {
    std::size_t tower;
    int k;
};

std::vector<Entry> entries_at(const Page& page, int p, int q)
{
    std::vector<Entry> out;
    for (std::size_t t = 0; t < page.towers().size(); ++t)
        if (auto k = page.towers()[t].index_at(p, q))
            out.push_back({t, *k});
    return out;
}

/// Basis of the solution space {c : sum c_s cols[s] = 0} over F_2.
std::vector<std::uint32_t> f2_kernel(const std::vector<std::uint32_t>& cols)
{
    std::vector<std::uint32_t> sols;
    F2Span span;
    std::size_t n = cols.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::uint32_t v = 0;
        for (std::size_t s = 0; s < n; ++s)
            if (mask & (1u << s))
                v ^= cols[s];
        if (v == 0 && span.add(mask))
            sols.push_back(mask);
    }
    return sols;
}

VGroupResult v_group_block(const AtomicBlock& blk, int j, int n)
{
    VGroupResult res;
    Page pj = block_pages(blk, j + 1);

    std::vector<Entry> X = entries_at(pj, 2 * n, n);
    std::vector<Entry> Y;
    for (const auto& e : entries_at(pj, 2 * n + 2, n + 1)) {
        bool cycle = true;
        for (const auto& ar : pj.arrows()) {
            if (ar.from != e.tower)
                continue;
            const Tower& tgt = pj.towers()[ar.to];
            if (!tgt.height || e.k + ar.power < *tgt.height)
                cycle = false;
        }
        if (cycle)
            Y.push_back(e);
    }
    // target of beta^{j+1}(x) and rho^j y
    std::vector<Entry> T = entries_at(pj, 2 * n + j + 2, n + j + 1);
    auto slot = [&](std::size_t tower, int k) -> std::uint32_t {
        for (std::size_t s = 0; s < T.size(); ++s)
            if (T[s].tower == tower && T[s].k == k)
                return 1u << s;
        return 0;
    };
    std::vector<std::uint32_t> cols;
    for (const auto& x : X) {
        std::uint32_t img = 0;
        for (const auto& ar : pj.arrows())
            if (ar.from == x.tower)
                img ^= slot(ar.to, x.k + ar.power);
        cols.push_back(img);
    }
    for (const auto& y : Y)
        cols.push_back(slot(y.tower, y.k + j));
    std::vector<std::uint32_t> vbasis = f2_kernel(cols);
    res.dim_V = vbasis.size();

    // E_{j+2}^{2n+2,n+1}(blk / 2^j eta) in the product model
    AtomicBlock dj = AtomicBlock::dyadic(static_cast<unsigned>(j), 0);
    std::size_t dT = 0;
    std::vector<std::uint32_t> fcols;
    std::vector<std::uint32_t> qbasis;
    if (!pj.towers().empty()) {
        ProductModel model(blk, dj, j + 2);
        for (int i = 2; i < j + 2; ++i)
            model.advance();
        const int row = n + 1, q = n + 1;
        const F2Span& Zt = model.Z(row, q);
        F2Span acc = model.B(row, q);
        for (auto z : Zt.basis)
            if (acc.add(z))
                qbasis.push_back(z);
        dT = qbasis.size();
        auto coords = [&](std::uint32_t v) -> std::uint32_t {
            if (!Zt.contains(v))
                throw Error(ErrorCode::InvalidArgument, "V element is not a cycle in the truncated page");
            for (std::uint32_t c = 0; c < (1u << dT); ++c) {
                std::uint32_t w = v;
                for (std::size_t s = 0; s < dT; ++s)
                    if (c & (1u << s))
                        w ^= qbasis[s];
                if (model.B(row, q).contains(w))
                    return c;
            }
            throw Error(ErrorCode::InvalidArgument, "no quotient coordinates");
        };
        const Tower u_d{0, 0, std::nullopt, TowerLabel::U};
        const Tower v_d{2, 1, std::nullopt, TowerLabel::V};
        for (auto vb : vbasis) {
            std::uint32_t e2 = 0;
            for (std::size_t s = 0; s < X.size(); ++s)
                if (vb & (1u << s))
                    e2 ^= model.bit_of(pj.towers()[X[s].tower], v_d, q, X[s].k);
            for (std::size_t s = 0; s < Y.size(); ++s)
                if (vb & (1u << (X.size() + s)))
                    e2 ^= model.bit_of(pj.towers()[Y[s].tower], u_d, q, Y[s].k);
            fcols.push_back(coords(e2));
        }
    }

    const FormalGroup h = witt_cohomology(NormalForm{blk}, pow2(static_cast<unsigned>(j)))[n];
    res.consistent = h.mod2_dimension() == dT;

    // generators of V (order 2) and of h; g sends the s-th even summand to the s-th basis vector of T
    std::vector<BigInt> orders(vbasis.size(), BigInt(2));
    std::vector<std::uint32_t> gcols;
    std::size_t even = 0;
    for (std::size_t s = 0; s < h.free_rank(); ++s) {
        orders.push_back(0);
        gcols.push_back(even < dT ? (1u << even) : 0u);
        ++even;
    }
    for (const auto& m : h.torsion()) {
        orders.push_back(m);
        if (m % 2 == 0) {
            gcols.push_back(even < dT ? (1u << even) : 0u);
            ++even;
        } else
            gcols.push_back(0);
    }
    const std::size_t g = orders.size();
    if (g == 0)
        return res;
    IntMatrix M(dT, g + dT);
    for (std::size_t c = 0; c < g; ++c) {
        std::uint32_t col = c < fcols.size() ? fcols[c] : gcols[c - fcols.size()];
        for (std::size_t r = 0; r < dT; ++r)
            if (col & (1u << r))
                M(r, c) = c < fcols.size() ? 1 : -1;
    }
    for (std::size_t r = 0; r < dT; ++r)
        M(r, g + r) = 2;
    Lattice L = Lattice::full(g);
    if (dT > 0) {
        IntMatrix ker = integer_kernel(M);
        L = Lattice::span(ker.block(0, g, 0, ker.cols()));
    }
    IntMatrix rel(g, g);
    for (std::size_t s = 0; s < g; ++s)
        rel(s, s) = orders[s];
    res.fiber_product = Subquotient::make(L, Lattice::span(rel)).structure();
    return res;
}

}  // namespace

VGroupResult v_group(const NormalForm& a, int j, int n)
{
    if (j < 1)
        throw Error(ErrorCode::InvalidArgument, "j must be >= 1");
    VGroupResult total;
    for (const auto& b : a.blocks()) {
        VGroupResult r = v_group_block(b, j, n);
        total.dim_V += r.dim_V;
        total.fiber_product += r.fiber_product;
        total.consistent = total.consistent && r.consistent;
    }
    return total;
}

}  // namespace mwtate
