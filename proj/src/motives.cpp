#include "mwtate/motives.hpp"

#include "mwtate/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace mwtate {

AtomicBlock AtomicBlock::odd(const BigInt& p, unsigned r, int shift)
{
    if (p % 2 == 0 || !is_prime(p))
        throw Error(ErrorCode::InvalidArgument, "odd block needs an odd prime, got " + p.str());
    if (r < 1)
        throw Error(ErrorCode::InvalidArgument, "odd block needs r >= 1");
    return {Kind::Odd, shift, 0, p, r};
}

bool operator<(const AtomicBlock& a, const AtomicBlock& b)
{
    if (a.kind != b.kind)
        return a.kind < b.kind;
    if (a.weight != b.weight)
        return a.weight < b.weight;
    if (a.t != b.t)
        return a.t < b.t;
    if (a.p != b.p)
        return a.p < b.p;
    return a.r < b.r;
}

std::string AtomicBlock::to_string() const
{
    std::ostringstream os;
    switch (kind) {
    case Kind::Free: os << "Free{" << weight << "}"; break;
    case Kind::Dyadic: os << "DyadicEta{" << t << "," << weight << "}"; break;
    case Kind::Odd: os << "OddTorsion{" << p << "," << r << "," << weight << "}"; break;
    }
    return os.str();
}

NormalForm::NormalForm(std::initializer_list<AtomicBlock> blocks) : NormalForm(std::vector<AtomicBlock>(blocks)) {}

NormalForm::NormalForm(std::vector<AtomicBlock> blocks) : blocks_(std::move(blocks))
{
    std::sort(blocks_.begin(), blocks_.end());
}

bool NormalForm::has_odd() const
{
    return std::any_of(blocks_.begin(), blocks_.end(), [](const AtomicBlock& b) { return b.kind == AtomicBlock::Kind::Odd; });
}

NormalForm& NormalForm::operator+=(const NormalForm& other)
{
    blocks_.insert(blocks_.end(), other.blocks_.begin(), other.blocks_.end());
    std::sort(blocks_.begin(), blocks_.end());
    return *this;
}

std::string NormalForm::to_string() const
{
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        os << (i ? ", " : "") << blocks_[i].to_string();
    os << "}";
    return os.str();
}

const TateCell* TateComplex::find(const std::string& id) const
{
    for (const auto& c : cells)
        if (c.id == id)
            return &c;
    return nullptr;
}

FreeComplex TateComplex::free_complex() const
{
    std::map<int, std::vector<std::string>> by_weight;
    for (const auto& c : cells)
        by_weight[c.weight].push_back(c.id);
    std::map<std::string, std::size_t> index;
    FreeComplex fc;
    for (const auto& [w, ids] : by_weight) {
        fc.set_rank(w, ids.size());
        for (std::size_t i = 0; i < ids.size(); ++i)
            index[ids[i]] = i;
    }
    std::map<int, IntMatrix> diffs;
    for (const auto& a : attach) {
        const TateCell* from = find(a.from);
        const TateCell* to = find(a.to);
        if (!from || !to || from->weight != to->weight + 1)
            throw Error(ErrorCode::InvalidComplex, "attachment " + a.from + " -> " + a.to + " is not legal");
        int w = to->weight;
        auto& d = diffs.try_emplace(w, IntMatrix(fc.rank(w), fc.rank(w + 1))).first->second;
        d(index[a.to], index[a.from]) += a.coeff;
    }
    for (auto& [w, d] : diffs)
        fc.set_differential(w, std::move(d));
    return fc;
}

TateComplex tate_complex_from(const FreeComplex& c)
{
    TateComplex t;
    auto name = [](int w, std::size_t i) { return "w" + std::to_string(w) + "_" + std::to_string(i); };
    for (int w : c.degrees())
        for (std::size_t i = 0; i < c.rank(w); ++i)
            t.cells.push_back({name(w, i), w});
    for (int w : c.degrees()) {
        IntMatrix d = c.differential(w);
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (std::size_t col = 0; col < d.cols(); ++col)
                if (d(r, col) != 0)
                    t.attach.push_back({name(w + 1, col), name(w, r), d(r, col)});
    }
    return t;
}

std::string_view violation_name(Violation::Kind k)
{
    switch (k) {
    case Violation::Kind::DuplicateId: return "DuplicateId";
    case Violation::Kind::UnknownCell: return "UnknownCell";
    case Violation::Kind::NonAdjacent: return "NonAdjacent";
    case Violation::Kind::NonComposable: return "NonComposable";
    }
    return "?";
}

std::string ValidationReport::to_string() const
{
    if (ok())
        return "valid";
    std::ostringstream os;
    for (const auto& v : violations) {
        os << violation_name(v.kind) << ":";
        for (const auto& c : v.cells)
            os << " " << c;
        if (!v.detail.empty())
            os << " (" << v.detail << ")";
        os << "\n";
    }
    return os.str();
}

ValidationReport validate_complex(const TateComplex& c)
{
    ValidationReport rep;
    std::set<std::string> seen;
    for (const auto& cell : c.cells)
        if (!seen.insert(cell.id).second)
            rep.violations.push_back({Violation::Kind::DuplicateId, {cell.id}, ""});
    if (!rep.ok())
        return rep;

    bool attach_ok = true;
    for (const auto& a : c.attach) {
        const TateCell* from = c.find(a.from);
        const TateCell* to = c.find(a.to);
        if (!from || !to) {
            rep.violations.push_back({Violation::Kind::UnknownCell, {a.from, a.to}, ""});
            attach_ok = false;
        } else if (from->weight != to->weight + 1) {
            rep.violations.push_back({Violation::Kind::NonAdjacent, {a.from, a.to},
                                      "weights " + std::to_string(from->weight) + " -> " + std::to_string(to->weight)});
            attach_ok = false;
        }
    }
    if (!attach_ok)
        return rep;

    // composability: for each path z -> y -> x the summed coefficient must vanish
    std::map<std::pair<std::string, std::string>, BigInt> coeff;
    for (const auto& a : c.attach)
        coeff[{a.from, a.to}] += a.coeff;
    std::map<std::pair<std::string, std::string>, BigInt> composite;
    for (const auto& [zy, c1] : coeff)
        for (const auto& [yx, c2] : coeff)
            if (zy.second == yx.first)
                composite[{zy.first, yx.second}] += c1 * c2;
    for (const auto& [zx, v] : composite)
        if (v != 0)
            rep.violations.push_back({Violation::Kind::NonComposable, {zx.first, zx.second},
                                      "composite coefficient " + v.str()});
    return rep;
}

NormalForm blocks_of_cone(const BigInt& n, int lower_weight)
{
    BigInt m = abs(n);
    if (m == 0)
        throw Error(ErrorCode::InvalidArgument, "cone of the zero map is not elementary");
    unsigned t = v2(m);
    BigInt s = m >> t;
    std::vector<AtomicBlock> out{AtomicBlock::dyadic(t, lower_weight)};
    for (const auto& [p, q] : prime_power_split(s)) {
        unsigned r = 0;
        for (BigInt x = q; x > 1; x /= p)
            ++r;
        out.push_back(AtomicBlock::odd(p, r, lower_weight));
    }
    return NormalForm(std::move(out));
}

NormalForm decompose(const TateComplex& c)
{
    auto rep = validate_complex(c);
    if (!rep.ok())
        throw Error(ErrorCode::InvalidComplex, rep.to_string());
    auto d = decompose_free_complex(c.free_complex());
    NormalForm out;
    std::vector<AtomicBlock> free;
    for (const auto& f : d.free_cells)
        free.push_back(AtomicBlock::free(f.degree));
    out += NormalForm(std::move(free));
    for (const auto& p : d.cones)
        out += blocks_of_cone(p.n, p.lower_degree);
    return out;
}

TateComplex realize(const NormalForm& a)
{
    TateComplex c;
    std::size_t next = 0;
    auto fresh = [&](int w) {
        std::string id = "c" + std::to_string(next++);
        c.cells.push_back({id, w});
        return id;
    };
    for (const auto& b : a.blocks()) {
        switch (b.kind) {
        case AtomicBlock::Kind::Free: fresh(b.weight); break;
        case AtomicBlock::Kind::Dyadic: {
            std::string lo = fresh(b.weight);
            std::string hi = fresh(b.weight + 1);
            c.attach.push_back({hi, lo, pow2(b.t)});
            break;
        }
        case AtomicBlock::Kind::Odd:
            throw Error(ErrorCode::OddBlockNotRealizable, b.to_string() + " has no cell presentation");
        }
    }
    return c;
}

NormalForm tensor(const AtomicBlock& a, const AtomicBlock& b)
{
    using K = AtomicBlock::Kind;
    if (b.kind < a.kind)
        return tensor(b, a);
    const int w = a.weight + b.weight;
    if (a.kind == K::Free) {
        AtomicBlock out = b;
        out.weight = w;
        return NormalForm{out};
    }
    if (a.kind == K::Dyadic && b.kind == K::Dyadic) {
        unsigned t = std::min(a.t, b.t);
        return NormalForm{AtomicBlock::dyadic(t, w + 1), AtomicBlock::dyadic(t, w)};
    }
    if (a.kind == K::Odd && b.kind == K::Odd && a.p == b.p) {
        unsigned r = std::min(a.r, b.r);
        return NormalForm{AtomicBlock::odd(a.p, r, w + 1), AtomicBlock::odd(a.p, r, w)};
    }
    return {};  // dyadic with odd, or odd blocks at distinct primes
}

NormalForm tensor(const NormalForm& a, const NormalForm& b)
{
    NormalForm out;
    for (const auto& x : a.blocks())
        for (const auto& y : b.blocks())
            out += tensor(x, y);
    return out;
}

NormalForm twist(const NormalForm& a, int q) { return tensor(a, NormalForm{AtomicBlock::free(q)}); }

TateComplex cone_eta_map(const TateComplex& source, const TateComplex& target, const std::vector<EtaEntry>& F)
{
    for (const auto* part : {&source, &target}) {
        auto rep = validate_complex(*part);
        if (!rep.ok())
            throw Error(ErrorCode::InvalidComplex, rep.to_string());
    }
    TateComplex out = target;
    std::map<std::string, std::string> renamed;
    for (const auto& cell : source.cells) {
        std::string id = cell.id;
        while (out.find(id))
            id += "'";
        renamed[cell.id] = id;
        out.cells.push_back({id, cell.weight});
    }
    for (const auto& a : source.attach)
        out.attach.push_back({renamed[a.from], renamed[a.to], a.coeff});
    for (const auto& e : F) {
        const TateCell* u = source.find(e.source);
        const TateCell* v = target.find(e.target);
        if (!u || !v)
            throw Error(ErrorCode::IllegalEntry, "unknown cell in entry " + e.source + " -> " + e.target);
        if (u->weight != v->weight + 1)
            throw Error(ErrorCode::IllegalEntry, "entry " + e.source + " -> " + e.target + " joins weights " +
                                                     std::to_string(u->weight) + " and " + std::to_string(v->weight));
        if (e.coeff != 0)
            out.attach.push_back({renamed[e.source], e.target, e.coeff});
    }
    auto rep = validate_complex(out);
    if (!rep.ok())
        throw Error(ErrorCode::NonComposableResult, rep.to_string());
    return out;
}

}  // namespace mwtate
