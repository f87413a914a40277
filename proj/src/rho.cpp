#include "mwtate/rho.hpp"

#include "mwtate/error.hpp"

#include <algorithm>
#include <sstream>

namespace mwtate {

RhoComplex::RhoComplex(std::vector<RhoSummand> s) : summands_(std::move(s))
{
    for (const auto& x : summands_)
        if (x.shape == RhoShape::ConeTower && x.j < 1)
            throw Error(ErrorCode::InvalidArgument, "cone tower needs j >= 1");
        else if (x.shape != RhoShape::ConeTower && x.j != 0)
            throw Error(ErrorCode::InvalidArgument, "only cone towers carry an exponent");
    std::sort(summands_.begin(), summands_.end());
}

RhoComplex RhoComplex::cone_tower(int j, int degree) { return RhoComplex({{RhoShape::ConeTower, j, degree}}); }

RhoComplex& RhoComplex::operator+=(const RhoComplex& other)
{
    summands_.insert(summands_.end(), other.summands_.begin(), other.summands_.end());
    std::sort(summands_.begin(), summands_.end());
    return *this;
}

RhoComplex RhoComplex::shifted(int by) const
{
    auto s = summands_;
    for (auto& x : s)
        x.degree += by;
    return RhoComplex(std::move(s));
}

std::string RhoComplex::to_string() const
{
    if (summands_.empty())
        return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < summands_.size(); ++i) {
        const auto& s = summands_[i];
        if (i)
            os << " + ";
        switch (s.shape) {
        case RhoShape::Line: os << "L"; break;
        case RhoShape::FreeTower: os << "S"; break;
        case RhoShape::ConeTower: os << "S_" << s.j; break;
        }
        os << "[" << s.degree << "]";
    }
    return os.str();
}

namespace {

std::vector<RhoSummand> tensor_pair(const RhoSummand& a, const RhoSummand& b)
{
    const int d = a.degree + b.degree;
    if (a.shape == RhoShape::Line)
        return {{b.shape, b.j, d}};
    if (b.shape == RhoShape::Line)
        return {{a.shape, a.j, d}};
    RhoShape shape = RhoShape::FreeTower;
    int j = 0;
    if (a.shape == RhoShape::ConeTower && b.shape == RhoShape::ConeTower) {
        shape = RhoShape::ConeTower;
        j = std::min(a.j, b.j);
    } else if (a.shape == RhoShape::ConeTower || b.shape == RhoShape::ConeTower) {
        shape = RhoShape::ConeTower;
        j = a.shape == RhoShape::ConeTower ? a.j : b.j;
    }
    return {{shape, j, d}, {shape, j, d + 1}};
}

}  // namespace

RhoComplex rho_module_tensor(const RhoComplex& x, const RhoComplex& y)
{
    std::vector<RhoSummand> out;
    for (const auto& a : x.summands())
        for (const auto& b : y.summands()) {
            auto t = tensor_pair(a, b);
            out.insert(out.end(), t.begin(), t.end());
        }
    return RhoComplex(std::move(out));
}

std::map<int, RhoHomology> rho_homology(const RhoComplex& x)
{
    std::map<int, RhoHomology> h;
    for (const auto& s : x.summands()) {
        switch (s.shape) {
        case RhoShape::Line: ++h[s.degree].free; break;
        case RhoShape::FreeTower:
            ++h[s.degree].free;
            ++h[s.degree + 1].free;
            break;
        case RhoShape::ConeTower: h[s.degree + 1].torsion.push_back(s.j); break;
        }
    }
    for (auto& [d, v] : h)
        std::sort(v.torsion.begin(), v.torsion.end());
    return h;
}

}  // namespace mwtate
