#include "mwtate/group.hpp"

#include "mwtate/error.hpp"

#include <algorithm>
#include <sstream>

namespace mwtate {

std::vector<std::pair<BigInt, BigInt>> prime_power_split(const BigInt& n_in)
{
    BigInt n = abs(n_in);
    std::vector<std::pair<BigInt, BigInt>> out;
    if (n < 2)
        return out;
    for (BigInt p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0)
            continue;
        BigInt q = 1;
        while (n % p == 0) {
            n /= p;
            q *= p;
        }
        out.emplace_back(p, q);
    }
    if (n > 1)
        out.emplace_back(n, n);
    return out;
}

bool is_prime(const BigInt& n)
{
    if (n < 2)
        return false;
    auto f = prime_power_split(n);
    return f.size() == 1 && f[0].second == n;
}

FormalGroup FormalGroup::free(std::size_t rank)
{
    FormalGroup g;
    g.free_rank_ = rank;
    return g;
}

FormalGroup FormalGroup::cyclic(const BigInt& n)
{
    FormalGroup g;
    if (n == 0)
        g.free_rank_ = 1;
    else
        g.add_torsion(n);
    g.normalize();
    return g;
}

FormalGroup FormalGroup::from_invariants(const std::vector<BigInt>& factors)
{
    FormalGroup g;
    for (const auto& d : factors) {
        if (d == 0)
            ++g.free_rank_;
        else
            g.add_torsion(d);
    }
    g.normalize();
    return g;
}

void FormalGroup::add_torsion(const BigInt& n)
{
    for (auto& [p, q] : prime_power_split(n))
        torsion_.push_back(q);
}

void FormalGroup::normalize() { std::sort(torsion_.begin(), torsion_.end()); }

BigInt FormalGroup::torsion_order() const
{
    BigInt o = 1;
    for (const auto& q : torsion_)
        o *= q;
    return o;
}

unsigned FormalGroup::max_dyadic_exponent() const
{
    unsigned e = 0;
    for (const auto& q : torsion_)
        if (q % 2 == 0)
            e = std::max(e, v2(q));
    return e;
}

std::size_t FormalGroup::dyadic_count(unsigned e) const
{
    return static_cast<std::size_t>(
        std::count_if(torsion_.begin(), torsion_.end(), [&](const BigInt& q) { return q % 2 == 0 && v2(q) == e; }));
}

FormalGroup FormalGroup::two_primary() const
{
    FormalGroup g;
    for (const auto& q : torsion_)
        if (q % 2 == 0)
            g.torsion_.push_back(q);
    return g;
}

FormalGroup FormalGroup::odd_part() const
{
    FormalGroup g;
    for (const auto& q : torsion_)
        if (q % 2 != 0)
            g.torsion_.push_back(q);
    return g;
}

FormalGroup& FormalGroup::operator+=(const FormalGroup& other)
{
    free_rank_ += other.free_rank_;
    torsion_.insert(torsion_.end(), other.torsion_.begin(), other.torsion_.end());
    normalize();
    return *this;
}

FormalGroup FormalGroup::tensor_cyclic(const BigInt& m) const
{
    if (m == 0)
        return *this;
    FormalGroup g;
    for (std::size_t i = 0; i < free_rank_; ++i)
        g.add_torsion(m);
    for (const auto& q : torsion_)
        g.add_torsion(gcd(q, m));
    g.normalize();
    return g;
}

FormalGroup FormalGroup::tor_cyclic(const BigInt& m) const
{
    if (m == 0)
        return {};
    FormalGroup g;
    for (const auto& q : torsion_)
        g.add_torsion(gcd(q, m));
    g.normalize();
    return g;
}

std::size_t FormalGroup::mod2_dimension() const
{
    return free_rank_ + two_primary().torsion_.size();
}

std::string FormalGroup::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank_ > 0) {
        os << "Z";
        if (free_rank_ > 1)
            os << "^" << free_rank_;
        first = false;
    }
    for (const auto& q : torsion_) {
        os << (first ? "" : " + ") << "Z/" << q;
        first = false;
    }
    return os.str();
}

const FormalGroup& GradedGroup::operator[](int degree) const
{
    static const FormalGroup zero;
    auto it = groups_.find(degree);
    return it == groups_.end() ? zero : it->second;
}

void GradedGroup::add(int degree, const FormalGroup& g)
{
    if (g.is_zero())
        return;
    groups_[degree] += g;
}

void GradedGroup::set(int degree, const FormalGroup& g)
{
    if (g.is_zero())
        groups_.erase(degree);
    else
        groups_[degree] = g;
}

GradedGroup& GradedGroup::operator+=(const GradedGroup& other)
{
    for (const auto& [d, g] : other.groups_)
        add(d, g);
    return *this;
}

GradedGroup GradedGroup::shifted(int by) const
{
    GradedGroup out;
    for (const auto& [d, g] : groups_)
        out.groups_[d + by] = g;
    return out;
}

std::string GradedGroup::to_string() const
{
    if (groups_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, g] : groups_) {
        os << (first ? "" : ", ") << "H" << d << " = " << g.to_string();
        first = false;
    }
    return os.str();
}

}  // namespace mwtate
