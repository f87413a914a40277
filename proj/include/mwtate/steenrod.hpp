#pragma once

#include "mwtate/bockstein.hpp"

#include <array>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mwtate {

/// A letter is Sq^n for n > 0, or one of the constants below.
using Letter = int;
inline constexpr Letter kTau = 0;
inline constexpr Letter kRho = -1;

/// Composite operation, applied right to left like ordinary composition.
using Word = std::vector<Letter>;

/// F2-linear combination of words. The empty word is the identity.
class OpPoly {
public:
    OpPoly() = default;
    explicit OpPoly(Word w);

    /// Parses "Sq2 Sq2 + tau Sq3 Sq1", "1" or "0".
    static OpPoly parse(std::string_view text);

    const std::set<Word>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    OpPoly& operator+=(const OpPoly& o);
    friend OpPoly operator+(OpPoly a, const OpPoly& b) { return a += b; }
    friend OpPoly operator*(const OpPoly& a, const OpPoly& b);
    bool operator==(const OpPoly& o) const = default;

    std::string to_string() const;

private:
    std::set<Word> terms_;
};

std::string word_string(const Word& w);

struct RewriteRule {
    Word lhs;
    OpPoly rhs;
    std::string to_string() const;
};

class RewriteSystem {
public:
    RewriteSystem() = default;
    explicit RewriteSystem(std::vector<RewriteRule> rules) : rules_(std::move(rules)) {}

    /// Sq2Sq2 = tau Sq3Sq1, Sq2Sq3Sq1 = Sq5Sq1, Sq3Sq1Sq2 = Sq5Sq1, Sq3Sq3 = Sq5Sq1,
    /// Sq2 tau = tau Sq2 + tau rho Sq1, Sq1Sq1 = 0, Sq1Sq3Sq1 = 0.
    static RewriteSystem quoted_identities();

    const std::vector<RewriteRule>& rules() const { return rules_; }
    RewriteSystem without(const Word& lhs) const;
    RewriteSystem with(RewriteRule r) const;

    /// Rewrites the leftmost match of the first applicable rule until no rule applies.
    /// Each step is appended to trace when given. Throws InvalidArgument after max_steps.
    OpPoly reduce(const OpPoly& p, std::vector<std::string>* trace = nullptr,
                  std::size_t max_steps = 10000) const;

private:
    std::vector<RewriteRule> rules_;
};

using OpMatrix = std::array<std::array<OpPoly, 2>, 2>;

OpMatrix operator*(const OpMatrix& a, const OpMatrix& b);

/// The operator matrix ((Sq2, tau), (Sq3Sq1, Sq2 + rho Sq1)).
OpMatrix steenrod_d_matrix();

/// Reduces every entry of m*m and reports which entries fail to reach `expected`.
CheckReport square_check(const OpMatrix& m, const OpMatrix& expected, const RewriteSystem& rs);

/// square_check of the operator matrix against zero under the given rules
/// (by default exactly the quoted identities).
CheckReport steenrod_dsquare_check(const RewriteSystem& rs = RewriteSystem::quoted_identities());

}  // namespace mwtate
