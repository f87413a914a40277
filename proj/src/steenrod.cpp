#include "mwtate/steenrod.hpp"

#include "mwtate/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mwtate {

namespace {

std::string letter_string(Letter l)
{
    if (l == kTau)
        return "tau";
    if (l == kRho)
        return "rho";
    return "Sq" + std::to_string(l);
}

Letter parse_letter(std::string_view tok)
{
    if (tok == "tau")
        return kTau;
    if (tok == "rho")
        return kRho;
    if (tok.size() > 2 && tok.substr(0, 2) == "Sq") {
        int n = 0;
        for (char c : tok.substr(2)) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw Error(ErrorCode::Malformed, "bad letter '" + std::string(tok) + "'");
            n = n * 10 + (c - '0');
        }
        if (n > 0)
            return n;
    }
    throw Error(ErrorCode::Malformed, "bad letter '" + std::string(tok) + "'");
}

void toggle(std::set<Word>& s, const Word& w)
{
    auto [it, inserted] = s.insert(w);
    if (!inserted)
        s.erase(it);
}

}  // namespace

OpPoly::OpPoly(Word w) { terms_.insert(std::move(w)); }

OpPoly OpPoly::parse(std::string_view text)
{
    OpPoly out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t plus = text.find('+', start);
        std::string_view part =
            text.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
        std::istringstream in{std::string(part)};
        std::string tok;
        Word w;
        bool zero = false, any = false;
        while (in >> tok) {
            any = true;
            if (tok == "1")
                continue;
            if (tok == "0") {
                zero = true;
                continue;
            }
            w.push_back(parse_letter(tok));
        }
        if (!any)
            throw Error(ErrorCode::Malformed, "empty summand in '" + std::string(text) + "'");
        if (!zero)
            toggle(out.terms_, w);
        if (plus == std::string_view::npos)
            break;
        start = plus + 1;
    }
    return out;
}

OpPoly& OpPoly::operator+=(const OpPoly& o)
{
    for (const auto& w : o.terms_)
        toggle(terms_, w);
    return *this;
}

OpPoly operator*(const OpPoly& a, const OpPoly& b)
{
    OpPoly out;
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) {
            Word w = x;
            w.insert(w.end(), y.begin(), y.end());
            toggle(out.terms_, w);
        }
    return out;
}

std::string word_string(const Word& w)
{
    if (w.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ' ';
        s += letter_string(w[i]);
    }
    return s;
}

std::string OpPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& w : terms_) {
        if (!s.empty())
            s += " + ";
        s += word_string(w);
    }
    return s;
}

std::string RewriteRule::to_string() const { return word_string(lhs) + " -> " + rhs.to_string(); }

RewriteSystem RewriteSystem::quoted_identities()
{
    auto rule = [](const char* l, const char* r) {
        OpPoly lp = OpPoly::parse(l);
        return RewriteRule{*lp.terms().begin(), OpPoly::parse(r)};
    };
    return RewriteSystem({
        rule("Sq2 Sq2", "tau Sq3 Sq1"),
        rule("Sq2 Sq3 Sq1", "Sq5 Sq1"),
        rule("Sq3 Sq1 Sq2", "Sq5 Sq1"),
        rule("Sq3 Sq3", "Sq5 Sq1"),
        rule("Sq2 tau", "tau Sq2 + tau rho Sq1"),
        rule("Sq1 Sq1", "0"),
        rule("Sq1 Sq3 Sq1", "0"),
    });
}

RewriteSystem RewriteSystem::without(const Word& lhs) const
{
    std::vector<RewriteRule> kept;
    for (const auto& r : rules_)
        if (r.lhs != lhs)
            kept.push_back(r);
    return RewriteSystem(std::move(kept));
}

RewriteSystem RewriteSystem::with(RewriteRule r) const
{
    RewriteSystem out = *this;
    out.rules_.push_back(std::move(r));
    return out;
}

OpPoly RewriteSystem::reduce(const OpPoly& p, std::vector<std::string>* trace,
                             std::size_t max_steps) const
{
    OpPoly cur = p;
    for (std::size_t step = 0;; ++step) {
        bool rewrote = false;
        for (const auto& w : cur.terms()) {
            for (const auto& r : rules_) {
                auto at = std::search(w.begin(), w.end(), r.lhs.begin(), r.lhs.end());
                if (at == w.end() || r.lhs.empty())
                    continue;
                if (step >= max_steps)
                    throw Error(ErrorCode::InvalidArgument, "rewriting did not terminate");
                Word pre(w.begin(), at), post(at + static_cast<std::ptrdiff_t>(r.lhs.size()), w.end());
                OpPoly replaced = OpPoly(pre) * r.rhs * OpPoly(post);
                OpPoly next = cur + OpPoly(w) + replaced;
                if (trace)
                    trace->push_back(word_string(w) + " => " + replaced.to_string() + "   [" +
                                     r.to_string() + "]");
                cur = std::move(next);
                rewrote = true;
                break;
            }
            if (rewrote)
                break;
        }
        if (!rewrote)
            return cur;
    }
}

OpMatrix operator*(const OpMatrix& a, const OpMatrix& b)
{
    OpMatrix out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
    return out;
}

OpMatrix steenrod_d_matrix()
{
    return {{{OpPoly::parse("Sq2"), OpPoly::parse("tau")},
             {OpPoly::parse("Sq3 Sq1"), OpPoly::parse("Sq2 + rho Sq1")}}};
}

CheckReport square_check(const OpMatrix& m, const OpMatrix& expected, const RewriteSystem& rs)
{
    CheckReport rep;
    OpMatrix sq = m * m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            std::string where = "entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
            rep.trace.push_back(where + ": " + sq[r][c].to_string());
            std::vector<std::string> steps;
            OpPoly got = rs.reduce(sq[r][c], &steps);
            OpPoly want = rs.reduce(expected[r][c]);
            for (auto& s : steps)
                rep.trace.push_back("  " + s);
            rep.trace.push_back("  normal form: " + got.to_string());
            if (got != want)
                rep.fail(where + " reduces to " + got.to_string() + ", expected " + want.to_string());
        }
    return rep;
}

CheckReport steenrod_dsquare_check(const RewriteSystem& rs)
{
    return square_check(steenrod_d_matrix(), OpMatrix{}, rs);
}

}  // namespace mwtate
