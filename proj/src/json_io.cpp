#include "mwtate/json_io.hpp"

#include "mwtate/error.hpp"

#include <limits>

namespace mwtate::json_io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::Malformed, what); }

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        malformed(std::string("missing field '") + key + "' in " + j.dump());
    return j.at(key);
}

int as_int(const Json& j, const char* what)
{
    if (!j.is_number_integer())
        malformed(std::string(what) + " must be an integer, got " + j.dump());
    return j.get<int>();
}

std::string as_string(const Json& j, const char* what)
{
    if (!j.is_string())
        malformed(std::string(what) + " must be a string, got " + j.dump());
    return j.get<std::string>();
}

unsigned as_unsigned(const Json& j, const char* what)
{
    int v = as_int(j, what);
    if (v < 0)
        malformed(std::string(what) + " must be nonnegative");
    return static_cast<unsigned>(v);
}

}  // namespace

Json encode(const BigInt& x)
{
    static const BigInt lo = std::numeric_limits<long long>::min();
    static const BigInt hi = std::numeric_limits<long long>::max();
    if (x >= lo && x <= hi)
        return static_cast<long long>(x);
    return x.str();
}

BigInt decode_bigint(const Json& j)
{
    if (j.is_number_integer())
        return BigInt(j.get<long long>());
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            malformed("not an integer: " + j.dump());
        return BigInt(s);
    }
    malformed("not an integer: " + j.dump());
}

Json encode(const AtomicBlock& b)
{
    switch (b.kind) {
    case AtomicBlock::Kind::Free:
        return {{"kind", "free"}, {"weight", b.weight}};
    case AtomicBlock::Kind::Dyadic:
        return {{"kind", "dyadic"}, {"t", b.t}, {"weight", b.weight}};
    case AtomicBlock::Kind::Odd:
        return {{"kind", "odd"}, {"p", encode(b.p)}, {"r", b.r}, {"shift", b.weight}};
    }
    return {};
}

Json encode(const NormalForm& a)
{
    Json out = Json::array();
    for (const auto& b : a.blocks())
        out.push_back(encode(b));
    return out;
}

NormalForm decode_normal_form(const Json& j)
{
    if (!j.is_array())
        malformed("a normal form is a JSON array of blocks");
    std::vector<AtomicBlock> blocks;
    for (const auto& b : j) {
        std::string kind = as_string(field(b, "kind"), "kind");
        if (kind == "free")
            blocks.push_back(AtomicBlock::free(as_int(field(b, "weight"), "weight")));
        else if (kind == "dyadic")
            blocks.push_back(AtomicBlock::dyadic(as_unsigned(field(b, "t"), "t"), as_int(field(b, "weight"), "weight")));
        else if (kind == "odd")
            blocks.push_back(AtomicBlock::odd(decode_bigint(field(b, "p")), as_unsigned(field(b, "r"), "r"),
                                              as_int(field(b, "shift"), "shift")));
        else
            malformed("unknown block kind '" + kind + "'");
    }
    return NormalForm(std::move(blocks));
}

Json encode(const TateComplex& c)
{
    Json cells = Json::array(), attach = Json::array();
    for (const auto& cell : c.cells)
        cells.push_back({{"id", cell.id}, {"weight", cell.weight}});
    for (const auto& a : c.attach)
        attach.push_back({{"from", a.from}, {"to", a.to}, {"coeff", encode(a.coeff)}});
    return {{"cells", cells}, {"attach", attach}};
}

TateComplex decode_complex(const Json& j)
{
    TateComplex c;
    const Json& cells = field(j, "cells");
    if (!cells.is_array())
        malformed("'cells' must be an array");
    for (const auto& cell : cells)
        c.cells.push_back({as_string(field(cell, "id"), "id"), as_int(field(cell, "weight"), "weight")});
    if (j.contains("attach")) {
        const Json& attach = j.at("attach");
        if (!attach.is_array())
            malformed("'attach' must be an array");
        for (const auto& a : attach)
            c.attach.push_back({as_string(field(a, "from"), "from"), as_string(field(a, "to"), "to"),
                                decode_bigint(field(a, "coeff"))});
    }
    return c;
}

Json encode(const FormalGroup& g)
{
    Json torsion = Json::array();
    for (const auto& t : g.torsion())
        torsion.push_back(encode(t));
    return {{"free", g.free_rank()}, {"torsion", torsion}};
}

Json encode(const GradedGroup& g, CoefficientModel model)
{
    Json groups = Json::array();
    for (const auto& [d, x] : g.degrees()) {
        Json e = encode(x);
        e["degree"] = d;
        groups.push_back(e);
    }
    return {{"model", model_name(model)}, {"groups", groups}};
}

Json encode(const Page& page)
{
    Page p = page;
    p.normalize();
    Json towers = Json::array(), diff = Json::array();
    for (const auto& t : p.towers()) {
        Json h = t.height ? Json(*t.height) : Json("inf");
        towers.push_back({{"p", t.p}, {"q", t.q}, {"height", h}, {"label", std::string(label_name(t.label))}});
    }
    for (const auto& a : p.arrows())
        diff.push_back({{"from", a.from}, {"to", a.to}, {"power", a.power}});
    return {{"page", p.index()}, {"towers", towers}, {"differential", diff}};
}

Json encode(const GWElement& e) { return {{"rank", encode(e.rank)}, {"signature", encode(e.signature)}}; }

GWElement decode_gw(const std::string& text)
{
    auto comma = text.find(',');
    if (comma == std::string::npos)
        malformed("expected rank,signature but got '" + text + "'");
    return {decode_bigint(Json(text.substr(0, comma))), decode_bigint(Json(text.substr(comma + 1)))};
}

Json encode(const Hp1BundleClass& c)
{
    Json out{{"rank", c.rank}, {"is_free", c.is_free}, {"stably_free_nontrivial", c.stably_free_nontrivial}};
    if (c.representative)
        out["representative"] = encode(*c.representative);
    if (c.c2)
        out["c2"] = encode(*c.c2);
    return out;
}

Json encode(const CheckReport& r) { return {{"holds", r.holds}, {"trace", r.trace}, {"failures", r.failures}}; }

Json encode(const ValidationReport& r)
{
    Json v = Json::array();
    for (const auto& x : r.violations)
        v.push_back({{"kind", std::string(violation_name(x.kind))}, {"cells", x.cells}, {"detail", x.detail}});
    return {{"valid", r.ok()}, {"violations", v}};
}

std::vector<EtaEntry> decode_eta_entries(const Json& j)
{
    if (!j.is_array())
        malformed("an eta matrix is a JSON array of entries");
    std::vector<EtaEntry> out;
    for (const auto& e : j)
        out.push_back({as_string(field(e, "source"), "source"), as_string(field(e, "target"), "target"),
                       decode_bigint(field(e, "coeff"))});
    return out;
}

Json parse(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace mwtate::json_io
