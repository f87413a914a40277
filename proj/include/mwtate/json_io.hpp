#pragma once

#include "mwtate/bockstein.hpp"
#include "mwtate/geometry.hpp"
#include "mwtate/motives.hpp"
#include "mwtate/witt.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace mwtate::json_io {

using Json = nlohmann::json;

/// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
Json encode(const BigInt& x);
BigInt decode_bigint(const Json& j);

Json encode(const AtomicBlock& b);
Json encode(const NormalForm& a);
NormalForm decode_normal_form(const Json& j);

Json encode(const TateComplex& c);
TateComplex decode_complex(const Json& j);

Json encode(const FormalGroup& g);
/// {"model": ..., "groups": [{"degree","free","torsion"}]}.
Json encode(const GradedGroup& g, CoefficientModel model = CoefficientModel::MinimalEuclidean);

/// Towers in canonical order; differential entries refer to tower indices.
Json encode(const Page& p);

Json encode(const GWElement& e);
/// "rank,signature"; parity is not checked here.
GWElement decode_gw(const std::string& text);

Json encode(const Hp1BundleClass& c);
Json encode(const CheckReport& r);
Json encode(const ValidationReport& r);

std::vector<EtaEntry> decode_eta_entries(const Json& j);

/// Parses text as JSON; Malformed on syntax errors.
Json parse(const std::string& text);

}  // namespace mwtate::json_io
