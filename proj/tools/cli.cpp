#include "cli.hpp"

#include "suites.hpp"

#include "mwtate/cohomology.hpp"
#include "mwtate/error.hpp"
#include "mwtate/json_io.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace mwtate::cli {

namespace {

using json_io::Json;

struct Options {
    std::string in;
    std::vector<std::string> blocks;
    std::optional<int> page;
    std::string range;
    std::string format = "json";
    std::uint64_t seed = 20240611;
    std::string model = "minimal-euclidean";
    std::optional<int> rank;
    std::string euler;
    std::optional<std::string> c2;
    std::string kind = "witt";
    std::string modulus = "0";
    std::string suite = "all";
};

/// Inline JSON if it starts like JSON, otherwise a file path.
Json load(const std::string& source)
{
    auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (source[first] == '{' || source[first] == '['))
        return json_io::parse(source);
    std::ifstream f(source);
    if (!f)
        throw Error(ErrorCode::Malformed, "cannot read '" + source + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return json_io::parse(ss.str());
}

std::pair<int, int> parse_range(const std::string& r)
{
    auto colon = r.find(':');
    try {
        if (colon == std::string::npos)
            throw std::invalid_argument(r);
        return {std::stoi(r.substr(0, colon)), std::stoi(r.substr(colon + 1))};
    } catch (const std::exception&) {
        throw Error(ErrorCode::Malformed, "range must look like lo:hi, got '" + r + "'");
    }
}

std::vector<NormalForm> input_forms(const Options& o)
{
    std::vector<NormalForm> out;
    for (const auto& b : o.blocks)
        out.push_back(json_io::decode_normal_form(load(b)));
    if (out.empty() && !o.in.empty())
        out.push_back(json_io::decode_normal_form(load(o.in)));
    if (out.empty())
        throw Error(ErrorCode::Malformed, "no normal form given (use --blocks or --in)");
    return out;
}

// Plain text tables: columns padded to the widest entry.
std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> w(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        w[c] = header[c].size();
        for (const auto& r : rows)
            w[c] = std::max(w[c], r[c].size());
    }
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& r) {
        std::ostringstream l;
        for (std::size_t c = 0; c < r.size(); ++c)
            l << std::left << std::setw(static_cast<int>(w[c] + 2)) << r[c];
        std::string text = l.str();
        text.erase(text.find_last_not_of(' ') + 1);
        os << text << "\n";
    };
    line(header);
    for (const auto& r : rows)
        line(r);
    return os.str();
}

std::string cell(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string render_table(const Json& j)
{
    if (j.is_array() && (j.empty() || j.front().contains("kind"))) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& b : j) {
            std::string params;
            for (const auto& [k, v] : b.items())
                if (k != "kind")
                    params += (params.empty() ? "" : " ") + k + "=" + cell(v);
            rows.push_back({cell(b["kind"]), params});
        }
        return table({"block", "parameters"}, rows);
    }
    if (j.contains("groups")) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& g : j["groups"])
            rows.push_back({cell(g["degree"]), cell(g["free"]), cell(g["torsion"])});
        return "model: " + cell(j["model"]) + "\n" + table({"degree", "free", "torsion"}, rows);
    }
    if (j.contains("towers")) {
        std::vector<std::vector<std::string>> rows;
        std::size_t k = 0;
        for (const auto& t : j["towers"])
            rows.push_back({std::to_string(k++), cell(t["label"]), cell(t["p"]), cell(t["q"]), cell(t["height"])});
        std::string s = "E_" + cell(j["page"]) + "\n" + table({"#", "label", "p", "q", "height"}, rows);
        for (const auto& d : j["differential"])
            s += "d: #" + cell(d["from"]) + " -> rho^" + cell(d["power"]) + " #" + cell(d["to"]) + "\n";
        return s;
    }
    if (j.contains("cells")) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& c : j["cells"])
            rows.push_back({cell(c["id"]), cell(c["weight"])});
        std::string s = table({"cell", "weight"}, rows);
        for (const auto& a : j["attach"])
            s += cell(a["from"]) + " -> " + cell(a["to"]) + " : " + cell(a["coeff"]) + "\n";
        return s;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& [k, v] : j.items())
        rows.push_back({k, v.is_structured() ? v.dump() : cell(v)});
    return table({"field", "value"}, rows);
}

void emit(std::ostream& out, const Options& o, const Json& j)
{
    if (o.format == "table")
        out << render_table(j);
    else
        out << j.dump(2) << "\n";
}

int cmd_decompose(const Options& o, std::ostream& out)
{
    if (o.in.empty())
        throw Error(ErrorCode::Malformed, "decompose needs --in");
    TateComplex c = json_io::decode_complex(load(o.in));
    auto rep = validate_complex(c);
    if (!rep.ok()) {
        emit(out, o, json_io::encode(rep));
        return kValidationFailure;
    }
    NormalForm a = decompose(c);
    spdlog::info("decomposed {} cells into {} blocks", c.cells.size(), a.size());
    emit(out, o, json_io::encode(a));
    return kOk;
}

int cmd_realize(const Options& o, std::ostream& out)
{
    emit(out, o, json_io::encode(realize(input_forms(o).front())));
    return kOk;
}

int cmd_tensor(const Options& o, std::ostream& out)
{
    auto forms = input_forms(o);
    NormalForm acc = forms.front();
    for (std::size_t k = 1; k < forms.size(); ++k)
        acc = tensor(acc, forms[k]);
    emit(out, o, json_io::encode(acc));
    return kOk;
}

int cmd_pages(const Options& o, std::ostream& out)
{
    NormalForm a = input_forms(o).front();
    int lo = 2, hi = degeneracy_page(a);
    if (o.page)
        lo = hi = *o.page;
    else if (!o.range.empty())
        std::tie(lo, hi) = parse_range(o.range);
    if (hi - lo > 1000)
        throw Error(ErrorCode::Malformed, "page range too large");
    if (lo == hi) {
        emit(out, o, json_io::encode(pages(a, lo)));
        return kOk;
    }
    Json all = Json::array();
    for (int i = lo; i <= hi; ++i)
        all.push_back(json_io::encode(pages(a, i)));
    if (o.format == "table")
        for (const auto& p : all)
            out << render_table(p) << "\n";
    else
        out << all.dump(2) << "\n";
    return kOk;
}

int cmd_cohomology(const Options& o, std::ostream& out)
{
    NormalForm a = input_forms(o).front();
    GradedGroup g;
    if (o.kind == "witt")
        g = witt_cohomology(a, json_io::decode_bigint(Json(o.modulus)));
    else if (o.kind == "chow")
        g = chow(a);
    else if (o.kind == "chow-mod2")
        g = chow(a, true);
    if (!o.range.empty()) {
        auto [lo, hi] = parse_range(o.range);
        GradedGroup cut;
        for (const auto& [d, x] : g.degrees())
            if (lo <= d && d <= hi)
                cut.set(d, x);
        g = cut;
    }
    emit(out, o, json_io::encode(g));
    return kOk;
}

int cmd_classify(const Options& o, std::ostream& out)
{
    if (!o.rank)
        throw Error(ErrorCode::Malformed, "classify-hp1 needs --rank");
    Hp1BundleClass c;
    if (o.c2)
        c = hp1_classify(*o.rank, json_io::decode_bigint(Json(*o.c2)));
    else if (!o.euler.empty())
        c = hp1_classify(*o.rank, json_io::decode_gw(o.euler));
    else
        throw Error(ErrorCode::Malformed, "classify-hp1 needs --euler or --c2");
    emit(out, o, json_io::encode(c));
    return kOk;
}

int cmd_pbundle(const Options& o, std::ostream& out)
{
    if (o.euler.empty())
        throw Error(ErrorCode::Malformed, "pbundle-hp1 needs --euler");
    TateComplex c = projective_bundle_hp1(json_io::decode_gw(o.euler));
    NormalForm a = decompose(c);
    Json j{{"complex", json_io::encode(c)},
           {"normal_form", json_io::encode(a)},
           {"witt", json_io::encode(witt_cohomology(a))},
           {"degeneracy_page", degeneracy_page(a)}};
    emit(out, o, j);
    return kOk;
}

int cmd_blowup(const Options& o, std::ostream& out)
{
    if (o.in.empty())
        throw Error(ErrorCode::Malformed, "blowup needs --in");
    Json in = load(o.in);
    for (const char* key : {"X", "Z", "n", "Th"})
        if (!in.is_object() || !in.contains(key))
            throw Error(ErrorCode::Malformed, std::string("blowup input lacks '") + key + "'");
    if (!in["n"].is_number_integer())
        throw Error(ErrorCode::Malformed, "'n' must be an integer");
    auto b = blowup_motive(json_io::decode_complex(in["X"]), json_io::decode_normal_form(in["Z"]), in["n"].get<int>(),
                           json_io::decode_complex(in["Th"]),
                           json_io::decode_eta_entries(in.value("g", Json::array())));
    auto rep = blowup_eta_check(b);
    Json j{{"total", json_io::encode(b.total)},
           {"cone_part", json_io::encode(b.cone_part)},
           {"eta_terms", json_io::encode(b.eta_terms)},
           {"eta_check", json_io::encode(rep)}};
    emit(out, o, j);
    return rep.holds ? kOk : kValidationFailure;
}

int cmd_check(const Options& o, std::ostream& out)
{
    std::vector<const checks::Suite*> chosen;
    if (o.suite == "all") {
        for (const auto& s : checks::acceptance_suites())
            chosen.push_back(&s);
    } else if (const auto* s = checks::find_suite(o.suite)) {
        chosen.push_back(s);
    } else {
        throw Error(ErrorCode::Malformed, "unknown suite '" + o.suite + "'");
    }
    Json results = Json::array();
    bool all = true;
    for (const auto* s : chosen) {
        spdlog::info("running suite {}", s->name);
        auto r = s->run(o.seed);
        all = all && r.pass;
        results.push_back({{"id", s->id},
                           {"suite", s->name},
                           {"pass", r.pass},
                           {"cases", r.cases},
                           {"failed", r.failed},
                           {"failures", r.failures},
                           {"notes", r.notes}});
    }
    Json j{{"seed", o.seed}, {"pass", all}, {"results", results}};
    if (o.format == "table") {
        for (const auto& r : results)
            out << (r["pass"].get<bool>() ? "PASS" : "FAIL") << " [" << cell(r["id"]) << "] " << cell(r["suite"])
                << " (" << cell(r["cases"]) << " cases)\n";
    } else {
        out << j.dump(2) << "\n";
    }
    return all ? kOk : kValidationFailure;
}

void configure_logging(std::ostream& err)
{
    auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
    auto logger = std::make_shared<spdlog::logger>("mwtate", sink);
    logger->set_pattern("[%l] %v");
    auto level = spdlog::level::warn;
    if (const char* env = std::getenv("MWTATE_LOG"))
        level = spdlog::level::from_str(env);
    logger->set_level(level);
    spdlog::set_default_logger(logger);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    configure_logging(err);
    Options o;
    CLI::App app{"Tate Milnor-Witt motives: decomposition, invariants, Bockstein pages"};
    app.require_subcommand(1, 1);
    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--model", o.model, "Coefficient model")->check(CLI::IsMember({"minimal-euclidean"}));
    };
    auto forms = [&](CLI::App* sub) {
        sub->add_option("--blocks", o.blocks, "Normal form JSON (inline or path); repeatable")
            ->allow_extra_args(false);
        sub->add_option("--in", o.in, "Input JSON (inline or path)");
    };

    auto* decompose_cmd = app.add_subcommand("decompose", "Normal form of a Tate complex");
    decompose_cmd->add_option("--in", o.in, "Complex JSON (inline or path)")->required();
    auto* realize_cmd = app.add_subcommand("realize", "Canonical complex of an odd-free normal form");
    forms(realize_cmd);
    auto* tensor_cmd = app.add_subcommand("tensor", "Tensor product of normal forms");
    forms(tensor_cmd);
    auto* pages_cmd = app.add_subcommand("pages", "Bockstein pages of a normal form");
    forms(pages_cmd);
    pages_cmd->add_option("--page", o.page, "Single page index")->check(CLI::Range(2, 1 << 20));
    pages_cmd->add_option("--range", o.range, "Pages lo:hi (default 2 to the degeneration page)");
    auto* coh_cmd = app.add_subcommand("cohomology", "Chow or Witt cohomology of a normal form");
    forms(coh_cmd);
    coh_cmd->add_option("--kind", o.kind, "witt | chow | chow-mod2")
        ->check(CLI::IsMember({"witt", "chow", "chow-mod2"}));
    coh_cmd->add_option("--modulus", o.modulus, "Witt coefficients modulo m (0 = integral)");
    coh_cmd->add_option("--range", o.range, "Degrees lo:hi");
    auto* classify_cmd = app.add_subcommand("classify-hp1", "Classify a bundle on HP1");
    classify_cmd->add_option("--rank", o.rank, "Bundle rank")->required();
    auto* euler_opt = classify_cmd->add_option("--euler", o.euler, "Euler class rank,signature (rank 2)");
    classify_cmd->add_option("--c2", o.c2, "Second Chern class (rank >= 3)")->excludes(euler_opt);
    auto* pbundle_cmd = app.add_subcommand("pbundle-hp1", "Projective bundle over HP1");
    pbundle_cmd->add_option("--euler", o.euler, "Euler class rank,signature")->required();
    auto* blowup_cmd = app.add_subcommand("blowup", "Blow-up motive from X, Z, n, Th, g");
    blowup_cmd->add_option("--in", o.in, "Input JSON {X, Z, n, Th, g}")->required();
    auto* check_cmd = app.add_subcommand("check", "Run acceptance suites");
    check_cmd->add_option("--suite", o.suite, "Suite name, id, or 'all'");
    check_cmd->add_option("--seed", o.seed, "Random seed");
    for (auto* sub : app.get_subcommands({}))
        common(sub);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        if (decompose_cmd->parsed())
            return cmd_decompose(o, out);
        if (realize_cmd->parsed())
            return cmd_realize(o, out);
        if (tensor_cmd->parsed())
            return cmd_tensor(o, out);
        if (pages_cmd->parsed())
            return cmd_pages(o, out);
        if (coh_cmd->parsed())
            return cmd_cohomology(o, out);
        if (classify_cmd->parsed())
            return cmd_classify(o, out);
        if (pbundle_cmd->parsed())
            return cmd_pbundle(o, out);
        if (blowup_cmd->parsed())
            return cmd_blowup(o, out);
        return cmd_check(o, out);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Malformed) {
            err << e.what() << "\n";
            return kMalformed;
        }
        emit(out, o, Json{{"error", std::string(error_name(e.code()))}, {"message", e.what()}});
        return kValidationFailure;
    }
}

}  // namespace mwtate::cli
