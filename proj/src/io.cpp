#include "singshadow/io.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

namespace singshadow {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

json parse_json(std::string_view text, const char * what)
{
    try {
        return json::parse(text);
    }
    catch (const json::parse_error & e) {
        throw ParseError(std::string(what) + " JSON: " + e.what());
    }
}

std::string label_of(const json & j)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_integer())
        return std::to_string(j.get<long long>());
    throw ParseError("element labels must be strings or integers, got " + j.dump());
}

long long integer_of(const json & j, const char * what)
{
    if (! j.is_number_integer())
        throw ParseError(std::string(what) + " must be an integer");
    return j.get<long long>();
}

void only_keys(const json & j, std::initializer_list<const char *> allowed, const char * what)
{
    for (const auto & [key, value] : j.items()) {
        bool ok = false;
        for (const char * a : allowed)
            ok = ok || key == a;
        if (! ok)
            throw ParseError(std::string("unknown key '") + key + "' in " + what);
    }
}

ElementId index_in(const std::vector<std::string> & labels, const std::string & label, const char * what)
{
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label)
            return i;
    throw UnknownName(std::string(what) + " has no element '" + label + "'");
}

OperationTable table_of(const json & j, const std::vector<std::string> & labels, const char * what)
{
    if (! j.is_array() || j.size() != labels.size())
        throw ParseError(std::string(what) + " must have " + std::to_string(labels.size()) + " rows");
    OperationTable t(labels.size());
    for (std::size_t x = 0; x < labels.size(); ++x) {
        const auto & row = j[x];
        if (! row.is_array() || row.size() != labels.size())
            throw ParseError(std::string(what) + " row " + std::to_string(x) + " must have " + std::to_string(labels.size())
                + " entries");
        for (std::size_t y = 0; y < labels.size(); ++y)
            t.at(x, y) = index_in(labels, label_of(row[y]), what);
    }
    return t;
}

json table_json(const OperationTable & t, const std::vector<std::string> & labels)
{
    json rows = json::array();
    for (const auto & row : t.rows()) {
        json r = json::array();
        for (ElementId v : row)
            r.push_back(labels[v]);
        rows.push_back(r);
    }
    return rows;
}

SingquandleSource source_from_json(const json & j)
{
    if (! j.is_object())
        throw ParseError("singquandle JSON must be an object");

    SingquandleSource src;
    if (j.contains("linear")) {
        only_keys(j, {"name", "linear"}, "linear singquandle");
        const auto & l = j["linear"];
        if (! l.is_object())
            throw ParseError("'linear' must be an object");
        only_keys(l, {"modulus", "a", "b", "c"}, "linear spec");
        for (const char * k : {"modulus", "a", "b", "c"})
            if (! l.contains(k))
                throw ParseError(std::string("linear spec needs '") + k + "'");
        LinearSingquandleSpec spec{integer_of(l["modulus"], "modulus"), integer_of(l["a"], "a"), integer_of(l["b"], "b"),
            integer_of(l["c"], "c")};
        src.tables = linear_tables(spec);
        if (j.contains("name"))
            src.tables.name = j["name"].get<std::string>();
        src.linear = true;
        return src;
    }

    only_keys(j, {"name", "elements", "star", "r1", "r2", "bar_star"}, "singquandle");
    for (const char * k : {"elements", "star", "r1", "r2"})
        if (! j.contains(k))
            throw ParseError(std::string("singquandle JSON needs '") + k + "'");
    if (! j["elements"].is_array() || j["elements"].empty())
        throw ParseError("'elements' must be a nonempty array");

    auto & t = src.tables;
    t.name = j.value("name", std::string("singquandle"));
    for (const auto & e : j["elements"])
        t.elements.push_back(label_of(e));
    t.star = table_of(j["star"], t.elements, "star");
    t.r1 = table_of(j["r1"], t.elements, "r1");
    t.r2 = table_of(j["r2"], t.elements, "r2");
    if (j.contains("bar_star"))
        t.bar_star = table_of(j["bar_star"], t.elements, "bar_star");
    return src;
}

FiniteSingquandle from_source(const SingquandleSource & src, AxiomPolicy table_policy)
{
    return FiniteSingquandle::from_tables(src.tables, src.linear ? AxiomPolicy::report : table_policy);
}

const std::vector<std::pair<std::string, std::string>> & structure_sources()
{
    static const std::vector<std::pair<std::string, std::string>> table = [] {
        std::vector<std::pair<std::string, std::string>> out;
        for (auto [n, a, b, c] : std::vector<std::array<int, 4>>{
                 {4, 3, 2, 3}, {6, 5, 2, 1}, {8, 5, 3, 4}, {8, 3, 7, 6}, {10, 3, 4, 6}, {12, 5, 5, 10}}) {
            std::string name = "z" + std::to_string(n) + "_a" + std::to_string(a) + "b" + std::to_string(b) + "c"
                + std::to_string(c);
            json j;
            j["name"] = name;
            j["linear"] = {{"modulus", n}, {"a", a}, {"b", b}, {"c", c}};
            out.emplace_back(name, j.dump());
        }
        return out;
    }();
    return table;
}

// Reference matrices, rows in X order, columns in host order 1, ..., n-1, 0.
const std::vector<std::pair<std::string, std::string>> & shadow_sources()
{
    static const std::vector<std::pair<std::string, std::string>> table = {
        {"shadow_z6_z2", R"({
  "name": "shadow_z6_z2",
  "host": "z6_a5b2c1",
  "x_elements": ["1", "0"],
  "matrix": [
    [1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0]
  ]
})"},
        {"shadow_z8_z4", R"({
  "name": "shadow_z8_z4",
  "host": "z8_a5b3c4",
  "x_elements": ["1", "2", "3", "0"],
  "matrix": [
    [0, 1, 0, 1, 0, 1, 0, 1],
    [1, 2, 1, 2, 1, 2, 1, 2],
    [2, 3, 2, 3, 2, 3, 2, 3],
    [3, 0, 3, 0, 3, 0, 3, 0]
  ]
})"},
        {"shadow_z8_w", R"({
  "name": "shadow_z8_w",
  "host": "z8_a5b3c4",
  "x_elements": ["1", "2", "3", "0"],
  "matrix": [
    [3, 3, 3, 3, 3, 3, 3, 3],
    [2, 2, 2, 2, 2, 2, 2, 2],
    [1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0]
  ]
})"},
        {"shadow_z10_z4", R"({
  "name": "shadow_z10_z4",
  "host": "z10_a3b4c6",
  "x_elements": ["1", "2", "3", "0"],
  "matrix": [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [3, 3, 3, 3, 3, 3, 3, 3, 3, 3],
    [2, 2, 2, 2, 2, 2, 2, 2, 2, 2]
  ]
})"},
        {"shadow_z8_z6", R"({
  "name": "shadow_z8_z6",
  "host": "z8_a3b7c6",
  "x_elements": ["1", "2", "3", "4", "5", "0"],
  "matrix": [
    [4, 1, 4, 1, 4, 1, 4, 1],
    [5, 2, 5, 2, 5, 2, 5, 2],
    [0, 3, 0, 3, 0, 3, 0, 3],
    [1, 4, 1, 4, 1, 4, 1, 4],
    [2, 5, 2, 5, 2, 5, 2, 5],
    [3, 0, 3, 0, 3, 0, 3, 0]
  ]
})"},
        {"shadow_z12_z8", R"({
  "name": "shadow_z12_z8",
  "host": "z12_a5b5c10",
  "x_elements": ["1", "2", "3", "4", "5", "6", "7", "0"],
  "matrix": [
    [3, 7, 7, 7, 3, 7, 7, 7, 3, 7, 7, 7],
    [2, 6, 6, 6, 2, 6, 6, 6, 2, 6, 6, 6],
    [1, 5, 5, 5, 1, 5, 5, 5, 1, 5, 5, 5],
    [0, 4, 4, 4, 0, 4, 4, 4, 0, 4, 4, 4],
    [7, 3, 3, 3, 7, 3, 3, 3, 7, 3, 3, 3],
    [6, 2, 2, 2, 6, 2, 2, 2, 6, 2, 2, 2],
    [5, 1, 1, 1, 5, 1, 1, 1, 5, 1, 1, 1],
    [4, 0, 0, 0, 4, 0, 0, 0, 4, 0, 0, 0]
  ]
})"},
    };
    return table;
}

template <typename Table>
std::string_view lookup(const Table & table, const std::string & name, const char * what)
{
    for (const auto & [n, text] : table)
        if (n == name)
            return text;
    throw UnknownName(std::string("no builtin ") + what + " '" + name + "'");
}

bool is_file(const fs::path & p)
{
    std::error_code ec;
    return fs::is_regular_file(p, ec);
}

FiniteSingquandle resolve_host(const json & h, const fs::path & base_dir)
{
    if (h.is_object())
        return from_source(source_from_json(h), AxiomPolicy::enforce);
    if (! h.is_string())
        throw ParseError("shadow 'host' must be an object, a path or a builtin name");
    std::string ref = h.get<std::string>();
    fs::path p = base_dir.empty() ? fs::path(ref) : base_dir / ref;
    if (is_file(p))
        return from_source(source_from_json(parse_json(read_text_file(p), "singquandle")), AxiomPolicy::enforce);
    return builtin_structure(ref);
}

std::string tuple_text(const std::vector<std::string> & parts)
{
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? ", " : "") + parts[i];
    return out + ")";
}

} // namespace

SingquandleSource parse_singquandle_source(std::string_view text)
{
    return source_from_json(parse_json(text, "singquandle"));
}

FiniteSingquandle parse_singquandle(std::string_view text, AxiomPolicy table_policy)
{
    return from_source(parse_singquandle_source(text), table_policy);
}

std::string singquandle_to_json(const FiniteSingquandle & q)
{
    json j;
    j["name"] = q.name();
    j["elements"] = q.elements();
    j["star"] = table_json(q.star_table(), q.elements());
    j["r1"] = table_json(q.r1_table(), q.elements());
    j["r2"] = table_json(q.r2_table(), q.elements());
    j["bar_star"] = table_json(q.bar_star_table(), q.elements());
    return j.dump(2);
}

ShadowSource parse_shadow_source(std::string_view text, const fs::path & base_dir)
{
    json j = parse_json(text, "shadow");
    if (! j.is_object())
        throw ParseError("shadow JSON must be an object");
    if (! j.contains("host"))
        throw ParseError("shadow JSON needs 'host'");

    ShadowSource src{resolve_host(j["host"], base_dir), {}, {}, j.value("name", std::string("shadow"))};
    if (j.contains("polynomial_action")) {
        only_keys(j, {"name", "host", "polynomial_action"}, "shadow");
        const auto & pa = j["polynomial_action"];
        only_keys(pa, {"modulus", "coeffs"}, "polynomial_action");
        if (! pa.contains("modulus") || ! pa.contains("coeffs") || ! pa["coeffs"].is_array() || pa["coeffs"].size() != 6)
            throw ParseError("polynomial_action needs 'modulus' and six 'coeffs'");
        PolynomialActionSpec spec;
        spec.modulus = integer_of(pa["modulus"], "modulus");
        for (std::size_t i = 0; i < 6; ++i)
            spec.coeffs[i] = integer_of(pa["coeffs"][i], "coefficient");
        src.action = polynomial_action_matrix(src.host, spec);
        for (std::size_t i = 0; i < static_cast<std::size_t>(spec.modulus); ++i)
            src.x_elements.push_back(std::to_string(index_to_residue(i, spec.modulus)));
        return src;
    }

    only_keys(j, {"name", "host", "x_elements", "matrix"}, "shadow");
    if (! j.contains("x_elements") || ! j["x_elements"].is_array() || j["x_elements"].empty())
        throw ParseError("shadow JSON needs a nonempty 'x_elements' array");
    if (! j.contains("matrix") || ! j["matrix"].is_array())
        throw ParseError("shadow JSON needs 'matrix' or 'polynomial_action'");
    for (const auto & e : j["x_elements"])
        src.x_elements.push_back(label_of(e));

    const auto & rows = j["matrix"];
    if (rows.size() != src.x_elements.size())
        throw ParseError("matrix must have one row per element of X");
    for (const auto & row : rows) {
        if (! row.is_array() || row.size() != src.host.size())
            throw ParseError("matrix rows must have one entry per host element");
        std::vector<ElementId> r;
        for (const auto & v : row)
            r.push_back(index_in(src.x_elements, label_of(v), "shadow set"));
        src.action.push_back(std::move(r));
    }
    return src;
}

ShadowStructure build_from_source(const ShadowSource & src, AxiomPolicy policy)
{
    return ShadowStructure::make(src.host, src.x_elements, src.action, policy, src.name);
}

ShadowStructure parse_shadow(std::string_view text, const fs::path & base_dir)
{
    return build_from_source(parse_shadow_source(text, base_dir));
}

std::string shadow_to_json(const ShadowStructure & sh)
{
    json j;
    j["name"] = sh.name();
    j["host"] = json::parse(singquandle_to_json(sh.host()));
    j["x_elements"] = sh.x_elements();
    json rows = json::array();
    for (const auto & row : sh.matrix()) {
        json r = json::array();
        for (ElementId v : row)
            r.push_back(sh.label(v));
        rows.push_back(r);
    }
    j["matrix"] = rows;
    return j.dump(2);
}

const std::vector<std::string> & builtin_structure_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto & [n, t] : structure_sources())
            out.push_back(n);
        return out;
    }();
    return names;
}

std::string_view builtin_structure_source(const std::string & name)
{
    return lookup(structure_sources(), name, "structure");
}

FiniteSingquandle builtin_structure(const std::string & name)
{
    return parse_singquandle(builtin_structure_source(name));
}

const std::vector<std::string> & builtin_shadow_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto & [n, t] : shadow_sources())
            out.push_back(n);
        return out;
    }();
    return names;
}

std::string_view builtin_shadow_source(const std::string & name)
{
    return lookup(shadow_sources(), name, "shadow");
}

ShadowStructure builtin_shadow(const std::string & name)
{
    return parse_shadow(builtin_shadow_source(name));
}

std::string read_text_file(const fs::path & path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw ParseError("cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SingquandleSource load_singquandle_source(const std::string & arg)
{
    if (is_file(arg))
        return parse_singquandle_source(read_text_file(arg));
    return parse_singquandle_source(builtin_structure_source(arg));
}

FiniteSingquandle load_singquandle(const std::string & arg, AxiomPolicy table_policy)
{
    return from_source(load_singquandle_source(arg), table_policy);
}

ShadowSource load_shadow_source(const std::string & arg)
{
    if (is_file(arg))
        return parse_shadow_source(read_text_file(arg), fs::path(arg).parent_path());
    return parse_shadow_source(builtin_shadow_source(arg));
}

ShadowStructure load_shadow(const std::string & arg)
{
    return build_from_source(load_shadow_source(arg));
}

SingularDiagram load_diagram(const std::string & arg)
{
    if (is_file(arg))
        return parse_diagram(read_text_file(arg));
    return builtin(arg);
}

std::string describe_witness(const AxiomCheck & check, const FiniteSingquandle & q)
{
    std::vector<std::string> parts;
    for (ElementId x : check.witness)
        parts.push_back(q.label(x));
    return tuple_text(parts);
}

std::string describe_shadow_witness(
    const AxiomCheck & check, const FiniteSingquandle & host, const std::vector<std::string> & x_elements)
{
    // action-bijective witnesses are (x1, x2, s), the others (x, s1, s2).
    bool two_x = check.axiom == "action-bijective";
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < check.witness.size(); ++i) {
        bool is_x = i == 0 || (i == 1 && two_x);
        parts.push_back(is_x ? x_elements.at(check.witness[i]) : host.label(check.witness[i]));
    }
    return tuple_text(parts);
}

} // namespace singshadow
