#include "singshadow/cli.hpp"

#include "singshadow/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>

namespace singshadow {

namespace {

using json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

const char * status_name(CheckStatus s)
{
    switch (s) {
        case CheckStatus::passed: return "pass";
        case CheckStatus::failed: return "FAIL";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

json multiset_json(const InvariantMultiset & m)
{
    json terms = json::array();
    for (const auto & e : m.entries())
        terms.push_back({{"multiplicity", e.multiplicity}, {"exponent", e.exponent.render()}});
    return {{"value", m.render()}, {"total", m.total()}, {"terms", terms}};
}

struct Options
{
    unsigned workers = 1;
    bool as_json = false;
};

int print_report(std::ostream & out, const std::string & kind, const std::string & name, const AxiomReport & report,
    const std::function<std::string(const AxiomCheck &)> & witness, bool as_json)
{
    if (as_json) {
        json checks = json::array();
        for (const auto & c : report.checks) {
            json e = {{"axiom", c.axiom}, {"status", status_name(c.status)}};
            if (c.status == CheckStatus::failed)
                e["witness"] = witness(c);
            checks.push_back(e);
        }
        out << json{{"kind", kind}, {"name", name}, {"passed", report.passed()}, {"checks", checks}}.dump(2) << "\n";
    }
    else {
        out << kind << " " << name << "\n";
        for (const auto & c : report.checks) {
            out << "  " << c.axiom << ": " << status_name(c.status);
            if (c.status == CheckStatus::failed)
                out << " at " << witness(c);
            out << "\n";
        }
        out << (report.passed() ? "valid" : "invalid") << "\n";
    }
    return report.passed() ? exit_ok : exit_failed;
}

int cmd_verify(const std::string & what, const std::string & file, const Options & o, std::ostream & out)
{
    if (what == "singquandle") {
        auto src = load_singquandle_source(file);
        auto report = verify_axioms(src.tables);
        const auto & labels = src.tables.elements;
        return print_report(out, "singquandle", src.tables.name, report,
            [&](const AxiomCheck & c) {
                std::string s = "(";
                for (std::size_t i = 0; i < c.witness.size(); ++i)
                    s += (i ? ", " : "") + labels.at(c.witness[i]);
                return s + ")";
            },
            o.as_json);
    }
    auto src = load_shadow_source(file);
    auto report = verify_shadow_axioms(src.host, src.x_elements.size(), src.action);
    return print_report(out, "shadow", src.name, report,
        [&](const AxiomCheck & c) { return describe_shadow_witness(c, src.host, src.x_elements); }, o.as_json);
}

std::string tuple_of(const SingularDiagram &, const FiniteSingquandle & q, const ColoringAssignment & f)
{
    std::string s = "(";
    for (std::size_t i = 0; i < f.values.size(); ++i)
        s += (i ? ", " : "") + q.label(f.values[i]);
    return s + ")";
}

int cmd_colorings(const std::string & diagram, const std::string & structure, bool list, const Options & o, std::ostream & out)
{
    auto d = load_diagram(diagram);
    auto q = load_singquandle(structure);
    auto cols = colorings(d, q, {o.workers});
    if (o.as_json) {
        json arr = json::array();
        for (const auto & f : cols) {
            json row = json::array();
            for (ElementId v : f.values)
                row.push_back(q.label(v));
            arr.push_back(row);
        }
        json j = {{"diagram", d.name()}, {"structure", q.name()}, {"arcs", d.arc_names()}, {"count", cols.size()}};
        if (list)
            j["colorings"] = arr;
        out << j.dump(2) << "\n";
        return exit_ok;
    }
    out << cols.size() << "\n";
    if (list) {
        std::string header = "(";
        for (std::size_t i = 0; i < d.arcs().size(); ++i)
            header += (i ? ", " : "") + d.arcs()[i].name;
        out << header << ")\n";
        for (const auto & f : cols)
            out << tuple_of(d, q, f) << "\n";
    }
    return exit_ok;
}

struct InvariantArgs
{
    std::string kind;
    std::string diagram;
    std::string structure;
    std::string shadow;
};

int cmd_invariant(const InvariantArgs & a, const Options & o, std::ostream & out, std::ostream & err)
{
    static const std::vector<std::string> kinds = {"count", "ssqp", "sp-struct", "shadow-count", "SP"};
    if (std::find(kinds.begin(), kinds.end(), a.kind) == kinds.end()) {
        err << "unknown invariant '" << a.kind << "' (expected count, ssqp, sp-struct, shadow-count or SP)\n";
        return exit_usage;
    }

    bool needs_shadow = a.kind == "sp-struct" || a.kind == "shadow-count" || a.kind == "SP";
    if (needs_shadow && a.shadow.empty()) {
        err << "invariant " << a.kind << " needs --shadow\n";
        return exit_usage;
    }
    if (! needs_shadow && a.structure.empty() && a.shadow.empty()) {
        err << "invariant " << a.kind << " needs --structure\n";
        return exit_usage;
    }
    if (a.kind == "sp-struct" && ! a.diagram.empty()) {
        err << "invariant sp-struct takes no diagram\n";
        return exit_usage;
    }
    if (a.kind != "sp-struct" && a.diagram.empty()) {
        err << "invariant " << a.kind << " needs a diagram\n";
        return exit_usage;
    }

    EnumerationOptions eo{o.workers};
    json j = {{"invariant", a.kind}};
    std::string text;

    if (a.kind == "sp-struct") {
        auto sh = load_shadow(a.shadow);
        auto p = sp(sh);
        j["shadow"] = sh.name();
        j["value"] = p.render();
        text = p.render();
    }
    else {
        auto d = load_diagram(a.diagram);
        j["diagram"] = d.name();
        if (needs_shadow) {
            auto sh = load_shadow(a.shadow);
            j["shadow"] = sh.name();
            if (a.kind == "shadow-count") {
                auto n = shadow_counting(d, sh, eo);
                j["value"] = n;
                text = std::to_string(n);
            }
            else {
                auto m = sp_invariant(d, sh, eo);
                j.update(multiset_json(m));
                text = m.render();
            }
        }
        else {
            auto q = a.structure.empty() ? load_shadow(a.shadow).host() : load_singquandle(a.structure);
            j["structure"] = q.name();
            if (a.kind == "count") {
                auto n = counting(d, q, eo);
                j["value"] = n;
                text = std::to_string(n);
            }
            else {
                auto m = ssqp_invariant(d, q, eo);
                j.update(multiset_json(m));
                text = m.render();
            }
        }
    }

    if (o.as_json)
        out << j.dump(2) << "\n";
    else
        out << text << "\n";
    return exit_ok;
}

int cmd_regions(const std::string & diagram, const Options & o, std::ostream & out)
{
    auto d = load_diagram(diagram);
    auto rm = trace_regions(d);
    const auto & sas = d.semi_arcs();
    if (o.as_json) {
        json sides = json::array();
        for (std::size_t s = 0; s < sas.size(); ++s)
            sides.push_back({{"semi_arc", sas[s].name}, {"arc", d.arcs()[sas[s].arc].name}, {"left", rm.left_face[s]},
                {"right", rm.right_face[s]}});
        out << json{{"diagram", d.name()}, {"vertices", d.vertices().size()}, {"faces", rm.face_count}, {"sides", sides}}
                   .dump(2)
            << "\n";
        return exit_ok;
    }
    out << "vertices " << d.vertices().size() << "\n";
    out << "faces " << rm.face_count << "\n";
    for (std::size_t s = 0; s < sas.size(); ++s)
        out << sas[s].name << " (arc " << d.arcs()[sas[s].arc].name << "): left " << rm.left_face[s] << ", right "
            << rm.right_face[s] << "\n";
    return exit_ok;
}

int cmd_distinguish(
    const std::string & d1, const std::string & d2, const std::string & shadow, const Options & o, std::ostream & out)
{
    auto a = load_diagram(d1);
    auto b = load_diagram(d2);
    auto sh = load_shadow(shadow);
    auto r = distinguish(a, b, sh, {o.workers});
    if (o.as_json) {
        json entries = json::array();
        for (const auto & e : r.entries)
            entries.push_back({{"invariant", e.invariant}, {"first", e.first}, {"second", e.second}, {"equal", e.equal}});
        out << json{{"first", a.name()}, {"second", b.name()}, {"shadow", sh.name()}, {"distinguished", ! r.all_equal()},
                   {"entries", entries}}
                   .dump(2)
            << "\n";
    }
    else {
        for (const auto & e : r.entries) {
            out << e.invariant << ": " << (e.equal ? "equal" : "different") << "\n";
            out << "  " << a.name() << ": " << e.first << "\n";
            out << "  " << b.name() << ": " << e.second << "\n";
        }
    }
    return r.all_equal() ? exit_ok : exit_failed;
}

int cmd_search_linear(long long modulus, const Options & o, std::ostream & out)
{
    auto specs = enumerate_linear(modulus, o.workers);
    if (o.as_json) {
        json arr = json::array();
        for (const auto & s : specs)
            arr.push_back({{"modulus", s.modulus}, {"a", s.a}, {"b", s.b}, {"c", s.c}});
        out << json{{"modulus", modulus}, {"count", specs.size()}, {"specs", arr}}.dump(2) << "\n";
        return exit_ok;
    }
    for (const auto & s : specs)
        out << "a=" << s.a << " b=" << s.b << " c=" << s.c << "\n";
    out << specs.size() << " structures\n";
    return exit_ok;
}

int cmd_search_shadows(const std::string & structure, long long size, unsigned degree, const Options & o, std::ostream & out)
{
    auto q = load_singquandle(structure);
    auto specs = search_polynomial_shadows(q, size, degree, o.workers);
    if (o.as_json) {
        json arr = json::array();
        for (const auto & s : specs)
            arr.push_back({{"coeffs", s.coeffs}, {"formula", render_action_formula(s)}});
        out << json{{"structure", q.name()}, {"size", size}, {"count", specs.size()}, {"actions", arr}}.dump(2) << "\n";
        return exit_ok;
    }
    for (const auto & s : specs) {
        out << "(";
        for (std::size_t i = 0; i < 6; ++i)
            out << (i ? "," : "") << s.coeffs[i];
        out << ") x.s = " << render_action_formula(s) << "\n";
    }
    out << specs.size() << " actions\n";
    return exit_ok;
}

int cmd_builtin_list(const Options & o, std::ostream & out)
{
    if (o.as_json) {
        out << json{{"diagrams", builtin_names()}, {"structures", builtin_structure_names()},
                   {"shadows", builtin_shadow_names()}}
                   .dump(2)
            << "\n";
        return exit_ok;
    }
    out << "diagrams:\n";
    for (const auto & n : builtin_names())
        out << "  " << n << "\n";
    out << "structures:\n";
    for (const auto & n : builtin_structure_names())
        out << "  " << n << "\n";
    out << "shadows:\n";
    for (const auto & n : builtin_shadow_names())
        out << "  " << n << "\n";
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Finite singquandles, shadows and singular link invariants", "singshadow"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--workers", opt.workers, "Worker threads for enumeration")->check(CLI::Range(1u, 256u));
    app.add_flag("--json", opt.as_json, "Machine-readable output");

    auto * verify = app.add_subcommand("verify", "Check the axioms of a singquandle or shadow file");
    std::string verify_kind, verify_file;
    verify->add_option("kind", verify_kind, "singquandle or shadow")->required()->check(CLI::IsMember({"singquandle", "shadow"}));
    verify->add_option("file", verify_file, "File or builtin name")->required();

    auto * col = app.add_subcommand("colorings", "Count or list colorings of a diagram");
    std::string col_diagram, col_structure;
    bool col_list = false;
    col->add_option("diagram", col_diagram, "Diagram file or builtin name")->required();
    col->add_option("--structure", col_structure, "Singquandle file or builtin name")->required();
    col->add_flag("--list", col_list, "Print every coloring");

    auto * inv = app.add_subcommand("invariant", "Compute an invariant");
    InvariantArgs ia;
    inv->add_option("kind", ia.kind, "count, ssqp, sp-struct, shadow-count or SP")->required();
    inv->add_option("diagram", ia.diagram, "Diagram file or builtin name");
    inv->add_option("--structure", ia.structure, "Singquandle file or builtin name");
    inv->add_option("--shadow", ia.shadow, "Shadow file or builtin name");

    auto * reg = app.add_subcommand("regions", "Trace the faces of a diagram");
    std::string reg_diagram;
    reg->add_option("diagram", reg_diagram, "Diagram file or builtin name")->required();

    auto * dist = app.add_subcommand("distinguish", "Compare two diagrams under every invariant");
    std::string d1, d2, dist_shadow;
    dist->add_option("first", d1, "Diagram file or builtin name")->required();
    dist->add_option("second", d2, "Diagram file or builtin name")->required();
    dist->add_option("--shadow", dist_shadow, "Shadow file or builtin name")->required();

    auto * search = app.add_subcommand("search", "Search linear singquandles or polynomial shadows");
    search->require_subcommand(1);
    auto * s_linear = search->add_subcommand("linear", "Linear singquandles over Z_n passing every axiom");
    long long modulus = 0;
    s_linear->add_option("--modulus", modulus, "n")->required()->check(CLI::Range(1LL, 64LL));
    auto * s_shadows = search->add_subcommand("shadows", "Polynomial actions of degree at most 2");
    std::string s_structure;
    long long s_size = 0;
    unsigned s_degree = 2;
    s_shadows->add_option("--structure", s_structure, "Singquandle file or builtin name")->required();
    s_shadows->add_option("--size", s_size, "m = |X|")->required()->check(CLI::Range(1LL, 16LL));
    s_shadows->add_option("--max-degree", s_degree, "0, 1 or 2")->check(CLI::Range(0u, 2u));

    auto * bi = app.add_subcommand("builtin", "Builtin fixtures");
    bi->require_subcommand(1);
    auto * bi_list = bi->add_subcommand("list", "List builtin diagrams, structures and shadows");

    for (auto * sub : {verify, col, inv, reg, dist, search, s_linear, s_shadows, bi, bi_list})
        sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    try {
        if (*verify)
            return cmd_verify(verify_kind, verify_file, opt, out);
        if (*col)
            return cmd_colorings(col_diagram, col_structure, col_list, opt, out);
        if (*inv)
            return cmd_invariant(ia, opt, out, err);
        if (*reg)
            return cmd_regions(reg_diagram, opt, out);
        if (*dist)
            return cmd_distinguish(d1, d2, dist_shadow, opt, out);
        if (*s_linear)
            return cmd_search_linear(modulus, opt, out);
        if (*s_shadows)
            return cmd_search_shadows(s_structure, s_size, s_degree, opt, out);
        if (*bi_list)
            return cmd_builtin_list(opt, out);
    }
    catch (const ParseError & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const UnknownName & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const AxiomViolation & e) {
        err << "error: " << e.what() << "\n";
        return exit_failed;
    }
    catch (const Error & e) {
        err << "error: " << e.what() << "\n";
        return exit_failed;
    }
    err << app.help();
    return exit_usage;
}

} // namespace singshadow
