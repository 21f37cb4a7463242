#include "singshadow/diagram.hpp"

#include "parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace singshadow {

namespace {

constexpr std::array<std::string_view, role_count> role_names
    = {"under_in", "over_in", "under_out", "over_out", "left_in", "right_in", "left_out", "right_out"};

std::size_t idx(Role r)
{
    return static_cast<std::size_t>(r);
}

class UnionFind
{
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

std::string vertex_tag(std::size_t v)
{
    return "vertex " + std::to_string(v);
}

} // namespace

std::string_view kind_name(VertexKind k)
{
    switch (k) {
        case VertexKind::positive: return "positive";
        case VertexKind::negative: return "negative";
        case VertexKind::singular: return "singular";
    }
    return "?";
}

std::string_view role_name(Role r)
{
    return role_names[idx(r)];
}

VertexKind parse_kind(std::string_view name)
{
    if (name == "positive")
        return VertexKind::positive;
    if (name == "negative")
        return VertexKind::negative;
    if (name == "singular")
        return VertexKind::singular;
    throw MalformedVertex("unknown vertex kind '" + std::string(name) + "'");
}

Role parse_role(std::string_view name)
{
    auto it = std::find(role_names.begin(), role_names.end(), name);
    if (it == role_names.end())
        throw MalformedVertex("unknown role '" + std::string(name) + "'");
    return static_cast<Role>(it - role_names.begin());
}

bool is_out_role(Role r)
{
    return r == Role::under_out || r == Role::over_out || r == Role::left_out || r == Role::right_out;
}

std::array<Role, 4> roles_of(VertexKind k)
{
    if (k == VertexKind::singular)
        return {Role::left_in, Role::right_in, Role::left_out, Role::right_out};
    return {Role::under_in, Role::over_in, Role::under_out, Role::over_out};
}

std::array<Role, 4> default_ccw(VertexKind k)
{
    switch (k) {
        case VertexKind::positive: return {Role::under_in, Role::over_out, Role::under_out, Role::over_in};
        case VertexKind::negative: return {Role::over_in, Role::under_out, Role::over_out, Role::under_in};
        case VertexKind::singular: return {Role::left_in, Role::left_out, Role::right_out, Role::right_in};
    }
    return {};
}

std::size_t Vertex::ccw_position(Role r) const
{
    for (std::size_t i = 0; i < 4; ++i)
        if (ccw[i] == r)
            return i;
    throw MalformedVertex("role " + std::string(role_name(r)) + " is not in the rotation");
}

std::size_t SingularDiagram::arc_of(std::size_t vertex, Role r) const
{
    return semi_arcs_[vertices_.at(vertex).semi_arc_at(r)].arc;
}

std::size_t SingularDiagram::find_arc(const std::string & name) const
{
    for (std::size_t i = 0; i < arcs_.size(); ++i)
        if (arcs_[i].name == name)
            return i;
    throw UnknownName("no arc '" + name + "' in diagram " + name_);
}

std::vector<std::string> SingularDiagram::arc_names() const
{
    std::vector<std::string> out;
    for (const auto & a : arcs_)
        out.push_back(a.name);
    return out;
}

std::size_t SingularDiagram::singular_count() const
{
    return static_cast<std::size_t>(std::count_if(
        vertices_.begin(), vertices_.end(), [](const Vertex & v) { return v.kind == VertexKind::singular; }));
}

SingularDiagram make_diagram(
    std::string name, std::vector<VertexSpec> specs, const std::optional<std::vector<std::string>> & arc_order)
{
    if (specs.empty())
        throw MalformedVertex("diagram " + name + " has no vertices");

    constexpr std::size_t npos = SingularDiagram::npos;
    std::size_t nv = specs.size();
    std::vector<std::array<std::string, role_count>> labels(nv);
    std::vector<char> merged(nv, 0);
    std::vector<std::string> label_order;
    auto note_label = [&](const std::string & l) {
        if (std::find(label_order.begin(), label_order.end(), l) == label_order.end())
            label_order.push_back(l);
    };

    SingularDiagram d;
    d.name_ = std::move(name);
    d.vertices_.resize(nv);

    for (std::size_t v = 0; v < nv; ++v) {
        const auto & spec = specs[v];
        auto allowed = roles_of(spec.kind);
        std::array<char, role_count> seen{};
        for (const auto & [role, label] : spec.roles) {
            if (std::find(allowed.begin(), allowed.end(), role) == allowed.end())
                throw MalformedVertex(vertex_tag(v) + ": role " + std::string(role_name(role)) + " not allowed for "
                    + std::string(kind_name(spec.kind)) + " vertex");
            if (seen[idx(role)]++)
                throw MalformedVertex(vertex_tag(v) + ": role " + std::string(role_name(role)) + " given twice");
            if (label.empty())
                throw MalformedVertex(vertex_tag(v) + ": empty arc label");
            labels[v][idx(role)] = label;
            note_label(label);
        }
        if (spec.over) {
            if (spec.kind == VertexKind::singular)
                throw MalformedVertex(vertex_tag(v) + ": singular vertex cannot use 'over'");
            if (seen[idx(Role::over_in)] || seen[idx(Role::over_out)])
                throw MalformedVertex(vertex_tag(v) + ": 'over' combined with over_in/over_out");
            if (spec.over->empty())
                throw MalformedVertex(vertex_tag(v) + ": empty arc label");
            labels[v][idx(Role::over_in)] = labels[v][idx(Role::over_out)] = *spec.over;
            seen[idx(Role::over_in)] = seen[idx(Role::over_out)] = 1;
            merged[v] = 1;
            note_label(*spec.over);
        }
        for (Role r : allowed)
            if (! seen[idx(r)])
                throw MalformedVertex(vertex_tag(v) + ": missing role " + std::string(role_name(r)));

        auto & vert = d.vertices_[v];
        vert.kind = spec.kind;
        vert.ccw = spec.ccw.value_or(default_ccw(spec.kind));
        auto sorted_ccw = vert.ccw, sorted_roles = allowed;
        std::sort(sorted_ccw.begin(), sorted_ccw.end());
        std::sort(sorted_roles.begin(), sorted_roles.end());
        if (sorted_ccw != sorted_roles)
            throw MalformedVertex(vertex_tag(v) + ": ccw is not a permutation of the vertex roles");
        vert.semi_arc.fill(npos);
    }

    // Pair slots per label.
    for (const auto & label : label_order) {
        std::vector<SlotRef> outs, ins;
        std::vector<std::size_t> overs;
        for (std::size_t v = 0; v < nv; ++v) {
            if (merged[v] && labels[v][idx(Role::over_in)] == label)
                overs.push_back(v);
            for (Role r : roles_of(specs[v].kind)) {
                if (labels[v][idx(r)] != label)
                    continue;
                if (merged[v] && (r == Role::over_in || r == Role::over_out))
                    continue;
                (is_out_role(r) ? outs : ins).push_back({v, r});
            }
        }
        if (outs.size() > 1)
            throw DanglingArc(label, "leaves " + std::to_string(outs.size()) + " vertices");
        if (ins.size() > 1)
            throw DanglingArc(label, "enters " + std::to_string(ins.size()) + " vertices");
        if (outs.size() != ins.size())
            throw DanglingArc(label, outs.empty() ? "has no outgoing end" : "has no incoming end");
        if (outs.empty() && overs.empty())
            throw DanglingArc(label, "is never used");

        std::vector<std::pair<SlotRef, SlotRef>> chain;
        SlotRef from = outs.empty() ? SlotRef{overs.back(), Role::over_out} : outs.front();
        for (std::size_t v : overs) {
            chain.push_back({from, {v, Role::over_in}});
            from = {v, Role::over_out};
        }
        chain.push_back({from, ins.empty() ? SlotRef{overs.front(), Role::over_in} : ins.front()});
        if (outs.empty())
            chain.pop_back(); // cyclic: the first link already closes the loop

        for (std::size_t k = 0; k < chain.size(); ++k) {
            SemiArc sa;
            sa.label = label;
            sa.name = k == 0 ? label : label + "#" + std::to_string(k + 1);
            sa.tail = chain[k].first;
            sa.head = chain[k].second;
            std::size_t id = d.semi_arcs_.size();
            d.vertices_[sa.tail.vertex].semi_arc[idx(sa.tail.role)] = id;
            d.vertices_[sa.head.vertex].semi_arc[idx(sa.head.role)] = id;
            d.semi_arcs_.push_back(std::move(sa));
        }
    }

    // Arcs: semi-arcs joined through classical overpasses.
    std::size_t ns = d.semi_arcs_.size();
    UnionFind uf(ns);
    for (const auto & v : d.vertices_)
        if (v.kind != VertexKind::singular)
            uf.unite(v.semi_arc_at(Role::over_in), v.semi_arc_at(Role::over_out));

    std::map<std::size_t, std::size_t> start_of; // class root -> first semi-arc of the strand
    for (std::size_t s = 0; s < ns; ++s) {
        auto root = uf.find(s);
        auto it = start_of.find(root);
        if (it == start_of.end())
            start_of[root] = s;
        else if (d.semi_arcs_[it->second].tail.role == Role::over_out && d.semi_arcs_[s].tail.role != Role::over_out)
            it->second = s;
    }

    std::vector<Arc> arcs;
    for (const auto & entry : start_of) {
        std::size_t start = entry.second;
        Arc a;
        a.name = d.semi_arcs_[start].label;
        std::size_t s = start;
        do {
            a.semi_arcs.push_back(s);
            const auto & head = d.semi_arcs_[s].head;
            const auto & hv = d.vertices_[head.vertex];
            if (head.role != Role::over_in || hv.kind == VertexKind::singular)
                break;
            s = hv.semi_arc_at(Role::over_out);
        } while (s != start);
        arcs.push_back(std::move(a));
    }

    std::vector<std::string> order;
    if (arc_order) {
        order = *arc_order;
        if (order.size() != arcs.size())
            throw MalformedVertex("arc order lists " + std::to_string(order.size()) + " arcs, diagram has "
                + std::to_string(arcs.size()));
    }
    else {
        for (const auto & l : label_order)
            if (std::any_of(arcs.begin(), arcs.end(), [&](const Arc & a) { return a.name == l; }))
                order.push_back(l);
    }

    for (const auto & nm : order) {
        auto it = std::find_if(arcs.begin(), arcs.end(), [&](const Arc & a) { return a.name == nm; });
        if (it == arcs.end())
            throw UnknownName("arc order names unknown arc '" + nm + "'");
        if (std::any_of(d.arcs_.begin(), d.arcs_.end(), [&](const Arc & a) { return a.name == nm; }))
            throw MalformedVertex("arc '" + nm + "' listed twice in arc order");
        for (std::size_t s : it->semi_arcs)
            d.semi_arcs_[s].arc = d.arcs_.size();
        d.arcs_.push_back(*it);
    }

    d.specs_ = std::move(specs);
    return d;
}

namespace {

using ordered_json = nlohmann::ordered_json;

VertexSpec parse_vertex(const ordered_json & j, std::size_t v)
{
    if (! j.is_object())
        throw MalformedVertex(vertex_tag(v) + " is not an object");
    if (! j.contains("kind") || ! j["kind"].is_string())
        throw MalformedVertex(vertex_tag(v) + ": missing kind");

    VertexSpec spec;
    spec.kind = parse_kind(j["kind"].get<std::string>());
    for (const auto & [key, value] : j.items()) {
        if (key == "kind")
            continue;
        if (key == "ccw") {
            if (! value.is_array() || value.size() != 4)
                throw MalformedVertex(vertex_tag(v) + ": ccw must list four roles");
            std::array<Role, 4> ccw{};
            for (std::size_t i = 0; i < 4; ++i) {
                if (! value[i].is_string())
                    throw MalformedVertex(vertex_tag(v) + ": ccw entries must be role names");
                ccw[i] = parse_role(value[i].get<std::string>());
            }
            spec.ccw = ccw;
            continue;
        }
        if (! value.is_string())
            throw MalformedVertex(vertex_tag(v) + ": label for " + key + " must be a string");
        if (key == "over")
            spec.over = value.get<std::string>();
        else
            spec.roles.emplace_back(parse_role(key), value.get<std::string>());
    }
    return spec;
}

} // namespace

SingularDiagram parse_diagram(std::string_view text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    }
    catch (const nlohmann::json::parse_error & e) {
        throw ParseError(std::string("diagram JSON: ") + e.what());
    }
    if (! j.is_object())
        throw ParseError("diagram JSON must be an object");
    for (const auto & [key, value] : j.items())
        if (key != "name" && key != "vertices" && key != "arcs")
            throw ParseError("unknown diagram key '" + key + "'");
    if (! j.contains("vertices") || ! j["vertices"].is_array())
        throw ParseError("diagram JSON needs a 'vertices' array");

    std::string name = j.value("name", std::string("diagram"));
    std::vector<VertexSpec> specs;
    std::size_t v = 0;
    for (const auto & vj : j["vertices"])
        specs.push_back(parse_vertex(vj, v++));

    std::optional<std::vector<std::string>> arcs;
    if (j.contains("arcs")) {
        if (! j["arcs"].is_array())
            throw ParseError("'arcs' must be an array of names");
        arcs.emplace();
        for (const auto & a : j["arcs"]) {
            if (! a.is_string())
                throw ParseError("'arcs' must be an array of names");
            arcs->push_back(a.get<std::string>());
        }
    }
    return make_diagram(std::move(name), std::move(specs), arcs);
}

std::string diagram_to_json(const SingularDiagram & d)
{
    ordered_json j;
    j["name"] = d.name();
    j["arcs"] = d.arc_names();
    j["vertices"] = ordered_json::array();
    for (const auto & spec : d.specs()) {
        ordered_json v;
        v["kind"] = kind_name(spec.kind);
        for (const auto & [role, label] : spec.roles)
            v[std::string(role_name(role))] = label;
        if (spec.over)
            v["over"] = *spec.over;
        if (spec.ccw) {
            v["ccw"] = ordered_json::array();
            for (Role r : *spec.ccw)
                v["ccw"].push_back(role_name(r));
        }
        j["vertices"].push_back(v);
    }
    return j.dump(2);
}

namespace {

constexpr ElementId unassigned = static_cast<ElementId>(-1);

struct VertexArcs
{
    VertexKind kind;
    std::size_t in1, in2, out1, out2; // classical: ui, oi, uo, -; singular: li, ri, lo, ro
};

std::vector<VertexArcs> vertex_arcs(const SingularDiagram & d)
{
    std::vector<VertexArcs> out;
    for (std::size_t v = 0; v < d.vertices().size(); ++v) {
        auto k = d.vertices()[v].kind;
        if (k == VertexKind::singular)
            out.push_back({k, d.arc_of(v, Role::left_in), d.arc_of(v, Role::right_in), d.arc_of(v, Role::left_out),
                d.arc_of(v, Role::right_out)});
        else
            out.push_back({k, d.arc_of(v, Role::under_in), d.arc_of(v, Role::over_in), d.arc_of(v, Role::under_out),
                SingularDiagram::npos});
    }
    return out;
}

// Fixpoint of forward rules and the classical inverse rule. False on conflict.
bool propagate(const std::vector<VertexArcs> & cons, const FiniteSingquandle & q, std::vector<ElementId> & c)
{
    auto put = [&](std::size_t arc, ElementId value, bool & changed) {
        if (c[arc] == unassigned) {
            c[arc] = value;
            changed = true;
            return true;
        }
        return c[arc] == value;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto & k : cons) {
            if (k.kind == VertexKind::singular) {
                if (c[k.in1] == unassigned || c[k.in2] == unassigned)
                    continue;
                if (! put(k.out1, q.r1(c[k.in1], c[k.in2]), changed) || ! put(k.out2, q.r2(c[k.in1], c[k.in2]), changed))
                    return false;
                continue;
            }
            bool pos = k.kind == VertexKind::positive;
            ElementId over = c[k.in2];
            if (over == unassigned)
                continue;
            if (c[k.in1] != unassigned) {
                ElementId v = pos ? q.star(c[k.in1], over) : q.bar_star(c[k.in1], over);
                if (! put(k.out1, v, changed))
                    return false;
            }
            else if (c[k.out1] != unassigned) {
                ElementId v = pos ? q.bar_star(c[k.out1], over) : q.star(c[k.out1], over);
                if (! put(k.in1, v, changed))
                    return false;
            }
        }
    }
    return true;
}

void search(const std::vector<VertexArcs> & cons, const FiniteSingquandle & q, std::vector<ElementId> c,
    std::vector<ColoringAssignment> & out)
{
    auto next = std::find(c.begin(), c.end(), unassigned);
    if (next == c.end()) {
        out.push_back({std::move(c)});
        return;
    }
    auto pos = static_cast<std::size_t>(next - c.begin());
    for (ElementId v = 0; v < q.size(); ++v) {
        auto trial = c;
        trial[pos] = v;
        if (propagate(cons, q, trial))
            search(cons, q, std::move(trial), out);
    }
}

} // namespace

bool satisfies(const SingularDiagram & d, const FiniteSingquandle & q, const ColoringAssignment & f)
{
    if (f.values.size() != d.arcs().size())
        return false;
    const auto & c = f.values;
    for (ElementId v : c)
        if (v >= q.size())
            return false;
    for (const auto & k : vertex_arcs(d)) {
        if (k.kind == VertexKind::singular) {
            if (c[k.out1] != q.r1(c[k.in1], c[k.in2]) || c[k.out2] != q.r2(c[k.in1], c[k.in2]))
                return false;
        }
        else {
            ElementId v = k.kind == VertexKind::positive ? q.star(c[k.in1], c[k.in2]) : q.bar_star(c[k.in1], c[k.in2]);
            if (c[k.out1] != v)
                return false;
        }
    }
    return true;
}

std::vector<ColoringAssignment> colorings(
    const SingularDiagram & d, const FiniteSingquandle & q, const EnumerationOptions & options)
{
    auto cons = vertex_arcs(d);
    std::size_t na = d.arcs().size();
    std::vector<std::vector<ColoringAssignment>> parts(q.size());

    detail::parallel_for(q.size(), options.workers, [&](std::size_t first) {
        std::vector<ElementId> c(na, unassigned);
        c[0] = first;
        if (propagate(cons, q, c))
            search(cons, q, std::move(c), parts[first]);
    });

    std::vector<ColoringAssignment> out;
    for (auto & p : parts)
        out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    std::sort(out.begin(), out.end());
    return out;
}

RegionMap trace_regions(const SingularDiagram & d)
{
    std::size_t nv = d.vertices().size();
    const auto & sas = d.semi_arcs();

    UnionFind comp(nv);
    for (const auto & sa : sas)
        comp.unite(sa.tail.vertex, sa.head.vertex);
    for (std::size_t v = 1; v < nv; ++v)
        if (comp.find(v) != comp.find(0))
            throw Disconnected("diagram " + d.name() + " is not connected (vertex " + std::to_string(v) + ")");

    // Corner (v, i) lies between ccw slots i and i+1 at vertex v.
    auto corner = [](std::size_t v, std::size_t i) { return v * 4 + i % 4; };
    UnionFind faces(nv * 4);
    std::vector<std::size_t> left_corner(sas.size()), right_corner(sas.size());
    for (std::size_t s = 0; s < sas.size(); ++s) {
        const auto & sa = sas[s];
        std::size_t i = d.vertices()[sa.tail.vertex].ccw_position(sa.tail.role);
        std::size_t j = d.vertices()[sa.head.vertex].ccw_position(sa.head.role);
        faces.unite(corner(sa.tail.vertex, i), corner(sa.head.vertex, j + 3));
        faces.unite(corner(sa.tail.vertex, i + 3), corner(sa.head.vertex, j));
        left_corner[s] = corner(sa.tail.vertex, i);
        right_corner[s] = corner(sa.tail.vertex, i + 3);
    }

    std::map<std::size_t, std::size_t> face_id;
    for (std::size_t c = 0; c < nv * 4; ++c) {
        auto root = faces.find(c);
        if (! face_id.count(root)) {
            auto next = face_id.size();
            face_id[root] = next;
        }
    }

    RegionMap rm;
    rm.face_count = face_id.size();
    if (rm.face_count != nv + 2)
        throw NonPlanar("diagram " + d.name() + " has " + std::to_string(rm.face_count) + " faces, a planar diagram with "
            + std::to_string(nv) + " vertices has " + std::to_string(nv + 2));

    rm.left_face.resize(sas.size());
    rm.right_face.resize(sas.size());
    rm.boundaries.resize(rm.face_count);
    for (std::size_t s = 0; s < sas.size(); ++s) {
        rm.left_face[s] = face_id[faces.find(left_corner[s])];
        rm.right_face[s] = face_id[faces.find(right_corner[s])];
        rm.boundaries[rm.left_face[s]].push_back({s, true});
        rm.boundaries[rm.right_face[s]].push_back({s, false});
    }
    return rm;
}

std::vector<ElementId> region_coloring(const SingularDiagram & d, const RegionMap & regions, const ShadowStructure & sh,
    const ColoringAssignment & f, std::size_t base_face, ElementId x0, PropagationOrder order)
{
    if (base_face >= regions.face_count)
        throw InconsistentRegionColoring("base face " + std::to_string(base_face) + " does not exist");
    if (x0 >= sh.size())
        throw InconsistentRegionColoring("base color out of range");
    if (f.values.size() != d.arcs().size())
        throw InconsistentRegionColoring("coloring does not match the diagram's arcs");

    const auto & sas = d.semi_arcs();
    std::size_t ns = sas.size();
    auto color_of = [&](std::size_t s) { return f.values[sas[s].arc]; };

    struct Step
    {
        std::size_t to;
        std::size_t semi_arc;
        bool to_left;
    };
    std::vector<std::vector<Step>> adj(regions.face_count);
    for (std::size_t k = 0; k < ns; ++k) {
        std::size_t s = order == PropagationOrder::forward ? k : ns - 1 - k;
        adj[regions.right_face[s]].push_back({regions.left_face[s], s, true});
        adj[regions.left_face[s]].push_back({regions.right_face[s], s, false});
    }

    constexpr ElementId unset = static_cast<ElementId>(-1);
    std::vector<ElementId> phi(regions.face_count, unset);
    phi[base_face] = x0;
    std::queue<std::size_t> todo;
    todo.push(base_face);
    while (! todo.empty()) {
        auto face = todo.front();
        todo.pop();
        for (const auto & st : adj[face]) {
            if (phi[st.to] != unset)
                continue;
            ElementId c = color_of(st.semi_arc);
            phi[st.to] = st.to_left ? sh.act(phi[face], c) : sh.act_inverse(phi[face], c);
            todo.push(st.to);
        }
    }

    for (std::size_t s = 0; s < ns; ++s) {
        auto l = phi[regions.left_face[s]], r = phi[regions.right_face[s]];
        if (l == unset || r == unset || l != sh.act(r, color_of(s)))
            throw InconsistentRegionColoring("region rule fails across semi-arc " + sas[s].name + " of " + d.name());
    }
    return phi;
}

} // namespace singshadow
