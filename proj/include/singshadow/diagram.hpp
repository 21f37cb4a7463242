#pragma once

#include "singshadow/algebra.hpp"
#include "singshadow/shadow.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace singshadow {

enum class VertexKind { positive, negative, singular };

enum class Role : std::uint8_t { under_in, over_in, under_out, over_out, left_in, right_in, left_out, right_out };

inline constexpr std::size_t role_count = 8;

std::string_view kind_name(VertexKind k);
std::string_view role_name(Role r);
// Throw MalformedVertex.
VertexKind parse_kind(std::string_view name);
Role parse_role(std::string_view name);

bool is_out_role(Role r);
std::array<Role, 4> roles_of(VertexKind k);
std::array<Role, 4> default_ccw(VertexKind k);

// One vertex as written in a file. `over` is the merged form that sets both
// over_in and over_out to the same label.
struct VertexSpec
{
    VertexKind kind = VertexKind::positive;
    std::vector<std::pair<Role, std::string>> roles;
    std::optional<std::string> over;
    std::optional<std::array<Role, 4>> ccw;
};

struct SlotRef
{
    std::size_t vertex = 0;
    Role role = Role::under_in;

    friend bool operator==(const SlotRef &, const SlotRef &) = default;
};

// A vertex-to-vertex segment, oriented from an out slot to an in slot.
struct SemiArc
{
    std::string name;
    std::string label;
    SlotRef tail;
    SlotRef head;
    std::size_t arc = 0;
};

// Coloring variable: semi-arcs joined through overpasses.
struct Arc
{
    std::string name;
    std::vector<std::size_t> semi_arcs;
};

struct Vertex
{
    VertexKind kind = VertexKind::positive;
    std::array<Role, 4> ccw{};
    // Indexed by Role; npos for roles this kind does not have.
    std::array<std::size_t, role_count> semi_arc{};

    std::size_t semi_arc_at(Role r) const { return semi_arc[static_cast<std::size_t>(r)]; }
    std::size_t ccw_position(Role r) const;
};

class SingularDiagram
{
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    const std::string & name() const { return name_; }
    const std::vector<Vertex> & vertices() const { return vertices_; }
    const std::vector<SemiArc> & semi_arcs() const { return semi_arcs_; }
    const std::vector<Arc> & arcs() const { return arcs_; }
    const std::vector<VertexSpec> & specs() const { return specs_; }

    std::size_t arc_of(std::size_t vertex, Role r) const;
    // Throws UnknownName.
    std::size_t find_arc(const std::string & name) const;
    std::vector<std::string> arc_names() const;

    std::size_t singular_count() const;

private:
    friend SingularDiagram make_diagram(
        std::string name, std::vector<VertexSpec> specs, const std::optional<std::vector<std::string>> & arc_order);

    std::string name_;
    std::vector<VertexSpec> specs_;
    std::vector<Vertex> vertices_;
    std::vector<SemiArc> semi_arcs_;
    std::vector<Arc> arcs_;
};

// Validates vertices, pairs slots into semi-arcs and groups arcs. Merged over
// labels shared by several vertices are chained in vertex order.
// Throws MalformedVertex, DanglingArc, UnknownName (bad arc_order entry).
SingularDiagram make_diagram(std::string name, std::vector<VertexSpec> specs,
    const std::optional<std::vector<std::string>> & arc_order = std::nullopt);

// Throws ParseError on bad JSON, otherwise as make_diagram.
SingularDiagram parse_diagram(std::string_view json_text);
std::string diagram_to_json(const SingularDiagram & d);

struct ColoringAssignment
{
    // Element per arc, in the diagram's arc order.
    std::vector<ElementId> values;

    ElementSet image() const { return ElementSet(values.begin(), values.end()); }

    auto operator<=>(const ColoringAssignment &) const = default;
};

bool satisfies(const SingularDiagram & d, const FiniteSingquandle & q, const ColoringAssignment & f);

struct EnumerationOptions
{
    unsigned workers = 1;
};

// All colorings, sorted lexicographically by value vector.
std::vector<ColoringAssignment> colorings(
    const SingularDiagram & d, const FiniteSingquandle & q, const EnumerationOptions & options = {});

struct FaceSide
{
    std::size_t semi_arc;
    bool left;
};

struct RegionMap
{
    std::size_t face_count = 0;
    std::vector<std::size_t> left_face;
    std::vector<std::size_t> right_face;
    std::vector<std::vector<FaceSide>> boundaries;
};

// Faces of the ccw rotation system. Throws Disconnected, NonPlanar.
RegionMap trace_regions(const SingularDiagram & d);

enum class PropagationOrder { forward, reverse };

// Face colors with phi(left) = phi(right) . f(arc). Throws InconsistentRegionColoring.
std::vector<ElementId> region_coloring(const SingularDiagram & d, const RegionMap & regions, const ShadowStructure & sh,
    const ColoringAssignment & f, std::size_t base_face, ElementId x0,
    PropagationOrder order = PropagationOrder::forward);

// Throws UnknownName.
SingularDiagram builtin(const std::string & name);
const std::vector<std::string> & builtin_names();
std::string_view builtin_source(const std::string & name);

} // namespace singshadow
