#pragma once

#include "singshadow/algebra.hpp"
#include "singshadow/diagram.hpp"
#include "singshadow/polynomial.hpp"
#include "singshadow/shadow.hpp"

#include <string>
#include <vector>

namespace singshadow {

std::size_t counting(const SingularDiagram & d, const FiniteSingquandle & q, const EnumerationOptions & options = {});

// |X| times the coloring count. When the diagram traces as planar every
// (coloring, base color) pair is also propagated over the regions.
std::size_t shadow_counting(const SingularDiagram & d, const ShadowStructure & sh, const EnumerationOptions & options = {});

// Multiset of ssqp over the subsingquandles generated by each coloring's image.
InvariantMultiset ssqp_invariant(
    const SingularDiagram & d, const FiniteSingquandle & q, const EnumerationOptions & options = {});

// (closure of Im f, orbit of x0 under it). With planar data, x0 colors face 0
// and the closure of all region colors is compared against the orbit.
Subshadow shadow_image(const ShadowStructure & sh, const ColoringAssignment & f, ElementId x0,
    const SingularDiagram * planar = nullptr);

InvariantMultiset sp_invariant(const SingularDiagram & d, const ShadowStructure & sh, const EnumerationOptions & options = {});

struct DistinguishEntry
{
    std::string invariant;
    std::string first;
    std::string second;
    bool equal = false;
};

struct DistinguishReport
{
    std::vector<DistinguishEntry> entries;

    bool all_equal() const;
    const DistinguishEntry & at(const std::string & invariant) const;
};

// Entries: counting, shadow-counting, ssqp, SP (counting and ssqp use the shadow's host).
DistinguishReport distinguish(const SingularDiagram & d1, const SingularDiagram & d2, const ShadowStructure & sh,
    const EnumerationOptions & options = {});

} // namespace singshadow
