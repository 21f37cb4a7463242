#pragma once

// Reference computations kept apart from the library: modular formulas,
// naive fixpoints, exhaustive assignment and a dart-walking face count.

#include "singshadow/diagram.hpp"
#include "singshadow/polynomial.hpp"
#include "singshadow/shadow.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using singshadow::ElementId;

long long md(long long v, long long n);

// Linear structure evaluated straight from the formulas on residues.
struct Linear
{
    long long n, a, b, c;

    long long inv_a() const;
    long long star(long long x, long long y) const { return md(a * x + (1 - a) * y, n); }
    long long bar(long long x, long long y) const { return md(inv_a() * x + (1 - inv_a()) * y, n); }
    long long r1(long long x, long long y) const { return md(b * x + c * y, n); }
    long long r2(long long x, long long y) const { return md(a * c * x + (b + c * (1 - a)) * y, n); }

    // Every axiom checked on residues.
    bool all_axioms() const;
};

// Naive fixpoint over all pairs of the current set.
std::set<ElementId> closure(const singshadow::FiniteSingquandle & q, std::set<ElementId> s);

// All |S|^arcs assignments checked against the vertex relations.
std::vector<std::vector<ElementId>> brute_colorings(const singshadow::SingularDiagram & d, const singshadow::FiniteSingquandle & q);

// Faces as orbits of the left-face successor on darts.
std::size_t dart_face_count(const singshadow::SingularDiagram & d);

// Face colorings found by exhaustive search over X^faces, using the dart walk for sides.
struct DartFaces
{
    std::size_t count = 0;
    std::vector<std::size_t> left, right; // per semi-arc
};
DartFaces dart_faces(const singshadow::SingularDiagram & d);

std::vector<std::vector<ElementId>> all_region_colorings(const singshadow::SingularDiagram & d, const DartFaces & faces,
    const singshadow::ShadowStructure & sh, const std::vector<ElementId> & arc_colors);

// SP from the literal definition: every region coloring, om as the closure of
// its region colors under the generated subsingquandle. close_regions = false
// keeps the bare set of region colors instead.
std::map<std::string, std::size_t> sp_literal(const singshadow::SingularDiagram & d, const singshadow::ShadowStructure & sh,
    bool close_regions = true);

std::map<std::string, std::size_t> as_map(const singshadow::InvariantMultiset & m);

} // namespace oracle
