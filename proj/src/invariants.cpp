#include "singshadow/invariants.hpp"

#include "parallel.hpp"

#include <optional>

namespace singshadow {

namespace {

std::optional<RegionMap> planar_regions(const SingularDiagram & d)
{
    try {
        return trace_regions(d);
    }
    catch (const NonPlanar &) {
        return std::nullopt;
    }
    catch (const Disconnected &) {
        return std::nullopt;
    }
}

} // namespace

std::size_t counting(const SingularDiagram & d, const FiniteSingquandle & q, const EnumerationOptions & options)
{
    return colorings(d, q, options).size();
}

std::size_t shadow_counting(const SingularDiagram & d, const ShadowStructure & sh, const EnumerationOptions & options)
{
    auto cols = colorings(d, sh.host(), options);
    if (auto regions = planar_regions(d)) {
        detail::parallel_for(cols.size(), options.workers, [&](std::size_t i) {
            for (ElementId x0 = 0; x0 < sh.size(); ++x0)
                region_coloring(d, *regions, sh, cols[i], 0, x0);
        });
    }
    return sh.size() * cols.size();
}

InvariantMultiset ssqp_invariant(const SingularDiagram & d, const FiniteSingquandle & q, const EnumerationOptions & options)
{
    auto cols = colorings(d, q, options);
    std::vector<MultiPoly> polys(cols.size());
    detail::parallel_for(cols.size(), options.workers, [&](std::size_t i) {
        polys[i] = ssqp(q, closure(q, cols[i].image()));
    });

    InvariantMultiset m;
    for (const auto & p : polys)
        m.add(p);
    return m;
}

Subshadow shadow_image(const ShadowStructure & sh, const ColoringAssignment & f, ElementId x0, const SingularDiagram * planar)
{
    Subshadow sub;
    sub.s_subset = closure(sh.host(), f.image());
    sub.x_subset = forward_closure(sh, {x0}, sub.s_subset);

    if (planar) {
        auto regions = trace_regions(*planar);
        auto phi = region_coloring(*planar, regions, sh, f, 0, x0);
        auto literal = forward_closure(sh, ElementSet(phi.begin(), phi.end()), sub.s_subset);
        if (literal != sub.x_subset)
            throw InconsistentRegionColoring("closure of region colors differs from the orbit of the base color");
    }
    return sub;
}

InvariantMultiset sp_invariant(const SingularDiagram & d, const ShadowStructure & sh, const EnumerationOptions & options)
{
    auto cols = colorings(d, sh.host(), options);
    std::vector<std::vector<MultiPoly>> polys(cols.size());
    detail::parallel_for(cols.size(), options.workers, [&](std::size_t i) {
        for (ElementId x0 = 0; x0 < sh.size(); ++x0)
            polys[i].push_back(subsp(sh, shadow_image(sh, cols[i], x0)));
    });

    InvariantMultiset m;
    for (const auto & row : polys)
        for (const auto & p : row)
            m.add(p);
    return m;
}

bool DistinguishReport::all_equal() const
{
    for (const auto & e : entries)
        if (! e.equal)
            return false;
    return true;
}

const DistinguishEntry & DistinguishReport::at(const std::string & invariant) const
{
    for (const auto & e : entries)
        if (e.invariant == invariant)
            return e;
    throw UnknownName("no invariant '" + invariant + "' in report");
}

DistinguishReport distinguish(
    const SingularDiagram & d1, const SingularDiagram & d2, const ShadowStructure & sh, const EnumerationOptions & options)
{
    DistinguishReport r;
    auto add = [&](std::string name, std::string a, std::string b) {
        bool eq = a == b;
        r.entries.push_back({std::move(name), std::move(a), std::move(b), eq});
    };
    const auto & q = sh.host();
    add("counting", std::to_string(counting(d1, q, options)), std::to_string(counting(d2, q, options)));
    add("shadow-counting", std::to_string(shadow_counting(d1, sh, options)), std::to_string(shadow_counting(d2, sh, options)));
    add("ssqp", ssqp_invariant(d1, q, options).render(), ssqp_invariant(d2, q, options).render());
    add("SP", sp_invariant(d1, sh, options).render(), sp_invariant(d2, sh, options).render());
    return r;
}

} // namespace singshadow
