#include "oracles.hpp"

#include <functional>

namespace oracle {

using namespace singshadow;

long long md(long long v, long long n)
{
    long long r = v % n;
    return r < 0 ? r + n : r;
}

long long Linear::inv_a() const
{
    for (long long k = 0; k < n; ++k)
        if (md(a * k, n) == md(1, n))
            return k;
    return -1;
}

bool Linear::all_axioms() const
{
    for (long long x = 0; x < n; ++x) {
        if (star(x, x) != x)
            return false;
        for (long long y = 0; y < n; ++y) {
            if (bar(star(x, y), y) != x || star(bar(x, y), y) != x)
                return false;
            if (r2(x, y) != r1(y, star(x, y)))
                return false;
            if (star(r1(x, y), r2(x, y)) != r2(y, star(x, y)))
                return false;
            for (long long z = 0; z < n; ++z) {
                if (star(star(x, y), z) != star(star(x, z), star(y, z)))
                    return false;
                if (star(r1(bar(x, y), z), y) != r1(x, star(z, y)))
                    return false;
                if (r2(bar(x, y), z) != bar(r2(x, star(z, y)), y))
                    return false;
                if (star(bar(y, r1(x, z)), x) != bar(star(y, r2(x, z)), z))
                    return false;
            }
        }
    }
    return true;
}

std::set<ElementId> closure(const FiniteSingquandle & q, std::set<ElementId> s)
{
    while (true) {
        auto next = s;
        for (ElementId x : s)
            for (ElementId y : s)
                next.insert({q.star(x, y), q.bar_star(x, y), q.r1(x, y), q.r2(x, y)});
        if (next == s)
            return s;
        s = std::move(next);
    }
}

namespace {

bool relations_hold(const SingularDiagram & d, const FiniteSingquandle & q, const std::vector<ElementId> & c)
{
    for (std::size_t v = 0; v < d.vertices().size(); ++v) {
        switch (d.vertices()[v].kind) {
            case VertexKind::positive:
                if (c[d.arc_of(v, Role::under_out)] != q.star(c[d.arc_of(v, Role::under_in)], c[d.arc_of(v, Role::over_in)]))
                    return false;
                if (c[d.arc_of(v, Role::over_out)] != c[d.arc_of(v, Role::over_in)])
                    return false;
                break;
            case VertexKind::negative:
                if (c[d.arc_of(v, Role::under_out)]
                    != q.bar_star(c[d.arc_of(v, Role::under_in)], c[d.arc_of(v, Role::over_in)]))
                    return false;
                if (c[d.arc_of(v, Role::over_out)] != c[d.arc_of(v, Role::over_in)])
                    return false;
                break;
            case VertexKind::singular: {
                auto li = c[d.arc_of(v, Role::left_in)], ri = c[d.arc_of(v, Role::right_in)];
                if (c[d.arc_of(v, Role::left_out)] != q.r1(li, ri) || c[d.arc_of(v, Role::right_out)] != q.r2(li, ri))
                    return false;
                break;
            }
        }
    }
    return true;
}

} // namespace

std::vector<std::vector<ElementId>> brute_colorings(const SingularDiagram & d, const FiniteSingquandle & q)
{
    std::size_t na = d.arcs().size();
    std::vector<std::vector<ElementId>> out;
    std::vector<ElementId> c(na, 0);
    while (true) {
        if (relations_hold(d, q, c))
            out.push_back(c);
        std::size_t i = na;
        while (i > 0) {
            --i;
            if (++c[i] < q.size())
                break;
            c[i] = 0;
            if (i == 0)
                return out;
        }
    }
}

DartFaces dart_faces(const SingularDiagram & d)
{
    const auto & sas = d.semi_arcs();
    std::size_t ns = sas.size();
    // Dart 2s runs tail to head, 2s+1 head to tail.
    auto slot_semi_arc = [&](std::size_t v, std::size_t pos) { return d.vertices()[v].semi_arc_at(d.vertices()[v].ccw[pos]); };

    auto next = [&](std::size_t dart) {
        std::size_t s = dart / 2;
        bool fwd = dart % 2 == 0;
        SlotRef arrive = fwd ? sas[s].head : sas[s].tail;
        const auto & vx = d.vertices()[arrive.vertex];
        std::size_t j = vx.ccw_position(arrive.role);
        std::size_t leave_pos = (j + 3) % 4;
        std::size_t t = slot_semi_arc(arrive.vertex, leave_pos);
        Role leave_role = vx.ccw[leave_pos];
        bool t_fwd = sas[t].tail.vertex == arrive.vertex && sas[t].tail.role == leave_role;
        return 2 * t + (t_fwd ? 0 : 1);
    };

    DartFaces f;
    std::vector<std::size_t> face(2 * ns, static_cast<std::size_t>(-1));
    for (std::size_t start = 0; start < 2 * ns; ++start) {
        if (face[start] != static_cast<std::size_t>(-1))
            continue;
        std::size_t dd = start;
        do {
            face[dd] = f.count;
            dd = next(dd);
        } while (dd != start);
        ++f.count;
    }
    f.left.resize(ns);
    f.right.resize(ns);
    for (std::size_t s = 0; s < ns; ++s) {
        f.left[s] = face[2 * s];
        f.right[s] = face[2 * s + 1];
    }
    return f;
}

std::size_t dart_face_count(const SingularDiagram & d)
{
    return dart_faces(d).count;
}

std::vector<std::vector<ElementId>> all_region_colorings(
    const SingularDiagram & d, const DartFaces & faces, const ShadowStructure & sh, const std::vector<ElementId> & arc_colors)
{
    const auto & sas = d.semi_arcs();
    std::vector<std::vector<ElementId>> out;
    std::vector<ElementId> phi(faces.count, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        // Check every side whose faces are both below k.
        for (std::size_t s = 0; s < sas.size(); ++s) {
            auto l = faces.left[s], r = faces.right[s];
            if (l < k && r < k && phi[l] != sh.act(phi[r], arc_colors[sas[s].arc]))
                return;
        }
        if (k == faces.count) {
            out.push_back(phi);
            return;
        }
        for (ElementId x = 0; x < sh.size(); ++x) {
            phi[k] = x;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

std::map<std::string, std::size_t> sp_literal(const SingularDiagram & d, const ShadowStructure & sh, bool close_regions)
{
    const auto & q = sh.host();
    auto faces = dart_faces(d);
    std::map<std::string, std::size_t> out;
    for (const auto & c : brute_colorings(d, q)) {
        std::set<ElementId> image(c.begin(), c.end());
        auto s_prime = oracle::closure(q, image);
        for (const auto & phi : all_region_colorings(d, faces, sh, c)) {
            std::set<ElementId> y(phi.begin(), phi.end());
            if (close_regions) {
                bool grew = true;
                while (grew) {
                    grew = false;
                    for (ElementId x : std::set<ElementId>(y))
                        for (ElementId s : s_prime)
                            grew = y.insert(sh.act(x, s)).second || grew;
                }
            }
            MultiPoly p;
            for (ElementId x : y) {
                unsigned r = 0;
                for (ElementId s : s_prime)
                    r += sh.act(x, s) == x;
                p.add_term(Monomial::of(Variable::t, r), 1);
            }
            ++out[p.render()];
        }
    }
    return out;
}

std::map<std::string, std::size_t> as_map(const InvariantMultiset & m)
{
    std::map<std::string, std::size_t> out;
    for (const auto & e : m.entries())
        out[e.exponent.render()] = e.multiplicity;
    return out;
}

} // namespace oracle
