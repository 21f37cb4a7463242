#include "singshadow/shadow.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace singshadow {

namespace {

long long mod(long long v, long long n)
{
    long long r = v % n;
    return r < 0 ? r + n : r;
}

void check_matrix_shape(const FiniteSingquandle & host, std::size_t m, const ActionMatrix & action)
{
    if (m == 0)
        throw ParseError("shadow set X is empty");
    if (action.size() != m)
        throw ParseError("action matrix has " + std::to_string(action.size()) + " rows, expected " + std::to_string(m));
    for (const auto & row : action) {
        if (row.size() != host.size())
            throw ParseError("action matrix row has " + std::to_string(row.size()) + " entries, expected "
                + std::to_string(host.size()));
        for (ElementId v : row)
            if (v >= m)
                throw ParseError("action matrix entry out of range");
    }
}

long long host_residue(const FiniteSingquandle & host, ElementId s)
{
    const std::string & label = host.label(s);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), v);
    if (ec != std::errc{} || ptr != label.data() + label.size())
        throw ParseError("host element '" + label + "' is not an integer residue");
    return v;
}

} // namespace

AxiomReport verify_shadow_axioms(const FiniteSingquandle & q, std::size_t m, const ActionMatrix & act)
{
    check_matrix_shape(q, m, act);
    std::size_t n = q.size();
    AxiomReport report;

    AxiomCheck bij{"action-bijective", CheckStatus::passed, {}};
    for (ElementId x1 = 0; x1 < m && bij.status == CheckStatus::passed; ++x1)
        for (ElementId x2 = x1 + 1; x2 < m && bij.status == CheckStatus::passed; ++x2)
            for (ElementId s = 0; s < n; ++s)
                if (act[x1][s] == act[x2][s]) {
                    bij = {"action-bijective", CheckStatus::failed, {x1, x2, s}};
                    break;
                }
    report.checks.push_back(bij);

    auto triples = [&](const std::string & id, const std::function<bool(ElementId, ElementId, ElementId)> & holds) {
        for (ElementId x = 0; x < m; ++x)
            for (ElementId s1 = 0; s1 < n; ++s1)
                for (ElementId s2 = 0; s2 < n; ++s2)
                    if (! holds(x, s1, s2))
                        return AxiomCheck{id, CheckStatus::failed, {x, s1, s2}};
        return AxiomCheck{id, CheckStatus::passed, {}};
    };

    report.checks.push_back(triples("action-star", [&](ElementId x, ElementId s1, ElementId s2) {
        return act[act[x][s1]][s2] == act[act[x][s2]][q.star(s1, s2)];
    }));
    report.checks.push_back(triples("action-singular", [&](ElementId x, ElementId s1, ElementId s2) {
        return act[act[x][s1]][s2] == act[act[x][q.r1(s1, s2)]][q.r2(s1, s2)];
    }));
    return report;
}

ShadowStructure ShadowStructure::make(FiniteSingquandle host, std::vector<std::string> x_elements,
    const ActionMatrix & action, AxiomPolicy policy, std::string name)
{
    std::size_t m = x_elements.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (x_elements[i] == x_elements[j])
                throw ParseError("duplicate shadow element label '" + x_elements[i] + "'");

    AxiomReport report = verify_shadow_axioms(host, m, action);
    for (const auto & c : report.checks) {
        if (c.status != CheckStatus::failed)
            continue;
        if (c.axiom == "action-bijective")
            throw NonBijectiveAction(c.axiom, c.witness, "column " + host.label(c.witness[2]) + " is not a bijection");
        if (policy == AxiomPolicy::enforce)
            throw ShadowAxiomViolation(c.axiom, c.witness, name);
    }

    ShadowStructure sh;
    std::size_t n = host.size();
    sh.name_ = std::move(name);
    sh.host_ = std::move(host);
    sh.x_elements_ = std::move(x_elements);
    sh.action_.resize(m * n);
    sh.inverse_.resize(m * n);
    for (ElementId x = 0; x < m; ++x)
        for (ElementId s = 0; s < n; ++s) {
            sh.action_[x * n + s] = action[x][s];
            sh.inverse_[action[x][s] * n + s] = x;
        }
    sh.report_ = std::move(report);
    return sh;
}

ElementId ShadowStructure::find(const std::string & label) const
{
    auto it = std::find(x_elements_.begin(), x_elements_.end(), label);
    if (it == x_elements_.end())
        throw UnknownName("no shadow element '" + label + "'");
    return static_cast<ElementId>(it - x_elements_.begin());
}

ActionMatrix ShadowStructure::matrix() const
{
    std::size_t n = host_.size();
    ActionMatrix out(size(), std::vector<ElementId>(n));
    for (ElementId x = 0; x < size(); ++x)
        for (ElementId s = 0; s < n; ++s)
            out[x][s] = act(x, s);
    return out;
}

ShadowStructure build_shadow(
    const FiniteSingquandle & host, std::vector<std::string> x_elements, const ActionMatrix & action, AxiomPolicy policy)
{
    return ShadowStructure::make(host, std::move(x_elements), action, policy);
}

AxiomReport verify_shadow_axioms(const ShadowStructure & sh)
{
    return verify_shadow_axioms(sh.host(), sh.size(), sh.matrix());
}

std::string render_action_formula(const PolynomialActionSpec & spec)
{
    static const char * const terms[] = {"", "x", "s", "x^2", "s^2", "x*s"};
    std::string out;
    for (std::size_t i = 0; i < 6; ++i) {
        long long c = spec.coeffs[i];
        if (c == 0)
            continue;
        if (! out.empty())
            out += " + ";
        if (i == 0)
            out += std::to_string(c);
        else if (c == 1)
            out += terms[i];
        else
            out += std::to_string(c) + "*" + terms[i];
    }
    return out.empty() ? "0" : out;
}

unsigned action_degree(const PolynomialActionSpec & spec)
{
    const auto & k = spec.coeffs;
    if (k[3] || k[4] || k[5])
        return 2;
    if (k[1] || k[2])
        return 1;
    return 0;
}

ActionMatrix polynomial_action_matrix(const FiniteSingquandle & host, const PolynomialActionSpec & spec)
{
    long long m = spec.modulus;
    if (m < 1)
        throw ParseError("action modulus must be at least 1");
    auto size = static_cast<std::size_t>(m);
    const auto & [al, be, ga, de, ep, ze] = spec.coeffs;

    ActionMatrix out(size, std::vector<ElementId>(host.size()));
    for (std::size_t i = 0; i < size; ++i) {
        long long x = index_to_residue(i, m);
        for (ElementId j = 0; j < host.size(); ++j) {
            long long s = host_residue(host, j);
            long long v = al + be * x + ga * s + de * x * x + ep * s * s + ze * x * s;
            out[i][j] = residue_to_index(mod(v, m), m);
        }
    }
    return out;
}

ShadowStructure build_polynomial_action(const FiniteSingquandle & host, const PolynomialActionSpec & spec, AxiomPolicy policy)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < static_cast<std::size_t>(spec.modulus); ++i)
        labels.push_back(std::to_string(index_to_residue(i, spec.modulus)));
    return ShadowStructure::make(host, std::move(labels), polynomial_action_matrix(host, spec), policy,
        "Z" + std::to_string(spec.modulus) + " by " + render_action_formula(spec));
}

ShadowStructure canonical_shadow(const FiniteSingquandle & host)
{
    return ShadowStructure::make(host, host.elements(), host.star_table().rows(), AxiomPolicy::report,
        host.name() + " acting on itself");
}

ElementSet forward_closure(const ShadowStructure & sh, const ElementSet & xs, const ElementSet & ss)
{
    std::vector<char> member(sh.size(), 0);
    std::vector<ElementId> queue;
    for (ElementId x : xs) {
        member.at(x) = 1;
        queue.push_back(x);
    }
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (ElementId s : ss) {
            ElementId y = sh.act(queue[i], s);
            if (! member[y]) {
                member[y] = 1;
                queue.push_back(y);
            }
        }
    return ElementSet(queue.begin(), queue.end());
}

std::vector<std::size_t> fixed_counts(const ShadowStructure & sh, const ElementSet & ss)
{
    std::vector<std::size_t> r(sh.size(), 0);
    for (ElementId x = 0; x < sh.size(); ++x)
        for (ElementId s : ss)
            r[x] += sh.act(x, s) == x;
    return r;
}

namespace {

MultiPoly fixed_point_poly(const ShadowStructure & sh, const ElementSet & xs, const ElementSet & ss)
{
    auto r = fixed_counts(sh, ss);
    MultiPoly p;
    for (ElementId x : xs)
        p.add_term(Monomial::of(Variable::t, static_cast<unsigned>(r[x])), 1);
    return p;
}

ElementSet all_of(std::size_t n)
{
    ElementSet out;
    for (ElementId i = 0; i < n; ++i)
        out.insert(out.end(), i);
    return out;
}

} // namespace

MultiPoly sp(const ShadowStructure & sh)
{
    return fixed_point_poly(sh, all_of(sh.size()), all_of(sh.host().size()));
}

MultiPoly subsp(const ShadowStructure & sh, const Subshadow & sub)
{
    for (ElementId s : sub.s_subset)
        if (s >= sh.host().size())
            throw InvalidSubshadow("host element index out of range");
    for (ElementId x : sub.x_subset)
        if (x >= sh.size())
            throw InvalidSubshadow("shadow element index out of range");
    if (! is_closed(sh.host(), sub.s_subset))
        throw InvalidSubshadow("singquandle part is not closed");
    if (forward_closure(sh, sub.x_subset, sub.s_subset) != sub.x_subset)
        throw InvalidSubshadow("shadow part is not closed under the action");
    return fixed_point_poly(sh, sub.x_subset, sub.s_subset);
}

std::vector<ShadowIsomorphism> shadow_isomorphisms(const ShadowStructure & sh1, const ShadowStructure & sh2)
{
    std::vector<ShadowIsomorphism> out;
    std::size_t m = sh1.size(), n = sh1.host().size();
    if (sh2.size() != m)
        return out;

    auto r1 = fixed_counts(sh1, all_of(n));
    auto r2 = fixed_counts(sh2, all_of(n));
    {
        auto a = r1, b = r2;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return out;
    }

    constexpr ElementId unset = static_cast<ElementId>(-1);
    for (const auto & f : isomorphisms(sh1.host(), sh2.host())) {
        ElementMap phi(m, unset);
        std::vector<char> used(m, 0);

        auto consistent = [&](ElementId k) {
            for (ElementId x = 0; x <= k; ++x)
                for (ElementId s = 0; s < n; ++s) {
                    ElementId y = sh1.act(x, s);
                    if (y > k)
                        continue;
                    if (x != k && y != k)
                        continue;
                    if (phi[y] != sh2.act(phi[x], f[s]))
                        return false;
                }
            return true;
        };

        std::function<void(ElementId)> extend = [&](ElementId k) {
            if (k == m) {
                out.push_back({f, phi});
                return;
            }
            for (ElementId y = 0; y < m; ++y) {
                if (used[y] || r1[k] != r2[y])
                    continue;
                phi[k] = y;
                used[y] = 1;
                if (consistent(k))
                    extend(k + 1);
                used[y] = 0;
                phi[k] = unset;
            }
        };
        extend(0);
    }
    return out;
}

std::vector<PolynomialActionSpec> search_polynomial_shadows(
    const FiniteSingquandle & host, long long m, unsigned max_degree, unsigned workers)
{
    if (max_degree > 2)
        throw ParseError("polynomial shadow search supports degree at most 2");
    if (m < 1)
        throw ParseError("shadow size must be at least 1");

    auto size = static_cast<std::size_t>(m);
    std::vector<std::vector<PolynomialActionSpec>> found(size);
    detail::parallel_for(size, workers, [&](std::size_t alpha) {
        PolynomialActionSpec spec{m, {static_cast<long long>(alpha), 0, 0, 0, 0, 0}};
        auto & k = spec.coeffs;
        long long hi = max_degree >= 1 ? m : 1;
        long long hi2 = max_degree >= 2 ? m : 1;
        for (k[1] = 0; k[1] < hi; ++k[1])
            for (k[2] = 0; k[2] < hi; ++k[2])
                for (k[3] = 0; k[3] < hi2; ++k[3])
                    for (k[4] = 0; k[4] < hi2; ++k[4])
                        for (k[5] = 0; k[5] < hi2; ++k[5])
                            if (verify_shadow_axioms(host, size, polynomial_action_matrix(host, spec)).passed())
                                found[alpha].push_back(spec);
    });

    std::vector<PolynomialActionSpec> out;
    for (auto & v : found)
        out.insert(out.end(), v.begin(), v.end());
    return out;
}

ShadowStructure relabeled_shadow(const ShadowStructure & sh, const ElementMap & perm)
{
    std::size_t m = sh.size(), n = sh.host().size();
    std::vector<std::string> labels(m);
    ActionMatrix action(m, std::vector<ElementId>(n));
    for (ElementId x = 0; x < m; ++x) {
        labels[perm[x]] = sh.label(x);
        for (ElementId s = 0; s < n; ++s)
            action[perm[x]][s] = perm[sh.act(x, s)];
    }
    return ShadowStructure::make(sh.host(), std::move(labels), action, AxiomPolicy::report, sh.name());
}

} // namespace singshadow
