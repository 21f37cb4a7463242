#include "singshadow/algebra.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace singshadow {

namespace {

long long mod(long long v, long long n)
{
    long long r = v % n;
    return r < 0 ? r + n : r;
}

void check_shape(const OperationTable & t, std::size_t n, const char * what)
{
    if (t.size() != n)
        throw ParseError(std::string(what) + " table is not " + std::to_string(n) + "x" + std::to_string(n));
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y)
            if (t(x, y) >= n)
                throw ParseError(std::string(what) + " table entry out of range");
}

AxiomCheck run_pairs(const std::string & id, std::size_t n, const std::function<bool(ElementId, ElementId)> & holds)
{
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b)
            if (! holds(a, b))
                return {id, CheckStatus::failed, {a, b}};
    return {id, CheckStatus::passed, {}};
}

AxiomCheck run_triples(
    const std::string & id, std::size_t n, const std::function<bool(ElementId, ElementId, ElementId)> & holds)
{
    for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b)
            for (ElementId c = 0; c < n; ++c)
                if (! holds(a, b, c))
                    return {id, CheckStatus::failed, {a, b, c}};
    return {id, CheckStatus::passed, {}};
}

// Column inversion of star; nullopt with a collision witness (x1, x2, y) otherwise.
std::optional<OperationTable> derive_bar_star(const OperationTable & star, std::vector<ElementId> & witness)
{
    std::size_t n = star.size();
    for (ElementId x1 = 0; x1 < n; ++x1)
        for (ElementId x2 = x1 + 1; x2 < n; ++x2)
            for (ElementId y = 0; y < n; ++y)
                if (star(x1, y) == star(x2, y)) {
                    witness = {x1, x2, y};
                    return std::nullopt;
                }

    OperationTable bar(n);
    for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y)
            bar.at(star(x, y), y) = x;
    return bar;
}

} // namespace

OperationTable OperationTable::from_rows(const std::vector<std::vector<ElementId>> & rows)
{
    OperationTable t(rows.size());
    for (std::size_t x = 0; x < rows.size(); ++x) {
        if (rows[x].size() != rows.size())
            throw ParseError("operation table is not square");
        for (std::size_t y = 0; y < rows.size(); ++y)
            t.at(x, y) = rows[x][y];
    }
    return t;
}

std::vector<std::vector<ElementId>> OperationTable::rows() const
{
    std::vector<std::vector<ElementId>> out(n_, std::vector<ElementId>(n_));
    for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t y = 0; y < n_; ++y)
            out[x][y] = (*this)(x, y);
    return out;
}

bool AxiomReport::passed() const
{
    return first_failure() == nullptr;
}

const AxiomCheck * AxiomReport::first_failure() const
{
    for (const auto & c : checks)
        if (c.status == CheckStatus::failed)
            return &c;
    return nullptr;
}

const AxiomCheck * AxiomReport::find(const std::string & axiom) const
{
    for (const auto & c : checks)
        if (c.axiom == axiom)
            return &c;
    return nullptr;
}

bool is_quandle_axiom(const std::string & axiom)
{
    return axiom == "idempotency" || axiom == "right-invertibility" || axiom == "bar-inverse"
        || axiom == "self-distributivity";
}

AxiomReport verify_axioms(const SingquandleTables & t)
{
    std::size_t n = t.elements.size();
    check_shape(t.star, n, "star");
    check_shape(t.r1, n, "r1");
    check_shape(t.r2, n, "r2");
    if (t.bar_star)
        check_shape(*t.bar_star, n, "bar_star");

    const auto & s = t.star;
    const auto & r1 = t.r1;
    const auto & r2 = t.r2;
    AxiomReport report;

    {
        AxiomCheck c{"idempotency", CheckStatus::passed, {}};
        for (ElementId x = 0; x < n; ++x)
            if (s(x, x) != x) {
                c = {"idempotency", CheckStatus::failed, {x}};
                break;
            }
        report.checks.push_back(c);
    }

    std::vector<ElementId> collision;
    auto bar = derive_bar_star(s, collision);
    if (bar)
        report.checks.push_back({"right-invertibility", CheckStatus::passed, {}});
    else
        report.checks.push_back({"right-invertibility", CheckStatus::failed, collision});

    if (! bar)
        report.checks.push_back({"bar-inverse", CheckStatus::skipped, {}});
    else if (t.bar_star)
        report.checks.push_back(
            run_pairs("bar-inverse", n, [&](ElementId x, ElementId y) { return (*t.bar_star)(x, y) == (*bar)(x, y); }));
    else
        report.checks.push_back({"bar-inverse", CheckStatus::passed, {}});

    report.checks.push_back(run_triples("self-distributivity", n, [&](ElementId x, ElementId y, ElementId z) {
        return s(s(x, y), z) == s(s(x, z), s(y, z));
    }));

    if (bar) {
        const auto & b = *bar;
        report.checks.push_back(run_triples("eq1", n, [&](ElementId x, ElementId y, ElementId z) {
            return s(r1(b(x, y), z), y) == r1(x, s(z, y));
        }));
        report.checks.push_back(run_triples("eq2", n, [&](ElementId x, ElementId y, ElementId z) {
            return r2(b(x, y), z) == b(r2(x, s(z, y)), y);
        }));
        report.checks.push_back(run_triples("eq3", n, [&](ElementId x, ElementId y, ElementId z) {
            return s(b(y, r1(x, z)), x) == b(s(y, r2(x, z)), z);
        }));
    }
    else {
        for (const char * id : {"eq1", "eq2", "eq3"})
            report.checks.push_back({id, CheckStatus::skipped, {}});
    }

    report.checks.push_back(run_pairs("eq4", n, [&](ElementId x, ElementId y) { return r2(x, y) == r1(y, s(x, y)); }));
    report.checks.push_back(
        run_pairs("eq5", n, [&](ElementId x, ElementId y) { return s(r1(x, y), r2(x, y)) == r2(y, s(x, y)); }));
    return report;
}

FiniteSingquandle FiniteSingquandle::from_tables(const SingquandleTables & t, AxiomPolicy policy)
{
    std::size_t n = t.elements.size();
    if (n == 0)
        throw ParseError("singquandle has no elements");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (t.elements[i] == t.elements[j])
                throw ParseError("duplicate element label '" + t.elements[i] + "'");

    AxiomReport report = verify_axioms(t);
    for (const auto & c : report.checks) {
        if (c.status != CheckStatus::failed)
            continue;
        if (c.axiom == "right-invertibility")
            throw NonBijectiveColumn(c.axiom, c.witness, "right translation by the last witness element is not a bijection");
        if (is_quandle_axiom(c.axiom) || policy == AxiomPolicy::enforce)
            throw AxiomViolation(c.axiom, c.witness, t.name);
    }

    FiniteSingquandle q;
    q.name_ = t.name;
    q.elements_ = t.elements;
    q.star_ = t.star;
    q.r1_ = t.r1;
    q.r2_ = t.r2;
    std::vector<ElementId> unused;
    q.bar_star_ = *derive_bar_star(t.star, unused);
    q.report_ = std::move(report);
    return q;
}

ElementId FiniteSingquandle::find(const std::string & label) const
{
    auto it = std::find(elements_.begin(), elements_.end(), label);
    if (it == elements_.end())
        throw UnknownName("no element '" + label + "' in " + name_);
    return static_cast<ElementId>(it - elements_.begin());
}

SingquandleTables FiniteSingquandle::tables() const
{
    return {name_, elements_, star_, r1_, r2_, bar_star_};
}

AxiomReport verify_axioms(const FiniteSingquandle & q)
{
    return verify_axioms(q.tables());
}

ElementSet closure(const FiniteSingquandle & q, const ElementSet & seed)
{
    std::vector<char> member(q.size(), 0);
    std::vector<ElementId> order;
    for (ElementId x : seed) {
        member.at(x) = 1;
        order.push_back(x);
    }

    auto add = [&](ElementId z) {
        if (! member[z]) {
            member[z] = 1;
            order.push_back(z);
        }
    };
    // Each new element is combined with everything before it (both orders).
    for (std::size_t i = 0; i < order.size(); ++i) {
        ElementId x = order[i];
        for (std::size_t j = 0; j <= i; ++j) {
            ElementId y = order[j];
            for (auto [u, v] : {std::pair{x, y}, std::pair{y, x}}) {
                add(q.star(u, v));
                add(q.bar_star(u, v));
                add(q.r1(u, v));
                add(q.r2(u, v));
            }
        }
    }
    return ElementSet(order.begin(), order.end());
}

bool is_closed(const FiniteSingquandle & q, const ElementSet & subset)
{
    return closure(q, subset) == subset;
}

std::vector<ElementProfile> profiles(const FiniteSingquandle & q)
{
    std::size_t n = q.size();
    std::vector<ElementProfile> out(n);
    for (ElementId x = 0; x < n; ++x) {
        auto & p = out[x];
        for (ElementId y = 0; y < n; ++y) {
            p.r1c += q.star(x, y) == x;
            p.c1c += q.star(y, x) == y;
            p.r2c += q.r1(x, y) == x;
            p.c2c += q.r1(y, x) == y;
            p.r3c += q.r2(x, y) == x;
            p.c3c += q.r2(y, x) == y;
        }
    }
    return out;
}

namespace {

Monomial profile_monomial(const ElementProfile & p)
{
    auto e = [](std::size_t v) { return static_cast<unsigned>(v); };
    return Monomial({e(p.r1c), e(p.c1c), e(p.r2c), e(p.c2c), e(p.r3c), e(p.c3c), 0});
}

} // namespace

MultiPoly sqp(const FiniteSingquandle & q)
{
    MultiPoly p;
    for (const auto & prof : profiles(q))
        p.add_term(profile_monomial(prof), 1);
    return p;
}

MultiPoly ssqp(const FiniteSingquandle & q, const ElementSet & subset)
{
    for (ElementId x : subset)
        if (x >= q.size())
            throw NotClosed({x}, "element index out of range");

    auto closed = closure(q, subset);
    if (closed != subset) {
        std::vector<ElementId> extra;
        std::set_difference(closed.begin(), closed.end(), subset.begin(), subset.end(), std::back_inserter(extra));
        throw NotClosed({extra.front()}, "closure adds " + q.label(extra.front()));
    }

    auto prof = profiles(q);
    MultiPoly p;
    for (ElementId x : subset)
        p.add_term(profile_monomial(prof[x]), 1);
    return p;
}

std::vector<ElementMap> isomorphisms(const FiniteSingquandle & q1, const FiniteSingquandle & q2)
{
    std::size_t n = q1.size();
    std::vector<ElementMap> out;
    if (q2.size() != n)
        return out;

    auto p1 = profiles(q1), p2 = profiles(q2);
    {
        auto s1 = p1, s2 = p2;
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 != s2)
            return out;
    }

    constexpr ElementId unset = static_cast<ElementId>(-1);
    ElementMap f(n, unset);
    std::vector<char> used(n, 0);

    // Partial check over the assigned prefix [0, k].
    auto consistent = [&](ElementId k) {
        for (ElementId x = 0; x <= k; ++x)
            for (ElementId y = 0; y <= k; ++y) {
                if (x != k && y != k)
                    continue;
                auto fx = f[x], fy = f[y];
                std::pair<ElementId, ElementId> images[] = {
                    {q1.star(x, y), q2.star(fx, fy)}, {q1.r1(x, y), q2.r1(fx, fy)}, {q1.r2(x, y), q2.r2(fx, fy)}};
                for (auto [src, dst] : images)
                    if (f[src] != unset && f[src] != dst)
                        return false;
            }
        return true;
    };

    std::function<void(ElementId)> extend = [&](ElementId k) {
        if (k == n) {
            out.push_back(f);
            return;
        }
        for (ElementId y = 0; y < n; ++y) {
            if (used[y] || p1[k] != p2[y])
                continue;
            f[k] = y;
            used[y] = 1;
            if (consistent(k))
                extend(k + 1);
            used[y] = 0;
            f[k] = unset;
        }
    };
    extend(0);
    return out;
}

ElementId residue_to_index(long long residue, long long modulus)
{
    return static_cast<ElementId>(mod(residue - 1, modulus));
}

long long index_to_residue(ElementId index, long long modulus)
{
    return mod(static_cast<long long>(index) + 1, modulus);
}

std::string linear_name(const LinearSingquandleSpec & s)
{
    return "Z" + std::to_string(s.modulus) + "(a=" + std::to_string(s.a) + ",b=" + std::to_string(s.b)
        + ",c=" + std::to_string(s.c) + ")";
}

SingquandleTables linear_tables(const LinearSingquandleSpec & spec)
{
    long long n = spec.modulus;
    if (n < 1)
        throw NonInvertibleA("modulus must be at least 1");
    long long a = mod(spec.a, n), b = mod(spec.b, n), c = mod(spec.c, n);
    if (std::gcd(a, n) != 1)
        throw NonInvertibleA("a = " + std::to_string(spec.a) + " is not invertible mod " + std::to_string(n));

    SingquandleTables t;
    t.name = linear_name(spec);
    auto size = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < size; ++i)
        t.elements.push_back(std::to_string(index_to_residue(i, n)));
    t.star = OperationTable(size);
    t.r1 = OperationTable(size);
    t.r2 = OperationTable(size);

    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            long long x = index_to_residue(i, n), y = index_to_residue(j, n);
            t.star.at(i, j) = residue_to_index(a * x + (1 - a) * y, n);
            t.r1.at(i, j) = residue_to_index(b * x + c * y, n);
            t.r2.at(i, j) = residue_to_index(a * c * x + (b + c * (1 - a)) * y, n);
        }
    return t;
}

FiniteSingquandle build_linear(const LinearSingquandleSpec & spec)
{
    return FiniteSingquandle::from_tables(linear_tables(spec), AxiomPolicy::report);
}

std::vector<LinearSingquandleSpec> linear_candidates(long long n)
{
    std::vector<LinearSingquandleSpec> out;
    for (long long a = 0; a < n; ++a) {
        if (std::gcd(a, n) != 1)
            continue;
        for (long long b = 0; b < n; ++b)
            for (long long c = 0; c < n; ++c)
                out.push_back({n, a, b, c});
    }
    return out;
}

std::vector<LinearSingquandleSpec> enumerate_linear(long long n, unsigned workers)
{
    auto candidates = linear_candidates(n);
    std::vector<char> ok(candidates.size(), 0);
    detail::parallel_for(candidates.size(), workers, [&](std::size_t i) {
        ok[i] = build_linear(candidates[i]).axiom_report().passed();
    });

    std::vector<LinearSingquandleSpec> out;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (ok[i])
            out.push_back(candidates[i]);
    return out;
}

FiniteSingquandle relabeled(const FiniteSingquandle & q, const ElementMap & perm, std::string name)
{
    std::size_t n = q.size();
    SingquandleTables t;
    t.name = name.empty() ? q.name() : std::move(name);
    t.elements.resize(n);
    t.star = OperationTable(n);
    t.r1 = OperationTable(n);
    t.r2 = OperationTable(n);
    for (ElementId x = 0; x < n; ++x) {
        t.elements[perm[x]] = q.label(x);
        for (ElementId y = 0; y < n; ++y) {
            t.star.at(perm[x], perm[y]) = perm[q.star(x, y)];
            t.r1.at(perm[x], perm[y]) = perm[q.r1(x, y)];
            t.r2.at(perm[x], perm[y]) = perm[q.r2(x, y)];
        }
    }
    return FiniteSingquandle::from_tables(t, AxiomPolicy::report);
}

} // namespace singshadow
