#pragma once

#include "singshadow/errors.hpp"
#include "singshadow/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace singshadow {

using ElementSet = std::set<ElementId>;

// Square table over element indices, row-major: at(x, y) is x op y.
class OperationTable
{
public:
    OperationTable() = default;
    explicit OperationTable(std::size_t n, ElementId fill = 0) : n_(n), cells_(n * n, fill) {}

    static OperationTable from_rows(const std::vector<std::vector<ElementId>> & rows);

    std::size_t size() const { return n_; }
    ElementId operator()(ElementId x, ElementId y) const { return cells_[x * n_ + y]; }
    ElementId & at(ElementId x, ElementId y) { return cells_[x * n_ + y]; }

    std::vector<std::vector<ElementId>> rows() const;

    friend bool operator==(const OperationTable &, const OperationTable &) = default;

private:
    std::size_t n_ = 0;
    std::vector<ElementId> cells_;
};

// Raw, unvalidated input to FiniteSingquandle::from_tables.
struct SingquandleTables
{
    std::string name;
    std::vector<std::string> elements;
    OperationTable star;
    OperationTable r1;
    OperationTable r2;
    std::optional<OperationTable> bar_star;
};

enum class CheckStatus { passed, failed, skipped };

struct AxiomCheck
{
    std::string axiom;
    CheckStatus status = CheckStatus::passed;
    std::vector<ElementId> witness;
};

struct AxiomReport
{
    std::vector<AxiomCheck> checks;

    bool passed() const;
    const AxiomCheck * first_failure() const;
    const AxiomCheck * find(const std::string & axiom) const;
};

// Axiom identifiers in check order. The first four make (X, *) a quandle.
inline const std::vector<std::string> & axiom_ids()
{
    static const std::vector<std::string> ids = {
        "idempotency", "right-invertibility", "bar-inverse", "self-distributivity", "eq1", "eq2", "eq3", "eq4", "eq5"};
    return ids;
}

bool is_quandle_axiom(const std::string & axiom);

// Runs every check on raw tables. Checks needing bar_star are skipped when
// some column of star is not a bijection.
AxiomReport verify_axioms(const SingquandleTables & tables);

// enforce: any failed check throws. report: only the quandle axioms throw and
// failures of eq1..eq5 are kept in axiom_report().
enum class AxiomPolicy { enforce, report };

class FiniteSingquandle
{
public:
    static FiniteSingquandle from_tables(const SingquandleTables & tables, AxiomPolicy policy = AxiomPolicy::enforce);

    const std::string & name() const { return name_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<std::string> & elements() const { return elements_; }
    const std::string & label(ElementId x) const { return elements_.at(x); }
    // Throws UnknownName.
    ElementId find(const std::string & label) const;

    ElementId star(ElementId x, ElementId y) const { return star_(x, y); }
    ElementId bar_star(ElementId x, ElementId y) const { return bar_star_(x, y); }
    ElementId r1(ElementId x, ElementId y) const { return r1_(x, y); }
    ElementId r2(ElementId x, ElementId y) const { return r2_(x, y); }

    const OperationTable & star_table() const { return star_; }
    const OperationTable & bar_star_table() const { return bar_star_; }
    const OperationTable & r1_table() const { return r1_; }
    const OperationTable & r2_table() const { return r2_; }

    const AxiomReport & axiom_report() const { return report_; }
    SingquandleTables tables() const;

private:
    std::string name_;
    std::vector<std::string> elements_;
    OperationTable star_, bar_star_, r1_, r2_;
    AxiomReport report_;
};

AxiomReport verify_axioms(const FiniteSingquandle & q);

ElementSet closure(const FiniteSingquandle & q, const ElementSet & seed);
bool is_closed(const FiniteSingquandle & q, const ElementSet & subset);

struct ElementProfile
{
    std::size_t r1c = 0, c1c = 0, r2c = 0, c2c = 0, r3c = 0, c3c = 0;

    auto operator<=>(const ElementProfile &) const = default;
};

std::vector<ElementProfile> profiles(const FiniteSingquandle & q);

MultiPoly sqp(const FiniteSingquandle & q);
// Counts stay ambient. Throws NotClosed.
MultiPoly ssqp(const FiniteSingquandle & q, const ElementSet & subset);

// Bijection as image vector: map[x] is the image of x.
using ElementMap = std::vector<ElementId>;

// All isomorphisms q1 -> q2 in lexicographic order of their image vectors.
std::vector<ElementMap> isomorphisms(const FiniteSingquandle & q1, const FiniteSingquandle & q2);

struct LinearSingquandleSpec
{
    long long modulus = 1;
    long long a = 0, b = 0, c = 0;

    auto operator<=>(const LinearSingquandleSpec &) const = default;
};

// Element order is the residues 1, 2, ..., n-1, 0. Throws NonInvertibleA.
SingquandleTables linear_tables(const LinearSingquandleSpec & spec);
FiniteSingquandle build_linear(const LinearSingquandleSpec & spec);
std::string linear_name(const LinearSingquandleSpec & spec);

ElementId residue_to_index(long long residue, long long modulus);
long long index_to_residue(ElementId index, long long modulus);

// Specs with gcd(a, n) = 1 passing every axiom, in (a, b, c) order.
std::vector<LinearSingquandleSpec> enumerate_linear(long long n, unsigned workers = 1);

// Every spec with gcd(a, n) = 1, regardless of axioms.
std::vector<LinearSingquandleSpec> linear_candidates(long long n);

FiniteSingquandle relabeled(const FiniteSingquandle & q, const ElementMap & perm, std::string name = {});

} // namespace singshadow
