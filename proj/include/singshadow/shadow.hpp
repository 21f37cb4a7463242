#pragma once

#include "singshadow/algebra.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace singshadow {

// Shadow axiom identifiers in check order.
inline const std::vector<std::string> & shadow_axiom_ids()
{
    static const std::vector<std::string> ids = {"action-bijective", "action-star", "action-singular"};
    return ids;
}

// action[x][s] is the index in X of x . s; rows follow X order, columns host order.
using ActionMatrix = std::vector<std::vector<ElementId>>;

AxiomReport verify_shadow_axioms(const FiniteSingquandle & host, std::size_t x_size, const ActionMatrix & action);

class ShadowStructure
{
public:
    // Throws NonBijectiveAction always; ShadowAxiomViolation unless policy is report.
    static ShadowStructure make(FiniteSingquandle host, std::vector<std::string> x_elements, const ActionMatrix & action,
        AxiomPolicy policy = AxiomPolicy::enforce, std::string name = {});

    const std::string & name() const { return name_; }
    const FiniteSingquandle & host() const { return host_; }
    std::size_t size() const { return x_elements_.size(); }
    const std::vector<std::string> & x_elements() const { return x_elements_; }
    const std::string & label(ElementId x) const { return x_elements_.at(x); }
    // Throws UnknownName.
    ElementId find(const std::string & label) const;

    ElementId act(ElementId x, ElementId s) const { return action_[x * host_.size() + s]; }
    ElementId act_inverse(ElementId x, ElementId s) const { return inverse_[x * host_.size() + s]; }
    ActionMatrix matrix() const;

    const AxiomReport & axiom_report() const { return report_; }

private:
    std::string name_;
    FiniteSingquandle host_;
    std::vector<std::string> x_elements_;
    std::vector<ElementId> action_;
    std::vector<ElementId> inverse_;
    AxiomReport report_;
};

ShadowStructure build_shadow(const FiniteSingquandle & host, std::vector<std::string> x_elements,
    const ActionMatrix & action, AxiomPolicy policy = AxiomPolicy::enforce);

AxiomReport verify_shadow_axioms(const ShadowStructure & sh);

// x . s = alpha + beta x + gamma s + delta x^2 + epsilon s^2 + zeta x s (mod m).
struct PolynomialActionSpec
{
    long long modulus = 1;
    std::array<long long, 6> coeffs{};

    auto operator<=>(const PolynomialActionSpec &) const = default;
};

std::string render_action_formula(const PolynomialActionSpec & spec);
unsigned action_degree(const PolynomialActionSpec & spec);

// X is labelled 1, 2, ..., m-1, 0; host labels must be integers, used as s.
ActionMatrix polynomial_action_matrix(const FiniteSingquandle & host, const PolynomialActionSpec & spec);
ShadowStructure build_polynomial_action(
    const FiniteSingquandle & host, const PolynomialActionSpec & spec, AxiomPolicy policy = AxiomPolicy::enforce);

// X = S, x . s = x * s.
ShadowStructure canonical_shadow(const FiniteSingquandle & host);

ElementSet forward_closure(const ShadowStructure & sh, const ElementSet & xs, const ElementSet & ss);

struct Subshadow
{
    ElementSet s_subset;
    ElementSet x_subset;

    friend bool operator==(const Subshadow &, const Subshadow &) = default;
};

// Fixed-point counts r(x) restricted to the given host elements.
std::vector<std::size_t> fixed_counts(const ShadowStructure & sh, const ElementSet & ss);

MultiPoly sp(const ShadowStructure & sh);
// Throws InvalidSubshadow.
MultiPoly subsp(const ShadowStructure & sh, const Subshadow & sub);

struct ShadowIsomorphism
{
    ElementMap host_map;
    ElementMap set_map;

    friend bool operator==(const ShadowIsomorphism &, const ShadowIsomorphism &) = default;
};

std::vector<ShadowIsomorphism> shadow_isomorphisms(const ShadowStructure & sh1, const ShadowStructure & sh2);

// Coefficient tuples of degree <= max_degree (at most 2) giving valid shadows, lexicographic.
std::vector<PolynomialActionSpec> search_polynomial_shadows(
    const FiniteSingquandle & host, long long m, unsigned max_degree = 2, unsigned workers = 1);

// Applies perm to the X elements (perm[x] is the new index of x).
ShadowStructure relabeled_shadow(const ShadowStructure & sh, const ElementMap & perm);

} // namespace singshadow
