#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace singshadow {

// The closed variable set, in canonical order.
enum class Variable : std::uint8_t { s1, t1, s2, t2, s3, t3, t };

inline constexpr std::size_t variable_count = 7;

std::string_view variable_name(Variable v);

class Monomial
{
public:
    using Exponents = std::array<unsigned, variable_count>;

    Monomial() = default;
    explicit Monomial(const Exponents & exponents) : exponents_(exponents) {}

    static Monomial of(Variable v, unsigned exponent = 1);

    unsigned exponent(Variable v) const { return exponents_[static_cast<std::size_t>(v)]; }
    Monomial & set(Variable v, unsigned exponent);
    const Exponents & exponents() const { return exponents_; }

    unsigned total_degree() const;
    bool is_constant() const { return total_degree() == 0; }

    Monomial operator*(const Monomial & other) const;

    // "s1^2*t1" style; empty for the constant monomial.
    std::string render() const;

    friend bool operator==(const Monomial &, const Monomial &) = default;

private:
    Exponents exponents_{};
};

// Canonical term order: total degree descending, then exponent vector
// lexicographically descending under s1 < t1 < s2 < t2 < s3 < t3 < t.
struct TermOrder
{
    bool operator()(const Monomial & a, const Monomial & b) const;
};

class MultiPoly
{
public:
    using Coefficient = long long;
    using Term = std::pair<Monomial, Coefficient>;
    using TermMap = std::map<Monomial, Coefficient, TermOrder>;

    MultiPoly() = default;
    MultiPoly(std::initializer_list<Term> raw);

    // Merges like terms and drops zero coefficients.
    static MultiPoly canonical_form(const std::vector<Term> & raw);
    static MultiPoly constant(Coefficient c);
    static MultiPoly monomial(const Monomial & m, Coefficient c = 1);

    // Inverse of render() on the emitted grammar. Throws ParseError.
    static MultiPoly parse(std::string_view text);

    MultiPoly & add_term(const Monomial & m, Coefficient c);
    MultiPoly & operator+=(const MultiPoly & other);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly & b) { return a += b; }

    MultiPoly scaled(Coefficient factor) const;

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Coefficient coefficient(const Monomial & m) const;
    const TermMap & terms() const { return terms_; }

    // Deterministic text form, e.g. "2*t^8 + 2"; "0" for the zero polynomial.
    std::string render() const;

    friend bool operator==(const MultiPoly & a, const MultiPoly & b) { return a.terms_ == b.terms_; }

private:
    TermMap terms_;
};

// Multiset of polynomials, presented as a formal sum of u^{P} with multiplicities.
class InvariantMultiset
{
public:
    struct Entry
    {
        MultiPoly exponent;
        std::size_t multiplicity;
    };

    void add(const MultiPoly & p, std::size_t multiplicity = 1);

    std::size_t total() const;
    std::size_t distinct() const { return entries_.size(); }
    std::size_t multiplicity(const MultiPoly & p) const;

    // Entries in render order.
    std::vector<Entry> entries() const;

    // "24*u^{t^2} + 24*u^{t} + 48*u^{2}"; terms sorted by the rendered exponent,
    // lexicographically descending. "0" when empty.
    std::string render() const;

    friend bool operator==(const InvariantMultiset & a, const InvariantMultiset & b);

private:
    struct Descending
    {
        bool operator()(const std::string & a, const std::string & b) const { return a > b; }
    };

    std::map<std::string, Entry, Descending> entries_;
};

} // namespace singshadow
