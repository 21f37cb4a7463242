#include "singshadow/polynomial.hpp"

#include "singshadow/errors.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace singshadow {

namespace {

constexpr std::array<std::string_view, variable_count> variable_names = {"s1", "t1", "s2", "t2", "s3", "t3", "t"};

std::string_view trim(std::string_view s)
{
    while (! s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (! s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    return s;
}

template <typename Int>
Int parse_integer(std::string_view s, std::string_view context)
{
    Int value{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw ParseError("invalid integer '" + std::string(s) + "' in polynomial term '" + std::string(context) + "'");
    return value;
}

MultiPoly::Term parse_term(std::string_view text)
{
    std::string_view body = trim(text);
    bool negative = false;
    if (! body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    if (body.empty())
        throw ParseError("empty polynomial term");

    MultiPoly::Coefficient coef = 1;
    Monomial mono;
    bool first = true;
    while (! body.empty()) {
        auto star = body.find('*');
        std::string_view factor = body.substr(0, star);
        body = star == std::string_view::npos ? std::string_view{} : body.substr(star + 1);

        if (first && ! factor.empty() && std::isdigit(static_cast<unsigned char>(factor.front()))) {
            coef = parse_integer<MultiPoly::Coefficient>(factor, text);
            first = false;
            continue;
        }
        first = false;

        auto caret = factor.find('^');
        std::string_view name = factor.substr(0, caret);
        unsigned exp = caret == std::string_view::npos ? 1 : parse_integer<unsigned>(factor.substr(caret + 1), text);
        auto it = std::find(variable_names.begin(), variable_names.end(), name);
        if (it == variable_names.end())
            throw ParseError("unknown variable '" + std::string(name) + "'");
        auto v = static_cast<Variable>(it - variable_names.begin());
        mono.set(v, mono.exponent(v) + exp);
    }
    return {mono, negative ? -coef : coef};
}

} // namespace

std::string_view variable_name(Variable v)
{
    return variable_names[static_cast<std::size_t>(v)];
}

Monomial Monomial::of(Variable v, unsigned exponent)
{
    return Monomial{}.set(v, exponent);
}

Monomial & Monomial::set(Variable v, unsigned exponent)
{
    exponents_[static_cast<std::size_t>(v)] = exponent;
    return *this;
}

unsigned Monomial::total_degree() const
{
    return std::accumulate(exponents_.begin(), exponents_.end(), 0u);
}

Monomial Monomial::operator*(const Monomial & other) const
{
    Monomial result = *this;
    for (std::size_t i = 0; i < variable_count; ++i)
        result.exponents_[i] += other.exponents_[i];
    return result;
}

std::string Monomial::render() const
{
    std::string out;
    for (std::size_t i = 0; i < variable_count; ++i) {
        if (exponents_[i] == 0)
            continue;
        if (! out.empty())
            out += '*';
        out += variable_names[i];
        if (exponents_[i] != 1)
            out += '^' + std::to_string(exponents_[i]);
    }
    return out;
}

bool TermOrder::operator()(const Monomial & a, const Monomial & b) const
{
    auto da = a.total_degree(), db = b.total_degree();
    if (da != db)
        return da > db;
    return a.exponents() > b.exponents();
}

MultiPoly::MultiPoly(std::initializer_list<Term> raw)
{
    for (const auto & [m, c] : raw)
        add_term(m, c);
}

MultiPoly MultiPoly::canonical_form(const std::vector<Term> & raw)
{
    MultiPoly p;
    for (const auto & [m, c] : raw)
        p.add_term(m, c);
    return p;
}

MultiPoly MultiPoly::constant(Coefficient c)
{
    return monomial(Monomial{}, c);
}

MultiPoly MultiPoly::monomial(const Monomial & m, Coefficient c)
{
    MultiPoly p;
    p.add_term(m, c);
    return p;
}

MultiPoly MultiPoly::parse(std::string_view text)
{
    std::string_view rest = trim(text);
    if (rest.empty())
        throw ParseError("empty polynomial");
    if (rest == "0")
        return {};

    std::vector<Term> raw;
    while (true) {
        auto plus = rest.find(" + ");
        raw.push_back(parse_term(rest.substr(0, plus)));
        if (plus == std::string_view::npos)
            break;
        rest = rest.substr(plus + 3);
    }
    return canonical_form(raw);
}

MultiPoly & MultiPoly::add_term(const Monomial & m, Coefficient c)
{
    if (c == 0)
        return *this;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (! inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
    return *this;
}

MultiPoly & MultiPoly::operator+=(const MultiPoly & other)
{
    for (const auto & [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

MultiPoly MultiPoly::scaled(Coefficient factor) const
{
    MultiPoly p;
    for (const auto & [m, c] : terms_)
        p.add_term(m, c * factor);
    return p;
}

MultiPoly::Coefficient MultiPoly::coefficient(const Monomial & m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

std::string MultiPoly::render() const
{
    if (terms_.empty())
        return "0";

    std::string out;
    for (const auto & [m, c] : terms_) {
        if (! out.empty())
            out += " + ";
        std::string factors = m.render();
        if (factors.empty())
            out += std::to_string(c);
        else if (c == 1)
            out += factors;
        else if (c == -1)
            out += "-" + factors;
        else
            out += std::to_string(c) + "*" + factors;
    }
    return out;
}

void InvariantMultiset::add(const MultiPoly & p, std::size_t multiplicity)
{
    if (multiplicity == 0)
        return;
    auto [it, inserted] = entries_.try_emplace(p.render(), Entry{p, multiplicity});
    if (! inserted)
        it->second.multiplicity += multiplicity;
}

std::size_t InvariantMultiset::total() const
{
    std::size_t sum = 0;
    for (const auto & [key, e] : entries_)
        sum += e.multiplicity;
    return sum;
}

std::size_t InvariantMultiset::multiplicity(const MultiPoly & p) const
{
    auto it = entries_.find(p.render());
    return it == entries_.end() ? 0 : it->second.multiplicity;
}

std::vector<InvariantMultiset::Entry> InvariantMultiset::entries() const
{
    std::vector<Entry> out;
    out.reserve(entries_.size());
    for (const auto & [key, e] : entries_)
        out.push_back(e);
    return out;
}

std::string InvariantMultiset::render() const
{
    if (entries_.empty())
        return "0";

    std::string out;
    for (const auto & [key, e] : entries_) {
        if (! out.empty())
            out += " + ";
        out += std::to_string(e.multiplicity) + "*u^{" + key + "}";
    }
    return out;
}

bool operator==(const InvariantMultiset & a, const InvariantMultiset & b)
{
    if (a.entries_.size() != b.entries_.size())
        return false;
    return std::equal(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), [](const auto & x, const auto & y) {
        return x.first == y.first && x.second.multiplicity == y.second.multiplicity;
    });
}

} // namespace singshadow
