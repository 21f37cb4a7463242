#include "singshadow/errors.hpp"

#include <utility>

namespace singshadow {

namespace {

std::string with_witness(const std::string & head, const std::vector<ElementId> & witness, const std::string & detail)
{
    std::string out = head + " (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i)
            out += ", ";
        out += std::to_string(witness[i]);
    }
    out += ")";
    if (! detail.empty())
        out += ": " + detail;
    return out;
}

} // namespace

AxiomViolation::AxiomViolation(std::string axiom, std::vector<ElementId> witness, const std::string & detail)
    : Error(with_witness("axiom " + axiom + " fails at", witness, detail))
    , axiom_(std::move(axiom))
    , witness_(std::move(witness))
{
}

NotClosed::NotClosed(std::vector<ElementId> witness, const std::string & detail)
    : Error(with_witness("subset not closed, witness", witness, detail))
    , witness_(std::move(witness))
{
}

DanglingArc::DanglingArc(std::string label, const std::string & detail)
    : Error("arc '" + label + "': " + detail)
    , label_(std::move(label))
{
}

} // namespace singshadow
