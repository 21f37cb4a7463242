#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace singshadow {

using ElementId = std::size_t;

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// An algebraic identity failed. `axiom` is a stable identifier such as
// "idempotency" or "eq3", `witness` the smallest failing argument tuple.
class AxiomViolation : public Error
{
public:
    AxiomViolation(std::string axiom, std::vector<ElementId> witness, const std::string & detail);

    const std::string & axiom() const noexcept { return axiom_; }
    const std::vector<ElementId> & witness() const noexcept { return witness_; }

private:
    std::string axiom_;
    std::vector<ElementId> witness_;
};

// Some right translation x -> x * y is not a bijection, so bar_star cannot be derived.
class NonBijectiveColumn : public AxiomViolation
{
public:
    using AxiomViolation::AxiomViolation;
};

class NonInvertibleA : public Error
{
public:
    using Error::Error;
};

class NotClosed : public Error
{
public:
    NotClosed(std::vector<ElementId> witness, const std::string & detail);
    const std::vector<ElementId> & witness() const noexcept { return witness_; }

private:
    std::vector<ElementId> witness_;
};

class ShadowAxiomViolation : public AxiomViolation
{
public:
    using AxiomViolation::AxiomViolation;
};

class NonBijectiveAction : public ShadowAxiomViolation
{
public:
    using ShadowAxiomViolation::ShadowAxiomViolation;
};

class InvalidSubshadow : public Error
{
public:
    using Error::Error;
};

class MalformedVertex : public Error
{
public:
    using Error::Error;
};

class DanglingArc : public Error
{
public:
    DanglingArc(std::string label, const std::string & detail);
    const std::string & label() const noexcept { return label_; }

private:
    std::string label_;
};

class Disconnected : public Error
{
public:
    using Error::Error;
};

class NonPlanar : public Error
{
public:
    using Error::Error;
};

class InconsistentRegionColoring : public Error
{
public:
    using Error::Error;
};

class UnknownName : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    using Error::Error;
};

} // namespace singshadow
