#pragma once

#include "singshadow/algebra.hpp"
#include "singshadow/diagram.hpp"
#include "singshadow/invariants.hpp"
#include "singshadow/shadow.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace singshadow {

// Table files are enforced unless told otherwise; linear files always use the
// report policy (see build_linear).
struct SingquandleSource
{
    SingquandleTables tables;
    bool linear = false;
};

// Throws ParseError, UnknownName (bad label), NonInvertibleA.
SingquandleSource parse_singquandle_source(std::string_view json_text);
FiniteSingquandle parse_singquandle(std::string_view json_text, AxiomPolicy table_policy = AxiomPolicy::enforce);
std::string singquandle_to_json(const FiniteSingquandle & q);

// Unvalidated shadow: host plus labels and matrix in index form.
struct ShadowSource
{
    FiniteSingquandle host;
    std::vector<std::string> x_elements;
    ActionMatrix action;
    std::string name;
};

// `base_dir` resolves a host given as a relative path.
ShadowSource parse_shadow_source(std::string_view json_text, const std::filesystem::path & base_dir = {});
ShadowStructure parse_shadow(std::string_view json_text, const std::filesystem::path & base_dir = {});
ShadowStructure build_from_source(const ShadowSource & src, AxiomPolicy policy = AxiomPolicy::enforce);
std::string shadow_to_json(const ShadowStructure & sh);

// Worked-example structures and shadows. Throw UnknownName.
const std::vector<std::string> & builtin_structure_names();
FiniteSingquandle builtin_structure(const std::string & name);
std::string_view builtin_structure_source(const std::string & name);
const std::vector<std::string> & builtin_shadow_names();
ShadowStructure builtin_shadow(const std::string & name);
std::string_view builtin_shadow_source(const std::string & name);

std::string read_text_file(const std::filesystem::path & path);

// A path to an existing file, otherwise a builtin name.
SingquandleSource load_singquandle_source(const std::string & arg);
FiniteSingquandle load_singquandle(const std::string & arg, AxiomPolicy table_policy = AxiomPolicy::enforce);
ShadowSource load_shadow_source(const std::string & arg);
ShadowStructure load_shadow(const std::string & arg);
SingularDiagram load_diagram(const std::string & arg);

// Witness tuples with element labels, e.g. "(1, 3, 0)".
std::string describe_witness(const AxiomCheck & check, const FiniteSingquandle & q);
std::string describe_shadow_witness(const AxiomCheck & check, const FiniteSingquandle & host, const std::vector<std::string> & x_elements);

} // namespace singshadow
