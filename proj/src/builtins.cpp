#include "singshadow/diagram.hpp"

#include <map>

namespace singshadow {

namespace {

// Trefoil semi-arcs e0..e5 follow the Gauss code O1 U2 O3 U1 O2 U3. The
// singular versions replace crossings 1, 1-2, 1-2-3 by rigid vertices with
// left_in = under_in, right_in = over_in, left_out = over_out, right_out = under_out.

constexpr const char * one_one_l = R"({
  "name": "1_1^l",
  "arcs": ["x", "y", "z"],
  "vertices": [
    {"kind": "singular", "left_in": "x", "right_in": "y", "left_out": "z", "right_out": "x"},
    {"kind": "positive", "under_in": "z", "over": "x", "under_out": "y"}
  ]
})";

constexpr const char * trefoil_one = R"({
  "name": "%NAME%",
  "arcs": ["s1", "s2", "s3", "s4"],
  "vertices": [
    {"kind": "singular", "left_in": "s2", "right_in": "s4", "left_out": "s1", "right_out": "s3"},
    {"kind": "positive", "under_in": "s1", "over": "s3", "under_out": "s2"},
    {"kind": "positive", "under_in": "s3", "over": "s2", "under_out": "s4"}
  ]
})";

constexpr const char * four_one_k = R"({
  "name": "4_1^k",
  "arcs": ["s1", "s2", "s3", "s4", "s5", "s6"],
  "vertices": [
    {"kind": "negative", "under_in": "s6", "over": "s2", "under_out": "s1"},
    {"kind": "negative", "under_in": "s5", "over": "s6", "under_out": "s2"},
    {"kind": "singular", "left_in": "s1", "right_in": "s2", "left_out": "s3", "right_out": "s4"},
    {"kind": "negative", "under_in": "s4", "over": "s3", "under_out": "s5"},
    {"kind": "negative", "under_in": "s3", "over": "s5", "under_out": "s6"}
  ]
})";

constexpr const char * five_four_k = R"({
  "name": "5_4^k",
  "arcs": ["s1", "s2", "s3", "s4", "s5", "s6", "s7"],
  "vertices": [
    {"kind": "negative", "under_in": "s7", "over": "s5", "under_out": "s1"},
    {"kind": "positive", "under_in": "s4", "over": "s6", "under_out": "s2"},
    {"kind": "singular", "left_in": "s1", "right_in": "s2", "left_out": "s3", "right_out": "s4"},
    {"kind": "negative", "under_in": "s3", "over": "s7", "under_out": "s5"},
    {"kind": "positive", "under_in": "s5", "over": "s2", "under_out": "s6"},
    {"kind": "negative", "under_in": "s6", "over": "s3", "under_out": "s7"}
  ]
})";

constexpr const char * k_two = R"({
  "name": "K2",
  "arcs": ["s1", "s2", "s3", "s4", "s5"],
  "vertices": [
    {"kind": "singular", "left_in": "s2", "right_in": "s5", "left_out": "s1", "right_out": "s3"},
    {"kind": "singular", "left_in": "s1", "right_in": "s3", "left_out": "s4", "right_out": "s2"},
    {"kind": "positive", "under_in": "s4", "over": "s2", "under_out": "s5"}
  ]
})";

constexpr const char * k_three = R"({
  "name": "K3",
  "arcs": ["s1", "s2", "s3", "s4", "s5", "s6"],
  "vertices": [
    {"kind": "singular", "left_in": "s3", "right_in": "s6", "left_out": "s1", "right_out": "s4"},
    {"kind": "singular", "left_in": "s1", "right_in": "s4", "left_out": "s5", "right_out": "s2"},
    {"kind": "singular", "left_in": "s5", "right_in": "s2", "left_out": "s3", "right_out": "s6"}
  ]
})";

// 3_1^k with a positive curl on s1: s1 passes over itself and leaves as s1b.
constexpr const char * trefoil_one_kinked = R"({
  "name": "3_1^k_kinked",
  "arcs": ["s1", "s2", "s3", "s4", "s1b"],
  "vertices": [
    {"kind": "singular", "left_in": "s2", "right_in": "s4", "left_out": "s1", "right_out": "s3"},
    {"kind": "positive", "under_in": "s1b", "over": "s3", "under_out": "s2"},
    {"kind": "positive", "under_in": "s3", "over": "s2", "under_out": "s4"},
    {"kind": "positive", "over_in": "s1", "over_out": "k", "under_in": "k", "under_out": "s1b"}
  ]
})";

const std::map<std::string, std::string> & sources()
{
    static const std::map<std::string, std::string> table = [] {
        auto named = [](std::string text, const std::string & name) {
            text.replace(text.find("%NAME%"), 6, name);
            return text;
        };
        return std::map<std::string, std::string>{
            {"1_1^l", one_one_l},
            {"3_1^k", named(trefoil_one, "3_1^k")},
            {"4_1^k", four_one_k},
            {"5_4^k", five_four_k},
            {"K1", named(trefoil_one, "K1")},
            {"K2", k_two},
            {"K3", k_three},
            {"3_1^k_kinked", trefoil_one_kinked},
        };
    }();
    return table;
}

} // namespace

const std::vector<std::string> & builtin_names()
{
    static const std::vector<std::string> names = {"1_1^l", "3_1^k", "4_1^k", "5_4^k", "K1", "K2", "K3", "3_1^k_kinked"};
    return names;
}

std::string_view builtin_source(const std::string & name)
{
    auto it = sources().find(name);
    if (it == sources().end())
        throw UnknownName("no builtin diagram '" + name + "'");
    return it->second;
}

SingularDiagram builtin(const std::string & name)
{
    return parse_diagram(builtin_source(name));
}

} // namespace singshadow
