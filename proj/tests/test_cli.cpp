#include "singshadow/cli.hpp"
#include "singshadow/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace singshadow;

namespace {

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string & rel)
{
    return (std::filesystem::path(FIXTURE_DIR) / rel).string();
}

} // namespace

TEST_CASE("verify")
{
    auto ok = call({"verify", "singquandle", fixture("z4_tables.json")});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("valid") != std::string::npos);
    CHECK(ok.out.find("invalid") == std::string::npos);

    auto bad = call({"verify", "singquandle", fixture("broken.json")});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("right-invertibility: FAIL at (1, 3, 2)") != std::string::npos);

    CHECK(call({"verify", "singquandle", fixture("z12_a5b5c10.json")}).code == 1);
    CHECK(call({"verify", "singquandle", fixture("z8_a5b3c4.json")}).code == 0);
    CHECK(call({"verify", "shadow", fixture("shadow_z8_z4.json")}).code == 0);
    CHECK(call({"verify", "shadow", fixture("shadow_z8_z4_poly.json")}).code == 0);
    CHECK(call({"verify", "singquandle", fixture("missing.json")}).code == 2);
}

TEST_CASE("colorings and invariants")
{
    auto c = call({"colorings", fixture("diagrams/1_1l.json"), "--structure", fixture("z4_a3b2c3.json")});
    CHECK(c.code == 0);
    CHECK(c.out == "16\n");
    auto l = call({"colorings", "1_1^l", "--structure", "z4_a3b2c3", "--list"});
    CHECK(l.out.rfind("16\n(x, y, z)\n(1, 1, 1)\n(1, 2, 0)\n", 0) == 0);

    CHECK(call({"invariant", "SP", "4_1^k", "--shadow", "shadow_z8_z6"}).out == "24*u^{t^2} + 24*u^{t} + 48*u^{2}\n");
    CHECK(call({"invariant", "count", "K2", "--shadow", "shadow_z12_z8"}).out == "4\n");
    CHECK(call({"invariant", "shadow-count", "K3", "--shadow", "shadow_z12_z8"}).out == "32\n");
    CHECK(call({"invariant", "sp-struct", "--shadow", "shadow_z8_w"}).out == "2*t^8 + 2\n");
    CHECK(call({"invariant", "SP", "K1"}).code == 2);
    CHECK(call({"invariant", "SP", "nope", "--shadow", "shadow_z8_w"}).code == 2);
}

TEST_CASE("distinguish exit codes")
{
    CHECK(call({"distinguish", "4_1^k", "5_4^k", "--shadow", "shadow_z8_z6"}).code == 1);
    CHECK(call({"distinguish", "3_1^k", "3_1^k_kinked", "--shadow", "shadow_z10_z4"}).code == 0);
}

TEST_CASE("search")
{
    auto s = call({"search", "shadows", "--structure", "z8_a5b3c4", "--size", "4"});
    CHECK(s.code == 0);
    CHECK(s.out.find("(0,1,2,0,1,0)") != std::string::npos);
    auto l = call({"search", "linear", "--modulus", "4"});
    CHECK(l.code == 0);
    CHECK(l.out.find("a=3 b=2 c=3\n") != std::string::npos);
}

TEST_CASE("bad usage")
{
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"colorings", "1_1^l"}).code == 2);
}

TEST_CASE("fixture files match the builtins")
{
    const std::vector<std::pair<std::string, std::string>> diagrams = {{"1_1l.json", "1_1^l"}, {"3_1k.json", "3_1^k"},
        {"4_1k.json", "4_1^k"}, {"5_4k.json", "5_4^k"}, {"K2.json", "K2"}};
    for (const auto & [file, name] : diagrams)
        CHECK(diagram_to_json(load_diagram(fixture("diagrams/" + file))) == diagram_to_json(builtin(name)));
    for (const auto & name : builtin_structure_names())
        CHECK(load_singquandle(fixture(name + ".json")).tables().star.rows() == builtin_structure(name).tables().star.rows());
    for (const auto & name : builtin_shadow_names()) {
        auto a = load_shadow(fixture(name + ".json"));
        auto b = builtin_shadow(name);
        CHECK(a.matrix() == b.matrix());
        CHECK(a.x_elements() == b.x_elements());
    }
    CHECK(load_shadow(fixture("shadow_z10_z4_poly.json")).matrix() == builtin_shadow("shadow_z10_z4").matrix());
}

TEST_CASE("output does not depend on the worker count")
{
    const std::vector<std::vector<std::string>> commands = {
        {"colorings", "5_4^k", "--structure", "z8_a5b3c4", "--list"},
        {"invariant", "ssqp", "4_1^k", "--structure", "z8_a5b3c4"},
        {"invariant", "SP", "K2", "--shadow", "shadow_z12_z8"},
        {"distinguish", "4_1^k", "5_4^k", "--shadow", "shadow_z8_z6"},
        {"search", "shadows", "--structure", "z10_a3b4c6", "--size", "4"},
        {"search", "linear", "--modulus", "9"},
        {"--json", "invariant", "SP", "5_4^k", "--shadow", "shadow_z8_z6"},
    };
    for (const auto & cmd : commands) {
        auto one = cmd, many = cmd;
        one.insert(one.begin(), {"--workers", "1"});
        many.insert(many.begin(), {"--workers", "5"});
        CHECK(call(one).out == call(many).out);
    }
}
